//! Transfer-matrix core: the Motzkin Hamiltonian, secular determinants,
//! and the meander generating functions.

pub mod checks;
pub mod secular;
pub mod two_step;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{Coef, Poly};
use crate::series::Series;
use crate::vars::{Mono, Var};

pub use secular::{
    bosonic_partition, secular_closed, secular_det, secular_dual, secular_dual_reduced,
    secular_recursive, secular_special, BosonTower, SpecialCase,
};
pub use two_step::{embedding_check, two_step};

/// Height ceiling of a query. An infinite ceiling is resolved to the
/// effective one `max(m, n) + len`: a path of that length cannot climb
/// higher, so every longer ceiling produces the same series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ceiling {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeanderQuery {
    pub ceiling: Ceiling,
    pub m: usize,
    pub n: usize,
    pub len: usize,
}

impl MeanderQuery {
    pub fn new(ceiling: Ceiling, m: usize, n: usize, len: usize) -> Result<Self> {
        if let Ceiling::Finite(k) = ceiling {
            if m > k || n > k {
                return Err(Error::InvalidQuery(format!(
                    "heights m={m}, n={n} must lie within ceiling k={k}"
                )));
            }
        }
        Ok(MeanderQuery { ceiling, m, n, len })
    }

    pub fn finite(k: usize, m: usize, n: usize, len: usize) -> Result<Self> {
        Self::new(Ceiling::Finite(k), m, n, len)
    }

    pub fn k_eff(&self) -> usize {
        match self.ceiling {
            Ceiling::Finite(k) => k,
            Ceiling::Infinite => self.m.max(self.n) + self.len,
        }
    }
}

/// A generating function in closed rational form plus its truncation.
///
/// The value is `z^prefactor_z qh^prefactor_qh * numerator / denominator`;
/// the series is the same object expanded through the truncation order,
/// and its coefficients are path counts (nonnegative integers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFResult {
    pub k_eff: usize,
    pub prefactor_z: u32,
    pub prefactor_qh: u32,
    pub numerator: Poly,
    pub denominator: Poly,
    pub series: Series,
}

impl GFResult {
    pub fn prefactor_mono(&self) -> Mono {
        Mono::var_pow(Var::Z, self.prefactor_z as i32)
            .with_exp(Var::Qh, self.prefactor_qh as i32)
    }

    /// `prefactor * numerator`, the full numerator polynomial.
    pub fn scaled_numerator(&self) -> Poly {
        self.numerator
            .mul_monomial(&self.prefactor_mono(), &Coef::from_integer(1.into()))
    }
}

/// The one-step transition matrix for paths under ceiling `k`: a
/// symmetric tridiagonal matrix with `zh qh^(2j)` on the diagonal and
/// `z qh^(2j+1)` between heights `j` and `j+1`.
pub fn hamiltonian(k: usize) -> PolyMatrix {
    PolyMatrix::from_fn(k + 1, |i, j| {
        if i == j {
            Poly::monomial(
                Mono::var(Var::Zh).with_exp(Var::Qh, 2 * i as i32),
                Coef::from_integer(1.into()),
            )
        } else if i + 1 == j || j + 1 == i {
            let lower = i.min(j) as i32;
            Poly::monomial(
                Mono::var(Var::Z).with_exp(Var::Qh, 2 * lower + 1),
                Coef::from_integer(1.into()),
            )
        } else {
            Poly::zero()
        }
    })
}

/// Cofactor pieces of the propagator matrix element, valid for every
/// `m, n` and ceiling (including the negative-index conventions): the
/// prefactor exponents, the numerator product, and the denominator.
pub fn gf_parts(k: i64, m: i64, n: i64) -> (u32, u32, Poly, Poly) {
    let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
    let zpow = (hi - lo) as u32;
    let qhpow = (hi * hi - lo * lo) as u32;
    let num = &secular_recursive(lo - 1) * &secular_recursive(k - hi - 1).scale_shift(hi as i32 + 1);
    let den = secular_recursive(k);
    (zpow, qhpow, num, den)
}

/// Closed-form meander generating function with its truncated series.
pub fn gf_meander(query: &MeanderQuery) -> GFResult {
    let k = query.k_eff();
    let (prefactor_z, prefactor_qh, numerator, denominator) =
        gf_parts(k as i64, query.m as i64, query.n as i64);
    let inv = Series::invert_poly(&denominator, query.len)
        .expect("secular determinant has unit constant term");
    let series = inv
        .mul_poly(&numerator)
        .mul_monomial(
            &Mono::var_pow(Var::Z, prefactor_z as i32).with_exp(Var::Qh, prefactor_qh as i32),
            &Coef::from_integer(1.into()),
        );
    GFResult {
        k_eff: k,
        prefactor_z,
        prefactor_qh,
        numerator,
        denominator,
        series,
    }
}

/// Propagator route: sum the matrix elements of the transition-matrix
/// powers directly.
pub fn gf_series_oracle(query: &MeanderQuery) -> Series {
    let k = query.k_eff();
    let h = hamiltonian(k);
    let mut row = vec![Poly::zero(); k + 1];
    row[query.m] = Poly::one();
    let mut out = Series::zero(query.len);
    out.set_coeff(0, row[query.n].clone());
    for l in 1..=query.len {
        row = h.row_vec_mul(&row);
        out.set_coeff(l, row[query.n].clone());
    }
    out
}

/// Excursion generating function `z G_k` built by iterating the
/// first-passage relation as a truncated continued fraction with `depth`
/// levels, clearing denominators at every level so only ordinary
/// polynomials appear. Terminates with the empty generating function, so
/// `depth = k + 1` reproduces the ceiling-`k` excursions exactly.
pub fn continued_fraction(k: usize, depth: usize, len: usize) -> Result<GFResult> {
    if depth != k + 1 {
        return Err(Error::InvalidQuery(format!(
            "continued fraction for ceiling {k} terminates at depth {}, got {depth}",
            k + 1
        )));
    }
    let one_minus_zh = Poly::one() - Poly::var(Var::Zh);
    let zzq = Poly::var(Var::Z).pow(2) * Poly::var_pow(Var::Qh, 2);
    let mut num = Poly::zero();
    let mut den = Poly::one();
    for _ in 0..depth {
        let shifted_den = den.scale_shift(1);
        let shifted_num = num.scale_shift(1);
        num = shifted_den.clone();
        den = &(&one_minus_zh * &shifted_den) - &(&zzq * &shifted_num);
    }
    let inv = Series::invert_poly(&den, len)?;
    let series = inv.mul_poly(&num).mul_monomial(
        &Mono::var(Var::Z),
        &Coef::from_integer(1.into()),
    );
    Ok(GFResult {
        k_eff: k,
        prefactor_z: 1,
        prefactor_qh: 0,
        numerator: num,
        denominator: den,
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration;
    use crate::poly::coef_int;

    #[test]
    fn hamiltonian_k0_is_single_level() {
        let h = hamiltonian(0);
        assert_eq!(h.dim(), 1);
        assert_eq!(h[(0, 0)], Poly::var(Var::Zh));
    }

    #[test]
    fn hamiltonian_k1_entries() {
        let h = hamiltonian(1);
        let z = Poly::var(Var::Z);
        let zh = Poly::var(Var::Zh);
        let qh = Poly::var(Var::Qh);
        assert_eq!(h[(0, 0)], zh);
        assert_eq!(h[(0, 1)], &z * &qh);
        assert_eq!(h[(1, 0)], &z * &qh);
        assert_eq!(h[(1, 1)], &zh * &qh.pow(2));
        assert!(h.is_symmetric());
    }

    #[test]
    fn hamiltonian_row_action_weights() {
        // Row j carries z qh^(2j+1), zh qh^(2j), z qh^(2j-1).
        let h = hamiltonian(4);
        for j in 1..4usize {
            assert_eq!(
                h[(j, j + 1)],
                Poly::monomial(
                    Mono::var(Var::Z).with_exp(Var::Qh, 2 * j as i32 + 1),
                    coef_int(1)
                )
            );
            assert_eq!(
                h[(j, j)],
                Poly::monomial(
                    Mono::var(Var::Zh).with_exp(Var::Qh, 2 * j as i32),
                    coef_int(1)
                )
            );
            assert_eq!(
                h[(j, j - 1)],
                Poly::monomial(
                    Mono::var(Var::Z).with_exp(Var::Qh, 2 * j as i32 - 1),
                    coef_int(1)
                )
            );
        }
    }

    #[test]
    fn floor_excursion_is_geometric_for_k0() {
        let q = MeanderQuery::finite(0, 0, 0, 3).unwrap();
        let g = gf_meander(&q);
        assert!(g.numerator.is_one());
        assert_eq!(g.denominator, Poly::one() - Poly::var(Var::Zh));
        for d in 0..=3 {
            assert_eq!(g.series.coeff(d), &Poly::var(Var::Zh).pow(d as u32));
        }
    }

    #[test]
    fn excursion_and_ceiling_hanging_shapes() {
        // G_k = F_{k-1}(shifted) / F_k and the ceiling-hanging mirror
        // uses the unshifted F_{k-1}.
        for k in 1..=3usize {
            let floor = gf_meander(&MeanderQuery::finite(k, 0, 0, 2).unwrap());
            assert_eq!(floor.numerator, secular_recursive(k as i64 - 1).scale_shift(1));
            assert_eq!(floor.denominator, secular_recursive(k as i64));
            let ceil = gf_meander(&MeanderQuery::finite(k, k, k, 2).unwrap());
            assert_eq!(ceil.numerator, secular_recursive(k as i64 - 1));
            assert_eq!(ceil.denominator, secular_recursive(k as i64));
        }
    }

    #[test]
    fn three_routes_agree_smoke() {
        for k in 0..=2usize {
            for m in 0..=k {
                for n in 0..=k {
                    let q = MeanderQuery::finite(k, m, n, 6).unwrap();
                    let a = gf_meander(&q).series;
                    let b = gf_series_oracle(&q);
                    let c = enumeration::enumerate(k, m, n, 6);
                    assert_eq!(a, b, "k={k} m={m} n={n}");
                    assert_eq!(b, c, "k={k} m={m} n={n}");
                    assert!(a.has_nonneg_integer_coeffs());
                }
            }
        }
    }

    #[test]
    fn infinite_ceiling_stabilizes() {
        let inf = gf_meander(&MeanderQuery::new(Ceiling::Infinite, 1, 2, 6).unwrap());
        assert_eq!(inf.k_eff, 8);
        let larger = gf_meander(&MeanderQuery::finite(12, 1, 2, 6).unwrap());
        assert_eq!(inf.series, larger.series);
    }

    #[test]
    fn continued_fraction_k0() {
        let cf = continued_fraction(0, 1, 4).unwrap();
        assert!(cf.numerator.is_one());
        assert_eq!(cf.denominator, Poly::one() - Poly::var(Var::Zh));
        // Series is z/(1-zh): grade d holds z zh^(d-1).
        assert!(cf.series.coeff(0).is_zero());
        for d in 1..=4usize {
            assert_eq!(
                cf.series.coeff(d),
                &(Poly::var(Var::Z) * Poly::var(Var::Zh).pow(d as u32 - 1))
            );
        }
    }

    #[test]
    fn continued_fraction_matches_excursions() {
        for k in 0..=3usize {
            let cf = continued_fraction(k, k + 1, 4).unwrap();
            let g = gf_meander(&MeanderQuery::finite(k, 0, 0, 4).unwrap());
            // Both sides carry one explicit factor of z, so the rational
            // functions agree iff the cross products do.
            let lhs = &cf.numerator * &g.denominator;
            let rhs = &g.scaled_numerator() * &cf.denominator;
            assert_eq!(lhs, rhs, "k={k}");
            assert_eq!(cf.series, g.series.mul_monomial(&Mono::var(Var::Z), &coef_int(1)));
        }
    }

    #[test]
    fn wrong_depth_rejected() {
        assert!(matches!(
            continued_fraction(2, 2, 4),
            Err(Error::InvalidQuery(_))
        ));
    }
}
