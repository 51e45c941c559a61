//! Boundary-decorated walks: touch-down, creep-down, touch-up and
//! creep-up markers, the marked secular determinant, and the marked
//! generating functions.
//!
//! The marked transition matrix scales four entries of the unmarked one:
//! the floor diagonal by the creep-down weight, the down-step into the
//! floor by the touch-down weight, the up-step into the ceiling by the
//! touch-up weight, and the ceiling diagonal by the creep-up weight. The
//! matrix is no longer symmetric; symmetry of the generating function is
//! restored by giving paths that start on a boundary the matching
//! touch weight, and that convention is baked into `marked_gf`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::motzkin::{gf_parts, hamiltonian, secular_recursive, GFResult, MeanderQuery};
use crate::poly::{coef_int, Coef, Poly};
use crate::report::CheckReport;
use crate::series::Series;
use crate::vars::{Mono, Var};

/// The four marker weights. Each is a polynomial so the same code path
/// serves the fully symbolic process and exact-rational specializations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerWeights {
    pub td: Poly,
    pub cd: Poly,
    pub tu: Poly,
    pub cu: Poly,
}

impl MarkerWeights {
    pub fn symbolic() -> Self {
        MarkerWeights {
            td: Poly::var(Var::Td),
            cd: Poly::var(Var::Cd),
            tu: Poly::var(Var::Tu),
            cu: Poly::var(Var::Cu),
        }
    }

    pub fn ones() -> Self {
        MarkerWeights {
            td: Poly::one(),
            cd: Poly::one(),
            tu: Poly::one(),
            cu: Poly::one(),
        }
    }

    pub fn from_rationals(td: Coef, cd: Coef, tu: Coef, cu: Coef) -> Self {
        MarkerWeights {
            td: Poly::constant(td),
            cd: Poly::constant(cd),
            tu: Poly::constant(tu),
            cu: Poly::constant(cu),
        }
    }

    /// Keep the floor markers, drop the ceiling ones.
    pub fn floor_only(&self) -> Self {
        MarkerWeights {
            td: self.td.clone(),
            cd: self.cd.clone(),
            tu: Poly::one(),
            cu: Poly::one(),
        }
    }

    /// Keep the ceiling markers, drop the floor ones.
    pub fn ceiling_only(&self) -> Self {
        MarkerWeights {
            td: Poly::one(),
            cd: Poly::one(),
            tu: self.tu.clone(),
            cu: self.cu.clone(),
        }
    }

    /// Exchange floor and ceiling roles (vertical reflection).
    pub fn reflected(&self) -> Self {
        MarkerWeights {
            td: self.tu.clone(),
            cd: self.cu.clone(),
            tu: self.td.clone(),
            cu: self.cd.clone(),
        }
    }
}

/// `A_r(t, s) = 1 - t + (t - s) zh q^r`, the combination through which a
/// floor (or, with `r = k`, ceiling) marker pair enters every formula.
pub fn marker_combination(t: &Poly, s: &Poly, r: usize) -> Poly {
    let zh_qr = Poly::monomial(
        Mono::var(Var::Zh).with_exp(Var::Qh, 2 * r as i32),
        coef_int(1),
    );
    &(Poly::one() - t.clone()) + &(&(t - s) * &zh_qr)
}

/// The marked transition matrix. Needs `k >= 1`; on a one-level strip the
/// floor and ceiling coincide and the markers lose their meaning.
pub fn marked_hamiltonian(k: usize, w: &MarkerWeights) -> Result<PolyMatrix> {
    if k == 0 {
        return Err(Error::CeilingTooLow(k));
    }
    let mut h = hamiltonian(k);
    h[(0, 0)] = &h[(0, 0)] * &w.cd;
    h[(1, 0)] = &h[(1, 0)] * &w.td;
    h[(k - 1, k)] = &h[(k - 1, k)] * &w.tu;
    h[(k, k)] = &h[(k, k)] * &w.cu;
    Ok(h)
}

/// Marked secular determinant through the four-term combination of
/// unmarked determinants. With the conventions for `k = 0` and `k = -1`
/// the same expression stays valid for every `k`, which is what makes
/// the cofactor formula uniform in the endpoints.
pub fn marked_secular(k: i64, w: &MarkerWeights) -> Poly {
    if k <= -2 {
        return Poly::zero();
    }
    if k == -1 {
        return &w.td * &w.tu;
    }
    let a0 = marker_combination(&w.td, &w.cd, 0);
    let ak = marker_combination(&w.tu, &w.cu, k as usize);
    let tdtu = &w.td * &w.tu;
    let mut acc = &tdtu * &secular_recursive(k);
    acc = &acc + &(&(&w.td * &ak) * &secular_recursive(k - 1));
    acc = &acc + &(&(&w.tu * &a0) * &secular_recursive(k - 1).scale_shift(1));
    acc = &acc + &(&(&a0 * &ak) * &secular_recursive(k - 2).scale_shift(1));
    acc
}

/// Determinant route for the marked secular polynomial.
pub fn marked_secular_det(k: usize, w: &MarkerWeights) -> Result<Poly> {
    Ok(marked_hamiltonian(k, w)?.identity_minus().det())
}

fn marked_gf_parts(k: usize, m: usize, n: usize, w: &MarkerWeights) -> (u32, u32, Poly, Poly) {
    let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
    let zpow = (hi - lo) as u32;
    let qhpow = (hi * hi - lo * lo) as u32;
    let num_floor = marked_secular(lo as i64 - 1, &w.floor_only());
    let num_ceil =
        marked_secular(k as i64 - hi as i64 - 1, &w.ceiling_only()).scale_shift(hi as i32 + 1);
    let den = marked_secular(k as i64, w);
    (zpow, qhpow, &num_floor * &num_ceil, den)
}

/// Marked meander generating function, symmetrized: paths starting on the
/// floor carry an extra touch-down weight and paths starting on the
/// ceiling an extra touch-up weight, so the result is symmetric in the
/// endpoints.
pub fn marked_gf(query: &MeanderQuery, w: &MarkerWeights) -> Result<GFResult> {
    let k = query.k_eff();
    if k == 0 {
        return Err(Error::CeilingTooLow(k));
    }
    let (prefactor_z, prefactor_qh, numerator, denominator) =
        marked_gf_parts(k, query.m, query.n, w);
    let inv = Series::invert_poly(&denominator, query.len)?;
    let series = inv.mul_poly(&numerator).mul_monomial(
        &Mono::var_pow(Var::Z, prefactor_z as i32).with_exp(Var::Qh, prefactor_qh as i32),
        &coef_int(1),
    );
    Ok(GFResult {
        k_eff: k,
        prefactor_z,
        prefactor_qh,
        numerator,
        denominator,
        series,
    })
}

fn swap_marker_slots(p: &Poly) -> Poly {
    p.swap_vars(Var::Td, Var::Tu).swap_vars(Var::Cd, Var::Cu)
}

/// Sample exact-rational parameter points on the two-parameter family
/// that leaves the generating function unchanged, and confirm the marked
/// and unmarked values agree at each. The family fixes the creep weights
/// from the touch weights so that both marker combinations vanish:
/// `s = t + (1 - t)/zh` and `sigma = tc + (1 - tc)/(zh q^k)`.
pub fn invariance_family_check(k: usize, samples: usize, seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rat = |den: i64| {
        let num = rng.gen_range(1..den);
        Coef::new(num.into(), den.into())
    };
    for round in 0..samples {
        let z = rat(23);
        let zh = rat(17);
        let q = rat(13);
        let t = rat(11);
        let tc = rat(7);
        let s = &t + (Coef::one() - &t) / &zh;
        let qk = q.pow(k as i32);
        let sc = &tc + (Coef::one() - &tc) / (&zh * &qk);
        let w = MarkerWeights::from_rationals(t, s, tc, sc);

        let mut vals = BTreeMap::new();
        vals.insert(Var::Z, z);
        vals.insert(Var::Zh, zh);
        for m in 0..=k {
            for n in m..=k {
                let (_, _, marked_num, marked_den) = marked_gf_parts(k, m, n, &w);
                let (_, _, plain_num, plain_den) = gf_parts(k as i64, m as i64, n as i64);
                let mn = marked_num.eval_at_q(&q, &vals).expect("even area exponents");
                let md = marked_den.eval_at_q(&q, &vals).expect("even area exponents");
                let pn = plain_num.eval_at_q(&q, &vals).expect("even area exponents");
                let pd = plain_den.eval_at_q(&q, &vals).expect("even area exponents");
                if md.is_zero() || pd.is_zero() {
                    return (false, format!("degenerate sample {round} (zero denominator)"));
                }
                if &mn * &pd != &pn * &md {
                    return (
                        false,
                        format!("sample {round}, m={m}, n={n}: marked and unmarked values differ"),
                    );
                }
            }
        }
    }
    (true, format!("{samples} parameter points"))
}

/// The marked identity suite at ceiling `k`, series through order `len`.
pub fn marked_identity_suite(k: usize, len: usize) -> CheckReport {
    let mut report = CheckReport::new();
    if k == 0 {
        report.push("marked_suite", false, "ceiling too low for markers");
        return report;
    }
    let w = MarkerWeights::symbolic();
    let det = marked_secular_det(k, &w).expect("k >= 1");

    report.push_poly_eq(
        format!("marked_combination_vs_det_k{k}"),
        &marked_secular(k as i64, &w),
        &det,
    );

    // Expansion along the top row.
    {
        let head = Poly::one() - &w.cd * &Poly::var(Var::Zh);
        let zzq = Poly::var(Var::Z).pow(2) * Poly::var_pow(Var::Qh, 2);
        let rhs = &(&head * &marked_secular(k as i64 - 1, &w.ceiling_only()).scale_shift(1))
            - &(&(&w.td * &zzq) * &marked_secular(k as i64 - 2, &w.ceiling_only()).scale_shift(2));
        report.push_poly_eq(format!("marked_top_row_k{k}"), &det, &rhs);
    }

    // Expansion along the bottom row.
    {
        let head = Poly::one()
            - &w.cu
                * &Poly::monomial(
                    Mono::var(Var::Zh).with_exp(Var::Qh, 2 * k as i32),
                    coef_int(1),
                );
        let tail = Poly::monomial(
            Mono::var_pow(Var::Z, 2).with_exp(Var::Qh, 4 * k as i32 - 2),
            coef_int(1),
        );
        let rhs = &(&head * &marked_secular(k as i64 - 1, &w.floor_only()))
            - &(&(&w.tu * &tail) * &marked_secular(k as i64 - 2, &w.floor_only()));
        report.push_poly_eq(format!("marked_bottom_row_k{k}"), &det, &rhs);
    }

    // Extracting one marker pair at a time.
    {
        let a0 = marker_combination(&w.td, &w.cd, 0);
        let rhs = &(&w.td * &marked_secular(k as i64, &w.ceiling_only()))
            + &(&a0 * &marked_secular(k as i64 - 1, &w.ceiling_only()).scale_shift(1));
        report.push_poly_eq(format!("marked_floor_extraction_k{k}"), &det, &rhs);

        let ak = marker_combination(&w.tu, &w.cu, k);
        let rhs = &(&w.tu * &marked_secular(k as i64, &w.floor_only()))
            + &(&ak * &marked_secular(k as i64 - 1, &w.floor_only()));
        report.push_poly_eq(format!("marked_ceiling_extraction_k{k}"), &det, &rhs);
    }

    // Equal touch and creep weights collapse the combination to 1 - t.
    {
        let mut ok = true;
        for r in 0..=k {
            let a = marker_combination(&w.td, &w.td, r);
            if a != Poly::one() - Poly::var(Var::Td) {
                ok = false;
            }
        }
        report.push(format!("marker_combination_equal_weights_k{k}"), ok, "");
    }

    // All-ones weights reproduce the unmarked process.
    {
        let ones = MarkerWeights::ones();
        report.push_poly_eq(
            format!("marked_unmarked_limit_F_k{k}"),
            &marked_secular(k as i64, &ones),
            &secular_recursive(k as i64),
        );
        let q = MeanderQuery::finite(k, 0, k.min(1), len).unwrap();
        let a = marked_gf(&q, &ones).unwrap();
        let b = crate::motzkin::gf_meander(&q);
        report.push_series_eq(format!("marked_unmarked_limit_G_k{k}"), &a.series, &b.series);
    }

    // Floor-ceiling duality of the marked determinant (Laurent mode).
    {
        let dual = swap_marker_slots(&marked_secular(k as i64, &w)).dual_substitution(k as i32);
        report.push_poly_eq(
            format!("marked_secular_duality_k{k}"),
            &marked_secular(k as i64, &w),
            &dual,
        );
    }

    // Duality of the marked meander, cross-multiplied in Laurent mode.
    // Exchanging the floor and ceiling marker pairs is the slot swap on
    // the symbolic polynomials.
    for m in 0..=k {
        for n in m..=k {
            let (zp, qp, num, den) = marked_gf_parts(k, m, n, &w);
            let lhs_num = num.mul_monomial(
                &Mono::var_pow(Var::Z, zp as i32).with_exp(Var::Qh, qp as i32),
                &coef_int(1),
            );
            let (zp_d, qp_d, num_d, den_d) = marked_gf_parts(k, k - m, k - n, &w);
            let rhs_num = swap_marker_slots(&num_d.mul_monomial(
                &Mono::var_pow(Var::Z, zp_d as i32).with_exp(Var::Qh, qp_d as i32),
                &coef_int(1),
            ))
            .dual_substitution(k as i32);
            let rhs_den = swap_marker_slots(&den_d).dual_substitution(k as i32);
            report.push_poly_eq(
                format!("marked_gf_duality_k{k}_m{m}_n{n}"),
                &(&lhs_num * &rhs_den),
                &(&rhs_num * &den),
            );
        }
    }

    // With ceiling markers off, the marked meander is the unmarked one
    // rescaled by floor-touch combinations.
    for m in 0..=k {
        for n in m..=k {
            let a0 = marker_combination(&w.td, &w.cd, 0);
            let lhs = &marked_secular(m as i64 - 1, &w.floor_only())
                * &(&(&w.td * &secular_recursive(k as i64))
                    + &(&a0 * &secular_recursive(k as i64 - 1).scale_shift(1)));
            let rhs = &(&(&w.td * &secular_recursive(m as i64 - 1))
                + &(&a0 * &secular_recursive(m as i64 - 2).scale_shift(1)))
                * &marked_secular(k as i64, &w.floor_only());
            report.push_poly_eq(format!("marked_floor_reduction_k{k}_m{m}_n{n}"), &lhs, &rhs);
        }
    }

    // The closed marked-to-unmarked relation, cross-multiplied over the
    // secular determinants.
    for m in 0..=k {
        for n in m..=k {
            let a0 = marker_combination(&w.td, &w.cd, 0);
            let ak = marker_combination(&w.tu, &w.cu, k);
            let shift = |p: &Poly| p.scale_shift(n as i32 + 1);
            let first = &(&w.td * &secular_recursive(m as i64 - 1))
                + &(&a0 * &secular_recursive(m as i64 - 2).scale_shift(1));
            let second = &(&w.tu * &shift(&secular_recursive(k as i64 - n as i64 - 1)))
                + &(&ak * &shift(&secular_recursive(k as i64 - n as i64 - 2)));
            let hag_den = &(&ak
                * &(&(&w.td * &secular_recursive(k as i64 - 1))
                    + &(&a0 * &secular_recursive(k as i64 - 2).scale_shift(1))))
                + &(&w.tu
                    * &(&(&w.td * &secular_recursive(k as i64))
                        + &(&a0 * &secular_recursive(k as i64 - 1).scale_shift(1))));
            let (_, _, num, den) = marked_gf_parts(k, m, n, &w);
            let lhs = &(&first * &second) * &den;
            let rhs = &num * &hag_den;
            report.push_poly_eq(format!("marked_closed_form_k{k}_m{m}_n{n}"), &lhs, &rhs);
        }
    }

    // With the horizontal weight off the creep markers cannot fire.
    {
        let mut ok = true;
        let mut detail = String::new();
        for m in 0..=k {
            for n in m..=k {
                let (_, _, num, den) = marked_gf_parts(k, m, n, &w);
                for p in [num.subst_zh_zero(), den.subst_zh_zero()] {
                    if p.involves(Var::Cd) || p.involves(Var::Cu) {
                        ok = false;
                        detail = format!("creep marker survives zh = 0 at m={m}, n={n}");
                    }
                }
            }
        }
        report.push(format!("marked_dyck_independence_k{k}"), ok, detail);
    }

    // Series route against the direct path enumeration, symbolically.
    for m in 0..=k {
        for n in 0..=k {
            let q = MeanderQuery::finite(k, m, n, len).unwrap();
            let a = marked_gf(&q, &w).unwrap().series;
            let b = crate::enumeration::enumerate_marked(k, m, n, len, &w);
            report.push_series_eq(format!("marked_series_vs_dp_k{k}_m{m}_n{n}"), &a, &b);
            if m <= n {
                let c = crate::enumeration::enumerate_marked(k, n, m, len, &w);
                report.push_series_eq(format!("marked_symmetry_k{k}_m{m}_n{n}"), &b, &c);
            }
            if !a.has_nonneg_integer_coeffs() {
                report.push(
                    format!("marked_nonneg_k{k}_m{m}_n{n}"),
                    false,
                    "negative or fractional coefficient",
                );
            }
        }
    }

    // The invariance family, numerically at random rational points.
    {
        let (ok, detail) = invariance_family_check(k, 20, 0x4d6f747a);
        report.push(format!("invariance_family_k{k}"), ok, detail);
    }

    report
}
