//! Cluster expansion of the log generating functions over the exclusion-2
//! level ladder, plus the extremal area and degree formulas.
//!
//! The ladder has `2k + 2` levels: `s(2n) = -u q^n`, `s(2n+1) = -v q^n`.
//! The log of the secular determinant expands over integer compositions
//! with combinatorial weights `c2`; subtracting the three determinant
//! logs that make up a meander telescopes the level windows into a single
//! window per composition.

use crate::error::{Error, Result};
use crate::poly::{Coef, Poly};
use crate::series::Series;
use crate::symm::sym_reduce;
use crate::vars::{Mono, Var};

/// An ordered tuple of positive integers. Order matters: `(2, 1)` and
/// `(1, 2)` carry different weights in the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty() && parts.iter().all(|&p| p >= 1));
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// All compositions of `a` with at most `max_parts` parts, in
/// lexicographic order of the part sequences.
pub fn compositions(a: u32, max_parts: usize) -> Vec<Composition> {
    fn rec(rest: u32, room: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(prefix.clone()));
            return;
        }
        if room == 0 {
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, room - 1, prefix, out);
            prefix.pop();
        }
    }
    assert!(a >= 1);
    let mut out = Vec::new();
    rec(a, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Combinatorial weight of a composition for exclusion-2 statistics:
/// `(1 / l_1) prod_i C(l_i + l_{i+1} - 1, l_{i+1})`.
pub fn c2(comp: &Composition) -> Coef {
    let parts = comp.parts();
    let mut acc = Coef::new(1.into(), (parts[0] as i64).into());
    for pair in parts.windows(2) {
        let (a, b) = (pair[0] as i64, pair[1] as i64);
        let bin = num_integer::binomial(
            num_bigint::BigInt::from(a + b - 1),
            num_bigint::BigInt::from(b),
        );
        acc *= Coef::from_integer(bin);
    }
    acc
}

/// The exclusion-2 level ladder over a ceiling-`k` process.
#[derive(Debug, Clone, Copy)]
pub struct SpectralLadder {
    pub k: usize,
}

impl SpectralLadder {
    pub fn new(k: usize) -> Self {
        SpectralLadder { k }
    }

    /// Number of levels, `2k + 2`.
    pub fn levels(&self) -> usize {
        2 * self.k + 2
    }

    /// Spectral factor of level `r`.
    pub fn factor(&self, r: usize) -> Poly {
        debug_assert!(r < self.levels());
        let var = if r % 2 == 0 { Var::U } else { Var::V };
        Poly::monomial(
            Mono::var(var).with_exp(Var::Qh, 2 * (r as i32 / 2)),
            crate::poly::coef_int(-1),
        )
    }
}

/// Monomial of `prod_i s^{l_i}(r + i - 1)` with the overall sign
/// stripped; the sign is `(-1)^a`.
fn product_monomial(parts: &[u32], r: i64) -> Mono {
    let mut u = 0i32;
    let mut v = 0i32;
    let mut qh = 0i32;
    for (i, &l) in parts.iter().enumerate() {
        let x = r + i as i64;
        debug_assert!(x >= 0);
        if x % 2 == 0 {
            u += l as i32;
        } else {
            v += l as i32;
        }
        qh += 2 * ((x / 2) as i32) * l as i32;
    }
    Mono::var_pow(Var::U, u)
        .with_exp(Var::V, v)
        .with_exp(Var::Qh, qh)
}

/// Grade-`a` term of the log of the secular determinant, in the two-step
/// weights: the full-ladder window sum over compositions of `a`.
pub fn cluster_term_uv(k: usize, a: u32) -> Poly {
    let mut acc = Poly::zero();
    for comp in compositions(a, 2 * k + 2) {
        let weight = -c2(&comp);
        let hi = 2 * k as i64 + 2 - comp.len() as i64;
        for r in 0..=hi {
            acc.add_term(product_monomial(comp.parts(), r), weight.clone());
        }
    }
    acc
}

/// Grade-`a` cluster term reduced to the step-weight basis. The raw sum
/// must be symmetric in `u <-> v`; a failure means a broken term.
pub fn cluster_term(k: usize, a: u32) -> Result<Poly> {
    sym_reduce(&cluster_term_uv(k, a))
}

/// Log of the meander generating function with its monomial prefactor
/// removed, as a series in the excess length, by telescoping the three
/// determinant logs into one level window per composition.
pub fn log_gf(k: usize, m: usize, n: usize, grade: usize) -> Result<Series> {
    if m > n || n > k {
        return Err(Error::InvalidQuery(format!(
            "log expansion requires m <= n <= k, got m={m}, n={n}, k={k}"
        )));
    }
    let mut out = Series::zero(grade);
    for a in 1..=grade as u32 {
        let mut acc = Poly::zero();
        for comp in compositions(a, 2 * k + 2) {
            let weight = c2(&comp);
            let j = comp.len() as i64;
            let lo = (2 * m as i64 + 1 - j).max(0);
            let hi = (2 * k as i64 + 2 - j).min(2 * n as i64 + 1);
            for r in lo..=hi {
                acc.add_term(product_monomial(comp.parts(), r), weight.clone());
            }
        }
        out.set_coeff(a as usize, sym_reduce(&acc)?);
    }
    Ok(out)
}

/// Same series by the even/odd window split: each composition contributes
/// two geometric level sums with explicit floor-function limits, and the
/// two-step monomials come straight from the split statistics
/// (`S` = sum of the even-position parts).
pub fn log_gf_split(k: usize, m: usize, n: usize, grade: usize) -> Result<Series> {
    if m > n || n > k {
        return Err(Error::InvalidQuery(format!(
            "log expansion requires m <= n <= k, got m={m}, n={n}, k={k}"
        )));
    }
    let (ki, mi, ni) = (k as i64, m as i64, n as i64);
    let mut out = Series::zero(grade);
    for a in 1..=grade as u32 {
        let mut acc = Poly::zero();
        for comp in compositions(a, 2 * k + 2) {
            let weight = c2(&comp);
            let parts = comp.parts();
            let j = parts.len() as i64;
            let s_even: i32 = parts
                .iter()
                .enumerate()
                .filter(|(i, _)| (i + 1) % 2 == 0)
                .map(|(_, &l)| l as i32)
                .sum();
            let c0: i32 = parts
                .iter()
                .enumerate()
                .map(|(i, &l)| ((i as i32 + 1 - 1) / 2) * l as i32)
                .sum();
            let aa = a as i32;

            // Windows starting on an even level.
            let lo = ((2 * mi + 2 - j).div_euclid(2)).max(0);
            let hi = ((2 * ki + 2 - j).div_euclid(2)).min(ni);
            for s in lo..=hi {
                let mono = Mono::var_pow(Var::U, aa - s_even)
                    .with_exp(Var::V, s_even)
                    .with_exp(Var::Qh, 2 * (c0 + s as i32 * aa));
                acc.add_term(mono, weight.clone());
            }

            // Windows starting on an odd level.
            let lo = ((2 * mi + 1 - j).div_euclid(2)).max(0);
            let hi = ((2 * ki + 1 - j).div_euclid(2)).min(ni);
            for s in lo..=hi {
                let mono = Mono::var_pow(Var::U, s_even)
                    .with_exp(Var::V, aa - s_even)
                    .with_exp(Var::Qh, 2 * (c0 + s_even + s as i32 * aa));
                acc.add_term(mono, weight.clone());
            }
        }
        out.set_coeff(a as usize, sym_reduce(&acc)?);
    }
    Ok(out)
}

/// Exact extremal doubled areas over all length-`len` paths from `m` to
/// `n` under ceiling `k`.
pub fn area_bounds(k: usize, m: usize, n: usize, len: usize) -> Result<(i64, i64)> {
    let (ki, mi, ni, l) = (k as i64, m as i64, n as i64, len as i64);
    if m > k || n > k || l < (ni - mi).abs() {
        return Err(Error::Unreachable { k, m, n, len });
    }
    let sq = mi * mi + ni * ni;
    let min2 = if l <= mi + ni {
        let d = mi + ni - l;
        sq - 2 * (d * d / 4)
    } else {
        sq
    };
    let max2 = if l + mi + ni <= 2 * ki {
        let s = mi + ni + l;
        2 * (s * s / 4) - sq
    } else {
        2 * ki * (mi + ni + l - ki) - sq
    };
    Ok((min2, max2))
}

/// Extremal powers of `q` in the grade-`a` part of the prefactor-stripped
/// log (equivalently, of the expanded meander at excess length `a`).
/// Requires `m <= n`.
pub fn q_degree_bounds(k: usize, m: usize, n: usize, a: usize) -> (i64, i64) {
    assert!(m <= n && n <= k);
    let (ki, mi, ni, ai) = (k as i64, m as i64, n as i64, a as i64);
    let min = if ai <= 2 * mi {
        ai * mi - ai * ai / 4
    } else {
        mi * mi
    };
    let max = if ai <= 2 * ki - 2 * ni {
        ai * ni + ai * ai / 4
    } else {
        ai * ki - (ki - ni) * (ki - ni)
    };
    (min, max)
}
