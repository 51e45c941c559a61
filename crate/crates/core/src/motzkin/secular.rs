//! The secular determinant `F_k = det(1 - H_k)` by four independent
//! routes: the top-row recursion, the direct determinant, the closed
//! double sum with Chebyshev and Gaussian-binomial factors, and the
//! occupation-number ("dual") sum over the two-step level ladder.
//!
//! Conventions for negative indices: `F_{-1} = 1` and `F_k = 0` for
//! `k <= -2`; these make the cofactor formula valid for all endpoint
//! choices.

use crate::error::{Error, Result};
use crate::poly::{coef_int, coef_ratio, Coef, Poly};
use crate::qseries::{q_binomial, q_binomial_stretched};
use crate::symm::{complete_homogeneous_uv, sym_reduce};
use crate::vars::{Mono, Var};

use super::hamiltonian;

/// Top-row recursion `F_k = (1 - zh) F_{k-1}(shift 1) - z^2 q F_{k-2}(shift 2)`,
/// computed bottom up. Accepts any `k >= -2`.
pub fn secular_recursive(k: i64) -> Poly {
    if k <= -2 {
        return Poly::zero();
    }
    if k == -1 {
        return Poly::one();
    }
    let one_minus_zh = Poly::one() - Poly::var(Var::Zh);
    let zzq = Poly::var(Var::Z).pow(2) * Poly::var_pow(Var::Qh, 2);
    let mut two_back = Poly::one(); // F_{-1}
    let mut one_back = one_minus_zh.clone(); // F_0
    if k == 0 {
        return one_back;
    }
    for _ in 1..=k {
        let next = &(&one_minus_zh * &one_back.scale_shift(1)) - &(&zzq * &two_back.scale_shift(2));
        two_back = one_back;
        one_back = next;
    }
    one_back
}

/// Determinant route: `det(1 - H_k)` through the generic determinant.
pub fn secular_det(k: usize) -> Poly {
    hamiltonian(k).identity_minus().det()
}

/// Scaled Chebyshev polynomials `z^m T_m(zh / 2z)` as honest polynomials:
/// `t_0 = 1`, `t_1 = zh/2`, `t_{m+1} = zh t_m - z^2 t_{m-1}`.
fn chebyshev_scaled_table(max: usize) -> Vec<Poly> {
    let zh = Poly::var(Var::Zh);
    let zsq = Poly::var(Var::Z).pow(2);
    let mut table = Vec::with_capacity(max + 1);
    table.push(Poly::one());
    if max >= 1 {
        table.push(zh.scaled(&coef_ratio(1, 2)));
    }
    for m in 2..=max {
        let next = &(&zh * &table[m - 1]) - &(&zsq * &table[m - 2]);
        table.push(next);
    }
    table
}

/// Closed form: a double sum over the particle number `N` and the split
/// `n` between the two level towers, with Chebyshev factors carrying the
/// horizontal weight and a pair of Gaussian binomials carrying the
/// spectrum truncation. Intermediate terms are rational (the Chebyshev
/// halves cancel across the split), so the result is checked to be
/// integral and to match the recursion elsewhere.
pub fn secular_closed(k: usize) -> Result<Poly> {
    let kk = k as i64;
    let cheb = chebyshev_scaled_table(k + 1);
    let mut acc = Poly::zero();
    for big_n in 0..=(kk + 1) {
        let mut slice = Poly::zero();
        for n in 0..=big_n {
            let m = (2 * n - big_n).unsigned_abs() as usize;
            let b1 = q_binomial(kk - big_n + 1 + n, n)?;
            let b2 = q_binomial(kk + 1 - n, big_n - n)?;
            let z_extra = Mono::var_pow(Var::Z, (big_n as usize - m) as i32);
            let term = (&cheb[m] * &(&b1 * &b2)).mul_monomial(&z_extra, &coef_int(1));
            slice = &slice + &term;
        }
        let sign = if big_n % 2 == 0 { 1 } else { -1 };
        let weight = Mono::var_pow(Var::Qh, (big_n * (big_n - 1)) as i32);
        acc = &acc + &slice.mul_monomial(&weight, &coef_int(sign));
    }
    if !acc.is_integral() {
        return Err(Error::NotIntegral(format!(
            "closed-form secular determinant for k={k}"
        )));
    }
    Ok(acc)
}

/// Occupation-number route in the two-step weights: each level pair `j`
/// holding `N_j` bosons contributes `h_{N_j}(u, v) q^(j N_j)`, with the
/// global exclusion factor `(-1)^N q^(N(N-1)/2)`. Returns the raw
/// polynomial in `u`, `v`, `qh`.
pub fn secular_dual(k: usize) -> Poly {
    let kk = k as i64;
    let mut acc = Poly::zero();
    for big_n in 0..=(kk + 1) {
        let slots = (kk - big_n + 2) as usize; // level pairs 0 .. k-N+1
        let h_table: Vec<Poly> = (0..=big_n)
            .map(|d| complete_homogeneous_uv(d as i32))
            .collect();
        let mut slice = Poly::zero();
        for occ in weak_compositions(big_n as u32, slots) {
            let mut term = Poly::one();
            for (j, &nj) in occ.iter().enumerate() {
                if nj == 0 {
                    continue;
                }
                let factor = h_table[nj as usize].mul_monomial(
                    &Mono::var_pow(Var::Qh, 2 * j as i32 * nj as i32),
                    &coef_int(1),
                );
                term = &term * &factor;
            }
            slice = &slice + &term;
        }
        let sign = if big_n % 2 == 0 { 1 } else { -1 };
        let weight = Mono::var_pow(Var::Qh, (big_n * (big_n - 1)) as i32);
        acc = &acc + &slice.mul_monomial(&weight, &coef_int(sign));
    }
    acc
}

/// The dual route mapped back to the step-weight basis.
pub fn secular_dual_reduced(k: usize) -> Result<Poly> {
    sym_reduce(&secular_dual(k))
}

/// All vectors of `slots` nonnegative integers summing to `total`.
fn weak_compositions(total: u32, slots: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(total - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if slots == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, slots, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    /// Area weight switched off (`q = 1`): lengths and step types only.
    QOne,
    /// Horizontal steps suppressed (`zh = 0`).
    Dyck,
    /// All steps weighted equally (`zh = z`).
    Uniform,
}

/// Degenerate closed forms. Each equals the general determinant under the
/// matching substitution (`qh -> 1`, `zh -> 0`, `zh -> z`).
pub fn secular_special(k: usize, case: SpecialCase) -> Result<Poly> {
    match case {
        SpecialCase::QOne => special_q_one(k),
        SpecialCase::Dyck => Ok(special_dyck(k)),
        SpecialCase::Uniform => special_uniform(k),
    }
}

fn binom(n: i64, k: i64) -> Coef {
    use num_traits::Zero;
    if k < 0 || k > n {
        return Coef::zero();
    }
    Coef::from_integer(num_integer::binomial(
        num_bigint::BigInt::from(n),
        num_bigint::BigInt::from(k),
    ))
}

fn special_q_one(k: usize) -> Result<Poly> {
    let kk = k as i64;
    let mut acc = Poly::zero();
    for big_n in 0..=(kk + 1) {
        for n in 0..=big_n {
            let c = binom(kk + 1 - big_n + n, n) * binom(kk + 1 - n, big_n - n);
            let sign = if big_n % 2 == 0 { 1 } else { -1 };
            let mono = Mono::var_pow(Var::U, (big_n - n) as i32).with_exp(Var::V, n as i32);
            acc.add_term(mono, c * coef_int(sign));
        }
    }
    sym_reduce(&acc)
}

fn special_dyck(k: usize) -> Poly {
    let kk = k as i64;
    let mut acc = Poly::zero();
    let mut n = 0i64;
    while 2 * n <= kk + 1 {
        // n pairs of steps: weight (-1)^n z^(2n) q^(n(2n-1)) times the
        // Gaussian binomial in base q^2.
        let qb = q_binomial_stretched(kk - n + 1, n, 2).expect("indices in range");
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mono = Mono::var_pow(Var::Z, 2 * n as i32)
            .with_exp(Var::Qh, (2 * n * (2 * n - 1)) as i32);
        acc = &acc + &qb.mul_monomial(&mono, &coef_int(sign));
        n += 1;
    }
    acc
}

fn special_uniform(k: usize) -> Result<Poly> {
    let kk = k as i64;
    let mut acc = Poly::zero();
    for n in 0..=(kk + 1) / 3 {
        for ell in 0.. {
            let cap = kk - 3 * n - ell + 1;
            if cap < 0 {
                break;
            }
            if ell > cap + 1 {
                break;
            }
            let triple = q_binomial_stretched(n + cap, n, 3)?;
            let single = q_binomial(cap + 1, ell)?;
            let qexp = 3 * n * (3 * n - 1) / 2 + 3 * n * ell + ell * (ell - 1);
            let sign = if ell % 2 == 0 { 1 } else { -1 };
            let mono = Mono::var_pow(Var::Z, (3 * n + ell) as i32)
                .with_exp(Var::Qh, 2 * qexp as i32);
            acc = &acc + &(&triple * &single).mul_monomial(&mono, &coef_int(sign));
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BosonTower {
    Alpha,
    Beta,
}

/// Partition function of `n` bosons on the truncated equidistant tower
/// with `kk + 1` levels: `(-u)^n` (or `(-v)^n`) times a Gaussian binomial.
pub fn bosonic_partition(kk: i64, n: i64, tower: BosonTower) -> Result<Poly> {
    let qb = q_binomial(n + kk, n)?;
    let var = match tower {
        BosonTower::Alpha => Var::U,
        BosonTower::Beta => Var::V,
    };
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(qb.mul_monomial(&Mono::var_pow(var, n as i32), &coef_int(sign)))
}
