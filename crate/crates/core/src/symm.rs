//! Reduction of u,v-symmetric polynomials to the step-weight basis.
//!
//! The two-step weights satisfy `u + v = zh` and `u v = z^2`, so any
//! polynomial symmetric under `u <-> v` rewrites into `z`, `zh`, `qh`.
//! Power sums are the workhorse: `u^d + v^d = p_d` with
//! `p_d = zh p_{d-1} - z^2 p_{d-2}`, `p_0 = 2`, `p_1 = zh`.

use crate::error::{Error, Result};
use crate::poly::{Coef, Poly};
use crate::vars::{Mono, Var};

/// Rewrite a `u <-> v` symmetric polynomial in `u`, `v`, `qh` as a
/// polynomial in `z`, `zh`, `qh`. Bidegree `(i, j)` in `(u, v)` lands in
/// combined step degree `i + j`.
pub fn sym_reduce(p: &Poly) -> Result<Poly> {
    for (m, _) in p.terms() {
        for v in [Var::Z, Var::Zh, Var::Td, Var::Cd, Var::Tu, Var::Cu, Var::Z1, Var::Z2] {
            if m.exp(v) != 0 {
                return Err(Error::NotSymmetric(format!(
                    "input involves {}, expected only u, v, qh",
                    v.name()
                )));
            }
        }
    }
    let max_gap = p
        .terms()
        .map(|(m, _)| (m.exp(Var::U) - m.exp(Var::V)).abs())
        .max()
        .unwrap_or(0);
    let power_sums = power_sum_table(max_gap as usize);

    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let i = m.exp(Var::U);
        let j = m.exp(Var::V);
        if i < j {
            continue; // handled with its mirror term
        }
        let mirror = m
            .with_exp(Var::U, j)
            .with_exp(Var::V, i);
        let mirror_c = p.coeff(&mirror);
        if &mirror_c != c {
            return Err(Error::NotSymmetric(format!(
                "coefficient of u^{i} v^{j} is {c}, of u^{j} v^{i} is {mirror_c}"
            )));
        }
        let qh_part = Mono::var_pow(Var::Qh, m.exp(Var::Qh));
        let zsq = Mono::var_pow(Var::Z, 2 * j);
        if i == j {
            // u^i v^i = z^(2i)
            out.add_term(zsq.mul(&qh_part), c.clone());
        } else {
            // u^i v^j + u^j v^i = (uv)^j (u^(i-j) + v^(i-j))
            let shifted = power_sums[(i - j) as usize].mul_monomial(&zsq.mul(&qh_part), c);
            out = &out + &shifted;
        }
    }
    Ok(out)
}

/// Back substitution `zh -> u + v`, `z^2 -> u v` for polynomials whose
/// `z` exponents are all even. Test-side inverse of [`sym_reduce`].
pub fn sym_expand(p: &Poly) -> Result<Poly> {
    let u = Poly::var(Var::U);
    let v = Poly::var(Var::V);
    let e1 = &u + &v;
    let e2 = &u * &v;
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let zdeg = m.exp(Var::Z);
        if zdeg % 2 != 0 {
            return Err(Error::NotSymmetric(format!(
                "odd z exponent {zdeg} has no u,v preimage"
            )));
        }
        let rest = m.with_exp(Var::Z, 0).with_exp(Var::Zh, 0);
        let term = &e2.pow((zdeg / 2) as u32) * &e1.pow(m.exp(Var::Zh) as u32);
        out = &out + &term.mul_monomial(&rest, c);
    }
    Ok(out)
}

fn power_sum_table(max: usize) -> Vec<Poly> {
    let zh = Poly::var(Var::Zh);
    let zsq = Poly::var(Var::Z).pow(2);
    let mut table = Vec::with_capacity(max + 1);
    table.push(Poly::int(2));
    if max >= 1 {
        table.push(zh.clone());
    }
    for d in 2..=max {
        let next = &(&zh * &table[d - 1]) - &(&zsq * &table[d - 2]);
        table.push(next);
    }
    table
}

/// The complete homogeneous symmetric polynomial `h_d(u, v)`.
pub fn complete_homogeneous_uv(d: i32) -> Poly {
    let mut p = Poly::zero();
    for i in 0..=d {
        p.add_term(
            Mono::var_pow(Var::U, i).with_exp(Var::V, d - i),
            Coef::from_integer(1.into()),
        );
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Poly {
        Poly::var(Var::U)
    }
    fn v() -> Poly {
        Poly::var(Var::V)
    }

    #[test]
    fn elementary_basis_images() {
        assert_eq!(sym_reduce(&(u() + v())).unwrap(), Poly::var(Var::Zh));
        assert_eq!(sym_reduce(&(u() * v())).unwrap(), Poly::var(Var::Z).pow(2));
    }

    #[test]
    fn power_sum_two() {
        let got = sym_reduce(&(u().pow(2) + v().pow(2))).unwrap();
        let expect = Poly::var(Var::Zh).pow(2) - Poly::var(Var::Z).pow(2).scaled(&crate::poly::coef_int(2));
        assert_eq!(got, expect);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let p = u().pow(2) + v();
        assert!(matches!(sym_reduce(&p), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn stray_variable_rejected() {
        let p = u() + v() + Poly::var(Var::Z);
        assert!(matches!(sym_reduce(&p), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn expand_undoes_reduce() {
        // h_3 plus a q-weighted symmetric square.
        let mut p = complete_homogeneous_uv(3);
        p = &p + &(u().pow(2) + v().pow(2)).mul_monomial(&Mono::var_pow(Var::Qh, 4), &crate::poly::coef_int(3));
        let reduced = sym_reduce(&p).unwrap();
        assert_eq!(sym_expand(&reduced).unwrap(), p);
    }
}
