//! Identity suites for the unmarked process: duality, first-passage
//! recursions, the three-term relation, split propagators, and the
//! cofactor complement route.

use crate::poly::{coef_int, Poly};
use crate::report::CheckReport;
use crate::series::Series;
use crate::vars::{Mono, Var};

use super::{gf_meander, gf_parts, gf_series_oracle, hamiltonian, MeanderQuery};
use super::secular::secular_recursive;

/// Vertical-reflection duality of the secular determinant, exact in
/// Laurent mode.
pub fn duality_check(k: usize) -> bool {
    let f = secular_recursive(k as i64);
    f.dual_substitution(k as i32) == f
}

fn shift_series(s: &Series, n: i32) -> Series {
    let mut out = Series::zero(s.order());
    for d in 0..=s.order() {
        out.set_coeff(d, s.coeff(d).scale_shift(n));
    }
    out
}

/// Run the named recursion and duality identities at ceiling `k` through
/// series order `len`. Polynomial identities are exact; rational-function
/// identities are checked through the truncation order.
pub fn recursion_checks(k: usize, len: usize) -> CheckReport {
    let mut report = CheckReport::new();

    report.push(
        format!("secular_duality_k{k}"),
        duality_check(k),
        "F under vertical reflection",
    );

    // Meander duality, cross-multiplied in Laurent mode. The denominator
    // is self-dual, so only the scaled numerators need comparing.
    for m in 0..=k {
        for n in m..=k {
            let (zp, qp, num, _) = gf_parts(k as i64, m as i64, n as i64);
            let lhs = num.mul_monomial(
                &Mono::var_pow(Var::Z, zp as i32).with_exp(Var::Qh, qp as i32),
                &coef_int(1),
            );
            let (zp_d, qp_d, num_d, _) =
                gf_parts(k as i64, (k - n) as i64, (k - m) as i64);
            let rhs = num_d
                .mul_monomial(
                    &Mono::var_pow(Var::Z, zp_d as i32).with_exp(Var::Qh, qp_d as i32),
                    &coef_int(1),
                )
                .dual_substitution(k as i32);
            report.push_poly_eq(format!("gf_duality_k{k}_m{m}_n{n}"), &lhs, &rhs);
        }
    }

    // Propagator symmetry through the oracle route.
    for m in 0..=k {
        for n in m + 1..=k {
            let a = gf_series_oracle(&MeanderQuery::finite(k, m, n, len).unwrap());
            let b = gf_series_oracle(&MeanderQuery::finite(k, n, m, len).unwrap());
            report.push_series_eq(format!("gf_symmetry_k{k}_m{m}_n{n}"), &a, &b);
        }
    }

    // First passage through the last visit to height n - 1.
    for m in 0..=k {
        for n in m + 1..=k {
            let lhs = gf_meander(&MeanderQuery::finite(k, m, n, len).unwrap()).series;
            let below = gf_meander(&MeanderQuery::finite(k, m, n - 1, len).unwrap()).series;
            let top = shift_series(
                &gf_meander(&MeanderQuery::finite(k - n, 0, 0, len).unwrap()).series,
                n as i32,
            );
            let rhs = below.mul(&top).mul_monomial(
                &Mono::var(Var::Z).with_exp(Var::Qh, 2 * n as i32 - 1),
                &coef_int(1),
            );
            report.push_series_eq(format!("first_passage_k{k}_m{m}_n{n}"), &lhs, &rhs);
        }
    }

    // First passage through an intermediate height l.
    for m in 0..=k {
        for n in m + 1..=k {
            for l in m..n {
                let lhs = gf_meander(&MeanderQuery::finite(k, m, n, len).unwrap()).series;
                let upper = gf_meander(&MeanderQuery::finite(k, l + 1, n, len).unwrap()).series;
                let lower = gf_meander(&MeanderQuery::finite(l, m, l, len).unwrap()).series;
                let rhs = upper.mul(&lower).mul_monomial(
                    &Mono::var(Var::Z).with_exp(Var::Qh, 2 * l as i32 + 1),
                    &coef_int(1),
                );
                report.push_series_eq(
                    format!("second_passage_k{k}_m{m}_l{l}_n{n}"),
                    &lhs,
                    &rhs,
                );
            }
        }
    }

    // Three-term recursion in the end height, exact over the common
    // denominator.
    for m in 0..=k {
        for n in m + 1..k {
            let scaled = |mm: i64, nn: i64| {
                let (zp, qp, num, _) = gf_parts(k as i64, mm, nn);
                num.mul_monomial(
                    &Mono::var_pow(Var::Z, zp as i32).with_exp(Var::Qh, qp as i32),
                    &coef_int(1),
                )
            };
            let lhs = &(Poly::one()
                - Poly::monomial(
                    Mono::var(Var::Zh).with_exp(Var::Qh, 2 * n as i32),
                    coef_int(1),
                ))
                * &scaled(m as i64, n as i64);
            let down = scaled(m as i64, n as i64 - 1).mul_monomial(
                &Mono::var(Var::Z).with_exp(Var::Qh, 2 * n as i32 - 1),
                &coef_int(1),
            );
            let up = scaled(m as i64, n as i64 + 1).mul_monomial(
                &Mono::var(Var::Z).with_exp(Var::Qh, 2 * n as i32 + 1),
                &coef_int(1),
            );
            report.push_poly_eq(format!("three_term_k{k}_m{m}_n{n}"), &lhs, &(&down + &up));
        }
    }

    // Excursion first-passage equation, through the truncation order.
    if k >= 1 {
        let g_k = gf_meander(&MeanderQuery::finite(k, 0, 0, len).unwrap()).series;
        let g_km1 = shift_series(
            &gf_meander(&MeanderQuery::finite(k - 1, 0, 0, len).unwrap()).series,
            1,
        );
        let lhs = g_k.mul_poly(&(Poly::one() - Poly::var(Var::Zh)));
        let rhs = Series::one(len).add(&g_km1.mul(&g_k).mul_poly(
            &(Poly::var(Var::Z).pow(2) * Poly::var_pow(Var::Qh, 2)),
        ));
        report.push_series_eq(format!("excursion_first_passage_k{k}"), &lhs, &rhs);
    }

    // Splitting a propagator power at any intermediate length.
    {
        let h = hamiltonian(k);
        let cap = len.min(8);
        let mut powers = vec![crate::matrix::PolyMatrix::identity(k + 1)];
        for l in 1..=cap {
            powers.push(powers[l - 1].matmul(&h));
        }
        let mut ok = true;
        let mut detail = String::new();
        'outer: for l in 0..=cap {
            for l1 in 0..=l {
                let prod = powers[l1].matmul(&powers[l - l1]);
                if prod != powers[l] {
                    ok = false;
                    detail = format!("split {l1}+{} of power {l} differs", l - l1);
                    break 'outer;
                }
            }
        }
        report.push(format!("fixed_split_propagator_k{k}"), ok, detail);
    }

    // Cofactor route through the generic complement determinant,
    // validating the block-triangular shortcut.
    {
        let d = hamiltonian(k).identity_minus();
        for m in 0..=k {
            for n in 0..=k {
                // The empty complement of the 1x1 matrix has determinant 1.
                let cof = if k == 0 {
                    Poly::one()
                } else {
                    d.complement(n, m).det()
                };
                let signed = if (m + n) % 2 == 0 { cof } else { -cof };
                let (zp, qp, num, _) = gf_parts(k as i64, m as i64, n as i64);
                let expect = num.mul_monomial(
                    &Mono::var_pow(Var::Z, zp as i32).with_exp(Var::Qh, qp as i32),
                    &coef_int(1),
                );
                report.push_poly_eq(format!("cofactor_complement_k{k}_m{m}_n{n}"), &signed, &expect);
            }
        }
    }

    // Odd-length excursions need a horizontal step.
    {
        let g = gf_meander(&MeanderQuery::finite(k, 0, 0, len).unwrap()).series;
        let mut ok = true;
        let mut detail = String::new();
        for l in (1..=len).step_by(2) {
            for (mono, c) in g.coeff(l).terms() {
                if mono.exp(Var::Zh) == 0 {
                    ok = false;
                    detail = format!("grade {l} contains pure-z term with coefficient {c}");
                    break;
                }
            }
        }
        report.push(format!("odd_excursions_need_horizontal_k{k}"), ok, detail);
    }

    // Ceiling stabilization once the ceiling is out of reach.
    {
        let tall = len + 1; // max(m, n) = 0 for excursions, so len suffices
        let a = gf_meander(&MeanderQuery::finite(len, 0, 0, len).unwrap()).series;
        let b = gf_meander(&MeanderQuery::finite(tall, 0, 0, len).unwrap()).series;
        report.push_series_eq("ceiling_stabilization".to_string(), &a, &b);
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duality_small_ceilings() {
        for k in 0..=5 {
            assert!(duality_check(k), "k={k}");
        }
    }

    #[test]
    fn recursion_suite_passes() {
        for k in 1..=3usize {
            let report = recursion_checks(k, 8);
            let failure = report
                .failures()
                .next()
                .map(|c| format!("{} ({})", c.name, c.detail));
            assert_eq!(failure, None, "k={k}");
        }
    }

    #[test]
    fn first_passage_deeper() {
        // The excursion identity holds through order 12 on taller ceilings.
        for k in 1..=4usize {
            let len = 12;
            let g_k = gf_meander(&MeanderQuery::finite(k, 0, 0, len).unwrap()).series;
            let g_km1 = shift_series(
                &gf_meander(&MeanderQuery::finite(k - 1, 0, 0, len).unwrap()).series,
                1,
            );
            let lhs = g_k.mul_poly(&(Poly::one() - Poly::var(Var::Zh)));
            let rhs = Series::one(len).add(&g_km1.mul(&g_k).mul_poly(
                &(Poly::var(Var::Z).pow(2) * Poly::var_pow(Var::Qh, 2)),
            ));
            assert_eq!(lhs, rhs, "k={k}");
        }
    }
}
