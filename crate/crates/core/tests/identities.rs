//! Cross-module identity suites at the sizes the library is meant to be
//! trusted at.

use motzkin_core::enumeration;
use motzkin_core::markers::MarkerWeights;
use motzkin_core::motzkin::checks::recursion_checks;
use motzkin_core::verify::{self, VerifyParams};
use motzkin_core::{Poly, Var};

#[test]
fn recursion_suites_through_k4() {
    for k in 0..=4usize {
        let report = recursion_checks(k, 8);
        let failure = report
            .failures()
            .next()
            .map(|c| format!("{} ({})", c.name, c.detail));
        assert_eq!(failure, None, "k={k}");
    }
}

#[test]
fn full_default_verify_suite() {
    let report = verify::full_report(&VerifyParams::default());
    let failed: Vec<_> = report.failures().collect();
    assert!(
        failed.is_empty(),
        "{} checks failed, first: {} ({})",
        failed.len(),
        failed[0].name,
        failed[0].detail
    );
}

#[test]
fn marker_exponents_count_boundary_events() {
    // Every listed path contributes exactly its event counts as marker
    // exponents, including the start-of-path convention.
    let w = MarkerWeights::symbolic();
    for k in 1..=3usize {
        for m in 0..=k {
            for n in 0..=k {
                for len in 0..=6usize {
                    let paths = enumeration::list_paths(k, m, n, len).unwrap();
                    let agg = enumeration::aggregate_marked(k, m, &paths);
                    let dp = enumeration::enumerate_marked(k, m, n, len, &w);
                    assert_eq!(&agg, dp.coeff(len), "k={k} m={m} n={n} len={len}");
                }
            }
        }
    }
}

#[test]
fn gf_result_closed_form_matches_its_series() {
    // series * denominator == prefactor * numerator through the
    // truncation order, for closed meanders, marked meanders and the
    // continued fraction alike.
    use motzkin_core::motzkin::{continued_fraction, gf_meander, MeanderQuery};
    use motzkin_core::series::Series;
    let check = |gf: &motzkin_core::motzkin::GFResult, len: usize| {
        let lhs = gf.series.mul_poly(&gf.denominator);
        let rhs = Series::from_poly(&gf.scaled_numerator(), len);
        assert_eq!(lhs, rhs);
        use num_traits::One;
        assert!(gf.denominator.constant_term().is_one());
    };
    for (k, m, n) in [(0usize, 0usize, 0usize), (2, 0, 2), (3, 1, 2), (3, 3, 0)] {
        let gf = gf_meander(&MeanderQuery::finite(k, m, n, 7).unwrap());
        check(&gf, 7);
    }
    let w = MarkerWeights::symbolic();
    let q = MeanderQuery::finite(2, 0, 1, 6).unwrap();
    check(&motzkin_core::markers::marked_gf(&q, &w).unwrap(), 6);
    check(&continued_fraction(2, 3, 6).unwrap(), 6);
}

#[test]
fn path_stats_invariants() {
    for (k, m, n, len) in [(3usize, 0usize, 2usize, 7usize), (2, 2, 0, 6), (4, 1, 1, 6)] {
        for (steps, st) in enumeration::list_paths(k, m, n, len).unwrap() {
            assert_eq!(steps.len(), len);
            assert_eq!(st.lu as i64 - st.ld as i64, n as i64 - m as i64);
            assert!(st.a2 >= 0);
            assert!(st.touch_down <= st.ld);
            assert!(st.touch_up <= st.lu);
            let recomputed = enumeration::PathStats::from_steps(k, m, &steps);
            assert_eq!(recomputed, st);
        }
    }
}

#[test]
fn dual_route_slice_signs() {
    // In the two-step weights the degree-N slice of the occupation sum
    // carries a uniform sign (-1)^N; mixing only appears after reduction.
    use num_traits::Signed;
    for k in 0..=5usize {
        let dual = motzkin_core::motzkin::secular_dual(k);
        for (m, c) in dual.terms() {
            assert_eq!(
                c.is_negative(),
                m.uv_degree() % 2 == 1,
                "k={k}, monomial degree {}",
                m.uv_degree()
            );
        }
    }
}

#[test]
fn marked_series_counts_are_path_counts() {
    // Specializing every marker to 1 recovers the unmarked enumerator.
    let ones = MarkerWeights::ones();
    let w = MarkerWeights::symbolic();
    for k in 1..=2usize {
        for m in 0..=k {
            let marked = enumeration::enumerate_marked(k, m, 0, 6, &w);
            let plain = enumeration::enumerate(k, m, 0, 6);
            let specialized = enumeration::enumerate_marked(k, m, 0, 6, &ones);
            assert_eq!(specialized, plain);
            // Erasing the marker exponents of the symbolic series gives
            // the same collapse.
            for d in 0..=6usize {
                let mut erased = Poly::zero();
                for (mono, c) in marked.coeff(d).terms() {
                    let mut mm = *mono;
                    for v in [Var::Td, Var::Cd, Var::Tu, Var::Cu] {
                        mm.exps[v.index()] = 0;
                    }
                    erased.add_term(mm, c.clone());
                }
                assert_eq!(&erased, plain.coeff(d), "k={k} m={m} grade {d}");
            }
        }
    }
}
