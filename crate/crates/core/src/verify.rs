//! Assembly of the full cross-verification suite: every closed form
//! against the brute-force enumerator and against its sibling routes.

use crate::cluster;
use crate::enumeration;
use crate::markers;
use crate::motzkin::{self, MeanderQuery, SpecialCase};
use crate::poly::Coef;
use crate::report::CheckReport;
use crate::series::Series;
use crate::vars::Var;

#[derive(Debug, Clone, Copy)]
pub struct VerifyParams {
    /// Ceiling for the suites.
    pub k: usize,
    /// Series truncation order.
    pub len: usize,
    /// Cluster expansion grade.
    pub grade: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { k: 3, len: 8, grade: 6 }
    }
}

/// Secular-route agreement for every ceiling up to `k`.
pub fn route_agreement_report(k: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for kk in 0..=k {
        let recursive = motzkin::secular_recursive(kk as i64);
        report.push_poly_eq(
            format!("secular_recursive_vs_det_k{kk}"),
            &recursive,
            &motzkin::secular_det(kk),
        );
        match motzkin::secular_closed(kk) {
            Ok(closed) => {
                report.push_poly_eq(format!("secular_recursive_vs_closed_k{kk}"), &recursive, &closed)
            }
            Err(e) => report.push(format!("secular_recursive_vs_closed_k{kk}"), false, e.to_string()),
        }
        match motzkin::secular_dual_reduced(kk) {
            Ok(dual) => {
                report.push_poly_eq(format!("secular_recursive_vs_dual_k{kk}"), &recursive, &dual)
            }
            Err(e) => report.push(format!("secular_recursive_vs_dual_k{kk}"), false, e.to_string()),
        }
    }
    report
}

/// Cofactor formula, propagator powers, and the path enumerator, compared
/// coefficient by coefficient for every endpoint pair.
pub fn tri_route_report(k: usize, len: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 0..=k {
        for n in 0..=k {
            let query = MeanderQuery::finite(k, m, n, len).unwrap();
            let closed = motzkin::gf_meander(&query).series;
            let oracle = motzkin::gf_series_oracle(&query);
            let dp = enumeration::enumerate(k, m, n, len);
            report.push_series_eq(format!("tri_route_closed_vs_oracle_k{k}_m{m}_n{n}"), &closed, &oracle);
            report.push_series_eq(format!("tri_route_oracle_vs_dp_k{k}_m{m}_n{n}"), &oracle, &dp);
            report.push(
                format!("tri_route_nonneg_k{k}_m{m}_n{n}"),
                closed.has_nonneg_integer_coeffs(),
                "",
            );
        }
    }
    report
}

pub fn two_step_report(k: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for kk in 0..=k {
        report.push(
            format!("two_step_embedding_k{kk}"),
            motzkin::embedding_check(kk),
            "",
        );
    }
    report
}

pub fn special_case_report(k: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for kk in 0..=k {
        let f = motzkin::secular_recursive(kk as i64);
        for (case, name, target) in [
            (SpecialCase::QOne, "q_one", f.subst_qh_one()),
            (SpecialCase::Dyck, "dyck", f.subst_zh_zero()),
            (SpecialCase::Uniform, "uniform", f.subst_zh_to_z()),
        ] {
            match motzkin::secular_special(kk, case) {
                Ok(p) => report.push_poly_eq(format!("special_{name}_k{kk}"), &p, &target),
                Err(e) => report.push(format!("special_{name}_k{kk}"), false, e.to_string()),
            }
        }
        report.push(
            format!("secular_duality_k{kk}"),
            motzkin::checks::duality_check(kk),
            "",
        );
        match motzkin::continued_fraction(kk, kk + 1, 4) {
            Ok(cf) => {
                let g = motzkin::gf_meander(&MeanderQuery::finite(kk, 0, 0, 4).unwrap());
                let lhs = &cf.numerator * &g.denominator;
                let rhs = &g.scaled_numerator() * &cf.denominator;
                report.push_poly_eq(format!("continued_fraction_k{kk}"), &lhs, &rhs);
            }
            Err(e) => report.push(format!("continued_fraction_k{kk}"), false, e.to_string()),
        }
    }
    report
}

pub fn cluster_report(k: usize, grade: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for kk in 0..=k {
        let mut sum = Series::zero(grade);
        let mut symmetric = true;
        for a in 1..=grade as u32 {
            let uv = cluster::cluster_term_uv(kk, a);
            if uv != uv.swap_vars(Var::U, Var::V) {
                symmetric = false;
            }
            match cluster::cluster_term(kk, a) {
                Ok(p) => sum.set_coeff(a as usize, p),
                Err(e) => {
                    report.push(format!("cluster_term_k{kk}_a{a}"), false, e.to_string());
                }
            }
        }
        report.push(format!("cluster_uv_symmetry_k{kk}"), symmetric, "");
        match sum.exp() {
            Ok(exp) => {
                let f = Series::from_poly(&motzkin::secular_recursive(kk as i64), grade);
                report.push_series_eq(format!("cluster_exp_vs_secular_k{kk}"), &exp, &f);
            }
            Err(e) => report.push(format!("cluster_exp_vs_secular_k{kk}"), false, e.to_string()),
        }
    }
    // Log expansions against the series-log oracle and the split route.
    for m in 0..=k {
        for n in m..=k {
            let telescoped = match cluster::log_gf(k, m, n, grade) {
                Ok(s) => s,
                Err(e) => {
                    report.push(format!("log_gf_k{k}_m{m}_n{n}"), false, e.to_string());
                    continue;
                }
            };
            let g = motzkin::gf_meander(
                &MeanderQuery::finite(k, m, n, grade + (n - m)).unwrap(),
            );
            let stripped = g
                .series
                .div_monomial(&g.prefactor_mono())
                .expect("series divisible by its prefactor");
            match stripped.truncated(grade).log() {
                Ok(oracle) => report.push_series_eq(
                    format!("log_gf_vs_series_log_k{k}_m{m}_n{n}"),
                    &telescoped,
                    &oracle,
                ),
                Err(e) => report.push(
                    format!("log_gf_vs_series_log_k{k}_m{m}_n{n}"),
                    false,
                    e.to_string(),
                ),
            }
            match cluster::log_gf_split(k, m, n, grade) {
                Ok(split) => report.push_series_eq(
                    format!("log_gf_split_route_k{k}_m{m}_n{n}"),
                    &telescoped,
                    &split,
                ),
                Err(e) => report.push(
                    format!("log_gf_split_route_k{k}_m{m}_n{n}"),
                    false,
                    e.to_string(),
                ),
            }
            // Support of the expanded series against the degree bounds.
            let exp = stripped.truncated(grade);
            let mut ok = true;
            let mut detail = String::new();
            for a in 1..=grade {
                let coeff = exp.coeff(a);
                if coeff.is_zero() {
                    ok = false;
                    detail = format!("empty grade {a}");
                    break;
                }
                let (qmin, qmax) = cluster::q_degree_bounds(k, m, n, a);
                if coeff.qh_support() != Some((2 * qmin as i32, 2 * qmax as i32)) {
                    ok = false;
                    detail = format!(
                        "grade {a} support {:?}, bounds predict {:?}",
                        coeff.qh_support(),
                        (2 * qmin, 2 * qmax)
                    );
                    break;
                }
            }
            report.push(format!("q_degree_support_k{k}_m{m}_n{n}"), ok, detail);
        }
    }
    report
}

/// Closed-form area extremes against the explicit path scan.
pub fn bounds_report(k: usize, max_len: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let max_len = max_len.min(enumeration::LIST_PATHS_MAX_LEN);
    for kk in 0..=k {
        let mut ok = true;
        let mut detail = String::new();
        'outer: for m in 0..=kk {
            for n in 0..=kk {
                for len in 0..=max_len {
                    if len < m.abs_diff(n) {
                        continue;
                    }
                    let predicted = cluster::area_bounds(kk, m, n, len).unwrap();
                    let observed = enumeration::extremal_area_scan(kk, m, n, len).unwrap();
                    if predicted != observed {
                        ok = false;
                        detail = format!(
                            "m={m}, n={n}, len={len}: predicted {predicted:?}, observed {observed:?}"
                        );
                        break 'outer;
                    }
                }
            }
        }
        report.push(format!("area_bounds_vs_scan_k{kk}"), ok, detail);
    }
    report
}

pub fn enumeration_report(len: usize) -> CheckReport {
    let mut report = CheckReport::new();
    // Motzkin numbers at the unweighted specialization.
    let expect = [1i64, 1, 2, 4, 9, 21, 51, 127, 323];
    let cap = len.min(expect.len() - 1);
    let series = enumeration::enumerate(cap.max(1), 0, 0, cap);
    let ones: std::collections::BTreeMap<Var, Coef> = [Var::Z, Var::Zh, Var::Qh]
        .into_iter()
        .map(|v| (v, Coef::from_integer(1.into())))
        .collect();
    let mut ok = true;
    let mut detail = String::new();
    for (l, &want) in expect.iter().enumerate().take(cap + 1) {
        let total = series.coeff(l).eval_rational(&ones).unwrap();
        if total != Coef::from_integer(want.into()) {
            ok = false;
            detail = format!("length {l}: got {total}, want {want}");
            break;
        }
    }
    report.push("motzkin_numbers", ok, detail);

    // DP against the explicit listing on a small window.
    let mut ok = true;
    let mut detail = String::new();
    'outer: for k in 1..=3usize {
        for m in 0..=k {
            for n in 0..=k {
                for l in 0..=len.min(7) {
                    let paths = enumeration::list_paths(k, m, n, l).unwrap();
                    let mut agg = crate::poly::Poly::zero();
                    for (_, st) in &paths {
                        agg.add_term(st.weight(), crate::poly::coef_int(1));
                    }
                    if &agg != enumeration::enumerate(k, m, n, l).coeff(l) {
                        ok = false;
                        detail = format!("k={k}, m={m}, n={n}, l={l}");
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push("dp_vs_listing", ok, detail);
    report
}

/// Everything, in a fixed order.
pub fn full_report(params: &VerifyParams) -> CheckReport {
    let mut report = CheckReport::new();
    report.merge(route_agreement_report(params.k));
    report.merge(tri_route_report(params.k, params.len));
    report.merge(motzkin::checks::recursion_checks(params.k, params.len));
    report.merge(two_step_report(params.k));
    report.merge(special_case_report(params.k));
    if params.k >= 1 {
        report.merge(markers::marked_identity_suite(params.k, params.len.min(8)));
    }
    report.merge(cluster_report(params.k.min(4), params.grade));
    report.merge(bounds_report(params.k, params.len.min(10)));
    report.merge(enumeration_report(params.len));
    report
}
