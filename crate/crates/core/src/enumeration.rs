//! Brute-force ground truth: dynamic programming over (length, height)
//! and explicit depth-first path listing.
//!
//! The DP is the primary oracle (polynomial cost in length and ceiling);
//! the explicit listing is capped at length 14 and validates the DP and
//! the extremal-area formulas path by path. Areas are doubled integers
//! throughout: a step from height `j` contributes `2j + 1`, `2j`, or
//! `2j - 1` half-plaquettes.

use crate::error::{Error, Result};
use crate::markers::MarkerWeights;
use crate::poly::{coef_int, Coef, Poly};
use crate::series::Series;
use crate::vars::{Mono, Var};

pub const LIST_PATHS_MAX_LEN: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Level,
    Down,
}

/// Per-path statistics: step counts, doubled area, and boundary events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStats {
    pub lu: u32,
    pub lh: u32,
    pub ld: u32,
    /// Doubled area under the path.
    pub a2: i64,
    /// Down-steps landing on the floor.
    pub touch_down: u32,
    /// Horizontal steps taken on the floor.
    pub creep_down: u32,
    /// Up-steps reaching the ceiling.
    pub touch_up: u32,
    /// Horizontal steps taken on the ceiling.
    pub creep_up: u32,
}

impl PathStats {
    /// Recompute statistics from a step sequence.
    pub fn from_steps(k: usize, start: usize, steps: &[Step]) -> Self {
        let mut s = PathStats {
            lu: 0,
            lh: 0,
            ld: 0,
            a2: 0,
            touch_down: 0,
            creep_down: 0,
            touch_up: 0,
            creep_up: 0,
        };
        let mut h = start as i64;
        for &st in steps {
            match st {
                Step::Up => {
                    s.lu += 1;
                    s.a2 += 2 * h + 1;
                    h += 1;
                    if h == k as i64 {
                        s.touch_up += 1;
                    }
                }
                Step::Level => {
                    s.lh += 1;
                    s.a2 += 2 * h;
                    if h == 0 {
                        s.creep_down += 1;
                    }
                    if h == k as i64 {
                        s.creep_up += 1;
                    }
                }
                Step::Down => {
                    s.ld += 1;
                    s.a2 += 2 * h - 1;
                    h -= 1;
                    if h == 0 {
                        s.touch_down += 1;
                    }
                }
            }
        }
        s
    }

    pub fn len(&self) -> u32 {
        self.lu + self.lh + self.ld
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The weight monomial in the unmarked variables.
    pub fn weight(&self) -> Mono {
        Mono::var_pow(Var::Z, (self.lu + self.ld) as i32)
            .with_exp(Var::Zh, self.lh as i32)
            .with_exp(Var::Qh, self.a2 as i32)
    }
}

fn step_weights(k: usize) -> Vec<[Poly; 3]> {
    // weights[j] = [up from j, level at j, down from j]
    (0..=k)
        .map(|j| {
            let up = if j < k {
                Poly::monomial(
                    Mono::var(Var::Z).with_exp(Var::Qh, 2 * j as i32 + 1),
                    Coef::from_integer(1.into()),
                )
            } else {
                Poly::zero()
            };
            let level = Poly::monomial(
                Mono::var(Var::Zh).with_exp(Var::Qh, 2 * j as i32),
                Coef::from_integer(1.into()),
            );
            let down = if j > 0 {
                Poly::monomial(
                    Mono::var(Var::Z).with_exp(Var::Qh, 2 * j as i32 - 1),
                    Coef::from_integer(1.into()),
                )
            } else {
                Poly::zero()
            };
            [up, level, down]
        })
        .collect()
}

fn dp_run(k: usize, m: usize, n: usize, len: usize, weights: &[[Poly; 3]]) -> Series {
    assert!(m <= k && n <= k);
    let mut layer = vec![Poly::zero(); k + 1];
    layer[m] = Poly::one();
    let mut out = Series::zero(len);
    out.set_coeff(0, layer[n].clone());
    for l in 1..=len {
        let mut next = vec![Poly::zero(); k + 1];
        for j in 0..=k {
            if layer[j].is_zero() {
                continue;
            }
            if j < k {
                next[j + 1] = &next[j + 1] + &(&layer[j] * &weights[j][0]);
            }
            next[j] = &next[j] + &(&layer[j] * &weights[j][1]);
            if j > 0 {
                next[j - 1] = &next[j - 1] + &(&layer[j] * &weights[j][2]);
            }
        }
        layer = next;
        out.set_coeff(l, layer[n].clone());
    }
    out
}

/// Sum over all length-`l` paths from `m` to `n` under ceiling `k` of
/// `z^(lu+ld) zh^lh qh^(2A)`, for every `l` up to `len`.
pub fn enumerate(k: usize, m: usize, n: usize, len: usize) -> Series {
    dp_run(k, m, n, len, &step_weights(k))
}

/// Marked variant: boundary steps additionally carry the marker weights,
/// and paths starting on a boundary carry the symmetrizing start factor.
pub fn enumerate_marked(
    k: usize,
    m: usize,
    n: usize,
    len: usize,
    w: &MarkerWeights,
) -> Series {
    assert!(k >= 1, "markers need the ceiling above the floor");
    let mut weights = step_weights(k);
    weights[1][2] = &weights[1][2] * &w.td; // down-step 1 -> 0
    weights[0][1] = &weights[0][1] * &w.cd; // level step on the floor
    weights[k - 1][0] = &weights[k - 1][0] * &w.tu; // up-step (k-1) -> k
    weights[k][1] = &weights[k][1] * &w.cu; // level step on the ceiling
    let raw = dp_run(k, m, n, len, &weights);
    let mut start = Poly::one();
    if m == 0 {
        start = &start * &w.td;
    }
    if m == k {
        start = &start * &w.tu;
    }
    let mut out = Series::zero(len);
    for d in 0..=len {
        out.set_coeff(d, &start * raw.coeff(d));
    }
    out
}

/// Every admissible step sequence of length exactly `len`, depth first
/// (up before level before down), together with its statistics.
pub fn list_paths(
    k: usize,
    m: usize,
    n: usize,
    len: usize,
) -> Result<Vec<(Vec<Step>, PathStats)>> {
    if len > LIST_PATHS_MAX_LEN {
        return Err(Error::LengthGuard {
            max: LIST_PATHS_MAX_LEN,
            got: len,
        });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    dfs(k, n, len, m as i64, &mut steps, &mut out);
    Ok(out
        .into_iter()
        .map(|seq| {
            let stats = PathStats::from_steps(k, m, &seq);
            (seq, stats)
        })
        .collect())
}

fn dfs(
    k: usize,
    target: usize,
    len: usize,
    h: i64,
    steps: &mut Vec<Step>,
    out: &mut Vec<Vec<Step>>,
) {
    let remaining = (len - steps.len()) as i64;
    if (h - target as i64).abs() > remaining {
        return; // cannot reach the endpoint any more
    }
    if steps.len() == len {
        out.push(steps.clone());
        return;
    }
    if h < k as i64 {
        steps.push(Step::Up);
        dfs(k, target, len, h + 1, steps, out);
        steps.pop();
    }
    steps.push(Step::Level);
    dfs(k, target, len, h, steps, out);
    steps.pop();
    if h > 0 {
        steps.push(Step::Down);
        dfs(k, target, len, h - 1, steps, out);
        steps.pop();
    }
}

/// Observed extremes of doubled area over all length-`len` paths.
pub fn extremal_area_scan(k: usize, m: usize, n: usize, len: usize) -> Result<(i64, i64)> {
    let paths = list_paths(k, m, n, len)?;
    if paths.is_empty() {
        return Err(Error::Unreachable { k, m, n, len });
    }
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (_, stats) in &paths {
        lo = lo.min(stats.a2);
        hi = hi.max(stats.a2);
    }
    Ok((lo, hi))
}

/// Aggregate listed paths into the weighted sum the DP produces, with
/// marker exponents taken from the per-path statistics. Used to validate
/// both enumerators.
pub fn aggregate_marked(k: usize, m: usize, paths: &[(Vec<Step>, PathStats)]) -> Poly {
    let mut acc = Poly::zero();
    for (_, st) in paths {
        let mut mono = st.weight();
        mono.exps[Var::Td.index()] =
            st.touch_down as i32 + if m == 0 { 1 } else { 0 };
        mono.exps[Var::Cd.index()] = st.creep_down as i32;
        mono.exps[Var::Tu.index()] =
            st.touch_up as i32 + if m == k { 1 } else { 0 };
        mono.exps[Var::Cu.index()] = st.creep_up as i32;
        acc.add_term(mono, coef_int(1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn zero_length_is_kronecker_delta() {
        assert!(enumerate(3, 1, 1, 0).coeff(0).is_one());
        assert!(enumerate(3, 1, 2, 0).coeff(0).is_zero());
    }

    #[test]
    fn motzkin_numbers_from_dp() {
        // Specializing z = zh = qh = 1 counts paths; with the ceiling out
        // of reach these are the Motzkin numbers.
        let len = 8;
        let s = enumerate(len, 0, 0, len);
        let ones: BTreeMap<Var, Coef> = [Var::Z, Var::Zh, Var::Qh]
            .into_iter()
            .map(|v| (v, Coef::from_integer(1.into())))
            .collect();
        let expect = [1i64, 1, 2, 4, 9, 21, 51, 127, 323];
        for (l, &e) in expect.iter().enumerate() {
            let total = s.coeff(l).eval_rational(&ones).unwrap();
            assert_eq!(total, Coef::from_integer(e.into()), "length {l}");
        }
    }

    #[test]
    fn listing_confirms_small_motzkin_numbers() {
        for (l, e) in [(0usize, 1usize), (1, 1), (2, 2), (3, 4), (4, 9)] {
            let paths = list_paths(l + 1, 0, 0, l).unwrap();
            assert_eq!(paths.len(), e, "length {l}");
        }
    }

    #[test]
    fn two_paths_of_length_two_on_low_ceiling() {
        let paths = list_paths(1, 0, 0, 2).unwrap();
        assert_eq!(paths.len(), 2);
        let seqs: Vec<&[Step]> = paths.iter().map(|(s, _)| s.as_slice()).collect();
        assert!(seqs.contains(&[Step::Up, Step::Down].as_slice()));
        assert!(seqs.contains(&[Step::Level, Step::Level].as_slice()));
        // Weighted: z^2 qh^2 + zh^2.
        let agg = aggregate(&paths);
        assert_eq!(agg, enumerate(1, 0, 0, 2).coeff(2).clone());
    }

    fn aggregate(paths: &[(Vec<Step>, PathStats)]) -> Poly {
        let mut acc = Poly::zero();
        for (_, st) in paths {
            acc.add_term(st.weight(), coef_int(1));
        }
        acc
    }

    #[test]
    fn forced_ascending_path() {
        let paths = list_paths(5, 1, 4, 3).unwrap();
        assert_eq!(paths.len(), 1);
        let (_, st) = &paths[0];
        assert_eq!((st.lu, st.lh, st.ld), (3, 0, 0));
        assert_eq!(st.a2, 16 - 1); // n^2 - m^2 doubled halves
    }

    #[test]
    fn dp_equals_listing_small() {
        for k in 1..=3usize {
            for m in 0..=k {
                for n in 0..=k {
                    for l in 0..=6usize {
                        let paths = list_paths(k, m, n, l).unwrap();
                        let agg = aggregate(&paths);
                        assert_eq!(
                            agg,
                            enumerate(k, m, n, l).coeff(l).clone(),
                            "k={k} m={m} n={n} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn marked_dp_equals_marked_listing() {
        let w = MarkerWeights::symbolic();
        for m in 0..=2usize {
            for n in 0..=2usize {
                for l in 0..=5usize {
                    let paths = list_paths(2, m, n, l).unwrap();
                    let agg = aggregate_marked(2, m, &paths);
                    assert_eq!(
                        agg,
                        enumerate_marked(2, m, n, l, &w).coeff(l).clone(),
                        "m={m} n={n} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn reflection_duality_on_paths() {
        // Reflecting heights j -> k - j maps doubled area a2 to 2kl - a2.
        let (k, m, n, l) = (3usize, 1usize, 2usize, 5usize);
        let direct = enumerate(k, m, n, l).coeff(l).clone();
        let reflected = enumerate(k, k - m, k - n, l).coeff(l).clone();
        let mut mapped = Poly::zero();
        for (mono, c) in direct.terms() {
            let mut mm = *mono;
            mm.exps[Var::Qh.index()] = 2 * (k * l) as i32 - mm.exps[Var::Qh.index()];
            mapped.add_term(mm, c.clone());
        }
        assert_eq!(mapped, reflected);
    }

    #[test]
    fn length_guard_enforced() {
        assert!(matches!(
            list_paths(2, 0, 0, 15),
            Err(Error::LengthGuard { .. })
        ));
    }

    #[test]
    fn long_meander_witness() {
        // A length-20 meander from 1 to 2 under ceiling 5 with 8 up-steps,
        // 5 horizontal, 7 down and area 49.5 exists.
        let s = enumerate(5, 1, 2, 20);
        let mono = Mono::var_pow(Var::Z, 15)
            .with_exp(Var::Zh, 5)
            .with_exp(Var::Qh, 99);
        let c = s.coeff(20).coeff(&mono);
        assert!(c >= coef_int(1), "coefficient is {c}");
    }
}
