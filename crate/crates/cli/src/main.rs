//! Command-line front end: computes secular determinants, meander
//! generating functions (marked and unmarked), cluster expansions,
//! enumeration tables and extremal bounds, and runs the verification
//! suite. All output is deterministic JSON.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 internal consistency error (a formula stopped dividing exactly or
//! lost a required symmetry).

mod json;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;

use motzkin_core::markers::MarkerWeights;
use motzkin_core::motzkin::{self, Ceiling, MeanderQuery};
use motzkin_core::report::CheckReport;
use motzkin_core::verify::{self, VerifyParams};
use motzkin_core::{cluster, enumeration, markers, Coef, Error as CoreError, Poly, Var};

use json::{poly_to_json, series_to_json, PolyJson};

#[derive(Parser)]
#[command(
    name = "motzkin",
    version,
    about = "Exact length-area generating functions for height-restricted Motzkin meanders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Secular determinant of the transfer matrix, by one or all routes.
    Secular(CommonArgs),
    /// Meander generating function: prefactor, numerator, denominator, series.
    Gf(CommonArgs),
    /// Boundary-marked meander generating function.
    Marked(CommonArgs),
    /// Cluster terms and the log expansion of the meander.
    Cluster(CommonArgs),
    /// Brute-force enumeration series (optionally marked).
    Enumerate(CommonArgs),
    /// Extremal area and q-degree bounds.
    Bounds(CommonArgs),
    /// Run the full identity suite and report pass/fail per check.
    Verify(CommonArgs),
}

#[derive(Args, Default, Clone)]
struct CommonArgs {
    /// Height ceiling; a nonnegative integer or "inf".
    #[arg(long)]
    k: Option<String>,
    /// Start height.
    #[arg(long)]
    m: Option<usize>,
    /// End height.
    #[arg(long)]
    n: Option<usize>,
    /// Series truncation length (also the path length for `bounds`).
    #[arg(long = "L")]
    len: Option<usize>,
    /// Cluster expansion grade.
    #[arg(long = "A")]
    grade: Option<usize>,
    /// Secular route: recursive, det, closed, dual, or all.
    #[arg(long)]
    route: Option<String>,
    /// Marker weights: "symbolic" or "t=2/5,s=1,T=3/4,S=1" style rationals.
    #[arg(long)]
    weights: Option<String>,
    /// Also report Laurent-mode duality alongside the main output.
    #[arg(long)]
    laurent: bool,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Read defaults from a key=value config file; flags override.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

fn classify(e: CoreError) -> Failure {
    match e {
        CoreError::NonZeroRemainder(_)
        | CoreError::NonUnitConstantTerm(_)
        | CoreError::NotSymmetric(_)
        | CoreError::NotIntegral(_) => Failure::Internal(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CeilingSpec {
    Finite(usize),
    Infinite,
}

impl CeilingSpec {
    fn parse(s: &str) -> Result<Self, Failure> {
        if s == "inf" {
            return Ok(CeilingSpec::Infinite);
        }
        s.parse::<usize>()
            .map(CeilingSpec::Finite)
            .map_err(|_| Failure::Usage(format!("--k expects a nonnegative integer or \"inf\", got {s:?}")))
    }

    fn display(&self) -> String {
        match self {
            CeilingSpec::Finite(k) => k.to_string(),
            CeilingSpec::Infinite => "inf".into(),
        }
    }

    fn require_finite(&self, what: &str) -> Result<usize, Failure> {
        match self {
            CeilingSpec::Finite(k) => Ok(*k),
            CeilingSpec::Infinite => {
                Err(Failure::Usage(format!("{what} needs a finite ceiling")))
            }
        }
    }

    fn to_ceiling(self) -> Ceiling {
        match self {
            CeilingSpec::Finite(k) => Ceiling::Finite(k),
            CeilingSpec::Infinite => Ceiling::Infinite,
        }
    }
}

#[derive(Debug, Clone)]
enum WeightSpec {
    Symbolic,
    Rational {
        t: BigRational,
        s: BigRational,
        tc: BigRational,
        sc: BigRational,
    },
}

impl WeightSpec {
    fn parse(s: &str) -> Result<Self, Failure> {
        if s == "symbolic" {
            return Ok(WeightSpec::Symbolic);
        }
        let one = || BigRational::from_integer(1.into());
        let (mut t, mut cd, mut tc, mut sc) = (one(), one(), one(), one());
        for piece in s.split(',') {
            let (key, value) = piece.split_once('=').ok_or_else(|| {
                Failure::Usage(format!("weight {piece:?} is not key=value"))
            })?;
            let r = BigRational::from_str(value.trim()).map_err(|e| {
                Failure::Usage(format!("weight {key}={value:?}: {e}"))
            })?;
            match key.trim() {
                "t" => t = r,
                "s" => cd = r,
                "T" => tc = r,
                "S" => sc = r,
                other => {
                    return Err(Failure::Usage(format!(
                        "unknown weight key {other:?} (expected t, s, T, S)"
                    )))
                }
            }
        }
        Ok(WeightSpec::Rational { t, s: cd, tc, sc })
    }

    fn to_weights(&self) -> MarkerWeights {
        match self {
            WeightSpec::Symbolic => MarkerWeights::symbolic(),
            WeightSpec::Rational { t, s, tc, sc } => {
                MarkerWeights::from_rationals(t.clone(), s.clone(), tc.clone(), sc.clone())
            }
        }
    }

    fn echo(&self) -> WeightsJson {
        match self {
            WeightSpec::Symbolic => WeightsJson {
                t: "symbolic".into(),
                s: "symbolic".into(),
                tc: "symbolic".into(),
                sc: "symbolic".into(),
            },
            WeightSpec::Rational { t, s, tc, sc } => WeightsJson {
                t: t.to_string(),
                s: s.to_string(),
                tc: tc.to_string(),
                sc: sc.to_string(),
            },
        }
    }
}

/// Flag and config values before defaulting; flags override config.
#[derive(Default, Clone)]
struct RawSpec {
    k: Option<String>,
    m: Option<usize>,
    n: Option<usize>,
    len: Option<usize>,
    grade: Option<usize>,
    route: Option<String>,
    weights: Option<String>,
    laurent: Option<bool>,
    out: Option<PathBuf>,
}

impl RawSpec {
    fn from_args(args: &CommonArgs) -> Self {
        RawSpec {
            k: args.k.clone(),
            m: args.m,
            n: args.n,
            len: args.len,
            grade: args.grade,
            route: args.route.clone(),
            weights: args.weights.clone(),
            laurent: if args.laurent { Some(true) } else { None },
            out: args.out.clone(),
        }
    }

    fn overlay(base: Self, flags: Self) -> Self {
        RawSpec {
            k: flags.k.or(base.k),
            m: flags.m.or(base.m),
            n: flags.n.or(base.n),
            len: flags.len.or(base.len),
            grade: flags.grade.or(base.grade),
            route: flags.route.or(base.route),
            weights: flags.weights.or(base.weights),
            laurent: flags.laurent.or(base.laurent),
            out: flags.out.or(base.out),
        }
    }
}

fn parse_config(path: &Path) -> Result<RawSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut raw = RawSpec::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("config line {}: expected key=value", lineno + 1))
        })?;
        let key = key.trim();
        let value = value.trim();
        let parse_usize = |what: &str| {
            value.parse::<usize>().map_err(|_| {
                Failure::Usage(format!("config line {}: {what} expects an integer", lineno + 1))
            })
        };
        match key {
            "k" => raw.k = Some(value.to_string()),
            "m" => raw.m = Some(parse_usize("m")?),
            "n" => raw.n = Some(parse_usize("n")?),
            "L" => raw.len = Some(parse_usize("L")?),
            "A" => raw.grade = Some(parse_usize("A")?),
            "route" => raw.route = Some(value.to_string()),
            "weights" => raw.weights = Some(value.to_string()),
            "laurent" => {
                raw.laurent = Some(match value {
                    "true" | "1" => true,
                    "false" | "0" => false,
                    _ => {
                        return Err(Failure::Usage(format!(
                            "config line {}: laurent expects true or false",
                            lineno + 1
                        )))
                    }
                })
            }
            "out" => raw.out = Some(PathBuf::from(value)),
            other => {
                return Err(Failure::Usage(format!(
                    "config line {}: unknown key {other:?}",
                    lineno + 1
                )))
            }
        }
    }
    Ok(raw)
}

struct JobSpec {
    ceiling: Option<CeilingSpec>,
    m: usize,
    n: usize,
    len: usize,
    grade: usize,
    route: String,
    weights: WeightSpec,
    weights_given: bool,
    laurent: bool,
    out: Option<PathBuf>,
}

impl JobSpec {
    fn resolve(args: &CommonArgs) -> Result<Self, Failure> {
        let flags = RawSpec::from_args(args);
        let raw = match &args.config {
            Some(path) => RawSpec::overlay(parse_config(path)?, flags),
            None => flags,
        };
        let ceiling = raw.k.as_deref().map(CeilingSpec::parse).transpose()?;
        let weights_given = raw.weights.is_some();
        let weights = raw
            .weights
            .as_deref()
            .map(WeightSpec::parse)
            .transpose()?
            .unwrap_or(WeightSpec::Symbolic);
        Ok(JobSpec {
            ceiling,
            m: raw.m.unwrap_or(0),
            n: raw.n.unwrap_or(0),
            len: raw.len.unwrap_or(8),
            grade: raw.grade.unwrap_or(6),
            route: raw.route.unwrap_or_else(|| "all".into()),
            weights,
            weights_given,
            laurent: raw.laurent.unwrap_or(false),
            out: raw.out,
        })
    }

    fn ceiling(&self, command: &str) -> Result<CeilingSpec, Failure> {
        self.ceiling
            .ok_or_else(|| Failure::Usage(format!("{command} requires --k")))
    }

    fn query(&self, command: &str) -> Result<MeanderQuery, Failure> {
        let spec = self.ceiling(command)?;
        MeanderQuery::new(spec.to_ceiling(), self.m, self.n, self.len).map_err(classify)
    }
}

#[derive(Serialize)]
struct WeightsJson {
    t: String,
    s: String,
    tc: String,
    sc: String,
}

#[derive(Serialize)]
struct RouteEntry {
    route: String,
    polynomial: PolyJson,
}

#[derive(Serialize)]
struct DualityJson {
    substituted: PolyJson,
    holds: bool,
}

#[derive(Serialize)]
struct SecularDoc {
    command: String,
    k: usize,
    routes: Vec<RouteEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    duality: Option<DualityJson>,
}

#[derive(Serialize)]
struct PrefactorJson {
    z_pow: u32,
    qh_pow: u32,
    q_power: String,
}

#[derive(Serialize)]
struct GfDoc {
    command: String,
    k: String,
    k_eff: usize,
    m: usize,
    n: usize,
    #[serde(rename = "L")]
    len: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<WeightsJson>,
    prefactor: PrefactorJson,
    numerator: PolyJson,
    denominator: PolyJson,
    series: Vec<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    duality_holds: Option<bool>,
}

#[derive(Serialize)]
struct ClusterTermEntry {
    a: usize,
    polynomial: PolyJson,
}

#[derive(Serialize)]
struct LogGfJson {
    m: usize,
    n: usize,
    series: Vec<PolyJson>,
}

#[derive(Serialize)]
struct ClusterDoc {
    command: String,
    k: usize,
    #[serde(rename = "A")]
    grade: usize,
    terms: Vec<ClusterTermEntry>,
    log_gf: LogGfJson,
}

#[derive(Serialize)]
struct EnumerateDoc {
    command: String,
    k: String,
    k_eff: usize,
    m: usize,
    n: usize,
    #[serde(rename = "L")]
    len: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<WeightsJson>,
    series: Vec<PolyJson>,
    counts: Vec<String>,
}

#[derive(Serialize)]
struct BoundsDoc {
    command: String,
    k: String,
    k_eff: usize,
    m: usize,
    n: usize,
    #[serde(rename = "l")]
    len: usize,
    area_min2: i64,
    area_max2: i64,
    area_min: String,
    area_max: String,
    excess_length: usize,
    q_power_min: i64,
    q_power_max: i64,
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    detail: String,
}

#[derive(Serialize)]
struct VerifyDoc {
    command: String,
    k: usize,
    #[serde(rename = "L")]
    len: usize,
    #[serde(rename = "A")]
    grade: usize,
    passed: usize,
    failed: usize,
    all_pass: bool,
    checks: Vec<CheckJson>,
}

fn half_area_string(doubled: i64) -> String {
    let r = BigRational::new(doubled.into(), 2.into());
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn poly_json(p: &Poly) -> Result<PolyJson, Failure> {
    poly_to_json(p).map_err(Failure::Internal)
}

fn series_json(s: &motzkin_core::Series) -> Result<Vec<PolyJson>, Failure> {
    series_to_json(s).map_err(Failure::Internal)
}

fn run_secular(spec: &JobSpec) -> Result<String, Failure> {
    let k = spec.ceiling("secular")?.require_finite("secular")?;
    let mut routes = Vec::new();
    let wanted: Vec<&str> = match spec.route.as_str() {
        "all" => vec!["recursive", "det", "closed", "dual"],
        r @ ("recursive" | "det" | "closed" | "dual") => vec![r],
        other => {
            return Err(Failure::Usage(format!(
                "unknown route {other:?} (expected recursive, det, closed, dual, all)"
            )))
        }
    };
    let mut polys = Vec::new();
    for route in &wanted {
        let p = match *route {
            "recursive" => motzkin::secular_recursive(k as i64),
            "det" => motzkin::secular_det(k),
            "closed" => motzkin::secular_closed(k).map_err(classify)?,
            "dual" => motzkin::secular_dual_reduced(k).map_err(classify)?,
            _ => unreachable!(),
        };
        routes.push(RouteEntry {
            route: route.to_string(),
            polynomial: poly_json(&p)?,
        });
        polys.push(p);
    }
    let all_equal = if polys.len() > 1 {
        Some(polys.windows(2).all(|w| w[0] == w[1]))
    } else {
        None
    };
    let duality = if spec.laurent {
        let f = motzkin::secular_recursive(k as i64);
        let substituted = f.dual_substitution(k as i32);
        Some(DualityJson {
            holds: substituted == f,
            substituted: poly_json(&substituted)?,
        })
    } else {
        None
    };
    let doc = SecularDoc {
        command: "secular".into(),
        k,
        routes,
        all_equal,
        duality,
    };
    render(&doc)
}

fn gf_doc(
    command: &str,
    spec: &JobSpec,
    ceiling: CeilingSpec,
    gf: motzkin_core::motzkin::GFResult,
    weights: Option<WeightsJson>,
    duality_holds: Option<bool>,
) -> Result<String, Failure> {
    let doc = GfDoc {
        command: command.into(),
        k: ceiling.display(),
        k_eff: gf.k_eff,
        m: spec.m,
        n: spec.n,
        len: spec.len,
        weights,
        prefactor: PrefactorJson {
            z_pow: gf.prefactor_z,
            qh_pow: gf.prefactor_qh,
            q_power: half_area_string(gf.prefactor_qh as i64),
        },
        numerator: poly_json(&gf.numerator)?,
        denominator: poly_json(&gf.denominator)?,
        series: series_json(&gf.series)?,
        duality_holds,
    };
    render(&doc)
}

fn run_gf(spec: &JobSpec) -> Result<String, Failure> {
    let ceiling = spec.ceiling("gf")?;
    let query = spec.query("gf")?;
    let gf = motzkin::gf_meander(&query);
    let duality_holds = if spec.laurent {
        let k = gf.k_eff;
        let lhs = gf.scaled_numerator();
        let (zp, qp, num, _) =
            motzkin::gf_parts(k as i64, (k - query.n) as i64, (k - query.m) as i64);
        let rhs = num
            .mul_monomial(
                &motzkin_core::Mono::var_pow(Var::Z, zp as i32).with_exp(Var::Qh, qp as i32),
                &Coef::from_integer(1.into()),
            )
            .dual_substitution(k as i32);
        Some(lhs == rhs)
    } else {
        None
    };
    gf_doc("gf", spec, ceiling, gf, None, duality_holds)
}

fn run_marked(spec: &JobSpec) -> Result<String, Failure> {
    let ceiling = spec.ceiling("marked")?;
    let query = spec.query("marked")?;
    let w = spec.weights.to_weights();
    let gf = markers::marked_gf(&query, &w).map_err(classify)?;
    gf_doc("marked", spec, ceiling, gf, Some(spec.weights.echo()), None)
}

fn run_cluster(spec: &JobSpec) -> Result<String, Failure> {
    let k = spec.ceiling("cluster")?.require_finite("cluster")?;
    let (lo, hi) = (spec.m.min(spec.n), spec.m.max(spec.n));
    if hi > k {
        return Err(Failure::Usage(format!(
            "heights m={}, n={} must lie within ceiling k={k}",
            spec.m, spec.n
        )));
    }
    let mut terms = Vec::new();
    for a in 1..=spec.grade {
        let p = cluster::cluster_term(k, a as u32).map_err(classify)?;
        terms.push(ClusterTermEntry {
            a,
            polynomial: poly_json(&p)?,
        });
    }
    let log = cluster::log_gf(k, lo, hi, spec.grade).map_err(classify)?;
    let doc = ClusterDoc {
        command: "cluster".into(),
        k,
        grade: spec.grade,
        terms,
        log_gf: LogGfJson {
            m: lo,
            n: hi,
            series: series_json(&log)?,
        },
    };
    render(&doc)
}

fn run_enumerate(spec: &JobSpec) -> Result<String, Failure> {
    let ceiling = spec.ceiling("enumerate")?;
    let query = spec.query("enumerate")?;
    let k_eff = query.k_eff();
    let (series, weights_echo) = if spec.weights_given {
        if k_eff == 0 {
            return Err(Failure::Usage(
                "marked enumeration needs the ceiling above the floor".into(),
            ));
        }
        (
            enumeration::enumerate_marked(k_eff, spec.m, spec.n, spec.len, &spec.weights.to_weights()),
            Some(spec.weights.echo()),
        )
    } else {
        (
            enumeration::enumerate(k_eff, spec.m, spec.n, spec.len),
            None,
        )
    };
    let ones: BTreeMap<Var, Coef> = Var::ALL
        .iter()
        .map(|v| (*v, Coef::from_integer(1.into())))
        .collect();
    let counts = series
        .coeffs()
        .iter()
        .map(|p| p.eval_rational(&ones).map(|c| c.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(classify)?;
    let doc = EnumerateDoc {
        command: "enumerate".into(),
        k: ceiling.display(),
        k_eff,
        m: spec.m,
        n: spec.n,
        len: spec.len,
        weights: weights_echo,
        series: series_json(&series)?,
        counts,
    };
    render(&doc)
}

fn run_bounds(spec: &JobSpec) -> Result<String, Failure> {
    let ceiling = spec.ceiling("bounds")?;
    let query = spec.query("bounds")?;
    let k_eff = query.k_eff();
    let (min2, max2) = cluster::area_bounds(k_eff, spec.m, spec.n, spec.len).map_err(classify)?;
    let (lo, hi) = (spec.m.min(spec.n), spec.m.max(spec.n));
    let a = spec.len - (hi - lo);
    let (qmin, qmax) = cluster::q_degree_bounds(k_eff, lo, hi, a);
    let doc = BoundsDoc {
        command: "bounds".into(),
        k: ceiling.display(),
        k_eff,
        m: spec.m,
        n: spec.n,
        len: spec.len,
        area_min2: min2,
        area_max2: max2,
        area_min: half_area_string(min2),
        area_max: half_area_string(max2),
        excess_length: a,
        q_power_min: qmin,
        q_power_max: qmax,
    };
    render(&doc)
}

fn run_verify(spec: &JobSpec) -> Result<(String, bool), Failure> {
    let k = match spec.ceiling {
        Some(c) => c.require_finite("verify")?,
        None => VerifyParams::default().k,
    };
    let params = VerifyParams {
        k,
        len: spec.len,
        grade: spec.grade,
    };
    let report: CheckReport = verify::full_report(&params);
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let failed = report.checks.len() - passed;
    let doc = VerifyDoc {
        command: "verify".into(),
        k,
        len: params.len,
        grade: params.grade,
        passed,
        failed,
        all_pass: failed == 0,
        checks: report
            .checks
            .into_iter()
            .map(|c| CheckJson {
                name: c.name,
                pass: c.pass,
                detail: c.detail,
            })
            .collect(),
    };
    Ok((render(&doc)?, failed == 0))
}

fn render<T: Serialize>(doc: &T) -> Result<String, Failure> {
    let mut text = serde_json::to_string_pretty(doc)
        .map_err(|e| Failure::Internal(format!("serialization: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn deliver(spec: &JobSpec, text: &str) -> Result<(), Failure> {
    match &spec.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: &Command) -> Result<u8, Failure> {
    let args = match command {
        Command::Secular(a)
        | Command::Gf(a)
        | Command::Marked(a)
        | Command::Cluster(a)
        | Command::Enumerate(a)
        | Command::Bounds(a)
        | Command::Verify(a) => a,
    };
    let spec = JobSpec::resolve(args)?;
    match command {
        Command::Secular(_) => deliver(&spec, &run_secular(&spec)?).map(|_| 0),
        Command::Gf(_) => deliver(&spec, &run_gf(&spec)?).map(|_| 0),
        Command::Marked(_) => deliver(&spec, &run_marked(&spec)?).map(|_| 0),
        Command::Cluster(_) => deliver(&spec, &run_cluster(&spec)?).map(|_| 0),
        Command::Enumerate(_) => deliver(&spec, &run_enumerate(&spec)?).map(|_| 0),
        Command::Bounds(_) => deliver(&spec, &run_bounds(&spec)?).map(|_| 0),
        Command::Verify(_) => {
            let (text, all_pass) = run_verify(&spec)?;
            deliver(&spec, &text)?;
            Ok(if all_pass { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn internal_errors_map_to_exit_three() {
        for e in [
            CoreError::NonZeroRemainder("x".into()),
            CoreError::NotSymmetric("x".into()),
            CoreError::NotIntegral("x".into()),
            CoreError::NonUnitConstantTerm("x".into()),
        ] {
            assert_eq!(classify(e).exit_code(), 3);
        }
    }

    #[test]
    fn input_errors_map_to_exit_one() {
        for e in [
            CoreError::InvalidQuery("x".into()),
            CoreError::CeilingTooLow(0),
            CoreError::Unreachable { k: 1, m: 0, n: 1, len: 0 },
            CoreError::IndexOutOfRange { a: 1, b: 2 },
            CoreError::LengthGuard { max: 14, got: 20 },
            CoreError::MissingAssignment("z"),
            CoreError::DivisionByZero("qh"),
        ] {
            assert_eq!(classify(e).exit_code(), 1);
        }
    }

    #[test]
    fn weight_spec_parsing() {
        assert!(matches!(
            WeightSpec::parse("symbolic").unwrap(),
            WeightSpec::Symbolic
        ));
        let w = WeightSpec::parse("t=2/5,T=3/4").unwrap();
        match w {
            WeightSpec::Rational { t, s, tc, sc } => {
                assert_eq!(t, BigRational::new(2.into(), 5.into()));
                assert_eq!(s, BigRational::from_integer(1.into()));
                assert_eq!(tc, BigRational::new(3.into(), 4.into()));
                assert_eq!(sc, BigRational::from_integer(1.into()));
            }
            _ => panic!("expected rational weights"),
        }
        assert!(WeightSpec::parse("q=1").is_err());
        assert!(WeightSpec::parse("t;1").is_err());
    }

    #[test]
    fn ceiling_spec_parsing() {
        assert_eq!(CeilingSpec::parse("inf").unwrap(), CeilingSpec::Infinite);
        assert_eq!(CeilingSpec::parse("4").unwrap(), CeilingSpec::Finite(4));
        assert!(CeilingSpec::parse("-1").is_err());
        assert!(CeilingSpec::parse("four").is_err());
    }
}
