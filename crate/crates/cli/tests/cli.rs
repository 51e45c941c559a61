//! End-to-end tests of the binary: flags, config files, exit codes, and
//! output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn motzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn secular_k0_emits_one_minus_zh() {
    let out = motzkin(&["secular", "--k", "0"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["all_equal"], serde_json::json!(true));
    let terms = &doc["routes"][0]["polynomial"]["terms"];
    assert_eq!(terms[0]["coeff"], "1");
    assert_eq!(terms[1]["coeff"], "-1");
    assert_eq!(terms[1]["exp"][1], 1); // the zh slot
    assert_eq!(
        doc["routes"][0]["polynomial"]["variables"],
        serde_json::json!(["z", "zh", "qh", "u", "v", "t", "s", "tc", "sc"])
    );
}

#[test]
fn gf_series_is_geometric_on_the_floor() {
    let out = motzkin(&["gf", "--k", "0", "--m", "0", "--n", "0", "--L", "3"]);
    let doc = stdout_json(&out);
    for (d, coeffs) in doc["series"].as_array().unwrap().iter().enumerate() {
        let terms = coeffs["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 1, "grade {d}");
        assert_eq!(terms[0]["coeff"], "1");
        assert_eq!(terms[0]["exp"][1], d as i64);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["gf", "--k", "3", "--m", "1", "--n", "2", "--L", "6"];
    let a = motzkin(&args);
    let b = motzkin(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn infinite_ceiling_is_echoed_with_resolution() {
    let out = motzkin(&["gf", "--k", "inf", "--m", "0", "--n", "1", "--L", "4"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["k"], "inf");
    assert_eq!(doc["k_eff"], 5);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["secular"],
        vec!["gf", "--k", "2", "--m", "3"],
        vec!["secular", "--k", "nonsense"],
        vec!["secular", "--k", "2", "--route", "bogus"],
        vec!["marked", "--k", "0", "--m", "0", "--n", "0"],
        vec!["bounds", "--k", "5", "--m", "0", "--n", "4", "--L", "2"],
    ] {
        let out = motzkin(&args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
    }
}

#[test]
fn unknown_flags_exit_one() {
    let out = motzkin(&["secular", "--k", "2", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = motzkin(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_small_suite_passes() {
    let out = motzkin(&["verify", "--k", "1", "--L", "4", "--A", "3"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["all_pass"], serde_json::json!(true));
    assert_eq!(doc["failed"], serde_json::json!(0));
    assert!(doc["checks"].as_array().unwrap().len() > 30);
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("job.conf");
    std::fs::write(&path, "# excursion job\nk = 0\nm = 0\nn = 0\nL = 2\n").unwrap();
    let from_config = motzkin(&["gf", "--config", path.to_str().unwrap()]);
    let doc = stdout_json(&from_config);
    assert_eq!(doc["k"], "0");
    assert_eq!(doc["L"], 2);

    let overridden = motzkin(&["gf", "--config", path.to_str().unwrap(), "--L", "4"]);
    let doc = stdout_json(&overridden);
    assert_eq!(doc["L"], 4);
    assert_eq!(doc["k"], "0");

    std::fs::write(&path, "k = 0\nbogus = 1\n").unwrap();
    let bad = motzkin(&["gf", "--config", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fk.json");
    let out = motzkin(&["secular", "--k", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["command"], "secular");
}

#[test]
fn marked_all_ones_matches_unmarked() {
    let marked = stdout_json(&motzkin(&[
        "marked", "--k", "2", "--m", "0", "--n", "1", "--L", "5", "--weights",
        "t=1,s=1,T=1,S=1",
    ]));
    let plain = stdout_json(&motzkin(&["gf", "--k", "2", "--m", "0", "--n", "1", "--L", "5"]));
    assert_eq!(marked["series"], plain["series"]);
    assert_eq!(marked["numerator"], plain["numerator"]);
    assert_eq!(marked["weights"]["t"], "1");
}

#[test]
fn laurent_flag_reports_duality() {
    let doc = stdout_json(&motzkin(&["secular", "--k", "2", "--laurent"]));
    assert_eq!(doc["duality"]["holds"], serde_json::json!(true));
    let doc = stdout_json(&motzkin(&[
        "gf", "--k", "2", "--m", "0", "--n", "1", "--L", "4", "--laurent",
    ]));
    assert_eq!(doc["duality_holds"], serde_json::json!(true));
}

#[test]
fn enumerate_reports_motzkin_counts() {
    let doc = stdout_json(&motzkin(&["enumerate", "--k", "6", "--m", "0", "--n", "0", "--L", "6"]));
    let counts: Vec<String> = doc["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(counts, ["1", "1", "2", "4", "9", "21", "51"]);
}

#[test]
fn bounds_reports_half_areas() {
    let doc = stdout_json(&motzkin(&["bounds", "--k", "5", "--m", "3", "--n", "4", "--L", "5"]));
    assert_eq!(doc["area_min2"], 23);
    assert_eq!(doc["area_min"], "23/2");
    let doc = stdout_json(&motzkin(&["bounds", "--k", "5", "--m", "3", "--n", "4", "--L", "6"]));
    assert_eq!(doc["area_min"], "25/2");
}

#[test]
fn golden_documents_are_stable() {
    for (args, golden) in [
        (
            vec!["secular", "--k", "1", "--route", "recursive"],
            include_str!("golden/secular_k1_recursive.json"),
        ),
        (
            vec!["bounds", "--k", "5", "--m", "3", "--n", "4", "--L", "5"],
            include_str!("golden/bounds_k5_m3_n4_l5.json"),
        ),
    ] {
        let out = motzkin(&args);
        assert!(out.status.success());
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            golden,
            "document drifted for {args:?}"
        );
    }
}

#[test]
fn cluster_terms_and_log_emitted() {
    let doc = stdout_json(&motzkin(&["cluster", "--k", "1", "--A", "4", "--m", "0", "--n", "1"]));
    assert_eq!(doc["terms"].as_array().unwrap().len(), 4);
    assert_eq!(doc["log_gf"]["m"], 0);
    assert_eq!(doc["log_gf"]["n"], 1);
    // Fractional coefficients appear from grade 2 on.
    let grade2 = &doc["log_gf"]["series"][2]["terms"];
    assert!(grade2
        .as_array()
        .unwrap()
        .iter()
        .any(|t| t["coeff"].as_str().unwrap().contains('/')));
}
