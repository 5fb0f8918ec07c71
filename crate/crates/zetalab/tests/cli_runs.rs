//! End-to-end runs of the command-line surface: artifact determinism,
//! format round-trips, and exit-code mapping.

#![allow(clippy::excessive_precision)]

use clap::Parser;
use zetalab::cli::{run, RunConfig, RunError};
use zetalab::spiral::SpiralTrace;
use zetalab::zeros::ZeroRecord;

fn run_args(args: &[&str]) -> Result<(), RunError> {
    let config = RunConfig::try_parse_from(args).expect("argv parses");
    run(config)
}

#[test]
fn claims_artifacts_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    let base = [
        "zetalab",
        "claims",
        "--sigma-min",
        "0.2",
        "--sigma-max",
        "0.8",
        "--t-min",
        "4.0",
        "--t-max",
        "20.0",
        "--sigma-steps",
        "5",
        "--t-steps",
        "9",
        "--max-m",
        "220",
        "--format",
        "csv",
        "--jobs",
        "3",
        "--output",
    ];
    let mut args_a: Vec<&str> = base.to_vec();
    let a_path = out_a.to_str().unwrap();
    args_a.push(a_path);
    run_args(&args_a).unwrap();

    let mut args_b: Vec<&str> = base.to_vec();
    let b_path = out_b.to_str().unwrap();
    args_b.push(b_path);
    run_args(&args_b).unwrap();

    let json_a = std::fs::read(&out_a).unwrap();
    let json_b = std::fs::read(&out_b).unwrap();
    assert_eq!(json_a, json_b);
    for suffix in ["case1", "case2", "sandwich"] {
        let csv_a = std::fs::read(dir.path().join(format!("a_{suffix}.csv"))).unwrap();
        let csv_b = std::fs::read(dir.path().join(format!("b_{suffix}.csv"))).unwrap();
        assert_eq!(csv_a, csv_b, "{suffix} sweep differs between runs");
        assert!(!csv_a.contains(&b'\r'));
    }
    let text = String::from_utf8(json_a).unwrap();
    assert!(text.starts_with('{') && text.ends_with('\n'));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["config"]["command"], "claims");
    assert_eq!(parsed["config"]["sign"], "-1");
}

#[test]
fn zeros_csv_has_three_rows_below_thirty() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zeros.csv");
    run_args(&[
        "zetalab",
        "zeros",
        "--t-min",
        "0.1",
        "--t-max",
        "30.0",
        "--step",
        "0.05",
        "--output",
        out.to_str().unwrap(),
    ])
    .unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    let data_rows: Vec<&str> =
        text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("ordinate")).collect();
    assert_eq!(data_rows.len(), 3, "csv:\n{text}");
    let first: f64 = data_rows[0].split(',').next().unwrap().parse().unwrap();
    assert!((first - 14.134725).abs() < 1e-4);
    assert!(text.lines().any(|l| l.starts_with("# sign=-1")));
}

#[test]
fn zeros_json_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zeros.json");
    run_args(&[
        "zetalab",
        "zeros",
        "--t-min",
        "10.0",
        "--t-max",
        "16.0",
        "--step",
        "0.1",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ])
    .unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    let records: Vec<ZeroRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(records.len(), 1);
    let again = serde_json::to_string_pretty(&records).unwrap() + "\n";
    assert_eq!(text, again);
}

#[test]
fn trace_first_term_carries_the_constant() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trace.csv");
    run_args(&[
        "zetalab",
        "trace",
        "--sigma",
        "0.3",
        "--t",
        "-14",
        "--max-m",
        "100",
        "--anchor",
        "q",
        "--output",
        out.to_str().unwrap(),
    ])
    .unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    let row_m1 = text.lines().find(|l| l.starts_with("1,")).unwrap();
    let term_abs: f64 = row_m1.split(',').nth(3).unwrap().parse().unwrap();
    let s_norm = (0.3f64 * 0.3 + 14.0 * 14.0).sqrt();
    assert!((term_abs - 0.086434811213308015 / s_norm).abs() < 1e-12);
    // the header echoes the configuration
    assert!(text.lines().any(|l| l.starts_with("# sigma=0.3")));
    assert!(text.lines().any(|l| l.starts_with("# anchor=")));
}

#[test]
fn trace_json_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trace.json");
    run_args(&[
        "zetalab",
        "trace",
        "--sigma",
        "0.3",
        "--t",
        "-14",
        "--max-m",
        "40",
        "--anchor",
        "q",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ])
    .unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    let trace: SpiralTrace = serde_json::from_str(&text).unwrap();
    assert_eq!(trace.points.len(), 41);
    assert!(trace.unfasten_angle[0].is_none());
    let again = serde_json::to_string_pretty(&trace).unwrap() + "\n";
    assert_eq!(text, again);
}

#[test]
fn bounds_and_selftest_run_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bounds.csv");
    run_args(&["zetalab", "bounds", "--output", out.to_str().unwrap()]).unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().any(|l| l.starts_with("x,lambda")));
    // the x = 1 row shows the printed lower bound failing
    let row = text.lines().find(|l| l.starts_with("1.0000")).unwrap();
    assert!(row.ends_with("true,false"));

    run_args(&["zetalab", "selftest"]).unwrap();
}

#[test]
fn exit_codes_reflect_failure_class() {
    // configuration error: invalid tolerance
    let err = run_args(&["zetalab", "omega", "--sigma", "0.3", "--t", "5", "--rel-tol", "0.0"])
        .unwrap_err();
    assert_eq!(err.exit_code(), 1);
    // numeric failure: evaluation at the pole
    let err = run_args(&["zetalab", "omega", "--sigma", "1.0", "--t", "0.0"]).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    // unknown flags never reach run()
    assert!(RunConfig::try_parse_from(["zetalab", "omega", "--bogus", "1"]).is_err());
}

#[test]
fn eval_prints_and_omega_reports_residual() {
    run_args(&["zetalab", "eval", "--sigma", "0.3", "--t", "5.0"]).unwrap();
    run_args(&["zetalab", "omega", "--sigma", "0.3", "--t", "5.0"]).unwrap();
    run_args(&[
        "zetalab",
        "scan",
        "--t-min",
        "10.0",
        "--t-max",
        "16.0",
        "--step",
        "0.1",
    ])
    .unwrap();
}
