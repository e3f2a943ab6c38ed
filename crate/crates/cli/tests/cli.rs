use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use clap::Parser;

use conicgin_cli::{run, Cli};

fn bin(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conicgin")).args(args).arg("--out-dir").arg(out).output().expect("binary runs")
}

fn run_in(args: &[&str], out: &Path) -> conicgin_cli::commands::Outcome {
    let mut full = vec!["conicgin"];
    full.extend_from_slice(args);
    full.extend(["--out-dir", out.to_str().unwrap()]);
    run(&Cli::try_parse_from(full).unwrap()).unwrap()
}

fn read(dir: &Path, name: &str) -> Vec<u8> {
    fs::read(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [a.path(), b.path()] {
        assert!(bin(&["gin", "--r", "5", "--m", "2"], dir).status.success());
        assert!(bin(&["limit", "--r", "6", "--m-max", "3", "--jobs", "2"], dir).status.success());
        assert!(bin(&["resolve", "--r", "7", "--m", "4"], dir).status.success());
    }
    for name in ["gin_r5_m2.json", "gin_r5_m2.csv", "convergence_r6.csv", "limit_r6.svg", "betti_r7_m4.json"] {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name}");
    }
}

#[test]
fn warm_cache_reproduces_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let cold = run_in(&["verify", "--r", "4", "--m-max", "3"], dir.path());
    assert_eq!((cold.cache_hits, cold.cache_misses), (0, 3));
    let first = read(dir.path(), "verify_r4.json");
    let warm = run_in(&["verify", "--r", "4", "--m-max", "3"], dir.path());
    assert_eq!((warm.cache_hits, warm.cache_misses), (3, 0));
    assert_eq!(first, read(dir.path(), "verify_r4.json"));
    // a different seed is a different key
    let other = run_in(&["verify", "--r", "4", "--m-max", "3", "--seed", "7"], dir.path());
    assert_eq!(other.cache_misses, 3);
    // an oracle-only entry is completed, not trusted, when the h-vector is needed
    let partial = run_in(&["limit", "--r", "5", "--m-max", "2"], dir.path());
    assert_eq!(partial.cache_misses, 2);
    let upgraded = run_in(&["gin", "--r", "5", "--m", "2"], dir.path());
    assert_eq!((upgraded.cache_hits, upgraded.cache_misses), (0, 1));
    let names: Vec<String> = fs::read_dir(dir.path().join("cache"))
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert!(names.iter().all(|n| n.starts_with("gin_") && n.ends_with(".json")), "{names:?}");
}

#[test]
fn gin_report_contents() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bin(&["gin", "--r", "4", "--m", "2"], dir.path()).status.success());
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "gin_r4_m2.json")).unwrap();
    assert_eq!(json["alpha"], 4);
    assert_eq!(json["lambdas"], serde_json::json!([5, 4, 2, 1]));
    assert_eq!(json["provenance"]["verdict"], "both-agree");
    assert_eq!(json["provenance"]["t_values"].as_array().unwrap().len(), 4);
    assert_eq!(json["certificate"]["pass"], true);
    assert_eq!(read(dir.path(), "gin_r4_m2.csv"), b"a,lambda_a\n0,5\n1,4\n2,2\n3,1\n");

    assert!(bin(&["gin", "--r", "5", "--m", "3", "--method", "oracle", "--format", "json"], dir.path())
        .status
        .success());
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "gin_r5_m3.json")).unwrap();
    assert_eq!(json["certificate"], "no closed-form certificate");
    assert_eq!(json["provenance"]["verdict"], "oracle-only");
    assert!(!dir.path().join("gin_r5_m3.csv").exists());
}

#[test]
fn limit_matches_reference_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["limit", "--r", "6", "--m-max", "4"], dir.path());
    assert!(out.status.success());
    let csv = String::from_utf8(read(dir.path(), "convergence_r6.csv")).unwrap();
    let last: Vec<&str> = csv.lines().last().unwrap().split(',').collect();
    assert_eq!((last[0], last[3], last[4]), ("4", "2", "13/4"));

    let certified = run_in(&["limit", "--r", "5", "--m-max", "4", "--certify"], dir.path());
    assert!(certified.success);
    let csv = String::from_utf8(read(dir.path(), "convergence_r5.csv")).unwrap();
    let ms: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ms, ["2", "4"]);
}

#[test]
fn resolve_methods() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bin(&["resolve", "--r", "6", "--m", "2"], dir.path()).status.success());
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "betti_r6_m2.json")).unwrap();
    assert_eq!(json["verdict"], "equal");
    assert_eq!((json["initial_degree"].as_u64(), json["top_syzygy_degree"].as_u64()), (Some(4), Some(8)));
    assert!(bin(&["resolve", "--r", "4", "--m", "2", "--method", "both"], dir.path()).status.success());
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "betti_r4_m2.json")).unwrap();
    assert_eq!(json["f0"], serde_json::json!([{"shift": 4, "mult": 3}]));
    assert_eq!(json["f1"], serde_json::json!([{"shift": 6, "mult": 2}]));
    assert_eq!(json["verdict"], "equal");
    assert!(bin(&["resolve", "--r", "3", "--m", "4", "--method", "closed"], dir.path()).status.success());

    let unsupported = bin(&["resolve", "--r", "5", "--m", "3"], dir.path());
    assert_eq!(unsupported.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unsupported.stderr).contains("r=5"));
    let small = bin(&["resolve", "--r", "3", "--m", "2", "--method", "recursion"], dir.path());
    assert_eq!(small.status.code(), Some(2));
}

#[test]
fn verify_lists_skips_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["verify", "--r", "5", "--m-max", "3"], dir.path());
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("PASS recursion_vs_closed_form checked m=[2] skipped m=[1, 3]"), "{stdout}");
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "verify_r5.json")).unwrap();
    assert_eq!(json["all_pass"], true);
    assert_eq!(json["families"].as_array().unwrap().len(), 8);
}

#[test]
fn invalid_invocations_fail() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "--prime", "7"][..],
        &["verify", "--prime", "40000"],
        &["gin", "--r", "1", "--m", "1"],
        &["gin", "--r", "4", "--m", "0"],
        &["gin", "--r", "4", "--m", "1", "--trials", "1"],
        &["limit", "--r", "4", "--m-max", "2", "--jobs", "0"],
        &["limit", "--r", "2", "--m-max", "3", "--certify"],
    ] {
        let out = bin(args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
    let degenerate = bin(&["gin", "--r", "1", "--m", "1"], dir.path());
    assert!(String::from_utf8_lossy(&degenerate.stderr).contains("degenerate"));
    assert!(!bin(&["gin", "--r", "4"], dir.path()).status.success());
}
