//! End-to-end tests of the `verify` binary: exit codes, report stability,
//! and the registry listing.

use std::path::Path;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn normalized_report(path: &Path) -> serde_json::Value {
    let text = std::fs::read_to_string(path).expect("report exists");
    let mut value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    for check in value["checks"].as_array_mut().expect("checks array") {
        check["elapsed_ms"] = serde_json::json!(0);
    }
    value
}

#[test]
fn a_bad_modulus_is_a_config_error() {
    let out = verify(&["--ring", "Zmod:3", "--target", "full:2", "--checks", "ljp1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("modulus must make 2 and 3 units"));
}

#[test]
fn unknown_names_are_config_errors() {
    let out = verify(&["--target", "full:2", "--checks", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown check 'bogus'"));

    let out = verify(&["--target", "nosuch:9", "--checks", "ljp1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = verify(&["--target", "full:2", "--checks", "ljp1", "--mutate", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown mutation"));

    let out = verify(&["--checks", "ljp1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--target"));
}

#[test]
fn enumerate_reports_the_six_points_of_the_line_over_f5() {
    let out = verify(&[
        "--ring",
        "Zmod:5",
        "--target",
        "gras:1x1",
        "--checks",
        "enumerate",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("6 points"));
}

#[test]
fn reports_are_stable_for_a_fixed_seed() {
    let dir = tempfile::tempdir().expect("tempdir");
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for path in [&first, &second] {
        let out = verify(&[
            "--ring",
            "Q",
            "--target",
            "gras:1x2",
            "--checks",
            "pg1,tangent",
            "--samples",
            "20",
            "--seed",
            "7",
            "--out",
            path.to_str().expect("utf8 path"),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    let a = normalized_report(&first);
    let b = normalized_report(&second);
    assert_eq!(a, b);
    assert_eq!(a["schema"], serde_json::json!(1));
    assert_eq!(a["all_passed"], serde_json::json!(true));
    assert_eq!(
        serde_json::to_string(&a).expect("serializes"),
        serde_json::to_string(&b).expect("serializes")
    );
}

#[test]
fn the_listing_is_sorted_stable_and_complete() {
    let out1 = verify(&["--list"]);
    let out2 = verify(&["--list"]);
    assert_eq!(out1.status.code(), Some(0));
    assert_eq!(out1.stdout, out2.stdout);
    let text = stdout(&out1);
    let names: Vec<&str> = text
        .lines()
        .filter_map(|line| line.split_whitespace().next())
        .collect();
    assert_eq!(names.len(), 16);
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    for expected in [
        "ljp1",
        "ljp2",
        "fundamental",
        "jordan-id",
        "lts",
        "tkk",
        "pg1",
        "pg2",
        "symm-space",
        "null-system",
        "midpoint",
        "intrinsic",
        "tangent",
        "enumerate",
        "faithful-small",
        "herm-spin",
    ] {
        assert!(names.contains(&expected), "missing {expected}");
    }
}

#[test]
fn injected_defects_fail_with_capped_witnesses() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("mutated.json");
    let out = verify(&[
        "--target",
        "full:2",
        "--checks",
        "ljp1",
        "--samples",
        "50",
        "--mutate",
        "jordan-flip",
        "--out",
        path.to_str().expect("utf8 path"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = normalized_report(&path);
    assert_eq!(report["all_passed"], serde_json::json!(false));
    let check = &report["checks"][0];
    assert!(check["failed"].as_u64().expect("count") > 0);
    let witnesses = check["witnesses"].as_array().expect("witness array");
    assert!(!witnesses.is_empty());
    assert!(witnesses.len() <= 10);
}

#[test]
fn report_order_follows_the_registry_not_the_flag() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("ordered.json");
    let out = verify(&[
        "--target",
        "full:2",
        "--checks",
        "lts,ljp1,fundamental",
        "--samples",
        "10",
        "--out",
        path.to_str().expect("utf8 path"),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report = normalized_report(&path);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .expect("checks array")
        .iter()
        .map(|c| c["name"].as_str().expect("name"))
        .collect();
    assert_eq!(names, ["ljp1", "fundamental", "lts"]);
}
