mod common;

use std::process::Command;

use common::{run, run_json};
use dspm::json::FamilyJson;

const VALID: &str = "2\n1 2 3 4\n3 4 1 2\n2 1 4 3\n4 3 2 1\n";

#[test]
fn graphs_lists_catalog() {
    let (v, code) = run_json(&["graphs", "--n", "2"]);
    assert_eq!(code, 0);
    let graphs = v["payload"]["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 7);
    assert_eq!(
        graphs
            .iter()
            .filter(|g| g["k"].as_u64().unwrap() >= 1)
            .count(),
        6
    );
    assert_eq!(v["payload"]["buckets"][2]["theta"], "3/1");
    let (v, _) = run_json(&["graphs", "--n", "3"]);
    assert_eq!(v["payload"]["total"], 36);
    let (v, _) = run_json(&["graphs", "--n", "1"]);
    assert_eq!(v["payload"]["total"], 2);
    let (_, code) = run_json(&["graphs", "--n", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn graphs_as_dot() {
    let (out, _) = run(&["graphs", "--n", "2", "--format", "dot"], "");
    assert_eq!(out.stdout.matches("graph g_2_").count(), 7);
}

#[test]
fn count_both_reports_mismatch() {
    let (v, code) = run_json(&["count", "--n", "2", "--mode", "both", "--workers", "2"]);
    assert_eq!(code, 3);
    assert_eq!(v["exit_status"], 3);
    let p = &v["payload"];
    assert_eq!(p["formula"]["ordered"], "144");
    assert_eq!(p["census"]["ordered_pairs"], "112");
    assert_eq!(p["automorphism_weighted"]["ordered"], "112");
    assert_eq!(p["match"], false);
    assert_eq!(p["automorphism_weighted_match"], true);
}

#[test]
fn count_formula_labels_unverified() {
    let (v, code) = run_json(&["count", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["status"], "unverified by census");
    assert!(v["payload"]["formula"]["ordered"].as_str().unwrap().len() > 20);
    let (_, code) = run_json(&["count", "--n", "4", "--mode", "both"]);
    assert_eq!(code, 2);
    let (_, code) = run_json(&["count", "--n", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn census_command() {
    let (v, code) = run_json(&["census", "--n", "2", "--histogram", "--mode", "ordered"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["unordered_pairs"], "56");
    assert_eq!(v["payload"]["histogram"]["7"], "16");
    assert!(v["payload"].get("elapsed_ms").is_none());
    let (_, code) = run_json(&["census", "--n", "4"]);
    assert_eq!(code, 2);
    let (_, code) = run_json(&["census", "--n", "2", "--workers", "0"]);
    assert_eq!(code, 4);
}

#[test]
fn raising_the_cap_needs_confirmation() {
    let (out, log) = run(&["census", "--n", "4", "--enumeration-cap", "4"], "no\n");
    assert_eq!(out.status as i32, 2);
    assert!(log.contains("110075314176 matrices"), "{log}");
    assert!(log.contains("not confirmed"));
}

#[test]
fn progress_goes_to_the_log() {
    let (out, log) = run(&["census", "--n", "2", "--progress-every", "1"], "");
    assert_eq!(out.status as i32, 0);
    assert!(log.contains("worker 0: 1/1 blocks"));
    assert!(!out.stdout.contains("worker"));
}

#[test]
fn sudoku_actions() {
    let (v, _) = run_json(&["sudoku", "count"]);
    assert_eq!(
        (v["payload"]["sigma"].as_str(), v["payload"]["z"].as_str()),
        (Some("288"), Some("12"))
    );
    let (v, _) = run_json(&["sudoku", "cliques"]);
    assert_eq!(v["payload"]["cliques"], "12");
    assert_eq!(v["payload"]["sigma"], "288");
    let (v, _) = run_json(&["sudoku", "z", "--n", "3"]);
    assert_eq!(v["payload"]["z"], "18383222420692992");
    let (_, code) = run_json(&["sudoku", "z", "--n", "2", "--sigma", "289"]);
    assert_eq!(code, 4);
    let (_, code) = run_json(&["sudoku", "count", "--n", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn sample_is_reproducible_and_valid() {
    let args = [
        "sudoku", "sample", "--n", "3", "--seed", "1", "--format", "json",
    ];
    let (a, _) = run(&args, "");
    let (b, _) = run(&args, "");
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["payload"]["size"], 9);
    assert_eq!(v["payload"]["valid"], true);
    let fam: FamilyJson = serde_json::from_value(v["payload"].clone()).unwrap();
    assert!(fam.to_family().unwrap().recompose().unwrap().is_valid());
}

#[test]
fn decompose_grid_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, VALID).unwrap();
    let (v, code) = run_json(&["sudoku", "decompose", "--grid", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    let fam: FamilyJson = serde_json::from_value(v["payload"].clone()).unwrap();
    let fam = fam.to_family().unwrap();
    assert_eq!(dspm::grid::format_grid(&fam.recompose().unwrap()), VALID);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2\n1 1 2 3\n3 4 1 2\n2 1 4 3\n4 3 2 1\n").unwrap();
    let (out, log) = run(
        &["sudoku", "decompose", "--grid", bad.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status as i32, 4);
    assert!(log.contains("value 1 repeats in row 1"), "{log}");

    let garbled = dir.path().join("garbled.txt");
    std::fs::write(&garbled, "2\n1 2 3\n").unwrap();
    let (_, code) = run_json(&["sudoku", "decompose", "--grid", garbled.to_str().unwrap()]);
    assert_eq!(code, 4);
}

#[test]
fn binary_exit_codes_and_out_file() {
    let exe = env!("CARGO_BIN_EXE_dspm");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("count.json");
    let status = Command::new(exe)
        .args(["count", "--n", "3", "--format", "json", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["payload"]["formula"]["unordered"], "630042624");

    let r = Command::new(exe)
        .args(["count", "--n", "2", "--mode", "both", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(3));
    serde_json::from_slice::<serde_json::Value>(&r.stdout).unwrap();
    assert!(String::from_utf8_lossy(&r.stderr).contains("disagree"));

    let r = Command::new(exe)
        .args(["graphs", "--n", "9"])
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(2));
}
