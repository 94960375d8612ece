use std::process::{Command, Output};

use serde::Deserialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochschild"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[derive(Deserialize, Debug, PartialEq)]
struct Row {
    #[serde(rename = "T")]
    t: u32,
    char: u64,
    n: usize,
    dim_hh: usize,
    dim_ker: usize,
    dim_im: usize,
    formula_hh: usize,
    divides: bool,
    #[serde(rename = "match")]
    matches: bool,
}

fn csv_rows(args: &[&str]) -> Vec<Row> {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    csv::Reader::from_reader(out.stdout.as_slice())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

fn hh(rows: &[Row]) -> Vec<usize> {
    rows.iter().map(|r| r.dim_hh).collect()
}

#[test]
fn dims_examples() {
    let rows = csv_rows(&["dims", "--T", "0", "--char", "0", "--max-n", "4"]);
    assert_eq!(hh(&rows), [1, 4, 3, 0, 5]);
    let rows = csv_rows(&["dims", "--T", "1", "--char", "3", "--max-n", "3"]);
    assert_eq!(hh(&rows), [3, 7, 6, 2]);
    assert!(rows.iter().all(|r| r.divides && r.matches));
    let rows = csv_rows(&["dims", "--T", "1", "--char", "0", "--max-n", "3"]);
    assert_eq!(hh(&rows), [3, 6, 5, 2]);
    assert!(rows.iter().all(|r| r.matches && r.dim_hh == r.formula_hh));
}

#[test]
fn header_is_fixed() {
    let out = run(&["dims", "--max-n", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("T,char,n,dim_hh,dim_ker,dim_im,formula_hh,divides,match")
    );
}

#[test]
fn csv_and_json_agree() {
    let args = ["dims", "--T", "0..2", "--char", "0,3", "--max-n", "5"];
    let from_csv = csv_rows(&args);
    let mut json_args = args.to_vec();
    json_args.extend(["--emit", "json"]);
    let out = run(&json_args);
    let from_json: Vec<Row> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv.len(), 3 * 2 * 6);
    let first = &from_csv[0];
    assert_eq!(
        (first.t, first.char, first.n, first.dim_ker, first.dim_im),
        (0, 0, 0, 1, 0)
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "dims", "--T", "0,1,2", "--char", "0,5", "--max-n", "6", "--emit", "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["dims", "--char", "4"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--max-n", "13"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--T", "3..1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["dims", "--max-n", "13", "--cap", "13", "--T", "0"]).status.code(),
        Some(0)
    );
}

#[derive(Deserialize)]
struct Report {
    passed: bool,
    checks: Vec<Check>,
}

#[derive(Deserialize)]
struct Check {
    name: String,
    anchor: String,
    passed: bool,
}

fn verify(args: &[&str]) -> Report {
    let mut full = vec!["verify"];
    full.extend(args);
    let out = run(&full);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(if report.passed { 0 } else { 1 }));
    report
}

#[test]
fn verify_suite_passes() {
    let r = verify(&["--T", "0..1", "--char", "0,3", "--max-n", "10"]);
    for c in &r.checks {
        assert!(c.passed, "{}", c.name);
        assert!(!c.anchor.is_empty());
    }
    assert!(r.passed);
}

#[test]
fn verify_only_ring() {
    let r = verify(&["--only", "ring", "--wmax", "4"]);
    assert!(r.passed);
    assert_eq!(r.checks.len(), 1);
}

#[test]
fn verify_only_oracle() {
    let r = verify(&["--only", "oracle", "--T", "0..1", "--char", "0,3", "--max-n", "4"]);
    assert!(r.passed);
    assert_eq!(r.checks.len(), 4);
}

#[test]
fn ring_dump() {
    let out = run(&["ring"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("relations (6):"));
    assert_eq!(
        text.lines()
            .filter(|l| l.trim_start().starts_with("z_") && l.contains(" - "))
            .count(),
        6
    );
    assert!(text.contains("  1             5          5"));
    assert!(text.contains("  2             9          9"));
}
