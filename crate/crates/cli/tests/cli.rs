use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkgauge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkgauge"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn invariants_cycle_four() {
    let out = run(&["invariants", "--family", "C:4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["scalars"]["kirchhoff_index"], "5");
    for row in v["vertices"].as_array().unwrap() {
        assert_eq!(row["cover_cost"], "10");
    }
    assert_eq!(v["provenance"]["path"], "unicyclic-closed-form");
}

#[test]
fn invariants_hub_reverse_cover_cost() {
    let v = json(&run(&["invariants", "--family", "S:5,3", "--verify"]));
    assert_eq!(v["vertices"][0]["reverse_cover_cost"], "6");
    assert_eq!(v["provenance"]["verified"], true);
}

#[test]
fn invariants_from_file_as_csv() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# path on four vertices\n4 3\n0 1\n1 2\n2 3").unwrap();
    let out = run(&["invariants", f.path().to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    // CC + D = 2W on a tree: end vertex has D = 6, W = 10
    let end: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(end[2], "6");
    assert_eq!(end[7], "14");
}

#[test]
fn parse_errors_carry_line_numbers() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 3\n0 1\n1 x\n2 0").unwrap();
    let out = run(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn unicyclic_only_rejects_trees() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 2\n0 1\n1 2").unwrap();
    let path = f.path().to_str().unwrap();
    assert_eq!(code(&run(&["invariants", path])), 0);
    assert_eq!(code(&run(&["invariants", path, "--unicyclic-only"])), 2);
}

#[test]
fn verify_extremal_cc_five() {
    let out = run(&["verify", "extremal-cc", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    let records = v["extremal_records"].as_array().unwrap();
    let max = records.iter().find(|r| r["label"] == "max CC").unwrap();
    assert_eq!(max["value"], "97/3");
    // P_5^3 in graph6
    let p = json(&run(&["invariants", "--family", "P:5,3"]));
    let g6 = run(&["enumerate", "--n", "5"]);
    assert!(String::from_utf8_lossy(&g6.stdout).contains(max["graph6"].as_str().unwrap()));
    assert_eq!(p["vertices"][0]["cover_cost"], "97/3");
}

#[test]
fn verify_identities_and_bounds() {
    let out = run(&["verify", "identities", "--n-max", "7", "--jobs", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["status"], "pass");
    let out = run(&["verify", "bounds", "--n", "7", "--l", "4"]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", "bounds", "--n", "5", "--l", "5"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["notes"][0]
        .as_str()
        .unwrap()
        .contains("lower CC bound"));
}

#[test]
fn verify_output_independent_of_jobs() {
    let a = run(&["verify", "extremal-rc", "--n", "6", "--jobs", "1"]);
    let b = run(&["verify", "extremal-rc", "--n", "6", "--jobs", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn f1_discrepancy_is_reported() {
    let out = run(&["verify", "f1-discrepancy", "--n-max", "6"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["f1_comparison"].as_array().unwrap();
    let nine = rows.iter().find(|r| r["n"] == 9).unwrap();
    assert_eq!(nine["stated_f1"], "120");
    assert_eq!(nine["pendant_family_min"], "111");
    assert_eq!(nine["stated_matches_observed"], false);
}

#[test]
fn enumerate_counts_and_limits() {
    let out = run(&["enumerate", "--n", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 5);
    let out = run(&["enumerate", "--n", "6", "--count-only"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "13");
    assert_eq!(code(&run(&["enumerate", "--n", "20"])), 3);
    assert_eq!(
        code(&run_env(&["enumerate", "--n", "6"], "WALKGAUGE_MAX_N", "5")),
        3
    );
    let out = run(&["enumerate", "--n", "4", "--format", "edgelist"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("4 4"));
}

#[test]
fn simulate_is_deterministic() {
    let args = [
        "simulate", "--family", "C:3", "--from", "0", "--to", "1", "--trials", "100000", "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["exact"], "2");
    assert!(v["z_score"].as_f64().unwrap().abs() <= 4.0);
}

#[test]
fn simulate_usage_errors() {
    let base = ["simulate", "--family", "C:3", "--from", "0", "--to", "1"];
    let mut zero = base.to_vec();
    zero.extend(["--trials", "0"]);
    assert_eq!(code(&run(&zero)), 2);
    let out = run(&[
        "simulate", "--family", "C:3", "--from", "0", "--to", "7", "--trials", "10",
    ]);
    assert_eq!(code(&out), 2);
}
