use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn curvelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvelab"))
        .args(args)
        .env_remove("CURVELAB_CHAR")
        .env_remove("CURVELAB_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_input(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn plane_genus10_matches_golden_file() {
    let out = curvelab(&["curve", "plane", "--genus", "10", "--char", "10007", "--seed", "42", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/plane_genus10_seed42.json");
    assert_eq!(String::from_utf8(out.stdout.clone()).unwrap(), golden);
    let v = json(&out);
    assert_eq!(v["degree"], 9);
    assert_eq!(v["delta"], 18);
    assert_eq!(v["genus"], 10);
    assert_eq!(v["certified"], true);
}

#[test]
fn identical_command_lines_give_identical_output() {
    let args = ["points", "--count", "12", "--seed", "9", "--format", "json"];
    let a = curvelab(&args);
    let b = curvelab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = curvelab(&["points", "--count", "12", "--seed", "10", "--format", "json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn environment_overrides_defaults() {
    let flags = curvelab(&["points", "--count", "5", "--seed", "3", "--char", "101", "--format", "json"]);
    let env = Command::new(env!("CARGO_BIN_EXE_curvelab"))
        .args(["points", "--count", "5", "--format", "json"])
        .env("CURVELAB_SEED", "3")
        .env("CURVELAB_CHAR", "101")
        .output()
        .unwrap();
    assert_eq!(flags.stdout, env.stdout);
    assert_eq!(json(&env)["char"], 101);
}

#[test]
fn points_report_degree_and_betti() {
    let v = json(&curvelab(&["points", "--count", "18", "--format", "json"]));
    assert_eq!(v["degree"], 18);
    assert_eq!(v["dim"], 1);
    let betti = v["betti"].as_object().unwrap();
    assert_eq!(betti["1,5"], 3);
    assert_eq!(betti["1,6"], 1);
    assert_eq!(betti["2,7"], 3);
}

#[test]
fn koszul_betti_table() {
    let path = write_input("koszul.txt", "char 10007 vars 4\nx0\nx1\nx2\nx3\n");
    let out = curvelab(&["betti", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total: 1 4 6 4 1"), "{text}");
    let v = json(&curvelab(&["betti", "--input", path.to_str().unwrap(), "--format", "json"]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
}

#[test]
fn malformed_input_reports_line_number() {
    let path = write_input("bad.txt", "char 7 vars 3\nx0*x1\n\nx0*x1+x2^\n");
    let out = curvelab(&["betti", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn genus11_search_exhausts_small_budget() {
    let out = curvelab(&["curve", "g11-search", "--char", "5", "--attempts", "10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["found"], false);
    assert_eq!(v["attempts"], 10);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(curvelab(&["bogus"]).status.code(), Some(1));
    assert_eq!(curvelab(&["points", "--count", "3", "--char", "12"]).status.code(), Some(1));
    assert_eq!(curvelab(&["points", "--count", "3", "--attempts", "0"]).status.code(), Some(1));
    assert_eq!(curvelab(&["--help"]).status.code(), Some(0));
}

#[test]
fn tally_of_a_conic() {
    let path = write_input("conic.txt", "char 10007 vars 3\nx0^2+x1^2-x2^2\n");
    let v = json(&curvelab(&["tally", "--input", path.to_str().unwrap(), "--trials", "200", "--format", "json"]));
    let tally = v["tally"].as_object().unwrap();
    let total: u64 = tally.values().map(|n| n.as_u64().unwrap()).sum();
    assert_eq!(total, 200);
    assert!(tally.keys().all(|k| k == "1,1" || k == "2"), "{tally:?}");
}

#[test]
fn output_flag_writes_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("points.json");
    let out = curvelab(&["points", "--count", "4", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["degree"], 4);
}
