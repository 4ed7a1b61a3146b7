use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_terwilliger"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn generate_families() {
    let dir = tempfile::tempdir().unwrap();
    let q4 = dir.path().join("q4.txt");
    assert_eq!(code(&run(&["generate", "--family", "hypercube", "--n", "4", "--out", q4.to_str().unwrap()])), 0);
    let text = fs::read_to_string(&q4).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 16);
    let des = dir.path().join("des.txt");
    assert_eq!(code(&run(&["generate", "--family", "bipartite-double-petersen", "--out", des.to_str().unwrap()])), 0);
    assert_eq!(fs::read_to_string(&des).unwrap().lines().filter(|l| !l.starts_with('#')).count(), 20);
    let bad = run(&["generate", "--family", "cube", "--n", "3", "--out", des.to_str().unwrap()]);
    assert_eq!(code(&bad), 3);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown family"));
}

#[test]
fn analyze_q4() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q4.json");
    let o = run(&["analyze", "--family", "hypercube", "--n", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["verdict"]["condition_i"], false);
    assert_eq!(r["verdict"]["condition_ii"], false);
    assert_eq!(r["verdict"]["equivalence"], true);
    assert_eq!(r["verdict"]["condition_ii_complete"], true);
    assert_eq!(r["intersection_array"]["b"], serde_json::json!([4, 3, 2, 1]));
    assert_eq!(r["analysis"]["condition_i"]["delta2"], serde_json::json!({"num": 0, "den": 1}));
    assert_eq!(r["analysis"]["vertices"].as_array().unwrap().len(), 16);
    assert_eq!(r["analysis"]["vertices"][0]["spectrum"]["grouping_threshold"], 1e-6);
}

#[test]
fn analyze_desargues_subset() {
    let o = run(&["analyze", "--family", "bipartite-double-petersen", "--base-vertices", "0,5,7", "--checks", "fast"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["verdict"]["condition_i"], true);
    assert_eq!(r["verdict"]["condition_ii"], true);
    assert_eq!(r["verdict"]["condition_ii_complete"], false);
    let xs: Vec<u64> = r["analysis"]["vertices"].as_array().unwrap().iter().map(|v| v["x"].as_u64().unwrap()).collect();
    assert_eq!(xs, vec![0, 5, 7]);
    assert!(r["analysis"]["vertices"][0]["oracle"].is_null());
    assert_eq!(
        r["analysis"]["scalars"][0]["closed_form"],
        serde_json::json!({"alpha": {"num": 0, "den": 1}, "beta": {"num": 1, "den": 1}})
    );
}

#[test]
fn gate_failure_exit_code() {
    let o = run(&["analyze", "--family", "hypercube", "--n", "3"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("diameter 3"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_3() {
    for args in [
        &["analyze"][..],
        &["analyze", "--family", "hypercube", "--n", "4", "--input", "x.txt"],
        &["analyze", "--family", "hypercube", "--n", "4", "--base-vertices", "a"],
        &["analyze", "--family", "hypercube", "--n", "4", "--base-vertices", "16"],
        &["analyze", "--family", "hypercube", "--n", "4", "--tol", "-1"],
        &["analyze", "--family", "hypercube", "--n", "4", "--checks", "some"],
        &["analyze", "--family", "hypercube"],
        &["analyze", "--input", "/nonexistent/graph.txt"],
        &["verify-corpus", "--corpus", ""],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(args)), 3, "{args:?}");
    }
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn reports_are_reproducible() {
    let args = ["analyze", "--family", "hypercube", "--n", "5", "--base-vertices", "0,9", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["config"]["seed"], 7);
    assert_eq!(r["analysis"]["vertices"][0]["oracle"]["seeds"], serde_json::json!([7, 8, 9]));
}

#[test]
fn verify_corpus_directory() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    assert_eq!(code(&run(&["generate", "--family", "hypercube", "--n", "4", "--out", &p("a_q4.txt")])), 0);
    fs::write(dir.path().join("b_broken.txt"), "0:1\n1:0,2\n2:0\n").unwrap();
    let out = p("report.json");
    let o = run(&["verify-corpus", "--corpus", dir.path().to_str().unwrap(), "--checks", "fast", "--out", &out]);
    assert_eq!(code(&o), 3);
    let r = json(Path::new(&out));
    assert_eq!(r["graphs"][0]["status"], "analyzed");
    assert_eq!(r["graphs"][1]["status"], "input_error");
    assert!(r["graphs"][1]["message"].as_str().unwrap().contains("does not list"));
    assert_eq!(r["input_errors"], 1);

    fs::remove_file(dir.path().join("b_broken.txt")).unwrap();
    fs::remove_file(&out).unwrap();
    let o = run(&["verify-corpus", "--corpus", dir.path().to_str().unwrap(), "--checks", "fast"]);
    assert_eq!(code(&o), 0);

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["verify-corpus", "--corpus", empty.path().to_str().unwrap()])), 3);
}

#[test]
fn gate_failure_in_corpus_is_surfaced() {
    let dir = tempfile::tempdir().unwrap();
    let q3 = dir.path().join("q3.txt");
    assert_eq!(code(&run(&["generate", "--family", "hypercube", "--n", "3", "--out", q3.to_str().unwrap()])), 0);
    let o = run(&["verify-corpus", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("admissibility gate"));
}
