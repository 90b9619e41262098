use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn selmer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selmer")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn shipped(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name);
    std::fs::read_to_string(path).unwrap()
}

/// A data directory with the shipped files, the certificate file edited by `edit`.
fn data_dir(tag: &str, edit: impl Fn(String) -> String) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(tag);
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("cusp_certificates.txt"), edit(shipped("cusp_certificates.txt"))).unwrap();
    for t in ["table_p2.txt", "table_p3.txt"] {
        std::fs::write(dir.join(t), shipped(t)).unwrap();
    }
    dir
}

fn failing_ids(doc: &Value) -> Vec<String> {
    doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap())
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn injected_gap_fault_exits_one() {
    let dir = data_dir("gap-fault", |t| t.replacen("gap = .1", "gap = 0.0", 1));
    let o = selmer(&["--json", "--data", dir.to_str().unwrap(), "cusp", "verify"]);
    assert_eq!(o.status.code(), Some(1));
    let ids = failing_ids(&json(&o));
    assert!(ids.iter().any(|id| id == "case 1 gap ≥ 1/10"), "{ids:?}");

    let file = dir.join("cusp_certificates.txt");
    let o = selmer(&["--json", "cusp", "verify", "--certificates", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(failing_ids(&json(&o)).iter().any(|id| id == "case 1 gap ≥ 1/10"));
}

#[test]
fn shipped_certificates_report_their_known_failures() {
    let o = selmer(&["--json", "cusp", "verify"]);
    assert_eq!(o.status.code(), Some(1));
    let ids = failing_ids(&json(&o));
    assert!(ids.iter().all(|id| id.starts_with("case 4 ") || id.starts_with("case 6 ")), "{ids:?}");
    assert!(ids.contains(&"case 4 gap matches".to_string()));
}

#[test]
fn parity_bound_is_three_quarters() {
    let o = selmer(&["ranks", "bounds", "--parity", "equidistributed"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["optimum"]["fraction"], "3/4");
    let w: Vec<&str> = doc["witness"].as_array().unwrap().iter().map(|x| x["fraction"].as_str().unwrap()).collect();
    assert_eq!(w, ["3/8", "1/2", "1/8"]);
    assert_eq!(doc["combination"]["bound"]["fraction"], "88497/100000");
    assert_eq!(doc["dual"].as_array().unwrap().len(), 3);
}

#[test]
fn rank_objectives_and_averages() {
    let o = selmer(&["ranks", "bounds", "--avg-selmer", "6", "--parity", "none"]);
    assert_eq!(json(&o)["optimum"]["fraction"], "21/20");
    let o = selmer(&["ranks", "bounds", "--objective", "rank01", "--parity", "equidistributed"]);
    assert_eq!(json(&o)["optimum"]["fraction"], "7/8");
    let o = selmer(&["ranks", "bounds", "--objective", "rank0", "--parity", "equidistributed", "--avg-selmer", "27/2"]);
    assert_eq!(json(&o)["optimum"]["fraction"], "1/16");
    let o = selmer(&["ranks", "bounds", "--family-density", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pair_counts() {
    let o = selmer(&["--json", "count", "ij", "--x", "100", "--sign", "+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["counts"]["+"]["count"], "66");
    let doc = json(&selmer(&["--json", "count", "ij", "--x", "100"]));
    let n = |k: &str| doc["result"]["counts"][k]["count"].as_str().unwrap().parse::<u64>().unwrap();
    assert_eq!(n("+") + n("-") + n("0"), doc["result"]["total"].as_str().unwrap().parse::<u64>().unwrap());
    assert_eq!(selmer(&["count", "ij", "--x", "1/2"]).status.code(), Some(2));
}

#[test]
fn davenport_sample() {
    let o = selmer(&["--json", "count", "davenport", "--region", "cube", "--t", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["count"], 1331);
}

#[test]
fn screen_and_classify() {
    let zeros = "a12,a13,b12,b13,c12,c13,d12,d13,e12,e13";
    let o = selmer(&["--json", "algebra", "screen", "--zeros", zeros]);
    assert_eq!(json(&o)["result"]["pattern"], 1);
    assert_eq!(json(&o)["result"]["q1_factorization"]["pattern"], "Case1");
    let o = selmer(&["--json", "roots", "classify", "--a", "-1", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["result"]["discriminant"], "-368");
    assert_eq!(doc["result"]["local"][0]["p"], 23);
    assert_eq!(doc["result"]["local"][0]["d_p"], -1);
    assert_eq!(selmer(&["roots", "classify", "--a", "0", "--b", "0"]).status.code(), Some(2));
}

#[test]
fn pfaffian_suite_passes() {
    let o = selmer(&["algebra", "pfaffian", "--trials", "60"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: PASS"));
}

#[test]
fn usage_and_data_errors_exit_two() {
    assert_eq!(selmer(&["bogus"]).status.code(), Some(2));
    assert_eq!(selmer(&["cusp", "verify", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(selmer(&["--data", "/nonexistent/dir", "cusp", "verify"]).status.code(), Some(2));
    let dir = data_dir("garbled", |_| "case 1\nZ = nonsense\n".into());
    assert_eq!(selmer(&["--data", dir.to_str().unwrap(), "cusp", "verify"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["--json", "cusp", "verify"][..], &["count", "ij", "--x", "12345/7"], &["--threads", "2", "cusp", "partition"]] {
        assert_eq!(stdout(&selmer(args)), stdout(&selmer(args)), "{args:?}");
    }
}
