use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclic-covers"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn describe_abelian_example() {
    let out = run(&["describe", "6", "1", "1", "1", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["stratum"], "H(2,2,2)+3pts");
    assert_eq!(v["genus"], 4);
    assert_eq!(v["sum_abelian"], "1");
    assert_eq!(v["spin"], "even");
    assert_eq!(v["veech"]["index"], 1);
}

#[test]
fn describe_quadratic_example() {
    let v = json(&run(&["describe", "4", "1", "3", "2", "2"]));
    assert_eq!(v["stratum"], "Q(2,2)+4pts");
    assert_eq!(v["pi_h"], "(0,1,6,7,4,5,2,3)");
    assert_eq!(v["pi_v"], "(0,5)(1,4)(2,7)(3,6)");
    assert_eq!(v["spin"], Value::Null);
}

#[test]
fn describe_reduces_representatives() {
    let a = run(&["describe", "6", "7", "-5", "1", "3"]);
    let b = run(&["describe", "6", "1", "1", "1", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn describe_validation_errors_exit_2() {
    let out = run(&["describe", "5", "1", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"], "SumNotDivisible");
    assert_eq!(v["field"], "a");
    let out = run(&["describe", "4", "2", "2", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "NotConnected");
    let out = run(&["describe", "1", "1", "1", "1", "1"]);
    assert_eq!(json(&out)["error"], "DegreeTooSmall");
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["describe", "6", "1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["search", "10", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["check", "1"]).status.code(), Some(2));
}

#[test]
fn describe_text_and_marked_points() {
    let out = run(&["describe", "6", "1", "1", "1", "3", "--format", "cycles"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pi_h (0,1,8,9,4,5)(11,10,3,2,7,6)"));
    assert!(text.contains("spin even"));
    let v = json(&run(&["describe", "6", "1", "1", "1", "3", "--include-marked"]));
    assert_eq!(v["stratum"], "H(2,2,2,0,0,0)");
}

#[test]
fn search_degenerate_abelian() {
    let out = run(&["search", "20", "degenerate-abelian"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["hits"], 2);
    assert_eq!(lines[1]["params"]["a"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(lines[2]["params"]["a"], serde_json::json!([1, 1, 1, 3]));
}

#[test]
fn search_meromorphic_special() {
    let out = run(&["search", "10", "degenerate-minus", "--meromorphic", "--geff-min", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(r#"{"N":3,"a":[1,1,1,3]}"#));
    assert!(text.contains(r#"{"N":4,"a":[1,1,2,4]}"#));
}

#[test]
fn orbit_listing() {
    let v = json(&run(&["orbit", "10", "1", "1", "3", "5"]));
    assert_eq!(v["index"], 3);
    assert_eq!(v["orbit"].as_array().unwrap().len(), 3);
    assert_eq!(v["case_label"], "pair_equal");
}

#[test]
fn check_small_bound() {
    let out = run(&["check", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check bound 2 instances 7\n"));
    assert!(text.ends_with("all checks passed\n"));
    let again = run(&["check", "2", "--jobs", "3"]);
    assert_eq!(again.stdout, text.as_bytes());
}
