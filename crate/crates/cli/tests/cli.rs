use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercasimir")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn eigenvalue_both_methods_agree() {
    let out = run(&["eigenvalue", "--m", "1", "--weight", "1;", "--q", "2", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["eigenvalue"], "0");
    assert_eq!(v["method"], "both");
    assert_eq!(v["regularized"], false);
    assert_eq!(v["weight"], "1;");
}

#[test]
fn hook_weight_quadratic() {
    let out = run(&["eigenvalue", "--m", "1", "--weight", "1;1", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["eigenvalue"], "-2");
}

#[test]
fn eigenvalue_is_a_string_for_ranges() {
    let out = run(&["eigenvalue", "--weight", "2,1;1", "--q", "1..3", "--method", "formula"]);
    let v = json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["eigenvalue"].is_string()));
}

#[test]
fn characteristic_identity_passes() {
    let out = run(&["verify", "--claim", "characteristic-identity", "--m", "1", "--weight", "1;"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["parameters"]["roots"], "1,-1");
}

#[test]
fn csv_rows_are_ordered_by_q_then_weight() {
    let out = run(&["table", "--m", "1", "--weight", "1;1", "--weight", "1;", "--q", "1..2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,weight,q,eigenvalue,method,regularized");
    assert_eq!(
        &lines[1..],
        ["1,1;,1,1,both,false", "1,1;1,1,2,both,false", "1,1;,2,0,both,false", "1,1;1,2,-2,both,false"]
    );
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eigenvalue", "--weight", "1,x;"]).status.code(), Some(2));
    assert_eq!(run(&["eigenvalue", "--weight", "1;", "--q", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eigenvalue", "--weight", "1,2;"]).status.code(), Some(3));
    assert_eq!(run(&["eigenvalue", "--weight", "0;1", "--method", "oracle"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "--claim", "no-such-claim"]).status.code(), Some(2));
}

#[test]
fn dimension_cap_falls_back_to_formula() {
    let out = Command::new(env!("CARGO_BIN_EXE_supercasimir"))
        .args(["eigenvalue", "--weight", "2;1", "--q", "2"])
        .env("CASIMIR_DIM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["method"], "formula");
    let forced = Command::new(env!("CARGO_BIN_EXE_supercasimir"))
        .args(["eigenvalue", "--weight", "2;1", "--q", "2", "--method", "oracle"])
        .env("CASIMIR_DIM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(forced.status.code(), Some(4));
}

#[test]
fn decompose_gl11_square() {
    let out = run(&["decompose", "--m", "1", "--n", "1", "--power", "2"]);
    let v = json(&out);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["cyclic_dim_total"], 4);
    let weights: Vec<&str> = v["modules"].as_array().unwrap().iter().map(|x| x["weight"].as_str().unwrap()).collect();
    assert_eq!(weights, ["2;", "1;1"]);
}

#[test]
fn seeded_verification_is_reproducible() {
    let args = ["verify", "--claim", "quadratic-consistency", "--seed", "11", "--samples", "50"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["parameters"]["seed"], "11");
}

#[test]
fn other_verifiers_pass() {
    for args in [
        &["verify", "--claim", "invariance", "--m", "1", "--n", "2", "--power", "2", "--q", "2"][..],
        &["verify", "--claim", "stabilization", "--weight", "1;1", "--q", "3"],
        &["verify", "--claim", "tensor-invariance", "--weight", "1,1;"],
        &["verify", "--claim", "oracle-agreement", "--weight", "2,1;1", "--q", "4"],
        &["verify", "--claim", "normal-ordering", "--weight", "1;1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
