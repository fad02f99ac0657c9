//! End-to-end runs of the `picard3` binary: exit codes, determinism, and text/JSON agreement.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picard3")).args(args).env("PICARD3_NO_COLOR", "1").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn analyze_wehler() {
    let o = run(&["analyze", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("index in Π: 6"));
    assert!(text.contains("torsion exhibited"));
    assert!(text.contains("anti-symplectic automorphisms: yes"));
    assert!(text.contains("C2 * C2 * C2"));
}

#[test]
fn analyze_g8_json() {
    let v = json(&["analyze", "--k", "8", "--l", "-8", "--format", "json"]);
    assert_eq!(v["schema"], "picard3-aut/1");
    assert_eq!(v["congruence"]["subgroup"], serde_json::json!({"kind": "G_n", "n": 8}));
    assert_eq!(v["congruence"]["index_in_Pi"], 192);
    assert_eq!(v["congruence"]["delta_n"], 2);
    assert_eq!(v["congruence"]["free_rank"], 17);
    assert_eq!(v["congruence"]["torsion_bounded_search"]["found"], serde_json::json!([]));
    assert_eq!(v["bounds"]["search"], 20);
    assert_eq!(v["m"], 1);
}

#[test]
fn analyze_text_and_json_agree() {
    let v = json(&["analyze", "--n", "5", "--format", "json", "--bound", "8"]);
    let text = stdout(&run(&["analyze", "--n", "5", "--bound", "8"]));
    let c = &v["congruence"];
    for line in [
        format!("index in Π: {}", c["index_in_Pi"]),
        format!("δ_n: {}", c["delta_n"]),
        format!("free rank: {}", c["free_rank"]),
        format!("m: {}", v["m"]),
        format!("bounds: search {}, samples {}", v["bounds"]["search"], v["bounds"]["samples"]),
    ] {
        assert!(text.contains(&line), "missing {line:?}");
    }
    for s in v["samples"].as_array().unwrap() {
        let a = s["salem"]["A"].as_i64().unwrap();
        assert!(text.contains(&format!("A = {a}")));
    }
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(run(&["analyze", "--k", "0", "--l", "1"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--n", "0"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--n", "2", "--k", "2"]).status.code(), Some(1));
    // U ⊕ ⟨−2⟩ has roots.
    let o = run(&["analyze", "--k", "1", "--l", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("hypotheses not met"));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = run(&["verify", "--trials", "6", "--seed", "7"]);
    let b = run(&["verify", "--trials", "6", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    for suite in ["clifford", "exterior", "theorem"] {
        assert!(text.contains(&format!("PASS {suite}: 6 passed, 0 failed")), "{text}");
    }
}

#[test]
fn verify_suite_filter() {
    let text = stdout(&run(&["verify", "--suite", "exterior", "--trials", "3"]));
    assert!(text.contains("exterior: 3 passed"));
    assert!(!text.contains("clifford"));
    assert!(!text.contains("theorem"));
}

#[test]
fn salem_commands() {
    assert_eq!(run(&["salem", "--matrix", "1,2,2,9"]).status.code(), Some(2));
    let v = json(&["salem", "--matrix", "1,2,4,9", "--format", "json"]);
    assert_eq!(v["A"], 98);
    assert_eq!(v["is_salem"], true);
    let text = stdout(&run(&["salem", "--matrix", "1,0,0,1"]));
    assert!(text.contains("not Salem"));
    assert!(text.contains("A 2"));
    let v = json(&["salem", "--matrix", "-1,-2,-4,-9", "--format", "json"]);
    assert_eq!(v["A"], 98);
    assert_eq!(run(&["salem", "--matrix", "1,2,3"]).status.code(), Some(1));
}

#[test]
fn congruence_commands() {
    let text = stdout(&run(&["congruence", "--n", "8"]));
    assert!(text.contains("index in Π: 192"));
    assert!(text.contains("δ_n: 2"));
    assert!(text.contains("free rank: 17"));
    let v = json(&["congruence", "--n", "2", "--bound", "3", "--format", "json"]);
    assert_eq!(v["index_in_Pi"], 6);
    assert_eq!(v["torsion_free"], "torsion exhibited");
    assert_eq!(run(&["congruence", "--n", "0"]).status.code(), Some(1));
}

#[test]
fn lattice_command() {
    let v = json(&["lattice", "--gram", "0,0,2;0,-4,0;2,0,0", "--format", "json"]);
    assert_eq!(v["signature"], serde_json::json!([1, 2]));
    assert_eq!(v["invariant_factors"], serde_json::json!(["2", "2", "4"]));
    assert_eq!(run(&["lattice", "--gram", "1,0;0,2"]).status.code(), Some(1));
}

#[test]
fn usage_exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--trials", "x"]).status.code(), Some(1));
}

#[test]
fn no_color_output_is_plain() {
    let o = run(&["verify", "--trials", "1"]);
    assert!(!stdout(&o).contains('\x1b'));
}
