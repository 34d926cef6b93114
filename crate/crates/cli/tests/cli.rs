use std::path::PathBuf;
use std::process::{Command, Output};

fn judge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_enthymeme-judge"))
        .args(args)
        .env_remove("ENTHYMEME_JUDGE_MAX_ATOMS")
        .output()
        .expect("binary runs")
}

fn running() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/running.json")
        .to_string_lossy()
        .into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn score_ranks_the_running_example() {
    let out = judge(&["score", "--problem", &running()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let ids: Vec<&str> = report["ranking"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["D1", "D2", "D3"]);
    assert_eq!(report["ranking"][0]["aggregate"]["exact"], "20/21");
}

#[test]
fn product_preset_reorders() {
    let out = judge(&["score", "--problem", &running(), "--preset", "Ld", "--agg", "product"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ranking"][0]["id"], "D2");
}

#[test]
fn threshold_can_select_nothing() {
    let out = judge(&["score", "--problem", &running(), "--preset", "Sd", "--agg", "product", "--threshold", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["selected"], serde_json::json!([]));
}

#[test]
fn table_format_prints_decimals() {
    let out = judge(&["score", "--problem", &running(), "--preset", "Sd", "--agg", "product", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0.056"));
}

#[test]
fn input_errors_exit_one() {
    let missing = judge(&["score", "--problem", "/nonexistent/problem.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error:"));

    let dir = std::env::temp_dir().join(format!("judge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"atoms": ["p"]}"#).unwrap();
    let out = judge(&["score", "--problem", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enthymeme"));

    let threshold = judge(&["score", "--problem", &running(), "--threshold", "1.5"]);
    assert_eq!(threshold.status.code(), Some(1));
}

#[test]
fn every_candidate_failing_exits_two() {
    let out = judge(&["score", "--problem", &running(), "--max-premises", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normalize_prints_weighted_clauses() {
    let out = judge(&["normalize", "--formula", "!(p -> q | !r)", "--weight", "0.6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "{⟨p, 0.6⟩, ⟨¬q, 0.6⟩, ⟨r, 0.6⟩}");

    let taut = judge(&["normalize", "--formula", "p | !p"]);
    assert!(stdout(&taut).contains("tautology"));
    let contra = judge(&["normalize", "--formula", "p & !p", "--weight", "0.3"]);
    assert_eq!(stdout(&contra).trim(), "{⟨⊥, 0.3⟩}  (contradiction)");

    let ordered = judge(&["normalize", "--formula", "q -> p", "--atoms", "p,q"]);
    assert_eq!(stdout(&ordered).trim(), "{⟨p ∨ ¬q, 1⟩}");
}

#[test]
fn normalize_a_problem_lists_every_formula() {
    let out = judge(&["normalize", "--problem", &running()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("D2 premise 3"));
    assert!(text.contains("enthymeme claim"));
}

#[test]
fn check_axioms_without_samples_is_inconclusive() {
    let out = judge(&["check-axioms", "--samples", "0", "--preset", "Ld"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn inverted_measures_are_caught() {
    let out = judge(&["check-axioms", "--samples", "80", "--preset", "Ld", "--mutate", "invert", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let report = json(&out);
    assert_eq!(report["conformance"], "counterexamples");
}
