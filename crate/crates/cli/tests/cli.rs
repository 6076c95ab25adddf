//! End-to-end tests of the `griess-lab` binary: subcommand output, exit
//! codes, determinism and golden-corpus handling.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_griess-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn mckay_prints_nine_lines_ending_with_3c() {
    let out = run(&["mckay"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "1A 1/4");
    assert_eq!(lines[8], "3C 1/256");
}

#[test]
fn table_accepts_node_indices_and_labels() {
    let by_label = run(&["table", "5a", "--builtin", "--format", "json"]);
    let by_index = run(&["table", "4", "--builtin", "--format", "json"]);
    assert!(by_label.status.success());
    assert_eq!(stdout(&by_label), stdout(&by_index));
    // derived and builtin agree
    let derived = run(&["table", "5A", "--derive", "--format", "json"]);
    let d: serde_json::Value = serde_json::from_str(&stdout(&derived)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&by_label)).unwrap();
    assert_eq!(d["products"], b["products"]);
    assert_eq!(d["gram"], b["gram"]);
}

#[test]
fn unknown_case_is_a_usage_error() {
    let out = run(&["table", "7C"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["char", "para", "6", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_equality() {
    let out = run(&["verify", "3C", "--order", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("EQUAL through q^8"));
    // 4A has no identity: usage error
    let out = run(&["verify", "4A"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_is_deterministic_and_parallel_invariant() {
    let a = run(&["solve", "2B", "--seed", "11", "--format", "json"]);
    let b = run(&["solve", "2B", "--seed", "11", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let c = run(&["solve", "2B", "--seed", "11", "--paths-parallel", "2", "--format", "json"]);
    assert_eq!(stdout(&a), stdout(&c));
    // a different seed still finds the same endpoint structure
    let d = run(&["solve", "2B", "--seed", "12", "--format", "json"]);
    let dv: serde_json::Value = serde_json::from_str(&stdout(&d)).unwrap();
    assert_eq!(dv["endpoints"].as_array().unwrap().len(), 4);
}

#[test]
fn check_solutions_passes_for_all_cases() {
    for case in ["1A", "2A", "3A", "4A", "5A", "6A", "4B", "2B", "3C"] {
        let out = run(&["check-solutions", case]);
        assert!(out.status.success(), "case {case}");
        assert!(stdout(&out).contains("exact"));
    }
}

#[test]
fn stabilizer_orders_match_the_published_bounds() {
    for (case, order) in [
        ("6A", 12),
        ("4B", 8),
        ("4A", 8),
        ("3C", 6),
        ("5A", 120),
        ("2A", 6),
        ("2B", 2),
        ("3A", 6),
        ("1A", 1),
    ] {
        let out = run(&["stabilizer", case, "--format", "json"]);
        assert!(out.status.success(), "case {case}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["order"], serde_json::json!(order), "case {case}");
    }
}

#[test]
fn char_subcommands_print_expansions() {
    let out = run(&["char", "para", "9", "3", "--order", "6"]);
    assert!(out.status.success());
    // ch W9(0,6) = q^2 + q^3 + 3q^4 + 5q^5 + ...
    let text = stdout(&out);
    assert!(text.contains("q^2 + q^3 + 3*q^4 + 5*q^5"), "{text}");
    let out = run(&["char", "vir", "9", "1", "4", "--order", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // leading term q^{31/16}: denominator 4*11*12 = 528, 31/16 = 1023/528
    assert_eq!(v["denominator"], serde_json::json!(528));
    assert_eq!(v["coeffs"]["1023"], serde_json::json!("1"));
}

#[test]
fn golden_corpus_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    let out = bin().args(["golden", "--update"]).env("GRIESS_LAB_CORPUS", &corpus).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // clean comparison passes
    let out = bin().args(["golden"]).env("GRIESS_LAB_CORPUS", &corpus).output().unwrap();
    assert!(out.status.success());
    assert!(!stdout(&out).contains("[DIFF]"));

    // corrupt one entry: mismatch is reported by name, exit code 1
    corrupt(&corpus.join("mckay.json"));
    let out = bin().args(["golden"]).env("GRIESS_LAB_CORPUS", &corpus).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("[DIFF] mckay.json"), "{text}");
    assert!(!text.contains("[DIFF] table"), "unrelated entries flagged");

    // a missing entry is a distinct failure
    std::fs::remove_file(corpus.join("mckay.json")).unwrap();
    let out = bin().args(["golden"]).env("GRIESS_LAB_CORPUS", &corpus).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[MISS] mckay.json"));
}

fn corrupt(path: &Path) {
    let text = std::fs::read_to_string(path).unwrap();
    let bad = text.replace("\"1/4\"", "\"1/5\"");
    assert_ne!(text, bad, "corruption target not found");
    std::fs::write(path, bad).unwrap();
}

#[test]
fn all_runs_the_acceptance_suite() {
    let out = run(&["all"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 13);
    assert!(text.contains("all 13 criteria passed"));
}
