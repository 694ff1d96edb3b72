use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystbraid")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn diagonal_text_form() {
    assert_eq!(stdout(&["matrix", "--rep", "PsiV", "--word", "l(2,3)"]), "diag(t2, t2^-1, t^-1)\n");
    assert_eq!(stdout(&["matrix", "--rep", "PsiV", "--word", "l(1,2)"]), "diag(t^-1, t1, t1^-1)\n");
}

#[test]
fn matrix_json_schema() {
    let v: Value = serde_json::from_str(&stdout(&["--json", "matrix", "--rep", "psi1t", "--word", "a(1,2)"])).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["basis"], serde_json::json!(["e(1,2)", "e(1,3)", "e(2,3)"]));
    assert_eq!(v["rows"][0][0], serde_json::json!([{ "c": 1, "e": { "t": 2 } }]));
    assert_eq!(v["rows"][2][2], serde_json::json!([{ "c": 1, "e": {} }]));
    assert_eq!(v["rows"][0][2], serde_json::json!([]));

    let v: Value = serde_json::from_str(&stdout(&["--json", "matrix", "--rep", "lbk", "--word", "s1"])).unwrap();
    // row e(1,3) of sigma1 is t q (q - 1) e(1,2) + q e(2,3)
    let terms = v["rows"][1][0].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.contains(&serde_json::json!({ "c": -1, "e": { "q": 1, "t": 1 } })));
    assert!(terms.contains(&serde_json::json!({ "c": 1, "e": { "q": 2, "t": 1 } })));
}

#[test]
fn order_and_equality() {
    assert_eq!(stdout(&["order", "--rep", "psi1t", "--word", "a(1,2)^-1 s1 s2"]), "finite(3)\n");
    assert_eq!(stdout(&["order", "--rep", "psi1t", "--word", "s1"]), "infinite\n");
    assert_eq!(stdout(&["order", "--rep", "psi1t", "--word", "1"]), "finite(1)\n");
    assert_eq!(stdout(&["equal", "--rep", "psi1t", "--w1", "a(1,2) a(1,3)", "--w2", "a(1,3) a(1,2)"]), "true\n");
    assert_eq!(stdout(&["equal", "--rep", "PsiV", "--w1", "l(1,2)", "--w2", "l(2,1)"]), "false\n");
    assert_eq!(stdout(&["equal", "--rep", "artin", "--w1", "s1 s2 s1", "--w2", "s2 s1 s2"]), "true\n");
}

#[test]
fn verify_reports_witnesses() {
    let text = stdout(&["verify", "--pres", "vb-mixed", "--rep", "PsiV"]);
    assert!(text.contains("vb-slide[1]") && text.contains("fails") && text.contains("e(1,"), "{text}");
    let text = stdout(&["verify", "--pres", "vb-mixed", "--rep", "PsiV", "--specialize", "t2=t1"]);
    assert!(!text.contains("fails"), "{text}");
    let v: Value = serde_json::from_str(&stdout(&["--json", "verify", "--pres", "braid", "--rep", "psi1t", "--strands", "4"])).unwrap();
    assert!(v.as_array().unwrap().iter().all(|o| o["status"] == "holds" && o["paths_agree"] == true));
    let text = stdout(&["verify", "--pres", "welded-forbidden", "--rep", "welded"]);
    assert!(text.lines().all(|l| l.contains("holds")), "{text}");
}

#[test]
fn automorphisms() {
    assert_eq!(
        stdout(&["auto", "--rep", "phi", "--params", "k=1", "--word", "t1 t2"]),
        "x1 -> x3^-1 x2^-1 x3 x1 x3^-1 x2 x3\nx2 -> x3^-1 x2 x3\nx3 -> x3\n"
    );
    assert_eq!(stdout(&["auto", "--rep", "artin", "--word", "s1", "--apply", "x1"]), "x1 x2 x1^-1\n");
    let out = run(&["auto", "--rep", "phi", "--word", "t1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("needs parameter k"));
}

#[test]
fn tn_vp3_and_rewriting() {
    let text = stdout(&["tnf", "--strands", "4", "--word", "t1 t2 t3 t2^-1 t1^-1 t2 t3^-1 t2^-1"]);
    assert!(text.ends_with("min support: t1\n"), "{text}");
    assert_eq!(stdout(&["tnf", "--word", "t1 t2 t1^-1 t2^-1 t2 t1 t2^-1 t1^-1"]), "normal form: 1\nmin support: none\n");
    let text = stdout(&["vp3", "--check"]);
    assert_eq!(text.lines().filter(|l| l.contains(" holds ")).count(), 11);
    assert!(text.lines().last().unwrap().contains("fails"));
    assert_eq!(stdout(&["vp3", "--word", "l(1,2) l(2,1)^-1 l(2,1) l(1,2)^-1"]), "1\n");
    let gens = stdout(&["rs", "--group", "UB", "--strands", "2", "--letters", "s1,t1"]);
    assert_eq!(gens, "S_{1,t1} = t1 s1^-1\nS_{s1,s1} = s1^2\nS_{s1,t1} = s1 t1\n");
    assert_eq!(stdout(&["rs", "--word", "t1 s1^-1 s1 t1"]), "S_{1,t1} S_{s1,t1}\n");
    assert_eq!(run(&["rs", "--word", "t1"]).status.code(), Some(2));
}

#[test]
fn suite_contract() {
    let out = run(&["suite", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown claim"));

    let a = run(&["--json", "--seed", "7", "suite", "psi1t"]);
    let b = run(&["--json", "--seed", "7", "suite", "psi1t"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let sweep = v.as_array().unwrap().iter().find(|r| r["claim"] == "psi1t-torsion-sweep").unwrap();
    assert_eq!(sweep["status"], "pass");

    // recorded discrepancies do not fail the run
    let out = run(&["suite", "psiv-lambda13"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("recorded-discrepancy"));
    assert!(run(&["suite", "psi1t-pure"]).status.success());
    // a failing required claim does
    assert_eq!(run(&["suite", "psiv-order-two"]).status.code(), Some(1));
    assert!(stdout(&["suite", "--list"]).lines().count() >= 20);
}
