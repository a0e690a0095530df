use std::process::{Command, Output};

use rootfold_cli::decode_matrix;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootfold"))
        .args(args)
        .env_remove("ROOTFOLD_MAX_ORDER")
        .env_remove("ROOTFOLD_MAX_GROUP")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gram_a2_and_a1() {
    assert_eq!(json(&["gram", "A2"])["results"]["gram"], serde_json::json!([[-2, 1], [1, -2]]));
    assert_eq!(json(&["gram", "A1"])["results"]["gram"], serde_json::json!([[-2]]));
}

#[test]
fn gram_round_trips() {
    let v = json(&["gram", "D4"]);
    let m = decode_matrix(&v["results"]["gram"]).unwrap();
    assert_eq!(m.to_integer().unwrap(), rootfold::DiagramCollection::parse("D4").unwrap().gram_matrix());
}

#[test]
fn weyl_orders() {
    assert_eq!(json(&["weyl", "D4"])["results"]["order"], 192);
    assert_eq!(json(&["weyl", "B3"])["results"]["order"], 48);
    let v = json(&["weyl", "A1", "--involutions"]);
    assert_eq!(v["results"]["involutions"].as_array().unwrap().len(), 1);
    let v = json(&["involutions", "A1"]);
    assert_eq!(v["command"], "weyl");
    assert_eq!(json(&["weyl", "D4", "--minus-identity"])["results"]["contains_minus_identity"], true);
}

#[test]
fn order_bound_flag_and_env() {
    let out = run(&["weyl", "D4", "--max-order", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_rootfold"))
        .args(["weyl", "D4"])
        .env("ROOTFOLD_MAX_ORDER", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_rootfold"))
        .args(["weyl", "D4", "--max-order", "1000"])
        .env("ROOTFOLD_MAX_ORDER", "100")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn fold_examples() {
    let v = json(&["fold", "A4", "--action", "(1 4)(2 3)"]);
    assert_eq!(v["results"]["fixed_order"], 8);
    assert_eq!(v["results"]["is_isomorphism"], true);
    assert!(v["results"]["orbits"].as_array().unwrap().iter().any(|o| o["kind"] == "paired"));
    let v = json(&["fold", "D4", "--action", "(1 3 4)"]);
    assert_eq!(v["results"]["fixed_order"], 12);
    assert_eq!(v["results"]["quotient_type"], "G2");
    let v = json(&["fold", "A1", "--action", "()"]);
    assert_eq!(v["results"]["group_order"], 1);
    assert_eq!(v["results"]["fixed_order"], 2);
}

#[test]
fn lemma34_examples() {
    let v = json(&["lemma34", "--max-rank", "1"]);
    assert_eq!(v["results"]["cases"].as_array().unwrap().len(), 0);
    assert_eq!(v["results"]["all_non_integral"], true);
    let v = json(&["lemma34", "--max-rank", "6"]);
    let cases = v["results"]["cases"].as_array().unwrap();
    let e6 = cases.iter().find(|c| c["diagram"] == "E6").unwrap();
    assert_eq!(e6["all_integral"], false);
    for c in cases {
        decode_matrix(&c["matrix"]).unwrap();
    }
    let a3 = cases.iter().find(|c| c["diagram"] == "A3").unwrap();
    assert_eq!(a3["witness"]["value"], "1/2");
}

#[test]
fn h1_examples() {
    let v = json(&["h1", "D4", "--action", "(1 3 4)", "--kernel"]);
    assert_eq!(v["results"]["class_count"], 2);
    assert_eq!(v["results"]["kernel"]["trivial_kernel"], true);
    assert_eq!(v["results"]["classes"][1]["character"]["(1 3 4)"], -2);
    assert_eq!(json(&["h1", "A2", "--action", "()"])["results"]["class_count"], 1);
    let v = json(&["h1", "A3", "--action", "(1 3)", "--kernel"]);
    assert_eq!(v["results"]["kernel"]["trivial_kernel"], true);
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "default"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("all passed"));
    let v = json(&["verify", "--suite", "appendix-a"]);
    let case = &v["results"]["cases"][0];
    assert_eq!(case["weyl_order"], 192);
    assert_eq!(case["class_count"], 2);
    assert_eq!(case["printed_match"], "as_printed");
    let out = run(&["verify", "--suite", "/nonexistent/suite.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_suite_exits_one() {
    let dir = std::env::temp_dir().join(format!("rootfold-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.toml");
    std::fs::write(
        &path,
        "format = 1\nname = \"wrong\"\n[[case]]\ndiagram = \"D4\"\naction = [\"(1 3 4)\"]\nexpect_classes = 3\n",
    )
    .unwrap();
    let out = run(&["verify", "--suite", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["gram", "X3"]).status.code(), Some(2));
    assert_eq!(run(&["h1", "A3", "--action", "(1 2)"]).status.code(), Some(2));
    assert_eq!(run(&["h1", "A3", "--action", "(1 9)"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_without_timing() {
    let args = ["h1", "D4", "--action", "(1 3 4)", "--action", "(3 4)", "--kernel", "--format", "json"];
    let (x, y) = (run(&args), run(&args));
    assert_eq!(x.stdout, y.stdout);
    assert!(!String::from_utf8_lossy(&x.stdout).contains("timing_ms"));
    let t = json(&["gram", "A1", "--timing"]);
    assert!(t["timing_ms"].is_u64());
}
