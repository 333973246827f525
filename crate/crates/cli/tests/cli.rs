use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avoidance"))
        .args(args)
        .env_remove("AVOIDANCE_BUDGET")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn borders() {
    let v = json(&["borders", "0110"]);
    assert_eq!(v["lengths"], serde_json::json!([1, 4]));
    assert_eq!(strings(&v["proper"]), ["0"]);
    assert_eq!(v["borderless"], false);

    let v = json(&["borders", "01"]);
    assert_eq!(v["lengths"], serde_json::json!([2]));
    assert!(v["proper"].as_array().unwrap().is_empty());
    assert_eq!(v["borderless"], true);

    assert_eq!(
        json(&["borders", "0010010"])["lengths"],
        serde_json::json!([1, 4, 7])
    );
}

#[test]
fn count_all_methods() {
    let v = json(&["count", "0110", "--n", "5", "--method", "all"]);
    assert_eq!(strings(&v["counts"]), ["1", "2", "4", "8", "15", "28"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["byMethod"].as_array().unwrap().len(), 4);
    assert_eq!(
        strings(&json(&["count", "0", "--n", "3"])["counts"]),
        ["1", "1", "1", "1"]
    );
    let p = json(&["count", "0110", "--n", "5"]);
    let q = json(&["count", "1011", "--n", "5"]);
    assert_eq!(p["counts"], q["counts"]);
    assert_eq!(q["method"], "gf");
    assert_eq!(q["k"], 2);
}

#[test]
fn count_is_exact_past_64_bits() {
    let v = json(&["count", "01", "--n", "100", "--method", "recurrence"]);
    // Binary words avoiding 01 are 1^a 0^b: n + 1 of them.
    assert_eq!(v["counts"][100], "101");
    let v = json(&["count", "0000", "--n", "80", "--method", "automaton"]);
    let last = v["counts"][80].as_str().unwrap();
    assert!(last.len() > 20 && last.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn generating_function() {
    let v = json(&["gf", "0110"]);
    assert_eq!(v["numerator"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(v["denominator"], serde_json::json!([1, -2, 0, 1, -1]));
}

#[test]
fn equivalence() {
    let v = json(&["equivalent", "--p", "00", "--q", "01"]);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["firstDifference"], 3);
    let v = json(&["equivalent", "--p", "0110", "--q", "1011"]);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["firstDifference"], Value::Null);
}

#[test]
fn bijection_apply() {
    let v = json(&[
        "bijection",
        "apply",
        "--p",
        "011",
        "--q",
        "001",
        "--word",
        "0001001",
        "--trace",
    ]);
    assert_eq!(v["input"], "0001001");
    assert_eq!(v["output"], "0111011");
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[0]["dir"], "L");
    assert_eq!(steps[0]["index"], 1);
    assert_eq!(steps[0]["before"], "0001001");
    assert_eq!(steps[0]["after"], "0011001");
    assert_eq!(steps[2]["after"], "0111011");

    let v = json(&[
        "bijection",
        "apply",
        "--p",
        "011",
        "--q",
        "001",
        "--word",
        "0111011",
        "--direction",
        "R",
    ]);
    assert_eq!(v["output"], "0001001");
    assert!(v.get("steps").is_none());

    let v = json(&[
        "bijection",
        "apply",
        "--p",
        "011",
        "--q",
        "001",
        "--word",
        "1001000",
        "--direction",
        "R",
        "--reversed",
    ]);
    assert_eq!(v["output"], "1101110");
}

#[test]
fn bijection_verify_and_exit_codes() {
    let v = json(&[
        "bijection",
        "verify",
        "--p",
        "1001",
        "--q",
        "1101",
        "--n",
        "6",
    ]);
    assert_eq!(v["bijection"], true);
    assert!(v["collisions"].as_array().unwrap().is_empty());
    assert!(v["roundtripFailures"].as_array().unwrap().is_empty());

    let out = run(&[
        "bijection",
        "verify",
        "--p",
        "0100",
        "--q",
        "1011",
        "--n",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bijection"], false);
    assert_eq!(v["collisions"][0]["image"], "0100100");
    assert_eq!(
        strings(&v["collisions"][0]["preimages"]),
        ["0101011", "1011100"]
    );
}

#[test]
fn conjugation_and_balance() {
    let v = json(&[
        "bijection",
        "conjugation",
        "--p",
        "011",
        "--q",
        "001",
        "--n",
        "7",
    ]);
    assert_eq!(v["holds"], true);
    let v = json(&[
        "bijection",
        "balance",
        "--p",
        "001",
        "--q",
        "110",
        "--word",
        "1101110",
    ]);
    assert_eq!(v["countQInWord"], 2);
    assert_eq!(v["countPInImage"], 1);
}

#[test]
fn census_formats() {
    let out = run(&["census", "--length", "4"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "length,phiL_pairs,composition_pairs,equivalent_pairs\n4,21,32,32\n"
    );
    let v = json(&["census", "--length", "7", "--format", "json"]);
    assert_eq!(v["phiLPairs"], 1212);
    assert_eq!(v["compositionPairs"], 1708);
    assert_eq!(v["equivalentPairs"], 1716);
    assert_eq!(v["unexplainedPairs"].as_array().unwrap().len(), 8);
    let v = json(&["census", "--sweep", "1..3", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[1]["borderlessFraction"], "1/2");
    assert_eq!(v[1]["borderlessDecimal"], "0.500000");
}

#[test]
fn classify() {
    let v = json(&["classify", "--p", "0110", "--q", "1101"]);
    assert_eq!(
        (
            v["equivalent"].clone(),
            v["phiLBijective"].clone(),
            v["compositionBijective"].clone()
        ),
        (Value::Bool(true), Value::Bool(false), Value::Bool(true))
    );
    let v = json(&["classify", "--p", "1011", "--q", "0100", "--verify-n", "7"]);
    assert_eq!(v["phiLBijective"], false);
    assert_eq!(v["verification"]["bijection"], false);
    assert!(!v["verification"]["collisions"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn usage_and_budget_exit_codes() {
    assert_eq!(run(&["borders", "012"]).status.code(), Some(1));
    assert_eq!(run(&["borders", ""]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "bijection",
            "apply",
            "--p",
            "01",
            "--q",
            "01",
            "--word",
            "0"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(run(&["gf", "01", "--format", "csv"]).status.code(), Some(1));
    assert_eq!(
        run(&["census", "--length", "12", "--budget", "100"])
            .status
            .code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_avoidance"))
        .args(["count", "0", "--n", "12", "--method", "brute"])
        .env("AVOIDANCE_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        run(&[
            "bijection",
            "apply",
            "--p",
            "011",
            "--q",
            "001",
            "--word",
            "0001001",
            "--max-steps",
            "1"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn larger_alphabet_word_format() {
    let v = json(&["borders", "--alphabet", "12", "11,0,11"]);
    assert_eq!(v["word"], "11,0,11");
    assert_eq!(strings(&v["proper"]), ["11"]);
}

#[test]
fn repro_passes() {
    let out = run(&["repro", "--max-length", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
    assert!(!text.contains("FAIL"));
}
