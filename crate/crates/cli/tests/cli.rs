use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclotorus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

/// The final envelope, with timing removed.
fn envelope(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let mut v = lines(&out).pop().unwrap_or(Value::Null);
    if let Some(obj) = v.as_object_mut() {
        assert!(obj
            .remove("elapsed_ms")
            .is_some_and(|t| t.as_f64().is_some_and(|t| t >= 0.0)));
    }
    (out.status.code().unwrap(), v)
}

fn strs(v: &[&str]) -> Value {
    json!(v)
}

#[test]
fn phi_fifteen() {
    let (code, v) = envelope(&["phi", "15"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "phi");
    assert_eq!(v["params"], json!({"n": 15}));
    assert_eq!(
        v["result"]["coeffs"],
        strs(&["1", "-1", "0", "1", "-1", "1", "0", "-1", "1"])
    );
}

#[test]
fn inverse_of_phi1_mod_phi15() {
    let (code, v) = envelope(&["inv", "1", "15"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["num"],
        strs(&["0", "-1", "-1", "0", "-1", "0", "0", "-1"])
    );
    assert_eq!(v["result"]["den"], "1");
}

#[test]
fn resultant_and_eval() {
    assert_eq!(envelope(&["res", "6", "3"]).1["result"], "4");
    assert_eq!(envelope(&["eval", "15", "2"]).1["result"], "151");
    assert_eq!(envelope(&["eval", "1", "-3"]).1["result"], "-4");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["inv", "3", "3"]).status.code(), Some(3));
    assert_eq!(run(&["phi", "0"]).status.code(), Some(2));
    assert_eq!(run(&["phi", "ten"]).status.code(), Some(2));
    assert_eq!(run(&["phi", "100000"]).status.code(), Some(3));
    assert_eq!(
        run(&["verify", "--mode", "theorem1", "--max", "40"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--mode", "bogus", "--max", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["torus", "params", "--q", "4", "--p", "3", "--r", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["torus", "roundtrip", "--q", "0", "--p", "3", "--r", "5"])
            .status
            .code(),
        Some(2)
    );
    let big = run(&[
        "torus",
        "roundtrip",
        "--q",
        "1000003",
        "--p",
        "3",
        "--r",
        "5",
        "--count",
        "1",
    ]);
    assert_eq!(big.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&big.stderr).contains("ceiling"));
    assert!(big.stdout.is_empty());
}

#[test]
fn verify_modes_pass() {
    for (mode, max, checked) in [
        ("theorem1", "13", 30 * 7),
        ("resultants", "30", 435),
        ("alternation", "13", 30),
        ("lamleung", "31", 55),
    ] {
        let out = run(&["verify", "--mode", mode, "--max", max]);
        assert_eq!(out.status.code(), Some(0), "{mode}");
        let all = lines(&out);
        let summary = &all[all.len() - 1];
        assert_eq!(summary["result"]["checked"], checked, "{mode}");
        assert_eq!(summary["result"]["failed"], 0);
        assert_eq!(all.len(), checked + 1);
        assert!(all[..checked].iter().all(|l| l["passed"] == true));
    }
}

#[test]
fn verify_output_is_sorted_and_stable() {
    let a = run(&["verify", "--mode", "theorem1", "--max", "7"]);
    let b = run(&["verify", "--mode", "theorem1", "--max", "7"]);
    let (la, lb) = (lines(&a), lines(&b));
    assert_eq!(la[..la.len() - 1], lb[..lb.len() - 1]);
    let keys: Vec<(u64, u64)> = la[..la.len() - 1]
        .iter()
        .map(|l| (l["p"].as_u64().unwrap(), l["r"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn symbolic_params_match_the_fifteen_block() {
    let (code, v) = envelope(&["torus", "params", "--q", "0", "--p", "3", "--r", "5"]);
    assert_eq!(code, 0);
    let polys = &v["result"]["polynomials"];
    assert_eq!(polys["u1"], strs(&["1"]));
    assert_eq!(
        polys["u_pr"],
        strs(&["0", "-1", "-1", "0", "-1", "0", "0", "-1"])
    );
    assert_eq!(polys["u_p"], strs(&["0", "-1"]));
    assert_eq!(polys["u_r"], strs(&["1", "0", "0", "1"]));
    assert_eq!(
        polys["v1"],
        strs(&["9", "-16", "7", "6", "-10", "8", "-3", "-2", "2"])
    );
    assert_eq!(polys["v2"], strs(&["-6", "-10", "-12", "-9", "-6", "-2"]));
    assert!(v["result"]["evaluations"].is_null());
}

#[test]
fn concrete_params_evaluate() {
    let (_, v) = envelope(&["torus", "params", "--q", "2", "--p", "3", "--r", "5"]);
    let e = &v["result"]["evaluations"];
    // u_15(2) = -(128 + 16 + 4 + 2)
    assert_eq!(e["u_pr"], "-150");
    assert_eq!(e["cofactors"], strs(&["32767", "4681", "1057", "217"]));
}

#[test]
fn roundtrips_pass_and_are_deterministic() {
    let args = [
        "torus",
        "roundtrip",
        "--q",
        "7",
        "--p",
        "3",
        "--r",
        "5",
        "--count",
        "100",
        "--seed",
        "42",
    ];
    let (code, first) = envelope(&args);
    assert_eq!(code, 0);
    assert_eq!(first["result"]["passed"], 100);
    assert_eq!(first["result"]["vectors"].as_array().unwrap().len(), 3);
    assert_eq!(envelope(&args).1, first);

    let (code, v) = envelope(&[
        "torus",
        "roundtrip",
        "--q",
        "5",
        "--p",
        "2",
        "--r",
        "3",
        "--count",
        "100",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["failed"], 0);
}

#[test]
fn theta_demo_runs() {
    let args = [
        "torus",
        "theta-demo",
        "--q",
        "7",
        "--p",
        "3",
        "--r",
        "5",
        "--count",
        "5",
        "--seed",
        "9",
    ];
    let (code, v) = envelope(&args);
    assert_eq!(code, 0);
    let dims = &v["result"]["dimensions"];
    assert_eq!(
        (
            dims["domain_total"].as_u64(),
            dims["codomain_total"].as_u64()
        ),
        (Some(16), Some(16))
    );
    assert_eq!(v["result"]["kernel_exponent"], 2);
    assert!(v["result"]["samples"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["reverse_is_power"] == true));
    assert_eq!(envelope(&args).1, v);
}
