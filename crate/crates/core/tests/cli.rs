use std::process::Command;

use serde_json::Value;

fn albert(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_albert")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json, String::from_utf8(out.stderr).unwrap())
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn strip_timing(mut v: Value) -> Value {
    for r in v["reports"].as_array_mut().unwrap() {
        r["elapsed_ms"] = Value::Null;
    }
    v
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--suite", "octonion-laws", "--suite", "pierce", "--trials", "200", "--seed", "7"];
    let (code, first, _) = albert(&args);
    assert_eq!(code, 0);
    assert_eq!(first["passed"], true);
    let names: Vec<&str> = first["reports"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["octonion-laws", "pierce"]);
    let (_, second, _) = albert(&args);
    assert_eq!(strip_timing(first), strip_timing(second));
}

#[test]
fn corrupted_algebra_fails_with_witness() {
    let (code, v, stderr) = albert(&["verify", "jordan-laws", "--algebra", &data("non_jordan.json")]);
    assert_eq!(code, 1);
    assert!(stderr.contains("FAIL"));
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().filter(|c| c["passed"] == false).all(|c| c["witness"].is_string()));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(albert(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(albert(&["verify"]).0, 2);
    assert_eq!(albert(&["verify", "pierce", "--trials", "many"]).0, 2);
    assert_eq!(albert(&["spectral", "/nonexistent.json"]).0, 2);
    assert_eq!(albert(&["fermions", "sideways"]).0, 2);
}

#[test]
fn fermion_tables() {
    let (code, up, _) = albert(&["fermions", "up"]);
    assert_eq!(code, 0);
    assert_eq!(up["coordinates"], 27);
    let slots = up["slots"].as_array().unwrap();
    let kinds = |k: &str| slots.iter().filter(|s| s["kind"] == k).count();
    assert_eq!((kinds("quark"), kinds("lepton"), kinds("diagonal")), (3, 3, 3));
    assert_eq!(albert(&["fermions"]).1["coordinates"], 54);
}

#[test]
fn spectral_two_terms() {
    let (code, v, _) = albert(&["spectral", &data("diag_552.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["card"], 2);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-9);
}
