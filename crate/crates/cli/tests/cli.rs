use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spacecross")).args(args).output().expect("spawn")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn order_types() {
    let r = json(&["order-types"]);
    assert_eq!(r["total"], 105);
    let by = r["by_components"].as_object().unwrap();
    assert_eq!(by.values().map(|v| v.as_u64().unwrap()).sum::<u64>(), 105);
}

#[test]
fn k4_has_no_four_crossings() {
    let r = json(&["count-crossings", "--k", "4", "--input", &data("k4.json")]);
    assert_eq!(r["count"], 0);
    assert_eq!(r["mode"], "exact");
}

#[test]
fn float_mode_needs_positive_tolerance() {
    let out = run(&["count-crossings", "--mode", "float", "--tol", "0", "--input", &data("k4.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "out_of_range");
}

#[test]
fn gen_stair_bounds() {
    let r = json(&["gen-stair", "--n", "16", "--m", "32", "--check-bounds"]);
    assert_eq!(r["report"]["pass"], true);
    assert!(r["edges"].as_array().unwrap().len() >= 32);
    let count = r["report"]["count"].as_u64().unwrap() as u128;
    assert!(count * 16u128.pow(4) <= 6720 * 32u128.pow(6));
}

#[test]
fn linking_and_conway_gordon() {
    assert_eq!(json(&["linking", "--input", &data("hopf.json")])["lk"], 1);
    let cg = json(&["conway-gordon", "--input", &data("octahedron.json")]);
    assert_eq!(cg["parity_sum"], 1);
    assert_eq!(cg["odd_lk"].as_i64().unwrap().rem_euclid(2), 1);
}

#[test]
fn transversal_of_stacked_pairs() {
    let r = json(&["transversal-4cycles", "--input", &data("stacked.json")]);
    assert_eq!(r["found"], true);
}

#[test]
fn witness_pipeline_on_four_k6() {
    let r = json(&["witness-pipeline", "--input", &data("four_k6.json"), "--seed", "1"]);
    assert!(!r["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn sametype_and_yaoyao() {
    let r = json(&["same-type", "--input", &data("same_type.json")]);
    assert_eq!(r["signs"].as_array().unwrap().len(), 1);
    let y = json(&["yao-yao", "--input", &data("multiset2.json")]);
    assert!(y["counts"].as_array().unwrap().iter().all(|c| 4 * c.as_u64().unwrap() >= 20));
}

#[test]
fn planar_count_and_lift() {
    let planar = data("planar8.json");
    let c = json(&["count-planar", "--input", &planar]);
    assert!(c["count"].as_u64().is_some());
    let lifted = json(&["lift-sphere", "--subdivision", "2", "--input", &planar]);
    assert_eq!(lifted["n"], 8);
}

#[test]
fn generators_are_deterministic() {
    let a = run(&["generate", "--kind", "drawing", "--n", "12", "--m", "20", "--seed", "5"]);
    let b = run(&["generate", "--kind", "drawing", "--n", "12", "--m", "20", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn errors_carry_codes() {
    let out = run(&["linking"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "usage");
    let out = run(&["gen-hexgrid", "--k", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("spacecross-order-{}.json", std::process::id()));
    let out = run(&["order-types", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["total"], 105);
    let _ = std::fs::remove_file(path);
}
