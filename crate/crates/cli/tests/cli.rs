use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], problem: &str) -> (Output, Option<Value>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("problem.json");
    std::fs::write(&path, problem).unwrap();
    run_path(args, &path)
}

fn run_path(args: &[&str], path: &Path) -> (Output, Option<Value>) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperdense"))
        .args(args)
        .arg(path)
        .output()
        .expect("binary runs");
    let v = serde_json::from_slice(&out.stdout).ok();
    (out, v)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

const GAUSS: &str = r#"{"ambient_dim":1,"hyperplanes":[{"norm_component":{"field":[1,0,1]}}]}"#;

#[test]
fn gaussian_norm_component_is_not_dense() {
    let (o, v) = run(&["decide"], GAUSS);
    assert_eq!(code(&o), 1);
    let v = v.unwrap();
    assert_eq!(v["status"], "not_dense");
    assert_eq!(v["condition"], "C");
}

#[test]
fn split_prime_makes_gaussian_dense() {
    let p = r#"{"ambient_dim":1,"hyperplanes":[{"norm_component":{"field":[1,0,1]}}],"S":[5]}"#;
    let (o, v) = run(&["decide"], p);
    assert_eq!(code(&o), 0);
    assert_eq!(v.unwrap()["condition"], "s4_split_complete");
}

#[test]
fn inert_prime_keeps_gaussian_sparse() {
    let p = r#"{"ambient_dim":1,"hyperplanes":[{"norm_component":{"field":[1,0,1]}}],"S":[3]}"#;
    let (o, v) = run(&["decide"], p);
    assert_eq!(code(&o), 1);
    assert_eq!(v.unwrap()["condition"], "s4_no_split");
}

#[test]
fn missing_unit_data_is_unknown() {
    let p = r#"{"ambient_dim":3,"hyperplanes":[{"norm_component":{"field":[1,0,0,0,1]}}],"S":[3]}"#;
    let (o, v) = run(&["decide"], p);
    let v = v.unwrap();
    assert_eq!(code(&o), 2, "{v}");
    assert_eq!(v["status"], "unknown");
    assert_eq!(v["condition"], "insufficient_data");
}

#[test]
fn too_many_hyperplanes_trip_condition_a() {
    let p = r#"{"ambient_dim":1,"hyperplanes":[{"coeffs":[1,0]},{"coeffs":[0,1]},{"coeffs":[1,1]}]}"#;
    let (o, v) = run(&["decide"], p);
    assert_eq!(code(&o), 1);
    assert_eq!(v.unwrap()["condition"], "A");
}

#[test]
fn parse_errors_exit_three() {
    let (o, _) = run(&["decide"], "{not json");
    assert_eq!(code(&o), 3);
    let (o, _) = run(&["decide"], r#"{"hyperplanes":[],"surprise":1}"#);
    assert_eq!(code(&o), 3);
    let (o, _) = run(&["frobnicate"], GAUSS);
    assert_eq!(code(&o), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_hyperdense"))
        .args(["decide", "/nonexistent/problem.json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn degree_cap_exits_four() {
    let (o, _) = run(&["galois", "--max-closure-degree", "4"], r#"{"polynomial":[-2,0,0,0,1]}"#);
    assert_eq!(code(&o), 4);
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["exit_code"], 4);
}

#[test]
fn half_an_orbit_exits_five() {
    let p = r#"{"ambient_dim":1,"hyperplanes":[{"field":[1,0,1],"coeffs":[1,[0,1]]}]}"#;
    let (o, _) = run(&["decide"], p);
    assert_eq!(code(&o), 5);
}

#[test]
fn components_group_conjugates() {
    let both = r#"{"ambient_dim":1,"hyperplanes":[
        {"field":[1,0,1],"coeffs":[1,[0,1]]},
        {"field":[1,0,1],"coeffs":[1,[0,-1]]}]}"#;
    let (o, v) = run(&["components"], both);
    assert_eq!(code(&o), 0);
    let v = v.unwrap();
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["degree"], 2);

    let coords = r#"{"ambient_dim":1,"hyperplanes":[{"coeffs":[1,0]},{"coeffs":[0,1]}]}"#;
    let (_, v) = run(&["components"], coords);
    let v = v.unwrap();
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c["degree"] == 1));

    let cube = r#"{"ambient_dim":2,"hyperplanes":[{"norm_component":{"field":[-2,0,0,1]}}]}"#;
    let (_, v) = run(&["components"], cube);
    let v = v.unwrap();
    assert_eq!(v["components"][0]["degree"], 3);
    assert_eq!(v["hyperplanes"], 3);
}

#[test]
fn cm_methods_agree() {
    for (field, contains) in [("[1,1,1,1,1]", true), ("[-2,0,1]", false), ("[1,0,1]", true), ("[-2,0,0,1]", false)] {
        let (o, v) = run(&["cm"], &format!(r#"{{"field":{field}}}"#));
        assert_eq!(code(&o), 0);
        let v = v.unwrap();
        assert_eq!(v["contains"], contains, "{field}");
        assert_eq!(v["agree"], true, "{field}");
    }
}

#[test]
fn signature_and_galois() {
    let (_, v) = run(&["signature"], r#"{"field":[-2,0,0,1]}"#);
    let v = v.unwrap();
    assert_eq!((v["r1"].as_u64(), v["r2"].as_u64()), (Some(1), Some(1)));
    assert_eq!(v["unit_rank"], 1);

    let (_, v) = run(&["galois"], r#"{"polynomial":[-2,0,0,0,1]}"#);
    assert_eq!(v.unwrap()["degree"], 8);
}

#[test]
fn witness_jsonl_lists_every_point() {
    let p = r#"{"units":[{"field":[-2,0,1],"generators":[[1,1]]}],"options":{"exponent_bound":3}}"#;
    let (o, _) = run(&["witness", "--jsonl"], p);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let header: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(header["count"], 7);
    assert_eq!(lines.len(), 8);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let problems = [
        (vec!["decide"], GAUSS),
        (vec!["cm"], r#"{"field":[1,1,1,1,1]}"#),
        (vec!["probe-density"], r#"{"units":[{"field":[1,1,1,1,1],"generators":[[1,1]]}],"options":{"exponent_bound":2,"probe_degree":3}}"#),
    ];
    for (args, p) in problems {
        let (a, _) = run(&args, p);
        let (b, _) = run(&args, p);
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn seed_variable_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, GAUSS).unwrap();
    let plain = Command::new(env!("CARGO_BIN_EXE_hyperdense")).arg("decide").arg(&path).output().unwrap();
    let seeded = Command::new(env!("CARGO_BIN_EXE_hyperdense"))
        .arg("decide")
        .arg(&path)
        .env("HYPERDENSE_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(plain.stdout, seeded.stdout);
}
