use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn anomalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anomalab")).args(args).env_remove("ANOMALAB_CAPS").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn cohomology_of_z4() {
    let out = anomalab(&["cohomology", "--group", "Z/4", "--degree", "3", "--modulus", "4"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["invariant_factors"], serde_json::json!([4]));
    assert_eq!(v["mu_factors"], serde_json::json!([4]));
}

#[test]
fn torsion24_of_s3() {
    let out = anomalab(&["torsion24", "--group", "S3"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_eq!(24 % v["fixed_exponent"].as_u64().unwrap(), 0);
    assert_eq!(v["divides_24"], true);
}

#[test]
fn toric_code_double() {
    let out = anomalab(&["double", "--group", "Z/2", "--alpha", "0"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    let twists: Vec<Value> = v["labels"].as_array().unwrap().iter().map(|l| l["twist"].clone()).collect();
    assert_eq!(twists.len(), 4);
    assert_eq!(twists.iter().filter(|t| t[0] == 1 && t[1] == 2).count(), 1);
    assert_eq!(v["S"].as_array().unwrap().len(), 4);
}

#[test]
fn galois_check_and_slant() {
    let out = anomalab(&["galois-check", "--group", "Z/3", "--alpha", "1", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert!(json_of(&out)["equivalence"].is_object());
    let out = anomalab(&["slant", "--group", "Z/3", "--alpha", "1", "--element", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["slant"]["degree"], 2);
}

#[test]
fn azumaya_and_gauging_jobs() {
    let out = anomalab(&["azumaya", "--example", "pauli", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert!(v["regauging"].is_null());
    assert_eq!(v["galois"]["holds"], true);
    let out = anomalab(&["gauge-abelian", "--group", "(Z/3)^2", "--instances", "5", "--seed", "11"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["passed"], 5);
    let out = anomalab(&["kill-search", "--group", "Z/2", "--alpha", "1", "--max-kernel", "1"]);
    assert_eq!(code(&out), 0);
    assert!(json_of(&out)["killer"].is_null());
}

#[test]
fn exit_codes() {
    // input errors
    assert_eq!(code(&anomalab(&["cohomology", "--group", "M24", "--degree", "3", "--modulus", "2"])), 2);
    assert_eq!(code(&anomalab(&["double", "--group", "Z/3", "--alpha", "7,7"])), 2);
    assert_eq!(code(&anomalab(&["no-such-command"])), 2);
    assert_eq!(code(&anomalab(&["galois-check", "--group", "Z/3", "--alpha", "1", "--n", "3"])), 2);
    // resource caps
    assert_eq!(code(&anomalab(&["cohomology", "--group", "S4", "--degree", "3", "--modulus", "24"])), 3);
    let capped = Command::new(env!("CARGO_BIN_EXE_anomalab"))
        .args(["cohomology", "--group", "Z/4", "--degree", "3", "--modulus", "4"])
        .env("ANOMALAB_CAPS", "cochains=5")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 3);
    assert_eq!(code(&anomalab(&["--help"])), 0);
}

#[test]
fn failed_checks_exit_one() {
    // β₁ = 2·I still implements the trivial automorphism, but β₁β₁ ≠ β₀, so
    // gauging has no idempotent to average.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("action.json");
    let out = anomalab(&["azumaya", "--example", "sign-z2"]);
    assert_eq!(code(&out), 0);
    let mut v = json_of(&out)["action"].clone();
    let two = serde_json::json!({"level": 1, "coeffs": [["2", "1"]]});
    let zero = serde_json::json!({"level": 1, "coeffs": [["0", "1"]]});
    v["lift"]["1"] = serde_json::json!([[two.clone(), zero.clone()], [zero, two]]);
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = anomalab(&["azumaya", "--action", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn outputs_are_deterministic_and_written_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = ["gauge-abelian", "--instances", "3", "--seed", "5", "--out"];
    assert_eq!(code(&anomalab(&[&args[..], &[a.to_str().unwrap()]].concat())), 0);
    assert_eq!(code(&anomalab(&[&args[..], &[b.to_str().unwrap()]].concat())), 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(anomalab(&[&args[..], &[b.to_str().unwrap()]].concat()).stdout.is_empty());
}

fn write_batch(dir: &Path, name: &str, jobs: &[Vec<String>]) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(jobs).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn batch_runs_in_parallel_with_the_worst_exit() {
    let dir = tempfile::tempdir().unwrap();
    let job = |args: &[&str], out: &str| -> Vec<String> {
        let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        v.extend(["--out".to_string(), dir.path().join(out).to_str().unwrap().to_string()]);
        v
    };
    let good = vec![
        job(&["cohomology", "--group", "Z/6", "--degree", "3", "--modulus", "6"], "c.json"),
        job(&["double", "--group", "S3", "--alpha", "1"], "d.json"),
        job(&["torsion24", "--group", "Q8"], "t.json"),
    ];
    let file = write_batch(dir.path(), "good.json", &good);
    let out = anomalab(&["batch", &file, "--jobs", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out).as_array().unwrap().len(), 3);
    for f in ["c.json", "d.json", "t.json"] {
        assert!(dir.path().join(f).exists());
    }
    let mut bad = good.clone();
    bad.push(vec!["cohomology".into(), "--group".into(), "S4".into(), "--degree".into(), "3".into(), "--modulus".into(), "24".into()]);
    let file = write_batch(dir.path(), "bad.json", &bad);
    assert_eq!(code(&anomalab(&["batch", &file, "--jobs", "2"])), 3);
}

#[test]
fn cocycle_files_roundtrip() {
    let out = anomalab(&["slant", "--group", "S3", "--alpha", "1", "--element", "0"]);
    assert_eq!(code(&out), 0);
    let slant = json_of(&out)["slant"].clone();
    // A 2-cocycle written back as a file is accepted as input.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("beta.json");
    std::fs::write(&path, serde_json::to_string(&slant).unwrap()).unwrap();
    let out = anomalab(&["slant", "--group", "S3", "--degree", "2", "--cocycle", path.to_str().unwrap(), "--element", "1"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}
