use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcyc")).args(args).env_remove("HOPFCYC_MAX_DEGREE").output().expect("spawn");
    let stdout = String::from_utf8(out.stdout).expect("utf8");
    let stderr = String::from_utf8(out.stderr).expect("utf8");
    let json = if stdout.trim().is_empty() { Value::Null } else { serde_json::from_str(&stdout).expect("json on stdout") };
    (out.status.code().expect("exit code"), json, stderr)
}

fn run_file(cmd: &str, file: &str, extra: &[&str]) -> (i32, Value, String) {
    let p = fixture(file);
    let mut args = vec![cmd, p.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn validate_sl2_koszul() {
    let (code, v, _) = run_file("validate", "sl2_koszul.hc", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for n in ["lie", "module", "comodule", "ayd", "stable", "conilpotency"] {
        assert!(names.contains(&n), "{n} missing from {names:?}");
    }
}

#[test]
fn validate_explicit_matrices() {
    let (code, v, _) = run_file("validate", "sl2_koszul_explicit.hc", &[]);
    assert_eq!(code, 0, "{v}");
    let (code, v, _) = run_file("cohomology", "sl2_koszul_explicit.hc", &["--complex", "koszul"]);
    assert_eq!(code, 0);
    assert_eq!((v["even"].as_u64(), v["odd"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn validate_reports_jacobi_triple() {
    let (code, v, err) = run_file("validate", "broken_jacobi.hc", &[]);
    assert_eq!(code, 1);
    let detail = v["failures"][0]["detail"].as_str().unwrap();
    assert!(detail.contains("Jacobi") && detail.contains("[A,B,C]"), "{detail}");
    assert!(err.contains("Jacobi"));
}

#[test]
fn malformed_input_exits_two() {
    let (code, v, err) = run_file("validate", "bad_rational.hc", &[]);
    assert_eq!(code, 2);
    assert_eq!(v, Value::Null);
    assert!(err.contains("line 5") && err.contains("1/0"), "{err}");
    assert_eq!(run_file("validate", "stray_entry.hc", &[]).0, 2);
    assert_eq!(run_file("validate", "no_such_file.hc", &[]).0, 2);
}

#[test]
fn matched_pairs() {
    assert_eq!(run_file("validate", "matched_pair.hc", &[]).0, 0);
    let (code, v, _) = run_file("validate", "broken_matched_pair.hc", &[]);
    assert_eq!(code, 1);
    assert!(v["failures"].as_array().unwrap().iter().any(|f| f["name"] == "matched-pair"));
}

#[test]
fn validate_hopf_builtin() {
    let (code, v, _) = run_file("validate", "hopf.hc", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn solve_coactions() {
    let (code, v, _) = run_file("solve-coactions", "sl2_simple2.hc", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["parameters"], 0);
    let (code, v, _) = run_file("solve-coactions", "sl2_koszul.hc", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["parameters"], 2);
    assert_eq!(v["given_coaction_in_family"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    let (_, v, _) = run_file("solve-coactions", "abelian_free.hc", &[]);
    assert_eq!(v["parameters"], 4);
}

#[test]
fn ce_cohomology_of_sl2() {
    let (code, v, _) = run_file("cohomology", "sl2_trivial.hc", &["--complex", "ce"]);
    assert_eq!(code, 0);
    let b: Vec<u64> = (0..4).map(|q| v["betti"][q.to_string()].as_u64().unwrap()).collect();
    assert_eq!(b, vec![1, 0, 0, 1]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn cyclic_lie_cohomology() {
    for kind in ["cyclic-lie", "koszul"] {
        let (code, v, _) = run_file("cohomology", "sl2_koszul.hc", &["--complex", kind]);
        assert_eq!(code, 0, "{kind}");
        assert_eq!((v["even"].as_u64(), v["odd"].as_u64()), (Some(1), Some(1)), "{kind}");
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
    }
    let (_, v, _) = run_file("cohomology", "sl2_koszul.hc", &["--complex", "koszul", "--parity", "odd"]);
    let reps = v["representatives"].as_array().unwrap();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0]["parity"], "odd");
}

#[test]
fn relative_to_everything() {
    let (code, v, _) = run_file("cohomology", "relative_all.hc", &["--complex", "relative"]);
    assert_eq!(code, 0);
    // the invariants of S(sl2*)_[1] are spanned by 1
    let b: Vec<u64> = (0..4).map(|q| v["betti"][q.to_string()].as_u64().unwrap()).collect();
    assert_eq!(b, vec![1, 0, 0, 0]);
    let (code, _, err) = run_file("cohomology", "sl2_koszul.hc", &["--complex", "relative"]);
    assert_eq!(code, 2);
    assert!(err.contains("[task]"));
}

#[test]
fn every_golden_passes() {
    let (code, list, _) = run(&["golden", "--list"]);
    assert_eq!(code, 0);
    let names: Vec<String> = list["goldens"].as_array().unwrap().iter().map(|g| g["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names.len(), 10);
    for n in &names {
        let (code, v, err) = run(&["golden", n]);
        assert_eq!(code, 0, "{n}: {err}");
        assert_eq!(v["ok"], true);
    }
}

#[test]
fn golden_degree_floor() {
    let (code, _, err) = run(&["golden", "c-even", "--max-degree", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("at least 4"));
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcyc")).args(["golden", "c-even"]).env("HOPFCYC_MAX_DEGREE", "3").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["golden", "no-such-golden"]).0, 2);
}

#[test]
fn describe_builtins() {
    for (name, kind) in [("sl2", "lie-algebra"), ("sl2-matched-pair", "matched-pair"), ("H1S-cop", "hopf-algebra"), ("sl2-koszul", "sayd-module"), ("VnProj(2)", "sayd-module")] {
        let (code, v, _) = run(&["describe", name]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(v["kind"], kind);
    }
    let (_, v, _) = run(&["describe", "H1S-cop", "--max-degree", "3"]);
    assert_eq!(v["mpi"]["ok"], true);
    assert_eq!(run(&["describe", "nothing"]).0, 2);
}
