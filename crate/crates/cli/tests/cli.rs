use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn qosc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qosc")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qosc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn read_json(p: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn rep(name: &str, params: Value) -> (Output, Value) {
    let pf = tmp(&format!("{name}.params.json"));
    let out = tmp(&format!("{name}.out.json"));
    std::fs::write(&pf, params.to_string()).unwrap();
    let o = qosc(&[
        "rep",
        "--paramfile",
        pf.to_str().unwrap(),
        "--json",
        out.to_str().unwrap(),
    ]);
    let v = read_json(&out);
    (o, v)
}

#[test]
fn qybe_scope_passes() {
    let o = qosc(&["verify", "--scope", "qybe"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("R12 R13 R23 = R23 R13 R12"));
}

#[test]
fn covariance_of_subgroup_a_off_the_special_line_fails() {
    let o = qosc(&["verify", "--scope", "covariance", "--subgroup", "A", "--Q1", "generic"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("degenerate rules"));
    let o = qosc(&["verify", "--scope", "covariance", "--subgroup", "A", "--Q1", "q^2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&qosc(&["verify", "--scope", "nope"])), 2);
    assert_eq!(code(&qosc(&["verify", "--Q1", "q^^2"])), 2);
    assert_eq!(code(&qosc(&["verify", "--q", "-1"])), 2);
    assert_eq!(code(&qosc(&["solve", "--q", "1.0"])), 2);
    let pf = tmp("broken.json");
    std::fs::write(&pf, "{\"subgroup\": \"B\"").unwrap();
    assert_eq!(code(&qosc(&["rep", "--paramfile", pf.to_str().unwrap()])), 2);
}

#[test]
fn full_run_is_deterministic_and_audits_coverage() {
    let (a, b) = (tmp("all1.json"), tmp("all2.json"));
    let o = qosc(&["verify", "--json", a.to_str().unwrap()]);
    qosc(&["verify", "--json", b.to_str().unwrap()]);
    let (mut a, mut b) = (read_json(&a), read_json(&b));
    for v in [&mut a, &mut b] {
        v.as_object_mut().unwrap().remove("wall_time_s");
    }
    assert_eq!(a, b);
    let checks = a["checks"].as_array().unwrap();
    let audit = checks.iter().find(|c| c["id"] == "coverage.self_audit").unwrap();
    assert_eq!(audit["status"], "pass", "{audit}");
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids[..ids.len() - 1].to_vec();
    sorted.sort();
    assert_eq!(sorted, &ids[..ids.len() - 1]);
    // exit status follows the checks
    let failed = checks.iter().any(|c| c["status"] == "fail");
    assert_eq!(code(&o), if failed { 1 } else { 0 });
    assert_eq!(a["passed"], !failed);
}

#[test]
fn rep_b_with_casimir() {
    let (o, v) = rep(
        "b",
        json!({"subgroup": "B", "q": 1.2, "Q1": 1.0, "A": 1.0, "B": 0.3, "dim": 24}),
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(v["verification"]["max_scaled"].as_f64().unwrap() <= 1e-10);
    let c = &v["casimir"];
    assert!((c["scalar"].as_f64().unwrap() - (0.09 + 1.0 / 1.44)).abs() < 1e-12);
    assert!(c["discrepancy"].is_string());
}

#[test]
fn rep_b_at_the_pole() {
    let (o, v) = rep(
        "pole",
        json!({"subgroup": "B", "q": 1.2, "Q1": 1.44, "A": 1.0, "B": [0.2, 0.1], "dim": 24}),
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(v["passed"], true);
}

#[test]
fn rep_a_constraint_violation_is_rejected() {
    let (o, v) = rep(
        "a_bad",
        json!({"subgroup": "A", "q": 1.2, "A": 1.0, "B": 1.0, "C": 0.7, "D": 0.5, "dim": 20}),
    );
    assert_eq!(code(&o), 1);
    assert!(v["error"].as_str().unwrap().contains("invalid parameters"));
    let b = (1.0f64 + 1.44 * 0.25).sqrt();
    let (o, _) = rep(
        "a_good",
        json!({"subgroup": "A", "q": 1.2, "A": 1.0, "B": b, "C": [0.5, 0.5], "D": 0.5, "dim": 20}),
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn inadmissible_b_is_rejected() {
    let (o, v) = rep(
        "inadm",
        json!({"subgroup": "B", "q": 1.2, "Q1": 1.5, "A": 0.3, "B": 1.0, "dim": 10}),
    );
    assert_eq!(code(&o), 1);
    assert!(v["error"].as_str().unwrap().contains("inadmissible"));
}

#[test]
fn solve_is_reproducible() {
    let (a, b) = (tmp("s1.json"), tmp("s2.json"));
    let args = |p: &PathBuf| {
        vec!["solve", "--q", "2.0", "--seed", "3", "--starts", "12", "--json"]
            .into_iter()
            .map(String::from)
            .chain([p.to_str().unwrap().to_string()])
            .collect::<Vec<_>>()
    };
    let run = |p: &PathBuf| {
        let a = args(p);
        qosc(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };
    let o = run(&a);
    run(&b);
    assert_ne!(code(&o), 2);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v = read_json(&a);
    assert!(v["templates"].as_array().unwrap().iter().any(|t| t["label"] == "sol1"));
}
