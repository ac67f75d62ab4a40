//! End-to-end checks of the command line front end: exit codes, report
//! reproducibility, and the instance replay loop.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matineq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_theorem_true_law_exits_zero() {
    let out = run(&[
        "verify", "--law", "L-HLP", "--trials", "500", "--dims", "2..7", "--seed", "42",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["violations"], 0);
    assert_eq!(doc["law"], "L-HLP");
}

#[test]
fn hunt_finds_schatten_counterexample_and_exits_one() {
    let dir = std::env::temp_dir().join("matineq_cli_hunt");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("hunt.json");
    let out = run(&[
        "hunt",
        "--problem",
        "SCHATTEN-P-GT-2",
        "--p",
        "4",
        "--dim",
        "3",
        "--budget",
        "100000",
        "--seed",
        "7",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json_of(&out_path);
    assert_eq!(doc["verdict"], "counterexample_found");
    assert!(doc["achieved"].as_f64().unwrap() > 1.0 + 1e-8);
}

#[test]
fn list_prints_registry_with_summaries() {
    let out = run(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 38);
    assert!(text.contains("L-HLP"));
    assert!(text.contains("L-ARAKI"));
    assert!(text.contains("L-MOND-PECARIC"));
}

#[test]
fn bad_configuration_exits_two() {
    let out = run(&["verify", "--law", "L-NOPE", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown law"));

    let out = run(&["verify", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["hunt", "--problem", "SCHATTEN-P-GT-2", "--p", "1.5", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_identical_apart_from_timestamp() {
    let dir = std::env::temp_dir().join("matineq_cli_repro");
    std::fs::create_dir_all(&dir).unwrap();
    let p1 = dir.join("r1.json");
    let p2 = dir.join("r2.json");
    for p in [&p1, &p2] {
        let out = run(&[
            "verify", "--law", "L-VONNEUMANN", "--trials", "60", "--dims", "2..4",
            "--seed", "9", "--out", p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let mut d1 = json_of(&p1);
    let mut d2 = json_of(&p2);
    d1.as_object_mut().unwrap().remove("timestamp_unix_s");
    d2.as_object_mut().unwrap().remove("timestamp_unix_s");
    assert_eq!(
        serde_json::to_string(&d1).unwrap(),
        serde_json::to_string(&d2).unwrap()
    );
}

#[test]
fn worst_instance_replays_to_the_reported_slack() {
    let dir = std::env::temp_dir().join("matineq_cli_replay");
    std::fs::create_dir_all(&dir).unwrap();
    let report_path = dir.join("report.json");
    let worst_path = dir.join("worst.json");
    let verdict_path = dir.join("verdict.json");

    let out = run(&[
        "verify", "--law", "L-SV-KANT", "--trials", "80", "--dims", "2..4",
        "--seed", "31", "--out", report_path.to_str().unwrap(),
        "--dump-worst", worst_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&report_path);
    let min_slack = report["min_slack"].as_f64().unwrap();

    let out = run(&[
        "verify",
        "--instance",
        worst_path.to_str().unwrap(),
        "--out",
        verdict_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let verdict = json_of(&verdict_path);
    let replayed = verdict["slack"].as_f64().unwrap();
    assert!(
        (replayed - min_slack).abs() <= 1e-12 * min_slack.abs().max(1.0),
        "replayed {replayed} vs reported {min_slack}"
    );
}

#[test]
fn instance_replay_rejects_malformed_payloads() {
    let dir = std::env::temp_dir().join("matineq_cli_bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"law":"L-PINCH","matrices":{"X":{"dim":2,"entries":[[[1,0],[0,0]]]}},"provenance":{"kind":"literal"}}"#,
    )
    .unwrap();
    let out = run(&["verify", "--instance", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_seed_is_honored() {
    let out1 = Command::new(env!("CARGO_BIN_EXE_matineq"))
        .args(["verify", "--law", "L-HLP", "--trials", "20", "--dims", "2..3"])
        .env("MATINEQ_SEED", "777")
        .output()
        .unwrap();
    let out2 = run(&[
        "verify", "--law", "L-HLP", "--trials", "20", "--dims", "2..3", "--seed", "777",
    ]);
    let strip = |raw: &[u8]| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(raw).unwrap();
        v.as_object_mut().unwrap().remove("timestamp_unix_s");
        v
    };
    assert_eq!(strip(&out1.stdout), strip(&out2.stdout));
}

#[test]
fn sharpness_cli_reports_bound_attained() {
    let out = run(&[
        "sharpness", "--law", "L-KANT-VEC", "--dim", "3", "--budget", "500",
        "--restarts", "4", "--seed", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verdict"], "bound_nearly_attained");
    let achieved = doc["achieved"].as_f64().unwrap();
    let bound = doc["bound"].as_f64().unwrap();
    assert!((achieved - bound).abs() <= 1e-10 * bound);
}
