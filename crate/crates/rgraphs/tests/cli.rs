//! End-to-end tests of the `rgraph` binary: exit-code contract, certificate
//! emission and checking, DOT export, and census determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn rgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn verify_exit_codes() {
    let petersen = fixture("petersen.g");
    let out = rgraph(&["verify", petersen.to_str().unwrap(), "--r", "3"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["kind"], "r-graph-verdict");
    assert_eq!(cert["schema"], 1);
    assert_eq!(cert["payload"]["is_r_graph"], true);

    let bridge = fixture("bridge-cubic.g");
    let out = rgraph(&["verify", bridge.to_str().unwrap(), "--r", "3"]);
    assert_eq!(exit_code(&out), 1);
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["payload"]["is_r_graph"], false);
    assert!(!cert["payload"]["witness"].is_null());
}

#[test]
fn verify_rejects_malformed_input() {
    let dir = tempdir();
    let bad = dir.join("bad.g");
    std::fs::write(&bad, "graph two\n0 1\n").unwrap();
    let out = rgraph(&["verify", bad.to_str().unwrap(), "--r", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn cover_exit_codes() {
    let petersen = fixture("petersen.g");
    let out = rgraph(&["cover", petersen.to_str().unwrap(), "--t", "2", "--r", "3"]);
    assert_eq!(exit_code(&out), 0);
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["kind"], "tr-pm");
    assert_eq!(cert["payload"]["matchings"].as_array().unwrap().len(), 6);

    let out = rgraph(&["cover", petersen.to_str().unwrap(), "--t", "1", "--r", "3"]);
    assert_eq!(exit_code(&out), 1);

    let k4 = fixture("k4.g");
    let out = rgraph(&["cover", k4.to_str().unwrap(), "--t", "1", "--r", "3"]);
    assert_eq!(exit_code(&out), 0);
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["payload"]["matchings"].as_array().unwrap().len(), 3);

    let out =
        rgraph(&["cover", petersen.to_str().unwrap(), "--t", "2", "--r", "3", "--budget", "1"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn reduce_and_check_round_trip() {
    let dir = tempdir();
    let k33 = fixture("k33.g");
    let certs = dir.join("k33-certs.json");
    let dot = dir.join("trace.dot");
    let out = rgraph(&[
        "reduce",
        k33.to_str().unwrap(),
        "--t",
        "1",
        "--r",
        "3",
        "--mode",
        "cr1",
        "--out",
        certs.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&certs).unwrap();
    let values: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(values.as_array().unwrap().len(), 2);
    assert_eq!(values[0]["kind"], "tr-pm");
    assert_eq!(values[1]["kind"], "reduction-trace");
    assert!(std::fs::read_to_string(&dot).unwrap().contains("digraph"));

    let out = rgraph(&["check", k33.to_str().unwrap(), certs.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    // Tamper with one matching entry: check must reject.
    let mut values: serde_json::Value = serde_json::from_str(&text).unwrap();
    let id = values[0]["payload"]["matchings"][0][0].as_u64().unwrap();
    values[0]["payload"]["matchings"][0][0] = serde_json::json!(id ^ 1);
    let tampered = dir.join("tampered.json");
    std::fs::write(&tampered, serde_json::to_string(&values).unwrap()).unwrap();
    let out = rgraph(&["check", k33.to_str().unwrap(), tampered.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);

    // Certificates bound to a different graph are rejected by hash.
    let prism = fixture("prism.g");
    let out = rgraph(&["check", prism.to_str().unwrap(), certs.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn reduce_rejects_out_of_scope_input() {
    let petersen = fixture("petersen.g");
    let out = rgraph(&[
        "reduce",
        petersen.to_str().unwrap(),
        "--t",
        "1",
        "--r",
        "3",
        "--mode",
        "cr1",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("precondition"));
}

#[test]
fn reduce_k5free_fixture_with_three_cut_split() {
    let dir = tempdir();
    let book = fixture("three-book-r6.g");
    let certs = dir.join("book.json");
    let out = rgraph(&[
        "reduce",
        book.to_str().unwrap(),
        "--t",
        "1",
        "--r",
        "6",
        "--mode",
        "k5free",
        "--out",
        certs.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let values: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&certs).unwrap()).unwrap();
    assert_eq!(values[1]["payload"]["step"], "three-cut-split");
    let out = rgraph(&["check", book.to_str().unwrap(), certs.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn census_is_reproducible() {
    let dir = tempdir();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let out = rgraph(&[
            "census",
            "--r",
            "3",
            "--max-n",
            "6",
            "--max-mu",
            "3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(report["kind"], "census");
    assert!(report["entries"].as_array().unwrap().iter().all(|e| e["class1"] == true));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
