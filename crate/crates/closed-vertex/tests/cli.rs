//! Process-level checks of the `closed-vertex` binary: exit codes, stream
//! separation, and byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closed-vertex"))
        .args(args)
        .env_remove("CLOSED_VERTEX_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn vertex_success() {
    let out = run(&["vertex", "0", "1", "1", "1", "--format", "plain"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "N^0_(1,1,1) = 1/1\n");

    let out = run(&["vertex", "0", "2", "1", "1", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"]["num"], "0");
    assert_eq!(v["trace"]["witness"], 3);
}

#[test]
fn vertex_invalid_degrees_exit_2() {
    let out = run(&["vertex", "0", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("degrees must not all be zero"), "{stderr}");
}

#[test]
fn vertex_negative_degree_exit_2() {
    let out = run(&["vertex", "0", "-1", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_shape() {
    let out = run(&["table", "--gmax", "0", "--dmax", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "g,d1,d2,d3,num,den");
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"0,1,1,1,1,1"));
}

#[test]
fn table_runs_are_byte_identical() {
    let first = run(&["table", "--gmax", "2", "--dmax", "4"]);
    let second = run(&["table", "--gmax", "2", "--dmax", "4"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn format_env_variable_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_closed-vertex"))
        .args(["vertex", "0", "1", "1", "1"])
        .env("CLOSED_VERTEX_FORMAT", "plain")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "N^0_(1,1,1) = 1/1\n");
}

#[test]
fn cremona_round_trip() {
    let class = r#"{"d":3,"c":[-1,-1,-1,-1,-1,-1]}"#;
    let once = run(&["cremona", class]);
    assert_eq!(once.status.code(), Some(0));
    let image: serde_json::Value = serde_json::from_str(&stdout(&once)).unwrap();
    assert_eq!(image, serde_json::json!({"d":1,"c":[0,0,0,0,-1,-1]}));

    let twice = run(&["cremona", stdout(&once).trim()]);
    let back: serde_json::Value = serde_json::from_str(&stdout(&twice)).unwrap();
    let original: serde_json::Value = serde_json::from_str(class).unwrap();
    assert_eq!(back, original);

    let bad = run(&["cremona", "{not json"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn oracle_exit_codes() {
    let out = run(&["oracle", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["decomposition_count"], 1);

    let out = run(&["oracle", "2", "2", "2", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["decompositions"][0].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert!(entries.iter().all(|e| e["multiplicity"] == 2));

    let out = run(&["oracle", "0", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nef_reports_are_reproducible() {
    let args = ["nef", "--lemma", "6.1", "--samples", "200", "--seed", "7"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["nef_certified"], true);

    let out = run(&["nef", "--lemma", "6.2", "--samples", "200", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
}
