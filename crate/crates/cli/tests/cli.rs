use std::process::{Command, Output};

use serde_json::Value;

fn compaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compaut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn psl2_witness_succeeds() {
    let out = compaut(&["witness", "psl2", "--q", "9", "--i", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "success");
    assert_eq!(v["result"]["verified"], true);
    assert_eq!(v["result"]["variant"], "q1mod4");
    assert_eq!(v["manifest"]["digest"].as_str().unwrap().len(), 64);
}

#[test]
fn parse_error_exits_3() {
    let out = compaut(&["mappings", "--group", "A5 x"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("offset 5"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn cap_exits_4() {
    let out = compaut(&[
        "--cap", "100", "spectrum", "--group", "A5 x C2", "--k-min", "1", "--k-max", "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn spectrum_csv() {
    let out = compaut(&[
        "--format", "csv", "spectrum", "--group", "C5", "--k-min", "-2", "--k-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.contains('k'), "{header}");
    assert!(lines.count() > 0);
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("compaut-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = ["verify-theorem", "--scope", "A5", "S5"];
    let printed = json(&compaut(&args));
    let mut with_out = vec!["--out", path.to_str().unwrap()];
    with_out.extend(args);
    let out = compaut(&with_out);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["result"], printed["result"]);
    assert_eq!(written["manifest"]["digest"], printed["manifest"]["digest"]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn digest_independent_of_jobs() {
    let digest = |jobs: &str, args: &[&str]| {
        let mut full = vec!["--jobs", jobs];
        full.extend(args);
        let out = compaut(&full);
        assert_eq!(out.status.code(), Some(0));
        json(&out)["manifest"]["digest"].clone()
    };
    for args in [
        &["verify-theorem", "--scope", "A5", "PSL2(7)"][..],
        &[
            "--seed", "11", "witness", "wreath", "--base", "A5", "--n", "3",
        ][..],
        &["mappings", "--group", "D6"][..],
    ] {
        assert_eq!(digest("1", args), digest("4", args), "{args:?}");
    }
}

#[test]
fn help_lists_grammar_and_exit_codes() {
    let out = compaut(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PSL2"));
    assert!(text.contains("Exit codes"));
}
