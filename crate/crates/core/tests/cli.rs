use std::process::{Command, Output};

use serde_json::{json, Value};

fn krtrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krtrace"))
        .args(args)
        .output()
        .unwrap()
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn coxeter_matrix_from_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("i2_5.json");
    std::fs::write(&path, r#"{"rank": 2, "m": [[1, 5], [5, 1]]}"#).unwrap();
    let from_file = krtrace(&[
        "trace",
        "--coxeter",
        path.to_str().unwrap(),
        "--word",
        "1 2 -1",
    ]);
    let preset = krtrace(&["trace", "--coxeter", "H2", "--word", "1 2 -1"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, preset.stdout);
}

#[test]
fn infinite_label() {
    let out = krtrace(&[
        "trace",
        "--coxeter",
        r#"{"rank":2,"m":[[1,0],[0,1]]}"#,
        "--word",
        "1 2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let same = krtrace(&["trace", "--coxeter", "Atilde1", "--word", "1 2"]);
    assert_eq!(out.stdout, same.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(
        krtrace(&["trace", "--coxeter", "A2", "--word", "1"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        krtrace(&["trace", "--coxeter", "nope", "--word", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        krtrace(&["trace", "--coxeter", "A2", "--word", "1 x"])
            .status
            .code(),
        Some(1)
    );
    let short = krtrace(&[
        "trace",
        "--coxeter",
        "A2",
        "--word",
        "1 2 1",
        "--truncation",
        "4",
    ]);
    assert_eq!(short.status.code(), Some(3));
    assert!(short.stdout.is_empty());
    assert!(String::from_utf8_lossy(&short.stderr).contains("truncation insufficient"));
}

#[test]
fn trace_json_shape() {
    let out = krtrace(&["--json", "trace", "--coxeter", "B2", "--word", "-2"]);
    assert_eq!(
        json_out(&out),
        json!({"num": [[1, 0, 0], [-1, 1, 0]], "den_q_pow": 1, "den_one_plus_tq_pow": 1})
    );
}

#[test]
fn verify_reports_pass() {
    let out = krtrace(&["verify", "hecke", "--coxeter", "B2", "--maxlen", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let cases = json_out(&out);
    let cases = cases.as_array().unwrap();
    assert_eq!(cases.len(), 2 * 5);
    assert!(cases.iter().all(|c| c["pass"] == json!(true)));
}

#[test]
fn selftest_passes() {
    let out = krtrace(&["selftest"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}
