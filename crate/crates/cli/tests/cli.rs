//! End-to-end tests of the `ncolor` binary: output shapes, exit codes, and
//! byte-level determinism.

use std::process::{Command, Output};

fn ncolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncolor"))
        .args(args)
        .output()
        .expect("failed to run ncolor binary")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn table_pl_csv() {
    let out = ncolor(&["table", "pl", "--max", "8", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"index,value"));
    assert_eq!(lines.last(), Some(&"8,160"));
    assert_eq!(lines.len(), 10);
    assert!(!text.contains('\r'));
}

#[test]
fn table_t_json_carries_worked_values() {
    let out = ncolor(&["table", "t", "--k", "3", "--r", "3", "--max", "11", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(json["name"], "t");
    assert_eq!(json["params"]["k"], 3);
    assert_eq!(json["params"]["r"], 3);
    let values = json["values"].as_array().unwrap();
    assert_eq!(values[11].to_string(), "38");
    assert_eq!(values[10].to_string(), "23");
}

#[test]
fn table_pretty_has_header() {
    let out = ncolor(&["table", "s-cong", "--s", "1", "--k", "2", "--max", "6", "--format", "pretty"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("# s_cong s=1 k=2\n"), "{text}");
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn enumerate_ncolor_weight_four() {
    let out = ncolor(&["enumerate", "ncolor", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().any(|l| l == "3_2+1_1"));
}

#[test]
fn enumerate_ncolor_min_part() {
    let out = ncolor(&["enumerate", "ncolor", "3", "--min-part", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 3);
}

#[test]
fn enumerate_partitions_weight_four() {
    let out = ncolor(&["enumerate", "partitions", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().any(|l| l == "2+1+1"));
}

#[test]
fn verify_all_small_passes() {
    let out = ncolor(&["verify", "all", "--max", "12"]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    for line in stdout_of(&out).lines() {
        let json: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(json["status"], "pass", "{line}");
    }
}

#[test]
fn verify_main_sigma_example() {
    let out = ncolor(&[
        "verify", "main", "--A", "sigma", "--alpha", "2", "--r", "3", "--max", "20",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(json["identity"], "main_theorem");
    assert_eq!(json["function"], "power(2)");
    assert_eq!(json["params"]["r"], 3);
    assert_eq!(json["status"], "pass");
}

#[test]
fn verify_pretty_format() {
    let out = ncolor(&["verify", "phi", "--max", "6", "--format", "pretty"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "pass phi_theorem range=6");
}

#[test]
fn selftest_passes() {
    let out = ncolor(&["selftest"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("all pinned values match"));
}

#[test]
fn unknown_sequence_is_usage_error() {
    let out = ncolor(&["table", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("unknown sequence"), "{err}");
    assert!(err.contains("pl, p, t, ell"), "{err}");
}

#[test]
fn unknown_identity_is_usage_error() {
    let out = ncolor(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("valid names"));
}

#[test]
fn missing_parameter_is_usage_error() {
    let out = ncolor(&["table", "t", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--k"));
}

#[test]
fn k_past_order_is_usage_error() {
    let out = ncolor(&["table", "t", "--k", "50", "--r", "1", "--max", "40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("exceeds"));
}

#[test]
fn s_not_below_k_is_usage_error() {
    let out = ncolor(&["table", "s-cong", "--s", "2", "--k", "2", "--max", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--s must be below --k"));
}

#[test]
fn clap_rejects_unknown_flags_with_code_2() {
    let out = ncolor(&["table", "pl", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["table", "pl", "--max", "20", "--format", "json"],
        vec!["verify", "corollaries", "--max", "10"],
        vec!["enumerate", "ncolor", "6"],
    ] {
        let first = ncolor(&args);
        let second = ncolor(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn table_output_to_file() {
    let dir = std::env::temp_dir().join("ncolor-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pl.csv");
    let out = ncolor(&["table", "pl", "--max", "4", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().last(), Some("4,13"));
    std::fs::remove_file(path).ok();
}
