use std::process::Command;

use cutjoin::cli::run;
use cutjoin::VerificationReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cutjoin"))
}

fn run_capture(args: &[&str]) -> (i32, String, String) {
    let dir = tempfile::tempdir().unwrap();
    let mut full = vec!["cutjoin", "--cache-dir", dir.path().to_str().unwrap()];
    full.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn chartable_small_degrees() {
    let (code, out, _) = run_capture(&["chartable", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines()
            .nth(1)
            .unwrap()
            .split_whitespace()
            .collect::<Vec<_>>(),
        ["(1)", "1"]
    );
    let (_, out, _) = run_capture(&["chartable", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["table"], serde_json::json!([[1, 1], [-1, 1]]));
    let (_, out, _) = run_capture(&["chartable", "8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["table"].as_array().unwrap();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 22));
}

#[test]
fn chartable_out_of_range_is_usage_error() {
    let (code, _, err) = run_capture(&["chartable", "13"]);
    assert_eq!(code, 2);
    assert!(err.contains("1..=12"));
    assert_eq!(run_capture(&["chartable", "0"]).0, 2);
}

#[test]
fn hurwitz_examples() {
    let (code, out, _) = run_capture(&["hurwitz", "--h", "0", "--eta", "2", "--series"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(1/2)*sinh(λ)");
    assert_eq!(
        run_capture(&["hurwitz", "--h", "0", "--eta", "2", "--g", "0"])
            .1
            .trim(),
        "1/2"
    );
    assert_eq!(
        run_capture(&["hurwitz", "--h", "1", "--eta", "1", "--g", "1"])
            .1
            .trim(),
        "1"
    );
    let (_, out, _) = run_capture(&["hurwitz", "--h", "0", "--eta", "2", "--series", "--raw"]);
    assert_eq!(out.trim(), "(1/4)*x - (1/4)*x^-1");
    let (code, _, err) = run_capture(&["hurwitz", "--h", "1", "--eta", "2", "--g", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("negative"));
    let (_, out, _) = run_capture(&["hurwitz", "--profile", "2", "--profile", "2"]);
    assert_eq!(out.trim(), "1/2");
}

#[test]
fn marinovafa_examples() {
    let (code, out, _) = run_capture(&["marinovafa", "--D", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "p_(1): 1/(2 sin(λ/2))");
    let (code, out, _) = run_capture(&["marinovafa", "--check", "vhook", "--max", "6", "--json"]);
    assert_eq!(code, 0);
    let r = VerificationReport::from_json(&out).unwrap();
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.summary.passed, 29);
    assert_eq!(
        run_capture(&["marinovafa", "--check", "cutjoin", "--D", "4"]).0,
        0
    );
    assert_eq!(run_capture(&["marinovafa", "--check", "nope"]).0, 2);
}

#[test]
fn verify_reports_and_exit_codes() {
    let (code, out, _) = run_capture(&["verify", "prop-f", "--max-d", "8", "--json"]);
    assert_eq!(code, 0);
    let r = VerificationReport::from_json(&out).unwrap();
    assert_eq!(r.to_json().trim(), out.trim());
    let (code, out, _) = run_capture(&["verify", "phi-golden"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("NOTE p_(4)") || l.starts_with("NOTE p_(2,2)"))
            .count(),
        2
    );
    assert_eq!(run_capture(&["verify", "bogus"]).0, 2);
}

#[test]
fn rendering_is_deterministic() {
    let a = run_capture(&["verify", "mv-golden", "--json"]).1;
    let b = run_capture(&["verify", "mv-golden", "--json"]).1;
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = bin()
        .args([
            "--cache-dir",
            dir.path().to_str().unwrap(),
            "verify",
            "vhook",
            "--max-d",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = bin().args(["verify", "bogus"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let bad = bin().args(["hurwitz", "--eta", "x"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cache_dir_precedence_and_files() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("CUTJOIN_CACHE_DIR", env_dir.path())
        .args(["cache", "path"])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        env_dir.path().to_str().unwrap()
    );
    let out = bin()
        .env("CUTJOIN_CACHE_DIR", env_dir.path())
        .args([
            "--cache-dir",
            flag_dir.path().to_str().unwrap(),
            "chartable",
            "5",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(flag_dir.path().join("chartable-d5.txt").exists());
    assert!(!env_dir.path().join("chartable-d5.txt").exists());
    let out = bin()
        .args([
            "--cache-dir",
            flag_dir.path().to_str().unwrap(),
            "cache",
            "clear",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(!flag_dir.path().join("chartable-d5.txt").exists());
}
