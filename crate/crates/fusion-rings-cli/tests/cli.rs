//! End-to-end runs of the `fusion-rings` binary.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fusion-rings"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn group_then_analyze_s3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s3.json");
    let o = run(&["group", "(0 1 2),(0 1)", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["--format", "structured", "analyze", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ring"]["rank"], 3);
    assert_eq!(v["burnside"]["is_burnside"]["value"], true);
    assert_eq!(v["burnside"]["is_dual_burnside"]["value"], false);
    assert!(v["burnside"]["is_dual_burnside"]["witness"].is_number());
}

#[test]
fn generated_ising_and_fibonacci() {
    let ising = stdout(&run(&["generate", "near-group", "C2", "0"]));
    let o = run_stdin(&["--format", "structured", "analyze", "-"], &ising);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["burnside"]["is_burnside"]["value"], true);
    assert_eq!(v["burnside"]["is_dual_burnside"]["value"], true);
    assert_eq!(v["central_series"]["nilpotency_class"], 2);
    assert_eq!(v["grading"]["iso_class"], serde_json::json!([2]));
    let fib = stdout(&run(&["generate", "fibonacci"]));
    let o = run_stdin(&["--format", "structured", "analyze", "-"], &fib);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["burnside"]["is_burnside"]["value"], false);
    assert_eq!(v["weak_integrality"], "irrational");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let axiom = write(dir.path(), "axiom.json", r#"{"name":"x","rank":2,"involution":[0,1],"tensor":[[[1,0],[0,1]],[[0,1],[0,0]]]}"#);
    assert_eq!(run(&["analyze", &axiom]).status.code(), Some(2));
    let garbage = write(dir.path(), "garbage.txt", "not a ring\n");
    assert_eq!(run(&["analyze", &garbage]).status.code(), Some(1));
    assert_eq!(run(&["group", "no-such-group"]).status.code(), Some(1));
    let o = run(&["analyze", &axiom]);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error [core]"));
}

#[test]
fn enumerate_screens_everything() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["enumerate", "1,1,1,1,2,2", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("4 rings"), "{text}");
    assert!(text.trim_end().ends_with("all excluded"), "{text}");
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 4);
}

#[test]
fn dual_and_quotient_write_rings() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = dir.path().join("s3.json");
    run(&["group", "S3", "-o", s3.to_str().unwrap()]);
    let o = run(&["--format", "structured", "dual", s3.to_str().unwrap()]);
    assert!(o.status.success());
    let q = run(&["--format", "structured", "quotient", s3.to_str().unwrap(), "--sub", "0,1"]);
    assert!(q.status.success(), "{}", String::from_utf8_lossy(&q.stderr));
    assert!(stdout(&q).contains("\"rank\": 2"));
}

#[test]
fn batch_rows_and_exit_codes() {
    let empty = tempfile::tempdir().unwrap();
    let o = run(&["batch", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().is_empty());

    let dir = tempfile::tempdir().unwrap();
    for (name, fam) in [("a-ising.json", "ising"), ("b-fib.json", "fibonacci")] {
        let p = dir.path().join(name);
        assert!(run(&["generate", fam, "-o", p.to_str().unwrap()]).status.success());
    }
    let o = run(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    write(dir.path(), "c-bad.json", "{ broken");
    let o = run(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let rows: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(rows.len(), 3);
    let status: Vec<&str> = rows.iter().map(|r| r.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(status, ["OK", "OK", "ERROR"], "{rows:?}");
    assert!(rows[0].starts_with("a-ising.json") && rows[2].contains("[builders]"));
}

#[test]
fn structured_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("a5.json");
    run(&["group", "A5", "-o", p.to_str().unwrap()]);
    let a = run(&["--format", "structured", "--seed", "7", "analyze", p.to_str().unwrap()]);
    let b = run(&["--format", "structured", "--seed", "7", "analyze", p.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
