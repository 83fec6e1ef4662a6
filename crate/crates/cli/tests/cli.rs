use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_propfactor"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn lpcf_from_files() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x", "ababbabba\n");
    let y = write(&dir, "y", "ababaab\n");
    for alg in ["wa", "nga"] {
        let out = run(&[
            "lpcf",
            "--k-prime",
            "2",
            "--algorithm",
            alg,
            x.to_str().unwrap(),
            y.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(
            stdout(&out).starts_with("{\"length\":4,"),
            "{}",
            stdout(&out)
        );
    }
}

#[test]
fn empty_palindrome_inputs_are_rejected() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x", "");
    let y = write(&dir, "y", "");
    let out = run(&["lpalcf", x.to_str().unwrap(), y.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["lpcf", "--k-prime", "2", "x"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn bad_threshold_exits_one() {
    let out = run(&["--literal", "lpcf", "--k-prime", "3", "ab", "ab"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sqms_values_row() {
    let out = run(&[
        "--literal",
        "sqms",
        "--text",
        "aababaababb",
        "--query",
        "babababbaaab",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"values\":[3,3,3,3,3,2,1,2,1,1,2,1],\"best_length\":3,\
         \"witness\":{\"x_pos\":2,\"y_pos\":0,\"length\":3}}\n"
    );
    let tsv = run(&[
        "--literal",
        "--format",
        "tsv",
        "sqms",
        "--text",
        "aababaababb",
        "--query",
        "babababbaaab",
    ]);
    assert_eq!(stdout(&tsv), "3\n3\n3\n3\n3\n2\n1\n2\n1\n1\n2\n1\n");
}

#[test]
fn lpalcf_tsv_and_oracle() {
    let out = run(&[
        "--literal",
        "--format",
        "tsv",
        "--oracle",
        "lpalcf",
        "ababaa",
        "bababb",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\taba\n");
}

#[test]
fn runs_listing() {
    let out = run(&["--literal", "--format", "tsv", "runs", "ababaab"]);
    assert_eq!(stdout(&out), "0\t4\t2\n4\t5\t1\n");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "--literal",
        "lpcf",
        "--k-prime",
        "2",
        "ababaa",
        "bababb",
        "aabab",
    ];
    let first = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first.stdout);
    }
}

#[test]
fn bench_emits_table() {
    let out = bin()
        .args([
            "--format",
            "tsv",
            "bench",
            "--problem",
            "lpalcf",
            "--size",
            "500",
        ])
        .env("PROPFACTOR_SEED", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 5);
}
