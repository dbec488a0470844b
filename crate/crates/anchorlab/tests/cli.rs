//! Black-box checks of the binary: exit codes, stdin handling, file
//! input, and the format flag, driven through a spawned process.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_anchorlab"))
}

#[test]
fn analyze_reports_a_graph() {
    let out = bin().args(["analyze", "Dhc"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("graph Dhc: n=5, 5 edges, connected, 10 automorphisms"), "{text}");
    assert!(text.contains("anchor number 5, anchor-free"), "{text}");
}

#[test]
fn stdin_dash_reads_graph_per_line() {
    let mut child = bin()
        .args(["classify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"Dhc\nBw\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2, "{text}");
    assert!(text.starts_with("graph Dhc: regular"), "{text}");
}

#[test]
fn domain_errors_exit_one() {
    let out = bin().args(["analyze", "D!"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().args(["tables", "--definitely-not-a-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(2), "bare invocation wants a subcommand");
}

#[test]
fn reconstruct_reads_a_deck_file() {
    let path = std::env::temp_dir().join("anchorlab-accept-k3.deck");
    std::fs::write(&path, "A_\nA_\nA_\n").unwrap();
    let out = bin().args(["reconstruct", path.to_str().unwrap()]).output().unwrap();
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Bw\n");
}

#[test]
fn json_format_parses_and_carries_the_same_values() {
    let out = bin().args(["--format", "json", "analyze", "Dhc"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["n"], 5);
    assert_eq!(v[0]["anchor_number"], 5);
    assert_eq!(v[0]["anchor_free"], true);
}

#[test]
fn complement_flag_matches_direct_complement() {
    // C5 is self-complementary: everything but the relabeled key agrees
    let flipped = bin()
        .args(["--format", "json", "analyze", "Dhc", "--complement"])
        .output()
        .unwrap();
    let plain = bin().args(["--format", "json", "analyze", "Dhc"]).output().unwrap();
    assert!(flipped.status.success());
    let a: serde_json::Value = serde_json::from_slice(&flipped.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&plain.stdout).unwrap();
    for field in ["n", "edges", "connected", "automorphisms", "anchor_number", "anchor_free"] {
        assert_eq!(a[0][field], b[0][field], "{field}");
    }
}
