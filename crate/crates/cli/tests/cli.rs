//! End-to-end tests of the `domrec` binary: subcommand output, exit codes,
//! and the walk serialization round trip through `verify`.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_domrec"))
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("domrec-cli-{}-{name}", std::process::id()))
}

fn write_tmp(name: &str, content: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, content).expect("temp file written");
    path
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const STAR: &str = "4 3\n0 3\n1 3\n2 3\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn info_reports_star_parameters() {
    let input = write_tmp("star-info.el", STAR);
    let out = bin().arg("info").arg(&input).arg("--d0").output().unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    for line in ["n=4", "m=3", "gamma=1", "Gamma=3", "bipartite=true", "chordal=true", "d0=4"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in:\n{text}");
    }
    std::fs::remove_file(input).ok();
}

#[test]
fn info_accepts_inline_graph6() {
    // K_3 in graph6
    let out = bin()
        .args(["info", "--inline", "--format", "graph6", "Bw"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    for line in ["gamma=1", "Gamma=1", "chordal=true"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in:\n{text}");
    }
}

#[test]
fn info_reports_cycle_bipartite() {
    let input = write_tmp("c4-info.el", C4);
    let out = bin().arg("info").arg(&input).output().unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    for line in ["bipartite=true", "chordal=false", "Gamma=2"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in:\n{text}");
    }
    std::fs::remove_file(input).ok();
}

#[test]
fn build_reports_components_and_writes_dot() {
    let input = write_tmp("star-build.el", STAR);
    let dot_path = tmp("star-build.dot");
    let out = bin()
        .arg("build")
        .arg(&input)
        .args(["--k", "3", "--out"])
        .arg(&dot_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("nodes=8"));
    assert!(text.contains("components=2"));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("graph reconfig {"));
    assert!(dot.contains("label=\"1110\""));

    let out = bin()
        .arg("build")
        .arg(&input)
        .args(["--k", "2", "--rule", "jump"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("components=1"));

    std::fs::remove_file(input).ok();
    std::fs::remove_file(dot_path).ok();
}

#[test]
fn walk_roundtrips_through_verify() {
    let input = write_tmp("c4-walk.el", C4);
    let walk_path = tmp("c4-walk.txt");
    let out = bin()
        .arg("walk")
        .arg(&input)
        .args(["--from", "1100", "--to", "0110", "--k", "3", "--out"])
        .arg(&walk_path)
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = bin()
        .arg("verify")
        .arg(&input)
        .arg("--walk")
        .arg(&walk_path)
        .args(["--k", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("valid=true"));

    // corrupting one set must fail verification with exit code 2
    let text = std::fs::read_to_string(&walk_path).unwrap();
    let broken = text.replace("0110", "0111");
    let broken_path = write_tmp("c4-walk-broken.txt", &broken);
    let out = bin()
        .arg("verify")
        .arg(&input)
        .arg("--walk")
        .arg(&broken_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("valid=false"));

    std::fs::remove_file(input).ok();
    std::fs::remove_file(walk_path).ok();
    std::fs::remove_file(broken_path).ok();
}

#[test]
fn walk_reports_disconnection_with_exit_two() {
    let input = write_tmp("star-nowalk.el", STAR);
    let out = bin()
        .arg("walk")
        .arg(&input)
        .args(["--from", "1110", "--to", "0001", "--k", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));

    // identical endpoints always walk
    let out = bin()
        .arg("walk")
        .arg(&input)
        .args(["--from", "1110", "--to", "1110", "--k", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1110\n");
    std::fs::remove_file(input).ok();
}

#[test]
fn jump_walks_verify_under_slide_rule() {
    let input = write_tmp("c4-slide.el", C4);
    let walk_path = tmp("c4-slide.txt");
    let out = bin()
        .arg("walk")
        .arg(&input)
        .args(["--from", "1010", "--to", "0101", "--rule", "slide", "--out"])
        .arg(&walk_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = bin()
        .arg("verify")
        .arg(&input)
        .arg("--walk")
        .arg(&walk_path)
        .args(["--rule", "slide"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("valid=true"));
    std::fs::remove_file(input).ok();
    std::fs::remove_file(walk_path).ok();
}

#[test]
fn parse_and_usage_failures_exit_one() {
    let bad = write_tmp("bad-input.el", "2 1\n0 5\n");
    let out = bin().arg("info").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    std::fs::remove_file(bad).ok();

    let out = bin().arg("info").arg("--no-such-flag").output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let input = write_tmp("c4-badset.el", C4);
    let out = bin()
        .arg("walk")
        .arg(&input)
        .args(["--from", "llll", "--to", "0110"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_file(input).ok();
}

#[test]
fn scan_resumes_from_checkpoint() {
    let ckpt = tmp("scan.ckpt");
    std::fs::remove_file(&ckpt).ok();
    let out = bin()
        .args(["scan", "--max-n", "4", "--checkpoint"])
        .arg(&ckpt)
        .output()
        .unwrap();
    assert!(out.status.success());
    let summary = stdout_of(&out);
    assert!(summary.contains("scanned=14 counterexamples=0"), "got {summary}");
    let full = std::fs::read_to_string(&ckpt).unwrap();
    assert_eq!(full.lines().count(), 14);

    // truncate and resume: the final checkpoint must match the full run
    let half: String = full.lines().take(7).map(|l| l.to_string() + "\n").collect();
    std::fs::write(&ckpt, &half).unwrap();
    let out = bin()
        .args(["scan", "--max-n", "4", "--checkpoint"])
        .arg(&ckpt)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("scanned=14 counterexamples=0"));
    assert_eq!(std::fs::read_to_string(&ckpt).unwrap(), full);

    // corrupt checkpoints restart with a warning
    std::fs::write(&ckpt, "not a checkpoint\n").unwrap();
    let out = bin()
        .args(["scan", "--max-n", "4", "--checkpoint"])
        .arg(&ckpt)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(std::fs::read_to_string(&ckpt).unwrap(), full);
    std::fs::remove_file(ckpt).ok();
}

#[test]
fn scan_family_filters_stay_clean() {
    for filter in ["bipartite", "chordal"] {
        let out = bin().args(["scan", "--max-n", "5", "--filter", filter]).output().unwrap();
        assert!(out.status.success());
        assert!(stdout_of(&out).contains("counterexamples=0"));
    }
}
