//! End-to-end checks of the binary: exit codes, byte determinism, and
//! file round trips.

use std::path::Path;
use std::process::{Command, Output};

fn ramsey(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Drop the one timing line so reports can be byte-compared.
fn stable(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("wall-ms:"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn generate_check_certify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramsey(
        &["generate", "--example", "7", "--n", "3", "-o", "ex7.json"],
        dir.path(),
    );
    assert!(out.status.success());

    let check = ramsey(
        &["check", "ex7.json", "--target", "cycle", "--size", "6"],
        dir.path(),
    );
    assert_eq!(check.status.code(), Some(1), "no monochromatic C6");
    assert!(stdout_of(&check).contains("verdict: absent"));

    let check = ramsey(
        &["check", "ex7.json", "--target", "cycle-min", "--size", "6"],
        dir.path(),
    );
    assert_eq!(check.status.code(), Some(0), "a long cycle exists");

    let certify = ramsey(&["certify", "ex7.json"], dir.path());
    assert_eq!(certify.status.code(), Some(0));
    assert!(stdout_of(&certify).contains("0 invalid"));
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    // usage error from clap
    let out = ramsey(&["check", "--no-such-flag"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = ramsey(
        &["check", "nope.json", "--target", "path", "--size", "4"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    // enumeration too large for the mask representation
    let out = ramsey(
        &["verify", "--parts", "5,5,5,5", "--target", "path", "--size", "4"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
    // explicit cap
    let out = ramsey(
        &[
            "verify", "--parts", "3,3", "--target", "path", "--size", "4",
            "--max-colorings", "100",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
    // condition failure is a verdict, not an error
    let out = ramsey(
        &["conditions", "--n", "3", "--parts", "4,4,1,1", "--target", "cycle"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--parts", "3,3", "--target", "path", "--size", "5"];
    let a = ramsey(&args, dir.path());
    let b = ramsey(&args, dir.path());
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(stable(&stdout_of(&a)), stable(&stdout_of(&b)));

    let args = ["generate", "--example", "4", "--n", "3"];
    let a = ramsey(&args, dir.path());
    let b = ramsey(&args, dir.path());
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert!(a.status.success());
}

#[test]
fn verify_witness_is_a_loadable_instance() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramsey(
        &[
            "verify", "--parts", "3,3", "--target", "path", "--size", "5",
            "--witness", "w.json", "--csv", "log.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1), "failures exist");
    let recheck = ramsey(
        &["check", "w.json", "--target", "path", "--size", "5"],
        dir.path(),
    );
    assert_eq!(recheck.status.code(), Some(1), "witness really lacks P5");

    // a second run appends a record without repeating the header
    let out = ramsey(
        &[
            "verify", "--parts", "3,3", "--target", "path", "--size", "4",
            "--csv", "log.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let log = std::fs::read_to_string(dir.path().join("log.csv")).unwrap();
    let lines: Vec<&str> = log.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "parts,n,target,colorings,failures,witness-file");
    assert!(lines[1].starts_with("3+3,6,P5,512,"));
    assert_eq!(lines[2], "3+3,6,P4,512,0,");
}

#[test]
fn ham_reports_both_colors_by_default() {
    let dir = tempfile::tempdir().unwrap();
    // all-red balanced host: red side is complete, blue side empty
    let text = r#"{"format": 1, "part_sizes": [3, 3], "coloring": "000000000"}"#;
    std::fs::write(dir.path().join("allred.json"), text).unwrap();
    let out = ramsey(
        &["ham", "allred.json", "--theorem", "chvatal"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "red side is guaranteed");
    let text = stdout_of(&out);
    assert!(text.contains("red: guaranteed"));
    assert!(text.contains("blue: unknown"));

    let out = ramsey(
        &["ham", "allred.json", "--theorem", "chvatal", "--color", "blue"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));

    // lasvergnas rejects out-of-range q
    let out = ramsey(
        &["ham", "allred.json", "--theorem", "lasvergnas", "--q", "9"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_dot_is_deterministic_and_complete() {
    let dir = tempfile::tempdir().unwrap();
    ramsey(
        &["generate", "--example", "6", "--n", "2", "-o", "ex6.json"],
        dir.path(),
    );
    let a = ramsey(&["export-dot", "ex6.json"], dir.path());
    let b = ramsey(&["export-dot", "ex6.json"], dir.path());
    assert_eq!(stdout_of(&a), stdout_of(&b));
    let dot = stdout_of(&a);
    // host K_{4,4}: 16 edges, each tinted
    assert_eq!(
        dot.matches("[color=red]").count() + dot.matches("[color=blue]").count(),
        16
    );
    assert!(dot.contains("subgraph cluster_part1"));
}
