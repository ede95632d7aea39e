//! End-to-end checks of the `bench` binary: subcommands, config/flag
//! precedence, report files, and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bench"))
        .args(args)
        .output()
        .expect("failed to launch bench")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn presets_catalog_lists_all_twelve_functions() {
    let output = bench(&["presets"]);
    assert!(output.status.success());
    let text = stdout(&output);
    for id in 1..=12 {
        assert!(text.contains(&format!("F{id} ")), "missing F{id} in:\n{text}");
    }
    // Spot values from the preset table.
    let f5 = text.lines().find(|l| l.starts_with("F5 ")).unwrap();
    assert!(f5.contains("300") && f5.contains("100000"), "F5 row: {f5}");
    let f7 = text.lines().find(|l| l.starts_with("F7 ")).unwrap();
    assert!(f7.contains("7.5e-3"), "F7 row: {f7}");
    assert!(text.contains("pc = 0.95"));
    assert!(text.contains("omega = 0.729844"));
}

#[test]
fn functions_catalog_prints_the_published_facts() {
    let output = bench(&["functions"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let rows = text
        .lines()
        .filter(|l| {
            l.split_whitespace()
                .next()
                .is_some_and(|tok| tok.len() <= 3 && tok.starts_with('F'))
        })
        .count();
    assert_eq!(rows, 12, "twelve catalog rows expected:\n{text}");
    for needle in ["Himmelblau", "Branin RCOS", "Zakharov", "-186.73090883102384"] {
        assert!(text.contains(needle), "missing `{needle}` in:\n{text}");
    }
}

#[test]
fn run_writes_reports_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a");
    let args = [
        "run",
        "--function",
        "F2",
        "--algo",
        "wsa",
        "--runs",
        "3",
        "--evals",
        "2000",
        "--seed",
        "5",
        "--jobs",
        "2",
        "--out",
        out.to_str().unwrap(),
    ];
    let output = bench(&args);
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    for file in ["summary.csv", "runs.csv", "convergence.csv"] {
        assert!(out.join(file).exists(), "{file} missing");
    }
    assert!(!out.join("shifts.txt").exists(), "F2 must not be shifted");

    let out2 = dir.path().join("b");
    let mut args2 = args;
    args2[args.len() - 1] = out2.to_str().unwrap();
    assert!(bench(&args2).status.success());
    let strip_wall = |p: &Path| -> Vec<String> {
        fs::read_to_string(p)
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    assert_eq!(
        strip_wall(&out.join("summary.csv")),
        strip_wall(&out2.join("summary.csv"))
    );
    assert_eq!(
        fs::read(out.join("runs.csv")).unwrap(),
        fs::read(out2.join("runs.csv")).unwrap()
    );
}

#[test]
fn shifted_functions_persist_their_shift_record() {
    let dir = tempfile::tempdir().unwrap();
    let output = bench(&[
        "run",
        "--function",
        "F11",
        "--algo",
        "wsa",
        "--runs",
        "1",
        "--pop",
        "10",
        "--evals",
        "100",
        "--shift-seed",
        "7",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let shifts = fs::read_to_string(dir.path().join("shifts.txt")).unwrap();
    let fields: Vec<&str> = shifts.split_whitespace().collect();
    assert_eq!(fields[0], "F11");
    assert_eq!(fields[1], "7");
    assert_eq!(fields[2], "100");
    assert_eq!(fields.len(), 3 + 100);
}

#[test]
fn flags_override_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("exp.toml");
    fs::write(
        &config,
        r#"
function = "F1"
algorithm = "wsa"
runs = 2
evals = 1500

[wsa]
eta = 40.0
"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    let output = bench(&[
        "run",
        "--config",
        config.to_str().unwrap(),
        "--function",
        "F2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let summary = fs::read_to_string(out.join("summary.csv")).unwrap();
    assert!(summary.lines().nth(1).unwrap().starts_with("F2,wsa,2,"));
}

#[test]
fn unknown_function_is_a_config_error() {
    let output = bench(&["run", "--function", "F13", "--algo", "wsa"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("F13"));
}

#[test]
fn missing_algorithm_is_a_config_error() {
    let output = bench(&["run", "--function", "F1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unparseable_config_file_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    fs::write(&config, "function = ").unwrap();
    let output = bench(&["run", "--config", config.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unwritable_output_directory_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let out = blocker.join("nested");
    let output = bench(&[
        "run",
        "--function",
        "F1",
        "--algo",
        "de",
        "--runs",
        "1",
        "--pop",
        "10",
        "--evals",
        "10",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(3));
}
