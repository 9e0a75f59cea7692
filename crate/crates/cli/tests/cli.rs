use std::path::Path;
use std::process::{Command, Output};

use concordance_cli::CliError;

fn concordance(args: &[&str], cache_env: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_concordance"));
    cmd.args(args).env_remove("CONCORDANCE_CACHE");
    if let Some(dir) = cache_env {
        cmd.env("CONCORDANCE_CACHE", dir);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn d_table_as_csv() {
    let o = concordance(&["--format", "csv", "d", "5/2"], None);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "label,d\n0,0\n1,2/5\n2,-2/5\n3,-2/5\n4,2/5\n");
}

#[test]
fn obstruct_reports_the_verdict() {
    let o = concordance(&["obstruct", "29/11", "name=8_13"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("8_13 (K_{29,11})\nverdict: infinite-order\n"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("T_29 ") && l.ends_with("yes")));
    assert!(text.lines().any(|l| l.starts_with("D_29 ") && l.ends_with("yes")));

    let o = concordance(&["--format", "json", "obstruct", "9,2"], None);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["verdict"], "inconclusive");
    assert_eq!(json["tau"].as_object().unwrap().len(), 9);
}

#[test]
fn hfk_of_the_trefoil() {
    let o = concordance(&["--format", "csv", "hfk", "3/1"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "label,A,M\n0,-1,-1/2\n0,0,1/2\n0,1,3/2\n1,0,1/6\n2,0,1/6\n");
}

#[test]
fn invalid_input_exits_with_one() {
    for args in [
        &["obstruct", "4/2"][..],
        &["tau", "9/3"],
        &["d", "seven"],
        &["--oracle", "tau", "29/11"],
        &["--jobs", "0", "tau", "3/1"],
        &["twist", "4"],
        &["batch", "/nonexistent/knots.csv"],
    ] {
        let o = concordance(args, None);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).starts_with("error: "), "{args:?}");
    }
    assert!(stderr(&concordance(&["obstruct", "4/2"], None)).contains("odd"));
}

#[test]
fn internal_errors_map_to_two() {
    let e = CliError::from(concordance_core::Error::Inconsistency { check: "two-survivors", detail: "x".into() });
    assert_eq!(e.exit_code(), 2);
    assert!(e.to_string().contains("two-survivors"));
    assert_eq!(CliError::from(concordance_core::Error::InvalidKnot("p".into())).exit_code(), 1);
}

#[test]
fn oracle_flag_matches_default() {
    let a = concordance(&["--format", "json", "obstruct", "7/3"], None);
    let b = concordance(&["--oracle", "--format", "json", "obstruct", "7/3"], None);
    assert!(b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn batch_writes_csv_rows_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.csv");
    std::fs::write(&input, "name,p,q\n8_13,29,11\nbad,4,2\n4_1,5,2\n").unwrap();
    let output = dir.path().join("out.csv");
    let o = concordance(&["--jobs", "2", "batch", input.to_str().unwrap(), "-o", output.to_str().unwrap()], None);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&output).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("name,p,q,det,verdict"));
    assert!(lines[1].starts_with("8_13,29,11,29,infinite-order,"));
    assert!(lines[2].starts_with("bad,") && lines[2].contains("error"));
    assert!(lines[3].starts_with("4_1,5,2,5,inconclusive,"));

    std::fs::write(&input, "name,p,q\n").unwrap();
    let o = concordance(&["--format", "csv", "batch", input.to_str().unwrap()], None);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
}

#[test]
fn cache_environment_overrides_flag() {
    let flag_dir = tempfile::tempdir().unwrap();
    let env_dir = tempfile::tempdir().unwrap();
    let cold = concordance(&["--format", "json", "obstruct", "53/22"], None);
    let args = ["--cache", flag_dir.path().to_str().unwrap(), "--format", "json", "obstruct", "53/22"];
    let first = concordance(&args, Some(env_dir.path()));
    let warm = concordance(&args, Some(env_dir.path()));
    assert!(env_dir.path().join("53_22.json").exists());
    assert!(!flag_dir.path().join("53_22.json").exists());
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(cold.stdout, warm.stdout);
}
