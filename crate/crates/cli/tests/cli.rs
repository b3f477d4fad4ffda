use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn catparity(args: &[&str], stdin: &str) -> Output {
    run_with(Command::new(env!("CARGO_BIN_EXE_catparity")).args(args), stdin)
}

fn run_with(cmd: &mut Command, stdin: &str) -> Output {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerates_small_classes() {
    let o = catparity(&["enumerate", "avoiders", "3", "--pattern", "231"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 2 3\n1 3 2\n2 1 3\n3 1 2\n3 2 1\n");
    assert_eq!(stdout(&catparity(&["enumerate", "dyck", "--n", "1"], "")), "EN\n");
    // the empty permutation prints as an empty line
    assert_eq!(stdout(&catparity(&["enumerate", "avoiders", "0", "--pattern", "231"], "")), "\n");
}

#[test]
fn exit_codes() {
    assert_eq!(catparity(&["verify", "catalan-counts", "--n", "5"], "").status.code(), Some(0));
    assert_eq!(catparity(&["verify", "eo-equation", "--order", "6"], "").status.code(), Some(1));
    assert_eq!(catparity(&["verify", "no-such-check"], "").status.code(), Some(2));
    assert_eq!(catparity(&["enumerate", "perm", "10"], "").status.code(), Some(2));
    assert_eq!(catparity(&["map", "--name", "restricted-dyck"], "3 2 1\n").status.code(), Some(2));
    assert_eq!(catparity(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn stats_for_a_permutation() {
    let o = catparity(&["stats"], "3 2 7 1 6 5 4\n");
    assert!(o.status.success());
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["DES"], serde_json::json!([1, 3, 5, 6]));
    assert_eq!(v["DR"], serde_json::json!([3, 2, 2]));
    assert_eq!(v["mnd"], 3);
    assert_eq!(v["LPK"], serde_json::json!([3, 6, 7]));
    assert_eq!(v["inverse"], "4 2 1 7 6 5 3");
}

#[test]
fn maps_round_trip_on_stdin() {
    let fwd = catparity(&["map", "--name", "left-peak-transfer"], "2 4 5 1 3 6 8 7 9\n1 3 2\n");
    assert!(fwd.status.success());
    let back = catparity(&["map", "--name", "left-peak-transfer", "--dir", "inv"], &stdout(&fwd));
    assert_eq!(stdout(&back), "2 4 5 1 3 6 8 7 9\n1 3 2\n");
}

#[test]
fn verify_json_is_deterministic() {
    let payload = || {
        let o = catparity(&["verify", "left-peaks-descents", "--n", "6", "--format", "json"], "");
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let first = payload();
    assert_eq!(first["pass"], true);
    assert!(first["reading"].is_string());
    assert_eq!(first, payload());
}

#[test]
fn bounds_file_from_environment() {
    let embedded = include_str!("../../core/data/verify.toml");
    let tightened = embedded.replace("catalan-counts = 10", "catalan-counts = 4");
    assert_ne!(tightened, embedded);
    let path = std::env::temp_dir().join(format!("catparity-bounds-{}.toml", std::process::id()));
    std::fs::write(&path, tightened).unwrap();

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_catparity"));
    cmd.env("CATPARITY_CONFIG", &path).args(["verify", "catalan-counts", "--n", "5"]);
    let o = run_with(&mut cmd, "");
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound 4"));
}
