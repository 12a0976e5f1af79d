use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn aqtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqtab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_aqtab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

const WORKED: [&str; 4] = ["--pairs", "2,1;3,1;0,2", "--lambda", "0,2,4"];

#[test]
fn build_ascii() {
    let out = aqtab(&[&["build"][..], &WORKED].concat());
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("signed tableau\n- + -\n+ -\n+ -\n+\n+\n"));
    assert!(text.contains("quasitableau\n4 3 1\n3 2\n2 0\n1\n0\n"));
}

#[test]
fn build_json_cells() {
    let out = aqtab(&[&["build", "--format", "json"][..], &WORKED].concat());
    let v = json(&out);
    assert_eq!(
        v["signed"]["rows"],
        serde_json::json!(["-+-", "+-", "+-", "+", "+"])
    );
    let cells = v["quasitableau"]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 9);
    assert_eq!(
        cells[0],
        serde_json::json!({"row": 1, "col": 1, "sign": "-", "entry": {"doubled": 8}, "block": 1})
    );
}

#[test]
fn build_latex() {
    let out = aqtab(&[&["build", "--format", "latex", "--show-blocks"][..], &WORKED].concat());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("\\begin{array}{ccc}").count(), 2);
    assert!(text.contains("{4}_{1} & {3}_{2} & {1}_{3}"));
}

#[test]
fn classify_flags() {
    let v = json(&aqtab(&[&["classify"][..], &WORKED].concat()));
    assert_eq!(v["label"], "nice");
    assert_eq!(v["nice"], true);
    assert_eq!(v["weakly_good"], false);
    let v = json(&aqtab(&[
        "classify", "--pairs", "2,2;1,0", "--lambda", "0,2",
    ]));
    assert_eq!(v["weakly_fair"], true);
    assert_eq!(v["nice"], false);
    let single = aqtab(&["classify", "--pairs", "1,2", "--lambda", "-3"]);
    assert_eq!(code(&single), 0);
    assert_eq!(json(&single)["good"], true);
}

#[test]
fn nonvanishing_exit_codes() {
    let out = aqtab(&[&["nonvanishing"][..], &WORKED].concat());
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "nonzero");

    let out = aqtab(&[
        "nonvanishing",
        "--pairs",
        "2,1;3,1;0,2",
        "--lambda",
        "0,3,4",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["failing_pair"], 1);

    let out = aqtab(&["nonvanishing", "--pairs", "2,2;1,0", "--lambda", "0,2"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["status"], "inconclusive");

    let out = aqtab(&["nonvanishing", "--pairs", "1,0;1,1", "--lambda", "0,6"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "not_in_mediocre_range");
}

#[test]
fn dirac_verdicts() {
    let out = aqtab(&[&["dirac"][..], &WORKED].concat());
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["dirac_index_nonzero"], true);
    assert_eq!(v["witness"], serde_json::json!({"a": [1, 2], "b": [1, 0]}));

    let out = aqtab(&["dirac", "--pairs", "0,2;1,1;0,2", "--lambda", "0,1,2"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["dirac_index_nonzero"], false);
    assert_eq!(v["failure_site"]["window"], serde_json::json!([1, 3]));

    let out = aqtab(&["dirac", "--pairs", "2,1;3,1;0,2", "--lambda", "0,3,4"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["error"]["kind"], "module_vanishes");

    let out = aqtab(&["dirac", "--pairs", "2,2;1,0", "--lambda", "0,2"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "not_in_nice_range");
}

#[test]
fn json_input_from_stdin_and_file() {
    let doc = r#"{"pairs": [[2,1],[3,1],[0,2]], "lambda": [0,2,4]}"#;
    let out = with_stdin(&["dirac", "--input", "-"], doc);
    assert_eq!(code(&out), 0);

    let path = std::env::temp_dir().join(format!("aqtab-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, doc).unwrap();
    let out = aqtab(&["classify", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(json(&out)["label"], "nice");
}

#[test]
fn invalid_input_is_a_json_error() {
    for args in [
        &["classify", "--pairs", "1,1;0,0", "--lambda", "0,0"][..],
        &["classify", "--pairs", "1,1", "--lambda", "0,1"],
        &["classify", "--pairs", "1;1", "--lambda", "0"],
        &["classify", "--pairs", "1,1"],
        &["classify", "--bogus"],
    ] {
        let out = aqtab(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(json(&out)["error"]["kind"].is_string(), "{args:?}");
    }
    let out = with_stdin(&["classify", "--input", "-"], "{not json");
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "parse");
}

#[test]
fn verify_small_run() {
    let start = std::time::Instant::now();
    let out = aqtab(&["verify", "--which", "all", "--n-max", "4"]);
    assert!(start.elapsed() < std::time::Duration::from_secs(1));
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["overlap", "dirac", "positional"]);

    let out = aqtab(&["verify", "--which", "overlap", "--n-max", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["reports"][0]["disagreements"], 0);

    assert_eq!(code(&aqtab(&["verify", "--n-max", "1"])), 2);
}
