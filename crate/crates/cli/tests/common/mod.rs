#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use serde_json::{Map, Value};

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn finish(out: Output) -> Run {
    Run {
        code: out.status.code().expect("ticf exited by signal"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn ticf(args: &[&str]) -> Run {
    finish(
        Command::new(env!("CARGO_BIN_EXE_ticf"))
            .args(args)
            .output()
            .expect("ticf runs"),
    )
}

pub fn ticf_with_threads(args: &[&str], threads: usize) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ticf"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads.to_string())
        .output()
        .expect("ticf runs");
    finish(out)
}

/// Runs with `--json` and parses the single flat object.
pub fn ticf_json(args: &[&str]) -> Map<String, Value> {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let run = ticf(&all);
    assert_eq!(run.code, 0, "ticf {args:?} failed: {}", run.stderr);
    match serde_json::from_str(&run.stdout).expect("valid JSON") {
        Value::Object(map) => map,
        other => panic!("expected an object, got {other}"),
    }
}

pub fn number(map: &Map<String, Value>, key: &str) -> f64 {
    map.get(key)
        .and_then(Value::as_f64)
        .unwrap_or_else(|| panic!("missing number {key} in {map:?}"))
}

/// The stderr of a failed run is one `error[<code>]: ...` line; returns the code.
pub fn reason(run: &Run) -> &str {
    let lines: Vec<&str> = run.stderr.lines().collect();
    assert_eq!(lines.len(), 1, "stderr is not one line: {:?}", run.stderr);
    let rest = lines[0].strip_prefix("error[").expect("reason prefix");
    &rest[..rest.find(']').expect("closing bracket")]
}

/// Checks header, row count, LF endings and the 17-significant-digit format.
pub fn check_csv(doc: &str, header: &str, rows: usize) {
    assert!(!doc.contains('\r'), "CRLF in CSV");
    assert!(doc.ends_with('\n'));
    let mut lines = doc.lines();
    assert_eq!(lines.next(), Some(header));
    let columns = header.split(',').count();
    let mut count = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), columns, "row {count}: {line}");
        for f in fields {
            let (mantissa, exponent) = f.split_once('e').unwrap_or_else(|| panic!("no exponent in {f}"));
            let digits = mantissa.trim_start_matches('-');
            assert!(digits.len() == 18 && digits.as_bytes()[1] == b'.', "not 17 digits: {f}");
            assert!(exponent.parse::<i32>().is_ok(), "bad exponent: {f}");
            assert!(f.parse::<f64>().unwrap().is_finite());
        }
        count += 1;
    }
    assert_eq!(count, rows);
}

pub fn files_in(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .expect("readable dir")
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}
