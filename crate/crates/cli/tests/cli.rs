use std::process::{Command, Output};

use serde_json::Value;

fn modcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modcodes"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = modcodes(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let v: Value = serde_json::from_str(&stdout(&all)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn exit_codes() {
    assert_eq!(modcodes(&["genus", "--N", "11"]).status.code(), Some(0));
    let domain = modcodes(&["genus", "--N", "0"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).starts_with("error:"));
    assert_eq!(modcodes(&["points", "--p", "13"]).status.code(), Some(2));
    assert_eq!(modcodes(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(modcodes(&["weights", "--level", "19", "--p", "12", "--a", "2"]).status.code(), Some(1));
}

#[test]
fn text_outputs() {
    assert_eq!(stdout(&["weights", "--level", "19", "--p", "13", "--a", "2"]).trim(), "x^17+96x^2+12x+60");
    assert_eq!(
        stdout(&["weights", "--xpx", "--p", "7", "--a", "2", "--convention", "plain"]).trim(),
        "1+42x^6+6x^7"
    );
    assert_eq!(stdout(&["hecke", "--N", "11", "--p", "3"]).trim(), "Tr(T_3) = -1 (count) = -1 (eta)");
    let pts = stdout(&["points", "--level", "19", "--p", "13"]);
    assert!(pts.starts_with("{inf, [0, 0], [0, 12], [1, 6]"));
    assert!(pts.contains("18 points"));
}

#[test]
fn json_outputs() {
    let v = json(&["points", "--level", "19", "--p", "13"]);
    assert_eq!(v["count"], 18);
    let v = json(&["genus", "--N", "11"]);
    assert_eq!(v["genus"], 1);
    let v = json(&["bounds", "tvz", "--q", "4"]);
    assert!(v.is_object());
}

#[test]
fn bounds_csv() {
    let out = stdout(&["bounds", "curve", "--q", "49", "--grid", "10", "--g", "1", "--n", "17"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("delta,gv,tvz,prop7"));
    assert_eq!(lines.count(), 11);
}

#[test]
fn reproduce_groups() {
    let v = json(&["reproduce", "--only", "weights"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(v["fail"], 0);
    let one = stdout(&["reproduce", "--only", "conic", "--jobs", "1"]);
    let four = stdout(&["reproduce", "--only", "conic", "--jobs", "4"]);
    assert_eq!(one, four);
    assert!(one.contains("ERRATUM"));
}

#[test]
fn deterministic_across_jobs() {
    let args = |j: &'static str| ["weights", "--level", "19", "--p", "13", "--a", "5", "--jobs", j];
    assert_eq!(stdout(&args("1")), stdout(&args("3")));
}
