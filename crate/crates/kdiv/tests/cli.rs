use std::process::Command;

use serde_json::Value;

fn kdiv(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kdiv").chain(args.iter().copied());
    let code = kdiv::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut argv = args.to_vec();
    argv.push("--json");
    let (code, out, err) = kdiv(&argv);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

const COMMANDS: &[&[&str]] = &[
    &["bernoulli", "--m", "12"],
    &["zeta-q", "--n", "11"],
    &["wn", "--n", "12"],
    &["wn", "--n", "10", "--l", "11"],
    &["dnl", "q", "--n", "11", "--l", "691"],
    &["dnl", "ff", "--p", "29", "--A", "0", "--B", "1", "--n", "3", "--l", "5"],
    &["dnl", "ss", "--p", "41", "--n", "5", "--l", "7"],
    &["curve", "--p", "29", "--A", "0", "--B", "1", "count"],
    &["curve", "--p", "5", "--A", "-3", "--B", "1", "trace"],
    &["curve", "--p", "19", "--A", "1", "--B", "0", "supersingular"],
    &["curve", "--p", "29", "--A", "0", "--B", "1", "zeta", "--n", "3"],
    &["split", "q", "--n", "5", "--l", "7"],
    &["split", "ff", "--p", "29", "--A", "0", "--B", "1", "--n", "2", "--l", "5"],
    &["homology", "q", "--n", "11", "--l", "691"],
    &["homology", "ss", "--p", "29", "--n", "3", "--l", "5"],
    &["moore", "--local", "24,48", "--global", "24", "--l", "2"],
    &["verify-paper"],
];

#[test]
fn dnl_q_691() {
    let v = json(&["dnl", "q", "--n", "11", "--l", "691"]);
    assert_eq!(v["order"]["value"], "691");
    assert_eq!(v["context"], "rational-field");
    let (code, table, _) = kdiv(&["dnl", "q", "--n", "11", "--l", "691"]);
    assert_eq!(code, 0);
    assert!(table.lines().any(|l| l.split_whitespace().eq(["order.value", "691"])));
}

#[test]
fn homology_ss_29() {
    let v = json(&["homology", "ss", "--p", "29", "--n", "3", "--l", "5"]);
    assert_eq!(v["outcome"], "holds");
    assert!(v["conclusion"].as_str().unwrap().starts_with("kernel of H_6("));
}

#[test]
fn verify_paper_all_pass() {
    let (code, out, _) = kdiv(&["verify-paper", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["pass"] == true));
    assert_eq!(v["summary"]["failed"], "0");
    assert_eq!(v["summary"]["passed"], entries.len().to_string());
    for id in ["ex-691", "ex-3617", "ex-p29", "ex-p41", "ex-p19", "split-q-small-n"] {
        assert!(entries.iter().any(|e| e["claim_id"] == id), "missing {id}");
    }
}

#[test]
fn curve_values() {
    assert_eq!(json(&["curve", "--p", "29", "--A", "0", "--B", "1", "count"])["count"], "30");
    assert_eq!(json(&["curve", "--p", "5", "--A=-3", "--B", "1", "trace"])["trace"], "-1");
    let z = json(&["curve", "--p", "5", "--A", "1", "--B", "1", "zeta", "--n", "1"]);
    assert_eq!(z["zeta_x"], "47/32");
    assert_eq!(z["zeta_f"], "-47/8");
}

#[test]
fn numbers_are_strings() {
    fn check(v: &Value) {
        match v {
            Value::Number(n) => panic!("native number {n}"),
            Value::Array(a) => a.iter().for_each(check),
            Value::Object(m) => m.values().for_each(check),
            _ => {}
        }
    }
    for args in COMMANDS {
        check(&json(args));
    }
}

#[test]
fn json_round_trips_byte_identical() {
    for args in COMMANDS {
        let mut argv = args.to_vec();
        argv.push("--json");
        let (_, out, _) = kdiv(&argv);
        let v: Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(out, again, "{args:?}");
    }
}

#[test]
fn repeated_runs_identical() {
    for args in COMMANDS {
        assert_eq!(kdiv(args), kdiv(args), "{args:?}");
        let mut argv = args.to_vec();
        argv.push("--json");
        assert_eq!(kdiv(&argv), kdiv(&argv), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["dnl", "q", "--n", "11"][..],
        &["dnl", "q", "--n", "x", "--l", "5"],
        &["frobnicate"],
        &[],
        &["curve", "--p", "29", "--A", "0", "--B", "1"],
        &["moore", "--global", "24", "--l", "2"],
    ] {
        let (code, out, err) = kdiv(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
}

#[test]
fn usage_error_names_flag() {
    let (_, _, err) = kdiv(&["dnl", "q", "--n", "11"]);
    assert!(err.contains("--l"));
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["dnl", "--help"], &["--version"]] {
        let (code, out, _) = kdiv(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(!out.is_empty());
    }
}

#[test]
fn domain_errors_exit_two() {
    for args in [
        &["dnl", "q", "--n", "2", "--l", "5"][..],
        &["dnl", "q", "--n", "11", "--l", "9"],
        &["dnl", "ss", "--p", "29", "--n", "1", "--l", "7"],
        &["curve", "--p", "29", "--A", "0", "--B", "0", "count"],
        &["curve", "--p", "5", "--A", "-3", "--B", "1", "zeta", "--n", "0"],
        &["wn", "--n", "4", "--l", "2"],
        &["zeta-q", "--n", "0"],
    ] {
        let (code, _, err) = kdiv(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.starts_with("error: "));
    }
}

#[test]
fn domain_error_json_body() {
    let (code, out, _) = kdiv(&["dnl", "q", "--n", "2", "--l", "5", "--json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "hypothesis-violation");
}

#[test]
fn not_applicable_is_not_an_error() {
    let v = json(&["homology", "q", "--n", "11", "--l", "5"]);
    assert_eq!(v["outcome"], "not-applicable");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_kdiv");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["dnl", "q", "--n", "11", "--l", "691"]), Some(0));
    assert_eq!(code(&["dnl", "q"]), Some(1));
    assert_eq!(code(&["dnl", "q", "--n", "2", "--l", "5"]), Some(2));
    let out = Command::new(bin).args(["verify-paper", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"failed\": \"0\""));
}
