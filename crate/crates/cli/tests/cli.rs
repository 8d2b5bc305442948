use std::process::Command;

use serde_json::Value;

fn ring_file(name: &str) -> String {
    format!("{}/../../rings/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tclab(args: &[&str], env: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tclab"));
    cmd.args(args).env_remove("TCLAB_WORKERS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = tclab(args, &[]);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn fermat_h1_table_is_zero() {
    let f = ring_file("fermat7.ring");
    let (code, v) = json(&["cohomology", "--ring", &f, "--i", "1"]);
    assert_eq!(code, 0);
    let rows = v["tables"].as_array().unwrap().iter().find(|t| t["name"] == "cohomology").unwrap()["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r["dim"] == 0 && r["i"] == 1));
}

#[test]
fn curve_routes_agree() {
    let f = ring_file("curve.ring");
    let (code, v) = json(&["verify", "schenzel-agree", "--ring", &f]);
    assert_eq!(code, 0);
    let table = v["tables"].as_array().unwrap().iter().find(|t| t["name"] == "schenzel_agreement").unwrap().clone();
    let rows = table["rows"].as_array().unwrap();
    assert!(!rows.is_empty() && rows.iter().all(|r| r["agree"] == true));
}

#[test]
fn tight_membership_lists_the_test_element_assumption() {
    let f = ring_file("fermat7.ring");
    let (code, v) = json(&["closure", "tight", "--ring", &f, "--ideal", "x; y", "--elem", "z^2", "--test-elem", "jacobian"]);
    assert_eq!(code, 0);
    let verdict = &v["verdicts"][0];
    assert_eq!(verdict["status"], "EvidenceTrue");
    assert_eq!(verdict["bound"]["e_max"], 2);
    assert_eq!(verdict["assumptions"][0], "c is a parameter test element");
}

#[test]
fn report_schema() {
    let (_, v) = json(&["hilbert", "--ring", "@poly2", "--char", "3", "--window", "0..2"]);
    for key in ["command", "ring", "window", "verdicts", "tables", "seed"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["ring"]["char"], 3);
    assert_eq!(v["ring"]["dim"], 2);
    assert_eq!(v["window"]["s_max"], 6);
    assert_eq!(v["window"]["powers"], serde_json::json!([1, 2, 4]));
    let (_, v) = json(&["dim", "--ring", "@curve4"]);
    assert_eq!(v["ring"]["provenance"], "user-declared");
    assert_eq!(v["verdicts"][1]["status"], "EvidenceTrue");
}

#[test]
fn certified_verdicts_carry_no_assumptions() {
    let runs: [&[&str]; 3] = [
        &["verify", "zero-maps", "--ring", "@curve4", "--sop", "a; d"],
        &["verify", "main", "--ring", "@fermat3", "--sop", "x; y"],
        &["isolated-check", "--ring", "@fermat3"],
    ];
    for args in runs {
        let (_, v) = json(args);
        for verdict in v["verdicts"].as_array().unwrap() {
            let status = verdict["status"].as_str().unwrap();
            if status.starts_with("Certified") {
                assert!(verdict["assumptions"].as_array().unwrap().is_empty(), "{verdict}");
            }
        }
    }
}

#[test]
fn text_and_json_report_the_same_verdicts() {
    let args = ["verify", "main", "--ring", "@fermat3", "--sop", "x; y"];
    let (_, v) = json(&args);
    let mut from_json: Vec<(String, String)> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["status"].as_str().unwrap().to_string(), x["claim"].as_str().unwrap().to_string()))
        .collect();
    let mut text_args = args.to_vec();
    text_args.push("--text");
    let (_, text) = tclab(&text_args, &[]);
    let mut from_text: Vec<(String, String)> = text
        .lines()
        .filter_map(|l| {
            let (status, rest) = l.split_once(' ')?;
            let claim = rest.trim_start().split("  bound=").next()?;
            status.starts_with(|c: char| c.is_ascii_uppercase()).then(|| (status.to_string(), claim.to_string()))
        })
        .filter(|(s, _)| ["CertifiedTrue", "CertifiedFalse", "EvidenceTrue", "EvidenceFalse", "Inconclusive"].contains(&s.as_str()))
        .collect();
    from_json.sort();
    from_text.sort();
    assert!(!from_json.is_empty());
    assert_eq!(from_json, from_text);
}

#[test]
fn false_and_inconclusive_exit_codes() {
    let (code, v) = json(&["closure", "limit", "--ring", "@fermat3", "--ideal", "x; y", "--elem", "z^2"]);
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["verdicts"][0]["status"], "EvidenceFalse");
    let (code, _) = json(&["dseq-check", "--ring", "@curve4", "--ideal", "b; c", "--window", "0..4"]);
    assert_eq!(code, 1);
    // [H^2]_{-6} of the cubic needs more stages than k_max = 1 allows
    let (code, _) = json(&["cohomology", "--ring", "@fermat3", "--i", "2", "--window", "-6..-6", "--kmax", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_3_with_machine_readable_json() {
    let dir = std::env::temp_dir().join(format!("tclab-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad_char = dir.join("nine.ring");
    std::fs::write(&bad_char, "char 9\nvar x 1\n").unwrap();
    let bad_rel = dir.join("inhom.ring");
    std::fs::write(&bad_rel, "char 7\nvar x 1\nvar y 1\nrel x^2+y^3\n").unwrap();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["hilbert".into(), "--ring".into(), "@nope".into()], "unknown-ring"),
        (vec!["hilbert".into(), "--ring".into(), bad_char.display().to_string()], "characteristic"),
        (vec!["hilbert".into(), "--ring".into(), bad_rel.display().to_string()], "relation"),
        (vec!["hilbert".into(), "--ring".into(), "@poly2".into(), "--window".into(), "4..1".into()], "usage"),
        (vec!["hilbert".into(), "--ring".into(), "@poly2".into(), "--emax".into(), "0".into()], "usage"),
        (vec!["closure".into(), "tight".into(), "--ring".into(), "@poly2".into(), "--ideal".into(), "x+y^2".into()], "ring"),
        (vec!["frobnicate".into()], "usage"),
    ];
    for (args, kind) in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, v) = json(&refs);
        assert_eq!(code, 3, "{args:?}");
        assert_eq!(v["error"]["kind"], kind, "{args:?}: {v}");
    }
    let (_, v) = json(&["hilbert", "--ring", &bad_rel.display().to_string()]);
    assert_eq!(v["error"]["line"], 4);
    assert!(v["error"]["message"].as_str().unwrap().contains("[2, 3]"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn worker_override() {
    let args = ["usd-check", "--ring", "@curve4", "--ideal", "a; d", "--window", "0..6"];
    let (c1, one) = tclab(&args, &[("TCLAB_WORKERS", "1")]);
    let (c4, four) = tclab(&args, &[("TCLAB_WORKERS", "4")]);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
    let (code, out) = tclab(&args, &[("TCLAB_WORKERS", "zero")]);
    assert_eq!(code, 3);
    assert!(out.contains("TCLAB_WORKERS"));
}

#[test]
fn help_exits_zero() {
    let (code, out) = tclab(&["--help"], &[]);
    assert_eq!(code, 0);
    assert!(out.contains("cohomology"));
}
