use std::io::Write;
use std::process::{Command, Output, Stdio};

fn p3dist(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_p3dist"))
        .args(args)
        .env("NO_COLOR", "1")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        &["analyze", "fixtures/example1.json"][..],
        &["analyze-vf", "fixtures/vf_line.json"],
        &["log-audit", "fixtures/log_22.json"],
        &["find-subfoliation", "fixtures/example2.json"],
    ] {
        let a = p3dist(args, None);
        let b = p3dist(args, None);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stdout));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verification_exits_zero_and_summarises_without_color() {
    let out = p3dist(&["verify-paper-examples"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], serde_json::json!(true));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(!err.contains('\u{1b}'), "NO_COLOR must suppress escape codes");
}

#[test]
fn stdin_input_and_exit_codes() {
    let out = p3dist(&["analyze-vf", "-"], Some(r#"{"kind":"vfield","coeffs":["0","x1","2*x2","3*x3"]}"#));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["degree1_case"], serde_json::json!("stable-points"));

    let out = p3dist(&["analyze-vf", "-"], Some(r#"{"kind":"vfield","coeffs":["x0","x1","x2","x3"]}"#));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], serde_json::json!("RadialField"));

    let out = p3dist(&["analyze", "fixtures/missing.json"], None);
    assert_eq!(out.status.code(), Some(1));

    let out = p3dist(&["table1"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table1_and_log_build() {
    let out = p3dist(&["table1", "--dmax", "3"], None);
    let v = json(&out);
    assert_eq!(v["rows"][3]["cells"][1], serde_json::json!("O ⊕ O(-1)"));
    let out = p3dist(
        &["log-build", "-"],
        Some(r#"{"kind":"logtype","coeffs":{"degrees":[1,1],"lambdas":[1,-1],"polys":["x0","x1"]}}"#),
    );
    let v = json(&out);
    assert_eq!(v["coeffs"], serde_json::json!(["x1", "-x0", "0", "0"]));
    assert_eq!(v["integrable"], serde_json::json!(true));
}
