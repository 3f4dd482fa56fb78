//! Command-line front end. Everything the binary does goes through
//! [`run_command`], which returns the exit code and the stdout text.

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::corpus::verify_paper_examples;
use crate::curves::conormal_invariants;
use crate::distribution::{classify, is_integrable, table1, validate_oneform};
use crate::error::{Error, Result};
use crate::exterior::{ExtForm, VField};
use crate::groebner::modp::{check_leading_ideal, ModPCheck};
use crate::groebner::Ideal;
use crate::input::{parse_input, InputDoc};
use crate::logarithmic::{audit_log_form, build_log_form, LogType};
use crate::report;
use crate::sections::compute_tf;

#[derive(Parser, Debug)]
#[command(name = "p3dist", version, about = "Exact analysis of distributions and foliations on P^3")]
struct Cli {
    /// Recompute Gröbner bases modulo this prime and compare leading-term ideals.
    #[arg(long, global = true, value_name = "PRIME")]
    mod_p: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for a 1-form document.
    Analyze { file: String },
    /// Singular scheme and conormal invariants of a vector field document.
    AnalyzeVf { file: String },
    /// Minimal twist t_F and a canonical section.
    FindSubfoliation { file: String },
    /// Expand a logarithmic type into its 1-form.
    LogBuild { file: String },
    /// Compare a logarithmic form's singular invariants with the generic counts.
    LogAudit { file: String },
    /// Split types O(1-t) ⊕ O(1+t-d).
    Table1 {
        #[arg(long)]
        dmax: u32,
    },
    /// Run the bundled example corpus; exit 0 iff every check passes.
    VerifyPaperExamples,
}

fn read_source(file: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if file == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(file).map_err(|e| Error::Input(format!("reading {file}: {e}")))?;
    }
    Ok(text)
}

fn expect_oneform(doc: InputDoc) -> Result<ExtForm> {
    match doc {
        InputDoc::OneForm(w) => Ok(w),
        _ => Err(Error::Input("expected a document of kind oneform".into())),
    }
}

fn expect_vfield(doc: InputDoc) -> Result<VField> {
    match doc {
        InputDoc::VField(v) => Ok(v),
        _ => Err(Error::Input("expected a document of kind vfield".into())),
    }
}

fn expect_logtype(doc: InputDoc) -> Result<LogType> {
    match doc {
        InputDoc::LogType(t) => Ok(t),
        _ => Err(Error::Input("expected a document of kind logtype".into())),
    }
}

fn modular(prime: Option<u64>, ideal: &Ideal) -> Result<Option<ModPCheck>> {
    prime.map(|p| check_leading_ideal(ideal, p)).transpose()
}

fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<(i32, serde_json::Value)> {
    let load = |file: &str, stdin: &mut dyn Read| -> Result<InputDoc> { parse_input(&read_source(file, stdin)?) };
    match cli.command {
        Command::Analyze { file } => {
            let w = expect_oneform(load(&file, stdin)?)?;
            let r = classify(&w)?;
            let check = modular(cli.mod_p, &r.invariants.sat_ideal)?;
            Ok((0, report::dist_report_json(&r, check.as_ref())))
        }
        Command::AnalyzeVf { file } => {
            let v = expect_vfield(load(&file, stdin)?)?;
            let r = conormal_invariants(&v)?;
            let check = modular(cli.mod_p, &r.sing_ideal)?;
            Ok((0, report::curve_report_json(&r, check.as_ref())))
        }
        Command::FindSubfoliation { file } => {
            let w = expect_oneform(load(&file, stdin)?)?;
            let d = validate_oneform(&w)?;
            Ok((0, report::section_json(i64::from(d), &compute_tf(&w)?)))
        }
        Command::LogBuild { file } => {
            let t = expect_logtype(load(&file, stdin)?)?;
            let w = build_log_form(&t)?;
            Ok((0, report::log_build_json(&w, t.degree(), is_integrable(&w)?)))
        }
        Command::LogAudit { file } => {
            let t = expect_logtype(load(&file, stdin)?)?;
            let a = audit_log_form(&t)?;
            let check = match cli.mod_p {
                Some(_) => modular(cli.mod_p, &crate::distribution::singular_scheme(&build_log_form(&t)?)?)?,
                None => None,
            };
            Ok((0, report::log_audit_json(&a, check.as_ref())))
        }
        Command::Table1 { dmax } => Ok((0, report::table1_json(&table1(dmax)))),
        Command::VerifyPaperExamples => {
            let checks = verify_paper_examples();
            let all = checks.iter().all(|c| c.passed);
            let body = json!({"kind": "verification", "schema_version": report::SCHEMA_VERSION, "passed": all, "checks": checks});
            Ok((if all { 0 } else { 1 }, body))
        }
    }
}

/// Run with the process's stdin.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_command_with_stdin(argv, &mut std::io::stdin())
}

/// Exit code 0 on success, 1 on invalid input, 2 on an internal inconsistency.
pub fn run_command_with_stdin<I, T>(argv: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (0, e.render().to_string());
        }
        Err(e) => {
            let body = json!({
                "kind": "error",
                "schema_version": report::SCHEMA_VERSION,
                "error": {"kind": "UsageError", "message": e.render().to_string(), "internal": false},
            });
            return (1, report::render(&body));
        }
    };
    match execute(cli, stdin) {
        Ok((code, body)) => (code, report::render(&body)),
        Err(e) => (if e.is_internal() { 2 } else { 1 }, report::render(&report::error_json(&e))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_stdin(args: &[&str], input: &str) -> (i32, serde_json::Value) {
        let (code, out) = run_command_with_stdin(args.iter().copied(), &mut input.as_bytes());
        (code, serde_json::from_str(&out).unwrap())
    }

    #[test]
    fn analyze_from_stdin() {
        let (code, v) = run_stdin(
            &["p3dist", "analyze", "-"],
            r#"{"kind":"oneform","coeffs":["x1","-x0","x3","-x2"]}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(v["chern"], json!({"c1": 2, "c2": 2, "c3": 0}));
        assert_eq!(v["regular"], json!(true));
        assert_eq!(v["schema_version"], json!(1));
    }

    #[test]
    fn validation_error_exits_1() {
        let (code, v) = run_stdin(&["p3dist", "analyze", "-"], r#"{"kind":"oneform","coeffs":["x1","x0","0","0"]}"#);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], json!("EulerViolation"));
        let (code, v) = run_stdin(&["p3dist", "analyze", "-"], r#"{"kind":"oneform","coeffs":["x0 + * x1","0","0","0"]}"#);
        assert_eq!(code, 1);
        assert_eq!((v["error"]["line"].clone(), v["error"]["col"].clone()), (json!(1), json!(6)));
    }

    #[test]
    fn usage_errors() {
        let (code, _) = run_command_with_stdin(["p3dist", "frobnicate"], &mut "".as_bytes());
        assert_eq!(code, 1);
        let (code, text) = run_command_with_stdin(["p3dist", "--help"], &mut "".as_bytes());
        assert_eq!(code, 0);
        assert!(text.contains("analyze-vf"));
    }

    #[test]
    fn mod_p_flag() {
        let (code, v) = run_stdin(
            &["p3dist", "--mod-p", "101", "analyze-vf", "-"],
            r#"{"kind":"vfield","coeffs":["0","0","x0","x1"]}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(v["mod_p"]["agrees"], json!(true));
        let (code, v) = run_stdin(
            &["p3dist", "--mod-p", "100", "analyze-vf", "-"],
            r#"{"kind":"vfield","coeffs":["0","0","x0","x1"]}"#,
        );
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], json!("UnluckyPrime"));
    }
}
