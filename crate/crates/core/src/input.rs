//! JSON input documents.
//!
//! ```json
//! {"kind": "oneform", "coeffs": ["x1", "-x0", "x3", "-x2"]}
//! {"kind": "vfield",  "coeffs": ["0", "0", "x0", "x1"]}
//! {"kind": "logtype", "coeffs": {"degrees": [1, 1], "lambdas": ["1", "-1"], "polys": ["x0", "x1"]}}
//! ```

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exterior::{ExtForm, VField};
use crate::logarithmic::LogType;
use crate::parse::{parse_poly, ParseError};
use crate::poly::{Monomial, Poly, Scalar, NVARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDoc {
    OneForm(ExtForm),
    VField(VField),
    LogType(LogType),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    kind: String,
    coeffs: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLog {
    degrees: Vec<u32>,
    lambdas: Vec<Value>,
    polys: Vec<String>,
}

fn poly_at(src: &str, what: &str) -> Result<Poly> {
    parse_poly(src).map_err(|e| {
        Error::Parse(ParseError { expected: format!("{} in {what}", e.expected), ..e })
    })
}

fn four_polys(coeffs: &Value) -> Result<[Poly; NVARS]> {
    let strs: Vec<String> = serde_json::from_value(coeffs.clone())
        .map_err(|_| Error::Input("coeffs must be an array of four polynomial strings".into()))?;
    if strs.len() != NVARS {
        return Err(Error::Input(format!("expected {NVARS} coefficients, got {}", strs.len())));
    }
    let mut out: [Poly; NVARS] = Default::default();
    for (i, s) in strs.iter().enumerate() {
        out[i] = poly_at(s, &format!("coeffs[{i}]"))?;
    }
    Ok(out)
}

fn weight(v: &Value, i: usize) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        _ => return Err(Error::Input(format!("lambdas[{i}] must be an integer or a rational string"))),
    };
    let p = poly_at(&text, &format!("lambdas[{i}]"))?;
    if !p.is_constant() {
        return Err(Error::Input(format!("lambdas[{i}] must be a constant")));
    }
    Ok(p.coeff(&Monomial::one()))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(ParseError { line: e.line(), col: e.column(), expected: format!("valid JSON ({e})") })
}

/// Parse and validate an input document.
pub fn parse_input(text: &str) -> Result<InputDoc> {
    let raw: RawDoc = serde_json::from_str(text).map_err(json_error)?;
    match raw.kind.as_str() {
        "oneform" => Ok(InputDoc::OneForm(ExtForm::one_form(four_polys(&raw.coeffs)?))),
        "vfield" => Ok(InputDoc::VField(VField::new(four_polys(&raw.coeffs)?)?)),
        "logtype" => {
            let log: RawLog = serde_json::from_value(raw.coeffs).map_err(|e| {
                Error::Input(format!("logtype coeffs need degrees, lambdas and polys ({e})"))
            })?;
            let lambdas = log.lambdas.iter().enumerate().map(|(i, v)| weight(v, i)).collect::<Result<_>>()?;
            let polys = log
                .polys
                .iter()
                .enumerate()
                .map(|(i, s)| poly_at(s, &format!("polys[{i}]")))
                .collect::<Result<_>>()?;
            Ok(InputDoc::LogType(LogType { degrees: log.degrees, lambdas, polys }))
        }
        other => Err(Error::Input(format!("unknown kind `{other}` (expected oneform, vfield or logtype)"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn null_correlation_document() {
        let doc = parse_input(r#"{"kind":"oneform","coeffs":["x1","-x0","x3","-x2"]}"#).unwrap();
        let InputDoc::OneForm(w) = doc else { panic!("wrong kind") };
        assert_eq!(w.coeffs()[1].to_string(), "-x0");
    }

    #[test]
    fn logtype_document() {
        let doc = parse_input(
            r#"{"kind":"logtype","coeffs":{"degrees":[1,1,2],"lambdas":[1,"1","-1"],"polys":["x","y","z^2"]}}"#,
        )
        .unwrap();
        let InputDoc::LogType(t) = doc else { panic!("wrong kind") };
        assert_eq!(t.lambdas[2], ratio(-1, 1));
        let doc = parse_input(r#"{"kind":"logtype","coeffs":{"degrees":[1],"lambdas":["1/2"],"polys":["x"]}}"#);
        let InputDoc::LogType(t) = doc.unwrap() else { panic!("wrong kind") };
        assert_eq!(t.lambdas[0], ratio(1, 2));
    }

    #[test]
    fn errors_are_positioned() {
        match parse_input(r#"{"kind":"oneform","coeffs":["x0 + * x1","0","0","0"]}"#) {
            Err(Error::Parse(e)) => {
                assert_eq!((e.line, e.col), (1, 6));
                assert!(e.expected.contains("coeffs[0]"));
            }
            other => panic!("{other:?}"),
        }
        match parse_input("{\n  \"kind\": \"oneform\",\n  \"coeffs\": [1,") {
            Err(Error::Parse(e)) => assert_eq!(e.line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_input(r#"{"kind":"twoform","coeffs":[]}"#), Err(Error::Input(_))));
        assert!(matches!(parse_input(r#"{"kind":"oneform","coeffs":["x0"]}"#), Err(Error::Input(_))));
        assert!(matches!(
            parse_input(r#"{"kind":"vfield","coeffs":["x0","x1^2","0","0"]}"#),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
