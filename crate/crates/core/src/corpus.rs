//! Bundled reference corpus and its verification run.

use serde::Serialize;

use crate::curves::conormal_invariants;
use crate::distribution::{classify, table1, ChernTriple, StabilityClass};
use crate::error::Result;
use crate::exterior::{ExtForm, VField};
use crate::groebner::{hilbert, Ideal};
use crate::input::{parse_input, InputDoc};
use crate::logarithmic::{audit_log_form, LogType};
use crate::parse::parse_poly;

/// Fixture files, by name, embedded at build time.
pub const FIXTURES: &[(&str, &str)] = &[
    ("example1.json", include_str!("../fixtures/example1.json")),
    ("example2.json", include_str!("../fixtures/example2.json")),
    ("line_pencil.json", include_str!("../fixtures/line_pencil.json")),
    ("log_22.json", include_str!("../fixtures/log_22.json")),
    ("null_correlation.json", include_str!("../fixtures/null_correlation.json")),
    ("vf_double_line.json", include_str!("../fixtures/vf_double_line.json")),
    ("vf_generic.json", include_str!("../fixtures/vf_generic.json")),
    ("vf_line.json", include_str!("../fixtures/vf_line.json")),
    ("vf_skew.json", include_str!("../fixtures/vf_skew.json")),
];

/// Split types for `0 ≤ d ≤ 6`, `0 ≤ t_F ≤ 3`; the expected cells.
pub const REFERENCE_TABLE1: [[&str; 4]; 7] = [
    ["O(1) ⊕ O(1)", "×", "×", "×"],
    ["O(1) ⊕ O", "×", "×", "×"],
    ["O(1) ⊕ O(-1)", "O ⊕ O", "×", "×"],
    ["O(1) ⊕ O(-2)", "O ⊕ O(-1)", "×", "×"],
    ["O(1) ⊕ O(-3)", "O ⊕ O(-2)", "O(-1) ⊕ O(-1)", "×"],
    ["O(1) ⊕ O(-4)", "O ⊕ O(-3)", "O(-1) ⊕ O(-2)", "×"],
    ["O(1) ⊕ O(-5)", "O ⊕ O(-4)", "O(-1) ⊕ O(-3)", "O(-2) ⊕ O(-2)"],
];

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

fn load(name: &str) -> InputDoc {
    parse_input(fixture(name).expect("bundled fixture")).expect("bundled fixtures parse")
}

pub fn fixture_oneform(name: &str) -> ExtForm {
    match load(name) {
        InputDoc::OneForm(w) => w,
        other => panic!("{name} is not a 1-form: {other:?}"),
    }
}

pub fn fixture_vfield(name: &str) -> VField {
    match load(name) {
        InputDoc::VField(v) => v,
        other => panic!("{name} is not a vector field: {other:?}"),
    }
}

pub fn fixture_logtype(name: &str) -> LogType {
    match load(name) {
        InputDoc::LogType(t) => t,
        other => panic!("{name} is not a log type: {other:?}"),
    }
}

/// `(x³+y³+z³, xyz+w³)`.
pub fn cubic_ci() -> Ideal {
    Ideal::new(["x^3+y^3+z^3", "x*y*z+w^3"].map(|s| parse_poly(s).expect("literal")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, run: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match run() {
        Ok((passed, detail)) => Check { name: name.into(), passed, detail },
        Err(e) => Check { name: name.into(), passed: false, detail: format!("error: {e}") },
    }
}

fn max_order_case(name: &str, chern: ChernTriple, deg_c: i64, p_a: Option<i64>, len_u: i64, family: u8) -> Check {
    check(name, || {
        let r = classify(&fixture_oneform(name))?;
        let inv = &r.invariants;
        let container = if family == 1 {
            cubic_ci().intersect(&Ideal::new(["y", "w"].map(|s| parse_poly(s).expect("literal"))))
        } else {
            cubic_ci()
        };
        let contained = inv.sat_ideal.canonical_generators().iter().all(|g| container.contains(g));
        let ok = r.degree == 3
            && r.chern == chern
            && inv.deg_c == deg_c
            && p_a.map_or(true, |p| inv.p_a == p)
            && inv.len_u == len_u
            && r.t_f == 1
            && r.split_type.is_none()
            && r.stability.class == StabilityClass::Unstable
            && r.stability.order == 1
            && r.stability.max_order
            && r.stability.family == Some(family)
            && contained;
        let detail = format!(
            "d={} chern=({},{},{}) degC={} p_a={} lenU={} t_F={} order={} family={:?} contained={}",
            r.degree,
            r.chern.c1,
            r.chern.c2,
            r.chern.c3,
            inv.deg_c,
            inv.p_a,
            inv.len_u,
            r.t_f,
            r.stability.order,
            r.stability.family,
            contained
        );
        Ok((ok, detail))
    })
}

/// Run every bundled example; the run passes iff every check passes.
pub fn verify_paper_examples() -> Vec<Check> {
    let mut out = vec![
        max_order_case("example1.json", ChernTriple::new(-1, 1, 3), 10, Some(12), 3, 1),
        max_order_case("example2.json", ChernTriple::new(-1, 2, 6), 9, Some(10), 6, 2),
        check("null_correlation.json", || {
            let r = classify(&fixture_oneform("null_correlation.json"))?;
            let h0 = crate::sections::h0_tangent_twist(&fixture_oneform("null_correlation.json"), 1)?.h0;
            let ok = r.regular
                && r.chern == ChernTriple::new(2, 2, 0)
                && r.t_f == 1
                && h0 == 5
                && !r.integrable
                && r.stability.class == StabilityClass::Stable;
            Ok((ok, format!("regular={} t_F={} h0={} stability={:?}", r.regular, r.t_f, h0, r.stability.class)))
        }),
    ];
    for (name, want) in [
        ("vf_generic.json", (6, 4)),
        ("vf_line.json", (5, 2)),
        ("vf_double_line.json", (4, 0)),
        ("vf_skew.json", (4, 0)),
    ] {
        out.push(check(name, || {
            let r = conormal_invariants(&fixture_vfield(name))?;
            Ok(((r.chern.c2, r.chern.c3) == want, format!("(c2,c3)=({},{}) case={:?}", r.chern.c2, r.chern.c3, r.degree1_case)))
        }));
    }
    out.push(check("hilbert polynomials", || {
        let hp = |gens: &[&str]| {
            let h = hilbert(&Ideal::new(gens.iter().map(|s| parse_poly(s).expect("literal"))));
            (h.degree, h.constant_term)
        };
        let got = [
            hp(&["x0", "x1"]),
            hp(&["x^3+y^3+z^3", "x*y*z+w^3"]),
            hp(&["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]),
        ];
        Ok((got == [(1, 1), (9, -9), (3, 1)], format!("{got:?}")))
    }));
    out.push(check("table1", || {
        let t = table1(6);
        let ok = t.len() == 7 && t.iter().zip(REFERENCE_TABLE1.iter()).all(|(row, want)| row == want);
        Ok((ok, format!("{} rows", t.len())))
    }));
    out.push(check("log_22.json", || {
        let a = audit_log_form(&fixture_logtype("log_22.json"))?;
        let ok = a.deg_c == Some(4) && a.len_u == Some(4) && a.integrable && !a.non_generic;
        Ok((ok, format!("degC={:?} lenU={:?} integrable={}", a.deg_c, a.len_u, a.integrable)))
    }));
    out
}
