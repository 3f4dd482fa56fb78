//! JSON report documents. Keys are emitted in sorted order and polynomials
//! in their canonical grevlex printing, so output is byte-stable.

use serde_json::{json, Value};

use crate::curves::FoliationCurveReport;
use crate::distribution::{ChernTriple, DistReport};
use crate::error::Error;
use crate::exterior::{ExtForm, VField};
use crate::groebner::modp::ModPCheck;
use crate::groebner::{HilbertData, Ideal};
use crate::logarithmic::LogAudit;
use crate::sections::MinimalSection;

pub const SCHEMA_VERSION: u32 = 1;

fn doc(kind: &str, mut body: Value) -> Value {
    let map = body.as_object_mut().expect("report bodies are objects");
    map.insert("kind".into(), json!(kind));
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    body
}

/// Reduced grevlex basis, ordered by leading monomial.
pub fn ideal_json(ideal: &Ideal) -> Value {
    json!(ideal.canonical_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

pub fn vfield_json(v: &VField) -> Value {
    json!(v.components().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

pub fn oneform_json(w: &ExtForm) -> Value {
    json!(w.coeffs().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

fn chern_json(c: &ChernTriple) -> Value {
    json!({"c1": c.c1, "c2": c.c2, "c3": c.c3})
}

fn hilbert_json(h: &HilbertData) -> Value {
    json!({
        "numerator": h.numerator,
        "polynomial": h.hp.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "projective_dimension": h.projective_dimension,
        "degree": h.degree,
        "constant_term": h.constant_term,
    })
}

pub fn dist_report_json(r: &DistReport, mod_p: Option<&ModPCheck>) -> Value {
    let inv = &r.invariants;
    let mut body = json!({
        "degree": r.degree,
        "integrable": r.integrable,
        "regular": r.regular,
        "singular_scheme": {
            "ideal": ideal_json(&inv.sat_ideal),
            "hilbert": hilbert_json(&inv.hilbert),
            "deg_c": inv.deg_c,
            "p_a": inv.p_a,
            "len_u": inv.len_u,
        },
        "chern": chern_json(&r.chern),
        "t_f": r.t_f,
        "h0_at_t_f": r.h0_at_tf,
        "minimal_section": vfield_json(&r.minimal_section),
        "stability": r.stability,
        "split_type": r.split_type.map(|(a, b)| json!([a, b])),
        "notes": r.notes,
    });
    if let Some(check) = mod_p {
        body["mod_p"] = json!(check);
    }
    doc("distribution", body)
}

pub fn curve_report_json(r: &FoliationCurveReport, mod_p: Option<&ModPCheck>) -> Value {
    let mut body = json!({
        "degree": r.degree,
        "singular_scheme": {
            "ideal": ideal_json(&r.sing_ideal),
            "hilbert": hilbert_json(&r.hilbert),
            "deg_c": r.deg_c,
            "p_a": r.p_a,
            "len_u": r.len_u,
        },
        "conormal_chern": chern_json(&r.chern),
        "degree1_case": r.degree1_case,
    });
    if let Some(check) = mod_p {
        body["mod_p"] = json!(check);
    }
    doc("foliation_by_curves", body)
}

pub fn section_json(degree: i64, s: &MinimalSection) -> Value {
    doc(
        "subfoliation",
        json!({
            "degree": degree,
            "t_f": s.t_f,
            "h0_at_t_f": s.h0,
            "minimal_section": vfield_json(&s.section),
        }),
    )
}

pub fn log_build_json(w: &ExtForm, degree: i64, integrable: bool) -> Value {
    doc("log_form", json!({"degree": degree, "coeffs": oneform_json(w), "integrable": integrable}))
}

pub fn log_audit_json(a: &LogAudit, mod_p: Option<&ModPCheck>) -> Value {
    let mut body = json!(a);
    if let Some(check) = mod_p {
        body["mod_p"] = json!(check);
    }
    doc("log_audit", body)
}

pub fn table1_json(rows: &[Vec<String>]) -> Value {
    let columns: Vec<usize> = (0..rows.first().map_or(0, Vec::len)).collect();
    let rows: Vec<Value> = rows.iter().enumerate().map(|(d, cells)| json!({"d": d, "cells": cells})).collect();
    doc("table1", json!({"t_f": columns, "rows": rows}))
}

pub fn error_json(e: &Error) -> Value {
    let mut err = json!({"kind": e.kind(), "message": e.to_string(), "internal": e.is_internal()});
    if let Error::Parse(p) = e {
        err["line"] = json!(p.line);
        err["col"] = json!(p.col);
    }
    doc("error", json!({"error": err}))
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialise");
    s.push('\n');
    s
}
