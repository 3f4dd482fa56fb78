//! Logarithmic 1-forms `ω = f_1 ⋯ f_r Σ λ_i df_i / f_i`.

use num_traits::Zero;
use serde::Serialize;

use crate::distribution::{invariants, is_integrable, validate_oneform};
use crate::error::{Error, Result};
use crate::exterior::ExtForm;
use crate::groebner::hilbert;
use crate::poly::{Poly, Scalar, NVARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogType {
    pub degrees: Vec<u32>,
    pub lambdas: Vec<Scalar>,
    pub polys: Vec<Poly>,
}

impl LogType {
    /// Distribution degree `Σ d_i − 2`.
    pub fn degree(&self) -> i64 {
        self.degrees.iter().map(|&d| i64::from(d)).sum::<i64>() - 2
    }
}

/// `Σ_i λ_i (∏_{j≠i} f_j) df_i`.
pub fn build_log_form(t: &LogType) -> Result<ExtForm> {
    let r = t.degrees.len();
    if r == 0 || t.lambdas.len() != r || t.polys.len() != r {
        return Err(Error::DegreeMismatch(format!(
            "{} degrees, {} weights, {} polynomials",
            r,
            t.lambdas.len(),
            t.polys.len()
        )));
    }
    for (f, &d) in t.polys.iter().zip(&t.degrees) {
        if d == 0 || f.homogeneous_degree() != Some(d) {
            return Err(Error::DegreeMismatch(format!("{f} is not homogeneous of degree {d}")));
        }
    }
    let weight: Scalar = t.lambdas.iter().zip(&t.degrees).map(|(l, &d)| l * Scalar::from_integer(d.into())).sum();
    if !weight.is_zero() {
        return Err(Error::WeightRelationViolated);
    }
    let mut coeffs: [Poly; NVARS] = Default::default();
    for i in 0..r {
        let others = (0..r).filter(|&j| j != i).fold(Poly::one(), |acc, j| &acc * &t.polys[j]);
        let scaled = others.scale(&t.lambdas[i]);
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = &*c + &(&scaled * &t.polys[i].derivative(k));
        }
    }
    Ok(ExtForm::one_form(coeffs))
}

/// Coefficient of `h^3` in `(1 − h)^4 / ∏ (1 − d_i h)`.
pub fn expected_isolated_count(degrees: &[u32]) -> i64 {
    // truncated power series to order 3
    let mut s = [1i64, -4, 6, -4];
    for &d in degrees {
        let d = i64::from(d);
        for k in 1..4 {
            s[k] += d * s[k - 1];
        }
    }
    s[3]
}

/// `Σ_{i<j} d_i d_j`.
pub fn expected_curve_degree(degrees: &[u32]) -> i64 {
    let mut e2 = 0;
    for (i, &a) in degrees.iter().enumerate() {
        for &b in &degrees[i + 1..] {
            e2 += i64::from(a) * i64::from(b);
        }
    }
    e2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogAudit {
    pub degree: i64,
    pub integrable: bool,
    /// `(degree, constant term)` of the Hilbert polynomial of the singular scheme.
    pub hilbert_polynomial: (i64, i64),
    pub deg_c: Option<i64>,
    pub len_u: Option<i64>,
    pub expected_deg_c: i64,
    pub expected_len_u: i64,
    pub non_generic: bool,
    pub notes: Vec<String>,
}

/// Compare the computed singular invariants with the counts expected for a
/// generic logarithmic form; divergence is flagged, not an error.
pub fn audit_log_form(t: &LogType) -> Result<LogAudit> {
    let omega = build_log_form(t)?;
    let degree = i64::from(validate_oneform(&omega)?);
    let integrable = is_integrable(&omega)?;
    let expected_deg_c = expected_curve_degree(&t.degrees);
    let expected_len_u = expected_isolated_count(&t.degrees);
    let mut notes = Vec::new();
    let (hp, deg_c, len_u) = match invariants(&omega) {
        Ok((inv, _)) => ((inv.hilbert.degree, inv.hilbert.constant_term), Some(inv.deg_c), Some(inv.len_u)),
        Err(Error::InconsistentInvariants(msg)) => {
            notes.push(format!("invariant solver rejected the singular scheme: {msg}"));
            let h = hilbert(&crate::distribution::singular_scheme(&omega)?);
            ((h.degree, h.constant_term), None, None)
        }
        Err(e) => return Err(e),
    };
    let non_generic = deg_c != Some(expected_deg_c) || len_u != Some(expected_len_u);
    Ok(LogAudit {
        degree,
        integrable,
        hilbert_polynomial: hp,
        deg_c,
        len_u,
        expected_deg_c,
        expected_len_u,
        non_generic,
        notes,
    })
}

/// `e_2(degrees) < d^2` with `d = Σ d_i − 2`: a generic logarithmic curve
/// is too small to be the singular curve of either maximal-order family.
pub fn exclusion_check(degrees: &[u32]) -> bool {
    let d = degrees.iter().map(|&x| i64::from(x)).sum::<i64>() - 2;
    expected_curve_degree(degrees) < d * d
}

/// Types whose degree comparison alone fails: `(1,1,1,1,1)` reaches `d² + 1`
/// and `(1,1,1,2)` reaches `d²` at `d = 3`.
pub fn exclusion_counterexamples(d_max: u32) -> Vec<Vec<u32>> {
    (3..=d_max).flat_map(log_types_of_degree).filter(|t| !exclusion_check(t)).collect()
}

/// Compare `(deg C, length U)` of a generic logarithmic form with both
/// maximal-order families, `(d² + 1, d)` and `(d², 2d)`; true when neither matches.
pub fn exclusion_by_invariants(degrees: &[u32]) -> bool {
    let d = degrees.iter().map(|&x| i64::from(x)).sum::<i64>() - 2;
    let here = (expected_curve_degree(degrees), expected_isolated_count(degrees));
    here != (d * d + 1, d) && here != (d * d, 2 * d)
}

/// All degree lists (non-decreasing, at least two entries) with `Σ d_i = d + 2`.
pub fn log_types_of_degree(d: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for part in min..=rest {
            acc.push(part);
            go(rest - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(d + 2, 1, &mut Vec::new(), &mut out);
    out
}
