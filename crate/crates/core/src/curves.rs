//! Foliations by curves: vector fields `v = Σ F_i ∂/∂x_i` modulo radial
//! multiples.

use serde::Serialize;

use crate::distribution::{solve_invariants, ChernTriple};
use crate::error::{Error, Result};
use crate::exterior::{ExtForm, VField};
use crate::groebner::{hilbert, HilbertData, Ideal};
use crate::poly::{Poly, NVARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degree1Case {
    StablePoints,
    SemistableLine,
    SplitSkewOrDouble,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationCurveReport {
    pub degree: i64,
    pub sing_ideal: Ideal,
    pub hilbert: HilbertData,
    pub deg_c: i64,
    pub p_a: i64,
    pub len_u: i64,
    /// Chern classes of the conormal sheaf.
    pub chern: ChernTriple,
    pub degree1_case: Degree1Case,
}

/// The six minors `F_i x_j − F_j x_i`.
fn minors(v: &VField) -> Vec<Poly> {
    let f = v.components();
    let x = Poly::coordinates();
    let mut out = Vec::with_capacity(6);
    for i in 0..NVARS {
        for j in i + 1..NVARS {
            out.push(&(&f[i] * &x[j]) - &(&f[j] * &x[i]));
        }
    }
    out
}

/// Saturated ideal of the 2×2 minors of `[[F], [x]]`.
pub fn sing_scheme_v(v: &VField) -> Result<Ideal> {
    let m = minors(v);
    if m.iter().all(Poly::is_zero) {
        return Err(Error::RadialField);
    }
    Ideal::new(m).saturate_irrelevant()
}

fn curves_x(dp: i64) -> impl Fn(i64) -> i64 {
    move |deg_c| dp * dp * dp + dp * dp + dp - 3 * deg_c * (dp - 1)
}

/// Singular invariants and conormal Chern classes, with the curve genus
/// taken from the curve part of the singular scheme.
pub fn conormal_invariants(v: &VField) -> Result<FoliationCurveReport> {
    let dp = i64::from(v.degree()?);
    let sing_ideal = sing_scheme_v(v)?;
    let hp = hilbert(&sing_ideal);
    let (deg_c, p_a, len_u) = solve_invariants(&hp, curves_x(dp), -1)?;
    let chern = ChernTriple::new(-3 - dp, dp * dp + 2 * dp + 3 - deg_c, len_u);
    let degree1_case = if dp == 1 { match_degree1(deg_c, &chern)? } else { Degree1Case::NotApplicable };
    Ok(FoliationCurveReport { degree: dp, sing_ideal, hilbert: hp, deg_c, p_a, len_u, chern, degree1_case })
}

fn match_degree1(deg_c: i64, chern: &ChernTriple) -> Result<Degree1Case> {
    match (deg_c, chern.c2, chern.c3) {
        (0, 6, 4) => Ok(Degree1Case::StablePoints),
        (1, 5, 2) => Ok(Degree1Case::SemistableLine),
        (2, 4, 0) => Ok(Degree1Case::SplitSkewOrDouble),
        (deg_c, c2, c3) => Err(Error::UnclassifiedDegree1 { deg_c, c2, c3 }),
    }
}

/// Case of a degree-1 foliation by curves.
pub fn classify_degree1(v: &VField) -> Result<Degree1Case> {
    let d = v.degree()?;
    if d != 1 {
        return Err(Error::DegreeMismatch(format!("expected a degree-1 field, got degree {d}")));
    }
    Ok(conormal_invariants(v)?.degree1_case)
}

/// Conormal Chern classes when the singular curve is a line.
pub fn line_sing_invariants(dp: i64) -> Result<ChernTriple> {
    if dp < 1 {
        return Err(Error::DomainError(format!("need d' >= 1, got {dp}")));
    }
    Ok(ChernTriple::new(-3 - dp, dp * dp + 2 * dp + 2, dp * dp * dp + dp * dp - 2 * dp + 2))
}

/// `v` is tangent to the distribution of `omega`: `Σ A_i F_i = 0`.
pub fn contraction_check(v: &VField, omega: &ExtForm) -> Result<bool> {
    Ok(crate::distribution::contraction(v, omega)?.is_zero())
}
