//! Codimension-one distributions `ω = Σ A_i dx_i` on `P^3`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{common_degree, ExtForm, VField};
use crate::groebner::{hilbert, HilbertData, Ideal};
use crate::poly::{Poly, NVARS};
use crate::sections::{compute_tf, MinimalSection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernTriple {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernTriple {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Self {
        ChernTriple { c1, c2, c3 }
    }
}

/// Invariants of the singular scheme `Z = C ∪ U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingInvariants {
    pub deg_c: i64,
    pub p_a: i64,
    pub len_u: i64,
    pub sat_ideal: Ideal,
    pub hilbert: HilbertData,
}

/// Solve `k = 1 − p_a + lenU` together with `lenU = x(D) + 2 p_a + off`,
/// where `HP(t) = D t + k`. Shared by distributions and foliations by
/// curves, which differ only in `x` and `off`.
pub(crate) fn solve_invariants(
    hp: &HilbertData,
    x: impl Fn(i64) -> i64,
    off: i64,
) -> Result<(i64, i64, i64)> {
    let (deg_c, k) = match hp.projective_dimension {
        -1 => (0, 0),
        0 => (0, hp.degree),
        1 => (hp.degree, hp.constant_term),
        n => return Err(Error::WrongCodimension(n)),
    };
    let p_a = k - 1 - x(deg_c) - off;
    let len_u = k - 1 + p_a;
    if deg_c == 0 && p_a != 1 {
        return Err(Error::InconsistentInvariants(format!(
            "no curve part, but the length formula forces p_a = {p_a} (expected 1)"
        )));
    }
    if len_u < 0 {
        return Err(Error::InconsistentInvariants(format!(
            "HP = {deg_c} t + {k} gives length(U) = {len_u} < 0"
        )));
    }
    Ok((deg_c, p_a, len_u))
}

/// Check the Euler relation, the gcd condition and the codimension of the
/// singular locus; returns the degree `d`.
pub fn validate_oneform(omega: &ExtForm) -> Result<u32> {
    let a = omega.as_one_form()?;
    let deg = match common_degree(&a) {
        Ok(k) => k,
        Err(Error::InvalidForm(_)) => return Err(Error::WrongCodimension(3)),
        Err(e) => return Err(e),
    };
    let euler = omega.contract(&VField::radial())?;
    if !euler.is_zero() {
        return Err(Error::EulerViolation(euler.coeffs()[0].to_string()));
    }
    // the Euler relation forces deg A_i ≥ 1 for a nonzero form
    let nonzero: Vec<&Poly> = a.iter().filter(|p| !p.is_zero()).collect();
    let mut g = nonzero[0].monic();
    for p in &nonzero[1..] {
        if g.is_constant() {
            break;
        }
        g = crate::groebner::poly_gcd(&g, p);
    }
    if !g.is_constant() {
        return Err(Error::DivisorialSingularity(g.to_string()));
    }
    let sat = Ideal::new(a).saturate_irrelevant()?;
    let dim = hilbert(&sat).projective_dimension;
    if dim >= 2 {
        return Err(Error::WrongCodimension(dim));
    }
    Ok(deg - 1)
}

/// Saturated ideal of the coefficients.
pub fn singular_scheme(omega: &ExtForm) -> Result<Ideal> {
    Ideal::new(omega.as_one_form()?).saturate_irrelevant()
}

fn distribution_x(d: i64) -> impl Fn(i64) -> i64 {
    move |deg_c| d * d * d + 2 * d * d + 2 * d - deg_c * (3 * d - 2)
}

/// Singular invariants and Chern classes of `T_F`.
pub fn invariants(omega: &ExtForm) -> Result<(SingInvariants, ChernTriple)> {
    let d = i64::from(validate_oneform(omega)?);
    let sat_ideal = singular_scheme(omega)?;
    invariants_from_ideal(d, sat_ideal)
}

pub(crate) fn invariants_from_ideal(d: i64, sat_ideal: Ideal) -> Result<(SingInvariants, ChernTriple)> {
    let hp = hilbert(&sat_ideal);
    let (deg_c, p_a, len_u) = solve_invariants(&hp, distribution_x(d), -2)?;
    let chern = ChernTriple::new(2 - d, d * d + 2 - deg_c, len_u);
    Ok((SingInvariants { deg_c, p_a, len_u, sat_ideal, hilbert: hp }, chern))
}

/// `c3` recomputed from `(d, deg C, p_a)` by the length formula.
pub fn c3_from_curve(d: i64, deg_c: i64, p_a: i64) -> i64 {
    distribution_x(d)(deg_c) + 2 * p_a - 2
}

/// `ω ∧ dω = 0`.
pub fn is_integrable(omega: &ExtForm) -> Result<bool> {
    Ok(omega.wedge(&omega.d())?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityClass {
    Split,
    Stable,
    StrictlySemistable,
    Unstable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub epsilon: i64,
    pub class: StabilityClass,
    /// Order of nonstability; 0 unless unstable.
    pub order: i64,
    pub max_order: bool,
    pub family: Option<u8>,
}

/// `(a, b)` with `T_F = O(a) ⊕ O(b)` when the twisted `c2` vanishes.
pub fn split_test(d: i64, t_f: i64, chern: &ChernTriple) -> Result<Option<(i64, i64)>> {
    let s = t_f - 1;
    if chern.c2 + chern.c1 * s + s * s != 0 {
        return Ok(None);
    }
    if d < 2 * t_f {
        return Err(Error::NumericContradiction { d, t_f });
    }
    Ok(Some((1 - t_f, 1 + t_f - d)))
}

/// Stability of a nonsplit tangent sheaf from `(d, t_F)` and its Chern classes.
pub fn stability(d: i64, t_f: i64, chern: &ChernTriple, split: bool) -> StabilityVerdict {
    let epsilon = d.rem_euclid(2);
    let mut v = StabilityVerdict { epsilon, class: StabilityClass::Split, order: 0, max_order: false, family: None };
    if split {
        return v;
    }
    let unstable = if d >= 3 && 2 * t_f <= d - 2 + epsilon {
        true
    } else if epsilon == 0 {
        if 2 * t_f >= d + 2 {
            v.class = StabilityClass::Stable;
            false
        } else if 2 * t_f == d {
            v.class = StabilityClass::StrictlySemistable;
            false
        } else {
            true
        }
    } else if 2 * t_f >= d + 1 {
        v.class = StabilityClass::Stable;
        false
    } else {
        true
    };
    if unstable {
        v.class = StabilityClass::Unstable;
        v.order = (d + epsilon) / 2 - t_f;
        v.max_order = t_f == 1;
        if v.max_order {
            if *chern == ChernTriple::new(2 - d, 1, d) {
                v.family = Some(1);
            } else if *chern == ChernTriple::new(2 - d, 2, 2 * d) {
                v.family = Some(2);
            }
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistReport {
    pub degree: i64,
    pub integrable: bool,
    pub regular: bool,
    pub invariants: SingInvariants,
    pub chern: ChernTriple,
    pub t_f: i64,
    pub h0_at_tf: usize,
    pub minimal_section: VField,
    pub stability: StabilityVerdict,
    pub split_type: Option<(i64, i64)>,
    pub notes: Vec<String>,
}

/// Full analysis pipeline.
pub fn classify(omega: &ExtForm) -> Result<DistReport> {
    let (invariants, chern) = invariants(omega)?;
    let d = 2 - chern.c1;
    let MinimalSection { t_f, h0, section } = compute_tf(omega)?;
    let t_f = i64::from(t_f);
    let split_type = split_test(d, t_f, &chern)?;
    let stability = stability(d, t_f, &chern, split_type.is_some());
    let mut notes = Vec::new();
    if chern.c2 < 0 {
        notes.push(format!("c2 = {} is negative", chern.c2));
    }
    if split_type.is_none() && stability.class == StabilityClass::Unstable && d < 3 {
        notes.push("unstable outside the range d >= 3 covered by the order formula".into());
    }
    let regular = invariants.sat_ideal.is_unit();
    Ok(DistReport {
        degree: d,
        integrable: is_integrable(omega)?,
        regular,
        invariants,
        chern,
        t_f,
        h0_at_tf: h0,
        minimal_section: section,
        stability,
        split_type,
        notes,
    })
}

/// Render `O(a)`, with `O` for the trivial twist.
pub fn line_bundle(a: i64) -> String {
    if a == 0 {
        "O".to_string()
    } else {
        format!("O({a})")
    }
}

/// Split types `O(1 − t) ⊕ O(1 + t − d)` for `0 ≤ d ≤ d_max` and
/// `0 ≤ t ≤ ⌊d_max/2⌋`; cells with `d < 2t` hold `×`.
pub fn table1(d_max: u32) -> Vec<Vec<String>> {
    let t_max = i64::from(d_max / 2);
    (0..=i64::from(d_max))
        .map(|d| {
            (0..=t_max)
                .map(|t| {
                    if d < 2 * t {
                        "×".to_string()
                    } else {
                        format!("{} ⊕ {}", line_bundle(1 - t), line_bundle(1 + t - d))
                    }
                })
                .collect()
        })
        .collect()
}

/// Degree and genus of the curve in the split family with section twist `t`.
pub fn splitruim_invariants(t: i64) -> (i64, i64) {
    (3 * t * t + 2 * t + 1, t * (5 * t * t - t - 1))
}

/// Chern classes of the family whose minimal section vanishes on a line.
pub fn line_family_invariants(d: i64, t: i64) -> Result<ChernTriple> {
    if d < 2 * (t - 1) {
        return Err(Error::DomainError(format!("need d >= 2(t-1), got d = {d}, t = {t}")));
    }
    Ok(ChernTriple::new(2 - d, -t * t + d * (t - 1) + 2, d - 2 * (t - 1)))
}

/// Dimension of the parameter space of each maximal-order family.
pub fn family_dim(family: u8, d: i64) -> Result<i64> {
    match family {
        1 => Ok(d + 4),
        2 => Ok(2 * d + 7),
        f => Err(Error::DomainError(format!("no family {f}"))),
    }
}

/// `Σ A_i F_i` for a vector field against a 1-form.
pub fn contraction(v: &VField, omega: &ExtForm) -> Result<Poly> {
    let a = omega.as_one_form()?;
    let f = v.components();
    Ok((0..NVARS).fold(Poly::zero(), |acc, i| &acc + &(&a[i] * &f[i])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn one_form(a: [&str; 4]) -> ExtForm {
        ExtForm::one_form(a.map(|s| parse_poly(s).unwrap()))
    }

    #[test]
    fn validation() {
        assert_eq!(validate_oneform(&one_form(["x1", "-x0", "x3", "-x2"])).unwrap(), 0);
        let w = one_form(["x0*x1", "-x0^2", "0", "0"]);
        assert!(matches!(validate_oneform(&w), Err(Error::DivisorialSingularity(_))));
        let w = one_form(["x1", "x0", "0", "0"]);
        assert!(matches!(validate_oneform(&w), Err(Error::EulerViolation(_))));
        assert!(matches!(validate_oneform(&ExtForm::zero(1)), Err(Error::WrongCodimension(3))));
    }

    #[test]
    fn pencil_is_split_line() {
        let w = one_form(["x1", "-x0", "0", "0"]);
        assert_eq!(singular_scheme(&w).unwrap(), Ideal::new([parse_poly("x0").unwrap(), parse_poly("x1").unwrap()]));
        let r = classify(&w).unwrap();
        assert_eq!(r.chern, ChernTriple::new(2, 1, 0));
        assert_eq!(r.t_f, 0);
        assert_eq!(r.split_type, Some((1, 1)));
        assert!(r.integrable);
        assert_eq!(r.stability.class, StabilityClass::Split);
    }

    #[test]
    fn split_test_examples() {
        assert_eq!(split_test(0, 0, &ChernTriple::new(2, 1, 0)).unwrap(), Some((1, 1)));
        assert_eq!(split_test(3, 1, &ChernTriple::new(-1, 1, 3)).unwrap(), None);
        assert_eq!(split_test(0, 1, &ChernTriple::new(2, 2, 0)).unwrap(), None);
        assert!(split_test(1, 1, &ChernTriple::new(1, 0, 0)).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(table1(4)[4][2], "O(-1) ⊕ O(-1)");
        assert_eq!(table1(0)[0][0], "O(1) ⊕ O(1)");
        assert_eq!(table1(6)[3][2], "×");
        assert_eq!(splitruim_invariants(0), (1, 0));
        assert_eq!(splitruim_invariants(1), (6, 3));
        assert_eq!(line_family_invariants(3, 1).unwrap(), ChernTriple::new(-1, 1, 3));
        assert_eq!(line_family_invariants(2, 1).unwrap(), ChernTriple::new(0, 1, 2));
        assert_eq!(line_family_invariants(0, 1).unwrap(), ChernTriple::new(2, 1, 0));
        assert!(line_family_invariants(1, 3).is_err());
        assert_eq!(family_dim(1, 3).unwrap(), 7);
        assert_eq!(family_dim(2, 3).unwrap(), 13);
        assert_eq!(family_dim(1, 5).unwrap(), 9);
    }

    #[test]
    fn splitruim_consistent_with_c2() {
        // d = 2, t = 1: T_F = O ⊕ O has c2 = 0, so deg C = d^2 + 2
        let (deg_c, _) = splitruim_invariants(1);
        assert_eq!(deg_c, 2 * 2 + 2 - 0);
    }
}
