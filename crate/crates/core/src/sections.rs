//! Twisted sections of the tangent sheaf as kernels of the contraction map
//! `(F_0, .., F_3) ↦ Σ A_i F_i`, modulo radial multiples.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{ExtForm, VField};
use crate::linalg::{kernel_dim, primitive_integer_vector, RatMatrix};
use crate::poly::{Monomial, Poly, Scalar, NVARS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionSpaceDim {
    /// Degree `d'` of the vector fields; this is `h^0(T_F(d' − 1))`.
    pub dprime: u32,
    pub raw_kernel: usize,
    /// `dim S_{d'−1}`: the radial multiples, always in the kernel.
    pub radial: usize,
    pub h0: usize,
}

/// `dim S_m = C(m + 3, 3)`, zero for negative `m`.
pub fn dim_s(m: i64) -> usize {
    if m < 0 {
        0
    } else {
        let m = m as usize;
        (m + 1) * (m + 2) * (m + 3) / 6
    }
}

fn coefficients(omega: &ExtForm) -> Result<[Poly; NVARS]> {
    let a = omega.as_one_form()?;
    let euler = omega.contract(&VField::radial())?;
    if !euler.is_zero() {
        return Err(Error::InvalidForm(format!("Euler relation fails: {:?}", euler.coeffs()[0])));
    }
    Ok(a)
}

struct Contraction {
    columns: Vec<(usize, Monomial)>,
    matrix: RatMatrix,
}

fn contraction_matrix(a: &[Poly; NVARS], dprime: u32) -> Contraction {
    let deg_a = a.iter().find_map(Poly::homogeneous_degree).unwrap_or(0);
    let src = Monomial::all_of_degree(dprime);
    let dst = Monomial::all_of_degree(dprime + deg_a);
    let row_of: HashMap<Monomial, usize> = dst.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let columns: Vec<(usize, Monomial)> =
        (0..NVARS).flat_map(|i| src.iter().map(move |m| (i, *m))).collect();
    let mut matrix = RatMatrix::zeros(dst.len(), columns.len());
    for (col, (i, m)) in columns.iter().enumerate() {
        for (am, c) in a[*i].terms() {
            matrix.set(row_of[&(*am * *m)], col, c.clone());
        }
    }
    Contraction { columns, matrix }
}

/// `h^0(T_F(d' − 1))` for the distribution of `omega`.
pub fn h0_tangent_twist(omega: &ExtForm, dprime: u32) -> Result<SectionSpaceDim> {
    let a = coefficients(omega)?;
    let c = contraction_matrix(&a, dprime);
    let raw_kernel = kernel_dim(&c.matrix);
    let radial = dim_s(i64::from(dprime) - 1);
    Ok(SectionSpaceDim { dprime, raw_kernel, radial, h0: raw_kernel - radial })
}

/// Minimal twist carrying a section, and a canonical section there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSection {
    pub t_f: u32,
    pub h0: usize,
    pub section: VField,
}

/// Smallest `d'` with `h^0(T_F(d' − 1)) ≠ 0`, searched up to `d + 1`.
///
/// The section is the first nullspace vector (in column order) that is not
/// a radial multiple, reduced modulo the radial multiples and scaled to
/// coprime integers with positive leading entry.
pub fn compute_tf(omega: &ExtForm) -> Result<MinimalSection> {
    let a = coefficients(omega)?;
    let deg_a = crate::exterior::common_degree(&a)?;
    let d = i64::from(deg_a) - 1;
    for dprime in 0..=deg_a {
        let c = contraction_matrix(&a, dprime);
        let raw = kernel_dim(&c.matrix);
        let radial = dim_s(i64::from(dprime) - 1);
        if raw == radial {
            continue;
        }
        let section = canonical_section(&c, dprime)?;
        return Ok(MinimalSection { t_f: dprime, h0: raw - radial, section });
    }
    Err(Error::BoundViolated(d + 1))
}

fn canonical_section(c: &Contraction, dprime: u32) -> Result<VField> {
    let col_of: HashMap<(usize, Monomial), usize> =
        c.columns.iter().enumerate().map(|(k, key)| (*key, k)).collect();
    let ncols = c.columns.len();
    let radial_rows: Vec<Vec<Scalar>> = if dprime == 0 {
        Vec::new()
    } else {
        Monomial::all_of_degree(dprime - 1)
            .iter()
            .map(|f| {
                let mut v = vec![Scalar::zero(); ncols];
                for i in 0..NVARS {
                    v[col_of[&(i, *f * Monomial::var(i))]] = Scalar::from_integer(1.into());
                }
                v
            })
            .collect()
    };
    let mut span = RatMatrix::from_rows(if radial_rows.is_empty() {
        vec![vec![Scalar::zero(); ncols]]
    } else {
        radial_rows
    });
    let pivots = span.rref();
    for v in c.matrix.nullspace() {
        let mut r = v.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            if r[pc].is_zero() {
                continue;
            }
            let f = r[pc].clone();
            for (j, x) in r.iter_mut().enumerate() {
                *x -= &f * span.get(row, j);
            }
        }
        if r.iter().all(Zero::is_zero) {
            continue;
        }
        let r = primitive_integer_vector(&r);
        let mut comps: [Poly; NVARS] = Default::default();
        for (k, (i, m)) in c.columns.iter().enumerate() {
            comps[*i].add_term(*m, r[k].clone());
        }
        return VField::new(comps);
    }
    unreachable!("kernel strictly larger than the radial span has a vector outside it")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn one_form(a: [&str; 4]) -> ExtForm {
        ExtForm::one_form(a.map(|s| parse_poly(s).unwrap()))
    }

    #[test]
    fn null_correlation_sections() {
        let w = one_form(["x1", "-x0", "x3", "-x2"]);
        assert_eq!(h0_tangent_twist(&w, 0).unwrap().h0, 0);
        let s = h0_tangent_twist(&w, 1).unwrap();
        assert_eq!((s.raw_kernel, s.radial, s.h0), (6, 1, 5));
        assert_eq!(compute_tf(&w).unwrap().t_f, 1);
    }

    #[test]
    fn pencil_of_planes() {
        let w = one_form(["x1", "-x0", "0", "0"]);
        assert_eq!(h0_tangent_twist(&w, 0).unwrap().h0, 2);
        let m = compute_tf(&w).unwrap();
        assert_eq!(m.t_f, 0);
        let back = w.contract(&m.section).unwrap();
        assert!(back.is_zero());
    }

    #[test]
    fn euler_failure_is_invalid() {
        let w = one_form(["x1", "x0", "0", "0"]);
        assert!(matches!(h0_tangent_twist(&w, 1), Err(Error::InvalidForm(_))));
    }

    #[test]
    fn dims() {
        assert_eq!(dim_s(-1), 0);
        assert_eq!(dim_s(0), 1);
        assert_eq!(dim_s(2), 10);
    }
}
