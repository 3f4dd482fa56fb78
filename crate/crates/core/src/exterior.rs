//! Polynomial differential forms on the affine cone `C^4` over `P^3`.
//!
//! A form of grade `g` stores one coefficient per strictly increasing index
//! tuple `i_1 < ... < i_g` drawn from `{0, 1, 2, 3}`, in lexicographic order
//! of the tuples. Index sets are handled as 4-bit masks.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{scalar, Poly, NVARS};

const GRADE_MASKS: [&[u8]; 5] = [
    &[0b0000],
    &[0b0001, 0b0010, 0b0100, 0b1000],
    &[0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100],
    &[0b0111, 0b1011, 0b1101, 0b1110],
    &[0b1111],
];

fn slot(mask: u8) -> usize {
    let g = mask.count_ones() as usize;
    GRADE_MASKS[g]
        .iter()
        .position(|&m| m == mask)
        .expect("every mask appears in its grade table")
}

fn indices(mask: u8) -> impl Iterator<Item = usize> {
    (0..NVARS).filter(move |i| mask & (1 << i) != 0)
}

/// Sign of the permutation sorting the concatenation of `a` then `b`.
fn merge_sign(a: u8, b: u8) -> i64 {
    let mut inversions = 0;
    for i in indices(a) {
        inversions += indices(b).filter(|&j| j < i).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExtForm {
    grade: usize,
    coeffs: Vec<Poly>,
}

impl ExtForm {
    pub fn zero(grade: usize) -> Self {
        assert!(grade <= NVARS, "grade {grade} out of range");
        ExtForm {
            grade,
            coeffs: vec![Poly::zero(); GRADE_MASKS[grade].len()],
        }
    }

    pub fn function(f: Poly) -> Self {
        ExtForm { grade: 0, coeffs: vec![f] }
    }

    /// The 1-form `sum A_i dx_i`.
    pub fn one_form(a: [Poly; NVARS]) -> Self {
        ExtForm { grade: 1, coeffs: a.to_vec() }
    }

    /// The basis form `dx_{i_1} ^ ... ^ dx_{i_g}`; indices need not be sorted.
    pub fn basis(idx: &[usize]) -> Self {
        let mut form = ExtForm::zero(0);
        form.coeffs[0] = Poly::one();
        for &i in idx {
            let mut dx = ExtForm::zero(1);
            dx.coeffs[i] = Poly::one();
            form = form.wedge(&dx).expect("basis grade fits");
        }
        form
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient at the sorted index tuple `idx`.
    pub fn coeff(&self, idx: &[usize]) -> &Poly {
        let mask = idx.iter().fold(0u8, |m, &i| m | (1 << i));
        assert_eq!(mask.count_ones() as usize, self.grade, "index tuple has wrong length");
        &self.coeffs[slot(mask)]
    }

    /// Index tuples matching [`ExtForm::coeffs`], in storage order.
    pub fn index_tuples(grade: usize) -> Vec<Vec<usize>> {
        GRADE_MASKS[grade].iter().map(|&m| indices(m).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Coefficients of a 1-form, `(A_0, A_1, A_2, A_3)`.
    pub fn as_one_form(&self) -> Result<[Poly; NVARS]> {
        if self.grade != 1 {
            return Err(Error::WrongGrade { expected: "1", found: self.grade });
        }
        Ok(std::array::from_fn(|i| self.coeffs[i].clone()))
    }

    pub fn add(&self, other: &ExtForm) -> ExtForm {
        assert_eq!(self.grade, other.grade, "adding forms of different grade");
        ExtForm {
            grade: self.grade,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ExtForm) -> ExtForm {
        assert_eq!(self.grade, other.grade, "subtracting forms of different grade");
        ExtForm {
            grade: self.grade,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Poly) -> ExtForm {
        ExtForm {
            grade: self.grade,
            coeffs: self.coeffs.iter().map(|a| a * f).collect(),
        }
    }

    pub fn wedge(&self, other: &ExtForm) -> Result<ExtForm> {
        let grade = self.grade + other.grade;
        if grade > NVARS {
            return Err(Error::GradeOverflow(self.grade, other.grade));
        }
        let mut out = ExtForm::zero(grade);
        for (&ma, a) in GRADE_MASKS[self.grade].iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (&mb, b) in GRADE_MASKS[other.grade].iter().zip(&other.coeffs) {
                if ma & mb != 0 || b.is_zero() {
                    continue;
                }
                let prod = (a * b).scale(&scalar(merge_sign(ma, mb)));
                let k = slot(ma | mb);
                out.coeffs[k] = &out.coeffs[k] + &prod;
            }
        }
        Ok(out)
    }

    /// Exterior derivative. The derivative of a top-degree form is zero.
    pub fn d(&self) -> ExtForm {
        if self.grade == NVARS {
            return ExtForm::zero(NVARS);
        }
        let mut out = ExtForm::zero(self.grade + 1);
        for (&m, f) in GRADE_MASKS[self.grade].iter().zip(&self.coeffs) {
            for j in (0..NVARS).filter(|j| m & (1 << j) == 0) {
                let df = f.derivative(j);
                if df.is_zero() {
                    continue;
                }
                // dx_j ^ dx_I
                let sign = merge_sign(1 << j, m);
                let k = slot(m | (1 << j));
                out.coeffs[k] = &out.coeffs[k] + &df.scale(&scalar(sign));
            }
        }
        out
    }

    /// Interior product `i_v` of a vector field with a form of grade >= 1.
    pub fn contract(&self, v: &VField) -> Result<ExtForm> {
        if self.grade == 0 {
            return Err(Error::WrongGrade { expected: ">= 1", found: 0 });
        }
        let mut out = ExtForm::zero(self.grade - 1);
        for (&m, a) in GRADE_MASKS[self.grade].iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (pos, i) in indices(m).enumerate() {
                let term = a * &v.comps[i];
                if term.is_zero() {
                    continue;
                }
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let k = slot(m & !(1 << i));
                out.coeffs[k] = &out.coeffs[k] + &term.scale(&scalar(sign));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtForm[{}](", self.grade)?;
        let mut first = true;
        for (&m, c) in GRADE_MASKS[self.grade].iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let dx: Vec<String> = indices(m).map(|i| format!("dx{i}")).collect();
            write!(f, "({c}) {}", dx.join("^"))?;
        }
        write!(f, ")")
    }
}

/// Homogeneous vector field `sum F_i d/dx_i` on `C^4`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VField {
    comps: [Poly; NVARS],
}

impl VField {
    /// Components must be homogeneous of one common degree (zeros allowed)
    /// and not all zero.
    pub fn new(comps: [Poly; NVARS]) -> Result<Self> {
        let v = VField { comps };
        v.degree()?;
        Ok(v)
    }

    pub fn radial() -> Self {
        VField { comps: Poly::coordinates() }
    }

    pub fn components(&self) -> &[Poly; NVARS] {
        &self.comps
    }

    pub fn degree(&self) -> Result<u32> {
        common_degree(&self.comps)
    }

    /// Radial multiple `(x_0 f, ..., x_3 f)`.
    pub fn radial_multiple(f: &Poly) -> Self {
        VField { comps: Poly::coordinates().map(|x| &x * f) }
    }
}

/// Common homogeneous degree of a list of polynomials; zeros are skipped.
pub fn common_degree(polys: &[Poly]) -> Result<u32> {
    let mut deg = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let Some(d) = p.homogeneous_degree() else {
            return Err(Error::NotHomogeneous(p.to_string()));
        };
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => {
                return Err(Error::NotHomogeneous(format!("degrees {e} and {d} mixed")))
            }
            _ => {}
        }
    }
    deg.ok_or_else(|| Error::InvalidForm("all coefficients are zero".into()))
}
