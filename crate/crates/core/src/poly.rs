//! Sparse polynomials in `x0..x3` over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is
//! graded reverse lexicographic with `x0 > x1 > x2 > x3`. Iterating the map
//! in reverse therefore walks terms from the leading one down.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient.
pub type Scalar = BigRational;

pub const NVARS: usize = 4;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exp: [u16; NVARS],
    deg: u16,
}

impl Monomial {
    pub fn new(exp: [u16; NVARS]) -> Self {
        let deg = exp.iter().sum();
        Monomial { exp, deg }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut exp = [0; NVARS];
        exp[i] = 1;
        Monomial::new(exp)
    }

    pub fn exponents(&self) -> [u16; NVARS] {
        self.exp
    }

    pub fn degree(&self) -> u32 {
        u32::from(self.deg)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exp.iter().zip(other.exp.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exp = [0; NVARS];
        for i in 0..NVARS {
            exp[i] = self.exp[i].checked_sub(other.exp[i])?;
        }
        Some(Monomial::new(exp))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exp = [0; NVARS];
        for (i, e) in exp.iter_mut().enumerate() {
            *e = self.exp[i].max(other.exp[i]);
        }
        Monomial::new(exp)
    }

    /// All monomials of total degree `deg`, leading (grevlex-largest) first.
    pub fn all_of_degree(deg: u32) -> Vec<Monomial> {
        let d = deg as u16;
        let mut out = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    out.push(Monomial::new([a, b, c, d - a - b - c]));
                }
            }
        }
        out.sort_unstable_by(|x, y| y.cmp(x));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for i in (0..NVARS).rev() {
                match self.exp[i].cmp(&other.exp[i]) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut exp = self.exp;
        for (e, r) in exp.iter_mut().zip(rhs.exp.iter()) {
            *e += r;
        }
        Monomial::new(exp)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn var(i: usize) -> Self {
        Poly::term(Scalar::one(), Monomial::var(i))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// The radial coordinates `x0, x1, x2, x3`.
    pub fn coordinates() -> [Poly; NVARS] {
        std::array::from_fn(Poly::var)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms. The zero polynomial is homogeneous of any
    /// degree and reports `None`, as do inhomogeneous polynomials; use
    /// [`Poly::is_homogeneous`] to tell them apart.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, a)| (*t * *m, a.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut exp = m.exponents();
            if exp[var] == 0 {
                continue;
            }
            let k = exp[var];
            exp[var] -= 1;
            out.add_term(Monomial::new(exp), c * scalar(i64::from(k)));
        }
        out
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scale to coprime integer coefficients with a positive leading term.
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        let Some((_, lead)) = self.leading() else {
            return Poly::zero();
        };
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
        let mut factor = BigRational::new(den, num);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Multivariate division by a single polynomial; `None` unless exact.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (dm, dc) = divisor.leading()?;
        let (dm, dc_inv) = (*dm, dc.recip());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let q = m.checked_div(&dm)?;
            let qc = c * &dc_inv;
            rem = &rem - &divisor.mul_monomial(&q).scale(&qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Replace every coefficient through `f`, dropping any that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn eval(&self, point: &[Scalar; NVARS]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents().iter()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(*m * *n, a * b);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let expect = &x(0).pow(2) - &x(1).pow(2);
        assert_eq!(p, expect);
    }

    #[test]
    fn additive_identity() {
        let p = &x(0).pow(3) + &x(2).scale(&ratio(-3, 2));
        assert_eq!(&p + &Poly::zero(), p);
    }

    #[test]
    fn fermat_cubic_times_cubic_has_six_terms() {
        let f = &(&x(0).pow(3) + &x(1).pow(3)) + &x(2).pow(3);
        let g = &(&(&x(0) * &x(1)) * &x(2)) + &x(3).pow(3);
        let p = &f * &g;
        // 3 x 2 products, no two monomials coincide
        assert_eq!(p.num_terms(), 6);
        assert_eq!(p.homogeneous_degree(), Some(6));
    }

    #[test]
    fn grevlex_ordering() {
        // x0 > x1 > x2 > x3, and x1^2 > x0*x2 in grevlex
        let a = Monomial::new([0, 2, 0, 0]);
        let b = Monomial::new([1, 0, 1, 0]);
        assert!(a > b);
        assert!(Monomial::var(0) > Monomial::var(3));
        assert!(Monomial::new([0, 0, 0, 2]) > Monomial::var(0));
    }

    #[test]
    fn exact_division() {
        let f = &x(0) + &x(1);
        let g = &x(2) - &x(3).scale(&scalar(5));
        let p = &f * &g;
        assert_eq!(p.div_exact(&f), Some(g.clone()));
        assert_eq!((&p + &Poly::one()).div_exact(&f), None);
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&x(0).pow(2).scale(&ratio(3, 2)) - &x(1)) + &Poly::constant(scalar(-4));
        assert_eq!(p.to_string(), "3/2*x0^2 - x1 - 4");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_clears_denominators() {
        let p = &x(0).scale(&ratio(-2, 3)) + &x(1).scale(&ratio(4, 9));
        assert_eq!(p.primitive().to_string(), "3*x0 - 2*x1");
    }
}
