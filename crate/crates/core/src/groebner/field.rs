use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficient field for the Buchberger engine.
///
/// Elements carry whatever context they need (a prime field element knows
/// its modulus), so there is no context-free `zero()`.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
}

/// Element of `Z/pZ` for a prime `p < 2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        Fp { v: v.rem_euclid(p as i64) as u64, p }
    }

    /// Reduce a rational; `None` when `p` divides the denominator.
    pub fn from_rational(q: &BigRational, p: u64) -> Option<Self> {
        let pb = BigInt::from(p);
        let num = q.numer().mod_floor(&pb).to_u64()?;
        let den = q.denom().mod_floor(&pb).to_u64()?;
        if den == 0 {
            return None;
        }
        Some(Fp { v: num, p }.mul(&Fp { v: den, p }.inv()))
    }

    pub fn value(&self) -> u64 {
        self.v
    }
}

impl Field for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp { v: (self.v + rhs.v) % self.p, p: self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp { v: (self.v + self.p - rhs.v) % self.p, p: self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp { v: (self.v * rhs.v) % self.p, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: (self.p - self.v) % self.p, p: self.p }
    }
    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverting zero in F_{}", self.p);
        // Fermat: a^(p-2)
        let (mut base, mut e, mut acc) = (self.v, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        Fp { v: acc, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime strictly below `n`.
pub fn prev_prime(n: u64) -> Option<u64> {
    (2..n).rev().find(|&k| is_prime(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn fp_arithmetic() {
        let p = 101;
        let a = Fp::new(37, p);
        assert_eq!(a.mul(&a.inv()), a.one_like());
        assert_eq!(a.add(&a.neg()).value(), 0);
        assert_eq!(Fp::new(-1, p).value(), 100);
    }

    #[test]
    fn rational_reduction() {
        let p = 7;
        let half = Fp::from_rational(&ratio(1, 2), p).unwrap();
        assert_eq!(half.mul(&Fp::new(2, p)).value(), 1);
        assert!(Fp::from_rational(&ratio(1, 14), p).is_none());
        assert_eq!(Fp::from_rational(&ratio(-3, 1), p).unwrap().value(), 4);
    }

    #[test]
    fn primes() {
        assert!(is_prime(2_147_483_647));
        assert_eq!(prev_prime(2_147_483_647), Some(2_147_483_629));
        assert_eq!(prev_prime(2), None);
    }
}
