//! Prime-field recomputation used as a consistency check on rational results.

use serde::Serialize;

use super::engine::{self, EPoly};
use super::field::{is_prime, prev_prime, Fp};
use super::ideal::Ideal;
use super::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::Monomial;

pub const DEFAULT_PRIME: u64 = 2_147_483_647;
const MAX_ROTATIONS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModPCheck {
    /// Prime whose leading-term ideal was compared last.
    pub prime: u64,
    /// Primes rejected before `prime`, in order.
    pub rejected: Vec<u64>,
    pub agrees: bool,
}

/// Leading monomials of the reduced grevlex basis over `F_p`, or `None` if
/// `p` divides a coefficient denominator.
pub fn leading_mod_p(ideal: &Ideal, p: u64) -> Option<Vec<Monomial>> {
    let order = MonomialOrder::Grevlex;
    let mut polys = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        polys.push(EPoly::from_poly(g, order, |c| Fp::from_rational(c, p))?);
    }
    let gb = engine::groebner(polys, order);
    Some(gb.iter().map(|g| g.lm().to_monomial().expect("aux-free")).collect())
}

/// Compare the rational grevlex leading-term ideal with its reduction mod
/// `prime`; on mismatch (an unlucky prime) rotate to the next smaller prime.
pub fn check_leading_ideal(ideal: &Ideal, prime: u64) -> Result<ModPCheck> {
    if !is_prime(prime) || prime >= 1 << 32 {
        return Err(Error::UnluckyPrime(prime));
    }
    let rational = ideal.groebner().leading().to_vec();
    let mut p = prime;
    let mut rejected = Vec::new();
    for _ in 0..=MAX_ROTATIONS {
        match leading_mod_p(ideal, p) {
            Some(lead) if lead == rational => return Ok(ModPCheck { prime: p, rejected, agrees: true }),
            _ => {
                rejected.push(p);
                match prev_prime(p) {
                    Some(q) => p = q,
                    None => break,
                }
            }
        }
    }
    let last = rejected.pop().unwrap_or(prime);
    Ok(ModPCheck { prime: last, rejected, agrees: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn ci_agrees_mod_p() {
        let ci = Ideal::new(["x^3+y^3+z^3", "x*y*z+w^3"].map(|s| parse_poly(s).unwrap()));
        let check = check_leading_ideal(&ci, DEFAULT_PRIME).unwrap();
        assert!(check.agrees);
        assert!(check.rejected.is_empty());
    }

    #[test]
    fn unlucky_prime_rotates() {
        // mod 3 the first generator collapses onto the second
        let i = Ideal::new(["3*x0^2 + x1^2", "x1^2"].map(|s| parse_poly(s).unwrap()));
        let check = check_leading_ideal(&i, 3).unwrap();
        assert!(check.agrees);
        assert_eq!(check.rejected, vec![3]);
        assert_eq!(check.prime, 2);
        assert!(check_leading_ideal(&i, 91).is_err());
    }
}
