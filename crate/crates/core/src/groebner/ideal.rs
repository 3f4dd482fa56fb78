use std::fmt;
use std::sync::OnceLock;

use super::engine::{self, EPoly, Mono, AUX};
use super::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{scalar, Monomial, Poly, Scalar, NVARS};

/// Upper bound on colon steps while saturating by a non-variable generator.
pub const MAX_SATURATION_STEPS: usize = 64;

const ELIM_AUX: MonomialOrder = MonomialOrder::Elimination { split: AUX };

/// Reduced Gröbner basis: monic, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Poly>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// Generators of the leading-term ideal, one per basis element.
    pub fn leading(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.degree() == 0)
    }

    fn from_engine(order: MonomialOrder, polys: &[EPoly<Scalar>]) -> Self {
        let mut basis = Vec::new();
        let mut leading = Vec::new();
        for g in polys.iter().filter(|g| g.lm().aux_exp() == 0) {
            let terms = g.terms().map(|(m, c)| (m.to_monomial().expect("aux-free"), c.clone()));
            basis.push(Poly::from_terms(terms));
            leading.push(g.lm().to_monomial().expect("aux-free"));
        }
        GroebnerBasis { order, basis, leading }
    }

    fn engine_polys(&self) -> Vec<EPoly<Scalar>> {
        self.basis.iter().map(|p| lift(p, self.order, 0)).collect()
    }
}

fn lift(p: &Poly, order: MonomialOrder, aux: u16) -> EPoly<Scalar> {
    EPoly::from_terms(order, p.terms().map(|(m, c)| (Mono::from_monomial(m, aux), c.clone())))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: MonomialOrder) -> GroebnerBasis {
    let polys = gens.iter().filter(|g| !g.is_zero()).map(|g| lift(g, order, 0)).collect();
    GroebnerBasis::from_engine(order, &engine::groebner(polys, order))
}

/// Remainder of `p` on division by `gb`; zero iff `p` lies in the ideal.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Poly {
    let basis = gb.engine_polys();
    let refs: Vec<&EPoly<Scalar>> = basis.iter().collect();
    let r = engine::reduce(&lift(p, gb.order, 0), &refs, gb.order);
    Poly::from_terms(r.terms().map(|(m, c)| (m.to_monomial().expect("aux-free"), c.clone())))
}

/// Polynomial ideal in `x0..x3`, with a write-once grevlex basis cache.
#[derive(Clone, Debug)]
pub struct Ideal {
    gens: Vec<Poly>,
    saturated: bool,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    pub fn new(gens: impl IntoIterator<Item = Poly>) -> Self {
        Ideal { gens: gens.into_iter().filter(|g| !g.is_zero()).collect(), saturated: false, gb: OnceLock::new() }
    }

    pub fn zero() -> Self {
        Ideal::new([])
    }

    pub fn unit() -> Self {
        Ideal::new([Poly::one()])
    }

    /// The irrelevant ideal `(x0, x1, x2, x3)`.
    pub fn irrelevant() -> Self {
        Ideal::new(Poly::coordinates())
    }

    fn from_grevlex_basis(gb: GroebnerBasis) -> Self {
        debug_assert_eq!(gb.order, MonomialOrder::Grevlex);
        let ideal = Ideal::new(gb.basis.clone());
        let _ = ideal.gb.set(gb);
        ideal
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Set once the ideal has been saturated by the irrelevant ideal.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// Cached reduced grevlex basis.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger(&self.gens, MonomialOrder::Grevlex))
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> GroebnerBasis {
        match order {
            MonomialOrder::Grevlex => self.groebner().clone(),
            _ => buchberger(&self.gens, order),
        }
    }

    /// Reduced grevlex basis; the canonical generating set.
    pub fn canonical_generators(&self) -> &[Poly] {
        self.groebner().basis()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        normal_form(p, self.groebner())
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal::new(self.gens.iter().chain(other.gens.iter()).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        Ideal::new(self.gens.iter().flat_map(|f| other.gens.iter().map(move |g| f * g)))
    }

    /// `I ∩ J`, eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_zero() || other.is_zero() {
            return Ideal::zero();
        }
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut gens = Vec::new();
        for g in self.canonical_generators() {
            gens.push(lift(g, ELIM_AUX, 1));
        }
        for h in other.canonical_generators() {
            gens.push(lift(h, ELIM_AUX, 0).sub(&lift(h, ELIM_AUX, 1)));
        }
        let eliminated = engine::groebner(gens, ELIM_AUX);
        let mut gb = GroebnerBasis::from_engine(ELIM_AUX, &eliminated);
        gb.order = MonomialOrder::Grevlex;
        Ideal::from_grevlex_basis(gb)
    }

    /// `(I : f) = { g : g·f ∈ I }`.
    pub fn colon(&self, f: &Poly) -> Ideal {
        if f.is_zero() {
            return Ideal::unit();
        }
        if f.is_constant() || self.is_zero() {
            return self.clone();
        }
        if let Some(v) = as_variable(f) {
            if self.is_homogeneous() {
                return self.colon_variable(v, false);
            }
        }
        let principal = Ideal::new([f.clone()]);
        let meet = self.intersect(&principal);
        Ideal::new(meet.canonical_generators().iter().map(|g| g.div_exact(f).expect("I ∩ (f) ⊆ (f)")))
    }

    /// `(I : x_v)` or `(I : x_v^∞)` for homogeneous `I`: in grevlex with
    /// `x_v` as the smallest variable, the basis elements divided by
    /// `x_v` (respectively by its largest dividing power) generate the
    /// quotient.
    fn colon_variable(&self, v: usize, infinite: bool) -> Ideal {
        let swapped: Vec<Poly> = self.gens.iter().map(|g| swap_vars(g, v, NVARS - 1)).collect();
        let gb = buchberger(&swapped, MonomialOrder::Grevlex);
        let last = Poly::var(NVARS - 1);
        let mut out = Vec::with_capacity(gb.basis.len());
        for g in &gb.basis {
            let mut q = g.clone();
            while let Some(next) = q.div_exact(&last) {
                q = next;
                if !infinite {
                    break;
                }
            }
            out.push(swap_vars(&q, v, NVARS - 1));
        }
        Ideal::new(out)
    }

    /// `(I : f^∞)` by Rabinowitsch: eliminate `t` from `I + (t·f − 1)`.
    pub fn saturate_poly(&self, f: &Poly) -> Ideal {
        if f.is_zero() {
            return Ideal::unit();
        }
        if f.is_constant() || self.is_zero() {
            return self.clone();
        }
        if let Some(v) = as_variable(f) {
            if self.is_homogeneous() {
                return self.colon_variable(v, true);
            }
        }
        let mut gens: Vec<EPoly<Scalar>> = self.canonical_generators().iter().map(|g| lift(g, ELIM_AUX, 0)).collect();
        let tf = lift(f, ELIM_AUX, 1);
        let one = lift(&Poly::one(), ELIM_AUX, 0);
        gens.push(tf.sub(&one));
        let eliminated = engine::groebner(gens, ELIM_AUX);
        let mut gb = GroebnerBasis::from_engine(ELIM_AUX, &eliminated);
        gb.order = MonomialOrder::Grevlex;
        Ideal::from_grevlex_basis(gb)
    }

    /// `(I : J^∞)`: for each generator `f` of `J`, iterate `I ↦ (I : f)` until
    /// it stabilises, then intersect over the generators.
    pub fn saturate(&self, j: &Ideal) -> Result<Ideal> {
        let gens = j.canonical_generators().to_vec();
        if gens.is_empty() {
            return Err(Error::InvalidForm("saturation by the zero ideal".into()));
        }
        let by_irrelevant = *j == Ideal::irrelevant();
        let mut parts: Vec<Ideal> = Vec::with_capacity(gens.len());
        for f in &gens {
            let part = match as_variable(f) {
                Some(_) if self.is_homogeneous() => self.saturate_poly(f),
                _ => self.colon_fixpoint(f)?,
            };
            if part == *self {
                // I ⊆ (I : f^∞) for every f, so the intersection is I itself.
                let mut out = self.clone();
                out.saturated |= by_irrelevant;
                return Ok(out);
            }
            if !parts.contains(&part) {
                parts.push(part);
            }
        }
        let mut acc = parts.pop().expect("at least one generator");
        while let Some(next) = parts.pop() {
            acc = acc.intersect(&next);
        }
        acc.saturated = by_irrelevant;
        Ok(acc)
    }

    fn colon_fixpoint(&self, f: &Poly) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..MAX_SATURATION_STEPS {
            let next = cur.colon(f);
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::NonTermination(MAX_SATURATION_STEPS))
    }

    /// Saturation by the irrelevant ideal: the scheme-theoretic ideal.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        self.saturate(&Ideal::irrelevant())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.groebner().basis == other.groebner().basis
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn as_variable(f: &Poly) -> Option<usize> {
    if f.num_terms() != 1 {
        return None;
    }
    let (m, _) = f.leading()?;
    (m.degree() == 1).then(|| m.exponents().iter().position(|&e| e == 1).expect("degree one"))
}

fn swap_vars(p: &Poly, i: usize, j: usize) -> Poly {
    if i == j {
        return p.clone();
    }
    Poly::from_terms(p.terms().map(|(m, c)| {
        let mut e = m.exponents();
        e.swap(i, j);
        (Monomial::new(e), c.clone())
    }))
}

/// Greatest common divisor via `lcm = generator of (f) ∩ (g)`, normalised
/// to be monic. Either argument may be zero.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() || f.is_constant() || g.is_constant() {
        return if g.is_zero() { f.monic() } else { Poly::constant(scalar(1)) };
    }
    let meet = Ideal::new([f.clone()]).intersect(&Ideal::new([g.clone()]));
    let lcm = &meet.canonical_generators()[0];
    (f * g).div_exact(lcm).expect("lcm divides the product").monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|s| p(s)))
    }

    #[test]
    fn membership() {
        let i = ideal(&["x0", "x1"]);
        assert!(i.normal_form(&p("x0")).is_zero());
        assert_eq!(i.normal_form(&p("x2")), p("x2"));
        let ci = ideal(&["x^3+y^3+z^3", "x*y*z+w^3"]);
        assert!(ci.contains(&p("w*(x^3+y^3+z^3)")));
        assert!(!ci.contains(&p("x^3")));
    }

    #[test]
    fn ci_basis_is_idempotent() {
        let ci = ideal(&["x^3+y^3+z^3", "x*y*z+w^3"]);
        let gb = ci.groebner().clone();
        assert_eq!(buchberger(gb.basis(), MonomialOrder::Grevlex), gb);
    }

    #[test]
    fn colon_examples() {
        assert_eq!(ideal(&["x0^2"]).colon(&p("x0")), ideal(&["x0"]));
        assert_eq!(ideal(&["x0*x1", "x0*x2"]).colon(&p("x0")), ideal(&["x1", "x2"]));
        let meet = ideal(&["x0", "x1"]).intersect(&ideal(&["x2", "x3"]));
        assert_eq!(meet.colon(&p("x0")), ideal(&["x2", "x3"]));
        // the generic route agrees with the variable shortcut
        assert_eq!(meet.colon(&p("x0 + x1")), ideal(&["x2", "x3"]));
    }

    #[test]
    fn intersection_of_coordinate_lines() {
        let meet = ideal(&["x0", "x1"]).intersect(&ideal(&["x2", "x3"]));
        assert_eq!(meet, ideal(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]));
    }

    #[test]
    fn saturation_examples() {
        let s = ideal(&["x0^2", "x0*x1", "x0*x2", "x0*x3"]).saturate_irrelevant().unwrap();
        assert_eq!(s, ideal(&["x0"]));
        assert!(s.is_saturated());
        let line = ideal(&["x0", "x1"]);
        let s = line.product(&Ideal::irrelevant()).saturate_irrelevant().unwrap();
        assert_eq!(s, line);
        assert!(ideal(&["x1", "-x0", "x3", "-x2"]).saturate_irrelevant().unwrap().is_unit());
    }

    #[test]
    fn rabinowitsch_matches_iterated_colon() {
        let i = ideal(&["x0^3*x2", "x0*x1^2"]);
        let f = p("x0");
        let rab = {
            // force the elimination route by a non-variable generator
            let g = p("x0*x1 + x0*x2");
            i.saturate_poly(&g)
        };
        assert_eq!(rab, i.colon_fixpoint(&p("x0*x1 + x0*x2")).unwrap());
        assert_eq!(i.saturate_poly(&f), ideal(&["x2", "x1^2"]));
    }

    #[test]
    fn gcd_by_lcm() {
        let g = poly_gcd(&p("x0^2 - x1^2"), &p("x0^2 + x0*x1"));
        assert_eq!(g, p("x0 + x1"));
        assert!(poly_gcd(&p("x0"), &p("x1")).is_constant());
    }
}
