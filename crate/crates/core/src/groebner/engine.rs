//! Buchberger's algorithm over an abstract coefficient field.
//!
//! The engine works in five variables: the four coordinates `x0..x3` plus
//! one auxiliary variable (index [`AUX`]) used by elimination-based
//! intersection, colon and Rabinowitsch saturation. Terms are kept sorted by
//! a `u128` key that encodes the active monomial order, so comparisons are
//! plain integer comparisons.

use std::collections::BTreeMap;

use super::field::Field;
use super::MonomialOrder;
use crate::poly::{Monomial, Poly, Scalar, NVARS};

pub(crate) const NV: usize = NVARS + 1;
pub(crate) const AUX: usize = NVARS;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub(crate) struct Mono([u16; NV]);

impl Mono {
    pub fn from_monomial(m: &Monomial, aux: u16) -> Self {
        let e = m.exponents();
        Mono([e[0], e[1], e[2], e[3], aux])
    }

    #[cfg(test)]
    pub fn aux() -> Self {
        let mut e = [0; NV];
        e[AUX] = 1;
        Mono(e)
    }

    pub fn to_monomial(self) -> Option<Monomial> {
        (self.0[AUX] == 0).then(|| Monomial::new([self.0[0], self.0[1], self.0[2], self.0[3]]))
    }

    pub fn aux_exp(&self) -> u16 {
        self.0[AUX]
    }

    pub fn deg(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Mono(e)
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Mono(e)
    }

    fn lcm(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Mono(e)
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Sort key: a larger key means a larger monomial under `order`.
    pub fn key(&self, order: MonomialOrder) -> u128 {
        let e = &self.0;
        let mut k: u128 = 0;
        let mut push = |v: u32| {
            k = (k << 16) | u128::from(v & 0xFFFF);
        };
        match order {
            MonomialOrder::Grevlex => {
                push(self.deg());
                for i in (0..NV).rev() {
                    push(0xFFFF - u32::from(e[i]));
                }
            }
            MonomialOrder::Lex => {
                for &x in e.iter() {
                    push(u32::from(x));
                }
            }
            MonomialOrder::Elimination { split } => {
                let split = split.min(NV);
                let deg_of = |r: std::ops::Range<usize>| r.map(|i| u32::from(e[i])).sum::<u32>();
                push(deg_of(split..NV));
                for i in (split..NV).rev() {
                    push(0xFFFF - u32::from(e[i]));
                }
                push(deg_of(0..split));
                for i in (0..split).rev() {
                    push(0xFFFF - u32::from(e[i]));
                }
            }
        }
        k
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Term<C> {
    key: u128,
    mono: Mono,
    coeff: C,
}

/// Polynomial with terms sorted by descending key.
#[derive(Clone, Debug)]
pub(crate) struct EPoly<C> {
    terms: Vec<Term<C>>,
}

impl<C: Field> EPoly<C> {
    pub fn from_terms(order: MonomialOrder, it: impl IntoIterator<Item = (Mono, C)>) -> Self {
        let mut acc: BTreeMap<u128, (Mono, C)> = BTreeMap::new();
        for (m, c) in it {
            add_into(&mut acc, m.key(order), m, c);
        }
        EPoly::from_acc(acc)
    }

    fn from_acc(acc: BTreeMap<u128, (Mono, C)>) -> Self {
        EPoly {
            terms: acc
                .into_iter()
                .rev()
                .map(|(key, (mono, coeff))| Term { key, mono, coeff })
                .collect(),
        }
    }

    pub fn from_poly(
        p: &Poly,
        order: MonomialOrder,
        conv: impl Fn(&Scalar) -> Option<C>,
    ) -> Option<Self> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let c = conv(c)?;
            if !c.is_zero() {
                terms.push((Mono::from_monomial(m, 0), c));
            }
        }
        Some(EPoly::from_terms(order, terms))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Mono {
        self.terms[0].mono
    }

    fn lkey(&self) -> u128 {
        self.terms[0].key
    }

    fn sugar_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.deg()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter().map(|t| (&t.mono, &t.coeff))
    }

    pub fn mul_term(&self, m: &Mono, c: &C, order: MonomialOrder) -> Self {
        EPoly {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let mono = t.mono.mul(m);
                    Term { key: mono.key(order), mono, coeff: t.coeff.mul(c) }
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].key > other.terms[j].key);
            let take_right = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].key > self.terms[i].key);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let t = &other.terms[j];
                out.push(Term { key: t.key, mono: t.mono, coeff: t.coeff.neg() });
                j += 1;
            } else {
                let c = self.terms[i].coeff.sub(&other.terms[j].coeff);
                if !c.is_zero() {
                    out.push(Term { key: self.terms[i].key, mono: self.terms[i].mono, coeff: c });
                }
                i += 1;
                j += 1;
            }
        }
        EPoly { terms: out }
    }

    pub fn monic(mut self) -> Self {
        if let Some(first) = self.terms.first() {
            let inv = first.coeff.inv();
            for t in &mut self.terms {
                t.coeff = t.coeff.mul(&inv);
            }
        }
        self
    }
}

fn add_into<C: Field>(acc: &mut BTreeMap<u128, (Mono, C)>, key: u128, mono: Mono, c: C) {
    use std::collections::btree_map::Entry;
    match acc.entry(key) {
        Entry::Vacant(v) => {
            v.insert((mono, c));
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().1.add(&c);
            if sum.is_zero() {
                o.remove();
            } else {
                o.get_mut().1 = sum;
            }
        }
    }
}

/// Full reduction of `p` by the monic polynomials `basis`.
pub(crate) fn reduce<C: Field>(p: &EPoly<C>, basis: &[&EPoly<C>], order: MonomialOrder) -> EPoly<C> {
    let mut acc: BTreeMap<u128, (Mono, C)> =
        p.terms.iter().map(|t| (t.key, (t.mono, t.coeff.clone()))).collect();
    let mut rem = Vec::new();
    while let Some((key, (mono, c))) = acc.pop_last() {
        match basis.iter().find(|g| g.lm().divides(&mono)) {
            Some(g) => {
                let q = mono.div(&g.lm());
                for t in &g.terms[1..] {
                    let m = t.mono.mul(&q);
                    add_into(&mut acc, m.key(order), m, t.coeff.mul(&c).neg());
                }
            }
            None => rem.push(Term { key, mono, coeff: c }),
        }
    }
    EPoly { terms: rem }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    lcm_key: u128,
    sugar: u32,
}

struct State<C> {
    order: MonomialOrder,
    polys: Vec<EPoly<C>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<C: Field> State<C> {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (self.polys[i].lm(), self.polys[j].lm());
        let lcm = a.lcm(&b);
        let sugar = (self.sugar[i] + lcm.deg() - a.deg()).max(self.sugar[j] + lcm.deg() - b.deg());
        Pair { i, j, lcm, lcm_key: lcm.key(self.order), sugar }
    }

    fn reduce_active(&self, p: &EPoly<C>) -> EPoly<C> {
        let basis: Vec<&EPoly<C>> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce(p, &basis, self.order)
    }

    /// Insert a new monic basis element, pruning pairs with the
    /// Gebauer–Möller criteria (product criterion and chain criterion).
    fn update(&mut self, h: EPoly<C>, sugar: u32) {
        let hi = self.polys.len();
        let lh = h.lm();
        self.polys.push(h);
        self.sugar.push(sugar);

        let mut candidates: Vec<Pair> = self.active.iter().map(|&g| self.make_pair(g, hi)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let lg = self.polys[p.i].lm();
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if lh.coprime(&lg) || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !lh.coprime(&self.polys[p.i].lm()));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm().lcm(&lh);
            let lj = polys[p.j].lm().lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(kept);

        self.active.retain(|&g| !lh.divides(&polys[g].lm()));
        self.active.push(hi);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.sugar, p.lcm_key))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> EPoly<C> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let one = f.terms[0].coeff.one_like();
        let a = f.mul_term(&p.lcm.div(&f.lm()), &one, self.order);
        let b = g.mul_term(&p.lcm.div(&g.lm()), &one, self.order);
        a.sub(&b)
    }
}

/// Reduced Gröbner basis, monic, sorted by ascending leading monomial.
pub(crate) fn groebner<C: Field>(gens: Vec<EPoly<C>>, order: MonomialOrder) -> Vec<EPoly<C>> {
    let mut st = State { order, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut gens: Vec<EPoly<C>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    gens.sort_by_key(|g| g.lkey());
    for g in gens {
        let sugar = g.sugar_degree();
        let r = st.reduce_active(&g);
        if !r.is_zero() {
            st.update(r.monic(), sugar);
        }
    }
    while let Some(pair) = st.pop_pair() {
        let s = st.spoly(&pair);
        let r = st.reduce_active(&s);
        if !r.is_zero() {
            st.update(r.monic(), pair.sugar);
        }
    }

    let mut basis: Vec<EPoly<C>> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    basis.sort_by_key(|g| g.lkey());
    let mut reduced = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<&EPoly<C>> =
            basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p).collect();
        reduced.push(reduce(g, &others, order).monic());
    }
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ep(s: &str, order: MonomialOrder) -> EPoly<Scalar> {
        EPoly::from_poly(&parse_poly(s).unwrap(), order, |c| Some(c.clone())).unwrap()
    }

    fn to_strings(b: &[EPoly<Scalar>]) -> Vec<String> {
        b.iter()
            .map(|g| {
                Poly::from_terms(g.terms().map(|(m, c)| (m.to_monomial().unwrap(), c.clone()))).to_string()
            })
            .collect()
    }

    #[test]
    fn grevlex_keys_order_like_monomial() {
        let all = Monomial::all_of_degree(3);
        for w in all.windows(2) {
            let (a, b) = (Mono::from_monomial(&w[0], 0), Mono::from_monomial(&w[1], 0));
            assert!(a.key(MonomialOrder::Grevlex) > b.key(MonomialOrder::Grevlex));
        }
    }

    #[test]
    fn elimination_key_puts_aux_first() {
        let order = MonomialOrder::Elimination { split: AUX };
        let t = Mono::aux();
        let big = Mono::from_monomial(&Monomial::new([9, 0, 0, 0]), 0);
        assert!(t.key(order) > big.key(order));
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let o = MonomialOrder::Grevlex;
        let b = groebner(vec![ep("x0", o), ep("x1", o)], o);
        assert_eq!(to_strings(&b), vec!["x1", "x0"]);
    }

    #[test]
    fn s_polynomial_completion() {
        // (x0^2 - x1*x2, x0*x1): S-pair gives x1^2*x2
        let o = MonomialOrder::Grevlex;
        let b = groebner(vec![ep("x0^2 - x1*x2", o), ep("x0*x1", o)], o);
        let s = to_strings(&b);
        assert!(s.contains(&"x1^2*x2".to_string()), "{s:?}");
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn lex_circle_line() {
        // affine check of the inhomogeneous path: (x0^2 + x1^2 - 1, x0 - x1)
        let o = MonomialOrder::Lex;
        let b = groebner(vec![ep("x0^2 + x1^2 - 1", o), ep("x0 - x1", o)], o);
        assert_eq!(to_strings(&b), vec!["x1^2 - 1/2", "x0 - x1"]);
    }
}
