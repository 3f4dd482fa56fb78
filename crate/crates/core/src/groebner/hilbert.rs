//! Hilbert series of `R/I` from the grevlex leading-term ideal.
//!
//! The numerator `N(t)` of `HS(t) = N(t) / (1 − t)^4` is computed for the
//! monomial ideal `M = in(I)` by pivoting on a variable:
//! `N(M) = N(M + (x_v)) + t·N(M : x_v)`, memoised on the minimal generators.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::ideal::Ideal;
use crate::poly::{Scalar, NVARS};

type Exps = [u16; NVARS];

/// Hilbert series and polynomial of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Coefficients of `N(t)` with `HS = N(t)/(1−t)^4`, ascending powers.
    pub numerator: Vec<i64>,
    /// Hilbert polynomial coefficients, ascending powers of `t`.
    #[serde(serialize_with = "ser_rationals")]
    pub hp: Vec<Scalar>,
    /// Degree of the Hilbert polynomial; `-1` for the empty scheme.
    pub projective_dimension: i64,
    pub degree: i64,
    pub constant_term: i64,
    #[serde(skip)]
    reduced: Vec<i64>,
    #[serde(skip)]
    krull: usize,
}

fn ser_rationals<S: serde::Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

impl HilbertData {
    /// Value of the Hilbert function at `t`.
    pub fn hilbert_function(&self, t: usize) -> i64 {
        // coefficient of t^n in N(t) * sum C(n+3, 3) t^n
        self.numerator
            .iter()
            .enumerate()
            .take(t + 1)
            .map(|(j, &c)| c * binom_i64((t - j + 3) as i64, 3))
            .sum()
    }

    pub fn hilbert_polynomial_at(&self, t: i64) -> Scalar {
        let x = Scalar::from_integer(t.into());
        self.hp.iter().rev().fold(Scalar::zero(), |acc, c| acc * &x + c)
    }

    /// Smallest `t0 ≥ 0` with `HF(t) = HP(t)` for all `t ≥ t0`.
    pub fn regularity_index(&self) -> usize {
        let deg_q = self.reduced.len().saturating_sub(1) as i64;
        (deg_q - self.krull as i64 + 1).max(0) as usize
    }
}

fn binom_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn minimize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|e| (e.iter().map(|&x| u32::from(x)).sum::<u32>(), *e));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| divides(m, &g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

struct Numerators {
    memo: HashMap<Vec<Exps>, Vec<i64>>,
}

impl Numerators {
    fn compute(&mut self, gens: Vec<Exps>) -> Vec<i64> {
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let result = self.compute_uncached(&gens);
        self.memo.insert(gens, result.clone());
        result
    }

    fn compute_uncached(&mut self, gens: &[Exps]) -> Vec<i64> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
            return Vec::new();
        }
        let pure: Vec<Option<(usize, u16)>> = gens
            .iter()
            .map(|g| {
                let nz: Vec<usize> = (0..NVARS).filter(|&i| g[i] > 0).collect();
                (nz.len() == 1).then(|| (nz[0], g[nz[0]]))
            })
            .collect();
        if pure.iter().all(Option::is_some) {
            // pairwise coprime pure powers: product of (1 − t^a)
            return pure.into_iter().flatten().fold(vec![1], |acc, (_, a)| {
                let mut f = vec![0; usize::from(a) + 1];
                f[0] = 1;
                f[usize::from(a)] = -1;
                poly_mul(&acc, &f)
            });
        }
        // pivot on the variable occurring most often in mixed generators
        let mut counts = [0usize; NVARS];
        for (g, p) in gens.iter().zip(&pure) {
            if p.is_none() {
                for i in 0..NVARS {
                    if g[i] > 0 {
                        counts[i] += 1;
                    }
                }
            }
        }
        let v = (0..NVARS).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("four variables");

        let mut with_pivot: Vec<Exps> = gens.iter().filter(|g| g[v] == 0).copied().collect();
        let mut unit = [0; NVARS];
        unit[v] = 1;
        with_pivot.push(unit);
        let quotient: Vec<Exps> = gens
            .iter()
            .map(|g| {
                let mut e = *g;
                e[v] = e[v].saturating_sub(1);
                e
            })
            .collect();

        let a = self.compute(minimize(with_pivot));
        let b = self.compute(minimize(quotient));
        poly_add(&a, &poly_mul(&[0, 1], &b))
    }
}

/// Hilbert data of `R/I` computed from the cached grevlex basis. For a
/// non-saturated ideal it describes the saturation only for large `t`.
pub fn hilbert(ideal: &Ideal) -> HilbertData {
    let leading: Vec<Exps> = ideal.groebner().leading().iter().map(|m| m.exponents()).collect();
    let numerator = Numerators { memo: HashMap::new() }.compute(minimize(leading));
    from_numerator(numerator)
}

fn from_numerator(numerator: Vec<i64>) -> HilbertData {
    if numerator.is_empty() {
        return HilbertData {
            numerator,
            hp: Vec::new(),
            projective_dimension: -1,
            degree: 0,
            constant_term: 0,
            reduced: Vec::new(),
            krull: 0,
        };
    }
    // divide out (1 − t) while N(1) = 0
    let mut q = numerator.clone();
    let mut krull = NVARS;
    while krull > 0 && q.iter().sum::<i64>() == 0 {
        // synthetic division by (1 − t): q = (1 − t) r  ⇔  r_j = sum_{i ≤ j} q_i
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut run = 0;
        for &c in &q[..q.len() - 1] {
            run += c;
            r.push(run);
        }
        q = trim(r);
        krull -= 1;
    }
    let degree: i64 = q.iter().sum();
    if krull == 0 {
        return HilbertData {
            numerator,
            hp: Vec::new(),
            projective_dimension: -1,
            degree: 0,
            constant_term: 0,
            reduced: q,
            krull,
        };
    }
    // HP(t) = sum_j q_j C(t − j + k − 1, k − 1)
    let m = krull - 1;
    let mut hp = vec![Scalar::zero(); m + 1];
    for (j, &qj) in q.iter().enumerate() {
        let shift = m as i64 - j as i64;
        // C(t + shift, m) = prod_{i<m} (t + shift − i) / m!
        let mut poly = vec![Scalar::one()];
        for i in 0..m {
            let c = Scalar::from_integer((shift - i as i64).into());
            let mut next = vec![Scalar::zero(); poly.len() + 1];
            for (k, a) in poly.iter().enumerate() {
                next[k] += a * &c;
                next[k + 1] += a;
            }
            poly = next;
        }
        let fact: i64 = (1..=m as i64).product();
        for (k, a) in poly.iter().enumerate() {
            hp[k] += a * Scalar::from_integer(qj.into()) / Scalar::from_integer(fact.into());
        }
    }
    let constant_term = hp[0].to_integer().to_i64().expect("small constant term");
    HilbertData {
        numerator,
        hp,
        projective_dimension: m as i64,
        degree,
        constant_term,
        reduced: q,
        krull,
    }
}

/// `(projective dimension, degree)`; the empty scheme gives `(−1, 0)`.
pub fn dimension_degree(ideal: &Ideal) -> (i64, i64) {
    let h = hilbert(ideal);
    (h.projective_dimension, h.degree)
}
