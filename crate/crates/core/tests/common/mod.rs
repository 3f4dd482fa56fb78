//! Seeded random generators shared by the integration suites.
#![allow(dead_code)]

use p3dist::exterior::{ExtForm, VField};
use p3dist::groebner::Ideal;
use p3dist::poly::{scalar, Monomial, Poly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Homogeneous polynomial of degree `deg` with up to `terms` terms and
/// small integer coefficients; never zero.
pub fn poly(rng: &mut ChaCha8Rng, deg: u32, terms: usize) -> Poly {
    let monos = Monomial::all_of_degree(deg);
    loop {
        let n = rng.gen_range(1..=terms.min(monos.len()));
        let p = Poly::from_terms(
            monos.choose_multiple(rng, n).map(|m| (*m, scalar(rng.gen_range(-3..=3)))),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn form(rng: &mut ChaCha8Rng, grade: usize, deg: u32) -> ExtForm {
    let mut out = ExtForm::zero(grade);
    for idx in ExtForm::index_tuples(grade) {
        if rng.gen_bool(0.7) {
            out = out.add(&ExtForm::basis(&idx).mul_poly(&poly(rng, deg, 3)));
        }
    }
    out
}

/// `ι_R η` for a random 2-form `η`: a 1-form satisfying the Euler relation,
/// with coefficients of degree `d + 1`.
pub fn euler_form(rng: &mut ChaCha8Rng, d: u32) -> ExtForm {
    loop {
        let eta = form(rng, 2, d);
        let w = eta.contract(&VField::radial()).unwrap();
        if !w.is_zero() {
            return w;
        }
    }
}

pub fn ideal(rng: &mut ChaCha8Rng, gens: usize, max_deg: u32) -> Ideal {
    Ideal::new((0..gens).map(|_| {
        let d = rng.gen_range(1..=max_deg);
        poly(rng, d, 3)
    }))
}

pub fn monomial_ideal(rng: &mut ChaCha8Rng, gens: usize, max_deg: u32) -> Ideal {
    Ideal::new((0..gens).map(|_| {
        let d = rng.gen_range(1..=max_deg);
        let monos = Monomial::all_of_degree(d);
        Poly::term(scalar(1), *monos.choose(rng).unwrap())
    }))
}

fn field_of(a: &[[i64; 4]; 4]) -> Option<VField> {
    let x = Poly::coordinates();
    let comps: [Poly; 4] = std::array::from_fn(|i| {
        (0..4).fold(Poly::zero(), |acc, j| &acc + &x[j].scale(&scalar(a[i][j])))
    });
    VField::new(comps).ok()
}

fn mat_mul(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

/// Jordan shapes of a 4×4 matrix as `(eigenvalue slot, block size)` lists.
const SHAPES: &[&[(usize, usize)]] = &[
    &[(0, 1), (1, 1), (2, 1), (3, 1)],
    &[(0, 1), (0, 1), (1, 1), (2, 1)],
    &[(0, 1), (0, 1), (1, 1), (1, 1)],
    &[(0, 2), (0, 2)],
    &[(0, 2), (1, 1), (2, 1)],
    &[(0, 2), (1, 2)],
    &[(0, 2), (1, 1), (1, 1)],
    &[(0, 3), (1, 1)],
    &[(0, 3), (0, 1)],
    &[(0, 4)],
    &[(0, 1), (0, 1), (0, 1), (1, 1)],
];

/// `P J P⁻¹ x` for a Jordan matrix `J` of a random shape and a random
/// unimodular `P`, so every eigenvalue configuration is exercised.
pub fn linear_field(rng: &mut ChaCha8Rng) -> VField {
    let shape = SHAPES[rng.gen_range(0..SHAPES.len())];
    let mut eig: Vec<i64> = Vec::new();
    while eig.len() < 4 {
        let e = rng.gen_range(-4..=4);
        if !eig.contains(&e) {
            eig.push(e);
        }
    }
    let mut j = [[0i64; 4]; 4];
    let mut at = 0;
    for &(slot, size) in shape {
        for k in 0..size {
            j[at + k][at + k] = eig[slot];
            if k + 1 < size {
                j[at + k][at + k + 1] = 1;
            }
        }
        at += size;
    }
    let mut p = [[0i64; 4]; 4];
    let mut p_inv = [[0i64; 4]; 4];
    for i in 0..4 {
        p[i][i] = 1;
        p_inv[i][i] = 1;
    }
    for _ in 0..6 {
        let (r, c) = (rng.gen_range(0..4), rng.gen_range(0..4));
        if r == c {
            continue;
        }
        let k = rng.gen_range(-2..=2);
        let mut e = [[0i64; 4]; 4];
        let mut e_inv = [[0i64; 4]; 4];
        for i in 0..4 {
            e[i][i] = 1;
            e_inv[i][i] = 1;
        }
        e[r][c] = k;
        e_inv[r][c] = -k;
        p = mat_mul(&p, &e);
        p_inv = mat_mul(&e_inv, &p_inv);
    }
    field_of(&mat_mul(&mat_mul(&p, &j), &p_inv)).unwrap_or_else(|| linear_field(rng))
}
