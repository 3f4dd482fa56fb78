use p3dist::exterior::ExtForm;
use p3dist::groebner::{hilbert, Ideal};
use p3dist::parse::parse_poly;
use p3dist::poly::{ratio, Monomial, Poly};
use proptest::prelude::*;

fn poly_strategy(max_exp: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec(([0..=max_exp, 0..=max_exp, 0..=max_exp, 0..=max_exp], -7i64..=7, 1i64..=4), 0..6)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(e, n, d)| (Monomial::new(e), ratio(n, d)))))
}

fn monomial_ideal_strategy() -> impl Strategy<Value = Ideal> {
    prop::collection::vec([0u16..=3, 0u16..=3, 0u16..=3, 0u16..=3], 1..4).prop_map(|gens| {
        Ideal::new(
            gens.into_iter()
                .filter(|e| e.iter().any(|&x| x > 0))
                .map(|e| Poly::term(ratio(1, 1), Monomial::new(e)))
                .collect::<Vec<_>>(),
        )
    })
}

fn homogeneous_strategy(deg: u32) -> impl Strategy<Value = Poly> {
    let monos = Monomial::all_of_degree(deg);
    let n = monos.len();
    prop::collection::vec((0..n, -3i64..=3), 1..4)
        .prop_map(move |picks| Poly::from_terms(picks.into_iter().map(|(i, c)| (monos[i], ratio(c, 1)))))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_round_trips(p in poly_strategy(3)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in poly_strategy(2), b in poly_strategy(2), c in poly_strategy(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&(&a - &b) + &b - a.clone()).is_zero());
    }

    #[test]
    fn hilbert_numerator_is_additive_on_monomial_ideals(i in monomial_ideal_strategy(), j in monomial_ideal_strategy()) {
        // HS(I) + HS(J) = HS(I + J) + HS(I ∩ J)
        let pad = |mut v: Vec<i64>, n: usize| { v.resize(n, 0); v };
        let parts = [hilbert(&i), hilbert(&j), hilbert(&i.sum(&j)), hilbert(&i.intersect(&j))].map(|h| h.numerator);
        let n = parts.iter().map(Vec::len).max().unwrap();
        let [a, b, s, m] = parts.map(|v| pad(v, n));
        let lhs: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let rhs: Vec<i64> = s.iter().zip(&m).map(|(x, y)| x + y).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_lie_in_their_ideal(f in homogeneous_strategy(2), g in homogeneous_strategy(2), h in homogeneous_strategy(3)) {
        let i = Ideal::new([f.clone(), g.clone(), h.clone()]);
        prop_assert!(i.contains(&f) && i.contains(&g) && i.contains(&h));
        let swapped = Ideal::new([h, g, f]);
        prop_assert_eq!(i.canonical_generators(), swapped.canonical_generators());
    }

    #[test]
    fn colon_and_intersection_are_consistent(f in homogeneous_strategy(2), g in homogeneous_strategy(2), h in homogeneous_strategy(1)) {
        let i = Ideal::new([f, g]);
        let q = i.colon(&h);
        prop_assert!(q.contains_ideal(&i));
        for c in q.canonical_generators() {
            prop_assert!(i.contains(&(c * &h)));
        }
        let m = i.intersect(&Ideal::new([h.clone()]));
        prop_assert!(i.contains_ideal(&m) && Ideal::new([h]).contains_ideal(&m));
    }

    #[test]
    fn one_forms_square_to_zero(a in poly_strategy(2), b in poly_strategy(2), c in poly_strategy(2), d in poly_strategy(2)) {
        let w = ExtForm::one_form([a, b, c, d]);
        prop_assert!(w.wedge(&w).unwrap().is_zero());
        prop_assert!(w.d().d().is_zero());
    }
}
