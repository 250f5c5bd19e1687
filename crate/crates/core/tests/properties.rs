mod common;

use common::*;
use proptest::prelude::*;
use qgor_core::invariants::{is_irreducible_mprimary, socle_dimension};
use qgor_core::{Field, Ideal, Monomial, PolyRing, Polynomial};
use std::sync::Arc;

/// Sparse polynomial in three variables from raw `(exponents, coefficient)` data.
fn build<F: Field>(r: &PolyRing<F>, raw: &[([u16; 3], i64)]) -> Polynomial<F> {
    let f = r.field();
    r.from_terms(raw.iter().map(|(e, c)| (Monomial::new(*e), f.from_i64(*c))).filter(|(_, c)| !f.is_zero(c)).collect())
}

fn raw_poly() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    prop::collection::vec(([0u16..4, 0u16..4, 0u16..4], -20i64..20), 0..6)
}

fn small_poly() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    prop::collection::vec(([0u16..3, 0u16..3, 0u16..3], -5i64..5), 0..4)
}

fn ring_axioms<F: Field>(r: &PolyRing<F>, a: &Polynomial<F>, b: &Polynomial<F>, c: &Polynomial<F>) {
    assert_eq!(r.add(a, b), r.add(b, a));
    assert_eq!(r.mul(a, b), r.mul(b, a));
    assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
    assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
    assert_eq!(r.sub(a, a), r.zero());
    assert_eq!(r.mul(a, &r.one()), *a);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_ring_axioms(a in raw_poly(), b in raw_poly(), c in raw_poly()) {
        let r = qring(&["x", "y", "z"]);
        ring_axioms(&r, &build(&r, &a), &build(&r, &b), &build(&r, &c));
    }

    #[test]
    fn prime_field_ring_axioms(a in raw_poly(), b in raw_poly(), c in raw_poly()) {
        let r = pring(7, &["x", "y", "z"]);
        ring_axioms(&r, &build(&r, &a), &build(&r, &b), &build(&r, &c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_linear_and_idempotent(gens in prop::collection::vec(raw_poly(), 1..3), f in raw_poly(), g in raw_poly()) {
        let r = qring(&["x", "y", "z"]);
        let gens: Vec<_> = gens.iter().map(|p| build(&r, p)).filter(|p| !p.is_zero()).collect();
        let ideal = Ideal::new(&r, gens).unwrap();
        let (f, g) = (build(&r, &f), build(&r, &g));
        let nf = |p: &Polynomial<_>| ideal.normal_form(p);
        prop_assert_eq!(nf(&nf(&f)), nf(&f));
        prop_assert_eq!(nf(&r.add(&f, &g)), nf(&r.add(&nf(&f), &nf(&g))));
        prop_assert!(ideal.contains(&r.sub(&f, &nf(&f))));
    }

    #[test]
    fn colon_times_element_lies_in_the_ideal(a in prop::collection::vec(small_poly(), 1..3), f in small_poly()) {
        let r = pring(32003, &["x", "y", "z"]);
        let gens: Vec<_> = a.iter().map(|p| build(&r, p)).filter(|p| !p.is_zero()).collect();
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let ideal = Ideal::new(&r, gens).unwrap();
        let colon = ideal.colon_poly(&f).unwrap();
        prop_assert!(colon.contains_ideal(&ideal));
        for g in colon.gens() {
            prop_assert!(ideal.contains(&r.mul(g, &f)));
        }
    }
}

#[test]
fn bivariate_socles_detect_pure_power_ideals() {
    let r: Arc<_> = qring(&["x", "y"]);
    let ideals = bivariate_mprimary_ideals(4);
    assert!(ideals.len() > 50);
    for gens in ideals {
        let ideal = Ideal::new(&r, gens.iter().map(|m| r.monomial(m.clone())).collect()).unwrap();
        let socle = socle_dimension(&ideal, &Ideal::zero(&r)).unwrap();
        assert_eq!(socle as usize, monomial_socle(&gens, 2));
        let pure = gens.iter().all(|m| m.support().count() == 1);
        assert_eq!(socle == 1, pure, "{gens:?}");
        assert_eq!(is_irreducible_mprimary(&ideal, &Ideal::zero(&r)).unwrap().irreducible, pure);
    }
}
