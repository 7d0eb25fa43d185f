mod common;

use common::{arb_poly, poly};
use pbnf::{Assignment, Poly};
use proptest::prelude::*;
use std::collections::BTreeMap;

const LETTERS: &[&str] = &["p", "q", "r", "s"];

fn arb_assignment() -> impl Strategy<Value = Assignment> {
    proptest::collection::vec(any::<bool>(), LETTERS.len()).prop_map(|bits| LETTERS.iter().copied().zip(bits).collect())
}

proptest! {
    #[test]
    fn addition_is_an_abelian_group(a in arb_poly(LETTERS), b in arb_poly(LETTERS), c in arb_poly(LETTERS)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&Poly::zero()), a.clone());
        prop_assert!(a.add(&a).is_zero());
    }

    #[test]
    fn multiplication_is_idempotent_and_distributes(a in arb_poly(LETTERS), b in arb_poly(LETTERS), c in arb_poly(LETTERS)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
        prop_assert!(a.mul(&Poly::zero()).is_zero());
        prop_assert_eq!(a.mul(&a), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_poly(LETTERS), b in arb_poly(LETTERS), s in arb_assignment()) {
        let (x, y) = (a.evaluate(&s).unwrap(), b.evaluate(&s).unwrap());
        prop_assert_eq!(a.add(&b).evaluate(&s).unwrap(), x ^ y);
        prop_assert_eq!(a.mul(&b).evaluate(&s).unwrap(), x & y);
        prop_assert_eq!(a.negate().evaluate(&s).unwrap(), !x);
    }

    #[test]
    fn substitution_commutes_with_evaluation(a in arb_poly(LETTERS), b in arb_poly(LETTERS), s in arb_assignment()) {
        let substituted = a.substitute(&BTreeMap::from([("p".to_string(), b.clone())]));
        let mut shifted = s.clone();
        shifted.set("p", b.evaluate(&s).unwrap());
        prop_assert_eq!(substituted.evaluate(&s).unwrap(), a.evaluate(&shifted).unwrap());
    }

    #[test]
    fn substitution_is_simultaneous(a in arb_poly(LETTERS)) {
        let swap = BTreeMap::from([("p".to_string(), Poly::var("q")), ("q".to_string(), Poly::var("p"))]);
        prop_assert_eq!(a.substitute(&swap).substitute(&swap), a);
    }

    #[test]
    fn complementing_inputs_is_an_involution(a in arb_poly(LETTERS), s in arb_assignment()) {
        prop_assert_eq!(a.complement_inputs().complement_inputs(), a.clone());
        prop_assert_eq!(a.complement_inputs().evaluate(&s.complemented()).unwrap(), a.evaluate(&s).unwrap());
    }

    #[test]
    fn display_round_trips(a in arb_poly(LETTERS)) {
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a);
    }

    #[test]
    fn terms_are_multilinear_and_distinct(a in arb_poly(LETTERS), b in arb_poly(LETTERS)) {
        let product = a.mul(&b);
        let monomials: Vec<_> = product.monomials().collect();
        for w in monomials.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        prop_assert!(product.degree() <= LETTERS.len());
    }
}

#[test]
fn collapsing_and_annihilating() {
    let g = poly("pq+p+1");
    assert_eq!(g.mul(&g), g);
    assert!(g.add(&g).is_zero());
    assert_eq!(poly("p*p*q"), poly("pq"));
}
