//! Property tests for the series ring: exact axioms, analytic inverses,
//! and truncation exactness.

use calabi::{int, rat, BiSeries, Jet, MultiIndex, Rational};
use proptest::prelude::*;

const VARS: usize = 2;
const CUTOFF: u32 = 3;

/// Random sparse series: a handful of in-box terms with small coefficients.
fn arb_series() -> impl Strategy<Value = BiSeries> {
    prop::collection::vec(
        (0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2, -6i64..=6, 1i64..=4),
        0..6,
    )
    .prop_map(|raw| {
        BiSeries::from_terms(
            VARS,
            CUTOFF,
            raw.into_iter().filter_map(|(a1, a2, b1, b2, num, den)| {
                let alpha = MultiIndex::new(vec![a1, a2]);
                let beta = MultiIndex::new(vec![b1, b2]);
                if alpha.degree() > CUTOFF || beta.degree() > CUTOFF {
                    return None;
                }
                Some((alpha, beta, rat(num, den)))
            }),
        )
        .unwrap()
    })
}

/// Same, but with zero constant term (admissible for exp).
fn arb_nilpotent() -> impl Strategy<Value = BiSeries> {
    arb_series().prop_map(|s| {
        s.sub(&BiSeries::constant(VARS, CUTOFF, s.constant_term()))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes_and_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn multiplication_ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        // distributivity
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn additive_and_multiplicative_identities(a in arb_series()) {
        let zero = BiSeries::zero(VARS, CUTOFF);
        let one = BiSeries::one(VARS, CUTOFF);
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert_eq!(a.sub(&a).unwrap(), zero);
    }

    #[test]
    fn log_inverts_exp(s in arb_nilpotent()) {
        let e = s.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), s);
    }

    #[test]
    fn exp_inverts_log(u in arb_nilpotent()) {
        let one_plus = BiSeries::one(VARS, CUTOFF).add(&u).unwrap();
        let l = one_plus.log().unwrap();
        prop_assert_eq!(l.exp().unwrap(), one_plus);
    }

    #[test]
    fn reciprocal_is_exact(u in arb_nilpotent()) {
        let s = BiSeries::one(VARS, CUTOFF).add(&u).unwrap();
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(r.mul(&s).unwrap(), BiSeries::one(VARS, CUTOFF));
    }

    #[test]
    fn exp_splits_sums(a in arb_nilpotent(), b in arb_nilpotent()) {
        let sum = a.add(&b).unwrap();
        prop_assert_eq!(
            sum.exp().unwrap(),
            a.exp().unwrap().mul(&b.exp().unwrap()).unwrap()
        );
    }

    #[test]
    fn truncation_commutes_with_ring_ops(a in arb_series(), b in arb_series()) {
        let narrow = 2u32;
        let (ta, tb) = (a.truncate(narrow).unwrap(), b.truncate(narrow).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().truncate(narrow).unwrap(),
            ta.mul(&tb).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().truncate(narrow).unwrap(),
            ta.add(&tb).unwrap()
        );
    }

    #[test]
    fn truncation_commutes_with_exp(s in arb_nilpotent()) {
        let narrow = 2u32;
        prop_assert_eq!(
            s.exp().unwrap().truncate(narrow).unwrap(),
            s.truncate(narrow).unwrap().exp().unwrap()
        );
    }

    #[test]
    fn scalar_mul_distributes(a in arb_series(), num in -5i64..=5, den in 1i64..=4) {
        let c = rat(num, den);
        let doubled = a.scalar_mul(&c).add(&a.scalar_mul(&c)).unwrap();
        let two_c: Rational = c.clone() + c;
        prop_assert_eq!(doubled, a.scalar_mul(&two_c));
    }
}

#[test]
fn jet_composition_against_power_expansion() {
    // compose f(x) = x^2/2 - x^3/3 (as a jet at 1) with 1 + u and compare to
    // directly building u^2/2 - u^3/3
    let cutoff = 3u32;
    let mut taylor = vec![int(0); 2 * cutoff as usize + 1];
    taylor[2] = rat(1, 2);
    taylor[3] = rat(-1, 3);
    let jet = Jet::from_taylor(taylor);
    let u = BiSeries::monomial(
        1,
        cutoff,
        MultiIndex::unit(1, 0),
        MultiIndex::unit(1, 0),
        int(1),
    )
    .unwrap();
    let g = BiSeries::one(1, cutoff).add(&u).unwrap();
    let composed = calabi::jet_compose(&jet, &g).unwrap();
    let expect = u
        .mul(&u)
        .unwrap()
        .scalar_mul(&rat(1, 2))
        .add(&u.mul(&u).unwrap().mul(&u).unwrap().scalar_mul(&rat(-1, 3)))
        .unwrap();
    assert_eq!(composed, expect);
}
