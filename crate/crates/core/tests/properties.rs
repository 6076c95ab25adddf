//! Property tests for the exact scalar layer and the series kernel.

use griess_core::chars::QSeries;
use griess_core::cyc::Cyc;
use griess_core::rat::{rat, Rat};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

/// Cyclotomic numbers of small height over a handful of conductors.
fn small_cyc() -> impl Strategy<Value = Cyc> {
    let conductor = prop_oneof![Just(1u64), Just(2), Just(3), Just(4), Just(5), Just(6), Just(8)];
    conductor.prop_flat_map(|n| {
        let phi = griess_core::cyc::euler_phi(n);
        proptest::collection::vec(small_rat(), phi).prop_map(move |coeffs| {
            let mut acc = Cyc::zero();
            for (i, c) in coeffs.into_iter().enumerate() {
                acc = acc.add(&Cyc::root_of_unity(n, i as i64).scale(&c));
            }
            acc
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyc_field_axioms(a in small_cyc(), b in small_cyc(), c in small_cyc()) {
        // associativity and commutativity
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        // distributivity
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // inverses
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Cyc::one());
        }
    }

    #[test]
    fn cyc_conjugation_and_lift(a in small_cyc(), b in small_cyc()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        // conductor-lift round trip preserves equality
        let lifted = a.lift(a.conductor() * 3);
        prop_assert_eq!(&lifted, &a);
        prop_assert_eq!(lifted.lift(a.conductor() * 12), a.clone());
    }

    #[test]
    fn cyc_embedding_consistent_with_arithmetic(a in small_cyc(), b in small_cyc()) {
        // |embed(a*b) - embed(a) embed(b)| small relative to the magnitudes
        let lhs = a.mul(&b).to_complex();
        let rhs = a.to_complex() * b.to_complex();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        let lhs = a.add(&b).to_complex();
        let rhs = a.to_complex() + b.to_complex();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn series_ring_laws(
        xs in proptest::collection::vec((0i64..30, small_rat()), 0..10),
        ys in proptest::collection::vec((0i64..30, small_rat()), 0..10),
    ) {
        let order = rat(30, 1);
        let mut a = QSeries::<Rat>::zero(2, &order);
        for (e, c) in xs {
            a.add_term(e, c);
        }
        let mut b = QSeries::<Rat>::zero(3, &order);
        for (e, c) in ys {
            b.add_term(e, c);
        }
        // commutativity and identity
        prop_assert!(a.mul(&b).eq_to_common_order(&b.mul(&a)));
        let one = QSeries::<Rat>::one(1, &order);
        prop_assert!(a.mul(&one).eq_to_common_order(&a));
        // (a + b) * a = a*a + b*a
        let lhs = a.add(&b).mul(&a);
        let rhs = a.mul(&a).add(&b.mul(&a));
        prop_assert!(lhs.eq_to_common_order(&rhs));
        // division round trip when the divisor has a unit leading term
        let mut unit = QSeries::<Rat>::one(1, &order);
        unit.add_term(2, rat(-1, 1));
        unit.add_term(5, rat(1, 3));
        let q = a.mul(&unit).div(&unit).unwrap();
        prop_assert!(q.eq_to_common_order(&a));
    }
}
