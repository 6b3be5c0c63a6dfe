mod common;

use common::*;
use proptest::prelude::*;
use qpart_core::{RingSpec, TruncSeries};

proptest! {
    #[test]
    fn algebraic_laws(x in law_inputs()) {
        if let Err(msg) = check_laws(&x) {
            prop_assert!(false, "{}", msg);
        }
    }

    #[test]
    fn shift_roundtrip(f in ring().prop_flat_map(series_in), d in -20i64..20) {
        let back = f.shift(d).unwrap().shift(-d).unwrap();
        prop_assert_eq!(back.valuation(), f.valuation());
        prop_assert!(back.equal_up_to(&f, f.order()).unwrap());
    }

    #[test]
    fn reduction_commutes_with_mul(
        f in series_in(RingSpec::ExactInteger),
        g in series_in(RingSpec::ExactInteger),
        m in prop::sample::select(SMALL_PRIMES.to_vec()),
    ) {
        let lhs = f.mul(&g).unwrap().reduce_mod(m).unwrap();
        let rhs = f.reduce_mod(m).unwrap().mul(&g.reduce_mod(m).unwrap()).unwrap();
        prop_assert!(lhs.equal_up_to(&rhs, common_order(&lhs, &rhs)).unwrap());
    }

    #[test]
    fn substitution_is_a_ring_map(
        f in series_in(RingSpec::ExactInteger),
        g in series_in(RingSpec::ExactInteger),
        k in 1i64..6,
    ) {
        let lhs = f.mul(&g).unwrap().substitute_power(k).unwrap();
        let rhs = f.substitute_power(k).unwrap().mul(&g.substitute_power(k).unwrap()).unwrap();
        prop_assert!(lhs.equal_up_to(&rhs, common_order(&lhs, &rhs)).unwrap());
    }

    #[test]
    fn modular_residues_stay_canonical(x in law_inputs()) {
        if let Some(m) = x.f.ring().modulus() {
            let p = x.f.mul(&x.g).unwrap();
            prop_assert!(p.residues().unwrap().iter().all(|&c| c < m.get()));
            let q = x.unit.pow_int(x.a).unwrap();
            prop_assert!(q.residues().unwrap().iter().all(|&c| c < m.get()));
        }
    }

    #[test]
    fn components_partition_terms(f in ring().prop_flat_map(series_in), m in 1i64..7) {
        let mut total = TruncSeries::zero(f.ring(), f.valuation(), f.order()).unwrap();
        for j in 0..m {
            total = total.add(&f.component(m, j).unwrap()).unwrap();
        }
        prop_assert!(total.equal_up_to(&f, f.order()).unwrap());
    }
}
