use mobiuslab::complex::{
    chain_max_map, dismantle, dismantle_report, euler_mobius_report, is_cone, multichain_count,
    order_complex, retract_check, verify_baclawski, verify_ideal_decomposition,
};
use mobiuslab::instances::{boolean_lattice, chain, random_poset};
use mobiuslab::oracle;
use mobiuslab::Poset;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (0..=max, 0.05f64..0.9, any::<u64>()).prop_map(|(n, d, s)| random_poset(n, d, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_characteristic(p in poset(10)) {
        prop_assert!(euler_mobius_report(&p).unwrap().pass);
        let counts = oracle::chain_size_counts(&p);
        let s = order_complex(&p).unwrap();
        let levels = s.level_numbers();
        for (k, &c) in counts.iter().enumerate().skip(1) {
            prop_assert_eq!(levels.get(k - 1).copied().unwrap_or(0), c);
        }
    }

    #[test]
    fn face_poset_has_same_mobius_number(p in poset(7)) {
        let faces = order_complex(&p).unwrap().face_poset().unwrap();
        prop_assert_eq!(faces.mobius_number(), p.mobius_number());
    }

    #[test]
    fn dismantlable_means_zero(p in poset(10)) {
        prop_assert!(dismantle_report(&p).pass);
        if !p.is_empty() && dismantle(&p).dismantlable {
            prop_assert_eq!(p.mobius_number(), BigInt::from(0));
        }
        if is_cone(&p).is_some() {
            prop_assert_eq!(p.mobius_number(), BigInt::from(0));
        }
    }

    #[test]
    fn multichains_count_monotone_maps(p in poset(7), m in 1u32..=4) {
        prop_assert_eq!(
            multichain_count(&p, m).unwrap(),
            BigInt::from(oracle::monotone_maps_from_chain(&p, m as usize))
        );
    }

    #[test]
    fn ideals(p in poset(8), picks in proptest::collection::vec(any::<bool>(), 8)) {
        let ideal: Vec<usize> = (0..p.len())
            .filter(|&x| (0..p.len()).any(|y| picks[y] && p.leq(x, y)))
            .collect();
        prop_assert!(verify_ideal_decomposition(&p, &ideal).unwrap().pass);
    }
}

#[test]
fn retracts() {
    // B(2) pushed down onto {0, a}: x ↦ x ∧ a is a decreasing retraction
    let b2 = boolean_lattice(2).unwrap();
    let a = b2.index_of("1").unwrap();
    let f: Vec<usize> = (0..b2.len()).map(|x| b2.meet(x, a)).collect();
    assert!(retract_check(&b2, &f).unwrap().pass);
    // a map that is not idempotent is rejected
    let c = chain(2);
    assert!(!retract_check(&c, &[0, 0, 1]).unwrap().pass);
}

#[test]
fn chain_maximum_fibres() {
    for n in 1..=5 {
        for s in 0..10 {
            let p = random_poset(n, 0.4, s);
            let m = chain_max_map(&p).unwrap();
            let r = verify_baclawski(&m);
            assert!(r.pass, "{}", r.to_json());
        }
    }
    let b3 = boolean_lattice(3).unwrap();
    let proper = b3.induced(&b3.proper_part());
    assert_eq!(oracle::chain_size_counts(&proper).iter().sum::<u64>(), 12);
    assert_eq!(proper.mobius_number(), BigInt::from(-1));
}
