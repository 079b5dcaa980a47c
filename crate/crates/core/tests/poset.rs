use mobiuslab::instances::{boolean_lattice, chain, random_poset};
use mobiuslab::oracle;
use mobiuslab::Poset;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max, 0.05f64..0.9, any::<u64>()).prop_map(|(n, d, s)| random_poset(n, d, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mobius_inverts_zeta(p in poset(12)) {
        let z = p.zeta_matrix().unwrap();
        let m = p.mobius_matrix().unwrap();
        prop_assert!(m.mul(&z).is_identity());
        prop_assert!(z.is_upper_unitriangular() && m.is_upper_unitriangular());
        prop_assert_eq!(z.determinant(), BigInt::from(1));
        prop_assert_eq!(m.determinant(), BigInt::from(1));
        prop_assert_eq!(m, oracle::mobius_by_inverse(&p));
    }

    #[test]
    fn chain_sums_and_duality(p in poset(10)) {
        let d = p.dual();
        for a in 0..p.len() {
            for b in 0..p.len() {
                let da = d.index_of(p.label(a)).unwrap();
                let db = d.index_of(p.label(b)).unwrap();
                prop_assert_eq!(d.mu(db, da), p.mu(a, b));
                if p.leq(a, b) {
                    prop_assert_eq!(p.mobius_by_chains(a, b).unwrap(), p.mu(a, b));
                }
            }
        }
    }

    #[test]
    fn product_multiplies(p in poset(5), q in poset(5)) {
        let pq = p.product(&q);
        for x in 0..p.len() {
            for x2 in 0..p.len() {
                for y in 0..q.len() {
                    for y2 in 0..q.len() {
                        let i = pq.index_of(&format!("({},{})", p.label(x), q.label(y))).unwrap();
                        let j = pq.index_of(&format!("({},{})", p.label(x2), q.label(y2))).unwrap();
                        prop_assert_eq!(pq.mu(i, j), p.mu(x, x2) * q.mu(y, y2));
                    }
                }
            }
        }
    }

    #[test]
    fn strict_zeta_powers_count_chains(p in poset(10), m in 1u32..=4) {
        let y = p.strict_zeta_power(m).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                let brute = oracle::chains_of_length(&p, i, j, m as usize);
                prop_assert_eq!(y.get(i, j), &BigInt::from(brute));
            }
        }
    }

    #[test]
    fn mobius_number_by_chain_enumeration(p in poset(9)) {
        prop_assert_eq!(p.mobius_number(), oracle::mobius_number_by_chains(&p));
    }
}

#[test]
fn small_known_values() {
    let c = chain(3);
    assert_eq!(c.mobius("0", "1").unwrap(), BigInt::from(-1));
    assert_eq!(c.mobius("0", "2").unwrap(), BigInt::from(0));
    let b3 = boolean_lattice(3).unwrap();
    assert_eq!(b3.mobius("", "123").unwrap(), BigInt::from(-1));
    assert_eq!(b3.mobius("1", "123").unwrap(), BigInt::from(1));
    // chains from 0 to 1 in B(3) by length: 1 of length 1, 6 of length 2, 6 of length 3
    let counts = b3.chain_counts(0, 7).unwrap();
    assert_eq!(counts, [0, 1, 6, 6].map(BigInt::from).to_vec());
    assert_eq!(b3.mobius("12", "3").unwrap(), BigInt::from(0));
    assert!(b3.mobius("12", "9").is_err());
    assert!(b3
        .mobius_by_chains(b3.index_of("12").unwrap(), b3.index_of("3").unwrap())
        .is_err());
    let d12 = mobiuslab::instances::divisor_lattice(12).unwrap();
    assert_eq!(d12.mobius("1", "12").unwrap(), BigInt::from(0));
}
