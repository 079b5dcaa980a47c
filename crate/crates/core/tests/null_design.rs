use mobiuslab::instances::{boolean_lattice, partition_lattice, subspace_lattice};
use mobiuslab::null_design::{
    boolean_bound, partition_claim, restrict_to_interval, strength, subspace_bound,
    support_lower_bound, upper_mobius_mass, verify_support_theorem, MeetSemilattice,
};
use mobiuslab::Poset;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// The intersection closure of some subsets of `{0..6}`, plus the empty set.
fn meet_semilattice(gens: &[u8]) -> MeetSemilattice {
    let mut sets: Vec<u8> = vec![0];
    sets.extend_from_slice(gens);
    loop {
        let mut grew = false;
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                let m = sets[i] & sets[j];
                if !sets.contains(&m) {
                    sets.push(m);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    sets.sort_unstable();
    sets.dedup();
    let labels: Vec<String> = sets.iter().map(|s| format!("{s:06b}")).collect();
    let rel: Vec<Vec<bool>> = sets
        .iter()
        .map(|&a| sets.iter().map(|&b| a & b == a).collect())
        .collect();
    MeetSemilattice::new(Poset::from_relation(&labels, &rel).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn restriction_routes_agree(
        gens in proptest::collection::vec(1u8..64, 1..6),
        vals in proptest::collection::vec(-3i64..=3, 64),
        pick in any::<usize>(),
    ) {
        let p = meet_semilattice(&gens);
        prop_assume!(p.len() <= 12);
        let f: Vec<BigInt> = (0..p.len()).map(|i| BigInt::from(vals[i])).collect();
        let b = pick % p.len();
        let r = restrict_to_interval(&p, &f, b).unwrap();
        prop_assert!(r.agree());
    }
}

fn up_sums_vanish_low(f: &[i8; 16]) -> bool {
    // strength >= 1 on B(4): sums over supersets of ∅ and of each singleton vanish
    (0..5).all(|k| {
        let a: usize = if k == 0 { 0 } else { 1 << (k - 1) };
        (0..16)
            .filter(|&x| x & a == a)
            .map(|x| f[x] as i64)
            .sum::<i64>()
            == 0
    })
}

#[test]
fn minimum_support_on_b4_by_exhaustive_search() {
    // every (0,±1) function on B(4) with support at most 4
    let mut found = [0usize; 5];
    let mut f = [0i8; 16];
    fn go(start: usize, left: usize, f: &mut [i8; 16], found: &mut [usize; 5], size: usize) {
        if size > 0 && up_sums_vanish_low(f) {
            found[size] += 1;
        }
        if left == 0 {
            return;
        }
        for x in start..16 {
            for v in [1, -1] {
                f[x] = v;
                go(x + 1, left - 1, f, found, size + 1);
            }
            f[x] = 0;
        }
    }
    go(0, 4, &mut f, &mut found, 0);
    assert_eq!(&found[..4], &[0, 0, 0, 0]);
    assert!(found[4] > 0);
    assert_eq!(boolean_bound(1), BigInt::from(4));
}

#[test]
fn support_theorem_on_boolean() {
    let l = boolean_lattice(3).unwrap();
    let p = MeetSemilattice::from_lattice(&l);
    // signed indicator of the square below "12"
    let mut f = vec![BigInt::zero(); l.len()];
    for (s, v) in [("", 1), ("1", -1), ("2", -1), ("12", 1)] {
        f[l.index_of(s).unwrap()] = BigInt::from(v);
    }
    assert_eq!(strength(&p, &f).unwrap(), 1);
    let r = verify_support_theorem(&p, &f).unwrap();
    assert!(r.pass);
    assert_eq!(r.witnesses[0]["equality"], true);
    // scaling keeps equality but leaves {0, ±1}
    let g: Vec<BigInt> = f.iter().map(|x| x * 2).collect();
    let r = verify_support_theorem(&p, &g).unwrap();
    assert!(r.pass);
    assert_eq!(r.witnesses[0]["values_are_0_pm_1"], false);
}

#[test]
fn closed_forms_against_direct_sums() {
    for n in 1..=8 {
        let l = boolean_lattice(n).unwrap();
        let h = l.heights();
        for b in 1..l.len() {
            assert_eq!(support_lower_bound(&l, b), boolean_bound(h[b] as u32 - 1));
        }
    }
    for (q, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2)] {
        let l = subspace_lattice(q, n).unwrap();
        let h = l.heights();
        for b in 1..l.len() {
            assert_eq!(
                support_lower_bound(&l, b),
                subspace_bound(q as u32, h[b] as u32 - 1)
            );
        }
    }
}

#[test]
fn partition_sums() {
    // the lower sum at the top of P(4) (k = 3) is 26, not 1! = 1; the upper sum at 0 is 4! = 24
    let l = partition_lattice(4).unwrap();
    assert_eq!(support_lower_bound(&l, l.one()), BigInt::from(26));
    assert_eq!(partition_claim(4, 3), BigInt::from(1));
    assert_eq!(upper_mobius_mass(&l, l.zero()), BigInt::from(24));
    for n in 1..=7 {
        let l = partition_lattice(n).unwrap();
        for b in 0..l.len() {
            let k = n - l.label(b).split('|').count();
            assert_eq!(
                upper_mobius_mass(&l, b),
                partition_claim(n, k),
                "P({n}) at {}",
                l.label(b)
            );
        }
    }
}
