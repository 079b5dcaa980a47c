//! Identity reports over the standard instance suite.

use mobiuslab::instances::{
    all_graphs, boolean_lattice, contraction_lattice, partition_lattice, subspace_lattice,
};
use mobiuslab::lattices::{
    cutset_mobius, dowling_wilson_check, modular_factorization, point_deletion,
    walker_complement_check, weisner_check, RankedLattice,
};
use num_bigint::BigInt;

fn suite() -> Vec<(String, RankedLattice)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((
            format!("B({n})"),
            boolean_lattice(n).unwrap().ranked().unwrap(),
        ));
    }
    for n in 1..=4 {
        out.push((
            format!("B_2({n})"),
            subspace_lattice(2, n).unwrap().ranked().unwrap(),
        ));
    }
    out.push((
        "B_3(2)".into(),
        subspace_lattice(3, 2).unwrap().ranked().unwrap(),
    ));
    for n in 1..=6 {
        out.push((
            format!("P({n})"),
            partition_lattice(n).unwrap().ranked().unwrap(),
        ));
    }
    out
}

fn graphic_suite() -> Vec<(String, RankedLattice)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            let l = contraction_lattice(&g).unwrap().ranked().unwrap();
            out.push((format!("L{:?}", (n, g.edges())), l));
        }
    }
    out
}

fn identities(name: &str, l: &RankedLattice) {
    for a in 0..l.len() {
        if a != l.zero() {
            assert!(
                weisner_check(l, a).unwrap().pass,
                "Weisner {name} {}",
                l.label(a)
            );
        }
        if a != l.zero() && a != l.one() {
            assert!(
                walker_complement_check(l, a).unwrap().pass,
                "Walker {name} {}",
                l.label(a)
            );
            if l.is_modular_element(a) {
                assert!(
                    modular_factorization(l, a).unwrap().pass,
                    "factor {name} {}",
                    l.label(a)
                );
            }
        }
    }
    if l.len() > 1 {
        let atoms = l.atoms();
        if atoms.len() <= 20 {
            let (sum, _) = cutset_mobius(l, &atoms).unwrap();
            assert_eq!(sum, l.mu01(), "cutset {name}");
        }
        let coatoms = l.coatoms();
        if coatoms.len() <= 20 {
            let (sum, _) = cutset_mobius(l, &coatoms).unwrap();
            assert_eq!(sum, l.mu01(), "coatom cutset {name}");
        }
        for p in l.atoms() {
            let (_, r) = point_deletion(l, p).unwrap();
            assert!(r.pass, "deletion {name} {}", l.label(p));
        }
    }
}

fn structure(name: &str, l: &RankedLattice) {
    assert!(l.is_geometric(), "{name}");
    let modular = l.is_modular_lattice();
    assert_eq!(
        modular,
        (0..l.len()).all(|a| l.is_modular_element(a)),
        "{name}"
    );
    assert_eq!(modular, l.hyperplanes_meet_lines(), "{name}");
    for a in 0..l.len() {
        for (b, m) in l.mobius_row(a) {
            let sign = if (l.rank(b) - l.rank(a)) % 2 == 0 {
                m.clone()
            } else {
                -m.clone()
            };
            assert!(
                sign >= BigInt::from(1),
                "{name}: sign of mu({}, {})",
                l.label(a),
                l.label(b)
            );
            if l.len() <= 60 {
                assert!(
                    l.interval_ranked(a, b).unwrap().is_geometric(),
                    "{name}: interval"
                );
            }
        }
    }
}

#[test]
fn standard_instances() {
    for (name, l) in suite() {
        structure(&name, &l);
        identities(&name, &l);
    }
}

#[test]
fn graphic_instances() {
    for (name, l) in graphic_suite() {
        assert!(l.is_geometric(), "{name}");
        assert!(l.mobius_signs_alternate(), "{name}");
        identities(&name, &l);
    }
}

#[test]
fn dowling_wilson_determinants() {
    for (name, l) in suite().into_iter().filter(|(_, l)| l.len() <= 128) {
        let r = dowling_wilson_check(&l).unwrap();
        assert!(r.pass, "{name}: {}", r.to_json());
    }
    let l = boolean_lattice(3).unwrap().ranked().unwrap();
    let r = dowling_wilson_check(&l).unwrap();
    // Π_p μ(p, 1) over B(3): eight values ±1 with four negative
    assert_eq!(r.lhs, serde_json::json!(1));
}
