use mobiuslab::instances::{
    boolean_lattice, chain, contraction_lattice, divisor_lattice, partition_lattice,
    subspace_lattice, Graph,
};
use mobiuslab::lattices::{
    as_lattice, basterfield_kelly_check, cutset_mobius, dowling_complement_check,
    dowling_wilson_check, kung_check, modular_factorization, point_deletion,
    walker_complement_check, weisner_check, Lattice,
};
use mobiuslab::{Error, Poset};
use num_bigint::BigInt;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn bowtie_is_rejected_with_witness() {
    let p = Poset::from_covers(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap();
    match as_lattice(&p.adjoin_bounds()) {
        Err(Error::NotALattice(x, y, _)) => assert!([x, y]
            .iter()
            .all(|s| ["a", "b", "c", "d"].contains(&s.as_str()))),
        other => panic!("expected a witness, got {other:?}"),
    }
}

#[test]
fn geometric_predicates() {
    for l in [
        boolean_lattice(3).unwrap(),
        subspace_lattice(2, 3).unwrap(),
        partition_lattice(4).unwrap(),
    ] {
        assert!(l.ranked().unwrap().is_geometric());
    }
    let d12 = divisor_lattice(12).unwrap().ranked().unwrap();
    assert!(d12.is_semimodular() && !d12.is_geometric());
    let c2 = Lattice::new(chain(2)).unwrap().ranked().unwrap();
    assert!(c2.is_semimodular() && !c2.is_geometric());
}

#[test]
fn modular_elements() {
    let p4 = partition_lattice(4).unwrap().ranked().unwrap();
    let h = p4.index_of("123|4").unwrap();
    assert!(p4.is_modular_element(h));
    assert!(p4.atoms().iter().all(|&a| p4.is_modular_element(a)));
    let b = subspace_lattice(2, 3).unwrap().ranked().unwrap();
    assert!((0..b.len()).all(|a| b.is_modular_element(a)));
}

#[test]
fn weisner_and_cutsets() {
    let b3 = boolean_lattice(3).unwrap();
    let a = b3.index_of("1").unwrap();
    let r = weisner_check(&b3, a).unwrap();
    assert!(r.pass);
    assert_eq!(r.rhs, serde_json::json!(-1));
    let b22 = subspace_lattice(2, 2).unwrap();
    assert!(weisner_check(&b22, b22.atoms()[0]).unwrap().pass);
    assert_eq!(b22.mu01(), big(2));
    assert!(weisner_check(&b3, 0).is_err());

    let b2 = boolean_lattice(2).unwrap();
    let (v, a) = cutset_mobius(&b2, &b2.atoms()).unwrap();
    assert_eq!((v, a[2]), (big(1), 1));
    let b23 = subspace_lattice(2, 3).unwrap();
    assert_eq!(cutset_mobius(&b23, &b23.atoms()).unwrap().0, big(-8));
    let c1 = Lattice::new(chain(1)).unwrap();
    let (v, a) = cutset_mobius(&c1, &[1]).unwrap();
    assert_eq!((v, a[1]), (big(-1), 1));
    assert!(cutset_mobius(&b3, &[b3.index_of("1").unwrap()]).is_err());
}

#[test]
fn walker() {
    for l in [
        boolean_lattice(4).unwrap(),
        subspace_lattice(2, 3).unwrap(),
        partition_lattice(4).unwrap(),
    ] {
        for a in l.proper_part() {
            assert!(walker_complement_check(&l, a).unwrap().pass);
        }
    }
    let d12 = divisor_lattice(12).unwrap();
    let two = d12.index_of("2").unwrap();
    assert!(d12.complements(two).is_empty());
    assert!(walker_complement_check(&d12, two).unwrap().pass);
}

#[test]
fn modular_factorization_values() {
    let b = subspace_lattice(2, 3).unwrap().ranked().unwrap();
    let h = b.coatoms()[0];
    let r = modular_factorization(&b, h).unwrap();
    assert!(r.pass);
    assert_eq!(r.rhs, serde_json::json!(-8));
    let p4 = partition_lattice(4).unwrap().ranked().unwrap();
    let r = modular_factorization(&p4, p4.index_of("123|4").unwrap()).unwrap();
    assert!(r.pass);
    assert_eq!(r.rhs, serde_json::json!(-6));
    let k4e = contraction_lattice(&Graph::complete_minus_edge(4))
        .unwrap()
        .ranked()
        .unwrap();
    assert!(k4e.mobius_signs_alternate());
}

#[test]
fn whitney_and_dowling() {
    let b2 = boolean_lattice(2).unwrap().ranked().unwrap();
    let r = dowling_wilson_check(&b2).unwrap();
    assert!(r.pass, "{}", r.to_json());
    assert_eq!(r.lhs, serde_json::json!(1));
    let p5 = partition_lattice(5).unwrap().ranked().unwrap();
    assert!(dowling_wilson_check(&p5).unwrap().pass);
    let r = dowling_complement_check(&b2).unwrap();
    assert!(r.pass, "{}", r.to_json());
    assert!(
        dowling_complement_check(&boolean_lattice(3).unwrap())
            .unwrap()
            .pass
    );
    assert!(dowling_complement_check(&divisor_lattice(12).unwrap()).is_err());
}

#[test]
fn basterfield_kelly() {
    let b = subspace_lattice(2, 3).unwrap().ranked().unwrap();
    let r = basterfield_kelly_check(&b).unwrap();
    assert!(r.pass, "{}", r.to_json());
    let p4 = partition_lattice(4).unwrap().ranked().unwrap();
    let r = basterfield_kelly_check(&p4).unwrap();
    assert!(r.pass, "{}", r.to_json());
    assert!(!p4.is_modular_lattice());
    assert!(!p4.hyperplanes_meet_lines());
}

#[test]
fn kung() {
    let b3 = boolean_lattice(3).unwrap().ranked().unwrap();
    let r = kung_check(&b3, 1).unwrap();
    assert!(r.pass, "{}", r.to_json());
    let p4 = partition_lattice(4).unwrap().ranked().unwrap();
    assert!(kung_check(&p4, 1).unwrap().pass);
    let b23 = subspace_lattice(2, 3).unwrap().ranked().unwrap();
    let r = kung_check(&b23, 1).unwrap();
    assert!(r.pass, "{}", r.to_json());
    assert_eq!(b23.join_irreducibles().len(), 8);
    assert_eq!(b23.meet_irreducibles().len(), 8);
}

#[test]
fn deletion() {
    let b3 = boolean_lattice(3).unwrap();
    for p in b3.atoms() {
        let (del, r) = point_deletion(&b3, p).unwrap();
        assert!(r.pass, "{}", r.to_json());
        assert!(del.is_isomorphic(&boolean_lattice(2).unwrap()));
    }
    let c1 = Lattice::new(chain(1)).unwrap();
    let (_, r) = point_deletion(&c1, 1).unwrap();
    assert!(r.pass && r.identity.contains("co-loop"));
    let k3 = contraction_lattice(&Graph::complete(3)).unwrap();
    let e = k3.index_of("01|2").unwrap();
    let (del, r) = point_deletion(&k3, e).unwrap();
    assert!(r.pass);
    assert!(del.is_isomorphic(&contraction_lattice(&Graph::path(3)).unwrap()));
    assert!(point_deletion(&b3, b3.one()).is_err());
}
