//! Simplicial complexes, order complexes, monotone maps, retracts and
//! dismantling.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{check_guard, Error, Result};
use crate::matrix::int_to_json;
use crate::poset::Poset;
use crate::report::Report;

/// Largest poset whose order complex is built (up to `2^n` faces).
pub const ORDER_COMPLEX_LIMIT: u128 = 20;

/// A family of nonempty vertex sets closed under taking nonempty subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Closes `generators` under nonempty subsets. Faces are stored sorted,
    /// by size and then lexicographically.
    pub fn from_faces(vertices: Vec<String>, generators: &[Vec<usize>]) -> Result<Self> {
        let mut faces = BTreeSet::new();
        for g in generators {
            let mut g = g.clone();
            g.sort_unstable();
            g.dedup();
            if let Some(&v) = g.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::Precondition(format!("face uses unknown vertex {v}")));
            }
            check_guard("face size", g.len() as u128, ORDER_COMPLEX_LIMIT)?;
            for mask in 1u64..1 << g.len() {
                let f: Vec<usize> = (0..g.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| g[i])
                    .collect();
                faces.insert(f);
            }
        }
        Ok(Self::from_closed(vertices, faces.into_iter().collect()))
    }

    fn from_closed(vertices: Vec<String>, mut faces: Vec<Vec<usize>>) -> Self {
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex { vertices, faces }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// `f_k`, the number of faces of dimension `k` (size `k + 1`).
    pub fn level_numbers(&self) -> Vec<u64> {
        let mut f = Vec::new();
        for face in &self.faces {
            let k = face.len() - 1;
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += 1;
        }
        f
    }

    /// `Σ_k (−1)^k f_k`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.level_numbers()
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                if k % 2 == 0 {
                    BigInt::from(c)
                } else {
                    -BigInt::from(c)
                }
            })
            .sum()
    }

    /// Faces under inclusion. Labels are `{a,b,…}` in vertex labels.
    pub fn face_poset(&self) -> Result<Poset> {
        let index: std::collections::HashMap<&[usize], usize> = self
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut edges = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            if f.len() < 2 {
                continue;
            }
            for skip in 0..f.len() {
                let sub: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                edges.push((index[sub.as_slice()], i));
            }
        }
        let labels = self
            .faces
            .iter()
            .map(|f| face_label(&self.vertices, f))
            .collect();
        Poset::from_index_edges(labels, &edges)
    }
}

/// Every nonempty chain of `p`, each listed in increasing order.
pub fn chains(p: &Poset) -> Result<Vec<Vec<usize>>> {
    check_guard(
        "order complex vertices",
        p.len() as u128,
        ORDER_COMPLEX_LIMIT,
    )?;
    let mut out = Vec::new();
    fn extend(p: &Poset, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        let last = *cur.last().unwrap();
        for y in p.up_set(last).iter() {
            if y != last {
                cur.push(y);
                extend(p, cur, out);
                cur.pop();
            }
        }
    }
    for x in 0..p.len() {
        let mut cur = vec![x];
        extend(p, &mut cur, &mut out);
    }
    Ok(out)
}

/// `Ch(P)`: the simplicial complex of nonempty chains.
pub fn order_complex(p: &Poset) -> Result<SimplicialComplex> {
    let faces = chains(p)?
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    Ok(SimplicialComplex::from_closed(p.labels().to_vec(), faces))
}

pub fn euler_characteristic(s: &SimplicialComplex) -> BigInt {
    s.euler_characteristic()
}

pub fn level_numbers(s: &SimplicialComplex) -> Vec<u64> {
    s.level_numbers()
}

/// An element comparable with every element, if any.
pub fn is_cone(p: &Poset) -> Option<usize> {
    (0..p.len()).find(|&x| (0..p.len()).all(|y| p.comparable(x, y)))
}

/// Number of order-preserving maps from `C(m)` into `p`, read off as the
/// sum of the entries of `Z^m`.
pub fn multichain_count(p: &Poset, m: u32) -> Result<BigInt> {
    let z = p.zeta_matrix()?.pow(m);
    Ok((0..z.rows()).flat_map(|i| z.row(i).iter().cloned()).sum())
}

/// An order-preserving map between posets.
#[derive(Clone, Debug)]
pub struct MonotoneMap {
    source: Poset,
    target: Poset,
    map: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Poset, target: Poset, map: Vec<usize>) -> Result<MonotoneMap> {
        if map.len() != source.len() {
            return Err(Error::Precondition(
                "map length differs from the source".into(),
            ));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.len()) {
            return Err(Error::Precondition(format!(
                "image index {y} outside the target"
            )));
        }
        for x in 0..source.len() {
            for y in source.up_set(x).iter() {
                if !target.leq(map[x], map[y]) {
                    return Err(Error::Precondition(format!(
                        "map is not order-preserving: `{}` ≤ `{}` but images are not",
                        source.label(x),
                        source.label(y)
                    )));
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `f^{-1}(Q_{≤y})`.
    pub fn fibre(&self, y: usize) -> Vec<usize> {
        (0..self.source.len())
            .filter(|&x| self.target.leq(self.map[x], y))
            .collect()
    }
}

fn strict_up(p: &Poset, y: usize) -> Vec<usize> {
    p.up_set(y).iter().filter(|&z| z != y).collect()
}

/// `μ(Q) = μ(P) + Σ_{y∈Q} μ(Q_{y<}) μ(f^{−1}(Q_{≤y}))`.
pub fn verify_baclawski(f: &MonotoneMap) -> Report {
    let (p, q) = (f.source(), f.target());
    let mut rhs = p.mobius_number();
    let mut fibres = Vec::new();
    for y in 0..q.len() {
        let above = q.induced(&strict_up(q, y)).mobius_number();
        let fib = p.induced(&f.fibre(y)).mobius_number();
        rhs += &above * &fib;
        fibres.push(json!({
            "y": q.label(y),
            "mu_above": int_to_json(&above),
            "mu_fibre": int_to_json(&fib),
        }));
    }
    Report::equal(
        "mu(Q) = mu(P) + sum_y mu(Q_{y<}) mu(f^-1(Q_{<=y}))",
        &q.mobius_number(),
        &rhs,
    )
    .with_witness(Value::Array(fibres))
}

/// `μ(S) = μ(P) + Σ_{y∈S∖P} μ(S_{y<}) μ(P_{≤y})` for an ideal `P` of `S`.
pub fn verify_ideal_decomposition(s: &Poset, ideal: &[usize]) -> Result<Report> {
    let mut inside = vec![false; s.len()];
    for &x in ideal {
        if x >= s.len() {
            return Err(Error::Precondition(format!("index {x} outside the poset")));
        }
        inside[x] = true;
    }
    for x in 0..s.len() {
        if inside[x] {
            if let Some(y) = s.down_set(x).iter().find(|&y| !inside[y]) {
                return Err(Error::Precondition(format!(
                    "not an ideal: `{}` is below `{}`",
                    s.label(y),
                    s.label(x)
                )));
            }
        }
    }
    let members: Vec<usize> = (0..s.len()).filter(|&x| inside[x]).collect();
    let mut rhs = s.induced(&members).mobius_number();
    for y in (0..s.len()).filter(|&y| !inside[y]) {
        let above = s.induced(&strict_up(s, y)).mobius_number();
        let below: Vec<usize> = members.iter().copied().filter(|&x| s.leq(x, y)).collect();
        rhs += above * s.induced(&below).mobius_number();
    }
    Ok(Report::equal(
        "mu(S) = mu(P) + sum_{y in S\\P} mu(S_{y<}) mu(P_{<=y})",
        &s.mobius_number(),
        &rhs,
    ))
}

/// Checks that `f: S → S` is an order-preserving idempotent map that is
/// decreasing or increasing, and then that `μ(f(S)) = μ(S)`.
///
/// A map failing the retraction conditions gives a failed report naming
/// the first violation.
pub fn retract_check(s: &Poset, f: &[usize]) -> Result<Report> {
    let n = s.len();
    if f.len() != n || f.iter().any(|&y| y >= n) {
        return Err(Error::Precondition("map must send S into S".into()));
    }
    let image: Vec<usize> = {
        let set: BTreeSet<usize> = f.iter().copied().collect();
        set.into_iter().collect()
    };
    let lhs = s.induced(&image).mobius_number();
    let rhs = s.mobius_number();
    let mut report = Report::equal("mu(f(S)) = mu(S)", &lhs, &rhs)
        .with_witness(json!({ "image_size": image.len() }));
    let violation = (0..n)
        .find_map(|x| {
            s.up_set(x)
                .iter()
                .find(|&y| !s.leq(f[x], f[y]))
                .map(|y| json!({ "not_order_preserving": [s.label(x), s.label(y)] }))
        })
        .or_else(|| {
            (0..n)
                .find(|&x| f[f[x]] != f[x])
                .map(|x| json!({ "not_idempotent": s.label(x) }))
        })
        .or_else(|| {
            let decreasing = (0..n).all(|x| s.leq(f[x], x));
            let increasing = (0..n).all(|x| s.leq(x, f[x]));
            (!decreasing && !increasing)
                .then(|| json!({ "neither_decreasing_nor_increasing": true }))
        });
    if let Some(v) = violation {
        report = report.fail(v);
    }
    Ok(report)
}

/// The map `C ↦ max C` from `Ch(P)`, ordered by inclusion, onto `P`.
///
/// Its fibres `max^{-1}(P_{≤y})` are the chains of `P_{≤y}`, each a cone
/// on `y`, so every fibre has Möbius number 0.
pub fn chain_max_map(p: &Poset) -> Result<MonotoneMap> {
    let ch = order_complex(p)?;
    let s = ch.face_poset()?;
    let mut map = vec![0usize; s.len()];
    for face in ch.faces() {
        // chain members are increasing in the linear extension
        map[s.index_of(&face_label(ch.vertices(), face))?] = *face.last().unwrap();
    }
    MonotoneMap::new(s, p.clone(), map)
}

fn face_label(vertices: &[String], face: &[usize]) -> String {
    let names: Vec<&str> = face.iter().map(|&v| vertices[v].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// One step of a dismantling: `deleted` had a unique lower (or upper)
/// cover `onto`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub deleted: String,
    pub onto: String,
}

#[derive(Clone, Debug)]
pub struct Dismantling {
    pub deletions: Vec<Deletion>,
    pub core: Poset,
    pub dismantlable: bool,
}

/// Greedily deletes elements with a unique lower cover or a unique upper
/// cover, lowest index first, until none is left.
pub fn dismantle(p: &Poset) -> Dismantling {
    let mut cur = p.clone();
    let mut deletions = Vec::new();
    loop {
        let step = (0..cur.len()).find_map(|x| {
            if cur.lower_covers(x).len() == 1 {
                Some((x, cur.lower_covers(x)[0]))
            } else if cur.upper_covers(x).len() == 1 {
                Some((x, cur.upper_covers(x)[0]))
            } else {
                None
            }
        });
        let Some((x, onto)) = step else { break };
        deletions.push(Deletion {
            deleted: cur.label(x).to_string(),
            onto: cur.label(onto).to_string(),
        });
        let keep: Vec<usize> = (0..cur.len()).filter(|&y| y != x).collect();
        cur = cur.induced(&keep);
    }
    let dismantlable = cur.len() == 1;
    Dismantling {
        deletions,
        core: cur,
        dismantlable,
    }
}

/// Dismantles `p` and, when it reduces to a point, checks `μ(P) = 0`.
pub fn dismantle_report(p: &Poset) -> Report {
    let d = dismantle(p);
    let mu = p.mobius_number();
    let pass = !d.dismantlable || mu.is_zero();
    let steps: Vec<Value> = d
        .deletions
        .iter()
        .map(|s| json!([s.deleted, s.onto]))
        .collect();
    Report::new(
        "dismantlable => mu(P) = 0",
        json!({ "dismantlable": d.dismantlable, "core_size": d.core.len() }),
        int_to_json(&mu),
        pass,
    )
    .with_witness(Value::Array(steps))
}

/// `χ(Ch(P)) = 1 + μ(P)`.
pub fn euler_mobius_report(p: &Poset) -> Result<Report> {
    let chi = order_complex(p)?.euler_characteristic();
    Ok(Report::equal(
        "chi(Ch(P)) = 1 + mu(P)",
        &chi,
        &(BigInt::one() + p.mobius_number()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{boolean_lattice, chain};

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn small_order_complexes() {
        let a = Poset::antichain(&["a", "b"]).unwrap();
        assert_eq!(order_complex(&a).unwrap().level_numbers(), vec![2]);
        let c2 = order_complex(&chain(2)).unwrap();
        assert_eq!(c2.faces().len(), 7);
        assert_eq!(c2.level_numbers(), vec![3, 3, 1]);
        let b3 = boolean_lattice(3).unwrap();
        let proper = b3.induced(&b3.proper_part());
        assert_eq!(order_complex(&proper).unwrap().level_numbers(), vec![6, 6]);
        assert!(is_cone(&proper).is_none());
        assert_eq!(is_cone(&b3), Some(0));
        assert!(is_cone(&a).is_none());
        let empty = SimplicialComplex::from_faces(vec![], &[]).unwrap();
        assert!(empty.level_numbers().is_empty());
    }

    #[test]
    fn euler_values() {
        let v = SimplicialComplex::from_faces(names(1), &[vec![0]]).unwrap();
        assert_eq!(v.euler_characteristic(), 1.into());
        let mut facets = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let oct = SimplicialComplex::from_faces(names(6), &facets).unwrap();
        assert_eq!(oct.level_numbers(), vec![6, 12, 8]);
        assert_eq!(oct.euler_characteristic(), 2.into());
    }

    #[test]
    fn retractions_and_chain_maxima() {
        let p = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let m = chain_max_map(&p).unwrap();
        assert!(verify_baclawski(&m).pass);
        assert!((0..p.len()).all(|y| m.source().induced(&m.fibre(y)).mobius_number().is_zero()));
        assert_eq!(m.source().mobius_number(), p.mobius_number());
        // points below, on C(2) without its zero
        let c2 = chain(2);
        let s = c2.induced(&[1, 2]);
        assert!(retract_check(&s, &[0, 0]).unwrap().pass);
        let id: Vec<usize> = (0..p.len()).collect();
        assert!(retract_check(&p, &id).unwrap().pass);
        let not_idem = vec![1, 2, 2];
        let c = chain(2);
        assert!(!retract_check(&c, &not_idem).unwrap().pass);
    }

    #[test]
    fn fence_dismantles() {
        let fence =
            Poset::from_covers(&["a", "b", "c", "d"], &[("a", "b"), ("c", "b"), ("c", "d")])
                .unwrap();
        let d = dismantle(&fence);
        assert!(d.dismantlable);
        assert_eq!(d.deletions.len(), 3);
        assert!(dismantle_report(&fence).pass);
        let a = Poset::antichain(&["x", "y"]).unwrap();
        let d = dismantle(&a);
        assert!(!d.dismantlable);
        assert_eq!(d.core.len(), 2);
    }

    #[test]
    fn baclawski_examples() {
        let b3 = boolean_lattice(3).unwrap();
        let c3 = chain(3);
        let card: Vec<usize> = (0..b3.len()).map(|i| b3.label(i).len()).collect();
        let f = MonotoneMap::new(b3.poset().clone(), c3, card).unwrap();
        assert!(verify_baclawski(&f).pass);
        let p = Poset::antichain(&["a", "b"]).unwrap();
        let one = chain(0);
        let f = MonotoneMap::new(p.clone(), one, vec![0, 0]).unwrap();
        assert!(verify_baclawski(&f).pass);
        let id = MonotoneMap::new(p.clone(), p.clone(), vec![0, 1]).unwrap();
        assert!(verify_baclawski(&id).pass);
    }

    #[test]
    fn ideal_decomposition_examples() {
        let b2 = boolean_lattice(2).unwrap();
        let ideal = vec![b2.index_of("").unwrap(), b2.index_of("1").unwrap()];
        assert!(verify_ideal_decomposition(&b2, &ideal).unwrap().pass);
        assert!(verify_ideal_decomposition(&b2, &[]).unwrap().pass);
        let all: Vec<usize> = (0..4).collect();
        assert!(verify_ideal_decomposition(&b2, &all).unwrap().pass);
        assert!(verify_ideal_decomposition(&b2, &[3]).is_err());
    }

    #[test]
    fn multichains() {
        assert_eq!(multichain_count(&chain(1), 1).unwrap(), 3.into());
        assert_eq!(multichain_count(&chain(1), 2).unwrap(), 4.into());
    }
}
