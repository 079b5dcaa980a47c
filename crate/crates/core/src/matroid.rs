//! The matroid on the atoms of a geometric lattice: independent sets,
//! circuits, broken circuits, and the chromatic and characteristic
//! polynomials.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{check_guard, Error, Result};
use crate::gf::Field;
use crate::instances::{contraction_lattice, Graph};
use crate::lattices::{Lattice, RankedLattice};
use crate::matrix::int_to_json;
use crate::poset::Poset;
use crate::report::Report;

/// Most atoms an [`AtomMatroid`] will tabulate (subsets are `u32` masks).
pub const ATOM_LIMIT: u128 = 24;

/// Largest atom count for the exhaustive rank-axiom check.
pub const AXIOM_LIMIT: u128 = 12;

/// Rank function `r(T) = r(∨T)` on subsets of the atoms, tabulated by mask.
#[derive(Clone, Debug)]
pub struct AtomMatroid {
    atoms: Vec<String>,
    rank: Vec<u8>,
}

impl AtomMatroid {
    pub fn new(l: &RankedLattice) -> Result<AtomMatroid> {
        let atoms = l.atoms();
        check_guard("matroid atoms", atoms.len() as u128, ATOM_LIMIT)?;
        let m = atoms.len();
        let mut join = vec![l.zero() as u32; 1 << m];
        let mut rank = vec![0u8; 1 << m];
        for mask in 1usize..1 << m {
            let low = mask.trailing_zeros() as usize;
            let j = l.join(join[mask & (mask - 1)] as usize, atoms[low]);
            join[mask] = j as u32;
            rank[mask] = l.rank(j) as u8;
        }
        Ok(AtomMatroid {
            atoms: atoms.iter().map(|&a| l.label(a).to_string()).collect(),
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom_labels(&self) -> &[String] {
        &self.atoms
    }

    pub fn rank_of(&self, mask: u32) -> usize {
        self.rank[mask as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank_of(((1u64 << self.len()) - 1) as u32)
    }

    pub fn is_independent(&self, mask: u32) -> bool {
        self.rank_of(mask) == mask.count_ones() as usize
    }

    /// All independent sets, grown in increasing atom order; a set is only
    /// extended while it stays independent.
    pub fn independents(&self) -> Vec<u32> {
        let mut out = vec![0u32];
        let mut stack = vec![(0u32, 0usize)];
        while let Some((mask, from)) = stack.pop() {
            for p in from..self.len() {
                let next = mask | 1 << p;
                if self.is_independent(next) {
                    out.push(next);
                    stack.push((next, p + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Minimal dependent sets. Each is `I ∪ {p}` with `I` independent and
    /// `p` above every atom of `I`.
    pub fn circuits(&self) -> Vec<u32> {
        let ind = self.independents();
        let mut out = Vec::new();
        for &i in &ind {
            let start = 32 - i.leading_zeros() as usize;
            for p in start..self.len() {
                let c = i | 1 << p;
                if self.is_independent(c) {
                    continue;
                }
                let minimal = (0..self.len())
                    .filter(|q| c >> q & 1 == 1)
                    .all(|q| self.is_independent(c & !(1 << q)));
                if minimal {
                    out.push(c);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Circuits with their least atom (under `order`) removed. `order[i]`
    /// is the position of atom `i`.
    pub fn broken_circuits(&self, order: &[usize]) -> Result<Vec<u32>> {
        self.check_order(order)?;
        let mut out: Vec<u32> = self
            .circuits()
            .into_iter()
            .map(|c| {
                let least = (0..self.len())
                    .filter(|q| c >> q & 1 == 1)
                    .min_by_key(|&q| order[q])
                    .unwrap();
                c & !(1 << least)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Independent sets containing no broken circuit.
    pub fn nbc_sets(&self, order: &[usize]) -> Result<Vec<u32>> {
        let bc = minimal_masks(self.broken_circuits(order)?);
        Ok(self
            .independents()
            .into_iter()
            .filter(|&s| bc.iter().all(|&b| s & b != b))
            .collect())
    }

    /// `nbc[k]`, the number of NBC sets of size `k`.
    pub fn nbc_counts(&self, order: &[usize]) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; self.full_rank() + 1];
        for s in self.nbc_sets(order)? {
            counts[s.count_ones() as usize] += 1;
        }
        Ok(counts)
    }

    /// Whether every maximal NBC set has full rank.
    pub fn nbc_complex_is_pure(&self, order: &[usize]) -> Result<bool> {
        let sets: HashSet<u32> = self.nbc_sets(order)?.into_iter().collect();
        let d = self.full_rank();
        Ok(sets.iter().all(|&s| {
            s.count_ones() as usize == d
                || (0..self.len()).any(|p| s >> p & 1 == 0 && sets.contains(&(s | 1 << p)))
        }))
    }

    fn check_order(&self, order: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len()
            || order
                .iter()
                .any(|&o| o >= self.len() || std::mem::replace(&mut seen[o], true))
        {
            return Err(Error::Precondition(
                "atom order must be a permutation".into(),
            ));
        }
        Ok(())
    }

    /// `r(∅) = 0`, `r({p}) = 1`, monotone with unit steps, and submodular,
    /// over every subset (pair) of atoms.
    pub fn rank_axioms_report(&self) -> Result<Report> {
        check_guard(
            "atoms for the rank-axiom check",
            self.len() as u128,
            AXIOM_LIMIT,
        )?;
        let m = self.len();
        let full = 1u32 << m;
        let mut report = Report::new(
            "rank axioms on atom subsets",
            json!(m),
            json!(self.full_rank()),
            true,
        );
        if self.rank_of(0) != 0 {
            report = report.fail(json!("r(empty) != 0"));
        }
        if let Some(p) = (0..m).find(|&p| self.rank_of(1 << p) != 1) {
            report = report.fail(json!({ "singleton_rank": self.atoms[p] }));
        }
        for t in 0..full {
            for p in 0..m {
                let u = t | 1 << p;
                let (rt, ru) = (self.rank_of(t), self.rank_of(u));
                if ru < rt || ru > rt + 1 {
                    return Ok(report.fail(json!({ "monotone": [t, u] })));
                }
            }
        }
        for t in 0..full {
            for u in t + 1..full {
                if self.rank_of(t) + self.rank_of(u) < self.rank_of(t | u) + self.rank_of(t & u) {
                    return Ok(report.fail(json!({ "submodular": [t, u] })));
                }
            }
        }
        Ok(report)
    }
}

fn minimal_masks(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_by_key(|m| m.count_ones());
    let mut out: Vec<u32> = Vec::new();
    for m in masks {
        if out.iter().all(|&b| m & b != b) {
            out.push(m);
        }
    }
    out
}

/// `|nbc_k| = |w_k|` and `nbc_k = (−1)^k w_k`.
pub fn whitney_nbc_report(l: &RankedLattice, order: &[usize]) -> Result<Report> {
    let m = AtomMatroid::new(l)?;
    let nbc = m.nbc_counts(order)?;
    let w = l.whitney_rank_sums();
    let signed: Vec<BigInt> = w
        .iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 0 { x.clone() } else { -x })
        .collect();
    let lhs: Vec<BigInt> = nbc.iter().map(|&c| BigInt::from(c)).collect();
    Ok(Report::new(
        "#NBC_k = (-1)^k sum_{r(a)=k} mu(0,a)",
        Value::Array(lhs.iter().map(int_to_json).collect()),
        Value::Array(signed.iter().map(int_to_json).collect()),
        lhs == signed,
    ))
}

pub fn whitney_rank_sums(l: &RankedLattice) -> Vec<BigInt> {
    l.whitney_rank_sums()
}

/// Integer polynomial, coefficients ascending by degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> IntPolynomial {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> IntPolynomial {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPolynomial { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &IntPolynomial) -> IntPolynomial {
        let neg = IntPolynomial {
            coeffs: o.coeffs.iter().map(|c| -c).collect(),
        };
        self.add(&neg)
    }

    pub fn mul(&self, o: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(int_to_json).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `F_L(x) = Σ_a μ(0, a) x^{d − r(a)}`.
pub fn characteristic_polynomial(l: &RankedLattice) -> IntPolynomial {
    let d = l.height();
    let w = l.whitney_rank_sums();
    let mut c = vec![BigInt::zero(); d + 1];
    for (k, wk) in w.into_iter().enumerate() {
        c[d - k] = wk;
    }
    IntPolynomial::new(c)
}

/// `P_G(x) = Σ_i (Σ_{r(A)=i} μ(0, A)) x^{n−i}` over the contraction lattice.
pub fn chromatic_polynomial(g: &Graph) -> Result<IntPolynomial> {
    let l = contraction_lattice(g)?.ranked()?;
    let n = g.vertex_count();
    let mut c = vec![BigInt::zero(); n + 1];
    for (i, wi) in l.whitney_rank_sums().into_iter().enumerate() {
        c[n - i] = wi;
    }
    Ok(IntPolynomial::new(c))
}

/// `c(n, k)`, the coefficient of `x^k` in `x(x+1)⋯(x+n−1)`.
pub fn stirling_first_unsigned(n: usize, k: usize) -> Result<BigInt> {
    if n > 12 || k > n {
        return Err(Error::OutOfRange("Stirling argument (0 <= k <= n <= 12)"));
    }
    let mut p = IntPolynomial::from_i64(&[1]);
    for i in 0..n {
        p = p.mul(&IntPolynomial::from_i64(&[i as i64, 1]));
    }
    Ok(p.coeffs().get(k).cloned().unwrap_or_default())
}

/// Lattice of flats of the columns of a generator matrix over `GF(q)`.
///
/// Flats are closures `T ↦ {j : r(T ∪ j) = r(T)}`; labels list column
/// indices, e.g. `{0,2}`. The empty flat is the zero.
pub fn flats_lattice(field: &Field, columns: &[Vec<u8>]) -> Result<RankedLattice> {
    check_guard("generator columns", columns.len() as u128, 32)?;
    let n = columns.len();
    let rank = |mask: u64| {
        let rows: Vec<Vec<u8>> = (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| columns[j].clone())
            .collect();
        field.rank(&rows)
    };
    let closure = |mask: u64| {
        let r = rank(mask);
        (0..n).fold(mask, |acc, j| {
            if acc >> j & 1 == 0 && rank(mask | 1 << j) == r {
                acc | 1 << j
            } else {
                acc
            }
        })
    };
    let start = closure(0);
    let mut flats = vec![start];
    let mut index = HashMap::from([(start, 0usize)]);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let f = flats[i];
        for j in 0..n {
            if f >> j & 1 == 1 {
                continue;
            }
            let g = closure(f | 1 << j);
            let k = *index.entry(g).or_insert_with(|| {
                flats.push(g);
                queue.push_back(flats.len() - 1);
                flats.len() - 1
            });
            edges.push((i, k));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let labels = flats
        .iter()
        .map(|&f| {
            let cols: Vec<String> = (0..n)
                .filter(|j| f >> j & 1 == 1)
                .map(|j| j.to_string())
                .collect();
            format!("{{{}}}", cols.join(","))
        })
        .collect();
    Lattice::new(Poset::from_index_edges(labels, &edges)?)?.ranked()
}

fn vectors(q: usize, len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..q.pow(len as u32)).map(move |mut x| {
        let mut v = vec![0u8; len];
        for c in v.iter_mut() {
            *c = (x % q) as u8;
            x /= q;
        }
        v
    })
}

/// Counts `t`-tuples `(a_1, …, a_t)` of message vectors such that every
/// column `g_j` has some `a_i · g_j ≠ 0` (for `t = 1`, full-weight
/// codewords), and compares with `q^{t(m − ρ)} F_L(q^t)`, where `m` is the
/// number of rows and `ρ` the rank of the generator.
pub fn codeword_weight_check(q: usize, generator: &[Vec<u8>], t: u32) -> Result<Report> {
    let field = Field::new(q)?;
    let m = generator.len();
    let n = generator.first().map_or(0, Vec::len);
    if generator.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition(
            "generator rows differ in length".into(),
        ));
    }
    if n == 0 || t == 0 {
        return Err(Error::Precondition(
            "need at least one column and t >= 1".into(),
        ));
    }
    check_guard(
        "message tuples (q^(rows*t))",
        (q as u128).saturating_pow(m as u32 * t),
        10_000_000,
    )?;
    let columns: Vec<Vec<u8>> = (0..n)
        .map(|j| generator.iter().map(|r| r[j]).collect())
        .collect();
    if let Some(j) = columns.iter().position(|c| c.iter().all(|&x| x == 0)) {
        return Err(Error::Precondition(format!("column {j} is zero")));
    }
    for &x in generator.iter().flatten() {
        if x as usize >= q {
            return Err(Error::Precondition(format!("entry {x} outside GF({q})")));
        }
    }
    let l = flats_lattice(&field, &columns)?;
    let rho = field.rank(generator);
    let dot = |a: &[u8], c: &[u8]| {
        a.iter()
            .zip(c)
            .fold(0u8, |s, (&x, &y)| field.add(s, field.mul(x, y)))
    };
    // per message vector, the set of columns it does not annihilate
    let hits: Vec<u32> = vectors(q, m)
        .map(|a| {
            (0..n).fold(0u32, |acc, j| {
                if dot(&a, &columns[j]) != 0 {
                    acc | 1 << j
                } else {
                    acc
                }
            })
        })
        .collect();
    let all = (1u32 << n) - 1;
    let mut count = 0u64;
    let k = hits.len();
    let mut idx = vec![0usize; t as usize];
    'outer: loop {
        let covered = idx.iter().fold(0u32, |acc, &i| acc | hits[i]);
        if covered == all {
            count += 1;
        }
        for pos in 0..idx.len() {
            idx[pos] += 1;
            if idx[pos] < k {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        break;
    }
    let qt = BigInt::from(q).pow(t);
    let f = characteristic_polynomial(&l);
    let rhs = BigInt::from(q).pow(t * (m - rho) as u32) * f.eval(&qt);
    Ok(Report::equal(
        format!("#full-weight {t}-tuples = q^(t(m-rank)) F_L(q^{t})"),
        &BigInt::from(count),
        &rhs,
    )
    .with_witness(json!({
        "q": q,
        "t": t,
        "characteristic_polynomial": f.to_json(),
        "flats": l.len(),
        "rank": rho,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{boolean_lattice, partition_lattice, subspace_lattice};

    fn ident(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn free_and_graphic_matroids() {
        let b3 = boolean_lattice(3).unwrap().ranked().unwrap();
        let m = AtomMatroid::new(&b3).unwrap();
        assert_eq!(m.independents().len(), 8);
        assert!(m.circuits().is_empty());
        assert_eq!(m.nbc_counts(&ident(3)).unwrap(), vec![1, 3, 3, 1]);
        let p3 = partition_lattice(3).unwrap().ranked().unwrap();
        let m = AtomMatroid::new(&p3).unwrap();
        assert_eq!(m.circuits(), vec![0b111]);
        let b22 = subspace_lattice(2, 2).unwrap().ranked().unwrap();
        let m = AtomMatroid::new(&b22).unwrap();
        assert_eq!(m.circuits(), vec![0b111]);
        assert_eq!(m.independents().len(), 7);
    }

    #[test]
    fn k4_nbc_is_stirling() {
        let p4 = partition_lattice(4).unwrap().ranked().unwrap();
        let m = AtomMatroid::new(&p4).unwrap();
        assert_eq!(m.nbc_counts(&ident(6)).unwrap(), vec![1, 6, 11, 6]);
        assert!(m.nbc_complex_is_pure(&ident(6)).unwrap());
        assert!(m.rank_axioms_report().unwrap().pass);
        assert!(whitney_nbc_report(&p4, &[5, 4, 3, 2, 1, 0]).unwrap().pass);
        assert!(m.nbc_counts(&[0, 0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn polynomials() {
        let k3 = chromatic_polynomial(&Graph::complete(3)).unwrap();
        assert_eq!(k3, IntPolynomial::from_i64(&[0, 2, -3, 1]));
        assert_eq!(k3.to_string(), "x^3 - 3x^2 + 2x");
        let c4 = chromatic_polynomial(&Graph::cycle(4)).unwrap();
        assert_eq!(c4, IntPolynomial::from_i64(&[0, -3, 6, -4, 1]));
        assert_eq!(
            chromatic_polynomial(&Graph::empty(3)).unwrap(),
            IntPolynomial::monomial(3)
        );
        let b22 = subspace_lattice(2, 2).unwrap().ranked().unwrap();
        assert_eq!(
            characteristic_polynomial(&b22),
            IntPolynomial::from_i64(&[2, -3, 1])
        );
        let b3 = boolean_lattice(3).unwrap().ranked().unwrap();
        assert_eq!(
            characteristic_polynomial(&b3),
            IntPolynomial::from_i64(&[-1, 3, -3, 1])
        );
    }

    #[test]
    fn stirling() {
        assert_eq!(stirling_first_unsigned(4, 2).unwrap(), 11.into());
        assert_eq!(stirling_first_unsigned(5, 1).unwrap(), 24.into());
        assert_eq!(stirling_first_unsigned(7, 7).unwrap(), 1.into());
        assert!(stirling_first_unsigned(13, 1).is_err());
    }

    #[test]
    fn codewords() {
        let id = vec![vec![1, 0], vec![0, 1]];
        let r = codeword_weight_check(2, &id, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!(1));
        let r = codeword_weight_check(2, &id, 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!(9));
        // columns e1, e2, e1+e2: the triangle
        let k3 = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let r = codeword_weight_check(2, &k3, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!(0));
        assert!(codeword_weight_check(3, &k3, 2).unwrap().pass);
        assert!(codeword_weight_check(2, &[vec![0, 1]], 1).is_err());
    }
}
