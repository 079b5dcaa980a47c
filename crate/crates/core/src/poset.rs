//! Finite posets, their incidence matrices and Möbius functions.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bits::{BitMatrix, BitSet};
use crate::error::{check_guard, Error, Result};
use crate::matrix::IntMatrix;

/// Largest poset for which dense `n × n` integer matrices are built.
pub const DENSE_LIMIT: u128 = 2500;

/// A finite poset.
///
/// Elements are stored in a fixed linear extension: `i ≤ j` in the order
/// implies `i <= j` as indices, so every incidence matrix is upper
/// triangular. The extension is Kahn's algorithm with ties broken by input
/// position.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leq: BitMatrix,
    geq: BitMatrix,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    mobius: OnceLock<Vec<Vec<(u32, BigInt)>>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.leq == other.leq
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from labels and generating pairs `(lower, upper)`.
    ///
    /// The pairs need not be covers: the order is their reflexive-transitive
    /// closure and the stored covers are its transitive reduction.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let a = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let b = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            edges.push((a, b));
        }
        Self::from_index_edges(labels, &edges)
    }

    /// Same as [`Poset::from_covers`] with pairs given as input positions.
    pub fn from_index_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        {
            let mut seen = HashMap::with_capacity(n);
            for l in &labels {
                if seen.insert(l.as_str(), ()).is_some() {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::OutOfRange("edge endpoint"));
            }
            if a == b {
                return Err(Error::Cycle(vec![labels[a].clone(), labels[a].clone()]));
            }
            out[a].push(b);
        }
        for o in out.iter_mut() {
            o.sort_unstable();
            o.dedup();
        }
        for o in &out {
            for &b in o {
                indeg[b] += 1;
            }
        }

        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        let mut remaining = indeg.clone();
        while let Some(Reverse(i)) = heap.pop() {
            order.push(i);
            for &j in &out[i] {
                remaining[j] -= 1;
                if remaining[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
        if order.len() < n {
            return Err(Error::Cycle(find_cycle(&labels, &out, &remaining)));
        }

        let mut pos = vec![0usize; n];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        let new_labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let mut new_out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, o) in out.iter().enumerate() {
            let mut v: Vec<usize> = o.iter().map(|&j| pos[j]).collect();
            v.sort_unstable();
            new_out[pos[i]] = v;
        }

        let mut leq = BitMatrix::new(n);
        for i in (0..n).rev() {
            leq.set(i, i);
            for &j in &new_out[i] {
                let row = leq.row(j).clone();
                leq.row_mut(i).union_with(&row);
            }
        }

        // An edge i→j is a cover unless some other out-neighbour of i lies below j.
        let mut covers = Vec::new();
        for (i, o) in new_out.iter().enumerate() {
            for &j in o {
                if !o.iter().any(|&k| k != j && leq.get(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        Ok(Self::assemble(new_labels, leq, covers))
    }

    /// Builds from a full relation matrix; `rel[i][j]` means `i ≤ j`.
    ///
    /// The relation is closed reflexively and transitively first.
    pub fn from_relation<S: AsRef<str>>(labels: &[S], rel: &[Vec<bool>]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut edges = Vec::new();
        for (i, row) in rel.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b && i != j {
                    edges.push((i, j));
                }
            }
        }
        Self::from_index_edges(labels, &edges)
    }

    /// Builds from a relation already in linear-extension index order.
    fn from_sorted_relation(labels: Vec<String>, leq: BitMatrix) -> Poset {
        let n = labels.len();
        let mut covers = Vec::new();
        for i in 0..n {
            let mut strict = leq.row(i).clone();
            strict.clear(i);
            let mut above = BitSet::new(n);
            for k in strict.iter() {
                let mut s = leq.row(k).clone();
                s.clear(k);
                above.union_with(&s);
            }
            for j in strict.iter() {
                if !above.get(j) {
                    covers.push((i, j));
                }
            }
        }
        Self::assemble(labels, leq, covers)
    }

    fn assemble(labels: Vec<String>, leq: BitMatrix, covers: Vec<(usize, usize)>) -> Poset {
        let n = labels.len();
        let geq = leq.transpose();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Poset {
            labels,
            index,
            leq,
            geq,
            covers,
            upper,
            lower,
            mobius: OnceLock::new(),
        }
    }

    pub fn empty() -> Poset {
        Self::assemble(Vec::new(), BitMatrix::new(0), Vec::new())
    }

    /// The antichain on the given labels.
    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Result<Poset> {
        Self::from_covers::<S>(labels, &[])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{x : i ≤ x}`.
    pub fn up_set(&self, i: usize) -> &BitSet {
        self.leq.row(i)
    }

    /// `{x : x ≤ i}`.
    pub fn down_set(&self, i: usize) -> &BitSet {
        self.geq.row(i)
    }

    /// Elements of the closed interval `[a, b]` in index order.
    pub fn interval_elements(&self, a: usize, b: usize) -> Vec<usize> {
        self.up_set(a)
            .intersection(self.down_set(b))
            .iter()
            .collect()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower[i].is_empty())
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper[i].is_empty())
            .collect()
    }

    /// Unique least element, if any.
    pub fn bottom(&self) -> Option<usize> {
        let m = self.minimal();
        (m.len() == 1 && self.up_set(m[0]).count() == self.len()).then(|| m[0])
    }

    /// Unique greatest element, if any.
    pub fn top(&self) -> Option<usize> {
        let m = self.maximal();
        (m.len() == 1 && self.down_set(m[0]).count() == self.len()).then(|| m[0])
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        for j in 0..self.len() {
            h[j] = self.lower[j].iter().map(|&i| h[i] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Length (number of steps) of the longest chain; 0 for an empty poset.
    pub fn height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (0..i).all(|j| self.comparable(i, j)))
    }

    pub fn zeta_matrix(&self) -> Result<IntMatrix> {
        check_guard(
            "dense zeta matrix elements",
            self.len() as u128,
            DENSE_LIMIT,
        )?;
        let n = self.len();
        Ok(IntMatrix::from_fn(n, n, |i, j| {
            if self.leq(i, j) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// `Y = Z − I`, the strict zeta matrix.
    pub fn strict_zeta_matrix(&self) -> Result<IntMatrix> {
        check_guard(
            "dense zeta matrix elements",
            self.len() as u128,
            DENSE_LIMIT,
        )?;
        let n = self.len();
        Ok(IntMatrix::from_fn(n, n, |i, j| {
            if self.lt(i, j) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// Nonzero Möbius values, row by row: `table[a]` lists `(b, μ(a,b))`.
    ///
    /// Each row follows the recursion `μ(a,a) = 1`,
    /// `μ(a,b) = −Σ_{a ≤ x < b} μ(a,x)`; rows are independent and are
    /// computed in parallel on first use.
    fn mobius_table(&self) -> &Vec<Vec<(u32, BigInt)>> {
        self.mobius.get_or_init(|| {
            (0..self.len())
                .into_par_iter()
                .map(|a| self.compute_mobius_row(a))
                .collect()
        })
    }

    fn compute_mobius_row(&self, a: usize) -> Vec<(u32, BigInt)> {
        let up = self.up_set(a);
        let mut val: HashMap<usize, BigInt> = HashMap::new();
        let mut row = Vec::new();
        for b in up.iter() {
            let v = if b == a {
                BigInt::one()
            } else {
                let mut s = BigInt::zero();
                for x in up.intersection(self.down_set(b)).iter() {
                    if x != b {
                        if let Some(m) = val.get(&x) {
                            s += m;
                        }
                    }
                }
                -s
            };
            if !v.is_zero() {
                row.push((b as u32, v.clone()));
                val.insert(b, v);
            }
        }
        row
    }

    /// `μ(a, b)` by index; zero when `a ≰ b`.
    pub fn mu(&self, a: usize, b: usize) -> BigInt {
        if !self.leq(a, b) {
            return BigInt::zero();
        }
        let row = &self.mobius_table()[a];
        match row.binary_search_by_key(&(b as u32), |e| e.0) {
            Ok(k) => row[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// `μ(a, b)` by label.
    pub fn mobius(&self, a: &str, b: &str) -> Result<BigInt> {
        Ok(self.mu(self.index_of(a)?, self.index_of(b)?))
    }

    /// Nonzero entries `(b, μ(a, b))` of row `a`.
    pub fn mobius_row(&self, a: usize) -> Vec<(usize, BigInt)> {
        self.mobius_table()[a]
            .iter()
            .map(|(b, v)| (*b as usize, v.clone()))
            .collect()
    }

    pub fn mobius_matrix(&self) -> Result<IntMatrix> {
        check_guard(
            "dense Möbius matrix elements",
            self.len() as u128,
            DENSE_LIMIT,
        )?;
        let n = self.len();
        let mut m = IntMatrix::zeros(n, n);
        for (a, row) in self.mobius_table().iter().enumerate() {
            for (b, v) in row {
                m.set(a, *b as usize, v.clone());
            }
        }
        Ok(m)
    }

    /// Number of chains `a = x_0 < x_1 < … < x_k = b`, indexed by `k`.
    pub fn chain_counts(&self, a: usize, b: usize) -> Result<Vec<BigInt>> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable {
                lo: self.labels[a].clone(),
                hi: self.labels[b].clone(),
            });
        }
        let elems = self.interval_elements(a, b);
        // counts[x] = chains from x up to b, by length; fill from the top down.
        let mut counts: HashMap<usize, Vec<BigInt>> = HashMap::new();
        for &x in elems.iter().rev() {
            let v = if x == b {
                vec![BigInt::one()]
            } else {
                let mut acc: Vec<BigInt> = Vec::new();
                for &y in &elems {
                    if self.lt(x, y) {
                        let c = &counts[&y];
                        if acc.len() < c.len() + 1 {
                            acc.resize(c.len() + 1, BigInt::zero());
                        }
                        for (k, v) in c.iter().enumerate() {
                            acc[k + 1] += v;
                        }
                    }
                }
                acc
            };
            counts.insert(x, v);
        }
        Ok(counts.remove(&a).unwrap())
    }

    /// Hall's alternating chain sum over chains from `a` to `b`.
    pub fn mobius_by_chains(&self, a: usize, b: usize) -> Result<BigInt> {
        let counts = self.chain_counts(a, b)?;
        Ok(counts
            .iter()
            .enumerate()
            .fold(
                BigInt::zero(),
                |acc, (k, c)| {
                    if k % 2 == 0 {
                        acc + c
                    } else {
                        acc - c
                    }
                },
            ))
    }

    /// `Y^m`: entry `(i, j)` counts chains of length `m` from `i` to `j`.
    pub fn strict_zeta_power(&self, m: u32) -> Result<IntMatrix> {
        Ok(self.strict_zeta_matrix()?.pow(m))
    }

    /// Interpolates the `(i, j)` entry of `Z^m` through the sampled `m`
    /// values by a polynomial of degree at most the height of `P`, then
    /// checks it against the remaining samples and two held-out values.
    pub fn zeta_power_poly_check(&self, i: usize, j: usize, degrees: &[u32]) -> Result<bool> {
        let mut ms: Vec<u32> = degrees.to_vec();
        ms.sort_unstable();
        ms.dedup();
        let need = self.height() + 1;
        if ms.len() < need {
            return Err(Error::Precondition(format!(
                "need at least {need} distinct sample values of m, got {}",
                ms.len()
            )));
        }
        let z = self.zeta_matrix()?;
        let entry = |m: u32| BigRational::from_integer(z.pow(m).get(i, j).clone());
        let nodes: Vec<(BigRational, BigRational)> = ms[..need]
            .iter()
            .map(|&m| (BigRational::from_integer(BigInt::from(m)), entry(m)))
            .collect();
        let top = *ms.last().unwrap();
        let mut checks: Vec<u32> = ms[need..].to_vec();
        checks.extend([top + 1, top + 2]);
        Ok(checks.into_iter().all(|m| {
            lagrange_eval(&nodes, &BigRational::from_integer(BigInt::from(m))) == entry(m)
        }))
    }

    pub fn dual(&self) -> Poset {
        let n = self.len();
        let labels: Vec<String> = self.labels.iter().rev().cloned().collect();
        let mut leq = BitMatrix::new(n);
        for i in 0..n {
            for j in self.up_set(i).iter() {
                leq.set(n - 1 - j, n - 1 - i);
            }
        }
        let covers = self
            .covers
            .iter()
            .map(|&(a, b)| (n - 1 - b, n - 1 - a))
            .collect();
        let mut p = Self::assemble(labels, leq, covers);
        p.sort_covers();
        p
    }

    fn sort_covers(&mut self) {
        self.covers.sort_unstable();
        for v in self.upper.iter_mut().chain(self.lower.iter_mut()) {
            v.sort_unstable();
        }
    }

    /// Componentwise product; element `(x, y)` is labelled `"(x,y)"`.
    pub fn product(&self, other: &Poset) -> Poset {
        let (n, m) = (self.len(), other.len());
        let labels: Vec<String> = (0..n * m)
            .map(|k| format!("({},{})", self.labels[k / m], other.labels[k % m]))
            .collect();
        let mut edges = Vec::new();
        for x in 0..n {
            for y in 0..m {
                for &x2 in &self.upper[x] {
                    edges.push((x * m + y, x2 * m + y));
                }
                for &y2 in &other.upper[y] {
                    edges.push((x * m + y, x * m + y2));
                }
            }
        }
        Self::from_index_edges(labels, &edges).expect("product of posets is acyclic")
    }

    /// Induced subposet on `elems`, kept in the given index order.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let k = sorted.len();
        let labels = sorted.iter().map(|&i| self.labels[i].clone()).collect();
        let mut leq = BitMatrix::new(k);
        for (a, &i) in sorted.iter().enumerate() {
            for (b, &j) in sorted.iter().enumerate().skip(a) {
                if self.leq(i, j) {
                    leq.set(a, b);
                }
            }
        }
        Self::from_sorted_relation(labels, leq)
    }

    pub fn interval(&self, a: usize, b: usize) -> Result<Poset> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable {
                lo: self.labels[a].clone(),
                hi: self.labels[b].clone(),
            });
        }
        Ok(self.induced(&self.interval_elements(a, b)))
    }

    /// Labels for adjoined bounds, primed until they are fresh.
    pub fn fresh_bound_labels(&self) -> (String, String) {
        let mut lo = "0̂".to_string();
        let mut hi = "1̂".to_string();
        while self.index.contains_key(&lo) {
            lo.push('\'');
        }
        while self.index.contains_key(&hi) || hi == lo {
            hi.push('\'');
        }
        (lo, hi)
    }

    /// `P̂`: a new least element at index 0 and a new greatest at the end.
    pub fn adjoin_bounds(&self) -> Poset {
        let n = self.len();
        let (lo, hi) = self.fresh_bound_labels();
        let mut labels = Vec::with_capacity(n + 2);
        labels.push(lo);
        labels.extend(self.labels.iter().cloned());
        labels.push(hi);
        let mut leq = BitMatrix::new(n + 2);
        for j in 0..n + 2 {
            leq.set(0, j);
            leq.set(j, n + 1);
        }
        for i in 0..n {
            for j in self.up_set(i).iter() {
                leq.set(i + 1, j + 1);
            }
        }
        let mut covers: Vec<(usize, usize)> =
            self.covers.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        if n == 0 {
            covers.push((0, 1));
        } else {
            covers.extend(self.minimal().into_iter().map(|i| (0, i + 1)));
            covers.extend(self.maximal().into_iter().map(|i| (i + 1, n + 1)));
        }
        let mut p = Self::assemble(labels, leq, covers);
        p.sort_covers();
        p
    }

    /// The Möbius number `μ_{P̂}(0̂, 1̂)`.
    ///
    /// Computed along the row of `0̂` without building `P̂`: with
    /// `ν(x) = μ_{P̂}(0̂, x)` one has `ν(x) = −1 − Σ_{y<x} ν(y)` and the
    /// answer is `−1 − Σ_x ν(x)`.
    pub fn mobius_number(&self) -> BigInt {
        let mut nu: Vec<BigInt> = Vec::with_capacity(self.len());
        for x in 0..self.len() {
            let mut s = BigInt::one();
            for y in self.down_set(x).iter() {
                if y != x {
                    s += &nu[y];
                }
            }
            nu.push(-s);
        }
        -(BigInt::one() + nu.iter().sum::<BigInt>())
    }

    /// Whether some bijection carries the order of `self` onto `other`.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// An order isomorphism as a map from indices of `self` to `other`.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let sig = |p: &Poset, i: usize| {
            (
                p.down_set(i).count(),
                p.up_set(i).count(),
                p.lower[i].len(),
                p.upper[i].len(),
            )
        };
        let sa: Vec<_> = (0..n).map(|i| sig(self, i)).collect();
        let sb: Vec<_> = (0..n).map(|i| sig(other, i)).collect();
        let mut ca = sa.clone();
        let mut cb = sb.clone();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            k: usize,
            p: &Poset,
            q: &Poset,
            sa: &[(usize, usize, usize, usize)],
            sb: &[(usize, usize, usize, usize)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if k == p.len() {
                return true;
            }
            for c in 0..q.len() {
                if used[c] || sa[k] != sb[c] {
                    continue;
                }
                let ok = (0..k)
                    .all(|j| p.leq(j, k) == q.leq(map[j], c) && p.leq(k, j) == q.leq(c, map[j]));
                if !ok {
                    continue;
                }
                map[k] = c;
                used[c] = true;
                if go(k + 1, p, q, sa, sb, map, used) {
                    return true;
                }
                used[c] = false;
            }
            false
        }
        go(0, self, other, &sa, &sb, &mut map, &mut used).then_some(map)
    }
}

fn find_cycle(labels: &[String], out: &[Vec<usize>], remaining: &[usize]) -> Vec<String> {
    // Every node with remaining in-degree has a predecessor that also does;
    // walk predecessors until a node repeats.
    let n = labels.len();
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for (a, o) in out.iter().enumerate() {
        if remaining[a] > 0 {
            for &b in o {
                if remaining[b] > 0 && pred[b].is_none() {
                    pred[b] = Some(a);
                }
            }
        }
    }
    let start = (0..n).find(|&i| remaining[i] > 0).unwrap();
    let mut seen = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut cur = start;
    while seen[cur] == usize::MAX {
        seen[cur] = path.len();
        path.push(cur);
        cur = pred[cur].expect("residual node has a residual predecessor");
    }
    let mut cycle: Vec<usize> = path[seen[cur]..].to_vec();
    cycle.reverse();
    cycle.push(cycle[0]);
    cycle.into_iter().map(|i| labels[i].clone()).collect()
}

fn lagrange_eval(nodes: &[(BigRational, BigRational)], x: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        let mut term = yi.clone();
        for (j, (xj, _)) in nodes.iter().enumerate() {
            if i != j {
                term = term * (x - xj) / (xi - xj);
            }
        }
        total += term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> Poset {
        Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn b2() -> Poset {
        Poset::from_covers(
            &["", "1", "2", "12"],
            &[("", "1"), ("", "2"), ("1", "12"), ("2", "12")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain() {
        let p = chain2();
        assert!(p.leq(0, 1) && !p.leq(1, 0));
        assert_eq!(
            p.zeta_matrix().unwrap(),
            IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]])
        );
        assert_eq!(p.mobius("a", "b").unwrap(), BigInt::from(-1));
    }

    #[test]
    fn redundant_pair_is_reduced() {
        let p =
            Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_and_label_errors() {
        let e = Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(e, Error::Cycle(ref c) if c.len() == 3 && c[0] == c[2]));
        assert_eq!(
            Poset::from_covers(&["a", "a"], &[]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            Poset::from_covers(&["a"], &[("a", "z")]).unwrap_err(),
            Error::UnknownLabel("z".into())
        );
    }

    #[test]
    fn linear_extension_breaks_ties_by_input() {
        let p = Poset::from_covers(&["top", "x", "y"], &[("y", "top"), ("x", "top")]).unwrap();
        assert_eq!(p.labels(), &["x", "y", "top"]);
    }

    #[test]
    fn antichain_and_b2_zeta() {
        let a = Poset::antichain(&["p", "q"]).unwrap();
        assert!(a.zeta_matrix().unwrap().is_identity());
        let z = b2().zeta_matrix().unwrap();
        let ones = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| z.get(i, j).is_one())
            .count();
        assert_eq!(ones, 9);
    }

    #[test]
    fn mobius_inverts_zeta() {
        let p = b2();
        let z = p.zeta_matrix().unwrap();
        let m = p.mobius_matrix().unwrap();
        assert!(m.mul(&z).is_identity() && z.mul(&m).is_identity());
        assert_eq!(p.mobius("", "12").unwrap(), BigInt::one());
    }

    #[test]
    fn chain_counts_and_powers() {
        let p = b2();
        assert_eq!(
            p.chain_counts(0, 3).unwrap(),
            vec![BigInt::zero(), BigInt::one(), BigInt::from(2)]
        );
        assert_eq!(p.mobius_by_chains(0, 3).unwrap(), BigInt::one());
        assert_eq!(p.mobius_by_chains(1, 1).unwrap(), BigInt::one());
        assert!(p.mobius_by_chains(1, 2).is_err());
        assert!(p.strict_zeta_power(0).unwrap().is_identity());
        assert!(p.strict_zeta_power(3).unwrap().is_zero());
        assert!(p.zeta_power_poly_check(0, 3, &[0, 1, 2]).unwrap());
        assert!(p.zeta_power_poly_check(0, 3, &[0, 1]).is_err());
    }

    #[test]
    fn mobius_numbers() {
        assert_eq!(Poset::empty().mobius_number(), BigInt::from(-1));
        assert_eq!(
            Poset::antichain(&["x"]).unwrap().mobius_number(),
            BigInt::zero()
        );
        assert_eq!(
            Poset::antichain(&["x", "y"]).unwrap().mobius_number(),
            BigInt::one()
        );
    }

    #[test]
    fn adjoin_and_dual() {
        let a = Poset::antichain(&["x", "y"]).unwrap();
        let hat = a.adjoin_bounds();
        assert_eq!(hat.len(), 4);
        assert_eq!(hat.mu(0, 3), BigInt::one());
        assert!(hat.is_isomorphic(&b2()));
        let d = chain2().dual();
        assert_eq!(d.labels(), &["b", "a"]);
        assert!(d.leq(0, 1));
        assert_eq!(Poset::empty().adjoin_bounds().mu(0, 1), BigInt::from(-1));
    }

    #[test]
    fn product_of_chains_is_square() {
        let c = chain2();
        let sq = c.product(&c);
        assert!(sq.is_isomorphic(&b2()));
        assert!(!sq.is_isomorphic(&Poset::antichain(&["1", "2", "3", "4"]).unwrap()));
    }

    #[test]
    fn interval_restricts() {
        let p = b2();
        let i = p.interval(1, 3).unwrap();
        assert_eq!(i.labels(), &["1", "12"]);
        assert!(p.interval(1, 2).is_err());
    }
}
