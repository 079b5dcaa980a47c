//! Brute-force reference computations. Each works from definitions only
//! (enumeration of subsets, sequences or permutations, or Gauss–Jordan
//! elimination) and shares no code path with the routes it checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::instances::Graph;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::matroid::IntPolynomial;
use crate::poset::Poset;

/// `Z⁻¹` by rational Gauss–Jordan elimination, as integers.
pub fn mobius_by_inverse(p: &Poset) -> IntMatrix {
    let n = p.len();
    let z = RatMatrix::from_fn(n, n, |i, j| {
        if p.leq(i, j) {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    let inv = z.inverse().expect("zeta is unitriangular");
    IntMatrix::from_fn(n, n, |i, j| inv.get(i, j).to_integer())
}

fn is_chain(p: &Poset, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(k, &x)| set[k + 1..].iter().all(|&y| p.comparable(x, y)))
}

/// Σ (−1)^{ℓ(C)} over chains from `a` to `b`, by enumerating subsets of
/// the open interval.
pub fn hall_sum(p: &Poset, a: usize, b: usize) -> BigInt {
    if a == b {
        return BigInt::one();
    }
    let inner: Vec<usize> = (0..p.len())
        .filter(|&x| x != a && x != b && p.leq(a, x) && p.leq(x, b))
        .collect();
    assert!(inner.len() <= 20, "interval too large to enumerate");
    let mut total = BigInt::zero();
    for mask in 0u32..1 << inner.len() {
        let set: Vec<usize> = (0..inner.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| inner[i])
            .collect();
        if is_chain(p, &set) {
            // length = number of steps = |set| + 1
            if set.len() % 2 == 1 {
                total += 1;
            } else {
                total -= 1;
            }
        }
    }
    total
}

/// Chains `x_0 < x_1 < … < x_m` from `i` to `j`, by enumerating increasing
/// sequences of indices.
pub fn chains_of_length(p: &Poset, i: usize, j: usize, m: usize) -> u64 {
    fn go(p: &Poset, cur: usize, j: usize, left: usize) -> u64 {
        if left == 0 {
            return (cur == j) as u64;
        }
        (0..p.len())
            .filter(|&y| y != cur && p.leq(cur, y) && p.leq(y, j))
            .map(|y| go(p, y, j, left - 1))
            .sum()
    }
    if m == 0 {
        return (i == j) as u64;
    }
    go(p, i, j, m)
}

/// Nonempty chains of `p` by size, from all subsets (`|P| ≤ 20`).
pub fn chain_size_counts(p: &Poset) -> Vec<u64> {
    let n = p.len();
    assert!(n <= 20);
    let mut counts = vec![0u64; n + 1];
    for mask in 1u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if is_chain(p, &set) {
            counts[set.len()] += 1;
        }
    }
    counts
}

/// `μ(P) = Σ_C (−1)^{|C|+1}` over all chains of `P`, the empty one included.
pub fn mobius_number_by_chains(p: &Poset) -> BigInt {
    let counts = chain_size_counts(p);
    let mut total = BigInt::from(-1);
    for (k, &c) in counts.iter().enumerate().skip(1) {
        if k % 2 == 1 {
            total += c;
        } else {
            total -= c;
        }
    }
    total
}

/// Number of weakly increasing sequences `x_0 ≤ x_1 ≤ … ≤ x_m` in `p`.
pub fn monotone_maps_from_chain(p: &Poset, m: usize) -> u64 {
    fn go(p: &Poset, cur: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        (0..p.len())
            .filter(|&y| p.leq(cur, y))
            .map(|y| go(p, y, left - 1))
            .sum()
    }
    (0..p.len()).map(|x| go(p, x, m)).sum()
}

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    // Heap's algorithm
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Permutations of `n` points with no fixed point.
pub fn derangements_brute(n: usize) -> u64 {
    assert!(n <= 10);
    let mut count = 0;
    for_each_permutation(n, |s| {
        if s.iter().enumerate().all(|(i, &x)| i != x) {
            count += 1;
        }
    });
    count
}

/// `counts[k]` = permutations of `n` points with exactly `k` cycles.
pub fn permutations_by_cycles(n: usize) -> Vec<u64> {
    assert!(n <= 10);
    let mut counts = vec![0u64; n + 1];
    for_each_permutation(n, |s| {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for i in 0..n {
            if !seen[i] {
                cycles += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = s[j];
                }
            }
        }
        counts[cycles] += 1;
    });
    counts
}

/// `P(G) = P(G − e) − P(G / e)`, with `P` of an edgeless graph `x^n`.
pub fn chromatic_deletion_contraction(g: &Graph) -> IntPolynomial {
    if g.edges().is_empty() {
        return IntPolynomial::monomial(g.vertex_count());
    }
    let last = g.edges().len() - 1;
    chromatic_deletion_contraction(&g.without_edge(last))
        .sub(&chromatic_deletion_contraction(&g.contract_edge(last)))
}

/// Proper colourings of `g` with `k` colours, by enumeration.
pub fn proper_colorings(g: &Graph, k: usize) -> u64 {
    let n = g.vertex_count();
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let total = (k as u64).pow(n as u32);
    let mut count = 0;
    let mut col = vec![0usize; n];
    for mut x in 0..total {
        for c in col.iter_mut() {
            *c = (x % k as u64) as usize;
            x /= k as u64;
        }
        if g.edges().iter().all(|&(u, v)| col[u] != col[v]) {
            count += 1;
        }
    }
    count
}

/// Breadth-first distances in a graph.
pub fn graph_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &adj[u] {
                    if d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Determinant by the Leibniz expansion (`n ≤ 9`).
pub fn det_leibniz(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert!(n <= 9 && m.is_square());
    let mut total = BigInt::zero();
    for_each_permutation(n, |s| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if s[i] > s[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = BigInt::one();
        for (i, &j) in s.iter().enumerate() {
            term *= m.get(i, j);
            if term.is_zero() {
                return;
            }
        }
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

/// `μ(c, b)` in a partition lattice from block counts: each block of `b`
/// made of `m` blocks of `c` contributes `(−1)^{m−1} (m−1)!`. Partitions
/// are block indices per point. `None` when `c` does not refine `b`.
pub fn partition_mu(c: &[usize], b: &[usize]) -> Option<BigInt> {
    let n = c.len();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        if let Some(&(_, bb)) = pairs.iter().find(|&&(cc, _)| cc == c[v]) {
            if bb != b[v] {
                return None;
            }
        } else {
            pairs.push((c[v], b[v]));
        }
    }
    let mut per_block: std::collections::BTreeMap<usize, u64> = Default::default();
    for &(_, bb) in &pairs {
        *per_block.entry(bb).or_default() += 1;
    }
    let mut mu = BigInt::one();
    for (_, m) in per_block {
        let f: BigInt = (1..m).map(BigInt::from).product();
        mu *= if (m - 1) % 2 == 0 { f } else { -f };
    }
    Some(mu)
}

/// `|T ∖ S|` for subsets written as member lists, or `None` if `S ⊄ T`.
pub fn subset_difference(s: &str, t: &str) -> Option<usize> {
    let parse = |x: &str| -> Vec<String> {
        if x.contains(',') {
            x.split(',').map(str::to_string).collect()
        } else {
            x.chars().map(|c| c.to_string()).collect()
        }
    };
    let (s, t) = (parse(s), parse(t));
    s.iter().all(|x| t.contains(x)).then(|| t.len() - s.len())
}

/// Whether every pair has a least upper and greatest lower bound, checked
/// from the bound sets directly.
pub fn is_lattice(p: &Poset) -> bool {
    let n = p.len();
    if n == 0 {
        return false;
    }
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ub: Vec<usize> = (0..n).filter(|&x| p.leq(a, x) && p.leq(b, x)).collect();
            let lb: Vec<usize> = (0..n).filter(|&x| p.leq(x, a) && p.leq(x, b)).collect();
            ub.iter().any(|&j| ub.iter().all(|&x| p.leq(j, x)))
                && lb.iter().any(|&m| lb.iter().all(|&x| p.leq(x, m)))
        })
    })
}

pub fn to_i64(v: &BigInt) -> i64 {
    v.to_i64().expect("fits in i64")
}
