//! Generators for the named posets and lattices, plus seeded random
//! posets, graphs and trees.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_guard, Error, Result};
use crate::gf::Field;
use crate::lattices::{Lattice, RankedLattice};
use crate::poset::Poset;

/// Limit on generated lattice sizes.
pub const INSTANCE_LIMIT: u128 = 100_000;

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are normalized to `(min, max)` and sorted; loops and repeated
    /// edges are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut e = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge {u} {v} references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            e.push((u.min(v), u.max(v)));
        }
        e.sort_unstable();
        let before = e.len();
        e.dedup();
        if e.len() != before {
            return Err(Error::Precondition("repeated edge".into()));
        }
        Ok(Graph { n, edges: e })
    }

    /// Like [`Graph::new`] but merges parallel edges and drops loops.
    pub fn simplified(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        e.sort_unstable();
        e.dedup();
        Graph { n, edges: e }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph { n, edges }
    }

    /// The cycle `C_n`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::simplified(n, &edges)
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph { n: k + 1, edges }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph { n: a + b, edges }
    }

    /// `K_n` with the edge `0 1` removed.
    pub fn complete_minus_edge(n: usize) -> Graph {
        let edges: Vec<_> = Graph::complete(n)
            .edges
            .into_iter()
            .filter(|&e| e != (0, 1))
            .collect();
        Graph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Component index per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn without_edge(&self, i: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Graph { n: self.n, edges }
    }

    /// Contracts edge `i`: its larger endpoint merges into the smaller and
    /// vertices above it shift down. Parallel edges merge, loops vanish.
    pub fn contract_edge(&self, i: usize) -> Graph {
        let (keep, gone) = self.edges[i];
        let map = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (map(u), map(v))).collect();
        Graph::simplified(self.n - 1, &edges)
    }

    /// Edge-list text, one `u v` per line after a `# n` header line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("# {}\n", self.n);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Every graph on `n` labelled vertices, `n ≤ 6`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    let pairs: Vec<(usize, usize)> = Graph::complete(n).edges;
    check_guard(
        "graphs (2^(n choose 2))",
        1u128 << pairs.len().min(127),
        1 << 15,
    )?;
    Ok((0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph { n, edges }
        })
        .collect())
}

fn set_label(members: impl Iterator<Item = usize>, wide: bool) -> String {
    let parts: Vec<String> = members.map(|x| x.to_string()).collect();
    parts.join(if wide { "," } else { "" })
}

/// `B(n)`, the subsets of `{1, …, n}`. Labels list the members, so the
/// empty set is `""` and the top of `B(3)` is `"123"`; for `n > 9` members
/// are comma separated.
pub fn boolean_lattice(n: usize) -> Result<Lattice> {
    if n > 16 {
        return Err(Error::OutOfRange("boolean lattice rank (at most 16)"));
    }
    check_guard("boolean lattice elements", 1u128 << n, INSTANCE_LIMIT)?;
    let wide = n > 9;
    let size = 1usize << n;
    let labels: Vec<String> = (0..size)
        .map(|m| set_label((0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1), wide))
        .collect();
    let mut edges = Vec::with_capacity(n * size / 2);
    for m in 0..size {
        for i in 0..n {
            if m >> i & 1 == 0 {
                edges.push((m, m | 1 << i));
            }
        }
    }
    Ok(Lattice::trusted(Poset::from_index_edges(labels, &edges)?))
}

/// The chain `C(n)`: `0 < 1 < … < n`.
pub fn chain(n: usize) -> Poset {
    let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let edges: Vec<_> = (1..=n).map(|i| (i - 1, i)).collect();
    Poset::from_index_edges(labels, &edges).expect("a chain is acyclic")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            ps.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

/// The divisors of `n` ordered by divisibility.
pub fn divisor_lattice(n: u64) -> Result<Lattice> {
    if n == 0 || n > 1_000_000 {
        return Err(Error::OutOfRange("divisor lattice argument (1..=10^6)"));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let index: HashMap<u64, usize> = divisors.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let primes = prime_factors(n);
    let mut edges = Vec::new();
    for (i, &d) in divisors.iter().enumerate() {
        for &p in &primes {
            if let Some(&j) = index.get(&(d * p)) {
                edges.push((i, j));
            }
        }
    }
    let labels = divisors.iter().map(|d| d.to_string()).collect();
    Ok(Lattice::trusted(Poset::from_index_edges(labels, &edges)?))
}

/// `Σ_k [n choose k]_q`, the number of subspaces of `GF(q)^n`.
pub fn subspace_count(q: u128, n: u32) -> u128 {
    // [n choose k]_q by the q-Pascal rule
    let n = n as usize;
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for k in 1..m {
            next[k] = row[k - 1].saturating_add(q.saturating_pow(k as u32).saturating_mul(row[k]));
        }
        row = next;
    }
    row.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

fn subspace_label(rows: &[Vec<u8>]) -> String {
    if rows.is_empty() {
        return "0".into();
    }
    rows.iter()
        .map(|r| r.iter().map(|d| char::from(b'0' + d)).collect::<String>())
        .collect::<Vec<_>>()
        .join("|")
}

/// `B_q(n)`, the subspaces of `GF(q)^n` under inclusion, `q ∈ {2,3,4,5}`.
///
/// Each subspace is labelled by its reduced row echelon basis, rows joined
/// by `|`; the zero subspace is `"0"`.
pub fn subspace_lattice(q: usize, n: usize) -> Result<Lattice> {
    let field = Field::new(q)?;
    check_guard(
        "subspace lattice elements",
        subspace_count(q as u128, n as u32),
        INSTANCE_LIMIT,
    )?;
    let vectors: Vec<Vec<u8>> = (1..q.pow(n as u32))
        .map(|mut x| {
            let mut v = vec![0u8; n];
            for c in v.iter_mut().rev() {
                *c = (x % q) as u8;
                x /= q;
            }
            v
        })
        .collect();
    let mut spaces: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    let mut index: HashMap<Vec<Vec<u8>>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let base = spaces[i].clone();
        for v in &vectors {
            let mut rows = base.clone();
            rows.push(v.clone());
            field.rref(&mut rows);
            if rows.len() == base.len() {
                continue;
            }
            let j = match index.get(&rows) {
                Some(&j) => j,
                None => {
                    let j = spaces.len();
                    index.insert(rows.clone(), j);
                    spaces.push(rows);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let labels = spaces.iter().map(|s| subspace_label(s)).collect();
    Ok(Lattice::trusted(Poset::from_index_edges(labels, &edges)?))
}

/// Bell numbers `B_0..=B_n`.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut bells = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let t = next.last().unwrap().saturating_add(x);
            next.push(t);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

fn blocks_of(rgs: &[u8]) -> Vec<Vec<usize>> {
    let k = rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); k];
    for (v, &b) in rgs.iter().enumerate() {
        blocks[b as usize].push(v);
    }
    blocks
}

fn canonical_rgs(block_of: &[usize]) -> Vec<u8> {
    let mut rename = HashMap::new();
    block_of
        .iter()
        .map(|b| {
            let next = rename.len() as u8;
            *rename.entry(*b).or_insert(next)
        })
        .collect()
}

fn partition_label(rgs: &[u8], offset: usize) -> String {
    let wide = rgs.len() + offset > 10;
    blocks_of(rgs)
        .into_iter()
        .map(|b| set_label(b.into_iter().map(|v| v + offset), wide))
        .collect::<Vec<_>>()
        .join("|")
}

/// Connected partitions of `g`, found by merging blocks joined by an edge,
/// starting from the discrete partition. Returns restricted growth strings
/// and the covering merges.
fn connected_partitions(g: &Graph) -> Result<(Vec<Vec<u8>>, Vec<(usize, usize)>)> {
    let n = g.vertex_count();
    if n > 255 {
        return Err(Error::OutOfRange("graph size (at most 255 vertices)"));
    }
    let start: Vec<u8> = (0..n as u8).collect();
    let mut parts = vec![start.clone()];
    let mut index = HashMap::from([(start, 0usize)]);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let cur = parts[i].clone();
        for &(u, v) in g.edges() {
            let (bu, bv) = (cur[u], cur[v]);
            if bu == bv {
                continue;
            }
            let merged: Vec<usize> = cur
                .iter()
                .map(|&b| if b == bv { bu as usize } else { b as usize })
                .collect();
            let rgs = canonical_rgs(&merged);
            let j = match index.get(&rgs) {
                Some(&j) => j,
                None => {
                    let j = parts.len();
                    check_guard(
                        "contraction lattice elements",
                        j as u128 + 1,
                        INSTANCE_LIMIT,
                    )?;
                    index.insert(rgs.clone(), j);
                    parts.push(rgs);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok((parts, edges))
}

/// `P(n)`, partitions of `{1, …, n}` ordered by refinement, so the zero is
/// the discrete partition. Labels list blocks, e.g. `"12|3|4"`.
pub fn partition_lattice(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::OutOfRange("partition lattice size (at least 1)"));
    }
    check_guard(
        "partition lattice elements",
        bell_numbers(n)[n],
        INSTANCE_LIMIT,
    )?;
    if n > 9 {
        return Err(Error::OutOfRange("partition lattice size (at most 9)"));
    }
    let (parts, edges) = connected_partitions(&Graph::complete(n))?;
    let labels = parts.iter().map(|p| partition_label(p, 1)).collect();
    Ok(Lattice::trusted(Poset::from_index_edges(labels, &edges)?))
}

/// The lattice of contractions of `g`: partitions of the vertex set whose
/// cells induce connected subgraphs, ordered by refinement. Vertices keep
/// their 0-based numbers in the labels.
pub fn contraction_lattice(g: &Graph) -> Result<Lattice> {
    if g.vertex_count() == 0 {
        return Err(Error::OutOfRange("graph size (at least 1 vertex)"));
    }
    let (parts, edges) = connected_partitions(g)?;
    let labels = parts.iter().map(|p| partition_label(p, 0)).collect();
    Ok(Lattice::trusted(Poset::from_index_edges(labels, &edges)?))
}

/// Block index per vertex for a contraction-lattice label.
pub fn parse_partition_label(label: &str, n: usize, offset: usize) -> Option<Vec<usize>> {
    let mut block = vec![usize::MAX; n];
    let wide = n + offset > 10;
    for (b, cell) in label.split('|').enumerate() {
        let members: Vec<usize> = if wide {
            cell.split(',')
                .map(|s| s.parse().ok())
                .collect::<Option<_>>()?
        } else {
            cell.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()?
        };
        for m in members {
            let v = m.checked_sub(offset)?;
            if v >= n || block[v] != usize::MAX {
                return None;
            }
            block[v] = b;
        }
    }
    block.iter().all(|&b| b != usize::MAX).then_some(block)
}

/// A poset on `x0..x{n−1}` where each pair `i < j` is related with
/// probability `density`. Density 0 gives an antichain and 1 a chain.
pub fn random_poset(n: usize, density: f64, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = density.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    Poset::from_index_edges(labels, &edges).expect("edges go forward")
}

/// A random labelled tree from a random parent array (vertex `i ≥ 1` gets a
/// parent below it), then a random relabelling.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (perm[i + 1], perm[p]))
        .collect();
    Graph::simplified(n, &edges)
}

/// `G(n, p)`: each edge present with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let edges: Vec<_> = Graph::complete(n)
        .edges
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph { n, edges }
}

/// A connected random graph: a random spanning tree plus `G(n, p)` edges.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let t = random_tree(n, seed);
    let g = random_graph(n, p, seed.wrapping_add(0x9e37_79b9));
    let mut edges = t.edges.clone();
    edges.extend_from_slice(&g.edges);
    Graph::simplified(n, &edges)
}

/// The upper truncation: ranks at or above `k` collapse to the top.
pub fn truncate(l: &RankedLattice, k: usize) -> Result<RankedLattice> {
    l.truncate(k)
}
