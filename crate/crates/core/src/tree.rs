//! Distance matrices of trees.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::instances::Graph;
use crate::matrix::{int_to_json, IntMatrix, RatMatrix};
use crate::report::Report;

/// A tree on `0..n` given by parent pointers; the root has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    root: usize,
    children: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl RootedTree {
    pub fn new(parent: Vec<Option<usize>>) -> Result<RootedTree> {
        let n = parent.len();
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::Precondition(format!(
                "a rooted tree needs exactly one root, found {}",
                roots.len()
            )));
        }
        let root = roots[0];
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::Precondition(format!("parent {p} out of range")));
                }
                children[p].push(v);
            }
        }
        // root-first breadth-first order, children by vertex number
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            queue.extend(children[u].iter().copied());
        }
        if order.len() != n {
            return Err(Error::Precondition(
                "parent array has a cycle or a vertex unreachable from the root".into(),
            ));
        }
        Ok(RootedTree {
            parent,
            root,
            children,
            order,
        })
    }

    /// Roots a tree given as a graph at `root`.
    pub fn from_graph(g: &Graph, root: usize) -> Result<RootedTree> {
        let n = g.vertex_count();
        if root >= n {
            return Err(Error::Precondition(format!("root {root} out of range")));
        }
        if g.edges().len() + 1 != n || !g.is_connected() {
            return Err(Error::Precondition("graph is not a tree".into()));
        }
        let adj = g.adjacency();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        RootedTree::new(parent)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in root-first breadth-first order.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.len())
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect();
        Graph::simplified(self.len(), &edges)
    }

    fn depth(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                d[v] = d[p] + 1;
            }
        }
        d
    }

    /// Whether `u` lies on the path from the root to `v`.
    pub fn is_ancestor(&self, u: usize, mut v: usize) -> bool {
        loop {
            if u == v {
                return true;
            }
            match self.parent[v] {
                Some(p) => v = p,
                None => return false,
            }
        }
    }
}

/// `D[u][v]` = path length, in vertex order.
pub fn distance_matrix(t: &RootedTree) -> IntMatrix {
    let n = t.len();
    let depth = t.depth();
    IntMatrix::from_fn(n, n, |u, v| {
        let (mut a, mut b) = (u, v);
        while depth[a] > depth[b] {
            a = t.parent[a].unwrap();
        }
        while depth[b] > depth[a] {
            b = t.parent[b].unwrap();
        }
        while a != b {
            a = t.parent[a].unwrap();
            b = t.parent[b].unwrap();
        }
        BigInt::from(depth[u] + depth[v] - 2 * depth[a])
    })
}

/// Distance matrix with rows and columns in breadth-first order.
pub fn distance_matrix_bfs(t: &RootedTree) -> IntMatrix {
    distance_matrix(t).permuted(t.bfs_order())
}

/// Zeta matrix of the path order (`u ≤ v` when `u` is on the path from
/// the root to `v`), in breadth-first order; unit upper triangular.
pub fn tree_zeta(t: &RootedTree) -> IntMatrix {
    let o = t.bfs_order();
    IntMatrix::from_fn(t.len(), t.len(), |i, j| {
        if t.is_ancestor(o[i], o[j]) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// `H = 1e₁ᵀ + e₁1ᵀ − 2I`.
pub fn h_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        let v = (i == 0) as i64 + (j == 0) as i64 - 2 * (i == j) as i64;
        BigInt::from(v)
    })
}

/// `H⁻¹ = (1/(n−1)) [[2, 1ᵀ], [1, ½(J − (n−1)I)]]`.
pub fn h_inverse(n: usize) -> Result<RatMatrix> {
    if n < 2 {
        return Err(Error::OutOfRange("tree size (at least 2)"));
    }
    let k = BigRational::from_integer(BigInt::from(n - 1));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(RatMatrix::from_fn(n, n, |i, j| {
        let v = match (i, j) {
            (0, 0) => BigRational::from_integer(2.into()),
            (0, _) | (_, 0) => BigRational::one(),
            _ if i == j => &half * (BigRational::one() - &k),
            _ => half.clone(),
        };
        v / &k
    }))
}

/// `det H = ½(n−1)(−2)^{n−1}`.
pub fn det_h_closed_form(n: usize) -> BigInt {
    let p = BigInt::from(-2).pow((n - 1) as u32);
    BigInt::from(n - 1) * p / 2
}

/// `(n−1)(−1)^{n−1} 2^{n−2}`.
pub fn graham_pollak_closed_form(n: usize) -> BigInt {
    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    BigInt::from(n - 1) * sign * BigInt::from(2).pow((n - 2) as u32)
}

/// Checks `D = ZᵀHZ` in breadth-first order, and the shape of `Z⁻¹`:
/// unit diagonal, `−1` on (parent, child), zero elsewhere.
pub fn graham_lovasz_check(t: &RootedTree) -> Report {
    let n = t.len();
    let z = tree_zeta(t);
    let d = distance_matrix_bfs(t);
    let zhz = z.transpose().mul(&h_matrix(n)).mul(&z);
    let mut report = Report::new("D(T) = Z^T H Z", d.to_json(), zhz.to_json(), d == zhz);
    let zi = z.to_rat().inverse().expect("unit triangular");
    let o = t.bfs_order();
    let bad = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let expect = if i == j {
                1
            } else if t.parent(o[j]) == Some(o[i]) {
                -1
            } else {
                0
            };
            zi.get(i, j) != &BigRational::from_integer(expect.into())
        });
    if let Some((i, j)) = bad {
        report = report.fail(json!({ "zeta_inverse_entry": [o[i], o[j]] }));
    }
    report
}

/// Exact `det D(T)` and the closed form.
pub fn graham_pollak_det(t: &RootedTree) -> Result<(BigInt, BigInt)> {
    if t.len() < 2 {
        return Err(Error::OutOfRange("tree size (at least 2)"));
    }
    Ok((
        distance_matrix(t).determinant(),
        graham_pollak_closed_form(t.len()),
    ))
}

/// `D⁻¹ = (1/(2n−2)) ββᵀ − ½(Δ − A)` with `β = (2I − Δ)1`, in vertex order.
pub fn distance_inverse(t: &RootedTree) -> Result<RatMatrix> {
    let n = t.len();
    if n < 2 {
        return Err(Error::OutOfRange("tree size (at least 2)"));
    }
    let g = t.to_graph();
    let adj = g.adjacency();
    let beta: Vec<BigInt> = adj.iter().map(|a| BigInt::from(2) - a.len()).collect();
    let scale = BigInt::from(2 * n - 2);
    Ok(RatMatrix::from_fn(n, n, |u, v| {
        let outer = BigRational::new(&beta[u] * &beta[v], scale.clone());
        let lap = if u == v {
            BigInt::from(adj[u].len())
        } else if adj[u].contains(&v) {
            BigInt::from(-1)
        } else {
            BigInt::zero()
        };
        outer - BigRational::new(lap, BigInt::from(2))
    }))
}

/// `D · D⁻¹ = I` for the closed-form inverse, which also agrees with
/// `Z⁻¹ H⁻¹ Z⁻ᵀ`.
pub fn distance_inverse_check(t: &RootedTree) -> Result<Report> {
    let inv = distance_inverse(t)?;
    let d = distance_matrix(t).to_rat();
    let prod = d.mul(&inv);
    let mut report = Report::new(
        "D(T) * (ββ^T/(2n-2) - (Δ-A)/2) = I",
        inv.to_json(),
        json!("identity"),
        prod.is_identity(),
    );
    let zi = tree_zeta(t).to_rat().inverse().expect("unit triangular");
    let via_h = zi.mul(&h_inverse(t.len())?).mul(&zi.transpose());
    let o = t.bfs_order();
    let n = t.len();
    if !(0..n).all(|i| (0..n).all(|j| via_h.get(i, j) == inv.get(o[i], o[j]))) {
        report = report.fail(json!("closed form differs from Z^-1 H^-1 Z^-T"));
    }
    Ok(report)
}

/// `H · H⁻¹ = I` and `det H = ½(n−1)(−2)^{n−1}`.
pub fn h_matrix_check(n: usize) -> Result<Report> {
    let h = h_matrix(n);
    let inv = h_inverse(n)?;
    let det = h.determinant();
    let closed = det_h_closed_form(n);
    let mut report = Report::equal("det H = (n-1)(-2)^(n-1)/2", &det, &closed);
    if !h.to_rat().mul(&inv).is_identity() {
        report = report.fail(json!("H * H^-1 != I"));
    }
    Ok(report.with_witness(json!({ "n": n, "det": int_to_json(&det) })))
}
