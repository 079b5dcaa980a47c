//! Points versus hyperplanes: Dowling–Wilson, Dowling's complement
//! permutation, Basterfield–Kelly and Kung.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::matching::{left_saturating_matching, perfect_matching};
use super::{Lattice, RankedLattice};
use crate::error::{check_guard, Error, Result};
use crate::matrix::{int_to_json, IntMatrix};
use crate::report::Report;

/// Dense determinant checks stay below this many lattice elements.
pub const DET_LIMIT: u128 = 512;

/// Largest lattice for which `G⁻¹` is formed in rationals.
pub const INVERSE_LIMIT: usize = 128;

fn indicator(b: bool) -> BigInt {
    if b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `G_{pq} = 1` if `p ∨ q = 1`, else 0.
fn join_top_matrix(l: &Lattice) -> IntMatrix {
    let n = l.len();
    let one = l.one();
    IntMatrix::from_fn(n, n, |p, q| indicator(l.join(p, q) == one))
}

fn label_pairs(l: &Lattice, sigma: &[usize]) -> Value {
    Value::Array(
        sigma
            .iter()
            .enumerate()
            .map(|(p, &q)| json!([l.label(p), l.label(q)]))
            .collect(),
    )
}

/// `det G = Π_p μ(p, 1) ≠ 0`, a permutation `σ` with `p ∨ σ(p) = 1`, and the
/// partial-sum inequalities `W_0 + … + W_k ≤ W_{d−k} + … + W_d`.
pub fn dowling_wilson_check(l: &RankedLattice) -> Result<Report> {
    check_guard("Dowling–Wilson matrix order", l.len() as u128, DET_LIMIT)?;
    let one = l.one();
    let mut prod = BigInt::one();
    for p in 0..l.len() {
        let m = l.mu(p, one);
        if m.is_zero() {
            return Err(Error::Precondition(format!("mu({}, 1) = 0", l.label(p))));
        }
        prod *= m;
    }
    let det = join_top_matrix(l).determinant();
    let mut report = Report::equal("det G = prod_p mu(p,1)", &det, &prod);
    if det.is_zero() {
        report = report.fail(json!("det G = 0"));
    }
    let Some(sigma) = perfect_matching(l.len(), |p, q| l.join(p, q) == one) else {
        return Ok(report.fail(json!("no permutation on the support of G")));
    };
    if sigma[l.zero()] != one {
        report = report.fail(json!("sigma(0) != 1"));
    }
    let d = l.height();
    if let Some(p) = (0..l.len()).find(|&p| l.rank(p) + l.rank(sigma[p]) < d) {
        report = report.fail(json!({ "rank_sum_below_d": l.label(p) }));
    }
    let w = l.whitney_numbers();
    let mut partial = Vec::new();
    for k in 0..=d {
        let low: usize = w[..=k].iter().sum();
        let high: usize = w[d - k..].iter().sum();
        partial.push(json!([k, low, high]));
        if low > high {
            report = report.fail(json!({ "partial_sum_fails_at": k }));
        }
    }
    Ok(report
        .with_witness(json!({ "sigma": label_pairs(l, &sigma) }))
        .with_witness(json!({ "whitney": w, "partial_sums": partial })))
}

/// Dowling's complement permutation.
///
/// With `H` as in [`dowling_wilson_check`] and `D = diag μ(0, p)`, the matrix
/// `M_{pq} = Σ_{z ≤ q, z ∨ p = 1} μ(0, z)` equals `(Zᵀ D H)_{qp}`, so
/// `M = H D Z` and `det M = Π μ(p,1) Π μ(0,p)`. For `p, q ∈ L'` the entry is
/// the Möbius number of `G(p)_{≤q} = {x ∈ L' : x ∨ p < 1, x ≤ q}`, computed
/// here directly from that subposet. Nonzero entries sit on complement pairs.
pub fn dowling_complement_check(l: &Lattice) -> Result<Report> {
    check_guard(
        "Dowling complement matrix order",
        l.len() as u128,
        DET_LIMIT,
    )?;
    let n = l.len();
    let (zero, one) = (l.zero(), l.one());
    for p in 0..n {
        if l.mu(zero, p).is_zero() || l.mu(p, one).is_zero() {
            return Err(Error::Precondition(format!(
                "mu(0,{0}) mu({0},1) = 0",
                l.label(p)
            )));
        }
    }
    let row0 = l.mobius_row(zero);
    let m = IntMatrix::from_fn(n, n, |p, q| {
        row0.iter()
            .filter(|&&(z, _)| l.leq(z, q) && l.join(z, p) == one)
            .map(|(_, v)| v)
            .sum()
    });
    let h = join_top_matrix(l);
    let dmat = IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            l.mu(zero, i)
        } else {
            BigInt::zero()
        }
    });
    let z = l.zeta_matrix()?;
    let zt_d_h = z.transpose().mul(&dmat).mul(&h);
    let mut report = Report::new(
        "M = H D Z (entrywise: M_pq = (Z^T D H)_qp)",
        Value::Bool(m == zt_d_h.transpose()),
        Value::Bool(true),
        m == zt_d_h.transpose(),
    );
    if m == zt_d_h.scale(&BigInt::from(-1)) {
        report = report.with_witness(json!("M also equals -Z^T D H"));
    }

    let proper = l.proper_part();
    let mut direct_mismatch = Vec::new();
    let mut lemma_violations = Vec::new();
    for &p in &proper {
        let g: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&x| l.join(x, p) != one)
            .collect();
        for &q in &proper {
            let below: Vec<usize> = g.iter().copied().filter(|&x| l.leq(x, q)).collect();
            let mu = l.induced(&below).mobius_number();
            if &mu != m.get(p, q) {
                direct_mismatch.push(json!([l.label(p), l.label(q)]));
            }
            if !mu.is_zero() && !l.is_complement(p, q) {
                lemma_violations.push(json!([l.label(p), l.label(q)]));
            }
        }
    }
    if !direct_mismatch.is_empty() {
        report = report.fail(json!({ "direct_route_mismatch": direct_mismatch }));
    }
    if !lemma_violations.is_empty() {
        report = report.fail(json!({ "nonzero_off_complements": lemma_violations }));
    }
    let off_support: Vec<Value> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| !m.get(p, q).is_zero() && !l.is_complement(p, q))
        .map(|(p, q)| json!([l.label(p), l.label(q)]))
        .collect();
    if !off_support.is_empty() {
        report = report.fail(json!({ "support_off_complements": off_support }));
    }

    let det = m.determinant();
    let expected: BigInt = (0..n).map(|p| l.mu(p, one) * l.mu(zero, p)).product();
    if det != expected || det.is_zero() {
        report = report.fail(json!({
            "det_M": int_to_json(&det),
            "expected": int_to_json(&expected),
        }));
    }
    match perfect_matching(n, |p, q| !m.get(p, q).is_zero()) {
        Some(sigma) => {
            if (0..n).any(|p| !l.is_complement(p, sigma[p])) {
                report = report.fail(json!("matched pair is not a complement"));
            }
            report = report.with_witness(json!({ "sigma": label_pairs(l, &sigma) }));
        }
        None => report = report.fail(json!("no complement permutation on the support of M")),
    }
    Ok(report.with_witness(json!({ "det_M": int_to_json(&det) })))
}

/// `W_1 = W_{d−1}` exactly when the geometric lattice is modular.
///
/// Three tests of modularity are compared: Dedekind's identity on all
/// triples, every element modular, and every hyperplane meeting every line.
/// For small lattices the entries of `G⁻¹` are also checked against
/// `Σ_{x ≤ a∧b} μ(x,a) μ(x,b) / μ(x,1)`.
pub fn basterfield_kelly_check(l: &RankedLattice) -> Result<Report> {
    if !l.is_geometric() {
        return Err(Error::Precondition("lattice is not geometric".into()));
    }
    let d = l.height();
    let w = l.whitney_numbers();
    let (w1, wd1) = if d >= 1 { (w[1], w[d - 1]) } else { (0, 0) };
    let dedekind = l.is_modular_lattice();
    let every_element = (0..l.len()).all(|a| l.is_modular_element(a));
    let lines = l.hyperplanes_meet_lines();
    let equal = w1 == wd1;
    let consistent = equal == dedekind && dedekind == every_element && dedekind == lines;
    let mut report = Report::new(
        "W_1 = W_{d-1} iff modular",
        Value::from(w1),
        Value::from(wd1),
        consistent && w1 <= wd1,
    )
    .with_witness(json!({
        "dedekind": dedekind,
        "every_element_modular": every_element,
        "hyperplanes_meet_lines": lines,
    }));

    if l.len() <= INVERSE_LIMIT {
        let one = l.one();
        let g = join_top_matrix(l).to_rat();
        match g.inverse() {
            None => report = report.fail(json!("G is singular")),
            Some(inv) => {
                let mut bad = Vec::new();
                for a in 0..l.len() {
                    for b in 0..l.len() {
                        let m = l.meet(a, b);
                        let mut s = BigRational::zero();
                        for x in l.down_set(m).iter() {
                            s += BigRational::new(l.mu(x, a) * l.mu(x, b), l.mu(x, one));
                        }
                        let nonzero_ok = m != l.zero() || !s.is_zero();
                        if inv.get(a, b) != &s || !nonzero_ok {
                            bad.push(json!([l.label(a), l.label(b)]));
                        }
                    }
                }
                if !bad.is_empty() {
                    report = report.fail(json!({ "inverse_formula_fails": bad }));
                }
            }
        }
    }
    Ok(report)
}

/// Checks the hypotheses of Kung's theorem for `A, B` with target map
/// `x ↦ x*`, returning the first violating `x`.
fn kung_hypothesis(
    l: &Lattice,
    a_set: &[usize],
    in_b: &[bool],
    star: impl Fn(usize) -> usize,
    mu: impl Fn(usize, usize) -> BigInt,
    join: impl Fn(usize, usize) -> usize,
) -> Option<usize> {
    (0..l.len()).find(|&x| {
        if in_b[x] {
            return false;
        }
        let xs = star(x);
        mu(x, xs).is_zero() || a_set.iter().any(|&a| join(a, x) == xs)
    })
}

/// Kung's theorem with `A` = ranks `≤ k`, `B` = ranks `≥ d − k`, `x* = 1`:
/// the zeta submatrix `Z[A, B]` has full row rank and an injection
/// `φ: A → B` with `φ(a) ≥ a` exists. On modular lattices the
/// join-irreducible/meet-irreducible case `|J(L)| = |M(L)|` is also run.
pub fn kung_check(l: &RankedLattice, k: usize) -> Result<Report> {
    let d = l.height();
    if k > d {
        return Err(Error::OutOfRange("k"));
    }
    let n = l.len();
    let one = l.one();
    let a_set: Vec<usize> = (0..n).filter(|&x| l.rank(x) <= k).collect();
    let b_set: Vec<usize> = (0..n).filter(|&x| l.rank(x) + k >= d).collect();
    let mut in_b = vec![false; n];
    for &b in &b_set {
        in_b[b] = true;
    }
    if let Some(x) = kung_hypothesis(
        l,
        &a_set,
        &in_b,
        |_| one,
        |x, y| l.mu(x, y),
        |a, x| l.join(a, x),
    ) {
        return Err(Error::Precondition(format!(
            "Kung hypothesis fails at `{}`",
            l.label(x)
        )));
    }
    let zab = IntMatrix::from_fn(a_set.len(), b_set.len(), |i, j| {
        indicator(l.leq(a_set[i], b_set[j]))
    });
    let rank = zab.rank();
    let phi = left_saturating_matching(a_set.len(), b_set.len(), |i, j| l.leq(a_set[i], b_set[j]));
    let mut report = Report::new(
        format!("rank Z[A,B] = |A| (k = {k})"),
        Value::from(rank),
        Value::from(a_set.len()),
        rank == a_set.len() && phi.is_some(),
    )
    .with_witness(json!({ "A": a_set.len(), "B": b_set.len() }));
    if let Some(phi) = &phi {
        let pairs: Vec<Value> = phi
            .iter()
            .enumerate()
            .map(|(i, &j)| json!([l.label(a_set[i]), l.label(b_set[j])]))
            .collect();
        report = report.with_witness(json!({ "phi": pairs }));
    }

    if l.is_modular_lattice() {
        let (summary, pass) = dilworth(l)?;
        report = report.with_witness(summary);
        report.pass &= pass;
    }
    Ok(report)
}

/// `|J(L)| = |M(L)|` on a modular lattice via Kung's theorem applied to
/// `L` and to its dual.
fn dilworth(l: &Lattice) -> Result<(Value, bool)> {
    let n = l.len();
    let j = l.join_irreducibles();
    let m = l.meet_irreducibles();
    let mut in_m = vec![false; n];
    for &x in &m {
        in_m[x] = true;
    }
    let mut in_j = vec![false; n];
    for &x in &j {
        in_j[x] = true;
    }
    let up_star = |x: usize| l.join_all(l.upper_covers(x).iter().copied());
    let down_star = |x: usize| l.meet_all(l.lower_covers(x).iter().copied());
    let primal = kung_hypothesis(
        l,
        &j,
        &in_m,
        up_star,
        |x, y| l.mu(x, y),
        |a, x| l.join(a, x),
    );
    // In the dual, joins are meets and μ_dual(x, y) = μ(y, x).
    let dual = kung_hypothesis(
        l,
        &m,
        &in_j,
        down_star,
        |x, y| l.mu(y, x),
        |a, x| l.meet(a, x),
    );
    if let Some(x) = primal.or(dual) {
        return Err(Error::Precondition(format!(
            "Kung hypothesis for J/M fails at `{}`",
            l.label(x)
        )));
    }
    let zjm = IntMatrix::from_fn(j.len(), m.len(), |a, b| indicator(l.leq(j[a], m[b])));
    let rank = zjm.rank();
    let pass = rank == j.len() && rank == m.len();
    let summary = json!({
        "identity": "|J(L)| = |M(L)|",
        "J": j.len(),
        "M": m.len(),
        "rank": rank,
    });
    Ok((summary, pass))
}
