//! Weisner, cutsets, Walker's complement theorem and modular factorization.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::{Lattice, RankedLattice};
use crate::error::{check_guard, Error, Result};
use crate::matrix::int_to_json;
use crate::report::Report;

/// `μ(0,1) = −Σ_{x ∨ a = 1, x < 1} μ(0, x)` for `a ≠ 0`.
pub fn weisner_check(l: &Lattice, a: usize) -> Result<Report> {
    if a == l.zero() {
        return Err(Error::Precondition("Weisner's identity needs a ≠ 0".into()));
    }
    let one = l.one();
    let mut rhs = BigInt::zero();
    let mut terms = Vec::new();
    for (x, m) in l.mobius_row(l.zero()) {
        if x != one && l.join(x, a) == one {
            terms.push(json!([l.label(x), int_to_json(&m)]));
            rhs -= m;
        }
    }
    Ok(Report::equal(
        format!("mu(0,1) = -sum_{{x v {} = 1, x < 1}} mu(0,x)", l.label(a)),
        &l.mu01(),
        &rhs,
    )
    .with_witness(Value::Array(terms)))
}

/// `None` when every maximal chain from 0 to 1 meets `c`; otherwise a
/// saturated chain avoiding `c`.
pub fn is_cutset(l: &Lattice, c: &[usize]) -> Option<Vec<usize>> {
    let n = l.len();
    let mut blocked = vec![false; n];
    for &x in c {
        blocked[x] = true;
    }
    if blocked[l.zero()] || blocked[l.one()] {
        return None;
    }
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([l.zero()]);
    seen[l.zero()] = true;
    while let Some(x) = queue.pop_front() {
        if x == l.one() {
            let mut chain = vec![x];
            let mut cur = x;
            while cur != l.zero() {
                cur = prev[cur];
                chain.push(cur);
            }
            chain.reverse();
            return Some(chain);
        }
        for &y in l.upper_covers(x) {
            if !blocked[y] && !seen[y] {
                seen[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// `Σ_{k≥1} (−1)^k a_k` where `a_k` counts the `k`-subsets of the cutset
/// whose meet and join both lie outside `L'`.
///
/// For subsets of `L'` this is "meet 0 and join 1". Counting the subsets
/// outside `L'` is what makes a cutset such as `{1}` in a two-element chain
/// come out right.
pub fn cutset_mobius(l: &Lattice, c: &[usize]) -> Result<(BigInt, Vec<u64>)> {
    if let Some(chain) = is_cutset(l, c) {
        let names: Vec<&str> = chain.iter().map(|&x| l.label(x)).collect();
        return Err(Error::Precondition(format!(
            "not a cutset: chain {} avoids it",
            names.join(" < ")
        )));
    }
    check_guard("cutset subsets (2^|C|)", 1u128 << c.len().min(127), 1 << 24)?;
    let mut c = c.to_vec();
    c.sort_unstable();
    c.dedup();
    let (zero, one) = (l.zero(), l.one());
    let outside = |x: usize| x == zero || x == one;
    let mut a = vec![0u64; c.len() + 1];
    // Enumerate nonempty subsets by mask, carrying join and meet via the
    // lowest set bit so each subset costs one lattice operation pair.
    let m = c.len();
    let mut joins = vec![zero; 1 << m];
    let mut meets = vec![one; 1 << m];
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        joins[mask] = l.join(joins[rest], c[low]);
        meets[mask] = l.meet(meets[rest], c[low]);
        if outside(joins[mask]) && outside(meets[mask]) {
            a[mask.count_ones() as usize] += 1;
        }
    }
    let mut total = BigInt::zero();
    for (k, &ak) in a.iter().enumerate().skip(1) {
        if k % 2 == 0 {
            total += ak;
        } else {
            total -= ak;
        }
    }
    Ok((total, a))
}

/// `μ(L' ∖ a^−) = 0` for `a ∈ L'`.
pub fn walker_complement_check(l: &Lattice, a: usize) -> Result<Report> {
    if a == l.zero() || a == l.one() {
        return Err(Error::Precondition(format!(
            "`{}` is not in L'",
            l.label(a)
        )));
    }
    let comps = l.complements(a);
    let rest: Vec<usize> = l
        .proper_part()
        .into_iter()
        .filter(|x| !comps.contains(x))
        .collect();
    let mu = l.induced(&rest).mobius_number();
    let names: Vec<&str> = comps.iter().map(|&x| l.label(x)).collect();
    Ok(Report::equal(
        format!("mu(L' \\ {}^-) = 0", l.label(a)),
        &mu,
        &BigInt::zero(),
    )
    .with_witness(json!({ "complements": names })))
}

/// `μ(0,1) = μ(0,a) Σ_{x ∈ a^−} μ(0,x)` for a modular element `0 < a < 1`.
///
/// Also checks, for every complement `x`, that `y ↦ y ∨ x` is an order
/// isomorphism from `[x ∧ a, a]` onto `[x, x ∨ a]`.
pub fn modular_factorization(l: &RankedLattice, a: usize) -> Result<Report> {
    if a == l.zero() || a == l.one() {
        return Err(Error::Precondition(
            "modular factorization needs 0 < a < 1".into(),
        ));
    }
    if !l.is_modular_element(a) {
        return Err(Error::Precondition(format!(
            "`{}` is not a modular element",
            l.label(a)
        )));
    }
    let zero = l.zero();
    let comps = l.complements(a);
    let sum: BigInt = comps.iter().map(|&x| l.mu(zero, x)).sum();
    let rhs = l.mu(zero, a) * &sum;
    let mut report = Report::equal(
        format!(
            "mu(0,1) = mu(0,{0}) * sum_{{x in {0}^-}} mu(0,x)",
            l.label(a)
        ),
        &l.mu01(),
        &rhs,
    );
    for &x in &comps {
        let direct = {
            let lo_elems = l.interval_elements(l.meet(x, a), a);
            let images: Vec<usize> = lo_elems.iter().map(|&y| l.join(y, x)).collect();
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted == l.interval_elements(x, l.join(x, a))
                && lo_elems.iter().enumerate().all(|(i, &u)| {
                    lo_elems
                        .iter()
                        .enumerate()
                        .all(|(j, &v)| l.leq(u, v) == l.leq(images[i], images[j]))
                })
        };
        if !direct {
            report = report.fail(json!({ "interval_isomorphism_fails_at": l.label(x) }));
        }
    }
    Ok(report.with_witness(json!({
        "complements": comps.len(),
        "mu_0_a": int_to_json(&l.mu(zero, a)),
        "complement_sum": int_to_json(&sum),
    })))
}

/// Rank test for a modular element, cross-checked against the antichain
/// criterion on its complements. A disagreement fails the report.
pub fn modular_element_report(l: &RankedLattice, a: usize) -> Report {
    let by_rank = l.is_modular_element(a);
    let by_antichain = l.complements_form_antichain(a);
    Report::new(
        format!("{} is modular (rank test = antichain test)", l.label(a)),
        Value::Bool(by_rank),
        Value::Bool(by_antichain),
        by_rank == by_antichain,
    )
}
