//! Functions of strength `t` on meet semilattices and lower bounds on
//! their support.

use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::inversion::{invert_up, up_sum};
use crate::lattices::Lattice;
use crate::matrix::int_to_json;
use crate::poset::Poset;
use crate::report::Report;

/// A poset with a zero in which every pair has a meet.
#[derive(Clone, Debug)]
pub struct MeetSemilattice {
    poset: Poset,
    meet: Vec<u32>,
    height: Vec<usize>,
}

impl Deref for MeetSemilattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl MeetSemilattice {
    pub fn new(poset: Poset) -> Result<MeetSemilattice> {
        if poset.bottom().is_none() {
            return Err(Error::Precondition("meet semilattice needs a zero".into()));
        }
        let n = poset.len();
        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let down = poset.down_set(a).intersection(poset.down_set(b));
                match down.last() {
                    Some(m) if down.is_subset(poset.down_set(m)) => meet[a * n + b] = m as u32,
                    _ => {
                        return Err(Error::NotALattice(
                            poset.label(a).to_string(),
                            poset.label(b).to_string(),
                            "greatest lower bound",
                        ))
                    }
                }
            }
        }
        let height = poset.heights();
        Ok(MeetSemilattice {
            poset,
            meet,
            height,
        })
    }

    pub fn from_lattice(l: &Lattice) -> MeetSemilattice {
        let n = l.len();
        let meet = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| l.meet(a, b) as u32)
            .collect();
        MeetSemilattice {
            poset: l.poset().clone(),
            meet,
            height: l.heights(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.poset.len() + b] as usize
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// Height: longest chain down to a minimal element (the zero).
    pub fn height_of(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn max_height(&self) -> usize {
        self.height.iter().copied().max().unwrap_or(0)
    }
}

/// The largest `t` such that `Σ_{x≥a} f(x) = 0` for every `a` of height at
/// most `t`; `−1` if some height-0 sum fails, the full height when none do.
pub fn strength(p: &MeetSemilattice, f: &[BigInt]) -> Result<i64> {
    let g = up_sum(p, f)?;
    let h = p.max_height();
    for t in 0..=h {
        let ok = (0..p.len())
            .filter(|&a| p.height_of(a) == t)
            .all(|a| g[a].is_zero());
        if !ok {
            return Ok(t as i64 - 1);
        }
    }
    Ok(h as i64)
}

/// `f_b` on `[0, b]`, by both routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub elements: Vec<usize>,
    pub by_inversion: Vec<BigInt>,
    pub by_fibres: Vec<BigInt>,
}

impl Restriction {
    pub fn agree(&self) -> bool {
        self.by_inversion == self.by_fibres
    }

    /// `f_b` extended by zero to all of `P`.
    pub fn extended(&self, n: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (k, &c) in self.elements.iter().enumerate() {
            out[c] = self.by_fibres[k].clone();
        }
        out
    }
}

/// `f_b`: Möbius inversion of `f̂` on `[0, b]`, and `Σ_{x∧b=c} f(x)`.
pub fn restrict_to_interval(p: &MeetSemilattice, f: &[BigInt], b: usize) -> Result<Restriction> {
    let fhat = up_sum(p, f)?;
    let elements = p.interval_elements(p.zero(), b);
    let interval = p.induced(&elements);
    // induced keeps the given order, which is already a linear extension
    let local: Vec<BigInt> = elements.iter().map(|&c| fhat[c].clone()).collect();
    let by_inversion = invert_up(&interval, &local)?;
    let mut by_fibres = vec![BigInt::zero(); elements.len()];
    let pos: std::collections::HashMap<usize, usize> =
        elements.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    for (x, fx) in f.iter().enumerate() {
        if !fx.is_zero() {
            by_fibres[pos[&p.meet(x, b)]] += fx;
        }
    }
    Ok(Restriction {
        elements,
        by_inversion,
        by_fibres,
    })
}

/// `Σ_{c≤b} |μ(c, b)|`.
pub fn support_lower_bound(p: &Poset, b: usize) -> BigInt {
    p.down_set(b).iter().map(|c| p.mu(c, b).abs()).sum()
}

/// `Σ_{c≥b} |μ(b, c)|`, the same sum over the upper interval.
pub fn upper_mobius_mass(p: &Poset, b: usize) -> BigInt {
    p.mobius_row(b).into_iter().map(|(_, m)| m.abs()).sum()
}

/// For `f` of strength `t` supported on heights at most `t + 1`, and the
/// first `b` of height `t + 1` with `f̂(b) ≠ 0`: checks
/// `μ(c,b) f̂(b) = Σ_{x∧b=c} f(x)` for each `c ≤ b`, then
/// `|supp f| ≥ Σ_{c≤b} |μ(c,b)|`, and on equality that `f` takes only the
/// values `0, ±f(b)`.
pub fn verify_support_theorem(p: &MeetSemilattice, f: &[BigInt]) -> Result<Report> {
    let t = strength(p, f)?;
    let support: Vec<usize> = (0..p.len()).filter(|&x| !f[x].is_zero()).collect();
    if support.is_empty() {
        return Ok(Report::new(
            "support bound (zero function)",
            json!(0),
            json!(0),
            true,
        ));
    }
    if t < 0 {
        return Err(Error::Precondition(
            "f has no strength (a height-0 sum is nonzero)".into(),
        ));
    }
    let t = t as usize;
    if let Some(&x) = support.iter().find(|&&x| p.height_of(x) > t + 1) {
        return Err(Error::Precondition(format!(
            "f is nonzero at `{}` of height {} > t + 1 = {}",
            p.label(x),
            p.height_of(x),
            t + 1
        )));
    }
    let fhat = up_sum(p, f)?;
    let Some(b) = (0..p.len()).find(|&b| p.height_of(b) == t + 1 && !fhat[b].is_zero()) else {
        return Err(Error::Precondition(format!(
            "no element of height {} has nonzero up-sum",
            t + 1
        )));
    };
    let bound = support_lower_bound(p, b);
    let size = BigInt::from(support.len());
    let mut report = Report::new(
        format!("|supp f| >= sum_{{c <= {}}} |mu(c,b)|", p.label(b)),
        int_to_json(&size),
        int_to_json(&bound),
        size >= bound,
    );
    let r = restrict_to_interval(p, f, b)?;
    for (k, &c) in r.elements.iter().enumerate() {
        if p.mu(c, b) * &fhat[b] != r.by_fibres[k] {
            report = report.fail(json!({ "fibre_sum_mismatch_at": p.label(c) }));
        }
    }
    if !r.agree() {
        report = report.fail(json!("restriction routes disagree"));
    }
    let unit = support.iter().all(|&x| f[x].abs() == f[b].abs());
    let literal = support.iter().all(|&x| f[x].abs() == BigInt::from(1));
    if size == bound && !unit {
        report = report.fail(json!("equality but f takes values other than 0, ±f(b)"));
    }
    Ok(report.with_witness(json!({
        "strength": t,
        "b": p.label(b),
        "equality": size == bound,
        "values_are_0_pm_fb": unit,
        "values_are_0_pm_1": literal,
    })))
}

/// Closed forms of `Σ_{c≤b} |μ(c,b)|` for `B(n)` (`2^{t+1}`) and `B_q(n)`
/// (`Π_{i=0}^{t} (1 + q^i)`), with `t + 1` the rank of `b`.
pub fn boolean_bound(t: u32) -> BigInt {
    BigInt::from(2).pow(t + 1)
}

pub fn subspace_bound(q: u32, t: u32) -> BigInt {
    (0..=t)
        .map(|i| BigInt::from(1) + BigInt::from(q).pow(i))
        .product()
}

/// The factorial claimed for `P(n)` at a partition with `n − k` cells.
pub fn partition_claim(n: usize, k: usize) -> BigInt {
    (1..=(n - k)).map(BigInt::from).product()
}

/// `Σ_{c≤b} |μ(c,b)|` over `P(n)`, compared per rank with `(n−k)!` for
/// both the lower sum and the upper sum `Σ_{c≥b} |μ(b,c)|`.
pub fn partition_bound_table(l: &Lattice) -> Value {
    let n = l.len();
    let heights = l.heights();
    let cells = |x: usize| l.label(x).split('|').count();
    let total = cells(l.zero());
    let rows: Vec<Value> = (0..n)
        .map(|b| {
            let k = total - cells(b);
            json!({
                "b": l.label(b),
                "k": k,
                "rank": heights[b],
                "lower_sum": int_to_json(&support_lower_bound(l, b)),
                "upper_sum": int_to_json(&upper_mobius_mass(l, b)),
                "claim": int_to_json(&partition_claim(total, k)),
            })
        })
        .collect();
    Value::Array(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{boolean_lattice, partition_lattice, subspace_lattice};

    fn b3() -> (Lattice, MeetSemilattice) {
        let l = boolean_lattice(3).unwrap();
        let m = MeetSemilattice::from_lattice(&l);
        (l, m)
    }

    fn alternating(l: &Lattice, top: usize) -> Vec<BigInt> {
        (0..l.len())
            .map(|x| {
                if !l.leq(x, top) {
                    BigInt::zero()
                } else if l.label(x).len().is_multiple_of(2) {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                }
            })
            .collect()
    }

    #[test]
    fn strengths() {
        let (l, m) = b3();
        assert_eq!(strength(&m, &vec![BigInt::zero(); 8]).unwrap(), 3);
        assert_eq!(strength(&m, &alternating(&l, l.one())).unwrap(), 2);
        let mut ind = vec![BigInt::zero(); 8];
        ind[3] = 1.into();
        assert_eq!(strength(&m, &ind).unwrap(), -1);
    }

    #[test]
    fn restriction_routes() {
        let (l, m) = b3();
        let f = alternating(&l, l.one());
        let r = restrict_to_interval(&m, &f, l.one()).unwrap();
        assert!(r.agree());
        assert_eq!(r.extended(8), f);
        let b = l.index_of("12").unwrap();
        let r = restrict_to_interval(&m, &f, b).unwrap();
        assert!(r.agree());
        let fhat = up_sum(&m, &f).unwrap();
        for (k, &c) in r.elements.iter().enumerate() {
            assert_eq!(r.by_fibres[k], l.mu(c, b) * &fhat[b]);
        }
        let z = restrict_to_interval(&m, &vec![BigInt::zero(); 8], b).unwrap();
        assert!(z.by_fibres.iter().all(Zero::is_zero));
    }

    #[test]
    fn support_theorem() {
        let (l, m) = b3();
        let b = l.index_of("12").unwrap();
        let f = alternating(&l, b);
        let r = verify_support_theorem(&m, &f).unwrap();
        assert!(r.pass, "{}", r.to_json());
        assert_eq!(r.lhs, json!(4));
        assert_eq!(r.rhs, json!(4));
        let doubled: Vec<BigInt> = f.iter().map(|x| x * 2).collect();
        let r = verify_support_theorem(&m, &doubled).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs, json!(4));
        assert!(
            verify_support_theorem(&m, &vec![BigInt::zero(); 8])
                .unwrap()
                .pass
        );
    }

    #[test]
    fn closed_forms() {
        let l = boolean_lattice(4).unwrap();
        let b = l.index_of("12").unwrap();
        assert_eq!(support_lower_bound(&l, b), boolean_bound(1));
        let q = subspace_lattice(2, 3).unwrap().ranked().unwrap();
        let b = q.of_rank(2)[0];
        assert_eq!(support_lower_bound(&q, b), 6.into());
        assert_eq!(subspace_bound(2, 1), 6.into());
        let p4 = partition_lattice(4).unwrap();
        assert_eq!(support_lower_bound(&p4, p4.one()), 26.into());
        assert_eq!(upper_mobius_mass(&p4, p4.zero()), 24.into());
    }

    #[test]
    fn non_lattice_semilattice() {
        let p = Poset::from_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap();
        let m = MeetSemilattice::new(p).unwrap();
        assert_eq!(m.meet(1, 2), 0);
        let bad = Poset::antichain(&["a", "b"]).unwrap();
        assert!(MeetSemilattice::new(bad).is_err());
    }
}
