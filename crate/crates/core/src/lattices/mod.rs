//! Lattices, ranks, and the predicates used by the identity checks.

mod deletion;
mod identities;
mod matching;
mod whitney;

use std::ops::Deref;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{check_guard, Error, Result};
use crate::poset::Poset;

pub use deletion::point_deletion;
pub use identities::{
    cutset_mobius, is_cutset, modular_element_report, modular_factorization,
    walker_complement_check, weisner_check,
};
pub use matching::perfect_matching;
pub use whitney::{
    basterfield_kelly_check, dowling_complement_check, dowling_wilson_check, kung_check,
};

/// Lattices larger than this keep no dense join/meet tables; joins and meets
/// are then found on demand from the order bitsets.
pub const TABLE_LIMIT: usize = 4096;

/// Largest poset [`Lattice::new`] will verify pair by pair.
pub const VERIFY_LIMIT: u128 = 5000;

/// A finite lattice: a poset in which every pair has a join and a meet.
///
/// Because elements are stored in a linear extension, the zero is index 0
/// and the one is the last index.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<u32>,
    meet: Vec<u32>,
}

impl Deref for Lattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl Lattice {
    /// Checks that every pair has a least upper and greatest lower bound.
    ///
    /// On failure the error names a witness pair.
    pub fn new(poset: Poset) -> Result<Lattice> {
        check_guard(
            "lattice verification elements",
            poset.len() as u128,
            VERIFY_LIMIT,
        )?;
        if poset.is_empty() {
            return Err(Error::Precondition(
                "the empty poset is not a lattice".into(),
            ));
        }
        let n = poset.len();
        let failure = (0..n).into_par_iter().find_map_any(|a| {
            for b in a + 1..n {
                let up = poset.up_set(a).intersection(poset.up_set(b));
                match up.first() {
                    None => return Some((a, b, "upper bound")),
                    Some(j) if !up.is_subset(poset.up_set(j)) => {
                        return Some((a, b, "least upper bound"))
                    }
                    _ => {}
                }
                let down = poset.down_set(a).intersection(poset.down_set(b));
                match down.last() {
                    None => return Some((a, b, "lower bound")),
                    Some(m) if !down.is_subset(poset.down_set(m)) => {
                        return Some((a, b, "greatest lower bound"))
                    }
                    _ => {}
                }
            }
            None
        });
        if let Some((a, b, what)) = failure {
            return Err(Error::NotALattice(
                poset.label(a).to_string(),
                poset.label(b).to_string(),
                what,
            ));
        }
        Ok(Self::trusted(poset))
    }

    /// Wraps a poset known to be a lattice (generator output).
    pub(crate) fn trusted(poset: Poset) -> Lattice {
        let n = poset.len();
        let (join, meet) = if n <= TABLE_LIMIT {
            let rows: Vec<(Vec<u32>, Vec<u32>)> = (0..n)
                .into_par_iter()
                .map(|a| {
                    let j = (0..n).map(|b| lazy_join(&poset, a, b) as u32).collect();
                    let m = (0..n).map(|b| lazy_meet(&poset, a, b) as u32).collect();
                    (j, m)
                })
                .collect();
            let mut join = Vec::with_capacity(n * n);
            let mut meet = Vec::with_capacity(n * n);
            for (j, m) in rows {
                join.extend(j);
                meet.extend(m);
            }
            (join, meet)
        } else {
            (Vec::new(), Vec::new())
        };
        Lattice { poset, join, meet }
    }

    /// A lattice from a finite join-semilattice with zero: meets are the
    /// joins of common lower bounds, so only joins need to exist.
    pub fn from_join_semilattice(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        if poset.bottom().is_none() {
            return Err(Error::Precondition("join-semilattice needs a zero".into()));
        }
        for a in 0..n {
            for b in a + 1..n {
                let up = poset.up_set(a).intersection(poset.up_set(b));
                match up.first() {
                    Some(j) if up.is_subset(poset.up_set(j)) => {}
                    _ => {
                        return Err(Error::NotALattice(
                            poset.label(a).to_string(),
                            poset.label(b).to_string(),
                            "least upper bound",
                        ))
                    }
                }
            }
        }
        Ok(Self::trusted(poset))
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.poset.len() - 1
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        if self.join.is_empty() {
            lazy_join(&self.poset, a, b)
        } else {
            self.join[a * self.len() + b] as usize
        }
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        if self.meet.is_empty() {
            lazy_meet(&self.poset, a, b)
        } else {
            self.meet[a * self.len() + b] as usize
        }
    }

    /// Join of a family; the empty join is zero.
    pub fn join_all(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.zero(), |acc, x| self.join(acc, x))
    }

    /// Meet of a family; the empty meet is one.
    pub fn meet_all(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.one(), |acc, x| self.meet(acc, x))
    }

    /// `L'`: every element except zero and one.
    pub fn proper_part(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.zero() && x != self.one())
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers(self.zero()).to_vec()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.lower_covers(self.one()).to_vec()
    }

    pub fn is_complement(&self, a: usize, x: usize) -> bool {
        self.meet(a, x) == self.zero() && self.join(a, x) == self.one()
    }

    /// `a^−`, the complements of `a`.
    pub fn complements(&self, a: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_complement(a, x))
            .collect()
    }

    pub fn is_complemented(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).any(|x| self.is_complement(a, x)))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len())
            .all(|x| self.join_all(atoms.iter().copied().filter(|&p| self.leq(p, x))) == x)
    }

    /// Dedekind's identity with equality: `a ∨ (b ∧ c) = (a ∨ b) ∧ c`
    /// for all `a ≤ c` and all `b`.
    pub fn is_modular_lattice(&self) -> bool {
        let n = self.len();
        (0..n).into_par_iter().all(|a| {
            self.up_set(a).iter().all(|c| {
                (0..n).all(|b| self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), c))
            })
        })
    }

    /// `0` and every element covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x == self.zero() || self.lower_covers(x).len() == 1)
            .collect()
    }

    /// `1` and every element covered by exactly one element.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x == self.one() || self.upper_covers(x).len() == 1)
            .collect()
    }

    /// `μ(0, 1)`.
    pub fn mu01(&self) -> BigInt {
        self.mu(self.zero(), self.one())
    }

    /// Closed interval `[a, b]` as a lattice.
    pub fn interval_lattice(&self, a: usize, b: usize) -> Result<Lattice> {
        Ok(Lattice::trusted(self.poset.interval(a, b)?))
    }

    /// Attaches the rank function, checking the Jordan–Dedekind condition.
    pub fn ranked(self) -> Result<RankedLattice> {
        RankedLattice::new(self)
    }
}

fn lazy_join(p: &Poset, a: usize, b: usize) -> usize {
    p.up_set(a)
        .intersection(p.up_set(b))
        .first()
        .expect("lattice pair has an upper bound")
}

fn lazy_meet(p: &Poset, a: usize, b: usize) -> usize {
    p.down_set(a)
        .intersection(p.down_set(b))
        .last()
        .expect("lattice pair has a lower bound")
}

/// Builds and verifies a lattice from a poset.
pub fn as_lattice(p: &Poset) -> Result<Lattice> {
    Lattice::new(p.clone())
}

/// A lattice whose maximal chains between any two elements share a length.
#[derive(Clone, Debug)]
pub struct RankedLattice {
    lattice: Lattice,
    rank: Vec<usize>,
    height: usize,
}

impl Deref for RankedLattice {
    type Target = Lattice;

    fn deref(&self) -> &Lattice {
        &self.lattice
    }
}

impl RankedLattice {
    /// Rank is the longest chain from 0; every cover must raise it by one.
    pub fn new(lattice: Lattice) -> Result<RankedLattice> {
        let rank = lattice.heights();
        for &(a, b) in lattice.covers() {
            if rank[b] != rank[a] + 1 {
                return Err(Error::NotRanked {
                    via: lattice.label(a).to_string(),
                    hi: lattice.label(b).to_string(),
                });
            }
        }
        let height = rank[lattice.one()];
        Ok(RankedLattice {
            lattice,
            rank,
            height,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// `d = r(1)`.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn of_rank(&self, k: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.rank[x] == k).collect()
    }

    /// `W_k`, the number of elements of rank `k`, for `k = 0..=d`.
    pub fn whitney_numbers(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.height + 1];
        for &r in &self.rank {
            w[r] += 1;
        }
        w
    }

    /// `r(a ∧ b) + r(a ∨ b) ≤ r(a) + r(b)` for every pair.
    pub fn is_semimodular(&self) -> bool {
        let n = self.len();
        (0..n).into_par_iter().all(|a| {
            (a + 1..n).all(|b| {
                self.rank[self.meet(a, b)] + self.rank[self.join(a, b)]
                    <= self.rank[a] + self.rank[b]
            })
        })
    }

    pub fn is_geometric(&self) -> bool {
        self.is_semimodular() && self.is_atomistic()
    }

    /// Equality in the semimodular identity for `a` against every `b`.
    pub fn is_modular_element(&self, a: usize) -> bool {
        (0..self.len()).all(|b| {
            self.rank[self.meet(a, b)] + self.rank[self.join(a, b)] == self.rank[a] + self.rank[b]
        })
    }

    /// Whether the complements of `a` are pairwise incomparable.
    pub fn complements_form_antichain(&self, a: usize) -> bool {
        let c = self.complements(a);
        c.iter()
            .all(|&x| c.iter().all(|&y| x == y || !self.leq(x, y)))
    }

    /// Every hyperplane meets every line above zero.
    pub fn hyperplanes_meet_lines(&self) -> bool {
        if self.height < 2 {
            return true;
        }
        let lines = self.of_rank(2);
        let hyper = self.of_rank(self.height - 1);
        hyper
            .iter()
            .all(|&h| lines.iter().all(|&l| self.meet(h, l) != self.zero()))
    }

    /// Elements of rank below `k`, plus the one; ranks at or above `k`
    /// collapse onto the top.
    pub fn truncate(&self, k: usize) -> Result<RankedLattice> {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&x| self.rank[x] < k || x == self.one())
            .collect();
        Lattice::new(self.poset().induced(&keep))?.ranked()
    }

    /// `(−1)^{r(b)−r(a)} μ(a, b) > 0` on every interval.
    pub fn mobius_signs_alternate(&self) -> bool {
        let n = self.len();
        (0..n).into_par_iter().all(|a| {
            self.up_set(a).iter().all(|b| {
                let m = self.mu(a, b);
                let s = if (self.rank[b] - self.rank[a]).is_multiple_of(2) {
                    m
                } else {
                    -m
                };
                s > BigInt::from(0)
            })
        })
    }

    /// Signed Whitney numbers `w_k = Σ_{r(a)=k} μ(0, a)`.
    pub fn whitney_rank_sums(&self) -> Vec<BigInt> {
        let mut w = vec![BigInt::from(0); self.height + 1];
        for (b, v) in self.mobius_row(self.zero()) {
            w[self.rank[b]] += v;
        }
        w
    }

    /// Interval `[a, b]` as a ranked lattice.
    pub fn interval_ranked(&self, a: usize, b: usize) -> Result<RankedLattice> {
        self.interval_lattice(a, b)?.ranked()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Poset {
        Poset::from_covers(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap()
    }

    fn b2() -> Lattice {
        let p = Poset::from_covers(
            &["", "1", "2", "12"],
            &[("", "1"), ("", "2"), ("1", "12"), ("2", "12")],
        )
        .unwrap();
        Lattice::new(p).unwrap()
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        match Lattice::new(bowtie()).unwrap_err() {
            Error::NotALattice(x, y, _) => assert_eq!((x.as_str(), y.as_str()), ("a", "b")),
            e => panic!("unexpected {e}"),
        }
        let bounded = bowtie().adjoin_bounds();
        assert!(Lattice::new(bounded).is_err());
    }

    #[test]
    fn antichain_with_bounds_is_a_lattice() {
        let l = Lattice::new(Poset::antichain(&["x", "y"]).unwrap().adjoin_bounds()).unwrap();
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.complements(1), vec![2]);
    }

    #[test]
    fn b2_predicates() {
        let l = b2().ranked().unwrap();
        assert_eq!(l.whitney_numbers(), vec![1, 2, 1]);
        assert!(l.is_geometric());
        assert!(l.is_modular_lattice());
        assert!(l.is_modular_element(1));
        assert_eq!(l.join_irreducibles(), vec![0, 1, 2]);
        assert_eq!(l.meet_irreducibles(), vec![1, 2, 3]);
        assert!(l.mobius_signs_alternate());
        assert_eq!(
            l.whitney_rank_sums(),
            vec![1.into(), BigInt::from(-2), 1.into()]
        );
    }

    #[test]
    fn unranked_lattice_is_rejected() {
        // pentagon: 0 < a < b < 1 and 0 < c < 1
        let p = Poset::from_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        )
        .unwrap();
        let l = Lattice::new(p).unwrap();
        assert!(!l.is_modular_lattice());
        assert!(matches!(l.ranked().unwrap_err(), Error::NotRanked { .. }));
    }
}
