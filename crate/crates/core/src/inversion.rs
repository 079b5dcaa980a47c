//! Möbius inversion, derangements and the Lindström–Wilf determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_guard, Error, Result};
use crate::instances::boolean_lattice;
use crate::lattices::Lattice;
use crate::matrix::IntMatrix;
use crate::poset::{Poset, DENSE_LIMIT};

fn check_len(p: &Poset, f: &[BigInt]) -> Result<()> {
    if f.len() != p.len() {
        return Err(Error::Precondition(format!(
            "function has {} values but the poset has {} elements",
            f.len(),
            p.len()
        )));
    }
    Ok(())
}

/// An integer-valued function on the elements of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetFunction {
    values: Vec<BigInt>,
}

impl PosetFunction {
    pub fn new(p: &Poset, values: Vec<BigInt>) -> Result<PosetFunction> {
        check_len(p, &values)?;
        Ok(PosetFunction { values })
    }

    pub fn zero(p: &Poset) -> PosetFunction {
        PosetFunction {
            values: vec![BigInt::zero(); p.len()],
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }

    pub fn get(&self, x: usize) -> &BigInt {
        &self.values[x]
    }
}

/// `g(x) = Σ_{y ≥ x} f(y)`.
pub fn up_sum(p: &Poset, f: &[BigInt]) -> Result<Vec<BigInt>> {
    check_len(p, f)?;
    Ok((0..p.len())
        .map(|x| p.up_set(x).iter().map(|y| &f[y]).sum())
        .collect())
}

/// `g(x) = Σ_{y ≤ x} f(y)`.
pub fn down_sum(p: &Poset, f: &[BigInt]) -> Result<Vec<BigInt>> {
    check_len(p, f)?;
    Ok((0..p.len())
        .map(|x| p.down_set(x).iter().map(|y| &f[y]).sum())
        .collect())
}

/// Recovers `f` from `g = up_sum(f)`: `f(z) = Σ_y μ(z, y) g(y)`.
pub fn invert_up(p: &Poset, g: &[BigInt]) -> Result<Vec<BigInt>> {
    check_len(p, g)?;
    Ok((0..p.len())
        .map(|z| p.mobius_row(z).into_iter().map(|(y, m)| m * &g[y]).sum())
        .collect())
}

/// Recovers `f` from `g = down_sum(f)`: `f(z) = Σ_y μ(y, z) g(y)`.
pub fn invert_down(p: &Poset, g: &[BigInt]) -> Result<Vec<BigInt>> {
    check_len(p, g)?;
    Ok((0..p.len())
        .map(|z| p.down_set(z).iter().map(|y| p.mu(y, z) * &g[y]).sum())
        .collect())
}

pub const DERANGEMENT_MAX: usize = 12;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `D_n` by inverting `F(S) = (n − |S|)!` (permutations fixing `S`
/// pointwise) over `B(n)` and reading off `S = ∅`.
pub fn derangements(n: usize) -> Result<BigInt> {
    if n > DERANGEMENT_MAX {
        return Err(Error::OutOfRange("derangement size (at most 12)"));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let b = boolean_lattice(n)?;
    let size = b.heights();
    let g: Vec<BigInt> = size.iter().map(|&k| factorial(n - k)).collect();
    let bottom = b.zero();
    Ok(b.mobius_row(bottom)
        .into_iter()
        .map(|(s, m)| m * &g[s])
        .sum())
}

/// `D_n = Σ_k (−1)^k n!/k!`, evaluated exactly.
pub fn derangements_series(n: usize) -> BigInt {
    let nf = factorial(n);
    (0..=n)
        .map(|k| {
            let t = &nf / factorial(k);
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `G(x, y) = Σ_{z ≥ x, z ≥ y} f(z)` and its determinant.
pub fn lindstrom_wilf_det(p: &Poset, f: &[BigInt]) -> Result<(IntMatrix, BigInt)> {
    check_len(p, f)?;
    let n = p.len();
    check_guard(
        "Lindström–Wilf matrix entries",
        (n * n) as u128,
        DENSE_LIMIT * DENSE_LIMIT,
    )?;
    let g = IntMatrix::from_fn(n, n, |x, y| {
        p.up_set(x)
            .intersection(p.up_set(y))
            .iter()
            .map(|z| &f[z])
            .sum()
    });
    let det = g.determinant();
    Ok((g, det))
}

/// The lattice form: `G(x, y) = g(x ∨ y)`. Returns `f = invert_up(g)`,
/// the matrix and its determinant, which equals `Π f(x)`.
pub fn lindstrom_wilf_lattice(
    l: &Lattice,
    g: &[BigInt],
) -> Result<(Vec<BigInt>, IntMatrix, BigInt)> {
    check_len(l, g)?;
    let f = invert_up(l, g)?;
    let n = l.len();
    let m = IntMatrix::from_fn(n, n, |x, y| g[l.join(x, y)].clone());
    let det = m.determinant();
    Ok((f, m, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::divisor_lattice;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn b2_up_inversion() {
        let b2 = boolean_lattice(2).unwrap();
        assert_eq!(
            invert_up(&b2, &ints(&[4, 2, 2, 1])).unwrap(),
            ints(&[1, 1, 1, 1])
        );
        assert_eq!(invert_up(&b2, &ints(&[0; 4])).unwrap(), ints(&[0; 4]));
    }

    #[test]
    fn divisor_down_round_trip() {
        let d = divisor_lattice(12).unwrap();
        let g: Vec<BigInt> = d
            .labels()
            .iter()
            .map(|s| s.parse::<i64>().unwrap().into())
            .collect();
        let f = invert_down(&d, &g).unwrap();
        assert_eq!(down_sum(&d, &f).unwrap(), g);
        // n = Σ_{d|n} φ(d)
        let phi: Vec<i64> = vec![1, 1, 2, 2, 2, 4];
        let by_label: Vec<i64> = d.labels().iter().map(|s| s.parse().unwrap()).collect();
        let expect: Vec<BigInt> = by_label
            .iter()
            .map(|&x| phi[[1, 2, 3, 4, 6, 12].iter().position(|&y| y == x).unwrap()].into())
            .collect();
        assert_eq!(f, expect);
        let dual = d.dual();
        let to_p: Vec<usize> = (0..d.len())
            .map(|i| d.index_of(dual.label(i)).unwrap())
            .collect();
        let g_dual: Vec<BigInt> = to_p.iter().map(|&i| g[i].clone()).collect();
        let f_dual = invert_up(&dual, &g_dual).unwrap();
        assert!((0..d.len()).all(|i| f_dual[i] == f[to_p[i]]));
    }

    #[test]
    fn derangement_values() {
        assert_eq!(derangements(0).unwrap(), 1.into());
        assert_eq!(derangements(1).unwrap(), 0.into());
        assert_eq!(derangements(4).unwrap(), 9.into());
        assert_eq!(derangements(6).unwrap(), 265.into());
        for n in 0..=10 {
            assert_eq!(derangements(n).unwrap(), derangements_series(n));
        }
        assert!(derangements(13).is_err());
    }

    #[test]
    fn lindstrom_wilf_examples() {
        let b2 = boolean_lattice(2).unwrap();
        let (g, det) = lindstrom_wilf_det(&b2, &ints(&[1, 1, 1, 1])).unwrap();
        assert_eq!(g.get(0, 0), &BigInt::from(4));
        assert_eq!(det, 1.into());
        let (_, det) = lindstrom_wilf_det(&b2, &ints(&[0; 4])).unwrap();
        assert!(det.is_zero());
        let (g, det) = lindstrom_wilf_det(&b2, &ints(&[0, 0, 0, 1])).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| g.get(i, j) == &BigInt::one())));
        assert!(det.is_zero());
        let (f, _, det) = lindstrom_wilf_lattice(&b2, &ints(&[5, 3, 2, 1])).unwrap();
        assert_eq!(det, f.iter().product::<BigInt>());
    }
}
