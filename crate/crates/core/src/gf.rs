//! Small finite fields as lookup tables.

use crate::error::{Error, Result};

/// `GF(q)` for `q ∈ {2, 3, 4, 5}` with elements `0..q`.
///
/// Prime fields use residues mod `q`. `GF(4)` encodes `a + b·x` as the bits
/// `b a` modulo `x² + x + 1` and multiplies through log/antilog tables of
/// the generator `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl Field {
    pub fn new(q: usize) -> Result<Field> {
        match q {
            2 | 3 | 5 => Ok(Self::prime(q)),
            4 => Ok(Self::gf4()),
            _ => Err(Error::Precondition(format!("unsupported field size {q}"))),
        }
    }

    fn prime(p: usize) -> Field {
        let mut add = vec![0u8; p * p];
        let mut mul = vec![0u8; p * p];
        for a in 0..p {
            for b in 0..p {
                add[a * p + b] = ((a + b) % p) as u8;
                mul[a * p + b] = ((a * b) % p) as u8;
            }
        }
        Field { q: p, add, mul }
    }

    fn gf4() -> Field {
        // antilog[k] = x^k for k = 0, 1, 2
        let antilog = [1u8, 2, 3];
        let mut log = [0usize; 4];
        for (k, &v) in antilog.iter().enumerate() {
            log[v as usize] = k;
        }
        let mut add = vec![0u8; 16];
        let mut mul = vec![0u8; 16];
        for a in 0..4 {
            for b in 0..4 {
                add[a * 4 + b] = (a ^ b) as u8;
                mul[a * 4 + b] = if a == 0 || b == 0 {
                    0
                } else {
                    antilog[(log[a] + log[b]) % 3]
                };
            }
        }
        Field { q: 4, add, mul }
    }

    pub fn size(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        (1..self.q as u8).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(p, r);
            let inv = self.inv(rows[r][c]);
            for v in rows[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..ncols {
                        let t = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    pub fn rank(&self, rows: &[Vec<u8>]) -> usize {
        let mut m = rows.to_vec();
        self.rref(&mut m).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5] {
            let f = Field::new(q).unwrap();
            for a in 0..q as u8 {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q as u8 {
                    for c in 0..q as u8 {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
        assert!(Field::new(6).is_err());
    }

    #[test]
    fn rref_rank() {
        let f = Field::new(2).unwrap();
        let mut m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(f.rref(&mut m), vec![0, 1]);
        assert_eq!(m, vec![vec![1, 0, 1], vec![0, 1, 1]]);
    }
}
