//! Dense exact matrices over the integers and the rationals.
//!
//! Nothing here touches floating point. Determinants and ranks use
//! fraction-free (Bareiss) elimination so every intermediate value stays an
//! integer; the divisions it performs are exact because each intermediate
//! entry is a minor of the input.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds from nested rows of machine integers (all rows must match).
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    if a.is_one() {
                        out.data[idx] += b;
                    } else {
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^m` by repeated squaring; `m = 0` gives the identity.
    pub fn pow(&self, mut m: u32) -> IntMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base);
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let (r, c) = (other.rows, other.cols);
        IntMatrix::from_fn(self.rows * r, self.cols * c, |i, j| {
            self.get(i / r, j / c) * other.get(i % r, j % c)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Upper triangular with every diagonal entry equal to one.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| self.get(i, i).is_one() && (0..i).all(|j| self.get(i, j).is_zero()))
    }

    /// Rows and columns reordered so that new index `k` is old index `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> IntMatrix {
        assert!(self.is_square() && order.len() == self.rows);
        IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(order[i], order[j]).clone()
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Determinant by Bareiss elimination with row pivoting.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                for j in k + 1..n {
                    let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                    row[j] = exact_div(v, &prev);
                }
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Rank over the rationals, via fraction-free row reduction.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut r = 0;
        let mut prev = BigInt::one();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom.iter_mut() {
                for j in c + 1..self.cols {
                    let v = &row[j] * &pivot_row[c] - &row[c] * &pivot_row[j];
                    row[j] = exact_div(v, &prev);
                }
                row[c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| {
            BigRational::from_integer(self.get(i, j).clone())
        })
    }

    /// Nested JSON arrays; entries that fit in `i64` are numbers, larger
    /// ones are decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(int_to_json).collect()))
                .collect(),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    let (q, r) = v.div_rem(d);
    debug_assert!(r.is_zero(), "Bareiss division was not exact");
    q
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// JSON number when it fits, decimal string otherwise.
pub fn int_to_json(v: &BigInt) -> Value {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

pub fn rat_to_json(v: &BigRational) -> Value {
    if v.is_integer() {
        int_to_json(v.numer())
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

/// Dense row-major matrix of reduced rationals with positive denominators.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * out.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let pivot = a.get(c, c).recip();
            for j in 0..n {
                a.data[c * n + j] = &a.data[c * n + j] * &pivot;
                inv.data[c * n + j] = &inv.data[c * n + j] * &pivot;
            }
            for i in 0..n {
                if i == c {
                    continue;
                }
                let factor = a.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let da = &factor * a.get(c, j);
                    let di = &factor * inv.get(c, j);
                    a.data[i * n + j] -= da;
                    inv.data[i * n + j] -= di;
                }
            }
        }
        Some(inv)
    }

    /// Lowest common denominator of all entries.
    pub fn common_denominator(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.denom().is_one())
    }

    pub fn max_abs_denominator(&self) -> BigInt {
        self.data
            .iter()
            .map(|v| v.denom().abs())
            .max()
            .unwrap_or_else(BigInt::one)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        (0..self.cols)
                            .map(|j| rat_to_json(self.get(i, j)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det_by_permutations(m: &[Vec<i64>]) -> i64 {
        // Leibniz expansion, used as an oracle on tiny matrices.
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0i64;
        loop {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let prod: i64 = (0..n).map(|i| m[i][perm[i]]).product();
            total += if inversions % 2 == 0 { prod } else { -prod };
            // next permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| perm[i] < perm[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(IntMatrix::identity(0).determinant(), BigInt::one());
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
        let d = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(d.determinant(), BigInt::from(4));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(singular.determinant().is_zero());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn rational_inverse() {
        let d = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).to_rat();
        let inv = d.inverse().unwrap();
        assert!(d.mul(&inv).is_identity());
        assert!(IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]])
            .to_rat()
            .inverse()
            .is_none());
    }

    #[test]
    fn power_and_kron() {
        let y = IntMatrix::from_rows(&[vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 0]]);
        assert!(y.pow(3).is_zero());
        assert_eq!(y.pow(2).get(0, 2), &BigInt::one());
        assert!(y.pow(0).is_identity());
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let k = a.kron(&IntMatrix::identity(2));
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(1, 3), &BigInt::from(2));
        assert_eq!(k.get(0, 3), &BigInt::zero());
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(n in 1usize..5, seed in prop::collection::vec(-4i64..5, 16)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 4 + j]).collect()).collect();
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(m.determinant(), BigInt::from(det_by_permutations(&rows)));
            let full = !m.determinant().is_zero();
            prop_assert_eq!(m.rank() == n, full);
        }
    }
}
