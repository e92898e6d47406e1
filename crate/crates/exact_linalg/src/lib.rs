//! Exact linear algebra over `ℚ` and `ℤ`.
//!
//! Dense matrices of arbitrary-precision rationals with ranks and
//! determinants by fraction-free (Bareiss) elimination, reduced row echelon
//! forms, affine solution sets, inverses, an integer Gauss–Jordan form that
//! keeps integer pivots, and nonnegative kernel vectors (box enumeration
//! plus an exact phase-one simplex deciding whether the kernel meets the
//! nonnegative orthant nontrivially).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Integer → rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A dense `rows × cols` matrix of rationals (row-major).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix{:?}", self.to_string_rows())
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(k: usize) -> QMatrix {
        let mut m = QMatrix::zeros(k, k);
        for i in 0..k {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> QMatrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        QMatrix { rows: r, cols, data }
    }

    /// Builds a matrix from integer rows (convenience for tests and examples).
    pub fn from_i64(rows: &[Vec<i64>]) -> QMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// `m · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in difference");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `[self | column]`.
    pub fn augment(&self, column: &[Q]) -> QMatrix {
        assert_eq!(column.len(), self.rows, "augmenting column has wrong length");
        let mut out = QMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            out.set(i, self.cols, column[i].clone());
        }
        out
    }

    /// The submatrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect(),
            cols.len(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == QMatrix::identity(self.rows)
    }

    /// Entries as rational strings (`"3/2"`, `"-1"`), row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect()
    }
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction (sign preserved; the zero vector maps to zeros).
pub fn to_integer_vector(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Clears denominators row by row, giving an integer matrix whose rows span
/// the same spaces.
fn integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination on integer rows. Returns the
/// pivot columns. Every intermediate entry is a minor of the input, so
/// coefficient growth stays polynomial.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank by fraction-free elimination.
pub fn rank(m: &QMatrix) -> usize {
    let mut a = integer_rows(m);
    bareiss(&mut a, m.cols()).len()
}

/// Exact determinant of a square matrix by fraction-free elimination.
pub fn det(m: &QMatrix) -> Q {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Q::one();
    }
    // scale each row to integers, remember the scale factors
    let mut scale = Q::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= Q::from_integer(l.clone());
        a.push(row.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Q::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Q::from_integer(sign * &a[n - 1][n - 1]) / scale
}

/// Reduced row echelon form over `ℚ` with its pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        if p != r {
            for j in 0..cols {
                let t = a.get(p, j).clone();
                let u = a.get(r, j).clone();
                a.set(p, j, u);
                a.set(r, j, t);
            }
        }
        let inv = a.get(r, c).recip();
        for j in 0..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i != r && !a.get(i, c).is_zero() {
                let f = a.get(i, c).clone();
                for j in 0..cols {
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A basis of `{x : m·x = 0}` (one vector per free column of the RREF).
pub fn kernel(m: &QMatrix) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// The affine solution set of `m·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Consistent { particular: Vec<Q>, kernel: Vec<Vec<Q>> },
    Inconsistent,
}

/// Solves `m·x = b` exactly: a particular solution (free variables zero)
/// plus a kernel basis, or `Inconsistent` exactly when
/// `rank(m) < rank([m b])`.
pub fn solve(m: &QMatrix, b: &[Q]) -> Solution {
    let n = m.cols();
    let (r, pivots) = rref(&m.augment(b));
    if pivots.contains(&n) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, n).clone();
    }
    Solution::Consistent { particular: x, kernel: kernel(m) }
}

/// The inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let mut aug = QMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Q::one());
    }
    let (r, pivots) = rref(&aug);
    if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
        return None;
    }
    Some(r.select(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
}

/// Integer Gauss–Jordan form of an integer matrix: rows with an integer
/// pivot `d_i > 0` in column `j_i`, every other kept row zero in column
/// `j_i`, zero rows dropped, each row divided by the gcd of its entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntEchelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

pub fn integer_gauss_jordan(m: &[Vec<BigInt>], cols: usize) -> IntEchelon {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let (d, f) = (a[r][c].clone(), a[i][c].clone());
                for j in 0..cols {
                    a[i][j] = &d * &a[i][j] - &f * &a[r][j];
                }
                primitive(&mut a[i]);
            }
        }
        primitive(&mut a[r]);
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    IntEchelon { rows: a, pivots }
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Upper bound on the number of box points `nonneg_int_solutions` visits.
pub const MAX_BOX_POINTS: u128 = 1 << 22;

/// All integer vectors `d` with `m·d = 0`, `d ≥ 0` and `0 < max(d) ≤ bound`,
/// by exhaustive enumeration of the box (lexicographic order). Returns
/// `None` when the box exceeds [`MAX_BOX_POINTS`].
pub fn nonneg_int_solutions(m: &QMatrix, bound: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.cols();
    let side = bound as u128 + 1;
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.checked_mul(side)?;
        if total > MAX_BOX_POINTS {
            return None;
        }
    }
    let a = integer_rows(m);
    let mut out = Vec::new();
    let mut d = vec![0u64; n];
    loop {
        // advance odometer
        let mut i = n;
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            if d[i] < bound {
                d[i] += 1;
                break;
            }
            d[i] = 0;
        }
        let ok = a.iter().all(|row| {
            row.iter().zip(&d).fold(BigInt::zero(), |acc, (x, &y)| acc + x * BigInt::from(y)).is_zero()
        });
        if ok {
            out.push(d.clone());
        }
    }
}

/// Decides exactly whether `{d ≥ 0 : m·d = 0}` contains a nonzero vector and
/// returns a primitive integer witness if so. Phase-one simplex over `ℚ`
/// with Bland's rule on `m·d = 0, Σd = 1, d ≥ 0`.
pub fn nonneg_kernel_witness(m: &QMatrix) -> Option<Vec<BigInt>> {
    let n = m.cols();
    if n == 0 {
        return None;
    }
    let k = m.rows();
    let rows = k + 1;
    let width = n + rows + 1; // d, artificials, rhs
    let mut t: Vec<Vec<Q>> = vec![vec![Q::zero(); width]; rows];
    for i in 0..k {
        for j in 0..n {
            t[i][j] = m.get(i, j).clone();
        }
        // rhs is zero; make the row's artificial coefficient 1
        t[i][n + i] = Q::one();
    }
    for j in 0..n {
        t[k][j] = Q::one();
    }
    t[k][n + k] = Q::one();
    t[k][width - 1] = Q::one();
    let mut basis: Vec<usize> = (0..rows).map(|i| n + i).collect();
    let is_art = |j: usize| j >= n && j < n + rows;
    loop {
        // reduced cost of column j for objective Σ artificials
        let reduced = |t: &Vec<Vec<Q>>, basis: &Vec<usize>, j: usize| -> Q {
            let cj = if is_art(j) { Q::one() } else { Q::zero() };
            let mut z = Q::zero();
            for (i, &b) in basis.iter().enumerate() {
                if is_art(b) {
                    z += &t[i][j];
                }
            }
            cj - z
        };
        let entering = (0..n + rows).find(|&j| !basis.contains(&j) && reduced(&t, &basis, j).is_negative());
        let Some(j) = entering else { break };
        let mut best: Option<(Q, usize, usize)> = None;
        for i in 0..rows {
            if t[i][j].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][j];
                let better = match &best {
                    None => true,
                    Some((r, _, b)) => ratio < *r || (ratio == *r && basis[i] < *b),
                };
                if better {
                    best = Some((ratio, i, basis[i]));
                }
            }
        }
        let Some((_, p, _)) = best else { break }; // unbounded cannot occur for phase one
        let inv = t[p][j].recip();
        for x in t[p].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != p && !t[i][j].is_zero() {
                let f = t[i][j].clone();
                for c in 0..width {
                    let v = &t[i][c] - &f * &t[p][c];
                    t[i][c] = v;
                }
            }
        }
        basis[p] = j;
    }
    let infeasibility: Q = basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| is_art(b))
        .fold(Q::zero(), |acc, (i, _)| acc + &t[i][width - 1]);
    if !infeasibility.is_zero() {
        return None;
    }
    let mut d = vec![Q::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            d[b] = t[i][width - 1].clone();
        }
    }
    Some(to_integer_vector(&d))
}

/// Converts a small integer to `u64` when possible (helper for callers that
/// want machine integers from primitive witnesses).
pub fn to_u64(x: &BigInt) -> Option<u64> {
    x.to_u64()
}
