use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Inertia, Q, RatPoly, RatlinError, SubspaceBasis};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

/// Reduced row echelon form: nonzero rows only, with their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Q::one() } else { Q::zero() })
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Q::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self, RatlinError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(RatlinError::Shape {
                expected: format!("{c} columns"),
                got: format!("{} columns", bad.len()),
            });
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix from a list of columns.
    pub fn from_columns(columns: &[Vec<Q>], rows: usize) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged integer matrix");
        Self::from_fn(r, c, |i, j| Q::from_integer(BigInt::from(rows[i][j])))
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

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries, used when a matrix is treated as a vector.
    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub(crate) fn entry_mut(&mut self, i: usize, j: usize) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &RatMatrix) -> Q {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = Q::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, i);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &RatMatrix) -> RatMatrix {
        &(self * other) - &(other * self)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Q::one()
            } else {
                Q::zero()
            }
        });
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |i, j| ech.rows[i][n + j].clone()))
    }

    pub fn rank(&self) -> usize {
        bareiss(integer_rows(&self.to_rows()), self.cols).1.len()
    }

    pub fn rref(&self) -> Echelon {
        rref_of_rows(&self.to_rows(), self.cols)
    }

    /// Null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> SubspaceBasis {
        let ech = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &ech.pivots {
                v[p] = true;
            }
            v
        };
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -row[f].clone();
            }
            vecs.push(v);
        }
        SubspaceBasis::span(self.cols, vecs).expect("kernel vectors have matching length")
    }

    /// Some `x` with `self * x = v`; free variables are set to zero.
    pub fn solve(&self, v: &[Q]) -> Result<Option<Vec<Q>>, RatlinError> {
        if v.len() != self.rows {
            return Err(RatlinError::Shape {
                expected: format!("{} entries", self.rows),
                got: format!("{} entries", v.len()),
            });
        }
        let aug = RatMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                v[i].clone()
            }
        });
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Inertia by symmetric congruence (simultaneous row and column operations).
    pub fn signature(&self) -> Result<Inertia, RatlinError> {
        if !self.is_symmetric() {
            return Err(RatlinError::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inertia = Inertia::new(0, 0, 0);
        let mut k = 0;
        while k < n {
            if a[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    a.swap(k, j);
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    // a[k][k] <- a[k][k] + 2 a[k][j] + a[j][j] = 2 a[k][j]
                    for c in 0..n {
                        let t = a[j][c].clone();
                        a[k][c] += t;
                    }
                    for row in a.iter_mut() {
                        let t = row[j].clone();
                        row[k] += t;
                    }
                } else {
                    inertia.zero += 1;
                    k += 1;
                    continue;
                }
            }
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for c in k..n {
                    let t = &f * &a[k][c];
                    a[i][c] -= t;
                }
                for row in a.iter_mut().skip(k) {
                    let t = &f * &row[k];
                    row[i] -= t;
                }
            }
            if pivot.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            k += 1;
        }
        Ok(inertia)
    }

    /// Characteristic polynomial `det(xI - A)` via Faddeev-LeVerrier.
    pub fn char_poly(&self) -> RatPoly {
        assert!(self.is_square(), "char_poly of non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            let c_prev = coeffs[n - k + 1].clone();
            let mut next = self * &m;
            for i in 0..n {
                *next.entry_mut(i, i) += &c_prev;
            }
            m = next;
            let t = self.trace_of_product(&m);
            coeffs[n - k] = -t / Q::from_integer(BigInt::from(k));
        }
        RatPoly::new(coeffs)
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;

    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;

    fn neg(self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// Scales each row by the lcm of its denominators.
pub(crate) fn integer_rows(rows: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination. Returns the echelon rows
/// (nonzero ones first) and the pivot columns.
pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        // Rows with a zero in column c still need the scaling so that later
        // divisions by the pivot stay exact.
        for i in r + 1..m {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub(crate) fn rref_of_rows(rows: &[Vec<Q>], cols: usize) -> Echelon {
    let (ech, pivots) = bareiss(integer_rows(rows), cols);
    let mut out: Vec<Vec<Q>> = ech
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = Q::from_integer(row[p].clone());
            row.into_iter().map(|x| Q::from_integer(x) / &lead).collect()
        })
        .collect();
    for k in (0..out.len()).rev() {
        let p = pivots[k];
        let (above, rest) = out.split_at_mut(k);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(pivot_row).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    Echelon { rows: out, pivots, cols }
}

#[cfg(test)]
mod tests {
    use super::super::{q, qr};
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn bareiss_handles_zero_column_below_pivot() {
        // second row has a zero in the pivot column but must still be scaled
        let m = RatMatrix::from_i64(&[&[2, 1, 1], &[0, 3, 1], &[4, 1, 5]]);
        assert_eq!(m.rank(), 3);
        let m = RatMatrix::from_i64(&[&[2, 1, 1], &[0, 3, 1], &[2, 4, 2]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::identity(3).kernel().dim(), 0);
        assert_eq!(RatMatrix::zeros(3, 3).kernel().dim(), 3);
        let k = RatMatrix::from_i64(&[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        let expected = SubspaceBasis::span(2, vec![vec![q(1), q(-1)]]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn solve_examples() {
        let v = vec![q(3), q(-7)];
        assert_eq!(RatMatrix::identity(2).solve(&v).unwrap(), Some(v.clone()));
        assert_eq!(RatMatrix::zeros(2, 2).solve(&v).unwrap(), None);
        let m = RatMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        assert_eq!(m.solve(&[q(1), q(2)]).unwrap(), Some(vec![qr(1, 2), qr(1, 2)]));
    }

    #[test]
    fn signature_examples() {
        let d = RatMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(d.signature().unwrap(), Inertia::new(1, 1, 0));
        assert_eq!(RatMatrix::zeros(2, 2).signature().unwrap(), Inertia::new(0, 0, 2));
        // hyperbolic plane: zero diagonal
        let h = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.signature().unwrap(), Inertia::new(1, 1, 0));
        let ns = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(ns.signature(), Err(RatlinError::NotSymmetric));
    }

    #[test]
    fn inverse_and_char_poly() {
        let m = RatMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        // x^2 - 3x + 1
        assert_eq!(m.char_poly().coeffs(), &[q(1), q(-3), q(1)]);
    }
}
