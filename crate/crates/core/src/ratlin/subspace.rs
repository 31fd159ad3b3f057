use num_traits::Zero;

use super::matrix::rref_of_rows;
use super::{RatMatrix, RatlinError, Q};

/// A linear subspace of `Q^n`, stored as the nonzero rows of a reduced
/// echelon form. Two subspaces are equal iff their stored forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn span(ambient: usize, vectors: Vec<Vec<Q>>) -> Result<Self, RatlinError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(RatlinError::AmbientMismatch { left: ambient, right: v.len() });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let ech = rref_of_rows(&vectors, ambient);
        Ok(Self { ambient, vectors: ech.rows, pivots: ech.pivots })
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            vectors: RatMatrix::identity(ambient).to_rows(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis vectors (reduced echelon rows).
    pub fn vectors(&self) -> &[Vec<Q>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a matrix.
    pub fn matrix(&self) -> RatMatrix {
        if self.vectors.is_empty() {
            return RatMatrix::zeros(0, self.ambient);
        }
        RatMatrix::from_rows(self.vectors.clone()).expect("rows have ambient length")
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.combine(&coords);
        (back.as_slice() == v).then_some(coords)
    }

    /// `sum_k coords[k] * basis[k]`.
    pub fn combine(&self, coords: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.ambient];
        for (c, v) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.ambient == self.ambient && other.vectors.iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &SubspaceBasis) -> Result<(), RatlinError> {
        if self.ambient != other.ambient {
            return Err(RatlinError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, RatlinError> {
        self.check_ambient(other)?;
        let all = self.vectors.iter().chain(&other.vectors).cloned().collect();
        SubspaceBasis::span(self.ambient, all)
    }

    /// Intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersection(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, RatlinError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SubspaceBasis::zero(self.ambient));
        }
        let (k, m) = (self.dim(), other.dim());
        let system = RatMatrix::from_fn(self.ambient, k + m, |i, j| {
            if j < k {
                self.vectors[j][i].clone()
            } else {
                -other.vectors[j - k][i].clone()
            }
        });
        let ker = system.kernel();
        let vecs = ker.vectors().iter().map(|x| self.combine(&x[..k])).collect();
        SubspaceBasis::span(self.ambient, vecs)
    }

    /// Standard basis indices not among the pivots; the corresponding unit
    /// vectors span a complement.
    pub fn coordinate_complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Basis vectors of `self`, taken in order, that extend a basis of `sub`
    /// to a basis of `self`.
    pub fn complement_of(&self, sub: &SubspaceBasis) -> Vec<Vec<Q>> {
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for v in &self.vectors {
            if !acc.contains(v) {
                out.push(v.clone());
                acc = acc.sum(&SubspaceBasis::span(self.ambient, vec![v.clone()]).unwrap()).unwrap();
            }
        }
        out
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &RatMatrix) -> Result<SubspaceBasis, RatlinError> {
        let vecs = self.vectors.iter().map(|v| m.mul_vec(v)).collect();
        SubspaceBasis::span(m.rows(), vecs)
    }
}
