//! Finite-dimensional real Lie algebras given by exact structure constants.
//!
//! A [`LieAlgebra`] has a fixed, ordered basis. Every derived canonical form
//! (subspace echelon forms, enveloping-algebra normal ordering) refers to that
//! order, so constructors are deterministic.

mod catalog;
mod killing;

pub use catalog::{
    diagonal_subalgebra, direct_sum, g2_split, g2_three_form, invariant_symmetric_forms, sl, so,
    so_form, su, three_form_stabilizer, u, ThreeFormTerm,
};
pub use killing::{killing_form, restrict_form, KillingForm};

use num_traits::Zero;
use thiserror::Error;

use crate::ratlin::{is_zero_vec, RatMatrix, RatlinError, SubspaceBasis, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("commutator of basis elements {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("basis matrices must be square and of equal size")]
    BadMatrices,
    #[error("antisymmetry fails for basis pair ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },
    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("matrix realization disagrees with structure constants at ({i}, {j})")]
    RealizationMismatch { i: usize, j: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("algebra has no matrix realization")]
    NoRealization,
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Linear(#[from] RatlinError),
}

/// Real Lie algebra with `[X_i, X_j] = sum_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    brackets: Vec<Vec<Vec<Q>>>,
    realization: Option<Vec<RatMatrix>>,
}

impl LieAlgebra {
    /// Builds an algebra from a structure tensor and checks antisymmetry and
    /// the Jacobi identity on every basis triple.
    pub fn from_structure_constants(
        labels: Vec<String>,
        brackets: Vec<Vec<Vec<Q>>>,
    ) -> Result<Self, LieError> {
        let d = labels.len();
        let well_shaped = brackets.len() == d
            && brackets.iter().all(|row| row.len() == d && row.iter().all(|v| v.len() == d));
        if !well_shaped {
            return Err(LieError::Parameters("structure tensor shape".into()));
        }
        let alg = Self { labels, brackets, realization: None };
        alg.check_antisymmetry()?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Structure constants solved from pairwise commutators of matrices.
    pub fn from_matrix_basis(labels: Vec<String>, mats: Vec<RatMatrix>) -> Result<Self, LieError> {
        let Some(first) = mats.first() else {
            return Ok(Self { labels, brackets: Vec::new(), realization: Some(Vec::new()) });
        };
        let n = first.rows();
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(LieError::BadMatrices);
        }
        if labels.len() != mats.len() {
            return Err(LieError::Parameters("one label per matrix".into()));
        }
        let span = SubspaceBasis::span(n * n, mats.iter().map(|m| m.entries().to_vec()).collect())?;
        if span.dim() != mats.len() {
            return Err(LieError::DependentBasis);
        }
        let flat = RatMatrix::from_columns(
            &mats.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>(),
            n * n,
        );
        let d = mats.len();
        let mut brackets = vec![vec![vec![Q::zero(); d]; d]; d];
        for i in 0..d {
            for j in i + 1..d {
                let c = mats[i].commutator(&mats[j]);
                let coords = flat.solve(c.entries())?.ok_or(LieError::NotClosed { i, j })?;
                brackets[j][i] = coords.iter().map(|x| -x).collect();
                brackets[i][j] = coords;
            }
        }
        Ok(Self { labels, brackets, realization: Some(mats) })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn realization(&self) -> Option<&[RatMatrix]> {
        self.realization.as_deref()
    }

    /// Coordinates of `[X_i, X_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Q] {
        &self.brackets[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = num_traits::One::one();
        v
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.brackets[i][j]) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]` on coordinate columns.
    pub fn ad(&self, x: &[Q]) -> RatMatrix {
        let d = self.dim();
        let cols: Vec<Vec<Q>> = (0..d).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        RatMatrix::from_columns(&cols, d)
    }

    pub fn ad_basis(&self, i: usize) -> RatMatrix {
        let d = self.dim();
        RatMatrix::from_fn(d, d, |k, j| self.brackets[i][j][k].clone())
    }

    /// Realization matrix of an arbitrary element.
    pub fn to_matrix(&self, x: &[Q]) -> Result<RatMatrix, LieError> {
        let mats = self.realization.as_ref().ok_or(LieError::NoRealization)?;
        let n = mats.first().map_or(0, RatMatrix::rows);
        let mut out = RatMatrix::zeros(n, n);
        for (c, m) in x.iter().zip(mats) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        Ok(out)
    }

    /// Coordinates of a matrix in the realization, if it lies in the span.
    pub fn matrix_coordinates(&self, m: &RatMatrix) -> Result<Option<Vec<Q>>, LieError> {
        let mats = self.realization.as_ref().ok_or(LieError::NoRealization)?;
        let n = mats.first().map_or(0, RatMatrix::rows);
        if m.rows() != n || m.cols() != n {
            return Err(LieError::BadMatrices);
        }
        let flat = RatMatrix::from_columns(
            &mats.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>(),
            n * n,
        );
        Ok(flat.solve(m.entries())?)
    }

    pub fn check_antisymmetry(&self) -> Result<usize, LieError> {
        let d = self.dim();
        let mut checked = 0;
        for i in 0..d {
            for j in 0..d {
                let ok = self.brackets[i][j]
                    .iter()
                    .zip(&self.brackets[j][i])
                    .all(|(a, b)| (a + b).is_zero());
                if !ok {
                    return Err(LieError::Antisymmetry { i, j });
                }
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// Jacobi identity on all basis triples `i < j < k`; returns the count.
    pub fn check_jacobi(&self) -> Result<usize, LieError> {
        let d = self.dim();
        let mut checked = 0;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let xi = self.basis_vector(i);
                    let xj = self.basis_vector(j);
                    let xk = self.basis_vector(k);
                    let a = self.bracket(&xi, &self.brackets[j][k]);
                    let b = self.bracket(&xj, &self.brackets[k][i]);
                    let c = self.bracket(&xk, &self.brackets[i][j]);
                    let sum: Vec<Q> = a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vec(&sum) {
                        return Err(LieError::Jacobi { i, j, k });
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// Commutators of the realization match the structure tensor.
    pub fn check_realization(&self) -> Result<usize, LieError> {
        let Some(mats) = &self.realization else {
            return Ok(0);
        };
        let mut checked = 0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = mats[i].commutator(&mats[j]);
                let rhs = self.to_matrix(&self.brackets[i][j])?;
                if lhs != rhs {
                    return Err(LieError::RealizationMismatch { i, j });
                }
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// Runs every structural check. Returns the number of assertions made.
    pub fn validate(&self) -> Result<usize, LieError> {
        Ok(self.check_antisymmetry()? + self.check_jacobi()? + self.check_realization()?)
    }

    /// The subalgebra spanned by `s`, with the canonical basis of `s` as its
    /// basis. Coordinates of an ambient vector of `s` are `s.coordinates(v)`.
    pub fn subalgebra(&self, s: &SubspaceBasis) -> Result<LieAlgebra, LieError> {
        if !is_subalgebra(self, s) {
            return Err(LieError::NotSubalgebra);
        }
        let k = s.dim();
        let vecs = s.vectors();
        let mut brackets = vec![vec![vec![Q::zero(); k]; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let c = s.coordinates(&self.bracket(&vecs[a], &vecs[b])).ok_or(LieError::NotSubalgebra)?;
                brackets[b][a] = c.iter().map(|x| -x).collect();
                brackets[a][b] = c;
            }
        }
        let labels = vecs.iter().enumerate().map(|(a, v)| self.vector_label(v, a)).collect();
        let realization = match &self.realization {
            Some(_) => Some(vecs.iter().map(|v| self.to_matrix(v)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        Ok(LieAlgebra { labels, brackets, realization })
    }

    fn vector_label(&self, v: &[Q], fallback: usize) -> String {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        match nz.as_slice() {
            [i] if v[*i] == num_traits::One::one() => self.labels[*i].clone(),
            _ => format!("v{fallback}"),
        }
    }

    /// Same algebra in a new basis `Z_a = sum_i rows[a][i] X_i`. The rows
    /// must form an invertible matrix. Used for adapted PBW orderings; the
    /// result carries no realization.
    pub(crate) fn rebased(&self, rows: &RatMatrix) -> Result<LieAlgebra, LieError> {
        let d = self.dim();
        let inv = rows.inverse().ok_or(RatlinError::Singular)?;
        // old coordinates x (row vector) -> new coordinates x * inv
        let inv_t = inv.transpose();
        let mut brackets = vec![vec![vec![Q::zero(); d]; d]; d];
        for a in 0..d {
            for b in a + 1..d {
                let c = self.bracket(rows.row(a), rows.row(b));
                let new = inv_t.mul_vec(&c);
                brackets[b][a] = new.iter().map(|x| -x).collect();
                brackets[a][b] = new;
            }
        }
        Ok(LieAlgebra { labels: (0..d).map(|a| format!("z{a}")).collect(), brackets, realization: None })
    }
}

/// `{x in within : [x, s] = 0}`.
pub fn centralizer(
    g: &LieAlgebra,
    s: &SubspaceBasis,
    within: &SubspaceBasis,
) -> Result<SubspaceBasis, LieError> {
    let d = g.dim();
    if s.ambient_dim() != d || within.ambient_dim() != d {
        return Err(RatlinError::AmbientMismatch { left: d, right: s.ambient_dim() }.into());
    }
    if s.is_zero() || within.is_zero() {
        return Ok(within.clone());
    }
    let w = within.vectors();
    // one block of d equations per generator of s
    let mut rows = Vec::with_capacity(d * s.dim());
    let images: Vec<Vec<Vec<Q>>> =
        s.vectors().iter().map(|y| w.iter().map(|x| g.bracket(x, y)).collect()).collect();
    for img in &images {
        for t in 0..d {
            rows.push(img.iter().map(|v| v[t].clone()).collect::<Vec<Q>>());
        }
    }
    let system = RatMatrix::from_rows(rows)?;
    let ker = system.kernel();
    let vecs = ker.vectors().iter().map(|c| within.combine(c)).collect();
    Ok(SubspaceBasis::span(d, vecs)?)
}

/// `[s, s] ⊆ s`.
pub fn is_subalgebra(g: &LieAlgebra, s: &SubspaceBasis) -> bool {
    if s.ambient_dim() != g.dim() {
        return false;
    }
    let v = s.vectors();
    (0..v.len()).all(|a| (a + 1..v.len()).all(|b| s.contains(&g.bracket(&v[a], &v[b]))))
}
