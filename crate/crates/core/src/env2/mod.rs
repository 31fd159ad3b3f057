//! Degree ≤ 2 part of the universal enveloping algebra.
//!
//! A [`Quad2`] is stored PBW-normal-ordered against the basis of the algebra
//! it belongs to: `sum_{i<=j} quad[i][j] X_i X_j + sum_i lin[i] X_i + c`.
//! Values do not hold the algebra; operations that need brackets take it
//! as an argument.

mod iota;

pub use iota::{
    decompose_in_span, embed_casimir, iota_embed, iota_embed_with_complement, random_complement, standard_generators,
    CasimirEmbedding, Generators,
};

use std::fmt::Write as _;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::liealg::{restrict_form, LieAlgebra, LieError};
use crate::pairs::PairsError;
use crate::ratlin::{RatMatrix, RatlinError, SubspaceBasis, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Env2Error {
    #[error("form is degenerate on the subspace")]
    DegenerateForm,
    #[error("element is not invariant: bracket with h-basis vector {index} survives reduction")]
    NotInvariant { index: usize },
    #[error("l + h does not span g")]
    NotTransitive,
    #[error("element lives on a {got}-dimensional algebra, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Pairs(#[from] PairsError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linear(#[from] RatlinError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad2 {
    quad: RatMatrix,
    lin: Vec<Q>,
    constant: Q,
}

impl Quad2 {
    pub fn zero(dim: usize) -> Self {
        Self { quad: RatMatrix::zeros(dim, dim), lin: vec![Q::zero(); dim], constant: Q::zero() }
    }

    pub fn scalar(dim: usize, c: Q) -> Self {
        Self { constant: c, ..Self::zero(dim) }
    }

    /// The degree-one element `x`.
    pub fn linear(x: &[Q]) -> Self {
        Self { lin: x.to_vec(), ..Self::zero(x.len()) }
    }

    /// Normal-orders `sum_{i,j} full[i][j] X_i X_j + sum lin[i] X_i + c`
    /// where `full` may have entries on both sides of the diagonal.
    pub fn normal_order(g: &LieAlgebra, full: &RatMatrix, lin: &[Q], constant: Q) -> Self {
        let d = g.dim();
        assert_eq!(full.rows(), d);
        assert_eq!(lin.len(), d);
        let mut quad = RatMatrix::zeros(d, d);
        let mut lin = lin.to_vec();
        for i in 0..d {
            for j in 0..d {
                let c = full.get(i, j);
                if c.is_zero() {
                    continue;
                }
                if i <= j {
                    *quad.entry_mut(i, j) += c;
                } else {
                    // X_i X_j = X_j X_i + [X_i, X_j]
                    *quad.entry_mut(j, i) += c;
                    for (l, b) in lin.iter_mut().zip(g.structure(i, j)) {
                        if !b.is_zero() {
                            *l += c * b;
                        }
                    }
                }
            }
        }
        Self { quad, lin, constant }
    }

    /// `x y` for two elements of `g`.
    pub fn product(g: &LieAlgebra, x: &[Q], y: &[Q]) -> Self {
        let d = g.dim();
        let full = RatMatrix::from_fn(d, d, |i, j| &x[i] * &y[j]);
        Self::normal_order(g, &full, &vec![Q::zero(); d], Q::zero())
    }

    pub fn dim(&self) -> usize {
        self.lin.len()
    }

    /// Upper-triangular coefficients of `X_i X_j`, `i <= j`.
    pub fn quad(&self) -> &RatMatrix {
        &self.quad
    }

    pub fn lin(&self) -> &[Q] {
        &self.lin
    }

    pub fn constant(&self) -> &Q {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.quad.is_zero() && self.lin.iter().all(Zero::is_zero) && self.constant.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        if !self.quad.is_zero() {
            Some(2)
        } else if !self.lin.iter().all(Zero::is_zero) {
            Some(1)
        } else if !self.constant.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Quad2) -> Quad2 {
        Quad2 {
            quad: &self.quad + &other.quad,
            lin: self.lin.iter().zip(&other.lin).map(|(a, b)| a + b).collect(),
            constant: &self.constant + &other.constant,
        }
    }

    pub fn sub(&self, other: &Quad2) -> Quad2 {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Quad2 {
        Quad2 {
            quad: self.quad.scale(s),
            lin: self.lin.iter().map(|x| x * s).collect(),
            constant: &self.constant * s,
        }
    }

    /// All coefficients as one vector (upper triangle row by row, then the
    /// linear part, then the constant).
    pub fn flatten(&self) -> Vec<Q> {
        let d = self.dim();
        let mut out = Vec::with_capacity(d * (d + 1) / 2 + d + 1);
        for i in 0..d {
            for j in i..d {
                out.push(self.quad.get(i, j).clone());
            }
        }
        out.extend(self.lin.iter().cloned());
        out.push(self.constant.clone());
        out
    }

    /// Nonzero terms as `(monomial, coefficient)`, monomials spelled with the
    /// algebra's labels; `"1"` for the constant.
    pub fn terms(&self, g: &LieAlgebra) -> Vec<(String, Q)> {
        let labels = g.labels();
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i..d {
                let c = self.quad.get(i, j);
                if !c.is_zero() {
                    let m = if i == j { format!("{}^2", labels[i]) } else { format!("{}*{}", labels[i], labels[j]) };
                    out.push((m, c.clone()));
                }
            }
        }
        for (i, c) in self.lin.iter().enumerate() {
            if !c.is_zero() {
                out.push((labels[i].clone(), c.clone()));
            }
        }
        if !self.constant.is_zero() {
            out.push(("1".to_string(), self.constant.clone()));
        }
        out
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        let terms = self.terms(g);
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({c}) {m}");
        }
        s
    }
}

fn check_dim(g: &LieAlgebra, q: &Quad2) -> Result<(), Env2Error> {
    if g.dim() != q.dim() {
        return Err(Env2Error::DimensionMismatch { expected: g.dim(), got: q.dim() });
    }
    Ok(())
}

/// `sum_ab G^{-1}_ab S_a S_b` over the canonical basis `S` of `sub`, where
/// `G` is the Gram matrix of `form` (a form on all of `g`) on that basis.
pub fn casimir(g: &LieAlgebra, sub: &SubspaceBasis, form: &RatMatrix) -> Result<Quad2, Env2Error> {
    let d = g.dim();
    if sub.is_zero() {
        return Ok(Quad2::zero(d));
    }
    let gram = restrict_form(form, sub)?;
    let ginv = gram.inverse().ok_or(Env2Error::DegenerateForm)?;
    let s = sub.matrix();
    let full = &(&s.transpose() * &ginv) * &s;
    Ok(Quad2::normal_order(g, &full, &vec![Q::zero(); d], Q::zero()))
}

/// `[q, x]`, normal-ordered.
pub fn bracket_with(g: &LieAlgebra, q: &Quad2, x: &[Q]) -> Result<Quad2, Env2Error> {
    check_dim(g, q)?;
    let ad = g.ad(x);
    // [X_i X_j, x] = X_i [X_j, x] + [X_i, x] X_j and [X_j, x] = -ad(x) X_j
    let full = -&(&(&q.quad * &ad.transpose()) + &(&ad * &q.quad));
    let lin: Vec<Q> = ad.mul_vec(&q.lin).into_iter().map(|v| -v).collect();
    Ok(Quad2::normal_order(g, &full, &lin, Q::zero()))
}

/// Same element written in the basis `Z_a = sum_i rows[a][i] X_i` of
/// `target` (which must be `g` rebased by `rows`). `w` is `rows^{-1}`.
fn change_basis(target: &LieAlgebra, q: &Quad2, w: &RatMatrix) -> Quad2 {
    let wt = w.transpose();
    let full = &(&wt * &q.quad) * w;
    let lin = wt.mul_vec(&q.lin);
    Quad2::normal_order(target, &full, &lin, q.constant.clone())
}

/// Reduction modulo the left ideal `U(g) h` for a fixed subalgebra `h`.
///
/// Internally uses the ordered basis (unit vectors off the pivots of `h`,
/// then the canonical basis of `h`); monomials ending in an `h` factor are
/// dropped. Survivors only involve the unit vectors, so the result is
/// already in `g`'s own basis and order.
#[derive(Clone, Debug)]
pub struct IdealReducer {
    adapted: LieAlgebra,
    w: RatMatrix,
    complement: Vec<usize>,
    dim: usize,
}

impl IdealReducer {
    pub fn new(g: &LieAlgebra, h: &SubspaceBasis) -> Result<Self, Env2Error> {
        let d = g.dim();
        if h.ambient_dim() != d {
            return Err(Env2Error::DimensionMismatch { expected: d, got: h.ambient_dim() });
        }
        if !crate::liealg::is_subalgebra(g, h) {
            return Err(LieError::NotSubalgebra.into());
        }
        let complement = h.coordinate_complement();
        let mut rows: Vec<Vec<Q>> = complement
            .iter()
            .map(|&c| (0..d).map(|k| if k == c { Q::one() } else { Q::zero() }).collect())
            .collect();
        rows.extend(h.vectors().iter().cloned());
        let r = if rows.is_empty() { RatMatrix::zeros(0, 0) } else { RatMatrix::from_rows(rows)? };
        let w = r.inverse().ok_or(RatlinError::Singular)?;
        let adapted = g.rebased(&r)?;
        Ok(Self { adapted, w, complement, dim: d })
    }

    pub fn reduce(&self, q: &Quad2) -> Result<Quad2, Env2Error> {
        if q.dim() != self.dim {
            return Err(Env2Error::DimensionMismatch { expected: self.dim, got: q.dim() });
        }
        if self.complement.len() == self.dim {
            return Ok(q.clone());
        }
        let z = change_basis(&self.adapted, q, &self.w);
        let k = self.complement.len();
        let mut out = Quad2::scalar(self.dim, z.constant.clone());
        for a in 0..k {
            for b in a..k {
                let c = z.quad.get(a, b);
                if !c.is_zero() {
                    *out.quad.entry_mut(self.complement[a], self.complement[b]) = c.clone();
                }
            }
            out.lin[self.complement[a]] = z.lin[a].clone();
        }
        Ok(out)
    }
}

pub fn reduce_mod_left_ideal(g: &LieAlgebra, q: &Quad2, h: &SubspaceBasis) -> Result<Quad2, Env2Error> {
    IdealReducer::new(g, h)?.reduce(q)
}

pub fn equals_mod_ideal(g: &LieAlgebra, a: &Quad2, b: &Quad2, h: &SubspaceBasis) -> Result<bool, Env2Error> {
    Ok(reduce_mod_left_ideal(g, &a.sub(b), h)?.is_zero())
}
