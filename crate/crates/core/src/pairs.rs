//! Involutions, symmetric-pair splittings and the transitive-triple test.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{is_subalgebra, killing_form, restrict_form, LieAlgebra, LieError};
use crate::ratlin::{Inertia, RatMatrix, RatlinError, SubspaceBasis, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairsError {
    #[error("involution matrix must be {dim}x{dim}")]
    Shape { dim: usize },
    #[error("{0} does not square to the identity")]
    NotInvolutive(String),
    #[error("{name} is not an automorphism: fails on basis pair ({i}, {j})")]
    NotAutomorphism { name: String, i: usize, j: usize },
    #[error("sigma and theta do not commute")]
    NotCommuting,
    #[error("l is not a subalgebra")]
    NotSubalgebra,
    #[error("l is not theta-stable")]
    NotThetaStable,
    #[error("conjugating matrix does not normalize the realization")]
    NotNormalizing,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linear(#[from] RatlinError),
}

/// An involutive automorphism, acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    matrix: RatMatrix,
}

impl Involution {
    /// Validates that `matrix` squares to one and preserves brackets.
    pub fn new(g: &LieAlgebra, matrix: RatMatrix, name: &str) -> Result<Self, PairsError> {
        let d = g.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(PairsError::Shape { dim: d });
        }
        if !(&matrix * &matrix).is_identity() {
            return Err(PairsError::NotInvolutive(name.to_string()));
        }
        let cols: Vec<Vec<Q>> = (0..d).map(|j| matrix.column(j)).collect();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = matrix.mul_vec(g.structure(i, j));
                let rhs = g.bracket(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Err(PairsError::NotAutomorphism { name: name.to_string(), i, j });
                }
            }
        }
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: RatMatrix::identity(dim) }
    }

    /// `X -> T X T^{-1}` on the realization.
    pub fn conjugation(g: &LieAlgebra, t: &RatMatrix, name: &str) -> Result<Self, PairsError> {
        let inv = t.inverse().ok_or(RatlinError::Singular)?;
        let mats = g.realization().ok_or(LieError::NoRealization)?;
        let mut cols = Vec::with_capacity(mats.len());
        for m in mats {
            let img = &(t * m) * &inv;
            cols.push(g.matrix_coordinates(&img)?.ok_or(PairsError::NotNormalizing)?);
        }
        Self::new(g, RatMatrix::from_columns(&cols, g.dim()), name)
    }

    /// `X -> -Xᵀ` on the realization.
    pub fn negative_transpose(g: &LieAlgebra, name: &str) -> Result<Self, PairsError> {
        let mats = g.realization().ok_or(LieError::NoRealization)?;
        let mut cols = Vec::with_capacity(mats.len());
        for m in mats {
            let img = -&m.transpose();
            cols.push(g.matrix_coordinates(&img)?.ok_or(PairsError::NotNormalizing)?);
        }
        Self::new(g, RatMatrix::from_columns(&cols, g.dim()), name)
    }

    /// `(X, Y) -> (Y, X)` on `a ⊕ a`.
    pub fn swap(g: &LieAlgebra) -> Result<Self, PairsError> {
        let d = g.dim();
        let h = d / 2;
        let m = RatMatrix::from_fn(d, d, |i, j| {
            if (i < h && j == i + h) || (i >= h && j + h == i) {
                num_traits::One::one()
            } else {
                Q::zero()
            }
        });
        Self::new(g, m, "swap")
    }

    /// Block-diagonal involution on a direct sum, one block per summand.
    pub fn product(g: &LieAlgebra, blocks: &[&Involution], name: &str) -> Result<Self, PairsError> {
        let d: usize = blocks.iter().map(|b| b.matrix.rows()).sum();
        if d != g.dim() {
            return Err(PairsError::Shape { dim: g.dim() });
        }
        let mut m = RatMatrix::zeros(d, d);
        let mut off = 0;
        for b in blocks {
            let n = b.matrix.rows();
            for i in 0..n {
                for j in 0..n {
                    *m.entry_mut(off + i, off + j) = b.matrix.get(i, j).clone();
                }
            }
            off += n;
        }
        Self::new(g, m, name)
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        self.matrix.mul_vec(x)
    }

    pub fn commutes_with(&self, other: &Involution) -> bool {
        &self.matrix * &other.matrix == &other.matrix * &self.matrix
    }
}

/// `(fix(inv), (-1)-eigenspace)`.
pub fn eigenspace_split(inv: &Involution) -> (SubspaceBasis, SubspaceBasis) {
    let d = inv.matrix.rows();
    let id = RatMatrix::identity(d);
    let plus = (&inv.matrix - &id).kernel();
    let minus = (&inv.matrix + &id).kernel();
    (plus, minus)
}

/// Killing form of `g` restricted to `l` is nondegenerate.
pub fn is_reductively_embedded(g: &LieAlgebra, l: &SubspaceBasis) -> bool {
    let gram = restrict_form(killing_form(g).gram(), l).expect("l lives in g");
    gram.signature().map(|s| s.zero == 0).unwrap_or(false)
}

/// `l + h = g`.
pub fn is_infinitesimally_transitive(g: &LieAlgebra, h: &SubspaceBasis, l: &SubspaceBasis) -> bool {
    h.sum(l).map(|s| s.dim() == g.dim()).unwrap_or(false)
}

/// Negative definiteness of the ambient Killing form on `s`. The zero
/// subalgebra counts as compact.
pub fn is_compact_subalgebra(g: &LieAlgebra, s: &SubspaceBasis) -> bool {
    let gram = restrict_form(killing_form(g).gram(), s).expect("s lives in g");
    gram.signature().map(|sig| sig == Inertia::new(0, s.dim(), 0)).unwrap_or(false)
}

/// A candidate triple `(G, H, L)` at the Lie algebra level: `h = fix(σ)`,
/// `k = fix(θ)`, and `l` a subalgebra of `g`.
#[derive(Clone, Debug)]
pub struct TripleDescriptor {
    pub name: String,
    g: LieAlgebra,
    sigma: Involution,
    theta: Involution,
    l: SubspaceBasis,
}

impl TripleDescriptor {
    pub fn new(
        name: impl Into<String>,
        g: LieAlgebra,
        sigma: Involution,
        theta: Involution,
        l: SubspaceBasis,
    ) -> Result<Self, PairsError> {
        if !sigma.commutes_with(&theta) {
            return Err(PairsError::NotCommuting);
        }
        if l.ambient_dim() != g.dim() || !is_subalgebra(&g, &l) {
            return Err(PairsError::NotSubalgebra);
        }
        Ok(Self { name: name.into(), g, sigma, theta, l })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn sigma(&self) -> &Involution {
        &self.sigma
    }

    pub fn theta(&self) -> &Involution {
        &self.theta
    }

    pub fn l(&self) -> &SubspaceBasis {
        &self.l
    }

    pub fn h(&self) -> SubspaceBasis {
        eigenspace_split(&self.sigma).0
    }

    pub fn q(&self) -> SubspaceBasis {
        eigenspace_split(&self.sigma).1
    }

    pub fn k(&self) -> SubspaceBasis {
        eigenspace_split(&self.theta).0
    }

    pub fn s(&self) -> SubspaceBasis {
        eigenspace_split(&self.theta).1
    }

    pub fn l_cap_h(&self) -> SubspaceBasis {
        self.l.intersection(&self.h()).expect("same ambient")
    }

    pub fn l_cap_k(&self) -> SubspaceBasis {
        self.l.intersection(&self.k()).expect("same ambient")
    }

    pub fn l_cap_s(&self) -> SubspaceBasis {
        self.l.intersection(&self.s()).expect("same ambient")
    }

    pub fn l_cap_s_cap_q(&self) -> SubspaceBasis {
        self.l_cap_s().intersection(&self.q()).expect("same ambient")
    }

    /// `l` as an algebra in its own canonical basis.
    pub fn l_algebra(&self) -> LieAlgebra {
        self.g.subalgebra(&self.l).expect("checked at construction")
    }

    /// Re-expresses an ambient subspace of `l` in `l`-coordinates.
    pub fn to_l_coordinates(&self, s: &SubspaceBasis) -> SubspaceBasis {
        let vecs = s
            .vectors()
            .iter()
            .map(|v| self.l.coordinates(v).expect("subspace of l"))
            .collect();
        SubspaceBasis::span(self.l.dim(), vecs).expect("coordinates have dim l")
    }

    /// θ restricted to `l`, acting on `l`-coordinates.
    pub fn theta_on_l(&self) -> Result<Involution, PairsError> {
        let l_alg = self.l_algebra();
        let cols: Result<Vec<Vec<Q>>, PairsError> = self
            .l
            .vectors()
            .iter()
            .map(|v| self.l.coordinates(&self.theta.apply(v)).ok_or(PairsError::NotThetaStable))
            .collect();
        Involution::new(&l_alg, RatMatrix::from_columns(&cols?, self.l.dim()), "theta|l")
    }

    /// Whether `l` is θ-stable, needed for its Cartan decomposition.
    pub fn l_is_theta_stable(&self) -> bool {
        self.l.image(self.theta.matrix()).map(|img| img == self.l).unwrap_or(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleDims {
    pub g: usize,
    pub h: usize,
    pub l: usize,
    pub l_cap_h: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    NotTransitiveTriple,
    TransitiveTriple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub reductive: bool,
    /// Infinitesimal transitivity, `l + h = g`.
    pub transitive: bool,
    pub compact_intersection: bool,
    pub dims: TripleDims,
    pub verdict: Verdict,
}

pub fn check_transitive_triple(t: &TripleDescriptor) -> TripleReport {
    let g = t.g();
    let h = t.h();
    let l_cap_h = t.l_cap_h();
    let reductive = is_reductively_embedded(g, t.l());
    let transitive = is_infinitesimally_transitive(g, &h, t.l());
    let compact = is_compact_subalgebra(g, &l_cap_h);
    let verdict = if reductive && transitive && compact {
        Verdict::TransitiveTriple
    } else {
        Verdict::NotTransitiveTriple
    };
    TripleReport {
        reductive,
        transitive,
        compact_intersection: compact,
        dims: TripleDims { g: g.dim(), h: h.dim(), l: t.l().dim(), l_cap_h: l_cap_h.dim() },
        verdict,
    }
}
