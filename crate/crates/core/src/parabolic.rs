//! Cartan data of a reductive `l`: maximal abelian `a ⊂ s_L`, restricted
//! roots, the minimal parabolic `m ⊕ a ⊕ n`, and the sphericity test.
//!
//! Everything here works in the coordinates of the algebra passed in; for a
//! triple that is the canonical basis of `l` (see
//! [`TripleDescriptor::l_algebra`]).

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{centralizer, LieAlgebra, LieError};
use crate::pairs::{eigenspace_split, Involution, PairsError, TripleDescriptor};
use crate::ratlin::{RatMatrix, RatlinError, SubspaceBasis, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParabolicError {
    #[error("ad(a_{index}) has a characteristic polynomial with an irreducible factor of degree {leftover_degree} over Q")]
    IrrationalSpectrum { index: usize, leftover_degree: usize },
    #[error("ad(a) is not diagonalizable over Q")]
    NotDiagonalizable,
    #[error(transparent)]
    Pairs(#[from] PairsError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linear(#[from] RatlinError),
}

/// Order in which the greedy construction scans candidate vectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum PickOrder {
    #[default]
    Forward,
    Reversed,
}

/// `(k_L, s_L)` for `theta` acting on `l`.
pub fn cartan_split(theta: &Involution) -> (SubspaceBasis, SubspaceBasis) {
    eigenspace_split(theta)
}

/// Greedy maximal abelian subspace of `s`: keep adding a vector of `s` that
/// commutes with everything chosen so far until the commutant in `s` is the
/// chosen span itself.
pub fn maximal_abelian_in_s(
    l: &LieAlgebra,
    s: &SubspaceBasis,
    order: PickOrder,
) -> Result<SubspaceBasis, ParabolicError> {
    let d = l.dim();
    let mut a = SubspaceBasis::zero(d);
    loop {
        let comm = centralizer(l, &a, s)?;
        if comm.dim() == a.dim() {
            return Ok(a);
        }
        let mut cands: Vec<&Vec<Q>> = comm.vectors().iter().collect();
        if order == PickOrder::Reversed {
            cands.reverse();
        }
        let pick = cands.into_iter().find(|v| !a.contains(v)).expect("commutant strictly larger");
        a = a.sum(&SubspaceBasis::span(d, vec![pick.clone()])?)?;
    }
}

/// Joint eigenspace decomposition of `l` under `ad(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    pub a_basis: SubspaceBasis,
    /// Each root as its values on the canonical basis of `a`.
    pub roots: Vec<Vec<Q>>,
    pub root_spaces: Vec<SubspaceBasis>,
    pub zero_space: SubspaceBasis,
}

impl RestrictedRootSystem {
    pub fn rank(&self) -> usize {
        self.a_basis.dim()
    }

    /// Roots whose first nonzero coordinate is positive.
    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| is_lex_positive(&self.roots[i])).collect()
    }

    pub fn root_space(&self, root: &[Q]) -> Option<&SubspaceBasis> {
        self.roots.iter().position(|r| r.as_slice() == root).map(|i| &self.root_spaces[i])
    }
}

fn is_lex_positive(v: &[Q]) -> bool {
    v.iter().find(|x| !x.is_zero()).map(|x| x.is_positive()).unwrap_or(false)
}

pub fn restricted_roots(l: &LieAlgebra, a: &SubspaceBasis) -> Result<RestrictedRootSystem, ParabolicError> {
    let d = l.dim();
    // (functional so far, joint eigenspace)
    let mut pieces: Vec<(Vec<Q>, SubspaceBasis)> = vec![(Vec::new(), SubspaceBasis::full(d))];
    for (idx, h) in a.vectors().iter().enumerate() {
        let ad = l.ad(h);
        let (eigs, leftover) = ad.char_poly().rational_roots();
        if leftover > 0 {
            return Err(ParabolicError::IrrationalSpectrum { index: idx, leftover_degree: leftover });
        }
        let eigenspaces: Vec<(Q, SubspaceBasis)> = eigs
            .into_iter()
            .map(|lam| {
                let shifted = &ad - &RatMatrix::identity(d).scale(&lam);
                (lam, shifted.kernel())
            })
            .collect();
        let mut next = Vec::new();
        for (func, space) in &pieces {
            let mut total = 0;
            for (lam, es) in &eigenspaces {
                let joint = space.intersection(es)?;
                if joint.is_zero() {
                    continue;
                }
                total += joint.dim();
                let mut f = func.clone();
                f.push(lam.clone());
                next.push((f, joint));
            }
            if total != space.dim() {
                return Err(ParabolicError::NotDiagonalizable);
            }
        }
        pieces = next;
    }
    let mut zero_space = SubspaceBasis::zero(d);
    let mut roots = Vec::new();
    for (f, sp) in pieces {
        if f.iter().all(Zero::is_zero) {
            zero_space = sp;
        } else {
            roots.push((f, sp));
        }
    }
    roots.sort_by(|x, y| x.0.cmp(&y.0));
    let (roots, root_spaces) = roots.into_iter().unzip();
    Ok(RestrictedRootSystem { a_basis: a.clone(), roots, root_spaces, zero_space })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSubalgebra {
    pub m: SubspaceBasis,
    pub a: SubspaceBasis,
    pub n: SubspaceBasis,
    pub p: SubspaceBasis,
}

/// Minimal parabolic of `l` for the Cartan involution `theta` (on `l`),
/// together with the root data it was built from.
pub fn minimal_parabolic(
    l: &LieAlgebra,
    theta: &Involution,
    order: PickOrder,
) -> Result<(RestrictedRootSystem, ParabolicSubalgebra), ParabolicError> {
    let (k, s) = cartan_split(theta);
    let a = maximal_abelian_in_s(l, &s, order)?;
    let roots = restricted_roots(l, &a)?;
    let d = l.dim();
    let m = centralizer(l, &a, &k)?;
    let mut n = SubspaceBasis::zero(d);
    for i in roots.positive_indices() {
        n = n.sum(&roots.root_spaces[i])?;
    }
    let p = m.sum(&a)?.sum(&n)?;
    Ok((roots, ParabolicSubalgebra { m, a, n, p }))
}

/// Whether the lower central series of `n` reaches zero.
pub fn is_nilpotent(l: &LieAlgebra, n: &SubspaceBasis) -> bool {
    let d = l.dim();
    let mut cur = n.clone();
    for _ in 0..=n.dim() {
        if cur.is_zero() {
            return true;
        }
        let vecs = n
            .vectors()
            .iter()
            .flat_map(|x| cur.vectors().iter().map(move |y| (x, y)))
            .map(|(x, y)| l.bracket(x, y))
            .collect();
        cur = SubspaceBasis::span(d, vecs).expect("ambient dim");
    }
    cur.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericityEvidence {
    pub dim_l: usize,
    pub dim_l_cap_h: usize,
    pub dim_m: usize,
    pub dim_a: usize,
    pub dim_n: usize,
    pub dim_p: usize,
    pub dim_p_cap_l_cap_h: usize,
    pub dim_sum: usize,
    pub spherical: bool,
}

/// Open-orbit test `p_L + (l ∩ h) = l`.
pub fn is_spherical_triple(t: &TripleDescriptor, order: PickOrder) -> Result<SphericityEvidence, ParabolicError> {
    let l_alg = t.l_algebra();
    let theta = t.theta_on_l()?;
    let (_, par) = minimal_parabolic(&l_alg, &theta, order)?;
    let lh = t.to_l_coordinates(&t.l_cap_h());
    let sum = par.p.sum(&lh)?;
    let cap = par.p.intersection(&lh)?;
    Ok(SphericityEvidence {
        dim_l: l_alg.dim(),
        dim_l_cap_h: lh.dim(),
        dim_m: par.m.dim(),
        dim_a: par.a.dim(),
        dim_n: par.n.dim(),
        dim_p: par.p.dim(),
        dim_p_cap_l_cap_h: cap.dim(),
        dim_sum: sum.dim(),
        spherical: sum.dim() == l_alg.dim(),
    })
}
