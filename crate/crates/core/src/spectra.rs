//! Weight bookkeeping for Casimir eigenvalues and the Lorentzian spectrum
//! table.
//!
//! Weights are written by their values on a basis of a split Cartan
//! subspace `t`. With `G` the Gram matrix of the Killing form of the
//! ambient algebra on that basis, the induced pairing on weights is
//! `<λ, μ> = λᵀ G⁻¹ μ`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{killing_form, restrict_form, LieAlgebra, LieError};
use crate::pairs::TripleDescriptor;
use crate::parabolic::{minimal_parabolic, restricted_roots, ParabolicError, PickOrder};
use crate::ratlin::{dot, Inertia, RatMatrix, SubspaceBasis, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("weight frame gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("weight has {got} coordinates, frame has rank {rank}")]
    Rank { rank: usize, got: usize },
    #[error("spectrum report needs n >= 2, got {0}")]
    SmallN(usize),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFrame {
    rank: usize,
    gram: RatMatrix,
    rho: Vec<Q>,
}

impl WeightFrame {
    pub fn new(gram: RatMatrix, rho: Vec<Q>) -> Result<Self, SpectraError> {
        let rank = gram.rows();
        if rho.len() != rank {
            return Err(SpectraError::Rank { rank, got: rho.len() });
        }
        match gram.signature() {
            Ok(s) if s == Inertia::new(rank, 0, 0) => Ok(Self { rank, gram, rho }),
            _ => Err(SpectraError::NotPositiveDefinite),
        }
    }

    /// Frame of the split Cartan subspace `cartan` of `g` (on which `ad` is
    /// diagonalizable over Q), normalized by `form` (a form on all of `g`).
    /// `ρ` is half the sum of the lexicographically positive roots, counted
    /// with multiplicity.
    pub fn from_split_cartan(g: &LieAlgebra, cartan: &SubspaceBasis, form: &RatMatrix) -> Result<Self, SpectraError> {
        let roots = restricted_roots(g, cartan)?;
        let dual = restrict_form(form, cartan)?.inverse().ok_or(SpectraError::NotPositiveDefinite)?;
        let r = cartan.dim();
        let mut rho = vec![Q::zero(); r];
        let half = Q::new(1.into(), 2.into());
        for i in roots.positive_indices() {
            let mult = Q::from_integer(roots.root_spaces[i].dim().into());
            for (x, a) in rho.iter_mut().zip(&roots.roots[i]) {
                *x += &half * &mult * a;
            }
        }
        Self::new(dual, rho)
    }

    /// Frame on `a_L` for a triple, normalized by the Killing form of `g`.
    pub fn for_triple(t: &TripleDescriptor) -> Result<Self, SpectraError> {
        let l_alg = t.l_algebra();
        let theta = t.theta_on_l().map_err(ParabolicError::from)?;
        let (_, par) = minimal_parabolic(&l_alg, &theta, PickOrder::Forward)?;
        let form = restrict_form(killing_form(t.g()).gram(), t.l())?;
        Self::from_split_cartan(&l_alg, &par.a, &form)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn rho(&self) -> &[Q] {
        &self.rho
    }

    pub fn pair(&self, a: &[Q], b: &[Q]) -> Result<Q, SpectraError> {
        for v in [a, b] {
            if v.len() != self.rank {
                return Err(SpectraError::Rank { rank: self.rank, got: v.len() });
            }
        }
        Ok(dot(a, &self.gram.mul_vec(b)))
    }
}

/// `<μ + 2ρ, μ>`.
pub fn casimir_scalar_lowest_type(frame: &WeightFrame, mu: &[Q]) -> Result<Q, SpectraError> {
    let two = Q::from_integer(2.into());
    let shifted: Vec<Q> = mu.iter().zip(frame.rho()).map(|(m, r)| m + &two * r).collect();
    frame.pair(&shifted, mu)
}

/// `<Λ, Λ> - <ρ, ρ>`.
pub fn infinitesimal_character_scalar(frame: &WeightFrame, lambda: &[Q]) -> Result<Q, SpectraError> {
    Ok(frame.pair(lambda, lambda)? - frame.pair(frame.rho(), frame.rho())?)
}

/// Interval endpoints; `None` is infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Band {
    #[serde(with = "crate::ratlin::serde_q::opt")]
    pub lower: Option<Q>,
    pub lower_closed: bool,
    #[serde(with = "crate::ratlin::serde_q::opt")]
    pub upper: Option<Q>,
    pub upper_closed: bool,
    pub attribution: String,
}

impl Band {
    pub fn contains(&self, x: &Q) -> bool {
        let lo = match &self.lower {
            None => true,
            Some(l) if self.lower_closed => x >= l,
            Some(l) => x > l,
        };
        let hi = match &self.upper {
            None => true,
            Some(u) if self.upper_closed => x <= u,
            Some(u) => x < u,
        };
        lo && hi
    }

    pub fn interval(&self) -> String {
        let lo = self.lower.as_ref().map_or("-inf".to_string(), Q::to_string);
        let hi = self.upper.as_ref().map_or("+inf".to_string(), Q::to_string);
        format!(
            "{}{lo}, {hi}{}",
            if self.lower_closed { '[' } else { '(' },
            if self.upper_closed { ']' } else { ')' }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscreteEigenvalue {
    pub ell: u64,
    #[serde(with = "crate::ratlin::serde_q")]
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    #[serde(with = "crate::ratlin::serde_q")]
    pub cutoff: Q,
    pub bands: Vec<Band>,
    pub discrete_positive: Vec<DiscreteEigenvalue>,
    pub eigenspace_note: String,
}

/// Spectral bands of the Laplacian on compact quotients of
/// `SO(2,2n)/SO(1,2n)` and the positive discrete values `ℓ² - n²`,
/// `ℓ > n`, up to `cutoff`.
pub fn lorentzian_spectrum_report(n: usize, cutoff: &Q) -> Result<SpectrumReport, SpectraError> {
    if n < 2 {
        return Err(SpectraError::SmallN(n));
    }
    let n2 = Q::from_integer((n as i64 * n as i64).into());
    let bands = vec![
        Band {
            lower: None,
            lower_closed: false,
            upper: Some(-n2.clone()),
            upper_closed: true,
            attribution: "unitary principal series; limits of discrete series at the endpoint -n^2".into(),
        },
        Band {
            lower: Some(-n2.clone()),
            lower_closed: false,
            upper: Some(Q::zero()),
            upper_closed: true,
            attribution: "complementary series".into(),
        },
        Band {
            lower: Some(Q::zero()),
            lower_closed: false,
            upper: None,
            upper_closed: false,
            attribution: "integrable discrete series; infinite-dimensional eigenspaces".into(),
        },
    ];
    let mut discrete_positive = Vec::new();
    let mut ell = n as u64 + 1;
    loop {
        let l = Q::from_integer((ell as i64).into());
        let value = &l * &l - &n2;
        if &value > cutoff {
            break;
        }
        discrete_positive.push(DiscreteEigenvalue { ell, value });
        ell += 1;
    }
    Ok(SpectrumReport {
        n,
        cutoff: cutoff.clone(),
        bands,
        discrete_positive,
        eigenspace_note: format!(
            "positive eigenvalues l^2 - n^2 (l >= n+1) carry infinite-dimensional eigenspaces; \
             the boundary value -{n2} is assigned to the first band only"
        ),
    })
}

/// The `sl(2)` frame: `t = span{H}` with the Killing form (`B(H,H) = 8`).
pub fn sl2_frame() -> WeightFrame {
    let g = crate::liealg::sl(2).expect("sl(2)");
    let h = SubspaceBasis::span(3, vec![g.basis_vector(0)]).expect("H");
    WeightFrame::from_split_cartan(&g, &h, killing_form(&g).gram()).expect("split")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::{q, qr};

    #[test]
    fn sl2_frame_values() {
        let f = sl2_frame();
        assert_eq!(f.gram(), &RatMatrix::diagonal(&[qr(1, 8)]));
        assert_eq!(f.rho(), &[q(1)]);
        // <α, α> with α(H) = 2
        assert_eq!(f.pair(&[q(2)], &[q(2)]).unwrap(), qr(1, 2));
    }

    #[test]
    fn trivial_weights() {
        let f = sl2_frame();
        assert!(casimir_scalar_lowest_type(&f, &[q(0)]).unwrap().is_zero());
        assert!(infinitesimal_character_scalar(&f, &[q(1)]).unwrap().is_zero());
        assert_eq!(infinitesimal_character_scalar(&f, &[q(0)]).unwrap(), qr(-1, 8));
    }

    #[test]
    fn adjoint_and_fundamental() {
        let f = sl2_frame();
        assert_eq!(casimir_scalar_lowest_type(&f, &[q(2)]).unwrap(), q(1));
        assert_eq!(casimir_scalar_lowest_type(&f, &[q(1)]).unwrap(), qr(3, 8));
    }

    #[test]
    fn spectrum_examples() {
        let vals = |n, c| -> Vec<Q> {
            lorentzian_spectrum_report(n, &q(c)).unwrap().discrete_positive.into_iter().map(|d| d.value).collect()
        };
        assert_eq!(vals(2, 50), vec![q(5), q(12), q(21), q(32), q(45)]);
        assert!(vals(2, 4).is_empty());
        assert_eq!(vals(3, 10), vec![q(7)]);
        assert!(matches!(lorentzian_spectrum_report(1, &q(10)), Err(SpectraError::SmallN(1))));
    }

    #[test]
    fn bands_partition() {
        let r = lorentzian_spectrum_report(2, &q(0)).unwrap();
        for x in [-100, -5, -4, -3, -1, 0, 1, 7] {
            let hits = r.bands.iter().filter(|b| b.contains(&q(x))).count();
            assert_eq!(hits, 1, "{x}");
        }
        assert!(r.bands[0].contains(&q(-4)));
        assert_eq!(r.bands[1].interval(), "(-4, 0]");
    }
}
