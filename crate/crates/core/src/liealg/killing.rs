use num_traits::Zero;

use super::{LieAlgebra, LieError};
use crate::ratlin::{Inertia, RatMatrix, RatlinError, SubspaceBasis, Q};

/// `B(X_i, X_j) = tr(ad X_i ∘ ad X_j)` on the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    gram: RatMatrix,
}

impl KillingForm {
    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Q], y: &[Q]) -> Q {
        crate::ratlin::dot(x, &self.gram.mul_vec(y))
    }

    pub fn signature(&self) -> Inertia {
        self.gram.signature().expect("Killing form is symmetric")
    }

    /// Checks `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples and returns
    /// the number of triples checked.
    pub fn check_ad_invariance(&self, g: &LieAlgebra) -> Result<usize, (usize, usize, usize)> {
        let d = g.dim();
        let mut checked = 0;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let xy = g.structure(x, y);
                    let xz = g.structure(x, z);
                    let lhs = self.eval(xy, &g.basis_vector(z)) + self.eval(&g.basis_vector(y), xz);
                    if !lhs.is_zero() {
                        return Err((x, y, z));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }
}

pub fn killing_form(g: &LieAlgebra) -> KillingForm {
    let d = g.dim();
    let ads: Vec<RatMatrix> = (0..d).map(|i| g.ad_basis(i)).collect();
    let mut gram = RatMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let t = ads[i].trace_of_product(&ads[j]);
            *gram.entry_mut(i, j) = t.clone();
            *gram.entry_mut(j, i) = t;
        }
    }
    KillingForm { gram }
}

/// Gram matrix of `form` on the canonical basis of `s`.
pub fn restrict_form(form: &RatMatrix, s: &SubspaceBasis) -> Result<RatMatrix, LieError> {
    if s.ambient_dim() != form.rows() {
        return Err(RatlinError::AmbientMismatch { left: form.rows(), right: s.ambient_dim() }.into());
    }
    let basis = s.matrix();
    Ok(&(&basis * form) * &basis.transpose())
}
