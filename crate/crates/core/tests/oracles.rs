//! Independent cross-checks: quantities recomputed from explicit matrices,
//! bypassing the structure-constant machinery they are compared with.

use lietriple::env2::{casimir, Quad2};
use lietriple::liealg::{g2_split, invariant_symmetric_forms, killing_form, so, su, LieAlgebra};
use lietriple::ratlin::{q, qr, Inertia, RatMatrix, SubspaceBasis, Q};
use lietriple::spectra::{casimir_scalar_lowest_type, infinitesimal_character_scalar, sl2_frame};
use num_traits::Zero;

fn flatten(m: &RatMatrix) -> Vec<Q> {
    m.entries().to_vec()
}

/// Adjoint matrices recomputed from matrix commutators of the realization.
fn adjoint_from_matrices(mats: &[RatMatrix]) -> Vec<RatMatrix> {
    let d = mats.len();
    let n = mats[0].rows();
    let cols: Vec<Vec<Q>> = mats.iter().map(flatten).collect();
    let basis = RatMatrix::from_columns(&cols, n * n);
    (0..d)
        .map(|a| {
            let images: Vec<Vec<Q>> = (0..d)
                .map(|b| {
                    let c = mats[a].commutator(&mats[b]);
                    basis.solve(&flatten(&c)).unwrap().expect("closed under brackets")
                })
                .collect();
            RatMatrix::from_columns(&images, d)
        })
        .collect()
}

/// `sum_ab G^{-1}_ab rep[a] rep[b]`.
fn casimir_operator(ginv: &RatMatrix, rep: &[RatMatrix]) -> RatMatrix {
    let n = rep[0].rows();
    let mut acc = RatMatrix::zeros(n, n);
    for a in 0..rep.len() {
        for b in 0..rep.len() {
            let c = ginv.get(a, b);
            if !c.is_zero() {
                acc = &acc + &(&rep[a] * &rep[b]).scale(c);
            }
        }
    }
    acc
}

fn killing_inverse(g: &LieAlgebra) -> RatMatrix {
    killing_form(g).gram().inverse().unwrap()
}

#[test]
fn so_killing_is_trace_form_times_m_minus_2() {
    let mut checked = 0;
    for (p, q_) in [(3, 0), (2, 1), (4, 0), (2, 2), (3, 2), (4, 3), (2, 4)] {
        let g = so(p, q_).unwrap();
        let m = (p + q_) as i64;
        let b = killing_form(&g);
        let mats = g.realization().unwrap();
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let tr = (&mats[i] * &mats[j]).trace();
                assert_eq!(b.gram().get(i, j), &(tr * q(m - 2)), "so({p},{q_}) entry ({i},{j})");
                checked += 1;
            }
        }
    }
    assert!(checked >= 100);
}

#[test]
fn adjoint_casimir_is_identity_for_su2_and_so3() {
    for g in [su(2, 0).unwrap(), so(3, 0).unwrap()] {
        let ad = adjoint_from_matrices(g.realization().unwrap());
        let omega = casimir_operator(&killing_inverse(&g), &ad);
        assert!(omega.is_identity(), "{omega:?}");
    }
}

#[test]
fn su2_defining_representation_casimir() {
    // 2 complex dimensions, realified to 4 real ones
    let g = su(2, 0).unwrap();
    let omega = casimir_operator(&killing_inverse(&g), g.realization().unwrap());
    let expected = casimir_scalar_lowest_type(&sl2_frame(), &[q(1)]).unwrap();
    assert_eq!(expected, qr(3, 8));
    assert_eq!(omega, RatMatrix::identity(4).scale(&expected));
}

#[test]
fn g2_invariant_form_signature() {
    let g = g2_split().unwrap();
    let forms = invariant_symmetric_forms(&g).unwrap();
    assert_eq!(forms.len(), 1);
    let s = forms[0].signature().unwrap();
    assert!(s == Inertia::new(4, 3, 0) || s == Inertia::new(3, 4, 0), "{s}");
    for x in g.realization().unwrap() {
        assert!((&(&x.transpose() * &forms[0]) + &(&forms[0] * x)).is_zero());
    }
}

/// Truncated lowest-weight module of sl(2): `H v_k = (λ+2k) v_k`,
/// `E v_k = v_{k+1}`, `F v_k = -k(λ+k-1) v_{k-1}`.
fn lowest_weight_module(lambda: &Q, n: usize) -> [RatMatrix; 3] {
    let mut h = RatMatrix::zeros(n, n);
    let mut e = RatMatrix::zeros(n, n);
    let mut f = RatMatrix::zeros(n, n);
    for k in 0..n {
        let kq = q(k as i64);
        h = &h + &RatMatrix::from_fn(n, n, |i, j| if i == k && j == k { lambda + &(&kq * q(2)) } else { q(0) });
        if k + 1 < n {
            e = &e + &RatMatrix::from_fn(n, n, |i, j| if i == k + 1 && j == k { q(1) } else { q(0) });
        }
        if k > 0 {
            let c = -(&kq * (lambda + &kq - q(1)));
            f = &f + &RatMatrix::from_fn(n, n, |i, j| if i == k - 1 && j == k { c.clone() } else { q(0) });
        }
    }
    [h, e, f]
}

fn act(q2: &Quad2, rep: &[RatMatrix]) -> RatMatrix {
    let n = rep[0].rows();
    let mut acc = RatMatrix::identity(n).scale(q2.constant());
    for i in 0..rep.len() {
        for j in i..rep.len() {
            let c = q2.quad().get(i, j);
            if !c.is_zero() {
                acc = &acc + &(&rep[i] * &rep[j]).scale(c);
            }
        }
        if !q2.lin()[i].is_zero() {
            acc = &acc + &rep[i].scale(&q2.lin()[i]);
        }
    }
    acc
}

#[test]
fn sl2_lowest_weight_module_scalar() {
    let g = lietriple::liealg::sl(2).unwrap();
    let omega = casimir(&g, &SubspaceBasis::full(3), killing_form(&g).gram()).unwrap();
    let frame = sl2_frame();
    let n = 6;
    for lambda in [q(1), q(2), q(3), q(5), qr(3, 2), qr(-7, 3)] {
        let rep = lowest_weight_module(&lambda, n);
        // sanity: the truncation is a representation away from the top vector
        let comm = rep[1].commutator(&rep[2]);
        for k in 0..n - 1 {
            assert_eq!(comm.get(k, k), rep[0].get(k, k));
        }
        let m = act(&omega, &rep);
        let expected = (&lambda * &lambda - &lambda * q(2)) / q(8);
        for k in 0..n - 1 {
            assert_eq!(m.get(k, k), &expected, "λ={lambda} k={k}");
        }
        let ic = infinitesimal_character_scalar(&frame, &[&lambda - q(1)]).unwrap();
        assert_eq!(ic, expected);
    }
}
