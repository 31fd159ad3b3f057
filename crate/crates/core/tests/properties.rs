use lietriple::catalog::Catalog;
use lietriple::env2::{
    bracket_with, casimir, iota_embed, iota_embed_with_complement, random_complement, reduce_mod_left_ideal, Quad2,
};
use lietriple::liealg::{killing_form, restrict_form, sl, so, LieAlgebra};
use lietriple::pairs::{eigenspace_split, is_compact_subalgebra};
use lietriple::parabolic::{is_nilpotent, is_spherical_triple, minimal_parabolic, PickOrder};
use lietriple::ratlin::{parse_rational, q, Inertia, RatMatrix, RatPoly, SubspaceBasis, Q};
use lietriple::spectra::{
    casimir_scalar_lowest_type, infinitesimal_character_scalar, lorentzian_spectrum_report, WeightFrame,
};
use num_traits::Zero;
use proptest::prelude::*;

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| RatMatrix::from_fn(rows, cols, |i, j| q(v[i * cols + j])))
}

fn subspace(ambient: usize) -> impl Strategy<Value = SubspaceBasis> {
    (0..=ambient).prop_flat_map(move |k| {
        int_matrix(k, ambient).prop_map(move |m| SubspaceBasis::span(ambient, m.to_rows()).unwrap())
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in int_matrix(4, 5)) {
        let e = m.rref();
        let again = RatMatrix::from_rows(e.rows.clone()).map(|r| r.rref().rows).unwrap_or_default();
        prop_assert_eq!(again, e.rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_is_annihilated(m in int_matrix(3, 6)) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), 6);
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn dimension_formula(a in subspace(5), b in subspace(5)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(a.contains_subspace(&i) && b.contains_subspace(&i));
        prop_assert!(s.contains_subspace(&a) && s.contains_subspace(&b));
    }

    #[test]
    fn inverse_round_trip(m in int_matrix(4, 4)) {
        if let Some(inv) = m.inverse() {
            prop_assert!((&m * &inv).is_identity());
        } else {
            prop_assert!(m.rank() < 4);
        }
    }

    #[test]
    fn signature_is_congruence_invariant(a in int_matrix(4, 4), p in int_matrix(4, 4)) {
        let s = &a + &a.transpose();
        prop_assume!(p.inverse().is_some());
        let t = &(&p.transpose() * &s) * &p;
        prop_assert_eq!(s.signature().unwrap(), t.signature().unwrap());
    }

    #[test]
    fn cayley_hamilton(m in int_matrix(4, 4)) {
        let p = m.char_poly();
        let mut acc = RatMatrix::zeros(4, 4);
        let mut power = RatMatrix::identity(4);
        for c in p.coeffs() {
            acc = &acc + &power.scale(c);
            power = &power * &m;
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn rational_roots_recovered(roots in prop::collection::vec((-6i64..=6, 1i64..=3), 1..5)) {
        let mut p = RatPoly::new(vec![q(1)]);
        let mut expected: Vec<Q> = Vec::new();
        for (n, d) in &roots {
            let r = Q::new((*n).into(), (*d).into());
            let factor = RatPoly::new(vec![-r.clone(), q(1)]);
            p = mul(&p, &factor);
            if !expected.contains(&r) {
                expected.push(r);
            }
        }
        expected.sort();
        prop_assert_eq!(p.rational_roots(), (expected, 0));
    }

    #[test]
    fn rational_display_round_trips(n in -1000i64..1000, d in 1i64..50) {
        let x = Q::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn normal_order_is_presentation_independent(
        entries in prop::collection::vec(-3i64..=3, 36),
        flips in prop::collection::vec(any::<bool>(), 36),
    ) {
        let g = so(2, 2).unwrap();
        let d = g.dim();
        let full = RatMatrix::from_fn(d, d, |i, j| q(entries[i * d + j]));
        let zero = vec![q(0); d];
        let a = Quad2::normal_order(&g, &full, &zero, q(0));
        // move c X_i X_j to c X_j X_i + c [X_i, X_j] for random pairs
        let mut moved = full.to_rows();
        let mut lin = zero.clone();
        for i in 0..d {
            for j in 0..d {
                if i != j && flips[i * d + j] {
                    let c = moved[i][j].clone();
                    moved[i][j] = q(0);
                    moved[j][i] += &c;
                    for (l, s) in lin.iter_mut().zip(g.structure(i, j)) {
                        *l += &c * s;
                    }
                }
            }
        }
        let b = Quad2::normal_order(&g, &RatMatrix::from_rows(moved).unwrap(), &lin, q(0));
        prop_assert_eq!(a, b);
    }
}

fn mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut c = vec![q(0); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    RatPoly::new(c)
}

fn catalog_algebras() -> Vec<(String, LieAlgebra)> {
    let c = Catalog::shipped();
    let mut out: Vec<(String, LieAlgebra)> = Vec::new();
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        out.push((format!("{name}/g"), t.g().clone()));
        out.push((format!("{name}/l"), t.l_algebra()));
    }
    out
}

#[test]
fn jacobi_and_ad_invariance_on_catalog() {
    let mut total = 0;
    for (name, g) in catalog_algebras() {
        let d = g.dim();
        let jacobi = g.check_jacobi().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(jacobi, d * (d - 1) * (d - 2) / 6, "{name}: not exhaustive");
        assert_eq!(g.check_antisymmetry().unwrap(), d * d);
        let inv = killing_form(&g).check_ad_invariance(&g).unwrap_or_else(|t| panic!("{name}: {t:?}"));
        assert_eq!(inv, d.pow(3), "{name}: not exhaustive");
        total += jacobi + inv;
    }
    assert!(total >= 100);
}

#[test]
fn casimir_is_central_on_catalog() {
    let c = Catalog::shipped();
    let mut checked = 0;
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        let g = t.g();
        let om = casimir(g, &SubspaceBasis::full(g.dim()), killing_form(g).gram()).unwrap();
        for i in 0..g.dim() {
            assert!(bracket_with(g, &om, &g.basis_vector(i)).unwrap().is_zero(), "{name} X_{i}");
            checked += 1;
        }
    }
    assert!(checked >= 70);
}

#[test]
fn involution_splittings_are_graded() {
    let c = Catalog::shipped();
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        let g = t.g();
        for inv in [t.sigma(), t.theta()] {
            let (plus, minus) = eigenspace_split(inv);
            assert_eq!(plus.dim() + minus.dim(), g.dim());
            for (a, b, target) in [(&plus, &plus, &plus), (&plus, &minus, &minus), (&minus, &minus, &plus)] {
                for x in a.vectors() {
                    for y in b.vectors() {
                        assert!(target.contains(&g.bracket(x, y)), "{name}");
                    }
                }
            }
        }
        assert!(t.sigma().commutes_with(t.theta()));
        assert!(is_compact_subalgebra(g, &t.k()), "{name}: k not compact");
        let s = t.s();
        let sig = restrict_form(killing_form(g).gram(), &s).unwrap().signature().unwrap();
        assert_eq!(sig, Inertia::new(s.dim(), 0, 0), "{name}");
    }
}

#[test]
fn iota_output_is_invariant_and_complement_independent() {
    let c = Catalog::shipped();
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        let g = t.g();
        let om = casimir(g, &SubspaceBasis::full(g.dim()), killing_form(g).gram()).unwrap();
        let io = iota_embed(&t, &om).unwrap();
        assert_eq!(io.degree(), Some(2), "{name}");
        let l = t.l_algebra();
        let lh = t.to_l_coordinates(&t.l_cap_h());
        for x in lh.vectors() {
            let b = bracket_with(&l, &io, x).unwrap();
            assert!(reduce_mod_left_ideal(&l, &b, &lh).unwrap().is_zero(), "{name}");
        }
        for seed in 0..5u64 {
            let w = random_complement(&t, seed);
            assert_eq!(iota_embed_with_complement(&t, &om, &w).unwrap(), io, "{name} seed {seed}");
        }
    }
}

#[test]
fn restricted_roots_are_complete_and_paired() {
    let c = Catalog::shipped();
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        let l = t.l_algebra();
        let theta = t.theta_on_l().unwrap();
        let (rs, par) = minimal_parabolic(&l, &theta, PickOrder::Forward).unwrap();
        let mut total = rs.zero_space.clone();
        for (r, sp) in rs.roots.iter().zip(&rs.root_spaces) {
            total = total.sum(sp).unwrap();
            let neg: Vec<Q> = r.iter().map(|x| -x).collect();
            assert_eq!(rs.root_space(&neg).map(SubspaceBasis::dim), Some(sp.dim()), "{name}");
            for h in rs.a_basis.vectors().iter() {
                let ad = l.ad(h);
                let k = rs.a_basis.coordinates(h).unwrap();
                let value: Q = k.iter().zip(r).map(|(a, b)| a * b).sum();
                for v in sp.vectors() {
                    let lhs = ad.mul_vec(v);
                    let rhs: Vec<Q> = v.iter().map(|x| x * &value).collect();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
        }
        let dims: usize = rs.zero_space.dim() + rs.root_spaces.iter().map(SubspaceBasis::dim).sum::<usize>();
        assert_eq!(dims, l.dim(), "{name}");
        assert!(total.is_full(), "{name}");
        assert!(is_nilpotent(&l, &par.n), "{name}");
        assert!(lietriple::liealg::is_subalgebra(&l, &par.p), "{name}");
        assert_eq!(par.p.dim(), par.m.dim() + par.a.dim() + par.n.dim());
        for x in par.p.vectors() {
            for y in par.n.vectors() {
                assert!(par.n.contains(&l.bracket(x, y)), "{name}");
            }
        }
    }
}

#[test]
fn sphericity_independent_of_pick_order() {
    let c = Catalog::shipped();
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        let f = is_spherical_triple(&t, PickOrder::Forward).unwrap();
        let r = is_spherical_triple(&t, PickOrder::Reversed).unwrap();
        assert_eq!(f.spherical, r.spherical, "{name}");
        assert_eq!(f.dim_p, r.dim_p, "{name}");
    }
}

#[test]
fn catalog_frames() {
    let c = Catalog::shipped();
    for name in c.names() {
        let t = c.entry(&name).unwrap().descriptor;
        let f = WeightFrame::for_triple(&t).unwrap();
        assert_eq!(f.gram().signature().unwrap(), Inertia::new(f.rank(), 0, 0));
        let zero = vec![q(0); f.rank()];
        assert!(casimir_scalar_lowest_type(&f, &zero).unwrap().is_zero());
        assert!(infinitesimal_character_scalar(&f, f.rho()).unwrap().is_zero());
    }
}

#[test]
fn spectrum_shape() {
    for n in 2..=10usize {
        let r = lorentzian_spectrum_report(n, &q(400)).unwrap();
        let vals: Vec<&Q> = r.discrete_positive.iter().map(|d| &d.value).collect();
        assert_eq!(vals[0], &q(2 * n as i64 + 1));
        assert!(vals.windows(2).all(|w| w[0] < w[1]));
        for d in &r.discrete_positive {
            let l = d.ell as i64;
            assert_eq!(d.value, q(l * l - (n * n) as i64));
        }
        let n2 = -q((n * n) as i64);
        assert_eq!(r.bands[0].upper.as_ref(), Some(&n2));
        assert_eq!(r.bands[1].lower.as_ref(), Some(&n2));
        assert!(r.bands[0].upper_closed && !r.bands[1].lower_closed);
        assert!(r.bands[1].upper_closed && !r.bands[2].lower_closed);
    }
}

#[test]
fn sl2_casimir_matches_hand_computation() {
    let g = sl(2).unwrap();
    let om = casimir(&g, &SubspaceBasis::full(3), killing_form(&g).gram()).unwrap();
    let sym = {
        // symmetrized dual-basis sum gives the same element
        let ginv = killing_form(&g).gram().inverse().unwrap();
        let half = Q::new(1.into(), 2.into());
        let full = (&ginv + &ginv.transpose()).scale(&half);
        Quad2::normal_order(&g, &full, &[q(0), q(0), q(0)], q(0))
    };
    assert_eq!(om, sym);
}
