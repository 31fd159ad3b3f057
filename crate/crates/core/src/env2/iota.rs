use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bracket_with, casimir, change_basis, Env2Error, IdealReducer, Quad2};
use crate::liealg::{killing_form, restrict_form, LieAlgebra};
use crate::pairs::TripleDescriptor;
use crate::ratlin::{RatMatrix, SubspaceBasis, Q};

/// The quadratic elements of `U(l)` the embedded Casimir is matched against,
/// all normalized by the Killing form of `g` and written in `l`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub omega_l: Quad2,
    pub omega_l_cap_k: Quad2,
    pub omega_l_cap_s_cap_q: Quad2,
}

impl Generators {
    pub fn names() -> [&'static str; 3] {
        ["omega_l", "omega_l_cap_k", "omega_l_cap_s_cap_q"]
    }

    pub fn as_vec(&self) -> Vec<Quad2> {
        vec![self.omega_l.clone(), self.omega_l_cap_k.clone(), self.omega_l_cap_s_cap_q.clone()]
    }
}

pub fn standard_generators(t: &TripleDescriptor) -> Result<Generators, Env2Error> {
    let l_alg = t.l_algebra();
    let form = restrict_form(killing_form(t.g()).gram(), t.l())?;
    let full = SubspaceBasis::full(l_alg.dim());
    Ok(Generators {
        omega_l: casimir(&l_alg, &full, &form)?,
        omega_l_cap_k: casimir(&l_alg, &t.to_l_coordinates(&t.l_cap_k()), &form)?,
        omega_l_cap_s_cap_q: casimir(&l_alg, &t.to_l_coordinates(&t.l_cap_s_cap_q()), &form)?,
    })
}

/// A complement of `l ∩ h` in `h` built from random small-integer
/// combinations of the basis of `h`; deterministic in `seed`.
pub fn random_complement(t: &TripleDescriptor, seed: u64) -> Vec<Vec<Q>> {
    let h = t.h();
    let d = t.g().dim();
    let need = h.dim() - t.l_cap_h().dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = t.l_cap_h();
    let mut out = Vec::with_capacity(need);
    while out.len() < need {
        let coeffs: Vec<Q> = (0..h.dim()).map(|_| Q::from_integer(rng.gen_range(-3i64..=3).into())).collect();
        let v = h.combine(&coeffs);
        if acc.contains(&v) {
            continue;
        }
        acc = acc.sum(&SubspaceBasis::span(d, vec![v.clone()]).expect("ambient")).expect("ambient");
        out.push(v);
    }
    out
}

/// `ι(q)` using the complement of `l ∩ h` in `h` taken from the canonical
/// basis of `h`.
pub fn iota_embed(t: &TripleDescriptor, q: &Quad2) -> Result<Quad2, Env2Error> {
    let w = t.h().complement_of(&t.l_cap_h());
    iota_embed_with_complement(t, q, &w)
}

/// `ι(q)` with an explicit complement `w` of `l ∩ h` inside `h`. The result
/// is the canonical representative modulo `U(l)(l ∩ h)`, in
/// `l`-coordinates.
pub fn iota_embed_with_complement(t: &TripleDescriptor, q: &Quad2, w: &[Vec<Q>]) -> Result<Quad2, Env2Error> {
    let g = t.g();
    let d = g.dim();
    if q.dim() != d {
        return Err(Env2Error::DimensionMismatch { expected: d, got: q.dim() });
    }
    let h = t.h();
    let l = t.l();
    if h.sum(l)?.dim() != d {
        return Err(Env2Error::NotTransitive);
    }
    let h_reducer = IdealReducer::new(g, &h)?;
    for (index, x) in h.vectors().iter().enumerate() {
        let b = bracket_with(g, q, x)?;
        if !b.is_zero() && !h_reducer.reduce(&b)?.is_zero() {
            return Err(Env2Error::NotInvariant { index });
        }
    }

    let k = l.dim();
    let mut rows: Vec<Vec<Q>> = l.vectors().to_vec();
    rows.extend(w.iter().cloned());
    if rows.len() != d || !w.iter().all(|v| h.contains(v)) {
        return Err(Env2Error::NotTransitive);
    }
    let r = RatMatrix::from_rows(rows)?;
    let winv = r.inverse().ok_or(Env2Error::NotTransitive)?;
    let adapted = g.rebased(&r)?;
    let z = change_basis(&adapted, q, &winv);

    // monomials ending in w lie in U(g)h; what is left is in U(l)
    let mut out = Quad2::scalar(k, z.constant.clone());
    for a in 0..k {
        for b in a..k {
            *out.quad.entry_mut(a, b) = z.quad.get(a, b).clone();
        }
        out.lin[a] = z.lin[a].clone();
    }
    let l_alg = t.l_algebra();
    IdealReducer::new(&l_alg, &t.to_l_coordinates(&t.l_cap_h()))?.reduce(&out)
}

/// Coefficients `c` with `target ≡ sum c_i gens_i` modulo `U(l) ideal`, if
/// any. Free directions (generators vanishing modulo the ideal) get zero.
pub fn decompose_in_span(
    l: &LieAlgebra,
    target: &Quad2,
    gens: &[Quad2],
    ideal: &SubspaceBasis,
) -> Result<Option<Vec<Q>>, Env2Error> {
    let red = IdealReducer::new(l, ideal)?;
    let t = red.reduce(target)?.flatten();
    let cols: Vec<Vec<Q>> = gens.iter().map(|g| red.reduce(g).map(|r| r.flatten())).collect::<Result<_, _>>()?;
    if cols.is_empty() {
        return Ok(t.iter().all(num_traits::Zero::is_zero).then(Vec::new));
    }
    let m = RatMatrix::from_columns(&cols, t.len());
    Ok(m.solve(&t)?)
}

/// Everything `casimir embed` reports for one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirEmbedding {
    pub iota_omega_g: Quad2,
    pub generator_names: Vec<String>,
    pub generators: Vec<Quad2>,
    /// `None` when the target is not in the span modulo the ideal.
    pub coefficients: Option<Vec<Q>>,
    /// Canonical form of `ι(Ω_G) - sum c_i gen_i` (zero iff exact).
    pub residual: Quad2,
    /// Whether the generators that survive modulo the ideal are independent
    /// there, so every coefficient not attached to a vanishing generator is
    /// determined. Vanishing generators get coefficient zero.
    pub unique: bool,
    pub complement: Vec<Vec<Q>>,
}

pub fn embed_casimir(t: &TripleDescriptor, names: &[String]) -> Result<CasimirEmbedding, Env2Error> {
    let g = t.g();
    let omega = casimir(g, &SubspaceBasis::full(g.dim()), killing_form(g).gram())?;
    let complement = t.h().complement_of(&t.l_cap_h());
    let iota = iota_embed_with_complement(t, &omega, &complement)?;
    let all = standard_generators(t)?;
    let generators: Vec<Quad2> = names
        .iter()
        .map(|n| match n.as_str() {
            "omega_l" => all.omega_l.clone(),
            "omega_l_cap_k" => all.omega_l_cap_k.clone(),
            _ => all.omega_l_cap_s_cap_q.clone(),
        })
        .collect();
    let l_alg = t.l_algebra();
    let ideal = t.to_l_coordinates(&t.l_cap_h());
    let red = IdealReducer::new(&l_alg, &ideal)?;
    let reduced: Vec<Quad2> = generators.iter().map(|q| red.reduce(q)).collect::<Result<_, _>>()?;
    let nonzero: Vec<Vec<Q>> = reduced.iter().filter(|q| !q.is_zero()).map(Quad2::flatten).collect();
    let unique = nonzero.is_empty() || RatMatrix::from_columns(&nonzero, nonzero[0].len()).rank() == nonzero.len();
    let coefficients = decompose_in_span(&l_alg, &iota, &generators, &ideal)?;
    let mut combo = Quad2::zero(l_alg.dim());
    for (c, q) in coefficients.iter().flatten().zip(&reduced) {
        combo = combo.add(&q.scale(c));
    }
    let residual = iota.sub(&combo);
    Ok(CasimirEmbedding {
        iota_omega_g: iota,
        generator_names: names.to_vec(),
        generators,
        coefficients,
        residual,
        unique,
        complement,
    })
}
