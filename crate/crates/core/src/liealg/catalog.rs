//! Concrete matrix realizations used by the shipped triples.

use num_traits::{One, Zero};

use super::{LieAlgebra, LieError};
use crate::ratlin::{q, RatMatrix, SubspaceBasis, Q};

fn unit(n: usize, i: usize, j: usize) -> RatMatrix {
    RatMatrix::from_fn(n, n, |a, b| if a == i && b == j { Q::one() } else { Q::zero() })
}

fn signs(p: usize, q_: usize) -> Vec<Q> {
    (0..p + q_).map(|i| if i < p { q(1) } else { q(-1) }).collect()
}

/// `so(p, q)`: real matrices with `XᵀJ + JX = 0`, `J = diag(I_p, -I_q)`.
/// Basis `J(E_ij - E_ji)` for `i < j`, lexicographic.
pub fn so(p: usize, q_: usize) -> Result<LieAlgebra, LieError> {
    if p + q_ < 2 {
        return Err(LieError::Parameters(format!("so({p},{q_}) needs p+q >= 2")));
    }
    so_form(&signs(p, q_))
}

/// Orthogonal algebra of the diagonal form `diag(form)`.
pub fn so_form(form: &[Q]) -> Result<LieAlgebra, LieError> {
    let n = form.len();
    if n < 2 || form.iter().any(Zero::is_zero) {
        return Err(LieError::Parameters("so needs a nondegenerate diagonal form of size >= 2".into()));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = &unit(n, i, j).scale(&(Q::one() / &form[i]));
            let b = &unit(n, j, i).scale(&(Q::one() / &form[j]));
            mats.push(a - b);
            labels.push(format!("M{}_{}", i + 1, j + 1));
        }
    }
    LieAlgebra::from_matrix_basis(labels, mats)
}

/// `sl(n, R)` with basis `H_1..H_{n-1}`, then `E_ij` (`i < j`), then `E_ji`.
/// For `n = 2` this is the standard `{H, E, F}`.
pub fn sl(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::Parameters("sl(n) needs n >= 2".into()));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for k in 0..n - 1 {
        mats.push(&unit(n, k, k) - &unit(n, k + 1, k + 1));
        labels.push(if n == 2 { "H".to_string() } else { format!("H{}", k + 1) });
    }
    for i in 0..n {
        for j in i + 1..n {
            mats.push(unit(n, i, j));
            labels.push(if n == 2 { "E".to_string() } else { format!("E{}{}", i + 1, j + 1) });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            mats.push(unit(n, j, i));
            labels.push(if n == 2 { "F".to_string() } else { format!("F{}{}", i + 1, j + 1) });
        }
    }
    LieAlgebra::from_matrix_basis(labels, mats)
}

/// Realification of a complex `n×n` matrix given by real and imaginary
/// parts: entry `a + bi` becomes the block `[[a, -b], [b, a]]`, so complex
/// coordinate `k` maps to real coordinates `(2k, 2k+1)`.
fn realify(re: &RatMatrix, im: &RatMatrix) -> RatMatrix {
    let n = re.rows();
    RatMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let (i, j) = (r / 2, c / 2);
        let (a, b) = (re.get(i, j), im.get(i, j));
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => a.clone(),
            (0, 1) => -b.clone(),
            _ => b.clone(),
        }
    })
}

fn unitary_basis(p: usize, q_: usize, special: bool) -> Result<LieAlgebra, LieError> {
    let n = p + q_;
    if n == 0 {
        return Err(LieError::Parameters("u(p,q) needs p+q >= 1".into()));
    }
    let eps = signs(p, q_);
    let zero = RatMatrix::zeros(n, n);
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    if special {
        for k in 0..n.saturating_sub(1) {
            mats.push(realify(&zero, &(&unit(n, k, k) - &unit(n, k + 1, k + 1))));
            labels.push(format!("iH{}", k + 1));
        }
    } else {
        for k in 0..n {
            mats.push(realify(&zero, &unit(n, k, k)));
            labels.push(format!("iD{}", k + 1));
        }
    }
    // Z* J + J Z = 0 forces Z_mk = -conj(Z_km) eps_k eps_m.
    for k in 0..n {
        for m in k + 1..n {
            let s = &eps[k] * &eps[m];
            let re = &unit(n, k, m) - &unit(n, m, k).scale(&s);
            mats.push(realify(&re, &zero));
            labels.push(format!("R{}{}", k + 1, m + 1));
            let im = &unit(n, k, m) + &unit(n, m, k).scale(&s);
            mats.push(realify(&zero, &im));
            labels.push(format!("I{}{}", k + 1, m + 1));
        }
    }
    LieAlgebra::from_matrix_basis(labels, mats)
}

/// Realified `u(p, q)` of dimension `(p+q)^2`, acting on `R^{2(p+q)}` with
/// interleaved coordinates `(re_1, im_1, re_2, ...)`. These matrices lie in
/// `so(2p, 2q)` literally.
pub fn u(p: usize, q_: usize) -> Result<LieAlgebra, LieError> {
    unitary_basis(p, q_, false)
}

/// Realified `su(p, q)`, dimension `(p+q)^2 - 1`.
pub fn su(p: usize, q_: usize) -> Result<LieAlgebra, LieError> {
    if p + q_ < 2 {
        return Err(LieError::Parameters("su(p,q) needs p+q >= 2".into()));
    }
    unitary_basis(p, q_, true)
}

/// One term `sign * e_i ∧ e_j ∧ e_k` of a 3-form on `R^7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeFormTerm {
    pub indices: [usize; 3],
    pub sign: i64,
}

/// The split 3-form whose stabilizer in `gl(7)` is split `g2`. Coordinates
/// are ordered so that the invariant quadratic form is `diag(I_4, -I_3)`.
pub fn g2_three_form() -> Vec<ThreeFormTerm> {
    const TERMS: [([usize; 3], i64); 7] = [
        ([4, 5, 6], 1),
        ([4, 0, 1], -1),
        ([4, 2, 3], -1),
        ([5, 0, 2], -1),
        ([5, 1, 3], 1),
        ([6, 0, 3], 1),
        ([6, 1, 2], 1),
    ];
    TERMS.iter().map(|&(indices, sign)| ThreeFormTerm { indices, sign }).collect()
}

fn three_form_tensor(terms: &[ThreeFormTerm], n: usize) -> Vec<Vec<Vec<Q>>> {
    let mut t = vec![vec![vec![Q::zero(); n]; n]; n];
    for term in terms {
        let [a, b, c] = term.indices;
        for (perm, parity) in [
            ([a, b, c], 1),
            ([b, c, a], 1),
            ([c, a, b], 1),
            ([b, a, c], -1),
            ([a, c, b], -1),
            ([c, b, a], -1),
        ] {
            t[perm[0]][perm[1]][perm[2]] = q(term.sign * parity);
        }
    }
    t
}

/// Basis of `{X in gl(n) : X·φ = 0}` for a 3-form φ, as matrices.
pub fn three_form_stabilizer(terms: &[ThreeFormTerm], n: usize) -> Result<Vec<RatMatrix>, LieError> {
    if terms.iter().any(|t| t.indices.iter().any(|&i| i >= n)) {
        return Err(LieError::Parameters("3-form index out of range".into()));
    }
    let phi = three_form_tensor(terms, n);
    // unknown X_{m,c} sits at column m*n + c
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut row = vec![Q::zero(); n * n];
                for m in 0..n {
                    row[m * n + a] += &phi[m][b][c];
                    row[m * n + b] += &phi[a][m][c];
                    row[m * n + c] += &phi[a][b][m];
                }
                rows.push(row);
            }
        }
    }
    let ker = RatMatrix::from_rows(rows)?.kernel();
    Ok(ker
        .vectors()
        .iter()
        .map(|v| RatMatrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect())
}

/// Split real form of `g2` (dimension 14) realized on `R^7` as the
/// stabilizer of [`g2_three_form`].
pub fn g2_split() -> Result<LieAlgebra, LieError> {
    let mats = three_form_stabilizer(&g2_three_form(), 7)?;
    let labels = (0..mats.len()).map(|i| format!("G{}", i + 1)).collect();
    LieAlgebra::from_matrix_basis(labels, mats)
}

/// Symmetric bilinear forms `F` with `XᵀF + FX = 0` for every realization
/// matrix `X`.
pub fn invariant_symmetric_forms(g: &LieAlgebra) -> Result<Vec<RatMatrix>, LieError> {
    let mats = g.realization().ok_or(LieError::NoRealization)?;
    let n = mats.first().map_or(0, RatMatrix::rows);
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let sym = |v: &[Q]| {
        let mut f = RatMatrix::zeros(n, n);
        for (&(i, j), x) in idx.iter().zip(v) {
            *f.entry_mut(i, j) = x.clone();
            *f.entry_mut(j, i) = x.clone();
        }
        f
    };
    // columns: images of the elementary symmetric matrices
    let mut columns: Vec<Vec<Q>> = Vec::with_capacity(idx.len());
    for k in 0..idx.len() {
        let mut e = vec![Q::zero(); idx.len()];
        e[k] = Q::one();
        let f = sym(&e);
        let mut col = Vec::new();
        for x in mats {
            let r = &(&x.transpose() * &f) + &(&f * x);
            col.extend_from_slice(r.entries());
        }
        columns.push(col);
    }
    let system = RatMatrix::from_columns(&columns, mats.len() * n * n);
    Ok(system.kernel().vectors().iter().map(|v| sym(v)).collect())
}

/// `a ⊕ b` with basis `(X, 0)` then `(0, Y)`; the realization is block
/// diagonal when both summands carry one.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("{l}.1"))
        .chain(b.labels().iter().map(|l| format!("{l}.2")))
        .collect();
    let mut brackets = vec![vec![vec![Q::zero(); d]; d]; d];
    for i in 0..da {
        for j in 0..da {
            brackets[i][j][..da].clone_from_slice(a.structure(i, j));
        }
    }
    for i in 0..db {
        for j in 0..db {
            brackets[da + i][da + j][da..].clone_from_slice(b.structure(i, j));
        }
    }
    let realization = match (a.realization(), b.realization()) {
        (Some(ra), Some(rb)) => {
            let na = ra.first().map_or(0, RatMatrix::rows);
            let nb = rb.first().map_or(0, RatMatrix::rows);
            let block = |m: &RatMatrix, off: usize| {
                RatMatrix::from_fn(na + nb, na + nb, |i, j| {
                    let inside = |x: usize| x >= off && x < off + m.rows();
                    if inside(i) && inside(j) {
                        m.get(i - off, j - off).clone()
                    } else {
                        Q::zero()
                    }
                })
            };
            Some(ra.iter().map(|m| block(m, 0)).chain(rb.iter().map(|m| block(m, na))).collect())
        }
        _ => None,
    };
    let out = LieAlgebra { labels, brackets, realization };
    Ok(out)
}

/// `{(X, X)}` inside `a ⊕ a`. Fails unless both halves carry the same
/// structure constants.
pub fn diagonal_subalgebra(g: &LieAlgebra) -> Result<SubspaceBasis, LieError> {
    let d = g.dim();
    if d % 2 != 0 {
        return Err(LieError::Parameters("diagonal needs an even-dimensional a ⊕ a".into()));
    }
    let h = d / 2;
    for i in 0..h {
        for j in 0..h {
            let left = &g.structure(i, j)[..h];
            let right = &g.structure(h + i, h + j)[h..];
            if left != right {
                return Err(LieError::Parameters("summands differ".into()));
            }
        }
    }
    let vecs = (0..h)
        .map(|i| (0..d).map(|k| if k == i || k == h + i { Q::one() } else { Q::zero() }).collect())
        .collect();
    Ok(SubspaceBasis::span(d, vecs)?)
}

#[cfg(test)]
mod tests {
    use super::super::{is_subalgebra, killing_form};
    use super::*;
    use crate::ratlin::Inertia;

    #[test]
    fn dimensions() {
        assert_eq!(so(2, 4).unwrap().dim(), 15);
        assert_eq!(so(4, 3).unwrap().dim(), 21);
        let so11 = so(1, 1).unwrap();
        assert_eq!(so11.dim(), 1);
        assert!(crate::ratlin::is_zero_vec(so11.structure(0, 0)));
        assert_eq!(u(1, 2).unwrap().dim(), 9);
        assert_eq!(u(1, 0).unwrap().dim(), 1);
        assert_eq!(su(2, 0).unwrap().dim(), 3);
        assert_eq!(sl(3).unwrap().dim(), 8);
        assert!(so(1, 0).is_err());
    }

    #[test]
    fn unitary_lies_in_orthogonal() {
        let g = so(2, 4).unwrap();
        let l = u(1, 2).unwrap();
        let vecs: Vec<Vec<Q>> = l
            .realization()
            .unwrap()
            .iter()
            .map(|m| g.matrix_coordinates(m).unwrap().expect("u(1,2) inside so(2,4)"))
            .collect();
        let s = SubspaceBasis::span(15, vecs).unwrap();
        assert_eq!(s.dim(), 9);
        assert!(is_subalgebra(&g, &s));
    }

    #[test]
    fn g2_shape_and_invariant_form() {
        let g2 = g2_split().unwrap();
        assert_eq!(g2.dim(), 14);
        assert_eq!(killing_form(&g2).signature(), Inertia::new(8, 6, 0));
        let forms = invariant_symmetric_forms(&g2).unwrap();
        assert_eq!(forms.len(), 1);
        let sig = forms[0].signature().unwrap();
        assert!(sig == Inertia::new(4, 3, 0) || sig == Inertia::new(3, 4, 0));
    }

    #[test]
    fn direct_sum_and_diagonal() {
        let s = sl(2).unwrap();
        let g = direct_sum(&s, &s).unwrap();
        assert_eq!(g.dim(), 6);
        g.validate().unwrap();
        let diag = diagonal_subalgebra(&g).unwrap();
        assert_eq!(diag.dim(), 3);
        assert!(is_subalgebra(&g, &diag));
        let o = so(2, 4).unwrap();
        let oo = direct_sum(&o, &o).unwrap();
        assert_eq!(diagonal_subalgebra(&oo).unwrap().dim(), 15);
    }
}
