//! Complex linear-algebra and scalar-optimization kernels.
//!
//! Everything downstream consumes (unitary) singular vectors, generalized
//! eigenvectors of Hermitian pencils, orthonormal null-space bases, and a
//! golden-section scalar maximizer. Conventions used by every routine here:
//!
//! - singular values are sorted descending;
//! - the generalized eigenproblem (R_num, R_den) is solved by whitening:
//!   R_den = Q L Q^H, transform to an ordinary Hermitian eigenproblem with
//!   L^{-1/2} Q^H, back-transform;
//! - matrices are symmetrized as (A + A^H)/2 before eigendecomposition;
//! - the first nonzero entry of every returned eigen/singular vector is
//!   rotated to be real and nonnegative, so outputs are reproducible
//!   bit-for-bit across runs.

use crate::{C64, CMatrix, CVector, SerError};
use nalgebra::linalg::{SymmetricEigen, SVD};

/// Entries below `|x| <= PHASE_EPS * max_entry` are treated as zero when
/// picking the pivot for the phase convention.
const PHASE_EPS: f64 = 1e-14;

/// Singular value decomposition A = U diag(s) V^H with s descending.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// Left singular vectors, one column per singular value.
    pub u: CMatrix,
    /// Singular values, nonnegative and sorted descending.
    pub singular_values: Vec<f64>,
    /// Right singular vectors, one column per singular value.
    pub v: CMatrix,
}

/// Maximizer of a generalized Rayleigh quotient v^H R_num v / v^H R_den v.
#[derive(Debug, Clone)]
pub struct GenEigResult {
    /// Unit-norm maximizing vector.
    pub vector: CVector,
    /// Rayleigh quotient attained at `vector`.
    pub value: f64,
}

fn check_finite(a: &CMatrix) -> Result<(), SerError> {
    if a.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(SerError::DecompositionFailure(
            "matrix has non-finite entries".into(),
        ))
    }
}

/// Rotate `v` so its first entry of non-negligible magnitude is real >= 0.
///
/// The rotation is a global unit phase, so spans, norms, and quadratic
/// forms are unchanged. Returns the applied phase factor.
pub fn normalize_phase(v: &mut CVector) -> C64 {
    let max_mag = v.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    if max_mag == 0.0 {
        return C64::new(1.0, 0.0);
    }
    let pivot = v
        .iter()
        .find(|z| z.norm() > PHASE_EPS * max_mag)
        .copied()
        .unwrap_or(C64::new(1.0, 0.0));
    let phase = pivot.conj() / pivot.norm();
    for z in v.iter_mut() {
        *z *= phase;
    }
    phase
}

/// (A + A^H)/2, suppressing round-off asymmetry before eigendecomposition.
pub fn hermitian_part(a: &CMatrix) -> CMatrix {
    let ah = a.adjoint();
    (a + ah).map(|z| z * 0.5)
}

/// Full (thin) SVD of a complex matrix with descending singular values.
///
/// Each (u_k, v_k) pair carries a joint phase chosen so the first
/// non-negligible entry of v_k is real nonnegative; u_k absorbs the
/// conjugate rotation, keeping U diag(s) V^H = A exact.
pub fn svd(a: &CMatrix) -> Result<SvdResult, SerError> {
    check_finite(a)?;
    let svd = SVD::try_new(a.clone(), true, true, f64::EPSILON * 4.0, 0)
        .ok_or_else(|| SerError::DecompositionFailure("SVD did not converge".into()))?;
    let mut u = svd
        .u
        .ok_or_else(|| SerError::DecompositionFailure("SVD produced no U".into()))?;
    let v_t = svd
        .v_t
        .ok_or_else(|| SerError::DecompositionFailure("SVD produced no V^H".into()))?;
    let mut v = v_t.adjoint();
    let mut s: Vec<f64> = svd.singular_values.iter().copied().collect();

    // Sort triplets by descending singular value; ties keep original order.
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap());
    let u_sorted = CMatrix::from_fn(u.nrows(), order.len(), |r, c| u[(r, order[c])]);
    let v_sorted = CMatrix::from_fn(v.nrows(), order.len(), |r, c| v[(r, order[c])]);
    u = u_sorted;
    v = v_sorted;
    s = order.iter().map(|&i| s[i]).collect();

    for k in 0..s.len() {
        let mut vk: CVector = v.column(k).into_owned();
        let phase = normalize_phase(&mut vk);
        v.set_column(k, &vk);
        let uk: CVector = u.column(k).into_owned() * phase;
        u.set_column(k, &uk);
    }
    Ok(SvdResult {
        u,
        singular_values: s,
        v,
    })
}

/// Largest singular value of A with its left/right singular vectors,
/// each independently phase-normalized.
pub fn top_singular_triplet(a: &CMatrix) -> Result<(f64, CVector, CVector), SerError> {
    let d = svd(a)?;
    let sigma = d.singular_values[0];
    let mut u: CVector = d.u.column(0).into_owned();
    let mut v: CVector = d.v.column(0).into_owned();
    normalize_phase(&mut u);
    normalize_phase(&mut v);
    Ok((sigma, u, v))
}

/// Orthonormal basis of the null space of h^H, as columns of an
/// M x (M-1) matrix B with h^H B = 0.
///
/// Built by completing h/||h|| to a unitary basis with twice-iterated
/// Gram-Schmidt against the standard basis, then dropping the first column.
pub fn nullspace_basis(h: &CVector) -> Result<CMatrix, SerError> {
    let m = h.len();
    if m < 2 {
        return Err(SerError::ZfInfeasible(format!(
            "need at least 2 dimensions, got {m}"
        )));
    }
    let norm = h.norm();
    if norm == 0.0 || !norm.is_finite() {
        return Err(SerError::ZfInfeasible("channel vector is zero".into()));
    }
    let x = h.map(|z| z / norm);

    let mut basis: Vec<CVector> = vec![x];
    for i in 0..m {
        if basis.len() == m {
            break;
        }
        let mut cand = CVector::zeros(m);
        cand[i] = C64::new(1.0, 0.0);
        // Two Gram-Schmidt passes keep loss of orthogonality at round-off.
        for _ in 0..2 {
            for b in &basis {
                let coeff = b.dotc(&cand);
                cand -= b * coeff;
            }
        }
        let n = cand.norm();
        if n > 1e-7 {
            basis.push(cand.map(|z| z / n));
        }
    }
    if basis.len() != m {
        return Err(SerError::DecompositionFailure(
            "failed to complete null-space basis".into(),
        ));
    }
    let mut b = CMatrix::zeros(m, m - 1);
    for (k, col) in basis.iter().skip(1).enumerate() {
        let mut c = col.clone();
        normalize_phase(&mut c);
        b.set_column(k, &c);
    }
    Ok(b)
}

/// Eigendecomposition of the Hermitian part of `a`, eigenvalues descending.
fn hermitian_eigen(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = SymmetricEigen::new(hermitian_part(a));
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMatrix::from_fn(a.nrows(), order.len(), |r, c| {
        eig.eigenvectors[(r, order[c])]
    });
    (vals, vecs)
}

/// Unit-norm maximizer of the generalized Rayleigh quotient
/// v^H R_num v / v^H R_den v over nonzero v, with the attained quotient.
///
/// `r_den` must be positive definite: its minimum eigenvalue must exceed
/// 1e-12 times its trace.
pub fn max_gen_eigvec(r_num: &CMatrix, r_den: &CMatrix) -> Result<GenEigResult, SerError> {
    check_finite(r_num)?;
    check_finite(r_den)?;
    let n = r_den.nrows();
    assert_eq!(r_num.nrows(), n, "pencil dimension mismatch");

    let (den_vals, den_vecs) = hermitian_eigen(r_den);
    let trace: f64 = den_vals.iter().sum();
    let min_eig = *den_vals.last().unwrap();
    if !(min_eig > 1e-12 * trace.abs()) || min_eig <= 0.0 {
        return Err(SerError::NotPositiveDefinite { min_eig, trace });
    }

    // Whitening transform W = Q L^{-1/2}; the pencil becomes W^H R_num W.
    let mut w = den_vecs.clone();
    for (k, &lam) in den_vals.iter().enumerate() {
        let scale = C64::new(1.0 / lam.sqrt(), 0.0);
        let col: CVector = w.column(k).into_owned() * scale;
        w.set_column(k, &col);
    }
    let transformed = w.adjoint() * r_num * &w;
    let (_, vecs) = hermitian_eigen(&transformed);
    let y: CVector = vecs.column(0).into_owned();
    let mut x = &w * y;
    let n2 = x.norm();
    if n2 == 0.0 {
        return Err(SerError::DecompositionFailure(
            "generalized eigenvector collapsed to zero".into(),
        ));
    }
    x /= C64::new(n2, 0.0);
    normalize_phase(&mut x);

    let num_q = quad_form(r_num, &x);
    let den_q = quad_form(r_den, &x);
    Ok(GenEigResult {
        vector: x,
        value: num_q / den_q,
    })
}

/// Real part of v^H A v (exact for Hermitian A).
pub fn quad_form(a: &CMatrix, v: &CVector) -> f64 {
    v.dotc(&(a * v)).re
}

/// Golden-section search for a maximizer of `f` on `[lo, hi]`.
///
/// Shrinks the bracket until its width is at most `tol` and returns the best
/// point among all evaluations (both endpoints included, so maxima that sit
/// exactly on the boundary are found). For a unimodal `f` this is the global
/// maximizer to within `tol`.
pub fn golden_section_max<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<(f64, f64), SerError> {
    if !(lo < hi) || !(tol > 0.0) {
        return Err(SerError::InvalidInterval { lo, hi, tol });
    }
    const INV_PHI: f64 = 0.618_033_988_749_894_9;

    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    let mut best_x = x1;
    let mut best_f = f1;
    let consider = |x: f64, fx: f64, best_x: &mut f64, best_f: &mut f64| {
        if fx > *best_f {
            *best_f = fx;
            *best_x = x;
        }
    };
    consider(x2, f2, &mut best_x, &mut best_f);
    let fa = f(a);
    consider(a, fa, &mut best_x, &mut best_f);
    let fb = f(b);
    consider(b, fb, &mut best_x, &mut best_f);

    while b - a > tol {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
            consider(x2, f2, &mut best_x, &mut best_f);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
            consider(x1, f1, &mut best_x, &mut best_f);
        }
    }
    Ok((best_x, best_f))
}
