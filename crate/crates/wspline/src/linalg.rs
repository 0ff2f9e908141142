//! Symmetric-eigendecomposition helpers: PSD projection, matrix square
//! roots and pseudo-inverses with a shared eigenvalue cutoff.

use nalgebra::{DMatrix, DVector};

/// Relative eigenvalue cutoff: eigenvalues below `RANK_CUTOFF * trace`
/// are treated as zero when inverting or taking square roots.
pub const RANK_CUTOFF: f64 = 1e-10;

/// Force exact symmetry before an eigendecomposition.
pub fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

/// Eigendecomposition of (the symmetric part of) `m`.
pub fn sym_eigen(m: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let se = symmetrize(m).symmetric_eigen();
    (se.eigenvalues, se.eigenvectors)
}

fn absolute_cutoff(eigenvalues: &DVector<f64>) -> f64 {
    let scale: f64 = eigenvalues.iter().map(|v| v.abs()).sum();
    RANK_CUTOFF * scale.max(f64::MIN_POSITIVE)
}

/// Apply `f` to the eigenvalues of `m` and reassemble.
pub fn spectral_map(m: &DMatrix<f64>, f: impl Fn(f64, f64) -> f64) -> DMatrix<f64> {
    let (vals, vecs) = sym_eigen(m);
    let cut = absolute_cutoff(&vals);
    let mapped = DVector::from_iterator(vals.len(), vals.iter().map(|&v| f(v, cut)));
    &vecs * DMatrix::from_diagonal(&mapped) * vecs.transpose()
}

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
pub fn psd_project(m: &DMatrix<f64>) -> DMatrix<f64> {
    spectral_map(m, |v, _| v.max(0.0))
}

/// Principal square root, treating near-zero eigenvalues as zero.
pub fn psd_sqrt(m: &DMatrix<f64>) -> DMatrix<f64> {
    spectral_map(m, |v, cut| if v > cut { v.sqrt() } else { 0.0 })
}

/// Moore-Penrose pseudo-inverse for a symmetric PSD matrix.
pub fn psd_pinv(m: &DMatrix<f64>) -> DMatrix<f64> {
    spectral_map(m, |v, cut| if v > cut { 1.0 / v } else { 0.0 })
}

/// Pseudo-inverse square root.
pub fn psd_pinv_sqrt(m: &DMatrix<f64>) -> DMatrix<f64> {
    spectral_map(m, |v, cut| if v > cut { 1.0 / v.sqrt() } else { 0.0 })
}

pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    let (vals, _) = sym_eigen(m);
    vals.iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Number of eigenvalues above `rel_tol * trace`.
pub fn numerical_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    let (vals, _) = sym_eigen(m);
    let scale: f64 = vals.iter().map(|v| v.abs()).sum();
    let cut = rel_tol * scale.max(f64::MIN_POSITIVE);
    vals.iter().filter(|&&v| v > cut).count()
}

/// `a ⊗ I_d` for a small dense `a`.
pub fn kron_identity(a: &DMatrix<f64>, d: usize) -> DMatrix<f64> {
    let (r, c) = a.shape();
    let mut out = DMatrix::zeros(r * d, c * d);
    for i in 0..r {
        for j in 0..c {
            for k in 0..d {
                out[(i * d + k, j * d + k)] = a[(i, j)];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn random_psd(n: usize, seed: u64) -> DMatrix<f64> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        &a * a.transpose()
    }

    #[test]
    fn sqrt_squares_back() {
        let m = random_psd(5, 1);
        let s = psd_sqrt(&m);
        assert_relative_eq!(&s * &s, m, epsilon = 1e-10);
    }

    #[test]
    fn pinv_is_inverse_on_range() {
        let m = random_psd(4, 2);
        let p = psd_pinv(&m);
        assert_relative_eq!(&m * &p * &m, m, epsilon = 1e-9);
    }

    #[test]
    fn projection_is_psd() {
        let mut m = random_psd(4, 3);
        m[(0, 0)] = -5.0;
        let proj = psd_project(&symmetrize(&m));
        assert!(min_eigenvalue(&proj) >= -1e-12);
    }

    #[test]
    fn kron_identity_blocks() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let k = kron_identity(&a, 2);
        assert_eq!(k[(0, 2)], 2.0);
        assert_eq!(k[(1, 3)], 2.0);
        assert_eq!(k[(0, 3)], 0.0);
        assert_eq!(k[(2, 0)], 3.0);
    }

    #[test]
    fn rank_of_outer_product() {
        let u = DVector::from_vec(vec![1.0, -2.0, 1.0]);
        let m = &u * u.transpose();
        assert_eq!(numerical_rank(&m, 1e-10), 1);
    }
}
