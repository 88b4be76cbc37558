use nalgebra::{Complex, DMatrix};

use crate::scalar::Scalar;

use super::DenseMatrix;

pub type CMatrix = DMatrix<Complex<f64>>;

pub fn to_nalgebra<S: Scalar>(m: &DenseMatrix<S>) -> CMatrix {
    CMatrix::from_fn(m.nrows(), m.ncols(), |r, c| m[(r, c)].to_float().to_complex())
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigenvalues of a general square matrix via the Schur form.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex<f64>> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let schur = nalgebra::Schur::new(m.clone());
    let (_, t) = schur.unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Singular values, descending.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Number of singular values at or above `tol`.
pub fn numerical_rank(m: &CMatrix, tol: f64) -> usize {
    singular_values(m).into_iter().filter(|&s| s >= tol).count()
}

/// Orthonormal basis of the numerical null space, as columns.
pub fn null_space(m: &CMatrix, tol: f64) -> CMatrix {
    let n = m.ncols();
    if n == 0 {
        return CMatrix::zeros(0, 0);
    }
    // Pad to at least n rows so the SVD returns a full right basis.
    let padded = if m.nrows() < n {
        let mut p = CMatrix::zeros(n, n);
        p.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let cols: Vec<_> =
        svd.singular_values.iter().enumerate().filter(|(_, s)| **s < tol).map(|(k, _)| v_t.row(k).adjoint()).collect();
    if cols.is_empty() {
        CMatrix::zeros(n, 0)
    } else {
        CMatrix::from_columns(&cols)
    }
}

/// Lower Cholesky factor of a Hermitian positive definite matrix.
pub fn cholesky(m: &CMatrix) -> Option<CMatrix> {
    nalgebra::Cholesky::new(m.clone()).map(|c| c.l())
}
