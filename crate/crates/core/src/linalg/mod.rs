//! Exact sparse/dense matrices and the float routines used for spectra.

mod dense;
pub mod float;
mod sparse;

pub use dense::{DenseMatrix, Subspace};
pub use sparse::SparseMatrix;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExactScalar, Rational};

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::rational(Rational::new(n, d).unwrap())
    }

    fn dm(rows: &[&[i64]]) -> DenseMatrix<ExactScalar> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v, 1)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let m = dm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(m.mul(&k.basis).is_zero());
    }

    #[test]
    fn determinant_with_swaps() {
        let m = dm(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant(), q(-1, 1));
        let m = dm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant(), q(18, 1));
    }

    #[test]
    fn minors_of_small_gram() {
        let g = DenseMatrix::from_rows(vec![vec![q(5, 4), q(-1, 4)], vec![q(-1, 4), q(5, 4)]]);
        assert_eq!(g.leading_principal_minors(), vec![q(5, 4), q(3, 2)]);
    }

    #[test]
    fn sparse_dense_agree() {
        let a = dm(&[&[1, 0, 2], &[0, 0, 3]]);
        let b = dm(&[&[1, 1], &[0, 2], &[4, 0]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.kron(&sb).to_dense(), a.kron(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert!(sa.sub(&sa).is_zero());
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let a = dm(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let m = dm(&[&[0, 0, 1]]);
        let k = m.kernel();
        let r = k.restrict(&a).unwrap();
        assert_eq!(r, dm(&[&[2, 0], &[0, 3]]));
        let b = dm(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert!(k.restrict(&b).is_none());
    }
}
