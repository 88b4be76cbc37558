//! Polynomial modules of the rational Cherednik algebra: polynomials,
//! group representations, Dunkl operators and the contravariant form.

mod expr;
mod graded;
mod module;
mod poly;
mod tau;

pub use expr::operator_matrix;
pub use graded::{Discrepancy, GradedOperator};
pub use module::{
    contravariant_form, dunkl_apply, harmonic_subspace, laplacian, matrix_csv, positivity_check, rca_check_with,
    rca_relation_check, s_terms, z_terms, DunklModule,
};
pub use poly::{Exponent, MonomialBasis, Polynomial};
pub use tau::{scalar_of, Tau};
