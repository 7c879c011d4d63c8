//! Exact arithmetic over `Q` and `F_{p^m}` (`m <= 3`) and dense exact
//! linear algebra.

mod equations;
mod field;
mod matrix;
mod poly;
mod scalar;
mod subspace;

pub use equations::{MatrixEquations, Term};
pub use field::{Field, FiniteField, MAX_CHARACTERISTIC};
pub use matrix::{canonical_rows, matrix_from_strings, matrix_to_strings, Echelon, Matrix, Vector};
pub use poly::{eval_poly, poly_roots};
pub use scalar::{FfElem, Scalar};
pub use subspace::{unit_vector, Quotient};

/// Reports whether `Mv = b` holds exactly.
pub fn check_solution(m: &Matrix, v: &[Scalar], b: &[Scalar]) -> bool {
    m.apply(v) == b
}
