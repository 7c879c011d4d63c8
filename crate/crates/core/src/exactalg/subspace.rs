use super::field::Field;
use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;

/// A quotient `k^n / W` presented by a complement of standard basis
/// vectors and the projection onto their coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// Pivot basis of `W` (original spanning vectors).
    pub subspace: Vec<Vector>,
    /// Indices `j` such that the `e_j` complete `W` to a basis, greedily.
    pub complement: Vec<usize>,
    /// `dim(k^n / W) x n`; kills `W` and sends `e_{complement[i]}` to `e_i`.
    pub projection: Matrix,
}

impl Quotient {
    pub fn new(field: Field, n: usize, span: &[Vector]) -> Self {
        let w = Matrix::from_columns(field, n, span);
        let subspace = w.column_space_basis();
        let aug = Matrix::from_columns(field, n, &subspace).hstack(&Matrix::identity(field, n)).expect("same field");
        let k = subspace.len();
        let complement: Vec<usize> = aug.echelon().pivots.into_iter().filter(|&c| c >= k).map(|c| c - k).collect();
        let mut cols = subspace.clone();
        cols.extend(complement.iter().map(|&j| unit_vector(field, n, j)));
        let inv = Matrix::from_columns(field, n, &cols).inverse().expect("basis of k^n");
        let projection = inv.submatrix(&(k..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
        Quotient { subspace, complement, projection }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// The complement vectors as the columns of an `n x dim` matrix.
    pub fn section(&self) -> Matrix {
        let field = self.projection.field();
        let n = self.projection.cols();
        Matrix::from_fn(field, n, self.dim(), |i, j| Scalar::from_i64(field, (self.complement[j] == i) as i64))
    }

    /// Matrix of the endomorphism induced by `a` (which must preserve `W`).
    pub fn induced(&self, a: &Matrix) -> Matrix {
        &(&self.projection * a) * &self.section()
    }
}

pub fn unit_vector(field: Field, n: usize, j: usize) -> Vector {
    (0..n).map(|i| Scalar::from_i64(field, (i == j) as i64)).collect()
}
