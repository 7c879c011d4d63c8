use super::field::Field;
use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Homogeneous linear equations in several unknown matrices.
///
/// Each equation has the form `Σ ± L_k · X_k · R_k = 0` with a common
/// output shape. The solution space is returned as a canonical kernel basis
/// (see [`Matrix::kernel_basis`]) split back into matrices.
#[derive(Clone, Debug)]
pub struct MatrixEquations {
    field: Field,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    rows: Vec<Vector>,
}

/// One term `sign · L · X · R` of an equation.
pub struct Term<'a> {
    pub unknown: usize,
    pub left: &'a Matrix,
    pub right: &'a Matrix,
    pub negate: bool,
}

impl MatrixEquations {
    pub fn new(field: Field, shapes: &[(usize, usize)]) -> Self {
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut acc = 0;
        for &(r, c) in shapes {
            offsets.push(acc);
            acc += r * c;
        }
        MatrixEquations { field, shapes: shapes.to_vec(), offsets, rows: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.shapes.iter().map(|(r, c)| r * c).sum()
    }

    pub fn equation_count(&self) -> usize {
        self.rows.len()
    }

    pub fn add(&mut self, terms: &[Term<'_>]) -> Result<()> {
        let Some(first) = terms.first() else { return Ok(()) };
        let (out_r, out_c) = (first.left.rows(), first.right.cols());
        let n = self.unknowns();
        let zero = Scalar::zero(self.field);
        let base = self.rows.len();
        self.rows.extend((0..out_r * out_c).map(|_| vec![zero.clone(); n]));
        for t in terms {
            let (xr, xc) = self.shapes[t.unknown];
            if t.left.rows() != out_r
                || t.right.cols() != out_c
                || t.left.cols() != xr
                || t.right.rows() != xc
            {
                return Err(Error::Shape(format!(
                    "term {}x{} · X{} ({}x{}) · {}x{} does not fit output {}x{}",
                    t.left.rows(),
                    t.left.cols(),
                    t.unknown,
                    xr,
                    xc,
                    t.right.rows(),
                    t.right.cols(),
                    out_r,
                    out_c
                )));
            }
            let off = self.offsets[t.unknown];
            for r in 0..out_r {
                for i in 0..xr {
                    let l = t.left.get(r, i);
                    if l.is_zero() {
                        continue;
                    }
                    for j in 0..xc {
                        for s in 0..out_c {
                            let rr = t.right.get(j, s);
                            if rr.is_zero() {
                                continue;
                            }
                            let mut v = l * rr;
                            if t.negate {
                                v = -v;
                            }
                            let slot = &mut self.rows[base + r * out_c + s][off + i * xc + j];
                            *slot = &*slot + &v;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Adds `X_u · A = B · X_u` (an intertwiner condition).
    pub fn add_intertwining(&mut self, unknown: usize, a: &Matrix, b: &Matrix) -> Result<()> {
        let (xr, xc) = self.shapes[unknown];
        let id_l = Matrix::identity(self.field, xr);
        let id_r = Matrix::identity(self.field, xc);
        self.add(&[
            Term { unknown, left: &id_l, right: a, negate: false },
            Term { unknown, left: b, right: &id_r, negate: true },
        ])
    }

    /// Canonical basis of the solution space; each element lists one matrix
    /// per unknown.
    pub fn solve(&self) -> Vec<Vec<Matrix>> {
        let n = self.unknowns();
        let basis: Vec<Vector> = if self.rows.is_empty() {
            (0..n).map(|i| (0..n).map(|j| Scalar::from_i64(self.field, (i == j) as i64)).collect()).collect()
        } else {
            Matrix::from_rows_shaped(self.field, self.rows.len(), n, self.rows.clone())
                .expect("rows have uniform length")
                .kernel_basis()
        };
        basis.iter().map(|v| self.split(v)).collect()
    }

    /// Splits a flat solution vector into the unknown matrices.
    pub fn split(&self, v: &[Scalar]) -> Vec<Matrix> {
        self.shapes
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &off)| Matrix::from_fn(self.field, r, c, |i, j| v[off + i * c + j].clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutant_of_diagonal() {
        let q = Field::Rational;
        let d = Matrix::from_i64(q, &[&[1, 0], &[0, 2]]);
        let mut eq = MatrixEquations::new(q, &[(2, 2)]);
        eq.add_intertwining(0, &d, &d).unwrap();
        let sols = eq.solve();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(&s[0] * &d, &d * &s[0]);
        }
    }

    #[test]
    fn no_equations_gives_full_space() {
        let eq = MatrixEquations::new(Field::Rational, &[(1, 2), (2, 1)]);
        assert_eq!(eq.solve().len(), 4);
    }
}
