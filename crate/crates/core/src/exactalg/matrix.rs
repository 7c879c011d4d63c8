use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use rand::Rng;

use super::field::Field;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A column vector of scalars.
pub type Vector = Vec<Scalar>;

/// Dense exact matrix over a single field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| Scalar::from_i64(field, (i == j) as i64))
    }

    pub fn scalar_matrix(lambda: &Scalar, n: usize) -> Self {
        let field = lambda.field();
        Self::from_fn(field, n, n, |i, j| if i == j { lambda.clone() } else { Scalar::zero(field) })
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                assert_eq!(x.field(), field, "field mismatch in from_fn");
                data.push(x);
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from rows, checking shape and that every entry lives
    /// in `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for (j, x) in row.into_iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "entry ({i},{j}) lies in {}, expected {field}",
                        x.field()
                    )));
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Like [`Matrix::from_rows`] but the row count and column count are
    /// explicit, so empty shapes are representable.
    pub fn from_rows_shaped(field: Field, rows: usize, cols: usize, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::Shape(format!("expected {rows} rows, got {}", entries.len())));
        }
        if rows == 0 {
            return Ok(Matrix::zeros(field, 0, cols));
        }
        let m = Self::from_rows(field, entries)?;
        if m.cols != cols {
            return Err(Error::Shape(format!("expected {cols} columns, got {}", m.cols)));
        }
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(field, r, c, |i, j| Scalar::from_i64(field, rows[i][j]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, nrows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(field, nrows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(field, rows, cols, |_, _| Scalar::random(field, rng))
    }

    /// Random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn with_entry(&self, i: usize, j: usize, x: Scalar) -> Matrix {
        assert_eq!(x.field(), self.field, "field mismatch");
        let mut out = self.clone();
        out.data[i * self.cols + j] = x;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, lambda: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * lambda).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Self::from_fn(self.field, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Entrywise Frobenius `a_ij -> a_ij^p`.
    pub fn frobenius(&self) -> Result<Matrix> {
        let data = self.data.iter().map(Scalar::frobenius).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Scalar::zero(self.field), |acc, i| acc + self.get(i, i))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(self.field), |acc, (a, b)| acc + &(a * b))
            })
            .collect()
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut data = vec![Scalar::zero(self.field); self.rows * o.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let cell = &mut data[i * o.cols + j];
                        *cell = &*cell + &(a * b);
                    }
                }
            }
        }
        Ok(Matrix { field: self.field, rows: self.rows, cols: o.cols, data })
    }

    fn zip_with(&self, o: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, o: &Matrix) -> Result<Matrix> {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn try_sub(&self, o: &Matrix) -> Result<Matrix> {
        self.zip_with(o, |a, b| a - b)
    }

    pub fn pow(&self, e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product: block `(i, j)` equals `A[i][j] * B`.
    pub fn kronecker(&self, o: &Matrix) -> Result<Matrix> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        Ok(Self::from_fn(self.field, self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols) * o.get(i % o.rows, j % o.cols)
        }))
    }

    /// `p`-fold Kronecker power.
    pub fn kronecker_power(&self, p: usize) -> Matrix {
        let mut acc = Matrix::identity(self.field, 1);
        for _ in 0..p {
            acc = acc.kronecker(self).expect("same field");
        }
        acc
    }

    pub fn direct_sum(&self, o: &Matrix) -> Result<Matrix> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        let field = self.field;
        Ok(Self::from_fn(field, self.rows + o.rows, self.cols + o.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => o.get(i - self.rows, j - self.cols).clone(),
                _ => Scalar::zero(field),
            }
        }))
    }

    pub fn hstack(&self, o: &Matrix) -> Result<Matrix> {
        if self.rows != o.rows || self.field != o.field {
            return Err(Error::Shape("hstack needs equal row counts over one field".into()));
        }
        Ok(Self::from_fn(self.field, self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.cols || self.field != o.field {
            return Err(Error::Shape("vstack needs equal column counts over one field".into()));
        }
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Self::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Gauss-Jordan elimination; the pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn echelon(&self) -> Echelon {
        let mut rows: Vec<Vec<Scalar>> = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = rows[r][c].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for x in rows[r][c..].iter_mut() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !y.is_zero() {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let reduced = Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        Echelon { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `{v : M v = 0}`, canonical: the basis vectors are the rows of
    /// the reduced echelon form of the kernel, so each has leading entry 1.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Echelon { reduced, pivots } = self.echelon();
        let field = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let raw: Vec<Vector> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(field); self.cols];
                v[f] = Scalar::one(field);
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -reduced.get(r, f);
                }
                v
            })
            .collect();
        canonical_rows(field, self.cols, raw)
    }

    /// Kernel basis packed as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    /// Pivot columns of `M`: a basis of the column space made of original
    /// columns, in increasing column order.
    pub fn column_space_basis(&self) -> Vec<Vector> {
        self.echelon().pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Canonical (reduced echelon) basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vector> {
        let Echelon { reduced, pivots } = self.echelon();
        (0..pivots.len()).map(|i| reduced.row(i).to_vec()).collect()
    }

    /// Solves `M v = b`; `None` when inconsistent. One particular solution
    /// with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = self
            .hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]))
            .expect("shapes agree");
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut v = vec![Scalar::zero(self.field); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = reduced.get(r, self.cols).clone();
        }
        Some(v)
    }

    /// Solves `M X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> = (0..b.cols).map(|j| self.solve(&b.column(j))).collect();
        cols.map(|cs| Matrix::from_columns(self.field, self.cols, &cs))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).expect("square");
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let all: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Some(reduced.submatrix(&all, &right))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Coefficients `[c0, c1, ..., 1]` of `det(xI - M)` by cofactor
    /// expansion over polynomial entries. Exponential in `n`; small `n` only.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let field = self.field;
        let entries: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c0 = -self.get(i, j);
                        if i == j {
                            vec![c0, Scalar::one(field)]
                        } else {
                            vec![c0]
                        }
                    })
                    .collect()
            })
            .collect();
        poly_det(field, &entries)
    }
}

fn poly_mul(field: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_add(field: Field, a: &[Scalar], b: &[Scalar], sign_neg: bool) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| Scalar::zero(field));
            let y = b.get(i).cloned().unwrap_or_else(|| Scalar::zero(field));
            if sign_neg {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

fn poly_det(field: Field, m: &[Vec<Vec<Scalar>>]) -> Vec<Scalar> {
    let n = m.len();
    if n == 0 {
        return vec![Scalar::one(field)];
    }
    let mut acc = vec![Scalar::zero(field)];
    for j in 0..n {
        let minor: Vec<Vec<Vec<Scalar>>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let term = poly_mul(field, &m[0][j], &poly_det(field, &minor));
        acc = poly_add(field, &acc, &term, j % 2 == 1);
    }
    while acc.len() > 1 && acc.last().is_some_and(Scalar::is_zero) {
        acc.pop();
    }
    acc
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
pub fn canonical_rows(field: Field, dim: usize, vectors: Vec<Vector>) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows_shaped(field, vectors.len(), dim, vectors).expect("uniform vectors");
    m.row_space_basis()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        self.try_sub(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(Scalar::pretty).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Serialized matrix: rows of scalar strings.
pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

pub fn matrix_from_strings(field: Field, rows: &[Vec<String>]) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| s.parse::<Scalar>()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(field, parsed)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rational;

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero() {
        let k = Matrix::zeros(Q, 2, 2).kernel_basis();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn kernel_of_all_ones() {
        let m = Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![Scalar::from_i64(Q, 1), Scalar::from_i64(Q, -1)]]);
    }

    #[test]
    fn kernel_rejects_mixed_fields_at_construction() {
        let f4 = Field::finite(2, 2).unwrap();
        let rows = vec![vec![Scalar::one(Q), Scalar::one(f4)]];
        assert!(matches!(Matrix::from_rows(Q, rows), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn kronecker_identity_is_block_diagonal() {
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let k = Matrix::identity(Q, 2).kronecker(&a).unwrap();
        assert_eq!(k, a.direct_sum(&a).unwrap());
    }

    #[test]
    fn kronecker_scalar() {
        let b = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let l = Matrix::from_i64(Q, &[&[5]]);
        assert_eq!(l.kronecker(&b).unwrap(), b.scale(&Scalar::from_i64(Q, 5)));
    }

    #[test]
    fn kronecker_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = Matrix::random(Q, 2, 2, &mut rng);
        let b = Matrix::random(Q, 2, 2, &mut rng);
        let c = Matrix::random(Q, 2, 2, &mut rng);
        // With row-major block indexing the canonical index bijection is the identity.
        let left = a.kronecker(&b).unwrap().kronecker(&c).unwrap();
        let right = a.kronecker(&b.kronecker(&c).unwrap()).unwrap();
        // Direct expansion of one entry as an independent check.
        let (i, j) = (5, 3);
        let expected = a.get(i / 4, j / 4) * b.get((i / 2) % 2, (j / 2) % 2) * c.get(i % 2, j % 2);
        assert_eq!(left.get(i, j), &expected);
        assert_eq!(left, right);
    }

    #[test]
    fn kronecker_field_mismatch() {
        let f4 = Field::finite(2, 2).unwrap();
        assert!(Matrix::identity(Q, 2).kronecker(&Matrix::identity(f4, 2)).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let b = vec![Scalar::from_i64(Q, 3), Scalar::from_i64(Q, 2)];
        let v = m.solve(&b).unwrap();
        assert_eq!(m.apply(&v), b);
        let singular = Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[Scalar::from_i64(Q, 1), Scalar::from_i64(Q, 0)]).is_none());
    }

    #[test]
    fn charpoly_small() {
        // (0 -1; 1 0) has x^2 + 1.
        let m = Matrix::from_i64(Q, &[&[0, -1], &[1, 0]]);
        let cp = m.charpoly();
        assert_eq!(cp, vec![Scalar::from_i64(Q, 1), Scalar::from_i64(Q, 0), Scalar::from_i64(Q, 1)]);
    }

    #[test]
    fn column_space_uses_pivot_columns() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 0], &[2, 4, 1]]);
        let b = m.column_space_basis();
        assert_eq!(b, vec![m.column(0), m.column(2)]);
    }
}
