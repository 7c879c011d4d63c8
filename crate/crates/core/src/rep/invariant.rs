use crate::error::{Error, Result};
use crate::exactalg::{canonical_rows, Field, Matrix, Vector};

/// Largest dimension handled by [`invariant_subspace`].
pub const MAX_INVARIANT_SEARCH_DIM: usize = 3;

/// Nonzero subspaces of the form `{v : M_k v ∈ span(v)}` narrowed one
/// matrix at a time; returns a common eigenvector if one exists.
pub fn common_eigenvector(field: Field, dim: usize, mats: &[Matrix]) -> Result<Option<Vector>> {
    // Each candidate is a basis (as columns) of a subspace all of whose
    // nonzero vectors are eigenvectors of the matrices processed so far.
    let mut candidates = vec![Matrix::identity(field, dim)];
    for m in mats {
        let mut next = Vec::new();
        for s in &candidates {
            let image = m * s;
            for lambda in m.eigenvalues()? {
                let shifted = &image - &s.scale(&lambda);
                let ker = shifted.kernel_basis();
                if ker.is_empty() {
                    continue;
                }
                let cols: Vec<Vector> = ker.iter().map(|y| s.apply(y)).collect();
                next.push(Matrix::from_columns(field, dim, &cols));
            }
        }
        candidates = next;
        if candidates.is_empty() {
            return Ok(None);
        }
    }
    Ok(candidates.first().map(|s| s.column(0)))
}

/// A proper nonzero subspace invariant under every matrix, for spaces of
/// dimension at most 3, as a canonical basis. In dimension `<= 3` every
/// proper subspace has dimension 1 or codimension 1, so it suffices to look
/// for common eigenvectors of the matrices and of their transposes.
pub fn invariant_subspace(field: Field, dim: usize, mats: &[Matrix]) -> Result<Option<Vec<Vector>>> {
    if dim > MAX_INVARIANT_SEARCH_DIM {
        return Err(Error::SizeCap(format!(
            "invariant subspace search limited to dimension {MAX_INVARIANT_SEARCH_DIM}"
        )));
    }
    if dim <= 1 {
        return Ok(None);
    }
    if let Some(v) = common_eigenvector(field, dim, mats)? {
        return Ok(Some(canonical_rows(field, dim, vec![v])));
    }
    let transposed: Vec<Matrix> = mats.iter().map(Matrix::transpose).collect();
    if let Some(w) = common_eigenvector(field, dim, &transposed)? {
        // The annihilator of an eigenvector of the transposes is invariant.
        let row = Matrix::from_rows(field, vec![w])?;
        return Ok(Some(canonical_rows(field, dim, row.kernel_basis())));
    }
    Ok(None)
}

/// Checks that `basis` spans a subspace mapped into itself by every matrix.
pub fn is_invariant(field: Field, dim: usize, basis: &[Vector], mats: &[Matrix]) -> bool {
    let span = Matrix::from_columns(field, dim, basis);
    let r = span.rank();
    mats.iter().all(|m| {
        let moved = m * &span;
        span.hstack(&moved).map(|x| x.rank() == r).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_has_no_rational_invariant_line() {
        let q = Field::Rational;
        let rot = Matrix::from_i64(q, &[&[0, -1], &[1, 0]]);
        assert!(invariant_subspace(q, 2, &[rot.clone()]).unwrap().is_none());
        // Over F5, 2 is a square root of -1.
        let f5 = Field::finite(5, 1).unwrap();
        let rot5 = Matrix::from_i64(f5, &[&[0, -1], &[1, 0]]);
        let s = invariant_subspace(f5, 2, &[rot5.clone()]).unwrap().unwrap();
        assert!(is_invariant(f5, 2, &s, &[rot5]));
    }

    #[test]
    fn permutation_rep_of_s3_has_invariant_lines() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let b = Matrix::from_i64(q, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let s = invariant_subspace(q, 3, &[a.clone(), b.clone()]).unwrap().unwrap();
        assert!(is_invariant(q, 3, &s, &[a, b]));
    }

    #[test]
    fn codimension_one_found_via_transposes() {
        // Upper-triangular Jordan-like pair in dimension 3 over Q whose only
        // invariant subspaces are span(e1) and span(e1, e2).
        let q = Field::Rational;
        let n = Matrix::from_i64(q, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let s = invariant_subspace(q, 3, &[n.clone()]).unwrap().unwrap();
        assert!(is_invariant(q, 3, &s, &[n]));
    }
}
