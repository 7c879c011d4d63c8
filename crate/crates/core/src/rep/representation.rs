use std::collections::VecDeque;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, MatrixEquations, Quotient, Scalar, Vector};
use crate::groups::{FiniteGroup, GroupHom};

/// A finite-dimensional representation, stored as one matrix per group
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    group: Arc<FiniteGroup>,
    field: Field,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Validates `ρ(e) = I` and `ρ(g)ρ(h) = ρ(gh)` for all pairs.
    pub fn new(group: Arc<FiniteGroup>, field: Field, dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::NotARepresentation(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        for (g, m) in matrices.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch(format!("matrix of element {g} is over {}", m.field())));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape(format!(
                    "matrix of element {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if !matrices[group.identity()].is_identity() {
            return Err(Error::NotARepresentation("identity element does not act as I".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                if &matrices[a] * &matrices[b] != matrices[group.mul(a, b)] {
                    return Err(Error::NotARepresentation(format!(
                        "ρ({a})ρ({b}) != ρ({a}·{b})"
                    )));
                }
            }
        }
        Ok(Representation { group, field, dim, matrices })
    }

    /// Extends matrices given on a generating set to the whole group.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        field: Field,
        dim: usize,
        gens: &[(usize, Matrix)],
    ) -> Result<Self> {
        let mut mats: Vec<Option<Matrix>> = vec![None; group.order()];
        mats[group.identity()] = Some(Matrix::identity(field, dim));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in gens {
                let y = group.mul(x, *g);
                let my = mats[x].as_ref().expect("visited").try_mul(m)?;
                match &mats[y] {
                    Some(existing) if *existing != my => {
                        return Err(Error::NotARepresentation(format!(
                            "generator images violate a relation at element {y}"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        mats[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let matrices = mats
            .into_iter()
            .enumerate()
            .map(|(g, m)| m.ok_or_else(|| Error::NotARepresentation(format!("element {g} not generated"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, field, dim, matrices)
    }

    pub fn trivial(group: Arc<FiniteGroup>, field: Field, dim: usize) -> Self {
        let matrices = vec![Matrix::identity(field, dim); group.order()];
        Representation { group, field, dim, matrices }
    }

    /// Permutation representation from an action `g ↦ (i ↦ action[g][i])`
    /// on `0..n`; `ρ(g) e_i = e_{action[g][i]}`.
    pub fn permutation(group: Arc<FiniteGroup>, field: Field, action: &[Vec<usize>]) -> Result<Self> {
        let n = action.first().map_or(0, Vec::len);
        let matrices = action
            .iter()
            .map(|perm| Matrix::from_fn(field, n, n, |i, j| Scalar::from_i64(field, (perm[j] == i) as i64)))
            .collect();
        Self::new(group, field, n, matrices)
    }

    /// Left regular representation.
    pub fn regular(group: Arc<FiniteGroup>, field: Field) -> Self {
        let action: Vec<Vec<usize>> =
            group.elements().map(|g| group.elements().map(|x| group.mul(g, x)).collect()).collect();
        Self::permutation(group, field, &action).expect("regular action is a representation")
    }

    /// The natural permutation representation of `S_k` on `k` points.
    pub fn natural_symmetric(k: usize, field: Field) -> Self {
        let group = Arc::new(FiniteGroup::symmetric(k));
        let perms = symmetric_perms(k);
        Self::permutation(group, field, &perms).expect("natural action")
    }

    /// The sign character of `S_k`.
    pub fn sign(k: usize, field: Field) -> Self {
        let group = Arc::new(FiniteGroup::symmetric(k));
        let matrices = symmetric_perms(k)
            .iter()
            .map(|p| {
                let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                Matrix::scalar_matrix(&Scalar::from_i64(field, if inversions % 2 == 0 { 1 } else { -1 }), 1)
            })
            .collect();
        Representation { group, field, dim: 1, matrices }
    }

    /// The sum-zero subrepresentation of the natural representation of
    /// `S_k`, in the basis `e_i - e_{i+1}`.
    pub fn standard_symmetric(k: usize, field: Field) -> Self {
        let nat = Self::natural_symmetric(k, field);
        let basis: Vec<Vector> = (0..k - 1)
            .map(|i| {
                (0..k)
                    .map(|j| Scalar::from_i64(field, (j == i) as i64 - (j == i + 1) as i64))
                    .collect()
            })
            .collect();
        nat.subrepresentation(&basis).expect("sum-zero vectors are invariant")
    }

    /// One-dimensional representation of a cyclic group `C_n` sending the
    /// generator to `zeta` (which must satisfy `zeta^n = 1`).
    pub fn cyclic_character(n: usize, zeta: &Scalar) -> Result<Self> {
        let field = zeta.field();
        let group = Arc::new(FiniteGroup::cyclic(n));
        let matrices = (0..n).map(|k| Matrix::scalar_matrix(&zeta.pow(k as u64), 1)).collect();
        Self::new(group, field, 1, matrices)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn direct_sum(&self, o: &Representation) -> Result<Representation> {
        self.same_group(o)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&o.matrices)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { group: self.group.clone(), field: self.field, dim: self.dim + o.dim, matrices })
    }

    pub fn tensor(&self, o: &Representation) -> Result<Representation> {
        self.same_group(o)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&o.matrices)
            .map(|(a, b)| a.kronecker(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { group: self.group.clone(), field: self.field, dim: self.dim * o.dim, matrices })
    }

    /// `g ↦ P^{-1} ρ(g) P`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let inv = p.inverse().ok_or_else(|| Error::NotInvertible("change of basis".into()))?;
        let matrices = self.matrices.iter().map(|m| &(&inv * m) * p).collect();
        Ok(Representation { group: self.group.clone(), field: self.field, dim: self.dim, matrices })
    }

    /// Pullback along `φ: K -> G`.
    pub fn restrict(&self, phi: &GroupHom) -> Result<Representation> {
        if phi.target().as_ref() != self.group.as_ref() {
            return Err(Error::NotAHomomorphism("restriction along a map into another group".into()));
        }
        let matrices = phi.source().elements().map(|k| self.matrices[phi.apply(k)].clone()).collect();
        Ok(Representation { group: phi.source().clone(), field: self.field, dim: self.dim, matrices })
    }

    /// Entrywise Frobenius twist `g ↦ ρ(g)^{(p)}`.
    pub fn frobenius_twist(&self) -> Result<Representation> {
        let matrices = self.matrices.iter().map(Matrix::frobenius).collect::<Result<Vec<_>>>()?;
        Ok(Representation { group: self.group.clone(), field: self.field, dim: self.dim, matrices })
    }

    /// Entrywise inverse Frobenius: the representation whose twist is `self`.
    pub fn frobenius_untwist(&self) -> Result<Representation> {
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let rows: Result<Vec<Vec<Scalar>>> =
                    m.to_rows().iter().map(|r| r.iter().map(Scalar::frobenius_inverse).collect()).collect();
                Matrix::from_rows_shaped(self.field, m.rows(), m.cols(), rows?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { group: self.group.clone(), field: self.field, dim: self.dim, matrices })
    }

    /// Action on an invariant subspace, in the given (independent) basis.
    pub fn subrepresentation(&self, basis: &[Vector]) -> Result<Representation> {
        let b = Matrix::from_columns(self.field, self.dim, basis);
        if b.rank() != basis.len() {
            return Err(Error::Shape("subspace basis is not independent".into()));
        }
        let matrices = self
            .matrices
            .iter()
            .enumerate()
            .map(|(g, m)| {
                (&b)
                    .solve_matrix(&(m * &b))
                    .ok_or_else(|| Error::NotARepresentation(format!("subspace not invariant under element {g}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { group: self.group.clone(), field: self.field, dim: basis.len(), matrices })
    }

    /// Action on `V / W` for an invariant `W`, with the quotient data used.
    pub fn quotient(&self, span: &[Vector]) -> Result<(Representation, Quotient)> {
        let quo = Quotient::new(self.field, self.dim, span);
        for (g, m) in self.matrices.iter().enumerate() {
            if quo.subspace.iter().any(|w| quo.projection.apply(&m.apply(w)).iter().any(|x| !x.is_zero())) {
                return Err(Error::NotARepresentation(format!("subspace not invariant under element {g}")));
            }
        }
        let matrices = self.matrices.iter().map(|m| quo.induced(m)).collect();
        Ok((Representation { group: self.group.clone(), field: self.field, dim: quo.dim(), matrices }, quo))
    }

    /// Exact basis of `Hom_G(self, o)`.
    pub fn hom_space(&self, o: &Representation) -> Result<Vec<Matrix>> {
        self.same_group(o)?;
        let mut eq = MatrixEquations::new(self.field, &[(o.dim, self.dim)]);
        for g in self.group.generators() {
            eq.add_intertwining(0, &self.matrices[g], &o.matrices[g])?;
        }
        Ok(eq.solve().into_iter().map(|mut v| v.remove(0)).collect())
    }

    pub fn is_intertwiner(&self, o: &Representation, f: &Matrix) -> bool {
        self.group
            .elements()
            .all(|g| f.try_mul(&self.matrices[g]).ok() == o.matrices[g].try_mul(f).ok())
    }

    fn same_group(&self, o: &Representation) -> Result<()> {
        if self.group.as_ref() != o.group.as_ref() {
            return Err(Error::Shape(format!(
                "representations of different groups {} and {}",
                self.group.name(),
                o.group.name()
            )));
        }
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        Ok(())
    }

    /// A random representation built from the standard building blocks of
    /// the group, conjugated by a random invertible matrix.
    pub fn random<R: Rng + ?Sized>(
        group: Arc<FiniteGroup>,
        field: Field,
        max_dim: usize,
        rng: &mut R,
    ) -> Representation {
        let blocks = building_blocks(&group, field, max_dim);
        let target = rng.gen_range(1..=max_dim.max(1));
        let mut acc: Option<Representation> = None;
        let mut dim = 0;
        while dim < target {
            let fitting: Vec<&Representation> = blocks.iter().filter(|b| dim + b.dim <= target).collect();
            if fitting.is_empty() {
                break;
            }
            let b = fitting[rng.gen_range(0..fitting.len())].clone();
            dim += b.dim;
            acc = Some(match acc {
                None => b,
                Some(a) => a.direct_sum(&b).expect("same group"),
            });
        }
        let rep = acc.unwrap_or_else(|| Representation::trivial(group.clone(), field, 1));
        let p = Matrix::random_invertible(field, rep.dim, rng);
        rep.conjugate(&p).expect("invertible")
    }
}

/// Irreducible-ish small representations used for sampling: the trivial
/// representation, one-dimensional characters of cyclic groups with values
/// in the field, the regular representation when it fits, and the natural
/// permutation representation of symmetric groups.
pub fn building_blocks(group: &Arc<FiniteGroup>, field: Field, max_dim: usize) -> Vec<Representation> {
    let mut out = vec![Representation::trivial(group.clone(), field, 1)];
    let n = group.order();
    let gens = group.generators();
    if gens.len() == 1 && n > 1 {
        let g = gens[0];
        let roots: Vec<Scalar> = match field {
            Field::Rational => vec![Scalar::from_i64(field, -1)],
            Field::Finite(f) if f.order() <= 1 << 12 => Scalar::all_elements(f),
            Field::Finite(_) => Vec::new(),
        };
        for z in roots {
            if z.is_zero() || z.is_one() || !z.pow(n as u64).is_one() {
                continue;
            }
            let m = Matrix::scalar_matrix(&z, 1);
            if let Ok(r) = Representation::from_generators(group.clone(), field, 1, &[(g, m)]) {
                out.push(r);
            }
        }
        if n == 4 && field == Field::Rational {
            let rot = Matrix::from_i64(field, &[&[0, -1], &[1, 0]]);
            if let Ok(r) = Representation::from_generators(group.clone(), field, 2, &[(g, rot)]) {
                out.push(r);
            }
        }
    }
    if n <= max_dim && n > 1 {
        out.push(Representation::regular(group.clone(), field));
    }
    for k in 3..=4 {
        if group.name() == format!("S{k}") && k <= max_dim {
            out.push(Representation::permutation(group.clone(), field, &symmetric_perms(k)).expect("natural"));
        }
    }
    out.retain(|r| r.dim <= max_dim);
    out
}

/// Permutations of `0..k` in the element order of [`FiniteGroup::symmetric`].
pub fn symmetric_perms(k: usize) -> Vec<Vec<usize>> {
    crate::groups::permutations(k)
}

/// An isomorphism `a -> b` if one is found among the intertwiners.
///
/// When both Hom spaces are one-dimensional the basis intertwiner decides
/// the question. Otherwise basis elements, their sum, and a fixed number
/// of seeded random combinations are tried, so `None` is conclusive only
/// in the one-dimensional case.
pub fn find_isomorphism(a: &Representation, b: &Representation) -> Result<Option<Matrix>> {
    if a.dim != b.dim {
        return Ok(None);
    }
    let basis = a.hom_space(b)?;
    Ok(invertible_in_span(a.field, &basis))
}

pub(crate) fn invertible_in_span(field: Field, basis: &[Matrix]) -> Option<Matrix> {
    use rand::SeedableRng;
    if let Some(m) = basis.iter().find(|m| m.is_invertible()) {
        return Some(m.clone());
    }
    let first = basis.first()?;
    if !first.is_square() {
        return None;
    }
    let sum = basis.iter().skip(1).fold(first.clone(), |acc, m| &acc + m);
    if sum.is_invertible() {
        return Some(sum);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7a11);
    for _ in 0..64 {
        let comb = basis.iter().fold(Matrix::zeros(field, first.rows(), first.cols()), |acc, m| {
            &acc + &m.scale(&Scalar::random(field, &mut rng))
        });
        if comb.is_invertible() {
            return Some(comb);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_natural_rep_is_a_rep() {
        let r = Representation::natural_symmetric(3, Field::Rational);
        assert_eq!(r.dim(), 3);
        // End of the permutation rep of S3 over Q is 2-dimensional.
        assert_eq!(r.hom_space(&r).unwrap().len(), 2);
    }

    #[test]
    fn bad_generator_images_rejected() {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let m = Matrix::from_i64(Field::Rational, &[&[2]]);
        assert!(Representation::from_generators(c2, Field::Rational, 1, &[(1, m)]).is_err());
    }

    #[test]
    fn trivial_hom_is_one_dimensional() {
        let c3 = Arc::new(FiniteGroup::cyclic(3));
        let t = Representation::trivial(c3, Field::Rational, 1);
        assert_eq!(t.hom_space(&t).unwrap().len(), 1);
    }

    #[test]
    fn conjugate_is_isomorphic() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let f5 = Field::finite(5, 1).unwrap();
        let r = Representation::regular(Arc::new(FiniteGroup::cyclic(4)), f5);
        let p = Matrix::random_invertible(f5, 4, &mut rng);
        let s = r.conjugate(&p).unwrap();
        let iso = find_isomorphism(&r, &s).unwrap().unwrap();
        assert!(r.is_intertwiner(&s, &iso));
    }

    #[test]
    fn blocks_for_c4_over_f5_include_all_characters() {
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let blocks = building_blocks(&c4, Field::finite(5, 1).unwrap(), 2);
        // trivial + characters with generator value 2, 3, 4.
        assert_eq!(blocks.len(), 4);
    }
}
