use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::functor::{fr_plus_morphism, fr_plus_with, FrPlusResult};
use super::tensor::SymmetryChoice;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Vector};
use crate::groups::FiniteGroup;
use crate::limits::Limits;
use crate::rep::{building_blocks, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulnessReport {
    pub hom_dim: usize,
    pub fr_hom_dim: usize,
    /// Rank of `φ ⊗ 1 ↦ Fr₊(φ)` on `Hom(V, W) ⊗_{k,(·)^p} k`.
    pub rank: usize,
    pub images_intertwine: bool,
    pub injective: bool,
    pub full: bool,
}

impl FaithfulnessReport {
    pub fn fully_faithful(&self) -> bool {
        self.images_intertwine && self.injective && self.full
    }
}

/// Compares `Hom(V, W)`, twisted, with `Hom(Fr₊V, Fr₊W)` through `Fr₊`.
pub fn faithfulness_probe(a: &FrPlusResult, b: &FrPlusResult) -> Result<FaithfulnessReport> {
    let hom = a.base.hom_space(&b.base)?;
    let fr_hom = a.rep.hom_space(&b.rep)?;
    let images = hom.iter().map(|phi| fr_plus_morphism(a, b, phi)).collect::<Result<Vec<_>>>()?;
    let images_intertwine = images.iter().all(|m| a.rep.is_intertwiner(&b.rep, m));
    let flat: Vec<Vector> = images.iter().map(|m| m.entries().to_vec()).collect();
    let rank = if flat.is_empty() {
        0
    } else {
        Matrix::from_columns(a.field(), flat[0].len(), &flat).rank()
    };
    Ok(FaithfulnessReport {
        hom_dim: hom.len(),
        fr_hom_dim: fr_hom.len(),
        rank,
        images_intertwine,
        injective: rank == hom.len(),
        full: rank == fr_hom.len(),
    })
}

/// `0 → A → V → B → 0` with explicit intertwiners.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub a: Representation,
    pub v: Representation,
    pub b: Representation,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

/// What fails, if anything, in `A --i--> V --q--> B` being short exact.
pub fn exactness_defect(i: &Matrix, q: &Matrix) -> Option<String> {
    if i.rows() != q.cols() {
        return Some(format!("maps do not compose: {}x{} then {}x{}", i.rows(), i.cols(), q.rows(), q.cols()));
    }
    if i.rank() != i.cols() {
        return Some("first map is not injective".into());
    }
    if q.rank() != q.rows() {
        return Some("second map is not surjective".into());
    }
    if !(q * i).is_zero() {
        return Some("composite is not zero".into());
    }
    if i.rank() != q.cols() - q.rank() {
        return Some("image is smaller than the kernel".into());
    }
    None
}

impl ShortExactSequence {
    pub fn new(a: Representation, v: Representation, b: Representation, inclusion: Matrix, projection: Matrix) -> Result<Self> {
        if inclusion.rows() != v.dim() || inclusion.cols() != a.dim() || !a.is_intertwiner(&v, &inclusion) {
            return Err(Error::NotAnIntertwiner("inclusion".into()));
        }
        if projection.rows() != b.dim() || projection.cols() != v.dim() || !v.is_intertwiner(&b, &projection) {
            return Err(Error::NotAnIntertwiner("projection".into()));
        }
        if let Some(why) = exactness_defect(&inclusion, &projection) {
            return Err(Error::NotExact(why));
        }
        Ok(ShortExactSequence { a, v, b, inclusion, projection })
    }

    /// `0 → W → V → V/W → 0` for an invariant subspace `W`.
    pub fn from_subspace(v: &Representation, basis: &[Vector]) -> Result<Self> {
        let a = v.subrepresentation(basis)?;
        let (b, quo) = v.quotient(basis)?;
        let inclusion = Matrix::from_columns(v.field(), v.dim(), basis);
        Self::new(a, v.clone(), b, inclusion, quo.projection)
    }

    /// `0 → A → A ⊕ B → B → 0`.
    pub fn split(a: &Representation, b: &Representation) -> Result<Self> {
        let field = a.field();
        let (m, n) = (a.dim(), b.dim());
        let v = a.direct_sum(b)?;
        let inclusion = Matrix::from_fn(field, m + n, m, |i, j| Scalar::from_i64(field, (i == j) as i64));
        let projection = Matrix::from_fn(field, n, m + n, |i, j| Scalar::from_i64(field, (j == i + m) as i64));
        Self::new(a.clone(), v, b.clone(), inclusion, projection)
    }

    /// The line of constant vectors inside the natural representation of `S_k`.
    pub fn constants_in_permutation(k: usize, field: Field) -> Result<Self> {
        let v = Representation::natural_symmetric(k, field);
        Self::from_subspace(&v, &[vec![Scalar::one(field); k]])
    }

    /// The sum-zero vectors inside the natural representation of `S_k`.
    pub fn sum_zero_in_permutation(k: usize, field: Field) -> Result<Self> {
        let v = Representation::natural_symmetric(k, field);
        let basis: Vec<Vector> = (0..k - 1)
            .map(|i| (0..k).map(|j| Scalar::from_i64(field, (j == i) as i64 - (j == i + 1) as i64)).collect())
            .collect();
        Self::from_subspace(&v, &basis)
    }

    /// Whether `V ≅ A ⊕ B` compatibly, i.e. the projection has an
    /// intertwining section.
    pub fn splits(&self) -> Result<bool> {
        let sections = self.b.hom_space(&self.v)?;
        if sections.is_empty() {
            return Ok(false);
        }
        // q∘s ranges over End(B); the sequence splits iff the identity is hit.
        let images: Vec<Vector> = sections.iter().map(|s| (&self.projection * s).entries().to_vec()).collect();
        let m = Matrix::from_columns(self.v.field(), images[0].len(), &images);
        Ok(m.solve(Matrix::identity(self.v.field(), self.b.dim()).entries()).is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub dims: [usize; 3],
    pub fr_dims: [usize; 3],
    pub dims_add: bool,
    pub exact: bool,
    pub defect: Option<String>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.exact && self.dims_add
    }
}

pub fn exactness_probe(seq: &ShortExactSequence, choice: SymmetryChoice, limits: &Limits) -> Result<ExactnessReport> {
    let fa = fr_plus_with(&seq.a, choice, limits)?;
    let fv = fr_plus_with(&seq.v, choice, limits)?;
    let fb = fr_plus_with(&seq.b, choice, limits)?;
    let i = fr_plus_morphism(&fa, &fv, &seq.inclusion)?;
    let q = fr_plus_morphism(&fv, &fb, &seq.projection)?;
    let defect = exactness_defect(&i, &q);
    Ok(ExactnessReport {
        dims: [seq.a.dim(), seq.v.dim(), seq.b.dim()],
        fr_dims: [fa.dim(), fv.dim(), fb.dim()],
        dims_add: fa.dim() + fb.dim() == fv.dim(),
        exact: defect.is_none(),
        defect,
    })
}

/// `dim Fr₊(V ⊗ W) = dim Fr₊V · dim Fr₊W`.
pub fn tensor_dimension_check(v: &Representation, w: &Representation, limits: &Limits) -> Result<bool> {
    let fv = fr_plus_with(v, SymmetryChoice::Cyclic, limits)?;
    let fw = fr_plus_with(w, SymmetryChoice::Cyclic, limits)?;
    let fvw = fr_plus_with(&v.tensor(w)?, SymmetryChoice::Cyclic, limits)?;
    Ok(fvw.dim() == fv.dim() * fw.dim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoiceComparison {
    pub cyclic_dim: usize,
    pub symmetric_dim: usize,
    pub invariants: [usize; 2],
    pub coinvariants: [usize; 2],
    /// `H_0(Z/p) ↠ H_0(S_p)` carries one image isomorphically onto the other.
    pub images_match: bool,
    /// The identification sends `t_cyclic(e_i)` to `t_symmetric(e_i)`.
    pub t_compatible: bool,
}

impl ChoiceComparison {
    pub fn identical(&self) -> bool {
        self.cyclic_dim == self.symmetric_dim && self.images_match && self.t_compatible
    }
}

pub fn compare_choices(v: &Representation, limits: &Limits) -> Result<ChoiceComparison> {
    let cyc = fr_plus_with(v, SymmetryChoice::Cyclic, limits)?;
    let sym = fr_plus_with(v, SymmetryChoice::Symmetric, limits)?;
    // Z/p ⊂ S_p, so the cyclic coinvariants surject onto the symmetric ones.
    let r = &sym.coinvariants.projection * &cyc.coinvariants.section();
    let pushed = &r * &cyc.image;
    let both = pushed.hstack(&sym.image)?;
    let images_match = pushed.rank() == cyc.dim() && both.rank() == sym.dim() && cyc.dim() == sym.dim();
    let t_compatible = &pushed * &cyc.t_matrix() == &sym.image * &sym.t_matrix();
    Ok(ChoiceComparison {
        cyclic_dim: cyc.dim(),
        symmetric_dim: sym.dim(),
        invariants: [cyc.invariants.len(), sym.invariants.len()],
        coinvariants: [cyc.coinvariants.dim(), sym.coinvariants.dim()],
        images_match,
        t_compatible,
    })
}

/// Every matrix has exactly one nonzero entry in each row and column.
pub fn is_monomial(v: &Representation) -> bool {
    v.matrices().iter().all(|m| {
        let n = m.rows();
        (0..n).all(|i| (0..n).filter(|&j| !m.get(i, j).is_zero()).count() == 1)
            && (0..n).all(|j| (0..n).filter(|&i| !m.get(i, j).is_zero()).count() == 1)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UntwistReport {
    pub monomial: bool,
    /// `t` of the untwisted representation is an isomorphism onto `W`.
    pub isomorphic: bool,
}

impl UntwistReport {
    /// Only monomial (including permutation) representations are certified.
    pub fn certified(&self) -> bool {
        self.monomial && self.isomorphic
    }
}

/// Builds `V = W^{(1/p)}` and checks that `t(V)` identifies `W` with `Fr₊V`.
pub fn untwist_witness(w: &Representation, limits: &Limits) -> Result<UntwistReport> {
    let v = w.frobenius_untwist()?;
    let res = fr_plus_with(&v, SymmetryChoice::Cyclic, limits)?;
    let t = res.t_matrix();
    let isomorphic = t.is_invertible() && w.is_intertwiner(&res.rep, &t);
    Ok(UntwistReport { monomial: is_monomial(w), isomorphic })
}

/// A deterministic list of representations of dimension `<= max_dim`:
/// direct sums of the building blocks (plus the sign and standard
/// representations of symmetric groups), each also conjugated by a seeded
/// random change of basis.
pub fn fr_corpus(group: &Arc<FiniteGroup>, field: Field, max_dim: usize, seed: u64) -> Vec<Representation> {
    let mut blocks = building_blocks(group, field, max_dim);
    for k in 3..=4 {
        if group.name() == format!("S{k}") {
            if field.characteristic() != 2 {
                blocks.push(Representation::sign(k, field));
            }
            if k - 1 <= max_dim {
                blocks.push(Representation::standard_symmetric(k, field));
            }
        }
    }
    let mut sums = Vec::new();
    fn extend(blocks: &[Representation], start: usize, acc: Option<Representation>, max: usize, out: &mut Vec<Representation>) {
        for (i, b) in blocks.iter().enumerate().skip(start) {
            let dim = acc.as_ref().map_or(0, Representation::dim) + b.dim();
            if dim > max {
                continue;
            }
            let next = match &acc {
                None => b.clone(),
                Some(a) => a.direct_sum(b).expect("same group"),
            };
            out.push(next.clone());
            extend(blocks, i, Some(next), max, out);
        }
    }
    extend(&blocks, 0, None, max_dim, &mut sums);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(2 * sums.len());
    for r in sums {
        let p = Matrix::random_invertible(field, r.dim(), &mut rng);
        let c = r.conjugate(&p).expect("invertible");
        out.push(r);
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        let f2 = Field::finite(2, 1).unwrap();
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let c = fr_corpus(&s3, f2, 3, 1);
        assert!(c.iter().all(|r| r.dim() <= 3));
        assert!(c.iter().any(|r| r.dim() == 2 && !r.matrices().iter().all(Matrix::is_identity)));
    }

    #[test]
    fn split_sequence() {
        let f3 = Field::finite(3, 1).unwrap();
        let g = Arc::new(FiniteGroup::cyclic(3));
        let a = Representation::trivial(g.clone(), f3, 1);
        let b = Representation::regular(g, f3);
        let seq = ShortExactSequence::split(&a, &b).unwrap();
        assert!(seq.splits().unwrap());
        let r = exactness_probe(&seq, SymmetryChoice::Cyclic, &Limits::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.fr_dims, [1, 4, 3]);
    }

    #[test]
    fn not_exact_input() {
        let f2 = Field::finite(2, 1).unwrap();
        let g = Arc::new(FiniteGroup::trivial());
        let a = Representation::trivial(g.clone(), f2, 1);
        let v = Representation::trivial(g, f2, 2);
        let i = Matrix::from_i64(f2, &[&[1], &[0]]);
        let q = Matrix::from_i64(f2, &[&[1, 1]]);
        assert!(matches!(ShortExactSequence::new(a.clone(), v, a, i, q), Err(Error::NotExact(_))));
    }
}
