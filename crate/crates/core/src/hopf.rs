//! Function Hopf algebras `k^Γ` of finite constant group schemes.
//!
//! Elements are coefficient vectors over the delta basis `δ_g`. The product
//! is pointwise, `Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b`, `ε(f) = f(e)` and
//! `S(f)(g) = f(g^{-1})`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Vector};
use crate::groups::{FiniteGroup, GroupHom};

#[derive(Clone, Debug)]
pub struct FunctionHopfAlgebra {
    field: Field,
    group: Arc<FiniteGroup>,
}

/// Structure constants of a finite-dimensional Hopf algebra on a basis
/// `0..n`. Kept separate from [`FunctionHopfAlgebra`] so that the axiom
/// checker also runs on tampered tables.
#[derive(Clone, Debug)]
pub struct HopfTables {
    pub field: Field,
    pub dim: usize,
    /// `product[i][j]` = coordinates of `b_i · b_j`.
    pub product: Vec<Vec<Vector>>,
    pub unit: Vector,
    /// `coproduct[i]` = matrix of `Δ(b_i)`: entry `(a, b)` is the coefficient of `b_a ⊗ b_b`.
    pub coproduct: Vec<Matrix>,
    pub counit: Vector,
    /// Column `i` holds `S(b_i)`.
    pub antipode: Matrix,
}

/// One checked axiom and, on failure, the first basis element (or pair)
/// violating it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfAxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfAxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

impl FunctionHopfAlgebra {
    pub fn new(field: Field, group: Arc<FiniteGroup>) -> Self {
        FunctionHopfAlgebra { field, group }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn delta(&self, g: usize) -> Vector {
        (0..self.dim()).map(|x| Scalar::from_i64(self.field, (x == g) as i64)).collect()
    }

    pub fn unit(&self) -> Vector {
        vec![Scalar::one(self.field); self.dim()]
    }

    pub fn multiply(&self, f: &[Scalar], g: &[Scalar]) -> Vector {
        f.iter().zip(g).map(|(a, b)| a * b).collect()
    }

    /// `Δ(f)` as a matrix: entry `(a, b)` is `f(ab)`.
    pub fn comultiply(&self, f: &[Scalar]) -> Matrix {
        let g = &self.group;
        Matrix::from_fn(self.field, self.dim(), self.dim(), |a, b| f[g.mul(a, b)].clone())
    }

    pub fn counit(&self, f: &[Scalar]) -> Scalar {
        f[self.group.identity()].clone()
    }

    pub fn antipode(&self, f: &[Scalar]) -> Vector {
        self.group.elements().map(|g| f[self.group.inv(g)].clone()).collect()
    }

    pub fn tables(&self) -> HopfTables {
        let n = self.dim();
        let product = (0..n)
            .map(|i| (0..n).map(|j| self.multiply(&self.delta(i), &self.delta(j))).collect())
            .collect();
        let coproduct = (0..n).map(|i| self.comultiply(&self.delta(i))).collect();
        let counit = (0..n).map(|i| self.counit(&self.delta(i))).collect();
        let cols: Vec<Vector> = (0..n).map(|i| self.antipode(&self.delta(i))).collect();
        HopfTables {
            field: self.field,
            dim: n,
            product,
            unit: self.unit(),
            coproduct,
            counit,
            antipode: Matrix::from_columns(self.field, n, &cols),
        }
    }
}

impl HopfTables {
    fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                for (k, p) in self.product[i][j].iter().enumerate() {
                    out[k] = &out[k] + &(&c * p);
                }
            }
        }
        out
    }

    fn coproduct_vec(&self, x: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                acc = &acc + &self.coproduct[i].scale(a);
            }
        }
        acc
    }

    /// Basis-indexed 3-tensor `(Δ ⊗ id)Δ(b_i)` flattened as `a*n*n + b*n + c`.
    fn left_iterated(&self, i: usize) -> Vector {
        let n = self.dim;
        let mut out = vec![Scalar::zero(self.field); n * n * n];
        let d = &self.coproduct[i];
        for x in 0..n {
            for c in 0..n {
                let coef = d.get(x, c);
                if coef.is_zero() {
                    continue;
                }
                let dx = &self.coproduct[x];
                for a in 0..n {
                    for b in 0..n {
                        let v = dx.get(a, b);
                        if !v.is_zero() {
                            let k = a * n * n + b * n + c;
                            out[k] = &out[k] + &(coef * v);
                        }
                    }
                }
            }
        }
        out
    }

    fn right_iterated(&self, i: usize) -> Vector {
        let n = self.dim;
        let mut out = vec![Scalar::zero(self.field); n * n * n];
        let d = &self.coproduct[i];
        for a in 0..n {
            for y in 0..n {
                let coef = d.get(a, y);
                if coef.is_zero() {
                    continue;
                }
                let dy = &self.coproduct[y];
                for b in 0..n {
                    for c in 0..n {
                        let v = dy.get(b, c);
                        if !v.is_zero() {
                            let k = a * n * n + b * n + c;
                            out[k] = &out[k] + &(coef * v);
                        }
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vector {
        (0..self.dim).map(|x| Scalar::from_i64(self.field, (x == i) as i64)).collect()
    }

    /// `Σ coef(a,b) · L(b_a) · R(b_b)` for the convolution-type maps.
    fn convolve(&self, d: &Matrix, left_s: bool, right_s: bool) -> Vector {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for a in 0..self.dim {
            for b in 0..self.dim {
                let coef = d.get(a, b);
                if coef.is_zero() {
                    continue;
                }
                let l = if left_s { self.antipode.column(a) } else { self.basis(a) };
                let r = if right_s { self.antipode.column(b) } else { self.basis(b) };
                let prod = self.mul_vec(&l, &r);
                for (k, p) in prod.iter().enumerate() {
                    out[k] = &out[k] + &(coef * p);
                }
            }
        }
        out
    }

    fn check(axiom: &str, witness: Option<Vec<usize>>) -> AxiomCheck {
        AxiomCheck { axiom: axiom.to_string(), passed: witness.is_none(), witness }
    }

    /// Exhaustive verification on basis elements (pairs and triples where
    /// the axiom is multilinear in several arguments).
    pub fn verify(&self) -> HopfAxiomReport {
        let n = self.dim;
        let zero = || Scalar::zero(self.field);
        let mut checks = Vec::new();

        let assoc = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| {
                let left = self.mul_vec(&self.product[i][j], &self.basis(k));
                let right = self.mul_vec(&self.basis(i), &self.product[j][k]);
                left != right
            })
            .map(|(i, j, k)| vec![i, j, k]);
        checks.push(Self::check("associativity", assoc));

        let unit = (0..n)
            .find(|&i| {
                let b = self.basis(i);
                self.mul_vec(&self.unit, &b) != b || self.mul_vec(&b, &self.unit) != b
            })
            .map(|i| vec![i]);
        checks.push(Self::check("unit", unit));

        let coassoc = (0..n).find(|&i| self.left_iterated(i) != self.right_iterated(i)).map(|i| vec![i]);
        checks.push(Self::check("coassociativity", coassoc));

        let counit = (0..n)
            .find(|&i| {
                let d = &self.coproduct[i];
                let b = self.basis(i);
                let left: Vector = (0..n)
                    .map(|y| (0..n).fold(zero(), |acc, x| acc + &(&self.counit[x] * d.get(x, y))))
                    .collect();
                let right: Vector = (0..n)
                    .map(|x| (0..n).fold(zero(), |acc, y| acc + &(d.get(x, y) * &self.counit[y])))
                    .collect();
                left != b || right != b
            })
            .map(|i| vec![i]);
        checks.push(Self::check("counit", counit));

        // Δ and ε are algebra maps.
        let bialgebra = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let lhs = self.coproduct_vec(&self.product[i][j]);
                let (di, dj) = (&self.coproduct[i], &self.coproduct[j]);
                let rhs = Matrix::from_fn(self.field, n, n, |a, b| {
                    let mut acc = zero();
                    for a1 in 0..n {
                        for a2 in 0..n {
                            let x = di.get(a1, a2);
                            if x.is_zero() {
                                continue;
                            }
                            for b1 in 0..n {
                                for b2 in 0..n {
                                    let y = dj.get(b1, b2);
                                    if y.is_zero() {
                                        continue;
                                    }
                                    let c = &self.product[a1][b1][a] * &self.product[a2][b2][b];
                                    if !c.is_zero() {
                                        acc = acc + &(&(x * y) * &c);
                                    }
                                }
                            }
                        }
                    }
                    acc
                });
                let eps = |v: &[Scalar]| v.iter().zip(&self.counit).fold(zero(), |acc, (a, b)| acc + &(a * b));
                lhs != rhs || eps(&self.product[i][j]) != &self.counit[i] * &self.counit[j]
            })
            .map(|(i, j)| vec![i, j]);
        checks.push(Self::check("bialgebra", bialgebra));

        let antipode = (0..n)
            .find(|&i| {
                let d = &self.coproduct[i];
                let target: Vector = self.unit.iter().map(|u| u * &self.counit[i]).collect();
                self.convolve(d, true, false) != target || self.convolve(d, false, true) != target
            })
            .map(|i| vec![i]);
        checks.push(Self::check("antipode", antipode));

        let involutive = (0..n)
            .find(|&i| self.antipode.apply(&self.antipode.column(i)) != self.basis(i))
            .map(|i| vec![i]);
        checks.push(Self::check("antipode_involutive", involutive));

        let s_mult = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let lhs = self.antipode.apply(&self.product[i][j]);
                let rhs = self.mul_vec(&self.antipode.column(i), &self.antipode.column(j));
                lhs != rhs
            })
            .map(|(i, j)| vec![i, j]);
        checks.push(Self::check("antipode_multiplicative", s_mult));

        HopfAxiomReport { checks }
    }
}

/// Exhaustive Hopf-axiom verification for `k^Γ`.
pub fn verify_hopf_axioms(a: &FunctionHopfAlgebra) -> HopfAxiomReport {
    a.tables().verify()
}

/// A linear map between function Hopf algebras, as a matrix from the
/// source delta basis to the target delta basis.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub source: FunctionHopfAlgebra,
    pub target: FunctionHopfAlgebra,
    pub matrix: Matrix,
}

/// The morphism `k[G] -> k[H]`, `f ↦ f ∘ φ`, dual to `φ: H -> G`.
pub fn dualize_hom(field: Field, phi: &GroupHom) -> HopfMorphism {
    let h = phi.source();
    let g = phi.target();
    let matrix = Matrix::from_fn(field, h.order(), g.order(), |x, y| {
        Scalar::from_i64(field, (phi.apply(x) == y) as i64)
    });
    HopfMorphism {
        source: FunctionHopfAlgebra::new(field, g.clone()),
        target: FunctionHopfAlgebra::new(field, h.clone()),
        matrix,
    }
}

impl HopfMorphism {
    pub fn apply(&self, f: &[Scalar]) -> Vector {
        self.matrix.apply(f)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &HopfMorphism) -> Result<HopfMorphism> {
        if first.target.group().as_ref() != self.source.group().as_ref() {
            return Err(Error::Shape("morphisms are not composable".into()));
        }
        Ok(HopfMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.try_mul(&first.matrix)?,
        })
    }

    /// Checks unitality, multiplicativity on basis pairs, compatibility with
    /// `Δ` and `ε`, and with the antipode.
    pub fn verify(&self) -> HopfAxiomReport {
        let src = &self.source;
        let dst = &self.target;
        let n = src.dim();
        let mut checks = Vec::new();
        let unit_ok = self.apply(&src.unit()) == dst.unit();
        checks.push(HopfTables::check("unital", (!unit_ok).then(Vec::new)));
        let mult = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let (a, b) = (src.delta(i), src.delta(j));
                self.apply(&src.multiply(&a, &b)) != dst.multiply(&self.apply(&a), &self.apply(&b))
            })
            .map(|(i, j)| vec![i, j]);
        checks.push(HopfTables::check("multiplicative", mult));
        let coalg = (0..n)
            .find(|&i| {
                let a = src.delta(i);
                let lhs = dst.comultiply(&self.apply(&a));
                let rhs = &(&self.matrix * &src.comultiply(&a)) * &self.matrix.transpose();
                lhs != rhs || dst.counit(&self.apply(&a)) != src.counit(&a)
            })
            .map(|i| vec![i]);
        checks.push(HopfTables::check("coalgebra_map", coalg));
        let anti = (0..n)
            .find(|&i| {
                let a = src.delta(i);
                self.apply(&src.antipode(&a)) != dst.antipode(&self.apply(&a))
            })
            .map(|i| vec![i]);
        checks.push(HopfTables::check("antipode_compatible", anti));
        HopfAxiomReport { checks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_over_q_passes() {
        let a = FunctionHopfAlgebra::new(Field::Rational, Arc::new(FiniteGroup::cyclic(2)));
        let r = verify_hopf_axioms(&a);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn c4_over_f3_passes() {
        let a = FunctionHopfAlgebra::new(Field::finite(3, 1).unwrap(), Arc::new(FiniteGroup::cyclic(4)));
        assert!(verify_hopf_axioms(&a).passed());
    }

    #[test]
    fn s3_passes() {
        let a = FunctionHopfAlgebra::new(Field::Rational, Arc::new(FiniteGroup::symmetric(3)));
        assert!(verify_hopf_axioms(&a).passed());
    }

    #[test]
    fn swapped_coproduct_breaks_coassociativity() {
        let a = FunctionHopfAlgebra::new(Field::Rational, Arc::new(FiniteGroup::cyclic(4)));
        let mut t = a.tables();
        t.coproduct.swap(0, 1);
        let r = t.verify();
        let c = r.get("coassociativity").unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
    }

    #[test]
    fn dualize_identity_is_identity() {
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let m = dualize_hom(Field::Rational, &GroupHom::identity(c4));
        assert!(m.matrix.is_identity());
        assert!(m.verify().passed());
    }

    #[test]
    fn dualize_from_trivial_is_counit() {
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let one = Arc::new(FiniteGroup::trivial());
        let m = dualize_hom(Field::Rational, &GroupHom::trivial(one, c4.clone()));
        let a = FunctionHopfAlgebra::new(Field::Rational, c4);
        let f: Vector = (1..=4).map(|x| Scalar::from_i64(Field::Rational, x)).collect();
        assert_eq!(m.apply(&f), vec![a.counit(&f)]);
        assert!(m.verify().passed());
    }

    #[test]
    fn dualize_squares_embedding() {
        let q = Field::Rational;
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let phi = GroupHom::new(c2, c4.clone(), vec![0, 2]).unwrap();
        let m = dualize_hom(q, &phi);
        let a = FunctionHopfAlgebra::new(q, c4);
        let s = vec![Scalar::zero(q), Scalar::one(q)];
        assert_eq!(m.apply(&a.delta(2)), s);
        assert_eq!(m.apply(&a.delta(1)), vec![Scalar::zero(q); 2]);
        assert!(m.verify().passed());
    }

    #[test]
    fn dualize_is_contravariant() {
        let q = Field::Rational;
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        // C2 -> C4 -> C2 and C2 -> S3.
        let psi = GroupHom::new(c2.clone(), c4.clone(), vec![0, 2]).unwrap();
        let phi = GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let tau = GroupHom::new(c2.clone(), s3.clone(), vec![0, 1]).unwrap();
        for (outer, inner) in [(&phi, &psi), (&tau, &phi.compose(&psi).unwrap())] {
            let comp = outer.compose(inner).unwrap();
            let lhs = dualize_hom(q, &comp);
            let rhs = dualize_hom(q, inner).compose(&dualize_hom(q, outer)).unwrap();
            assert_eq!(lhs.matrix, rhs.matrix);
        }
    }

    #[test]
    fn non_homomorphism_dual_fails_verification() {
        let q = Field::Rational;
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let bad = GroupHom::new_unchecked(c2, c4, vec![0, 1]).unwrap();
        assert!(!dualize_hom(q, &bad).verify().passed());
    }
}
