use std::sync::Arc;

use rand::Rng;

use super::representation::{invertible_in_span, Representation};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, MatrixEquations, Term};
use crate::groups::{normal_form, AmalgamPresentation, Factor, Letter, ReducedWord};

/// An object `(V1, V2, c)` of the fibre product of representation
/// categories: `c: V1 -> V2` is an isomorphism of `H`-representations.
#[derive(Clone, Debug)]
pub struct GluedTriple {
    presentation: Arc<AmalgamPresentation>,
    v1: Representation,
    v2: Representation,
    c: Matrix,
}

/// A representation of `G1 *_H G2`: actions of both factors on one space
/// whose restrictions to `H` agree.
#[derive(Clone, Debug)]
pub struct AmalgamRep {
    presentation: Arc<AmalgamPresentation>,
    rho1: Representation,
    rho2: Representation,
}

/// A morphism `(a, b)` of glued triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleMorphism {
    pub a: Matrix,
    pub b: Matrix,
}

fn check_factor(p: &AmalgamPresentation, i: Factor, v: &Representation) -> Result<()> {
    if v.group().as_ref() != p.factor(i).as_ref() {
        return Err(Error::NotARepresentation(format!(
            "representation of {} given for factor {} = {}",
            v.group().name(),
            i.number(),
            p.factor(i).name()
        )));
    }
    Ok(())
}

impl GluedTriple {
    pub fn new(
        presentation: Arc<AmalgamPresentation>,
        v1: Representation,
        v2: Representation,
        c: Matrix,
    ) -> Result<Self> {
        check_factor(&presentation, Factor::One, &v1)?;
        check_factor(&presentation, Factor::Two, &v2)?;
        if v1.field() != v2.field() || c.field() != v1.field() {
            return Err(Error::FieldMismatch("triple components over different fields".into()));
        }
        if c.rows() != v2.dim() || c.cols() != v1.dim() {
            return Err(Error::Shape(format!(
                "c is {}x{}, expected {}x{}",
                c.rows(),
                c.cols(),
                v2.dim(),
                v1.dim()
            )));
        }
        if !c.is_invertible() {
            return Err(Error::NotInvertible("gluing map c".into()));
        }
        let (phi1, phi2) = (presentation.structure_map(Factor::One), presentation.structure_map(Factor::Two));
        for h in presentation.amalgamated().elements() {
            if &c * v1.matrix(phi1.apply(h)) != v2.matrix(phi2.apply(h)) * &c {
                return Err(Error::NotAnIntertwiner(format!("c does not commute with the action of h = {h}")));
            }
        }
        Ok(GluedTriple { presentation, v1, v2, c })
    }

    pub fn presentation(&self) -> &Arc<AmalgamPresentation> {
        &self.presentation
    }

    pub fn v1(&self) -> &Representation {
        &self.v1
    }

    pub fn v2(&self) -> &Representation {
        &self.v2
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    pub fn field(&self) -> Field {
        self.v1.field()
    }

    /// Checks that `(a, b)` is a morphism `self -> other`.
    pub fn is_morphism(&self, other: &GluedTriple, m: &TripleMorphism) -> bool {
        self.v1.is_intertwiner(&other.v1, &m.a)
            && self.v2.is_intertwiner(&other.v2, &m.b)
            && other.c.try_mul(&m.a).ok() == m.b.try_mul(&self.c).ok()
    }

    /// Exact basis of morphisms `self -> other`: pairs `(a, b)` of factor
    /// intertwiners with `c'·a = b·c`.
    pub fn hom_space(&self, other: &GluedTriple) -> Result<Vec<TripleMorphism>> {
        let f = self.field();
        let (m1, m2) = (self.v1.dim(), self.v2.dim());
        let (n1, n2) = (other.v1.dim(), other.v2.dim());
        let mut eq = MatrixEquations::new(f, &[(n1, m1), (n2, m2)]);
        for g in self.v1.group().generators() {
            eq.add_intertwining(0, self.v1.matrix(g), other.v1.matrix(g))?;
        }
        for g in self.v2.group().generators() {
            eq.add_intertwining(1, self.v2.matrix(g), other.v2.matrix(g))?;
        }
        let id_m1 = Matrix::identity(f, m1);
        let id_n2 = Matrix::identity(f, n2);
        eq.add(&[
            Term { unknown: 0, left: &other.c, right: &id_m1, negate: false },
            Term { unknown: 1, left: &id_n2, right: &self.c, negate: true },
        ])?;
        Ok(eq
            .solve()
            .into_iter()
            .map(|mut v| {
                let b = v.pop().expect("two unknowns");
                let a = v.pop().expect("two unknowns");
                TripleMorphism { a, b }
            })
            .collect())
    }

    /// Samples a triple: random representations of both factors whose
    /// restrictions to `H` are isomorphic, glued by an `H`-isomorphism.
    /// Returns `None` if no compatible pair turned up within `attempts`.
    pub fn random<R: Rng + ?Sized>(
        presentation: Arc<AmalgamPresentation>,
        field: Field,
        max_dim: usize,
        attempts: usize,
        rng: &mut R,
    ) -> Option<GluedTriple> {
        let p = presentation.as_ref();
        for _ in 0..attempts {
            let v1 = Representation::random(p.factor(Factor::One).clone(), field, max_dim, rng);
            let v2 = Representation::random(p.factor(Factor::Two).clone(), field, max_dim, rng);
            if v1.dim() != v2.dim() {
                continue;
            }
            let r1 = v1.restrict(p.structure_map(Factor::One)).ok()?;
            let r2 = v2.restrict(p.structure_map(Factor::Two)).ok()?;
            let basis = r1.hom_space(&r2).ok()?;
            if let Some(c) = invertible_in_span(field, &basis) {
                return GluedTriple::new(presentation.clone(), v1, v2, c).ok();
            }
        }
        None
    }
}

impl AmalgamRep {
    pub fn new(presentation: Arc<AmalgamPresentation>, rho1: Representation, rho2: Representation) -> Result<Self> {
        check_factor(&presentation, Factor::One, &rho1)?;
        check_factor(&presentation, Factor::Two, &rho2)?;
        if rho1.field() != rho2.field() {
            return Err(Error::FieldMismatch("factor actions over different fields".into()));
        }
        if rho1.dim() != rho2.dim() {
            return Err(Error::Shape(format!("factor actions of dimensions {} and {}", rho1.dim(), rho2.dim())));
        }
        let (phi1, phi2) = (presentation.structure_map(Factor::One), presentation.structure_map(Factor::Two));
        for h in presentation.amalgamated().elements() {
            if rho1.matrix(phi1.apply(h)) != rho2.matrix(phi2.apply(h)) {
                return Err(Error::NotARepresentation(format!(
                    "restrictions to H disagree at h = {h}"
                )));
            }
        }
        Ok(AmalgamRep { presentation, rho1, rho2 })
    }

    pub fn presentation(&self) -> &Arc<AmalgamPresentation> {
        &self.presentation
    }

    pub fn field(&self) -> Field {
        self.rho1.field()
    }

    pub fn dim(&self) -> usize {
        self.rho1.dim()
    }

    pub fn factor_rep(&self, i: Factor) -> &Representation {
        match i {
            Factor::One => &self.rho1,
            Factor::Two => &self.rho2,
        }
    }

    pub fn letter_matrix(&self, l: &Letter) -> &Matrix {
        self.factor_rep(l.factor).matrix(l.element)
    }

    /// Ordered product of the letter matrices of a raw word.
    pub fn evaluate_raw(&self, word: &[Letter]) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.field(), self.dim());
        for l in word {
            self.presentation.check_letter(l)?;
            acc = &acc * self.letter_matrix(l);
        }
        Ok(acc)
    }

    /// `ρ(φ(h)) · ρ(r1) ⋯ ρ(rk)`.
    pub fn evaluate_word(&self, w: &ReducedWord) -> Matrix {
        let h = self.rho1.matrix(self.presentation.structure_map(Factor::One).apply(w.h));
        w.letters.iter().fold(h.clone(), |acc, l| &acc * self.letter_matrix(l))
    }

    /// Letter matrices of all generators of both factors.
    pub fn generator_matrices(&self) -> Vec<Matrix> {
        let mut out = Vec::new();
        for i in Factor::BOTH {
            let rep = self.factor_rep(i);
            out.extend(rep.group().generators().into_iter().map(|g| rep.matrix(g).clone()));
        }
        out
    }

    /// Exact basis of intertwiners `self -> other`.
    pub fn hom_space(&self, other: &AmalgamRep) -> Result<Vec<Matrix>> {
        if self.presentation.name() != other.presentation.name()
            || self.presentation.factor(Factor::One) != other.presentation.factor(Factor::One)
            || self.presentation.factor(Factor::Two) != other.presentation.factor(Factor::Two)
        {
            return Err(Error::Shape("representations of different amalgams".into()));
        }
        let mut eq = MatrixEquations::new(self.field(), &[(other.dim(), self.dim())]);
        for i in Factor::BOTH {
            let (a, b) = (self.factor_rep(i), other.factor_rep(i));
            for g in a.group().generators() {
                eq.add_intertwining(0, a.matrix(g), b.matrix(g))?;
            }
        }
        Ok(eq.solve().into_iter().map(|mut v| v.remove(0)).collect())
    }

    pub fn is_intertwiner(&self, other: &AmalgamRep, f: &Matrix) -> bool {
        Factor::BOTH.iter().all(|&i| self.factor_rep(i).is_intertwiner(other.factor_rep(i), f))
    }

    /// Checks `evaluate_raw(w) = evaluate_word(normal_form(w))` on every raw
    /// word of length at most `n`; returns the first failing word.
    pub fn check_word_invariance(&self, n: usize) -> Result<Option<Vec<Letter>>> {
        let p = self.presentation.as_ref();
        let letters: Vec<Letter> = Factor::BOTH
            .iter()
            .flat_map(|&i| p.factor(i).elements().map(move |g| Letter::new(i, g)))
            .collect();
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 0..=n {
            for w in &layer {
                if self.evaluate_raw(w)? != self.evaluate_word(&normal_form(p, w)?) {
                    return Ok(Some(w.clone()));
                }
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    letters.iter().map(move |l| {
                        let mut v = w.clone();
                        v.push(*l);
                        v
                    })
                })
                .collect();
        }
        Ok(None)
    }
}

/// The representation on `V1` where `G1` acts by `ρ1` and `G2` by
/// `g ↦ c^{-1} ρ2(g) c`.
pub fn glue(t: &GluedTriple) -> Result<AmalgamRep> {
    let rho2 = t.v2.conjugate(&t.c)?;
    AmalgamRep::new(t.presentation.clone(), t.v1.clone(), rho2)
}

/// The triple `(ρ1, ρ2, id)` of restrictions.
pub fn split(r: &AmalgamRep) -> GluedTriple {
    GluedTriple {
        presentation: r.presentation.clone(),
        v1: r.rho1.clone(),
        v2: r.rho2.clone(),
        c: Matrix::identity(r.field(), r.dim()),
    }
}

/// The isomorphism `split(glue(t)) -> t` given by `(id, c)`, checked.
pub fn round_trip_witness(t: &GluedTriple) -> Result<(TripleMorphism, bool)> {
    let back = split(&glue(t)?);
    let m = TripleMorphism { a: Matrix::identity(t.field(), t.v1.dim()), b: t.c.clone() };
    let ok = back.is_morphism(t, &m) && m.a.is_invertible() && m.b.is_invertible();
    Ok((m, ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FiniteGroup, GroupHom};

    fn c2_free() -> Arc<AmalgamPresentation> {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        Arc::new(AmalgamPresentation::free("C2*C2", c2.clone(), c2))
    }

    #[test]
    fn trivial_glue_acts_trivially() {
        let p = c2_free();
        let q = Field::Rational;
        let t = GluedTriple::new(
            p.clone(),
            Representation::trivial(p.factor(Factor::One).clone(), q, 1),
            Representation::trivial(p.factor(Factor::Two).clone(), q, 1),
            Matrix::identity(q, 1),
        )
        .unwrap();
        let r = glue(&t).unwrap();
        assert!(r.generator_matrices().iter().all(Matrix::is_identity));
        assert_eq!(r.hom_space(&r).unwrap().len(), 1);
        assert!(round_trip_witness(&t).unwrap().1);
    }

    #[test]
    fn non_intertwining_c_rejected() {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let phi = GroupHom::new(c2.clone(), c4.clone(), vec![0, 2]).unwrap();
        let p = Arc::new(AmalgamPresentation::new("C4*C2C4", phi.clone(), phi).unwrap());
        let q = Field::Rational;
        let sign = Representation::from_generators(c4.clone(), q, 1, &[(1, Matrix::from_i64(q, &[&[-1]]))]).unwrap();
        let rot =
            Representation::from_generators(c4.clone(), q, 2, &[(1, Matrix::from_i64(q, &[&[0, -1], &[1, 0]]))])
                .unwrap();
        let triv = Representation::trivial(c4, q, 1);
        // Restrictions of sign and trivial to C2 agree; rotation restricts to -I.
        assert!(GluedTriple::new(p.clone(), sign, triv.clone(), Matrix::identity(q, 1)).is_ok());
        let two_triv = triv.direct_sum(&triv).unwrap();
        assert!(matches!(
            GluedTriple::new(p, rot, two_triv, Matrix::identity(q, 2)),
            Err(Error::NotAnIntertwiner(_))
        ));
    }

    #[test]
    fn singular_c_rejected() {
        let p = c2_free();
        let q = Field::Rational;
        let t = Representation::trivial(p.factor(Factor::One).clone(), q, 1);
        let r = GluedTriple::new(p, t.clone(), t, Matrix::zeros(q, 1, 1));
        assert!(matches!(r, Err(Error::NotInvertible(_))));
    }
}
