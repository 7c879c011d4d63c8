use std::collections::VecDeque;
use std::sync::Arc;

use super::poset::FinitePoset;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, MatrixEquations, Term};

/// A local system of rank `r`: one invertible matrix per covering pair
/// `x ⋖ y`, read as the map `stalk(y) → stalk(x)` (from the higher point to
/// the lower one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSystem {
    poset: Arc<FinitePoset>,
    field: Field,
    rank: usize,
    maps: Vec<Matrix>,
}

impl LocalSystem {
    /// Validates invertibility and that composites along any two chains of
    /// covers with equal endpoints agree.
    pub fn new(poset: Arc<FinitePoset>, field: Field, rank: usize, maps: Vec<Matrix>) -> Result<Self> {
        if maps.len() != poset.covers().len() {
            return Err(Error::InvalidLocalSystem(format!(
                "{} matrices for {} covering pairs",
                maps.len(),
                poset.covers().len()
            )));
        }
        for (&(x, y), m) in poset.covers().iter().zip(&maps) {
            if m.field() != field || m.rows() != rank || m.cols() != rank {
                return Err(Error::InvalidLocalSystem(format!(
                    "matrix on {} ⋖ {} is not a {rank}x{rank} matrix over {field}",
                    poset.name(x),
                    poset.name(y)
                )));
            }
            if !m.is_invertible() {
                return Err(Error::InvalidLocalSystem(format!(
                    "matrix on {} ⋖ {} is not invertible",
                    poset.name(x),
                    poset.name(y)
                )));
            }
        }
        let l = LocalSystem { poset, field, rank, maps };
        for x in 0..l.poset.len() {
            l.transports_from(x)?;
        }
        Ok(l)
    }

    pub fn trivial(poset: Arc<FinitePoset>, field: Field, rank: usize) -> Self {
        let maps = vec![Matrix::identity(field, rank); poset.covers().len()];
        LocalSystem { poset, field, rank, maps }
    }

    pub fn poset(&self) -> &Arc<FinitePoset> {
        &self.poset
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn cover_map(&self, x: usize, y: usize) -> Option<&Matrix> {
        self.poset.cover_index(x, y).map(|k| &self.maps[k])
    }

    /// `M_x(z): stalk(z) → stalk(x)` for every `z >= x`, checking that all
    /// chains of covers agree.
    fn transports_from(&self, x: usize) -> Result<Vec<Option<Matrix>>> {
        let n = self.poset.len();
        let mut m: Vec<Option<Matrix>> = vec![None; n];
        m[x] = Some(Matrix::identity(self.field, self.rank));
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for (k, &(a, z)) in self.poset.covers().iter().enumerate() {
                if a != y {
                    continue;
                }
                let cand = m[y].as_ref().expect("visited") * &self.maps[k];
                match &m[z] {
                    Some(existing) if *existing != cand => {
                        return Err(Error::InvalidLocalSystem(format!(
                            "two chains from {} to {} give different maps",
                            self.poset.name(x),
                            self.poset.name(z)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        m[z] = Some(cand);
                        queue.push_back(z);
                    }
                }
            }
        }
        Ok(m)
    }

    /// `stalk(y) → stalk(x)` for `x <= y`.
    pub fn transport(&self, x: usize, y: usize) -> Result<Matrix> {
        if !self.poset.le(x, y) {
            return Err(Error::InvalidPoset(format!("{} is not below {}", self.poset.name(x), self.poset.name(y))));
        }
        Ok(self.transports_from(x)?.swap_remove(y).expect("y above x"))
    }

    /// `L|_U` for a nonempty up-set `U`, on the induced subposet.
    pub fn restrict(&self, set: &[usize]) -> Result<LocalSystem> {
        if set.is_empty() || !self.poset.is_open(set) {
            return Err(Error::NotOpen(format!("{set:?} is not a nonempty up-set")));
        }
        let (sub, map) = self.poset.induced(set)?;
        // Covers inside an up-set are covers of the whole poset.
        let maps = sub
            .covers()
            .iter()
            .map(|&(i, j)| self.cover_map(map[i], map[j]).expect("cover of the ambient poset").clone())
            .collect();
        Ok(LocalSystem { poset: Arc::new(sub), field: self.field, rank: self.rank, maps })
    }

    /// The isomorphic system `A'_{xy} = g_x A_{xy} g_y^{-1}`.
    pub fn gauge(&self, g: &[Matrix]) -> Result<LocalSystem> {
        if g.len() != self.poset.len() {
            return Err(Error::Shape("one gauge matrix per point".into()));
        }
        let maps = self
            .poset
            .covers()
            .iter()
            .zip(&self.maps)
            .map(|(&(x, y), a)| {
                let inv = g[y].inverse().ok_or_else(|| Error::NotInvertible(format!("gauge at {}", self.poset.name(y))))?;
                Ok(&(&g[x] * a) * &inv)
            })
            .collect::<Result<Vec<_>>>()?;
        LocalSystem::new(self.poset.clone(), self.field, self.rank, maps)
    }

    fn same_base(&self, o: &LocalSystem) -> Result<()> {
        if self.poset != o.poset {
            return Err(Error::Shape("local systems on different posets".into()));
        }
        if self.field != o.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, o.field)));
        }
        Ok(())
    }

    /// Basis of `Hom(self, o)`: families `f_x: stalk(x) → stalk'(x)` with
    /// `f_x A_{xy} = A'_{xy} f_y` on every cover.
    pub fn hom_space(&self, o: &LocalSystem) -> Result<Vec<Vec<Matrix>>> {
        self.same_base(o)?;
        let n = self.poset.len();
        let mut eq = MatrixEquations::new(self.field, &vec![(o.rank, self.rank); n]);
        let id_s = Matrix::identity(self.field, self.rank);
        let id_o = Matrix::identity(self.field, o.rank);
        for (k, &(x, y)) in self.poset.covers().iter().enumerate() {
            eq.add(&[
                Term { unknown: x, left: &id_o, right: &self.maps[k], negate: false },
                Term { unknown: y, left: &o.maps[k], right: &id_s, negate: true },
            ])?;
        }
        Ok(eq.solve())
    }

    pub fn is_morphism(&self, o: &LocalSystem, f: &[Matrix]) -> bool {
        self.same_base(o).is_ok()
            && f.len() == self.poset.len()
            && self
                .poset
                .covers()
                .iter()
                .enumerate()
                .all(|(k, &(x, y))| f[x].try_mul(&self.maps[k]).ok() == o.maps[k].try_mul(&f[y]).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee() -> Arc<FinitePoset> {
        // x < y < z and x < w < z: one diamond.
        Arc::new(FinitePoset::from_names(&["x", "y", "w", "z"], &[("x", "y"), ("y", "z"), ("x", "w"), ("w", "z")]).unwrap())
    }

    #[test]
    fn diamond_must_commute() {
        let q = Field::Rational;
        let p = vee();
        let two = Matrix::from_i64(q, &[&[2]]);
        let one = Matrix::identity(q, 1);
        // covers sorted: (x,y), (x,w), (y,z), (w,z) by index order.
        let mut maps = vec![one.clone(); p.covers().len()];
        maps[0] = two.clone();
        assert!(matches!(LocalSystem::new(p.clone(), q, 1, maps.clone()), Err(Error::InvalidLocalSystem(_))));
        let k = p.cover_index(2, 3).unwrap();
        maps[k] = two;
        let l = LocalSystem::new(p, q, 1, maps).unwrap();
        assert_eq!(l.transport(0, 3).unwrap(), Matrix::from_i64(q, &[&[2]]));
    }

    #[test]
    fn restriction_and_hom() {
        let q = Field::Rational;
        let l = LocalSystem::trivial(vee(), q, 2);
        assert_eq!(l.restrict(&[0, 1, 2, 3]).unwrap(), l);
        assert!(matches!(l.restrict(&[0]), Err(Error::NotOpen(_))));
        assert_eq!(l.hom_space(&l).unwrap().len(), 4);
        let z = LocalSystem::trivial(vee(), q, 0);
        assert_eq!(z.restrict(&[3]).unwrap().rank(), 0);
    }
}
