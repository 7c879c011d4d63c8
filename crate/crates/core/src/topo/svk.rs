use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use super::local::LocalSystem;
use super::pi1::{generated_algebra, monodromy, pi1_presentation, realize};
use super::poset::FinitePoset;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, MatrixEquations, Term};
use crate::rep::invertible_in_span;

/// Two up-sets with `U1 ∪ U2 = X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    poset: Arc<FinitePoset>,
    u1: Vec<usize>,
    u2: Vec<usize>,
    inter: Vec<usize>,
    sub1: Arc<FinitePoset>,
    sub2: Arc<FinitePoset>,
    /// Connectedness of `U1`, `U2`, `U1 ∩ U2`.
    pub connected: [bool; 3],
}

impl Cover {
    pub fn new(poset: Arc<FinitePoset>, u1: &[usize], u2: &[usize]) -> Result<Self> {
        for u in [u1, u2] {
            if u.is_empty() || !poset.is_open(u) {
                return Err(Error::NotOpen(format!("{u:?} is not a nonempty up-set")));
            }
        }
        if (0..poset.len()).any(|x| !u1.contains(&x) && !u2.contains(&x)) {
            return Err(Error::InvalidPoset("cover pieces do not exhaust the poset".into()));
        }
        let (sub1, u1) = poset.induced(u1)?;
        let (sub2, u2) = poset.induced(u2)?;
        let inter: Vec<usize> = u1.iter().copied().filter(|x| u2.contains(x)).collect();
        let connected = [
            poset.is_connected_subset(&u1),
            poset.is_connected_subset(&u2),
            poset.is_connected_subset(&inter),
        ];
        Ok(Cover { poset, u1, u2, inter, sub1: Arc::new(sub1), sub2: Arc::new(sub2), connected })
    }

    pub fn poset(&self) -> &Arc<FinitePoset> {
        &self.poset
    }

    pub fn u1(&self) -> &[usize] {
        &self.u1
    }

    pub fn u2(&self) -> &[usize] {
        &self.u2
    }

    pub fn intersection(&self) -> &[usize] {
        &self.inter
    }

    pub fn piece(&self, i: usize) -> &Arc<FinitePoset> {
        if i == 1 {
            &self.sub1
        } else {
            &self.sub2
        }
    }

    /// `X`, `U1`, `U2` and a nonempty `U1 ∩ U2` all connected.
    pub fn check_hypotheses(&self) -> Result<()> {
        let labels = ["U1", "U2", "U1 ∩ U2"];
        if self.inter.is_empty() {
            return Err(Error::Disconnected("U1 ∩ U2 is empty".into()));
        }
        if !self.poset.is_connected() {
            return Err(Error::Disconnected("X".into()));
        }
        match self.connected.iter().position(|c| !c) {
            Some(k) => Err(Error::Disconnected(labels[k].into())),
            None => Ok(()),
        }
    }

    fn local(&self, piece: &[usize], x: usize) -> usize {
        piece.binary_search(&x).expect("point of the piece")
    }
}

/// `(L1 on U1, L2 on U2, c: L1|∩ ≅ L2|∩)`, with one matrix of `c` per point
/// of the intersection (in increasing order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingData {
    pub cover: Cover,
    pub l1: LocalSystem,
    pub l2: LocalSystem,
    pub c: Vec<Matrix>,
}

impl GluingData {
    pub fn new(cover: Cover, l1: LocalSystem, l2: LocalSystem, c: Vec<Matrix>) -> Result<Self> {
        if l1.poset() != cover.piece(1) || l2.poset() != cover.piece(2) {
            return Err(Error::Shape("local systems do not live on the cover pieces".into()));
        }
        if l1.rank() != l2.rank() || l1.field() != l2.field() {
            return Err(Error::InvalidLocalSystem("pieces of different rank or field".into()));
        }
        if c.len() != cover.inter.len() || c.iter().any(|m| !m.is_invertible() || m.rows() != l1.rank()) {
            return Err(Error::NotInvertible("gluing needs one invertible matrix per intersection point".into()));
        }
        let d = GluingData { cover, l1, l2, c };
        for &(x, y) in d.cover.poset.covers() {
            if let (Ok(i), Ok(j)) = (d.cover.inter.binary_search(&x), d.cover.inter.binary_search(&y)) {
                let a1 = d.l1.cover_map(d.cover.local(&d.cover.u1, x), d.cover.local(&d.cover.u1, y)).expect("cover");
                let a2 = d.l2.cover_map(d.cover.local(&d.cover.u2, x), d.cover.local(&d.cover.u2, y)).expect("cover");
                if &d.c[i] * a1 != a2 * &d.c[j] {
                    return Err(Error::NotAnIntertwiner(format!(
                        "c does not commute with restriction on {} ⋖ {}",
                        d.cover.poset.name(x),
                        d.cover.poset.name(y)
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.l1.rank()
    }

    pub fn field(&self) -> Field {
        self.l1.field()
    }
}

/// Keeps the coordinates of `L1` on `U1` and those of `L2` on `U2 \ U1`;
/// a cover `x ⋖ y` with `x ∉ U1`, `y ∈ U1` gets `A2_{xy} c_y`.
pub fn glue(d: &GluingData) -> Result<LocalSystem> {
    let cv = &d.cover;
    let maps = cv
        .poset
        .covers()
        .iter()
        .map(|&(x, y)| {
            let in1 = |z: usize| cv.u1.binary_search(&z).is_ok();
            if in1(x) {
                Ok(d.l1.cover_map(cv.local(&cv.u1, x), cv.local(&cv.u1, y)).expect("cover").clone())
            } else {
                let a2 = d.l2.cover_map(cv.local(&cv.u2, x), cv.local(&cv.u2, y)).expect("cover");
                if in1(y) {
                    let j = cv.inter.binary_search(&y).expect("y lies in both pieces");
                    Ok(a2 * &d.c[j])
                } else {
                    Ok(a2.clone())
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    LocalSystem::new(cv.poset.clone(), d.field(), d.rank(), maps)
}

/// `(L|U1, L|U2, id)`.
pub fn split(l: &LocalSystem, cover: &Cover) -> Result<GluingData> {
    let l1 = l.restrict(&cover.u1)?;
    let l2 = l.restrict(&cover.u2)?;
    let c = vec![Matrix::identity(l.field(), l.rank()); cover.inter.len()];
    GluingData::new(cover.clone(), l1, l2, c)
}

/// A morphism of gluing data: `f1: L1 → L1'`, `f2: L2 → L2'` with
/// `c'_x f1_x = f2_x c_x` on the intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingMorphism {
    pub f1: Vec<Matrix>,
    pub f2: Vec<Matrix>,
}

pub fn is_gluing_morphism(a: &GluingData, b: &GluingData, f: &GluingMorphism) -> bool {
    let cv = &a.cover;
    a.l1.is_morphism(&b.l1, &f.f1)
        && a.l2.is_morphism(&b.l2, &f.f2)
        && cv.inter.iter().enumerate().all(|(k, &x)| {
            &b.c[k] * &f.f1[cv.local(&cv.u1, x)] == &f.f2[cv.local(&cv.u2, x)] * &a.c[k]
        })
}

/// `split(glue(d))` is isomorphic to `d` via `f1 = id`, `f2 = c` on the
/// intersection and `id` on `U2 \ U1`.
pub fn round_trip_witness(d: &GluingData) -> Result<GluingMorphism> {
    let back = split(&glue(d)?, &d.cover)?;
    let cv = &d.cover;
    let id = Matrix::identity(d.field(), d.rank());
    let f1 = vec![id.clone(); cv.u1.len()];
    let f2 = cv
        .u2
        .iter()
        .map(|x| match cv.inter.binary_search(x) {
            Ok(k) => d.c[k].clone(),
            Err(_) => id.clone(),
        })
        .collect();
    let f = GluingMorphism { f1, f2 };
    if !is_gluing_morphism(&back, d, &f) {
        return Err(Error::NotAnIntertwiner("round trip witness is not a morphism of gluing data".into()));
    }
    Ok(f)
}

/// Basis of the fibre-product Hom between two gluing data.
pub fn gluing_hom_space(a: &GluingData, b: &GluingData) -> Result<Vec<GluingMorphism>> {
    if a.cover != b.cover || a.field() != b.field() {
        return Err(Error::Shape("gluing data over different covers".into()));
    }
    let cv = &a.cover;
    let (n1, n2) = (cv.u1.len(), cv.u2.len());
    let shape = (b.rank(), a.rank());
    let mut eq = MatrixEquations::new(a.field(), &vec![shape; n1 + n2]);
    let id_a = Matrix::identity(a.field(), a.rank());
    let id_b = Matrix::identity(a.field(), b.rank());
    for (src, dst, off) in [(&a.l1, &b.l1, 0), (&a.l2, &b.l2, n1)] {
        for (k, &(x, y)) in src.poset().covers().iter().enumerate() {
            eq.add(&[
                Term { unknown: off + x, left: &id_b, right: &src.maps()[k], negate: false },
                Term { unknown: off + y, left: &dst.maps()[k], right: &id_a, negate: true },
            ])?;
        }
    }
    for (k, &x) in cv.inter.iter().enumerate() {
        eq.add(&[
            Term { unknown: cv.local(&cv.u1, x), left: &b.c[k], right: &id_a, negate: false },
            Term { unknown: n1 + cv.local(&cv.u2, x), left: &id_b, right: &a.c[k], negate: true },
        ])?;
    }
    Ok(eq
        .solve()
        .into_iter()
        .map(|mut v| {
            let f2 = v.split_off(n1);
            GluingMorphism { f1: v, f2 }
        })
        .collect())
}

/// Random gluing data of the given rank: random monodromy on each piece,
/// random gauge, and a random isomorphism on the intersection.
pub fn random_gluing<R: Rng + ?Sized>(cover: &Cover, field: Field, rank: usize, rng: &mut R) -> Result<GluingData> {
    let piece_system = |i: usize, rng: &mut R| -> Result<LocalSystem> {
        let p = cover.piece(i).clone();
        let pres = pi1_presentation(&p, 0)?;
        let gens: Vec<Matrix> =
            (0..pres.generators.len()).map(|_| Matrix::random_invertible(field, rank, rng)).collect();
        let l = realize(p.clone(), field, rank, &pres, &gens)?;
        let g: Vec<Matrix> = (0..p.len()).map(|_| Matrix::random_invertible(field, rank, rng)).collect();
        l.gauge(&g)
    };
    let l1 = piece_system(1, rng)?;
    let l2 = piece_system(2, rng)?;
    let loc1: Vec<usize> = cover.inter.iter().map(|&x| cover.local(&cover.u1, x)).collect();
    let loc2: Vec<usize> = cover.inter.iter().map(|&x| cover.local(&cover.u2, x)).collect();
    let r1 = l1.restrict(&loc1)?;
    let r2 = l2.restrict(&loc2)?;
    let hom = r1.hom_space(&r2)?;
    // Flatten each family into one block-diagonal matrix, find an invertible
    // combination, and read the blocks back.
    let blocks: Vec<Matrix> = hom
        .iter()
        .map(|fam| fam.iter().skip(1).fold(fam[0].clone(), |acc, m| acc.direct_sum(m).expect("same field")))
        .collect();
    let big = invertible_in_span(field, &blocks)
        .ok_or_else(|| Error::NotInvertible("pieces are not isomorphic on the intersection".into()))?;
    let c = (0..cover.inter.len())
        .map(|k| {
            let idx: Vec<usize> = (k * rank..(k + 1) * rank).collect();
            big.submatrix(&idx, &idx)
        })
        .collect();
    GluingData::new(cover.clone(), l1, l2, c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SvkReport {
    pub samples: usize,
    pub pairs: usize,
    pub glued: usize,
    pub round_trips: usize,
    pub hom_equalities: usize,
    pub generated: usize,
    /// `[i, j, dim Hom on X, dim Hom in the fibre product]` per sample pair.
    pub hom_dims: Vec<[usize; 4]>,
    pub witness: Option<String>,
}

impl SvkReport {
    pub fn passed(&self) -> bool {
        self.glued == self.samples
            && self.round_trips == self.samples
            && self.generated == self.samples
            && self.hom_equalities == self.pairs
    }
}

/// (a) each sample glues and round-trips; (b) global Hom dimension equals
/// fibre-product Hom dimension for every ordered pair; (c) the monodromy
/// algebra of the glued system is generated by loops in `U1` and `U2`.
pub fn svk_check(cover: &Cover, samples: &[GluingData], base: usize) -> Result<SvkReport> {
    cover.check_hypotheses()?;
    if cover.inter.binary_search(&base).is_err() {
        return Err(Error::InvalidPoset(format!("basepoint {} is not in U1 ∩ U2", cover.poset.name(base))));
    }
    let mut report = SvkReport {
        samples: samples.len(),
        pairs: samples.len() * samples.len(),
        glued: 0,
        round_trips: 0,
        hom_equalities: 0,
        generated: 0,
        hom_dims: Vec::new(),
        witness: None,
    };
    let mut glued = Vec::with_capacity(samples.len());
    for (k, d) in samples.iter().enumerate() {
        let l = match glue(d) {
            Ok(l) => l,
            Err(e) => {
                report.witness.get_or_insert(format!("sample {k}: {e}"));
                glued.push(None);
                continue;
            }
        };
        report.glued += 1;
        match round_trip_witness(d) {
            Ok(_) => report.round_trips += 1,
            Err(e) => {
                report.witness.get_or_insert(format!("sample {k}: {e}"));
            }
        }
        if loops_generate(&l, cover, base)? {
            report.generated += 1;
        } else {
            report.witness.get_or_insert(format!("sample {k}: monodromy not generated by the pieces"));
        }
        glued.push(Some(l));
    }
    for (i, a) in samples.iter().enumerate() {
        for (j, b) in samples.iter().enumerate() {
            let (Some(la), Some(lb)) = (&glued[i], &glued[j]) else { continue };
            let global = la.hom_space(lb)?.len();
            let fibre = gluing_hom_space(a, b)?.len();
            report.hom_dims.push([i, j, global, fibre]);
            if global == fibre {
                report.hom_equalities += 1;
            } else {
                report.witness.get_or_insert(format!("pair ({i}, {j}): Hom_X {global} vs fibre product {fibre}"));
            }
        }
    }
    Ok(report)
}

/// Whether the loops of `U1` and `U2` at `base` generate the same matrix
/// algebra as the loops of `X`.
pub fn loops_generate(l: &LocalSystem, cover: &Cover, base: usize) -> Result<bool> {
    let whole = monodromy(l, base)?.generators;
    let mut pieces = Vec::new();
    for (i, u) in [(1, &cover.u1), (2, &cover.u2)] {
        let sub = l.restrict(u)?;
        let local_base = cover.local(u, base);
        let m = monodromy(&sub, local_base)?;
        debug_assert_eq!(sub.poset(), cover.piece(i));
        pieces.extend(m.generators);
    }
    let a = generated_algebra(l.field(), l.rank(), &whole);
    let b = generated_algebra(l.field(), l.rank(), &pieces);
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::topo::models::{wedge7, wedge_cover};

    #[test]
    fn trivial_gluing() {
        let q = Field::Rational;
        let cover = wedge_cover();
        let l = LocalSystem::trivial(Arc::new(wedge7()), q, 1);
        let d = split(&l, &cover).unwrap();
        assert_eq!(glue(&d).unwrap(), l);
        assert_eq!(gluing_hom_space(&d, &d).unwrap().len(), 1);
        assert_eq!(l.hom_space(&l).unwrap().len(), 1);
    }

    #[test]
    fn random_samples_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cover = wedge_cover();
        let f7 = Field::finite(7, 1).unwrap();
        let samples: Vec<GluingData> = (0..4).map(|k| random_gluing(&cover, f7, 1 + k % 2, &mut rng).unwrap()).collect();
        let b = cover.poset().index_of("b").unwrap();
        let r = svk_check(&cover, &samples, b).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn disconnected_intersection_rejected() {
        // Circle covered by two arcs meeting in two points.
        let p = Arc::new(
            FinitePoset::from_names(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap(),
        );
        let cover = Cover::new(p, &[0, 2, 3], &[1, 2, 3]).unwrap();
        assert!(matches!(cover.check_hypotheses(), Err(Error::Disconnected(_))));
        assert!(matches!(svk_check(&cover, &[], 2), Err(Error::Disconnected(_))));
    }
}
