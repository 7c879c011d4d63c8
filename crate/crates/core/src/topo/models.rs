use std::sync::Arc;

use serde::Serialize;

use super::local::LocalSystem;
use super::pi1::{monodromy, pi1_presentation, realize};
use super::poset::FinitePoset;
use super::svk::Cover;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, MatrixEquations};
use crate::rep::invertible_in_span;

/// Minimal points `a, b`, maximal points `c, d`, each minimal below each
/// maximal: a finite model of the circle.
pub fn pseudo_circle4() -> FinitePoset {
    FinitePoset::from_names(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
        .expect("valid poset")
}

/// A hexagon: minimal `a, b, c`, maximal `d, e, f`, alternating.
pub fn pseudo_circle6() -> FinitePoset {
    FinitePoset::from_names(
        &["a", "b", "c", "d", "e", "f"],
        &[("a", "d"), ("b", "d"), ("b", "e"), ("c", "e"), ("c", "f"), ("a", "f")],
    )
    .expect("valid poset")
}

/// Two 4-point circles `{a, b < c, d}` and `{b, e < f, g}` sharing `b`.
pub fn wedge7() -> FinitePoset {
    FinitePoset::from_names(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("b", "f"), ("b", "g"), ("e", "f"), ("e", "g")],
    )
    .expect("valid poset")
}

/// `U1 = ↑a ∪ ↑b`, `U2 = ↑b ∪ ↑e`, meeting in the contractible `↑b`.
pub fn wedge_cover() -> Cover {
    let p = Arc::new(wedge7());
    let u1 = p.up_closure(&[0, 1]);
    let u2 = p.up_closure(&[1, 4]);
    Cover::new(p, &u1, &u2).expect("standard cover")
}

/// `k` minimal points below one apex; contractible.
pub fn cone(k: usize) -> FinitePoset {
    let mut names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    names.push("top".into());
    let rel: Vec<(usize, usize)> = (0..k).map(|i| (i, k)).collect();
    FinitePoset::new(names, &rel).expect("valid poset")
}

/// Looks up a built-in model by name.
pub fn builtin_poset(name: &str) -> Result<FinitePoset> {
    match name {
        "circle4" => Ok(pseudo_circle4()),
        "circle6" => Ok(pseudo_circle6()),
        "wedge7" => Ok(wedge7()),
        _ => match name.strip_prefix("cone") {
            Some(k) => k.parse().map(cone).map_err(|_| Error::Parse(format!("bad cone size in `{name}`"))),
            None => Err(Error::Parse(format!("unknown poset `{name}`"))),
        },
    }
}

/// `dim {X : X a_i = b_i X for all i}`.
pub fn intertwiner_dim(field: Field, a: &[Matrix], b: &[Matrix]) -> Result<usize> {
    let (r, c) = (b.first().map_or(0, Matrix::rows), a.first().map_or(0, Matrix::rows));
    let mut eq = MatrixEquations::new(field, &[(r, c)]);
    for (x, y) in a.iter().zip(b) {
        eq.add_intertwining(0, x, y)?;
    }
    Ok(eq.solve().len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub free_ranks: [usize; 2],
    pub samples: usize,
    /// `End` dimension of each sample on both models.
    pub end_dims: Vec<[usize; 2]>,
    /// Each sample's monodromy on each model is conjugate to the input.
    pub classified: usize,
    pub hom_pairs: usize,
    pub hom_pairs_equal: usize,
    /// Pairs whose monodromies are conjugate, per model.
    pub isomorphic_pairs: [usize; 2],
    /// Pairs classified the same way (isomorphic or not) on both models.
    pub classification_agrees: usize,
    pub witness: Option<String>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.classified == self.samples
            && self.end_dims.iter().all(|d| d[0] == d[1])
            && self.hom_pairs_equal == self.hom_pairs
            && self.classification_agrees == self.hom_pairs
    }
}

/// Realizes every sampled tuple of loop matrices on both models (with a
/// random gauge), recovers the monodromy up to conjugation, and compares
/// Hom dimensions and isomorphism between all pairs of equal rank.
pub fn model_equivalence_check(
    p1: &Arc<FinitePoset>,
    p2: &Arc<FinitePoset>,
    field: Field,
    samples: &[Vec<Matrix>],
    gauges: &mut dyn FnMut(usize, usize) -> Matrix,
) -> Result<ModelReport> {
    let pres = [pi1_presentation(p1, 0)?, pi1_presentation(p2, 0)?];
    let ranks = [pres[0].free_rank(), pres[1].free_rank()];
    let (Some(r1), Some(r2)) = (ranks[0], ranks[1]) else {
        return Err(Error::RankMismatch("a model has non-free π_1".into()));
    };
    if r1 != r2 {
        return Err(Error::RankMismatch(format!("free ranks {r1} and {r2}")));
    }
    if pres[0].generators.len() != r1 || pres[1].generators.len() != r2 {
        return Err(Error::RankMismatch("models need presentations without relators".into()));
    }
    let mut report = ModelReport {
        free_ranks: [r1, r2],
        samples: samples.len(),
        end_dims: Vec::new(),
        classified: 0,
        hom_pairs: 0,
        hom_pairs_equal: 0,
        isomorphic_pairs: [0, 0],
        classification_agrees: 0,
        witness: None,
    };
    let mut systems: [Vec<LocalSystem>; 2] = [Vec::new(), Vec::new()];
    let mut monos: [Vec<Vec<Matrix>>; 2] = [Vec::new(), Vec::new()];
    for (k, gens) in samples.iter().enumerate() {
        if gens.len() != r1 {
            return Err(Error::RankMismatch(format!("sample {k} has {} loop matrices", gens.len())));
        }
        let rank = gens.first().map_or(0, Matrix::rows);
        let mut ok = true;
        for (m, p) in [p1, p2].into_iter().enumerate() {
            let g: Vec<Matrix> = (0..p.len()).map(|_| gauges(rank, m)).collect();
            let l = realize(p.clone(), field, rank, &pres[m], gens)?.gauge(&g)?;
            let mono = monodromy(&l, 0)?.generators;
            let conj = conjugator(field, gens, &mono)?;
            if conj.is_none() {
                ok = false;
                report.witness.get_or_insert(format!("sample {k}: monodromy on model {} is not conjugate", m + 1));
            }
            systems[m].push(l);
            monos[m].push(mono);
        }
        if ok {
            report.classified += 1;
        }
        let e = [systems[0][k].hom_space(&systems[0][k])?.len(), systems[1][k].hom_space(&systems[1][k])?.len()];
        if e[0] != e[1] {
            report.witness.get_or_insert(format!("sample {k}: End dimensions {} and {}", e[0], e[1]));
        }
        report.end_dims.push(e);
    }
    for i in 0..samples.len() {
        for j in 0..samples.len() {
            if systems[0][i].rank() != systems[0][j].rank() {
                continue;
            }
            report.hom_pairs += 1;
            let a = systems[0][i].hom_space(&systems[0][j])?.len();
            let b = systems[1][i].hom_space(&systems[1][j])?.len();
            if a == b {
                report.hom_pairs_equal += 1;
            } else {
                report.witness.get_or_insert(format!("pair ({i}, {j}): Hom dimensions {a} and {b}"));
            }
            let iso = [
                conjugator(field, &monos[0][i], &monos[0][j])?.is_some(),
                conjugator(field, &monos[1][i], &monos[1][j])?.is_some(),
            ];
            for m in 0..2 {
                report.isomorphic_pairs[m] += usize::from(iso[m]);
            }
            if iso[0] == iso[1] {
                report.classification_agrees += 1;
            } else {
                report.witness.get_or_insert(format!("pair ({i}, {j}): isomorphic on one model only"));
            }
        }
    }
    Ok(report)
}

/// An invertible `X` with `X a_i = b_i X`, if the intertwiners contain one.
pub fn conjugator(field: Field, a: &[Matrix], b: &[Matrix]) -> Result<Option<Matrix>> {
    let r = a.first().map_or(0, Matrix::rows);
    let mut eq = MatrixEquations::new(field, &[(r, r)]);
    for (x, y) in a.iter().zip(b) {
        eq.add_intertwining(0, x, y)?;
    }
    let basis: Vec<Matrix> = eq.solve().into_iter().map(|mut v| v.remove(0)).collect();
    Ok(invertible_in_span(field, &basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::pi1::pi1_presentation;

    #[test]
    fn model_ranks() {
        assert_eq!(pi1_presentation(&pseudo_circle4(), 0).unwrap().free_rank(), Some(1));
        assert_eq!(pi1_presentation(&pseudo_circle6(), 0).unwrap().free_rank(), Some(1));
        assert_eq!(pi1_presentation(&wedge7(), 1).unwrap().free_rank(), Some(2));
        assert_eq!(pi1_presentation(&cone(3), 0).unwrap().free_rank(), Some(0));
        let c = wedge_cover();
        assert!(c.check_hypotheses().is_ok());
        let names: Vec<&str> = c.intersection().iter().map(|&x| c.poset().name(x)).collect();
        assert_eq!(names, ["b", "c", "d", "f", "g"]);
    }

    #[test]
    fn swap_monodromy_has_two_dimensional_end() {
        let q = Field::Rational;
        let s = Matrix::from_i64(q, &[&[0, 1], &[1, 0]]);
        let mut id = |r: usize, _m: usize| Matrix::identity(q, r);
        let r = model_equivalence_check(
            &Arc::new(pseudo_circle4()),
            &Arc::new(pseudo_circle6()),
            q,
            &[vec![s]],
            &mut id,
        )
        .unwrap();
        assert_eq!(r.end_dims, vec![[2, 2]]);
        assert!(r.passed());
    }

    #[test]
    fn rank_mismatch() {
        let q = Field::Rational;
        let mut id = |r: usize, _m: usize| Matrix::identity(q, r);
        assert!(matches!(
            model_equivalence_check(&Arc::new(pseudo_circle4()), &Arc::new(wedge7()), q, &[], &mut id),
            Err(Error::RankMismatch(_))
        ));
    }
}
