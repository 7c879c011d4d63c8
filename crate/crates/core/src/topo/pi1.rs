use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use super::local::LocalSystem;
use super::poset::FinitePoset;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Vector};

/// How the spanning tree of the comparability graph is grown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeChoice {
    Bfs,
    Dfs,
}

/// A generator: the loop `tree(base → x) · (x → y) · tree(y → base)` for a
/// non-tree relation `x < y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeLoop {
    pub edge: (usize, usize),
    pub path: Vec<usize>,
}

/// A letter of a relator: generator index and exponent `±1`.
pub type RelatorLetter = (usize, i8);

/// Edge-path presentation of `π_1` of the order complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Presentation {
    pub base: usize,
    pub tree: TreeChoice,
    pub tree_edges: Vec<(usize, usize)>,
    pub generators: Vec<EdgeLoop>,
    /// One word per chain `x < y < z`: `g_{xy} g_{yz} g_{xz}^{-1}` with tree
    /// edges deleted.
    pub relators: Vec<Vec<RelatorLetter>>,
}

pub fn pi1_presentation(p: &FinitePoset, base: usize) -> Result<Pi1Presentation> {
    pi1_presentation_with(p, base, TreeChoice::Bfs)
}

pub fn pi1_presentation_with(p: &FinitePoset, base: usize, tree: TreeChoice) -> Result<Pi1Presentation> {
    let n = p.len();
    if base >= n {
        return Err(Error::IndexOutOfRange(format!("basepoint {base} of {n} points")));
    }
    if !p.is_connected() {
        return Err(Error::Disconnected("π_1 needs a connected poset".into()));
    }
    // The tree uses covering pairs only, so tree paths carry no monodromy.
    let adjacent = |x: usize| (0..n).filter(move |&y| p.cover_index(x, y).is_some() || p.cover_index(y, x).is_some());
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[base] = true;
    match tree {
        TreeChoice::Bfs => {
            let mut queue = VecDeque::from([base]);
            while let Some(x) = queue.pop_front() {
                for y in adjacent(x) {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some(x);
                        queue.push_back(y);
                    }
                }
            }
        }
        TreeChoice::Dfs => {
            let mut stack = vec![base];
            while let Some(&x) = stack.last() {
                match adjacent(x).find(|&y| !seen[y]) {
                    Some(y) => {
                        seen[y] = true;
                        parent[y] = Some(x);
                        stack.push(y);
                    }
                    None => {
                        stack.pop();
                    }
                }
            }
        }
    }
    let ordered = |a: usize, b: usize| if p.lt(a, b) { (a, b) } else { (b, a) };
    let mut tree_edges: Vec<(usize, usize)> =
        (0..n).filter_map(|y| parent[y].map(|x| ordered(x, y))).collect();
    tree_edges.sort_unstable();
    let path_from_base = |mut v: usize| {
        let mut path = vec![v];
        while let Some(u) = parent[v] {
            path.push(u);
            v = u;
        }
        path.reverse();
        path
    };
    let edges: Vec<(usize, usize)> =
        p.relations().into_iter().filter(|e| tree_edges.binary_search(e).is_err()).collect();
    let generators: Vec<EdgeLoop> = edges
        .iter()
        .map(|&(x, y)| {
            let mut path = path_from_base(x);
            let back = path_from_base(y);
            path.extend(back.into_iter().rev());
            EdgeLoop { edge: (x, y), path }
        })
        .collect();
    let gen_of = |e: (usize, usize)| edges.iter().position(|&f| f == e);
    let relators = p
        .chains3()
        .into_iter()
        .map(|(x, y, z)| {
            [((x, y), 1), ((y, z), 1), ((x, z), -1)]
                .into_iter()
                .filter_map(|(e, s)| gen_of(e).map(|g| (g, s)))
                .collect()
        })
        .collect();
    Ok(Pi1Presentation { base, tree, tree_edges, generators, relators })
}

impl Pi1Presentation {
    /// Rank of the abelianization's free part.
    pub fn abelian_rank(&self) -> usize {
        let g = self.generators.len();
        if self.relators.is_empty() {
            return g;
        }
        let q = Field::Rational;
        let m = Matrix::from_fn(q, self.relators.len(), g, |r, c| {
            let e: i64 = self.relators[r].iter().filter(|l| l.0 == c).map(|l| l.1 as i64).sum();
            crate::exactalg::Scalar::from_i64(q, e)
        });
        g - m.rank()
    }

    /// Deletes empty relators and eliminates generators killed by one-letter
    /// relators; the rank of the free group when nothing else remains.
    pub fn free_rank(&self) -> Option<usize> {
        let mut alive = vec![true; self.generators.len()];
        let mut rels: Vec<Vec<RelatorLetter>> = self.relators.clone();
        loop {
            for r in rels.iter_mut() {
                r.retain(|l| alive[l.0]);
                reduce_word(r);
            }
            rels.retain(|r| !r.is_empty());
            let Some(k) = rels.iter().position(|r| r.len() == 1) else { break };
            alive[rels[k][0].0] = false;
        }
        rels.is_empty().then(|| alive.iter().filter(|&&a| a).count())
    }
}

fn reduce_word(w: &mut Vec<RelatorLetter>) {
    let mut out: Vec<RelatorLetter> = Vec::with_capacity(w.len());
    for &l in w.iter() {
        if out.last().is_some_and(|m| m.0 == l.0 && m.1 == -l.1) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *w = out;
}

/// `stalk(end) → stalk(start)` along a vertex path: the stored direction
/// when stepping up, its inverse when stepping down. Concatenation of paths
/// multiplies these matrices in order.
pub fn path_matrix(l: &LocalSystem, path: &[usize]) -> Result<Matrix> {
    let p = l.poset();
    let mut acc = Matrix::identity(l.field(), l.rank());
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        let step = if p.lt(a, b) {
            l.transport(a, b)?
        } else if p.lt(b, a) {
            l.transport(b, a)?
                .inverse()
                .ok_or_else(|| Error::InvalidLocalSystem("non-invertible transport".into()))?
        } else {
            return Err(Error::InvalidPoset(format!("{} and {} are not comparable", p.name(a), p.name(b))));
        };
        acc = &acc * &step;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monodromy {
    pub presentation: Pi1Presentation,
    pub generators: Vec<Matrix>,
}

pub fn evaluate_relator(gens: &[Matrix], word: &[RelatorLetter]) -> Result<Matrix> {
    let first = gens.first().ok_or_else(|| Error::Shape("no generators".into()))?;
    let mut acc = Matrix::identity(first.field(), first.rows());
    for &(g, s) in word {
        let m = if s > 0 {
            gens[g].clone()
        } else {
            gens[g].inverse().ok_or_else(|| Error::NotInvertible(format!("generator {g}")))?
        };
        acc = &acc * &m;
    }
    Ok(acc)
}

pub fn monodromy(l: &LocalSystem, base: usize) -> Result<Monodromy> {
    monodromy_with(l, pi1_presentation(l.poset(), base)?)
}

/// Loop matrices on the stalk at the basepoint; every relator must evaluate
/// to the identity.
pub fn monodromy_with(l: &LocalSystem, presentation: Pi1Presentation) -> Result<Monodromy> {
    let generators = presentation
        .generators
        .iter()
        .map(|g| path_matrix(l, &g.path))
        .collect::<Result<Vec<_>>>()?;
    for (k, r) in presentation.relators.iter().enumerate() {
        if !r.is_empty() && !evaluate_relator(&generators, r)?.is_identity() {
            return Err(Error::InvalidLocalSystem(format!("relator {k} does not evaluate to I")));
        }
    }
    Ok(Monodromy { presentation, generators })
}

/// The local system with identity matrices on tree edges and the given
/// matrices on the non-tree covering relations; fails unless its monodromy
/// reproduces `gens` (i.e. `gens` satisfy the relators).
pub fn realize(
    poset: Arc<FinitePoset>,
    field: Field,
    rank: usize,
    presentation: &Pi1Presentation,
    gens: &[Matrix],
) -> Result<LocalSystem> {
    if gens.len() != presentation.generators.len() {
        return Err(Error::Shape(format!(
            "{} generator matrices for {} generators",
            gens.len(),
            presentation.generators.len()
        )));
    }
    let maps = poset
        .covers()
        .iter()
        .map(|&e| match presentation.generators.iter().position(|g| g.edge == e) {
            Some(k) => gens[k].clone(),
            None => Matrix::identity(field, rank),
        })
        .collect();
    let l = LocalSystem::new(poset, field, rank, maps)?;
    let m = monodromy_with(&l, presentation.clone())?;
    if m.generators != gens {
        return Err(Error::InvalidLocalSystem("generator matrices violate the relators".into()));
    }
    Ok(l)
}

/// Basis of the unital matrix algebra generated by `gens`.
pub fn generated_algebra(field: Field, rank: usize, gens: &[Matrix]) -> Vec<Vector> {
    let flat = |m: &Matrix| m.entries().to_vec();
    let n2 = rank * rank;
    let mut basis: Vec<Matrix> = vec![Matrix::identity(field, rank)];
    let mut frontier = basis.clone();
    let rank_of = |ms: &[Matrix]| Matrix::from_columns(field, n2, &ms.iter().map(flat).collect::<Vec<_>>()).rank();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let c = a * g;
                let mut trial = basis.clone();
                trial.push(c.clone());
                if rank_of(&trial) > basis.len() {
                    basis.push(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    Matrix::from_columns(field, n2, &basis.iter().map(flat).collect::<Vec<_>>()).transpose().row_space_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> FinitePoset {
        FinitePoset::from_names(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap()
    }

    #[test]
    fn circle_has_one_free_generator() {
        let pres = pi1_presentation(&circle(), 0).unwrap();
        assert_eq!(pres.generators.len(), 1);
        assert!(pres.relators.is_empty());
        assert_eq!(pres.free_rank(), Some(1));
        let g = &pres.generators[0];
        assert_eq!(g.path.first(), Some(&0));
        assert_eq!(g.path.last(), Some(&0));
    }

    #[test]
    fn cone_is_simply_connected() {
        let p = FinitePoset::from_names(&["a", "b", "c", "t"], &[("a", "t"), ("b", "t"), ("c", "t")]).unwrap();
        assert!(pi1_presentation(&p, 0).unwrap().generators.is_empty());
        // A chain: x < z is a non-tree edge, killed by the one 2-simplex.
        let ch = FinitePoset::from_names(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        let pres = pi1_presentation(&ch, 1).unwrap();
        assert_eq!(pres.generators.len(), 1);
        assert_eq!(pres.relators, vec![vec![(0, -1)]]);
        assert_eq!(pres.free_rank(), Some(0));
        assert_eq!(pres.abelian_rank(), 0);
    }

    #[test]
    fn circle_monodromy_is_the_edge_scalar() {
        let q = Field::Rational;
        let p = Arc::new(circle());
        let pres = pi1_presentation(&p, 0).unwrap();
        let lam = Matrix::from_i64(q, &[&[3]]);
        let l = realize(p.clone(), q, 1, &pres, &[lam.clone()]).unwrap();
        assert_eq!(monodromy(&l, 0).unwrap().generators, vec![lam]);
        let triv = LocalSystem::trivial(p, q, 2);
        assert!(monodromy(&triv, 0).unwrap().generators[0].is_identity());
    }

    #[test]
    fn algebra_of_a_swap() {
        let q = Field::Rational;
        let s = Matrix::from_i64(q, &[&[0, 1], &[1, 0]]);
        assert_eq!(generated_algebra(q, 2, &[s]).len(), 2);
        let u = Matrix::from_i64(q, &[&[1, 1], &[0, 1]]);
        let l = Matrix::from_i64(q, &[&[1, 0], &[1, 1]]);
        assert_eq!(generated_algebra(q, 2, &[u, l]).len(), 4);
    }
}
