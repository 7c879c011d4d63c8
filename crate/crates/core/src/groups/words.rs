use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::group::FiniteGroup;
use super::hom::GroupHom;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// One of the two free factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Factor {
    One,
    Two,
}

impl Factor {
    pub const BOTH: [Factor; 2] = [Factor::One, Factor::Two];

    /// 1 or 2.
    pub fn number(self) -> u8 {
        match self {
            Factor::One => 1,
            Factor::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Factor::One),
            2 => Ok(Factor::Two),
            _ => Err(Error::InvalidLetter(format!("factor index {n} not in {{1, 2}}"))),
        }
    }

    pub fn other(self) -> Factor {
        match self {
            Factor::One => Factor::Two,
            Factor::Two => Factor::One,
        }
    }
}

/// A group element tagged with the factor it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub factor: Factor,
    pub element: usize,
}

impl Letter {
    pub fn new(factor: Factor, element: usize) -> Self {
        Letter { factor, element }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.factor.number(), self.element)
    }
}

/// Pushout data `G1 <- H -> G2` together with right-coset representatives
/// of `φi(H)` in `Gi`.
///
/// The representative of the trivial coset is the identity; every other
/// coset is represented by its smallest element index.
#[derive(Clone, Debug)]
pub struct AmalgamPresentation {
    name: String,
    g1: Arc<FiniteGroup>,
    g2: Arc<FiniteGroup>,
    h: Arc<FiniteGroup>,
    phi1: GroupHom,
    phi2: GroupHom,
    // coset_rep[i][g] = representative of φi(H)·g.
    coset_rep: [Vec<usize>; 2],
    injective: bool,
}

impl AmalgamPresentation {
    pub fn new(name: impl Into<String>, phi1: GroupHom, phi2: GroupHom) -> Result<Self> {
        if phi1.source().as_ref() != phi2.source().as_ref() {
            return Err(Error::NotAHomomorphism("structure maps have different sources".into()));
        }
        for phi in [&phi1, &phi2] {
            let report = super::hom::check_hom(phi);
            if !report.passed {
                return Err(Error::NotAHomomorphism(format!(
                    "structure map fails at {:?}",
                    report.witness
                )));
            }
        }
        let coset_rep = [coset_reps(&phi1), coset_reps(&phi2)];
        let injective = phi1.is_injective() && phi2.is_injective();
        Ok(AmalgamPresentation {
            name: name.into(),
            g1: phi1.target().clone(),
            g2: phi2.target().clone(),
            h: phi1.source().clone(),
            phi1,
            phi2,
            coset_rep,
            injective,
        })
    }

    /// Free product `G1 * G2` (amalgamation over the trivial group).
    pub fn free(name: impl Into<String>, g1: Arc<FiniteGroup>, g2: Arc<FiniteGroup>) -> Self {
        let h = Arc::new(FiniteGroup::trivial());
        let phi1 = GroupHom::trivial(h.clone(), g1);
        let phi2 = GroupHom::trivial(h, g2);
        Self::new(name, phi1, phi2).expect("trivial maps are homomorphisms")
    }

    /// The same factors with the amalgamation forgotten.
    pub fn free_version(&self) -> Self {
        Self::free(format!("{} (free)", self.name), self.g1.clone(), self.g2.clone())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn factor(&self, i: Factor) -> &Arc<FiniteGroup> {
        match i {
            Factor::One => &self.g1,
            Factor::Two => &self.g2,
        }
    }

    pub fn amalgamated(&self) -> &Arc<FiniteGroup> {
        &self.h
    }

    pub fn structure_map(&self, i: Factor) -> &GroupHom {
        match i {
            Factor::One => &self.phi1,
            Factor::Two => &self.phi2,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn coset_rep(&self, i: Factor, g: usize) -> usize {
        self.coset_rep[i as usize][g]
    }

    /// Sorted list of the representatives of non-trivial right cosets.
    pub fn nontrivial_reps(&self, i: Factor) -> Vec<usize> {
        let g = self.factor(i);
        let mut reps: Vec<usize> = self.coset_rep[i as usize]
            .iter()
            .copied()
            .filter(|&r| r != g.identity())
            .collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    /// Writes `g = φi(h) · r` with `r` the coset representative. Needs `φi`
    /// injective for `h` to be unique.
    fn decompose(&self, i: Factor, g: usize) -> (usize, usize) {
        let grp = self.factor(i);
        let r = self.coset_rep(i, g);
        let x = grp.mul(g, grp.inv(r));
        let phi = self.structure_map(i);
        let h = self
            .h
            .elements()
            .find(|&h| phi.apply(h) == x)
            .expect("g·r^{-1} lies in the image of H");
        (h, r)
    }

    pub fn check_letter(&self, l: &Letter) -> Result<()> {
        let order = self.factor(l.factor).order();
        if l.element >= order {
            return Err(Error::InvalidLetter(format!(
                "element {} outside factor {} of order {order}",
                l.element,
                l.factor.number()
            )));
        }
        Ok(())
    }
}

fn coset_reps(phi: &GroupHom) -> Vec<usize> {
    let g = phi.target();
    let image = phi.image();
    let mut rep = vec![usize::MAX; g.order()];
    // Trivial coset first so that it is represented by the identity.
    let order: Vec<usize> = std::iter::once(g.identity())
        .chain(g.elements().filter(|&x| x != g.identity()))
        .collect();
    for x in order {
        if rep[x] != usize::MAX {
            continue;
        }
        for &h in &image {
            rep[g.mul(h, x)] = x;
        }
    }
    rep
}

/// A normal form `φ(h) · r1 · r2 ⋯ rk`: letters are non-trivial coset
/// representatives from alternating factors and `h` is an element of `H`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    pub h: usize,
    pub letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn identity(p: &AmalgamPresentation) -> Self {
        ReducedWord { h: p.amalgamated().identity(), letters: Vec::new() }
    }

    /// Number of coset-representative letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// A raw word of minimal length for this element: `h` is folded into
    /// the first letter (or written as a single letter of `G1` when there
    /// are no letters).
    pub fn to_raw(&self, p: &AmalgamPresentation) -> Vec<Letter> {
        let h_group = p.amalgamated();
        match self.letters.split_first() {
            None if self.h == h_group.identity() => Vec::new(),
            None => vec![Letter::new(Factor::One, p.structure_map(Factor::One).apply(self.h))],
            Some((first, rest)) => {
                let g = p.factor(first.factor);
                let folded = g.mul(p.structure_map(first.factor).apply(self.h), first.element);
                std::iter::once(Letter::new(first.factor, folded))
                    .chain(rest.iter().copied())
                    .collect()
            }
        }
    }

    /// Number of letters of [`ReducedWord::to_raw`].
    pub fn raw_len(&self, p: &AmalgamPresentation) -> usize {
        self.to_raw(p).len()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "h{}·[{}]", self.h, ls.join(" "))
    }
}

/// Unique normal form of the element represented by a raw word.
///
/// Letters are absorbed from the right end: each step multiplies the
/// current normal form on the left by one letter, merging with the leading
/// representative when it comes from the same factor.
pub fn normal_form(p: &AmalgamPresentation, word: &[Letter]) -> Result<ReducedWord> {
    if !p.is_injective() {
        return Err(Error::NonInjective(format!(
            "presentation `{}` has a non-injective structure map",
            p.name()
        )));
    }
    for l in word {
        p.check_letter(l)?;
    }
    let mut h = p.amalgamated().identity();
    let mut letters: VecDeque<Letter> = VecDeque::new();
    for l in word.iter().rev() {
        let i = l.factor;
        let g = p.factor(i);
        let mut x = g.mul(l.element, p.structure_map(i).apply(h));
        if letters.front().is_some_and(|f| f.factor == i) {
            let front = letters.pop_front().expect("non-empty");
            x = g.mul(x, front.element);
        }
        let (h_new, r) = p.decompose(i, x);
        h = h_new;
        if r != g.identity() {
            letters.push_front(Letter::new(i, r));
        }
    }
    Ok(ReducedWord { h, letters: letters.into() })
}

/// Product in `G1 *_H G2` of two normal forms.
pub fn multiply_words(p: &AmalgamPresentation, a: &ReducedWord, b: &ReducedWord) -> Result<ReducedWord> {
    let mut raw = a.to_raw(p);
    raw.extend(b.to_raw(p));
    normal_form(p, &raw)
}

/// Inverse in `G1 *_H G2`.
pub fn invert_word(p: &AmalgamPresentation, a: &ReducedWord) -> Result<ReducedWord> {
    let raw: Vec<Letter> = a
        .to_raw(p)
        .iter()
        .rev()
        .map(|l| Letter::new(l.factor, p.factor(l.factor).inv(l.element)))
        .collect();
    normal_form(p, &raw)
}

fn check_degree(p: &AmalgamPresentation, n: usize, limits: &Limits) -> Result<()> {
    if !p.is_injective() {
        return Err(Error::NonInjective(format!("presentation `{}`", p.name())));
    }
    if n > limits.max_word_degree {
        return Err(Error::SizeCap(format!(
            "word degree {n} exceeds cap {}",
            limits.max_word_degree
        )));
    }
    Ok(())
}

/// All distinct elements of `G1 *_H G2` expressible as words with at most
/// `n` letters, each once, sorted.
///
/// Built combinatorially from alternating sequences of non-trivial coset
/// representatives; elements of `H` need one letter, so they appear from
/// `n = 1` on.
pub fn enumerate_reduced_words(p: &AmalgamPresentation, n: usize) -> Result<Vec<ReducedWord>> {
    enumerate_reduced_words_with(p, n, &Limits::default())
}

pub fn enumerate_reduced_words_with(
    p: &AmalgamPresentation,
    n: usize,
    limits: &Limits,
) -> Result<Vec<ReducedWord>> {
    check_degree(p, n, limits)?;
    let h_group = p.amalgamated();
    let hs: Vec<usize> = if n == 0 { vec![h_group.identity()] } else { h_group.elements().collect() };
    let reps = [p.nontrivial_reps(Factor::One), p.nontrivial_reps(Factor::Two)];
    let mut sequences: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for f in Factor::BOTH {
                if w.last().is_some_and(|l| l.factor == f) {
                    continue;
                }
                for &r in &reps[f as usize] {
                    let mut w2 = w.clone();
                    w2.push(Letter::new(f, r));
                    next.push(w2);
                }
            }
        }
        sequences.extend(next.iter().cloned());
        layer = next;
    }
    let mut out: Vec<ReducedWord> = sequences
        .into_iter()
        .flat_map(|letters| hs.iter().map(move |&h| ReducedWord { h, letters: letters.clone() }))
        .collect();
    out.sort();
    Ok(out)
}

/// Same set as [`enumerate_reduced_words`], computed by normalizing every
/// raw word with at most `n` letters.
pub fn enumerate_by_rewriting(p: &AmalgamPresentation, n: usize) -> Result<Vec<ReducedWord>> {
    check_degree(p, n, &Limits::default())?;
    let alphabet: Vec<Letter> = Factor::BOTH
        .iter()
        .flat_map(|&f| p.factor(f).elements().map(move |g| Letter::new(f, g)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    seen.insert(normal_form(p, &[])?);
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                let mut w2 = w.clone();
                w2.push(l);
                seen.insert(normal_form(p, &w2)?);
                next.push(w2);
            }
        }
        layer = next;
    }
    Ok(seen.into_iter().collect())
}

/// Closed form for `H = 1`: number of elements of length exactly `m` is
/// `(a·b)^{m/2}·2` for even `m > 0` and `(a+b)(ab)^{(m-1)/2}` for odd `m`,
/// with `a = |G1| - 1`, `b = |G2| - 1`.
pub fn free_product_count_exact(a: usize, b: usize, m: usize) -> usize {
    if m == 0 {
        1
    } else if m % 2 == 0 {
        2 * (a * b).pow((m / 2) as u32)
    } else {
        (a + b) * (a * b).pow(((m - 1) / 2) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2_star_c2() -> AmalgamPresentation {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        AmalgamPresentation::free("C2*C2", c2.clone(), c2)
    }

    fn c4_amalg() -> AmalgamPresentation {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let phi = GroupHom::new(c2, c4, vec![0, 2]).unwrap();
        AmalgamPresentation::new("C4*_C2 C4", phi.clone(), phi).unwrap()
    }

    fn a() -> Letter {
        Letter::new(Factor::One, 1)
    }
    fn b() -> Letter {
        Letter::new(Factor::Two, 1)
    }

    #[test]
    fn merging_adjacent_letters() {
        let p = c2_star_c2();
        assert_eq!(normal_form(&p, &[a(), a()]).unwrap(), ReducedWord::identity(&p));
    }

    #[test]
    fn reduced_word_is_fixed() {
        let p = c2_star_c2();
        let w = normal_form(&p, &[a(), b(), a()]).unwrap();
        assert_eq!(w.letters, vec![a(), b(), a()]);
        assert_eq!(w.h, 0);
    }

    #[test]
    fn h_part_slides_through() {
        let p = c4_amalg();
        let x = Letter::new(Factor::One, 1);
        let y = Letter::new(Factor::Two, 1);
        let w = normal_form(&p, &[x, y, y]).unwrap();
        assert_eq!(w.to_raw(&p), vec![Letter::new(Factor::One, 3)]);
        assert_eq!(w, normal_form(&p, &[Letter::new(Factor::One, 3)]).unwrap());
    }

    #[test]
    fn non_injective_is_rejected() {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let c4 = Arc::new(FiniteGroup::cyclic(4));
        let kill = GroupHom::trivial(c4.clone(), c2.clone());
        let p = AmalgamPresentation::new("bad", kill.clone(), kill).unwrap();
        assert!(matches!(normal_form(&p, &[]), Err(Error::NonInjective(_))));
        assert!(enumerate_reduced_words(&p, 1).is_err());
    }

    #[test]
    fn invalid_letter() {
        let p = c2_star_c2();
        assert!(matches!(
            normal_form(&p, &[Letter::new(Factor::One, 5)]),
            Err(Error::InvalidLetter(_))
        ));
        assert!(Factor::from_number(3).is_err());
    }

    #[test]
    fn counts() {
        let p = c2_star_c2();
        assert_eq!(enumerate_reduced_words(&p, 3).unwrap().len(), 7);
        assert_eq!(enumerate_reduced_words(&p, 0).unwrap().len(), 1);
        assert_eq!(enumerate_reduced_words(&c4_amalg(), 0).unwrap().len(), 1);
    }

    #[test]
    fn amalgamated_count_two_strategies() {
        let p = c4_amalg();
        for n in 0..=3 {
            let a = enumerate_reduced_words(&p, n).unwrap();
            let b = enumerate_by_rewriting(&p, n).unwrap();
            assert_eq!(a, b, "n = {n}");
        }
        // |H| · (1 + 2 + 2) at n = 2.
        assert_eq!(enumerate_reduced_words(&p, 2).unwrap().len(), 10);
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(enumerate_reduced_words(&c2_star_c2(), 7), Err(Error::SizeCap(_))));
    }

    #[test]
    fn free_closed_form() {
        let g1 = Arc::new(FiniteGroup::cyclic(3));
        let g2 = Arc::new(FiniteGroup::cyclic(2));
        let p = AmalgamPresentation::free("C3*C2", g1, g2);
        let words = enumerate_reduced_words(&p, 4).unwrap();
        for m in 0..=4 {
            let exact = words.iter().filter(|w| w.len() == m).count();
            assert_eq!(exact, free_product_count_exact(2, 1, m));
        }
    }

    #[test]
    fn inverse_word() {
        let p = c4_amalg();
        for w in enumerate_reduced_words(&p, 3).unwrap() {
            let inv = invert_word(&p, &w).unwrap();
            assert_eq!(multiply_words(&p, &w, &inv).unwrap(), ReducedWord::identity(&p));
        }
    }
}
