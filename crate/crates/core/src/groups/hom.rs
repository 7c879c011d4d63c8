use std::sync::Arc;

use serde::Serialize;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// A map of finite groups given by the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

/// Outcome of an exhaustive multiplicativity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub passed: bool,
    pub identity_preserved: bool,
    /// First pair `(g, h)` with `φ(gh) != φ(g)φ(h)`.
    pub witness: Option<(usize, usize)>,
    pub pairs_checked: usize,
}

impl GroupHom {
    /// Builds and validates a homomorphism.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        let hom = Self::new_unchecked(source, target, images)?;
        let report = check_hom(&hom);
        if !report.passed {
            return Err(Error::NotAHomomorphism(format!(
                "multiplicativity fails at {:?}",
                report.witness
            )));
        }
        Ok(hom)
    }

    /// Builds a map without checking multiplicativity; only the image
    /// array's shape and range are validated.
    pub fn new_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::NotAHomomorphism(format!(
                "image array has length {}, source has order {}",
                images.len(),
                source.order()
            )));
        }
        if let Some(&x) = images.iter().find(|&&x| x >= target.order()) {
            return Err(Error::NotAHomomorphism(format!("image {x} outside the target")));
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let images = g.elements().collect();
        GroupHom { source: g.clone(), target: g, images }
    }

    /// The map sending everything to the identity.
    pub fn trivial(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let images = vec![target.identity(); source.order()];
        GroupHom { source, target, images }
    }

    /// The homomorphism `Z/n -> G` sending the generator `1` to `g`.
    pub fn from_cyclic(n: usize, target: Arc<FiniteGroup>, g: usize) -> Result<Self> {
        let source = Arc::new(FiniteGroup::cyclic(n));
        let images = (0..n).map(|k| target.pow(g, k)).collect();
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.images.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::NotAHomomorphism("composition of non-composable maps".into()));
        }
        let images = first.images.iter().map(|&x| self.images[x]).collect();
        Ok(GroupHom { source: first.source.clone(), target: self.target.clone(), images })
    }

    /// The image subgroup, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Exhaustively checks `φ(gh) = φ(g)φ(h)` and `φ(e) = e`.
pub fn check_hom(phi: &GroupHom) -> HomReport {
    let s = &phi.source;
    let t = &phi.target;
    let identity_preserved = phi.apply(s.identity()) == t.identity();
    let mut witness = None;
    let mut pairs_checked = 0;
    'outer: for a in s.elements() {
        for b in s.elements() {
            pairs_checked += 1;
            if phi.apply(s.mul(a, b)) != t.mul(phi.apply(a), phi.apply(b)) {
                witness = Some((a, b));
                break 'outer;
            }
        }
    }
    HomReport { passed: identity_preserved && witness.is_none(), identity_preserved, witness, pairs_checked }
}
