use std::sync::Arc;

use serde::Serialize;

use super::element::TruncatedElement;
use super::layout::Layout;
use crate::error::Result;
use crate::exactalg::{Field, Matrix, Scalar};
use crate::groups::{AmalgamPresentation, Factor};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionFamily {
    Multiplicative,
    Unital,
    HCoherence,
}

impl ConditionFamily {
    pub const ALL: [ConditionFamily; 3] =
        [ConditionFamily::Multiplicative, ConditionFamily::Unital, ConditionFamily::HCoherence];
}

fn insert<T: Copy>(v: &[T], at: usize, x: T) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.extend_from_slice(&v[..at]);
    out.push(x);
    out.extend_from_slice(&v[at..]);
    out
}

/// Visits every coordinate equality `x_a = x_b` of one family that stays
/// within the layout's degree, in a fixed order: sequences in layout order,
/// slots ascending, tuples row-major. Stops early when `visit` returns
/// `false`.
pub fn for_each_equality(layout: &Layout, family: ConditionFamily, mut visit: impl FnMut(usize, usize) -> bool) {
    let p = layout.presentation();
    let n_max = layout.degree();
    match family {
        ConditionFamily::Multiplicative => {
            for seq in layout.sequences().filter(|s| !s.is_empty() && s.len() < n_max) {
                for l in 0..seq.len() {
                    let g = p.factor(seq[l]);
                    let doubled = insert(&seq, l, seq[l]);
                    for t in layout.tuples(&doubled) {
                        let mut merged = t.clone();
                        merged[l] = g.mul(t[l], t[l + 1]);
                        merged.remove(l + 1);
                        if !visit(layout.coord(&doubled, &t), layout.coord(&seq, &merged)) {
                            return;
                        }
                    }
                }
            }
        }
        ConditionFamily::Unital => {
            for seq in layout.sequences().filter(|s| !s.is_empty()) {
                for l in 0..seq.len() {
                    let mut shorter = seq.clone();
                    shorter.remove(l);
                    let e = p.factor(seq[l]).identity();
                    for t in layout.tuples(&shorter) {
                        if !visit(layout.coord(&seq, &insert(&t, l, e)), layout.coord(&shorter, &t)) {
                            return;
                        }
                    }
                }
            }
        }
        ConditionFamily::HCoherence => {
            let (phi1, phi2) = (p.structure_map(Factor::One), p.structure_map(Factor::Two));
            for seq in layout.sequences().filter(|s| !s.is_empty()) {
                for l in (0..seq.len()).filter(|&l| seq[l] == Factor::One) {
                    let mut other = seq.clone();
                    other[l] = Factor::Two;
                    let mut rest = seq.clone();
                    rest.remove(l);
                    for h in p.amalgamated().elements() {
                        for t in layout.tuples(&rest) {
                            let a = layout.coord(&seq, &insert(&t, l, phi1.apply(h)));
                            let b = layout.coord(&other, &insert(&t, l, phi2.apply(h)));
                            if !visit(a, b) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// A violated equality, located by sequence and tuple on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceWitness {
    pub sequence: Vec<u8>,
    pub tuple: Vec<usize>,
    pub other_sequence: Vec<u8>,
    pub other_tuple: Vec<usize>,
    pub value: String,
    pub other_value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: ConditionFamily,
    pub passed: bool,
    pub checked: usize,
    pub witness: Option<CoherenceWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub degree: usize,
    pub families: Vec<FamilyReport>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.passed)
    }
}

fn numbers(seq: &[Factor]) -> Vec<u8> {
    seq.iter().map(|f| f.number()).collect()
}

/// Checks every instance of the three condition families within degree
/// `<= N`; each family reports its first violation in scan order.
pub fn check_coherence(f: &TruncatedElement) -> CoherenceReport {
    check_coherence_against(f, f.layout())
}

/// Like [`check_coherence`] but with the conditions of another layout of
/// the same shape (used to test against the free product).
pub fn check_coherence_against(f: &TruncatedElement, layout: &Layout) -> CoherenceReport {
    let vals = f.values();
    let families = ConditionFamily::ALL
        .iter()
        .map(|&family| {
            let mut checked = 0;
            let mut witness = None;
            for_each_equality(layout, family, |a, b| {
                checked += 1;
                if vals[a] != vals[b] {
                    let (s1, t1) = layout.decode(a);
                    let (s2, t2) = layout.decode(b);
                    witness = Some(CoherenceWitness {
                        sequence: numbers(&s1),
                        tuple: t1,
                        other_sequence: numbers(&s2),
                        other_tuple: t2,
                        value: vals[a].to_string(),
                        other_value: vals[b].to_string(),
                    });
                    return false;
                }
                true
            });
            FamilyReport { family, passed: witness.is_none(), checked, witness }
        })
        .collect();
    CoherenceReport { degree: layout.degree(), families }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // The smaller index becomes the root, so roots are class minima.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Equivalence classes of coordinates under all coherence equalities, as
/// sorted coordinate lists ordered by their smallest element.
pub fn coherence_classes(layout: &Layout) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(layout.len());
    for family in ConditionFamily::ALL {
        for_each_equality(layout, family, |a, b| {
            uf.union(a, b);
            true
        });
    }
    let mut slot = vec![usize::MAX; layout.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for c in 0..layout.len() {
        let r = uf.find(c);
        if slot[r] == usize::MAX {
            slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[r]].push(c);
    }
    classes
}

/// Basis of the coherent truncated elements.
///
/// Every coherence condition equates two coordinates, so the solution space
/// is spanned by indicator vectors of the classes of coordinates forced to
/// be equal. Ordered by smallest coordinate, these indicators are exactly
/// the reduced echelon basis of the kernel of [`coherence_matrix`].
#[derive(Clone, Debug)]
pub struct CoherentBasis {
    layout: Arc<Layout>,
    field: Field,
    classes: Vec<Vec<usize>>,
}

impl CoherentBasis {
    pub fn layout(&self) -> &Arc<Layout> {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn element(&self, i: usize) -> TruncatedElement {
        let mut values = vec![Scalar::zero(self.field); self.layout.len()];
        for &c in &self.classes[i] {
            values[c] = Scalar::one(self.field);
        }
        TruncatedElement::new(self.layout.clone(), self.field, values).expect("layout length")
    }

    pub fn elements(&self) -> Vec<TruncatedElement> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    /// Coordinates of a coherent element in this basis (its value on each
    /// class), or `None` if it is not constant on some class.
    pub fn coordinates(&self, f: &TruncatedElement) -> Option<Vec<Scalar>> {
        self.classes
            .iter()
            .map(|cls| {
                let v = &f.values()[cls[0]];
                cls.iter().all(|&c| &f.values()[c] == v).then(|| v.clone())
            })
            .collect()
    }
}

/// Coherent elements of degree `<= N`, with every condition whose target
/// degree exceeds `N` skipped.
pub fn coherent_basis(p: Arc<AmalgamPresentation>, n: usize, field: Field) -> Result<CoherentBasis> {
    coherent_basis_with(p, n, field, &Limits::default())
}

pub fn coherent_basis_with(
    p: Arc<AmalgamPresentation>,
    n: usize,
    field: Field,
    limits: &Limits,
) -> Result<CoherentBasis> {
    let layout = Arc::new(Layout::with_limits(p, n, limits)?);
    let classes = coherence_classes(&layout);
    Ok(CoherentBasis { layout, field, classes })
}

/// The dense system: one row `e_a - e_b` per non-trivial equality.
pub fn coherence_matrix(layout: &Layout, field: Field) -> Matrix {
    let mut rows = Vec::new();
    for family in ConditionFamily::ALL {
        for_each_equality(layout, family, |a, b| {
            if a != b {
                let mut r = vec![Scalar::zero(field); layout.len()];
                r[a] = Scalar::one(field);
                r[b] = Scalar::from_i64(field, -1);
                rows.push(r);
            }
            true
        });
    }
    Matrix::from_rows_shaped(field, rows.len(), layout.len(), rows).expect("uniform rows")
}

/// Degree-`<= N` projection of the coherent elements of degree `<= N + lookahead`.
///
/// Conditions that pass through higher degrees (for example sliding an
/// element of `H` from one letter to its neighbour, which inserts and then
/// merges a letter) constrain low-degree coordinates only after
/// projection. A class of the larger system meeting the low-degree prefix
/// restricts to one basis vector.
pub fn projected_coherent_basis(
    p: Arc<AmalgamPresentation>,
    n: usize,
    lookahead: usize,
    field: Field,
    limits: &Limits,
) -> Result<CoherentBasis> {
    let relaxed = Limits { max_degree: limits.max_degree + lookahead, ..*limits };
    let big = Layout::with_limits(p.clone(), n + lookahead, &relaxed)?;
    let layout = Arc::new(Layout::with_limits(p, n, &relaxed)?);
    let cut = layout.len();
    let classes = coherence_classes(&big)
        .into_iter()
        .filter(|cls| cls[0] < cut)
        .map(|cls| cls.into_iter().take_while(|&c| c < cut).collect())
        .collect();
    Ok(CoherentBasis { layout, field, classes })
}

/// Raw and projected coherent dimensions side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub presentation: String,
    pub degree: usize,
    pub raw_dimension: usize,
    /// Projection from degree `N + 1`.
    pub projected_dimension: usize,
    /// Elements of the amalgam of reduced length `<= N` (injective maps only).
    pub word_count: Option<usize>,
}

pub fn dimension_report(p: Arc<AmalgamPresentation>, n: usize, limits: &Limits) -> Result<DimensionReport> {
    let raw = coherent_basis_with(p.clone(), n, Field::Rational, limits)?.dim();
    let projected = projected_coherent_basis(p.clone(), n, 1, Field::Rational, limits)?.dim();
    let word_count = if p.is_injective() {
        let relaxed = Limits { max_word_degree: limits.max_word_degree.max(n), ..*limits };
        Some(crate::groups::enumerate_reduced_words_with(&p, n, &relaxed)?.len())
    } else {
        None
    };
    Ok(DimensionReport {
        presentation: p.name().to_string(),
        degree: n,
        raw_dimension: raw,
        projected_dimension: projected,
        word_count,
    })
}

/// Inclusion of the coherent space of `G1 *_H G2` in that of `G1 * G2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientEmbeddingReport {
    pub degree: usize,
    pub amalgamated_dimension: usize,
    pub free_dimension: usize,
    pub inclusion_holds: bool,
    /// First amalgamated basis vector violating a free-product condition.
    pub witness: Option<usize>,
}

pub fn quotient_embedding_check(p: Arc<AmalgamPresentation>, n: usize, limits: &Limits) -> Result<QuotientEmbeddingReport> {
    let with_h = coherent_basis_with(p.clone(), n, Field::Rational, limits)?;
    let free = Arc::new(p.free_version());
    let without = coherent_basis_with(free, n, Field::Rational, limits)?;
    let witness = (0..with_h.dim()).find(|&i| {
        !check_coherence_against(&with_h.element(i), without.layout()).passed()
    });
    Ok(QuotientEmbeddingReport {
        degree: n,
        amalgamated_dimension: with_h.dim(),
        free_dimension: without.dim(),
        inclusion_holds: witness.is_none() && with_h.dim() <= without.dim(),
        witness,
    })
}
