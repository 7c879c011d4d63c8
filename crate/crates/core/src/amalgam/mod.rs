//! Truncated coherent elements: an executable model of the coordinate
//! ring of `G1 *_H G2` inside the completed tensor algebra on
//! `k[G1] ⊕ k[G2]`.
//!
//! An element is a family of functions `f_{i1..in}` on `G_{i1} × .. × G_{in}`
//! for all index sequences of length `<= N`. Coherence asks that `f` take
//! equal values on words related by merging adjacent letters of one factor,
//! deleting identities, and swapping `φ1(h)` for `φ2(h)`.

mod coherence;
mod element;
mod evaluation;
mod layout;

pub use coherence::{
    check_coherence, check_coherence_against, coherence_classes, coherence_matrix, coherent_basis,
    coherent_basis_with, dimension_report, for_each_equality, projected_coherent_basis, quotient_embedding_check,
    CoherenceReport, CoherenceWitness, CoherentBasis, ConditionFamily, DimensionReport, FamilyReport,
    QuotientEmbeddingReport,
};
pub use element::{
    letters_of, matrix_coefficient_element, ComponentDocument, ElementDocument, GradedComponent, TruncatedElement,
};
pub use evaluation::{
    counit_law_check, coproduct_block, evaluate_raw, evaluation_matrix, evaluation_on_group, hopf_identity_check,
    rank_factorization, representativity_rank, HopfIdentityReport, HopfIdentityWitness, RankReport,
};
pub use layout::Layout;
