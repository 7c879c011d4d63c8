//! Representations of finite groups and of amalgamated free products.
//!
//! A representation of `G1 *_H G2` is the same thing as a triple
//! `(V1, V2, c)` of factor representations glued by an `H`-isomorphism;
//! [`glue`] and [`split`] pass between the two descriptions.

mod examples;
mod glue;
mod invariant;
pub mod io;
mod representation;

pub use examples::{
    c2_free_product, involution_word, sl2_infinite_order_certificate, sl2_rep, v_a, v_a_triple, Sl2Certificate,
};
pub use glue::{glue, round_trip_witness, split, AmalgamRep, GluedTriple, TripleMorphism};
pub use invariant::{common_eigenvector, invariant_subspace, is_invariant, MAX_INVARIANT_SEARCH_DIM};
pub(crate) use representation::invertible_in_span;
pub use representation::{building_blocks, find_isomorphism, symmetric_perms, Representation};
