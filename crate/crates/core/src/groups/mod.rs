//! Finite groups as multiplication tables, homomorphisms, and normal forms
//! of words in free and amalgamated free products.

mod group;
mod hom;
pub mod io;
mod words;

pub use group::FiniteGroup;
pub(crate) use group::permutations;
pub use hom::{check_hom, GroupHom, HomReport};
pub use words::{
    enumerate_by_rewriting, enumerate_reduced_words, enumerate_reduced_words_with,
    free_product_count_exact, invert_word, multiply_words, normal_form, AmalgamPresentation, Factor,
    Letter, ReducedWord,
};
