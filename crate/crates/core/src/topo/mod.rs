//! Finite topological models: posets with the Alexandrov topology, local
//! systems on them, gluing along open covers, monodromy through edge-path
//! presentations, and Seifert-van Kampen checks.
//!
//! Opens are up-sets. A local system stores, for each covering pair
//! `x ⋖ y`, an invertible matrix `stalk(y) → stalk(x)`.

pub mod io;
mod local;
pub mod models;
mod pi1;
mod poset;
mod svk;

pub use local::LocalSystem;
pub use pi1::{
    evaluate_relator, generated_algebra, monodromy, monodromy_with, path_matrix, pi1_presentation,
    pi1_presentation_with, realize, EdgeLoop, Monodromy, Pi1Presentation, RelatorLetter, TreeChoice,
};
pub use poset::FinitePoset;
pub use svk::{
    glue, gluing_hom_space, is_gluing_morphism, loops_generate, random_gluing, round_trip_witness, split, svk_check,
    Cover, GluingData, GluingMorphism, SvkReport,
};
