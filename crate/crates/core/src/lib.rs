//! Exact, desk-scale computations around amalgamated free products of
//! finite constant group schemes: the coherent-element Hopf algebra, fibre
//! products of representation categories, the `Fr+` Frobenius functor, and
//! local systems on finite topological spaces.

pub mod amalgam;
pub mod error;
pub mod exactalg;
pub mod frobplus;

pub use error::{Error, Result};
pub mod groups;
pub mod hopf;
pub mod limits;
pub mod presets;
pub mod report;
pub mod rep;
pub mod scenarios;
pub mod topo;
