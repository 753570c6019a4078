//! Exact computer algebra for Hopf 2-cocycle twists: finite-dimensional Hopf
//! algebras by structure constants, their comodule categories, and truncated
//! deformation twists over Lie algebras.

pub mod comodule;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod hopf;
pub mod lie;
pub mod report;

pub use error::{Error, Result};
pub use report::{AxiomReport, Check, Witness};
