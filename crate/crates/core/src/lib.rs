//! Affine Weyl groups, Iwahori–Hecke algebras, representations and
//! `L_p`-expander diagnostics for finite chamber complexes.

pub mod bounds;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod reps;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
