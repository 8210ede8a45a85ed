//! Exact computations for symplectic obstructions on circle bundles over
//! 3-manifolds: presentations, Fox calculus, twisted Alexander polynomials,
//! finite covers and Seiberg–Witten bookkeeping.

pub mod alexander;
pub mod covers;
pub mod error;
pub mod exactalg;
pub mod homology;
pub mod obstruction;
pub mod presentations;
pub mod swbridge;

pub use error::{Error, Result};
