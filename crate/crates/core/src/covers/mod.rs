//! Finite quotients, their kernels, and induced classes.

mod gamma;
mod group;
mod hom;
mod schreier;

pub use gamma::gamma_quotient;
pub use group::{builtin_group, parse_group_text, FiniteGroup};
pub use hom::{enumerate_epimorphisms, FiniteHom};
pub use schreier::{induced_class, reidemeister_schreier, schreier_transversal, CoverPresentation, InducedClass};
