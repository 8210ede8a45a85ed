//! Exact integer and Laurent-polynomial linear algebra.

pub mod gcd;
pub mod intmat;
pub mod laurent;
pub mod polymat;

pub use gcd::{gcd2, int_gcd, poly_gcd};
pub use intmat::{column_hermite, integer_kernel, smith_normal_form, IntMatrix, SmithForm};
pub use laurent::{standard_vars, vars, Exponent, LaurentPoly, Vars};
pub use polymat::{determinant, minor_gcd, minor_gcd_with, DetConfig, DetMethod, PolyMatrix};
