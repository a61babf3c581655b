//! Littlewood-Richardson coefficients for equivariant and shifted Schubert calculus via
//! edge-labeled tableaux.

pub mod afring;
pub mod coeffs;
pub mod error;
pub mod grid;
pub mod horn;
pub mod jdt;
pub mod linalg;
pub mod newton;
pub mod par;
pub mod poly;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
