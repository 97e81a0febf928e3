//! Exact constructions and classifications of Lie bialgebra structures on sl(n) and o(n)
//! over the Laurent series field K = C((h)), computed at finite series precision.

pub mod cohomology;
pub mod error;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod rmatrix;
pub mod scalar;
pub mod twisted;

pub use error::{Error, Result};
