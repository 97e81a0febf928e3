//! Scalar domains: Gaussian rationals, truncated Laurent series over them, and the
//! rank-2 algebras over the series field.

mod ext;
mod gauss;
pub mod literal;
mod laurent;
mod quadratic;
mod ring;

pub use ext::{AlgebraKind, ExtScalar};
pub use gauss::GaussRat;
pub use laurent::{LaurentScalar, DEFAULT_PRECISION};
pub use quadratic::{classify_quadratic, QuadElem, QuadraticAlgebra, QuadraticClassification, QuadraticWitness};
pub use ring::Scalar;
