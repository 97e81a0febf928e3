use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::GaussRat;

/// Commutative ring operations shared by every scalar domain used in matrices and tensors.
///
/// Zero and one are produced from an existing value (`zero_like`, `one_like`) because
/// series carry a precision and extension scalars carry their algebra kind.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// The constant `c` in the same domain (precision, kind) as `self`.
    fn embed(&self, c: &GaussRat) -> Self;
    /// Zero at the working precision.
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    /// Pivot preference for elimination; lower is better, `None` when not invertible.
    fn pivot_weight(&self) -> Option<i64>;
    /// The quadratic Galois involution (identity on K-valued scalars).
    fn sigma2(&self) -> Self;
}

impl Scalar for GaussRat {
    fn zero_like(&self) -> Self {
        GaussRat::zero()
    }
    fn one_like(&self) -> Self {
        GaussRat::one()
    }
    fn embed(&self, c: &GaussRat) -> Self {
        c.clone()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        GaussRat::inverse(self)
    }
    fn pivot_weight(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(0)
        }
    }
    fn sigma2(&self) -> Self {
        self.clone()
    }
}
