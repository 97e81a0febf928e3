//! Group membership tests for GL(n), SL(n) and the split orthogonal group O(n).

use serde::{Deserialize, Serialize};

use super::model::antidiagonal;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    GL,
    SL,
    /// `{X : XᵀSX = S}` for the antidiagonal S.
    O,
}

pub fn group_member<T: Scalar>(x: &Matrix<T>, kind: GroupKind) -> bool {
    if !x.is_square() {
        return false;
    }
    let proto = x.get(0, 0);
    match kind {
        GroupKind::GL => !x.det().is_zero(),
        GroupKind::SL => (x.det() - proto.one_like()).is_zero(),
        GroupKind::O => {
            let s = Matrix::embed(proto, &antidiagonal(x.rows()));
            x.transpose().mul(&s).mul(x).sub(&s).is_zero()
        }
    }
}

/// Split symmetric form `B(x, y) = Σ x_i y_{n+1−i}`.
pub fn split_form<T: Scalar>(x: &[T], y: &[T]) -> T {
    let n = x.len();
    let mut acc = x[0].zero_like();
    for i in 0..n {
        acc = acc + x[i].clone() * y[n - 1 - i].clone();
    }
    acc
}
