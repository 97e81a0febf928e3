//! The form Q on g ⊗ A and the 2-cocycle test for subalgebras with a bilinear form.

use super::model::LieModel;
use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix};
use crate::scalar::{ExtScalar, LaurentScalar, Scalar};

/// `Q(x, y) = Σ B(x_a, x_b) t(x^a y^b)` for elements of g ⊗ A in coordinates.
pub fn form_q_eval(model: &LieModel, x: &[ExtScalar], y: &[ExtScalar]) -> Result<LaurentScalar> {
    let kind = x.first().ok_or(Error::Shape("empty element".into()))?.kind;
    if x.len() != model.dim() || y.len() != model.dim() {
        return Err(Error::Shape("coordinate vector length differs from the algebra dimension".into()));
    }
    if x.iter().chain(y).any(|c| c.kind != kind) {
        return Err(Error::KindMismatch);
    }
    let prec = x.iter().chain(y).map(|c| c.precision()).min().unwrap();
    let mut acc = LaurentScalar::zero(prec);
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            let g = model.gram().get(a, b);
            if g.is_zero() || yb.is_zero() {
                continue;
            }
            acc = &acc + &(xa * yb).trace().scale(g);
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoCocycleCheck {
    pub is_cocycle: bool,
    pub is_nondegenerate: bool,
}

/// Coordinates of `m` in the span of `basis`, or `NotClosed`.
pub fn span_coordinates<T: Scalar>(basis: &[Matrix<T>], m: &Matrix<T>) -> Result<Vec<T>> {
    let n2 = m.rows() * m.cols();
    let a = Matrix::from_fn(n2, basis.len(), |r, c| basis[c].get(r / m.cols(), r % m.cols()).clone());
    let b: Vec<T> = (0..n2).map(|r| m.get(r / m.cols(), r % m.cols()).clone()).collect();
    solve(&a, &b).ok_or(Error::NotClosed)
}

/// Tests `B([x,y],z) + B([y,z],x) + B([z,x],y) = 0` on all basis triples and
/// nondegeneracy of the Gram matrix `bform`.
pub fn check_two_cocycle<T: Scalar>(basis: &[Matrix<T>], bform: &Matrix<T>) -> Result<TwoCocycleCheck> {
    let d = basis.len();
    if bform.rows() != d || bform.cols() != d {
        return Err(Error::Shape("form table size differs from the basis size".into()));
    }
    let proto = basis[0].get(0, 0).clone();
    let mut brackets = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in 0..d {
            let m = basis[a].mul(&basis[b]).sub(&basis[b].mul(&basis[a]));
            brackets[a][b] = span_coordinates(basis, &m)?;
        }
    }
    let pair = |coords: &[T], z: usize| -> T {
        let mut acc = proto.zero_like();
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c.clone() * bform.get(k, z).clone();
            }
        }
        acc
    };
    let mut is_cocycle = true;
    'outer: for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let s = pair(&brackets[x][y], z) + pair(&brackets[y][z], x) + pair(&brackets[z][x], y);
                if !s.is_zero() {
                    is_cocycle = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(TwoCocycleCheck { is_cocycle, is_nondegenerate: !bform.det().is_zero() })
}
