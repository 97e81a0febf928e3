//! The quadratic Galois layer: cocycle tests and the factorization `X = Q·D`.

use super::report::{CocycleReport, GaloisCheck};
use crate::error::{Error, Result};
use crate::lie::{LieModel, Tensor2};
use crate::linalg::{ExtMatrix, KMatrix, Matrix};
use crate::scalar::{ExtScalar, GaussRat, LaurentScalar, Scalar};

pub(crate) fn matrix_precision(x: &ExtMatrix) -> usize {
    x.entries().map(|e| e.precision()).min().unwrap_or(crate::scalar::DEFAULT_PRECISION)
}

/// An exact K-tensor viewed over K[j] at the given precision.
pub(crate) fn ext_tensor(r: &Tensor2<GaussRat>, precision: usize) -> Tensor2<ExtScalar> {
    let one = ExtScalar::one(crate::scalar::AlgebraKind::Ramified, precision);
    r.map(|v| one.embed(v))
}

/// `X⁻¹σ₂(X)`.
pub fn galois_transport(x: &ExtMatrix) -> Result<ExtMatrix> {
    Ok(x.inverse()?.mul(&x.sigma2()))
}

/// Checks `X⁻¹σ₂(X) ∈ C(r)`. Entries of X lie in K[j], so every element of
/// Gal(K̄/K[j]) fixes X and only σ₂ needs testing.
pub fn is_bd_cocycle(model: &LieModel, x: &ExtMatrix, r: &Tensor2<GaussRat>) -> Result<CocycleReport> {
    let transport = galois_transport(x)?;
    let rext = ext_tensor(r, matrix_precision(x));
    let residual = model.adjoint_act(&transport, &rext)?.sub(&rext);
    let is_cocycle = residual.is_empty();
    let check = GaloisCheck { generator: "sigma2".into(), transport, residual };
    Ok(CocycleReport::unclassified(is_cocycle, vec![check]))
}

/// `X = Q·D` with Q over K and D diagonal over K[j].
///
/// The pivot of column k is its first nonzero entry; `Q_ik = x_ik / pivot_k`.
pub fn factor_qd(x: &ExtMatrix) -> Result<(KMatrix, ExtMatrix)> {
    factor_qd_with(x, &galois_transport(x)?)
}

/// [`factor_qd`] with a precomputed `X⁻¹σ₂(X)`.
pub(crate) fn factor_qd_with(x: &ExtMatrix, transport: &ExtMatrix) -> Result<(KMatrix, ExtMatrix)> {
    if !transport.is_diagonal() {
        return Err(Error::NotReducible);
    }
    let n = x.rows();
    let mut d = Vec::with_capacity(n);
    let mut q = Matrix::zeros_like(&LaurentScalar::zero(matrix_precision(x)), n, n);
    for k in 0..n {
        let p = (0..n).find(|&i| !x.get(i, k).is_zero()).ok_or(Error::Singular)?;
        let pivot = x.get(p, k).clone();
        let inv = pivot.invert().ok_or(Error::NotReducible)?;
        for i in 0..n {
            let ratio = (x.get(i, k) * &inv).base_part().ok_or(Error::NotReducible)?;
            q.set(i, k, ratio);
        }
        d.push(pivot);
    }
    Ok((q, Matrix::diagonal(&d)))
}
