//! Constructive triviality for sl(n): every cocycle splits as `X = Q'·C` with Q' over K
//! and C diagonal in the centralizer of r_BD.

use super::centralizer::{centralizer_member, sl_s_classes};
use super::factor::{ext_tensor, factor_qd_with, is_bd_cocycle, matrix_precision};
use super::report::{CocycleClass, CocycleReport};
use crate::error::{Error, Result};
use crate::lie::{LieModel, ModelKind, Tensor2};
use crate::linalg::{ExtMatrix, Matrix};
use crate::rmatrix::{build_rbd, solve_r0, AdmissibleTriple};
use crate::scalar::{ExtScalar, GaussRat, LaurentScalar};

/// `r_BD` of the triple with the particular continuous parameter.
pub fn default_rbd(model: &LieModel, t: &AdmissibleTriple) -> Result<Tensor2<GaussRat>> {
    let p = solve_r0(model, t)?;
    build_rbd(model, t, &p.r0)
}

/// `s_i = d_i / d_{i+1}` for `i < n`, `s_n = d_n`.
fn s_values(d: &[ExtScalar]) -> Result<Vec<ExtScalar>> {
    let n = d.len();
    (0..n)
        .map(|i| {
            if i + 1 < n {
                Ok(&d[i] * &d[i + 1].invert().ok_or(Error::Singular)?)
            } else {
                Ok(d[i].clone())
            }
        })
        .collect()
}

/// `t_i = Π_{l ≥ i} s_l`, the inverse of [`s_values`].
fn from_s_values<T: Clone + std::ops::Mul<Output = T>>(s: &[T]) -> Vec<T> {
    let n = s.len();
    let mut out = s.to_vec();
    for i in (0..n.saturating_sub(1)).rev() {
        out[i] = s[i].clone() * out[i + 1].clone();
    }
    out
}

/// Normalizes a cocycle for `r_BD(t)` on sl(n) to `X = (Q·K)·C`.
///
/// Indices are grouped into classes of forced-equal s-values; each class has a
/// representative, preferably a root of Γ₁∖Γ₂. The ratios `κ_i = s_i / s_rep` lie in K
/// for a cocycle and form the K-factor; the representatives form C.
pub fn normalize_sl(model: &LieModel, x: &ExtMatrix, t: &AdmissibleTriple) -> Result<CocycleReport> {
    if model.kind != ModelKind::Sl {
        return Err(Error::InvalidParam("normalize_sl needs an sl(n) model".into()));
    }
    let r = default_rbd(model, t)?;
    let mut report = is_bd_cocycle(model, x, &r)?;
    if !report.is_cocycle {
        return Err(Error::NotCocycle);
    }
    let gamma1 = t.gamma1();
    let gamma2 = t.gamma2();
    let free: Vec<usize> = gamma1.iter().copied().filter(|a| !gamma2.contains(a)).collect();
    if !gamma1.is_empty() && free.is_empty() {
        return Err(Error::PivotUnavailable);
    }

    let (q, d) = factor_qd_with(x, &report.galois_checks[0].transport)?;
    let n = model.n;
    let s = s_values(&d.diag())?;
    let prec = matrix_precision(x);
    let mut kappa = vec![LaurentScalar::one(prec); n];
    let mut reps = s.clone();
    for class in sl_s_classes(n, t) {
        let rep = class.iter().copied().find(|i| free.contains(i)).unwrap_or(class[0]);
        let rep_inv = s[rep].invert().ok_or(Error::Singular)?;
        for &i in &class {
            match (&s[i] * &rep_inv).base_part() {
                Some(k) => kappa[i] = k,
                None => {
                    report.class = Some(CocycleClass::Unresolved);
                    report.note = Some(format!("ratio s_{}/s_{} is not in K", i + 1, rep + 1));
                    return Ok(report);
                }
            }
            reps[i] = s[rep].clone();
        }
    }
    let kmat = Matrix::diagonal(&from_s_values(&kappa));
    let c = Matrix::diagonal(&from_s_values(&reps));
    report.witness_q = Some(q.mul(&kmat));
    report.witness_c = Some(c);
    finish(model, x, &r, report, CocycleClass::Trivial)
}

/// Verifies the witnesses before committing to `class`; falls back to UNRESOLVED.
pub(crate) fn finish(
    model: &LieModel,
    x: &ExtMatrix,
    r: &Tensor2<GaussRat>,
    mut report: CocycleReport,
    class: CocycleClass,
) -> Result<CocycleReport> {
    let rext = ext_tensor(r, matrix_precision(x));
    let c_ok = match &report.witness_c {
        Some(c) => centralizer_member(model, c, &rext)?,
        None => false,
    };
    if c_ok && report.witnesses_recombine(x) {
        report.class = Some(class);
    } else {
        report.class = Some(CocycleClass::Unresolved);
        report.note = Some("witness verification failed".into());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootType;

    const P: usize = 8;

    fn e(a: i64, b: i64) -> ExtScalar {
        ExtScalar::ramified(LaurentScalar::from_int(a, P), LaurentScalar::from_int(b, P))
    }

    #[test]
    fn identity_is_trivial() {
        let m = LieModel::new(ModelKind::Sl, 3).unwrap();
        let t = AdmissibleTriple::new(RootType::A, 2, [(0, 1)]);
        let x = Matrix::identity_like(&e(1, 0), 3);
        let rep = normalize_sl(&m, &x, &t).unwrap();
        assert_eq!(rep.class, Some(CocycleClass::Trivial));
    }

    #[test]
    fn j_diagonal_times_rational() {
        let m = LieModel::new(ModelKind::Sl, 3).unwrap();
        let t = AdmissibleTriple::empty(RootType::A, 2);
        let j = e(0, 1);
        let jinv = j.invert().unwrap();
        let dg = Matrix::diagonal(&[j, jinv, e(1, 0)]);
        let q0 = Matrix::from_rows(vec![vec![e(1, 0), e(2, 0), e(0, 0)], vec![e(0, 0), e(1, 0), e(3, 0)], vec![e(1, 0), e(0, 0), e(1, 0)]]);
        let x = dg.mul(&q0);
        let rep = is_bd_cocycle(&m, &x, &default_rbd(&m, &t).unwrap()).unwrap();
        // the transport Q₀⁻¹·diag(−1, −1, 1)·Q₀ is not diagonal
        assert!(!rep.is_cocycle);
        let x = q0.mul(&dg);
        let rep = normalize_sl(&m, &x, &t).unwrap();
        assert_eq!(rep.class, Some(CocycleClass::Trivial));
        assert!(rep.witnesses_recombine(&x));
    }
}
