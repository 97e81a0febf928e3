//! Twisted cocycles `X⁻¹σ₂(X)` carrying r_BD to r_BD²¹, the r-matrices they induce on
//! g(K[j]), and their normalization to `X = Q·X₀·D′` for r_DJ on sl(n).

use serde::Serialize;

use super::real_form::{build_x0_twisted, s_matrix};
use crate::cohomology::{default_rbd, galois_transport};
use crate::error::{Error, Result};
use crate::lie::{LieModel, ModelKind, RootType, Tensor2};
use crate::linalg::{descend, lift, ExtMatrix, KMatrix, Matrix};
use crate::rmatrix::AdmissibleTriple;
use crate::scalar::{AlgebraKind, ExtScalar, GaussRat, Scalar};

fn ext_r(r: &Tensor2<GaussRat>, precision: usize) -> Tensor2<ExtScalar> {
    let one = ExtScalar::one(AlgebraKind::Ramified, precision);
    r.map(|v| one.embed(v))
}

fn precision_of(x: &ExtMatrix) -> usize {
    x.entries().map(|e| e.precision()).min().unwrap_or(crate::scalar::DEFAULT_PRECISION)
}

/// `(Ad_T ⊗ Ad_T)(r) − r²¹` for `T = X⁻¹σ₂(X)`. Entries of X lie in K[j], so the
/// Gal(K̄/K[j]) part of the condition holds trivially.
pub fn twisted_residual(model: &LieModel, x: &ExtMatrix, r: &Tensor2<GaussRat>) -> Result<Tensor2<ExtScalar>> {
    let t = galois_transport(x)?;
    let rext = ext_r(r, precision_of(x));
    Ok(model.adjoint_act(&t, &rext)?.sub(&rext.flip()))
}

pub fn verify_twisted_cocycle(model: &LieModel, x: &ExtMatrix, r: &Tensor2<GaussRat>) -> Result<bool> {
    Ok(twisted_residual(model, x, r)?.is_empty())
}

/// `r = j·(Ad_X ⊗ Ad_X)(r_BD)`.
pub fn build_twisted_r(model: &LieModel, x: &ExtMatrix, r: &Tensor2<GaussRat>) -> Result<Tensor2<ExtScalar>> {
    if !verify_twisted_cocycle(model, x, r)? {
        return Err(Error::NotTwistedCocycle);
    }
    let prec = precision_of(x);
    Ok(model.adjoint_act(x, &ext_r(r, prec))?.scale(&ExtScalar::j(prec)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistedClass {
    OneClass,
    Unresolved,
}

/// How the diagonal factor `D′` was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalMethod {
    /// `D′` is the given row of X, all of whose entries are nonzero.
    PivotRow(usize),
    /// `D′` solves `d′_{k′}·d_k = σ₂(d′_k)` pairwise, with a norm-one splitting at the centre.
    NormSplitting,
}

#[derive(Clone, Debug)]
pub struct TwistedReport {
    pub is_twisted_cocycle: bool,
    pub residual: Tensor2<ExtScalar>,
    pub class: TwistedClass,
    pub witness_q: Option<KMatrix>,
    pub witness_d: Option<ExtMatrix>,
    pub method: Option<DiagonalMethod>,
    pub obstruction: Option<bool>,
    pub note: Option<String>,
}

impl TwistedReport {
    /// `Q·X₀·D′`.
    pub fn recombined(&self, precision: usize) -> Option<ExtMatrix> {
        let q = lift(self.witness_q.as_ref()?, AlgebraKind::Ramified);
        let d = self.witness_d.as_ref()?;
        Some(q.mul(&build_x0_twisted(d.rows(), precision)).mul(d))
    }

    pub fn witnesses_recombine(&self, x: &ExtMatrix) -> bool {
        self.recombined(precision_of(x)).is_some_and(|m| x.sub(&m).is_zero())
    }
}

/// Q for a candidate `D′`, when `X·D′⁻¹·X₀⁻¹` lies over K.
fn q_for(x: &ExtMatrix, d: &ExtMatrix, x0_inv: &ExtMatrix) -> Option<KMatrix> {
    descend(&x.mul(&d.inverse().ok()?).mul(x0_inv))
}

/// Solves `d′_{k′}·d_k = σ₂(d′_k)` for the diagonal D with `σ₂(X) = X·S·D`.
fn norm_splitting(d: &[ExtScalar]) -> Option<Vec<ExtScalar>> {
    let n = d.len();
    let one = d[0].one_like();
    let mut out = vec![one.clone(); n];
    for k in 0..n / 2 {
        out[n - 1 - k] = d[k].invert()?;
    }
    if n % 2 == 1 {
        // y = 1 + σ₂(d_c) has σ₂(y)/y = d_c since d_c·σ₂(d_c) = 1
        let c = n / 2;
        let y = &one + &d[c].conjugate();
        out[c] = if y.is_zero() { ExtScalar::j(d[c].precision()) } else { y };
    }
    Some(out)
}

/// Normalizes a twisted cocycle for r_DJ on sl(n) to `X = Q·X₀·D′` with Q over K.
pub fn twisted_normalize_sl(model: &LieModel, x: &ExtMatrix) -> Result<TwistedReport> {
    if model.kind != ModelKind::Sl {
        return Err(Error::InvalidParam("twisted normalization needs an sl(n) model".into()));
    }
    let r = default_rbd(model, &AdmissibleTriple::empty(RootType::A, model.rank()))?;
    let residual = twisted_residual(model, x, &r)?;
    if !residual.is_empty() {
        return Err(Error::NotTwistedCocycle);
    }
    let n = model.n;
    let prec = precision_of(x);
    let mut report = TwistedReport {
        is_twisted_cocycle: true,
        residual,
        class: TwistedClass::Unresolved,
        witness_q: None,
        witness_d: None,
        method: None,
        obstruction: Some(true),
        note: None,
    };
    let d = s_matrix(n, prec).mul(&galois_transport(x)?);
    if !d.is_diagonal() {
        report.note = Some("S·X⁻¹σ₂(X) is not diagonal".into());
        return Ok(report);
    }
    let x0_inv = build_x0_twisted(n, prec).inverse()?;

    // rows in the order 2, 1, 3, 4, …
    let order = std::iter::once(1).chain(std::iter::once(0)).chain(2..n);
    let mut found = None;
    for p in order {
        let row = x.row(p);
        if row.iter().all(|v| !v.is_zero()) {
            let dp = Matrix::diagonal(&row);
            if let Some(q) = q_for(x, &dp, &x0_inv) {
                found = Some((q, dp, DiagonalMethod::PivotRow(p)));
                break;
            }
        }
    }
    if found.is_none() {
        if let Some(dp) = norm_splitting(&d.diag()).map(|v| Matrix::diagonal(&v)) {
            if let Some(q) = q_for(x, &dp, &x0_inv) {
                found = Some((q, dp, DiagonalMethod::NormSplitting));
            }
        }
    }
    let Some((q, dp, method)) = found else {
        report.note = Some("no diagonal factor with X·D′⁻¹·X₀⁻¹ over K".into());
        return Ok(report);
    };
    report.witness_q = Some(q);
    report.witness_d = Some(dp);
    report.method = Some(method);
    if report.witnesses_recombine(x) {
        report.class = TwistedClass::OneClass;
    } else {
        report.note = Some("witness verification failed".into());
    }
    Ok(report)
}

/// `s(Γ₁) = Γ₂` and `s∘τ = τ⁻¹∘s` on Γ₁ for `s(α_i) = α_{r+1−i}`; necessary for a
/// twisted cocycle of r_BD to exist.
pub fn triple_obstruction(t: &AdmissibleTriple) -> bool {
    let r = t.rank;
    let s = |i: usize| r - 1 - i;
    let mut image: Vec<usize> = t.gamma1().into_iter().map(s).collect();
    image.sort_unstable();
    let mut g2 = t.gamma2();
    g2.sort_unstable();
    if image != g2 {
        return false;
    }
    t.tau.iter().all(|(&a, &ta)| {
        let target = s(a);
        let pre = t.tau.iter().find(|(_, &v)| v == target).map(|(&k, _)| k);
        pre == Some(s(ta))
    })
}
