use serde::Serialize;

use crate::lie::Tensor2;
use crate::linalg::{lift, ExtMatrix, KMatrix};
use crate::scalar::{AlgebraKind, ExtScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CocycleClass {
    Trivial,
    Nontrivial,
    Unresolved,
}

/// `X⁻¹ σ(X)` for a Galois generator and the residual `(Ad ⊗ Ad)(r) − r` it leaves.
#[derive(Clone, Debug)]
pub struct GaloisCheck {
    pub generator: String,
    pub transport: ExtMatrix,
    pub residual: Tensor2<ExtScalar>,
}

/// Outcome of a cocycle test and, when requested, of a normalization.
///
/// For `Trivial`: `X = witness_q · witness_c`. For `Nontrivial`:
/// `X = witness_q · witness_x0 · witness_c`.
#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub is_cocycle: bool,
    pub galois_checks: Vec<GaloisCheck>,
    pub class: Option<CocycleClass>,
    pub witness_q: Option<KMatrix>,
    pub witness_c: Option<ExtMatrix>,
    pub witness_x0: Option<ExtMatrix>,
    pub note: Option<String>,
}

impl CocycleReport {
    pub fn unclassified(is_cocycle: bool, galois_checks: Vec<GaloisCheck>) -> Self {
        CocycleReport {
            is_cocycle,
            galois_checks,
            class: None,
            witness_q: None,
            witness_c: None,
            witness_x0: None,
            note: None,
        }
    }

    /// The product of the witnesses, when present.
    pub fn recombined(&self) -> Option<ExtMatrix> {
        let q = lift(self.witness_q.as_ref()?, AlgebraKind::Ramified);
        let c = self.witness_c.as_ref()?;
        Some(match &self.witness_x0 {
            Some(x0) => q.mul(x0).mul(c),
            None => q.mul(c),
        })
    }

    /// `X − recombined()`, the reconstruction certificate.
    pub fn reconstruction_residual(&self, x: &ExtMatrix) -> Option<ExtMatrix> {
        self.recombined().map(|m| x.sub(&m))
    }

    pub fn witnesses_recombine(&self, x: &ExtMatrix) -> bool {
        self.reconstruction_residual(x).is_some_and(|r| r.is_zero())
    }
}
