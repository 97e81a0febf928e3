//! Lagrangian subalgebras of g ⊗ A with respect to `Q(x, y) = t(B(x, y))`, computed over
//! K in the coordinates `g ⊗ A ≅ K^{2d}`.

use serde::Serialize;

use super::real_form::l_basis;
use crate::error::{Error, Result};
use crate::lie::{form_q_eval, LieModel};
use crate::linalg::{rank, solve, ExtMatrix, Matrix};
use crate::scalar::{AlgebraKind, ExtScalar, LaurentScalar};

/// A K-subspace of g ⊗ A spanned by `generators`.
#[derive(Clone, Debug)]
pub struct SubspaceSpec {
    pub label: String,
    pub generators: Vec<ExtMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LagrangianCheck {
    pub isotropic: bool,
    pub subalgebra: bool,
    pub transversal: bool,
    /// Isotropic of K-dimension `dim g`.
    pub lagrangian: bool,
}

impl LagrangianCheck {
    pub fn all(&self) -> bool {
        self.isotropic && self.subalgebra && self.transversal && self.lagrangian
    }
}

fn k_vector(model: &LieModel, m: &ExtMatrix) -> Result<Vec<LaurentScalar>> {
    let c = model.coordinates(m)?;
    Ok(c.iter().map(|x| x.a.clone()).chain(c.iter().map(|x| x.b.clone())).collect())
}

fn columns(vectors: &[Vec<LaurentScalar>]) -> Matrix<LaurentScalar> {
    let rows = vectors.first().map_or(0, |v| v.len());
    Matrix::from_fn(rows, vectors.len(), |i, k| vectors[k][i].clone())
}

fn check_kind(spec: &SubspaceSpec, kind: AlgebraKind) -> Result<()> {
    if spec.generators.iter().flat_map(|g| g.entries()).any(|x| x.kind != kind) {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

/// Isotropy, closure under bracket, and transversality to `l_ref`.
pub fn lagrangian_check(
    model: &LieModel,
    w: &SubspaceSpec,
    kind: AlgebraKind,
    l_ref: &SubspaceSpec,
) -> Result<LagrangianCheck> {
    check_kind(w, kind)?;
    check_kind(l_ref, kind)?;
    let wv: Vec<Vec<LaurentScalar>> = w.generators.iter().map(|g| k_vector(model, g)).collect::<Result<_>>()?;
    let lv: Vec<Vec<LaurentScalar>> = l_ref.generators.iter().map(|g| k_vector(model, g)).collect::<Result<_>>()?;
    if wv.is_empty() || rank(&columns(&wv)) != wv.len() || rank(&columns(&lv)) != lv.len() {
        return Err(Error::DependentGenerators);
    }

    let coords: Vec<Vec<ExtScalar>> = w.generators.iter().map(|g| model.coordinates(g)).collect::<Result<_>>()?;
    let mut isotropic = true;
    for a in 0..coords.len() {
        for b in a..coords.len() {
            if !form_q_eval(model, &coords[a], &coords[b])?.is_zero() {
                isotropic = false;
            }
        }
    }

    let span = columns(&wv);
    let mut subalgebra = true;
    'outer: for a in 0..w.generators.len() {
        for b in a + 1..w.generators.len() {
            let (x, y) = (&w.generators[a], &w.generators[b]);
            let br = x.mul(y).sub(&y.mul(x));
            if solve(&span, &k_vector(model, &br)?).is_none() {
                subalgebra = false;
                break 'outer;
            }
        }
    }

    let total = 2 * model.dim();
    let mut both = wv.clone();
    both.extend(lv.iter().cloned());
    let transversal = wv.len() + lv.len() == total && rank(&columns(&both)) == total;
    let lagrangian = isotropic && wv.len() == model.dim();
    Ok(LagrangianCheck { isotropic, subalgebra, transversal, lagrangian })
}

fn unit(n: usize, i: usize, k: usize, v: &ExtScalar) -> ExtMatrix {
    let mut m = Matrix::zeros_like(v, n, n);
    m.set(i, k, v.clone());
    m
}

/// The embedded real form L of sl(n, K[j]) as a subspace.
pub fn l_subspace(model: &LieModel, precision: usize) -> SubspaceSpec {
    SubspaceSpec { label: "L".into(), generators: l_basis(model, precision) }
}

/// g(K) embedded in g ⊗ A.
pub fn base_subspace(model: &LieModel, kind: AlgebraKind, precision: usize) -> SubspaceSpec {
    let one = ExtScalar::one(kind, precision);
    SubspaceSpec { label: "g(K)".into(), generators: model.basis().iter().map(|a| Matrix::embed(&one, a)).collect() }
}

/// `N⁺ = span_K{e_ik, j·e_ik : i < k}`.
pub fn n_plus(n: usize, precision: usize) -> SubspaceSpec {
    let one = ExtScalar::one(AlgebraKind::Ramified, precision);
    let j = ExtScalar::j(precision);
    let mut gens = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            gens.push(unit(n, i, k, &one));
            gens.push(unit(n, i, k, &j));
        }
    }
    SubspaceSpec { label: "N+".into(), generators: gens }
}

/// A K-basis of the Cartan `H = L ∩ diag` of L.
pub fn l_cartan(n: usize, precision: usize) -> Vec<ExtMatrix> {
    let one = ExtScalar::one(AlgebraKind::Ramified, precision);
    let j = ExtScalar::j(precision);
    let zero = ExtScalar::zero(AlgebraKind::Ramified, precision);
    let diag = |f: &dyn Fn(usize) -> ExtScalar| Matrix::diagonal(&(0..n).map(f).collect::<Vec<_>>());
    let mut out = Vec::new();
    // j(e_kk − e_k′k′)
    for k in 0..n / 2 {
        out.push(diag(&|i| {
            if i == k {
                j.clone()
            } else if i == n - 1 - k {
                -j.clone()
            } else {
                zero.clone()
            }
        }));
    }
    // K-valued diagonals symmetric under k ↦ k′, made traceless
    let mut sym: Vec<(ExtMatrix, i64)> = (0..n / 2)
        .map(|k| (diag(&|i| if i == k || i == n - 1 - k { one.clone() } else { zero.clone() }), 2))
        .collect();
    if n % 2 == 1 {
        sym.push((diag(&|i| if i == n / 2 { one.clone() } else { zero.clone() }), 1));
    }
    let (first, t0) = sym[0].clone();
    for (m, t) in sym.iter().skip(1) {
        let a = ExtScalar::from_base(AlgebraKind::Ramified, LaurentScalar::from_int(t0, precision));
        let b = ExtScalar::from_base(AlgebraKind::Ramified, LaurentScalar::from_int(*t, precision));
        out.push(m.scale(&a).sub(&first.scale(&b)));
    }
    out
}

/// `W₀ = j·H ⊕ N⁺`.
pub fn default_w0(n: usize, precision: usize) -> SubspaceSpec {
    let j = ExtScalar::j(precision);
    let mut gens: Vec<ExtMatrix> = l_cartan(n, precision).iter().map(|h| h.scale(&j)).collect();
    gens.extend(n_plus(n, precision).generators);
    SubspaceSpec { label: "W0".into(), generators: gens }
}
