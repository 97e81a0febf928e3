//! Cocycles for r-matrices on the split orthogonal algebras o(m).

use super::factor::{factor_qd_with, is_bd_cocycle, matrix_precision};
use super::report::{CocycleClass, CocycleReport};
use super::sl::{default_rbd, finish};
use crate::error::{Error, Result};
use crate::lie::{group_member, split_form, GroupKind, LieModel, ModelKind, RootType, Tensor2};
use crate::linalg::{nullspace, ExtMatrix, KMatrix, Matrix};
use crate::rmatrix::AdmissibleTriple;
use crate::scalar::{AlgebraKind, ExtScalar, GaussRat, LaurentScalar};

/// The D-type triple `α_{r−1} ↦ α_r` of rank `r`.
pub fn d_example_triple(rank: usize) -> AdmissibleTriple {
    AdmissibleTriple::new(RootType::D, rank, [(rank - 2, rank - 1)])
}

/// Column data of a cocycle in O(m): `X = Q·D` and `k_i = B(q_i, q_{m+1−i})`.
struct OrthogonalSplit {
    q: KMatrix,
    d: Vec<ExtScalar>,
    k: Vec<LaurentScalar>,
}

fn check_cocycle(model: &LieModel, x: &ExtMatrix, r: &Tensor2<GaussRat>) -> Result<CocycleReport> {
    if model.kind != ModelKind::O {
        return Err(Error::InvalidParam("an o(m) model is required".into()));
    }
    if !x.is_square() || x.rows() != model.n || !group_member(x, GroupKind::O) {
        return Err(Error::NotOrthogonal);
    }
    let report = is_bd_cocycle(model, x, r)?;
    if !report.is_cocycle {
        return Err(Error::NotCocycle);
    }
    Ok(report)
}

fn orthogonal_split(x: &ExtMatrix, report: &CocycleReport) -> Result<OrthogonalSplit> {
    let (q, d) = factor_qd_with(x, &report.galois_checks[0].transport)?;
    let m = q.rows();
    let k = (0..m).map(|i| split_form(&q.col(i), &q.col(m - 1 - i))).collect();
    Ok(OrthogonalSplit { q, d: d.diag(), k })
}

fn ext(x: &LaurentScalar) -> ExtScalar {
    ExtScalar::from_base(AlgebraKind::Ramified, x.clone())
}

/// `Q₁ = diag(k₁⁻¹, …, k_h⁻¹, centre…, 1, …, 1)` and `D₁ = Q₁⁻¹·D`, where `h = ⌊m/2⌋`.
/// For odd m the centre slot of Q₁ is `centre` and that of D₁ is `d_c / centre`.
fn rescale(split: &OrthogonalSplit, centre: Option<&ExtScalar>) -> Result<(KMatrix, ExtMatrix)> {
    let m = split.q.rows();
    let half = m / 2;
    let prec = split.q.get(0, 0).precision();
    let mut q1 = vec![LaurentScalar::one(prec); m];
    let mut d1 = split.d.clone();
    for i in 0..half {
        q1[i] = split.k[i].invert()?;
        d1[i] = split.d[i].scale_base(&split.k[i]);
    }
    if let Some(c) = centre {
        q1[half] = c.base_part().ok_or(Error::NotReducible)?;
        d1[half] = &split.d[half] * &c.invert().ok_or(Error::Singular)?;
    }
    Ok((split.q.mul(&Matrix::diagonal(&q1)), Matrix::diagonal(&d1)))
}

fn orthogonal_witness(mut report: CocycleReport, q: KMatrix) -> CocycleReport {
    if !group_member(&q, GroupKind::O) {
        report.note = Some("rescaled K-factor is not orthogonal".into());
    }
    report.witness_q = Some(q);
    report
}

fn seal(model: &LieModel, x: &ExtMatrix, r: &Tensor2<GaussRat>, report: CocycleReport, class: CocycleClass) -> Result<CocycleReport> {
    let q_ok = report.witness_q.as_ref().is_some_and(|q| group_member(q, GroupKind::O));
    let mut report = finish(model, x, r, report, class)?;
    if !q_ok {
        report.class = Some(CocycleClass::Unresolved);
    }
    Ok(report)
}

/// Cocycles for r_DJ on o(2n) are trivial: `X = (Q·Q₁)·D₁`.
pub fn normalize_o_even(model: &LieModel, x: &ExtMatrix) -> Result<CocycleReport> {
    if model.n % 2 != 0 {
        return Err(Error::InvalidParam("normalize_o_even needs even size".into()));
    }
    let r = default_rbd(model, &AdmissibleTriple::empty(model.roots.root_type, model.rank()))?;
    let report = check_cocycle(model, x, &r)?;
    let split = orthogonal_split(x, &report)?;
    let (q, d1) = rescale(&split, None)?;
    let mut report = orthogonal_witness(report, q);
    report.witness_c = Some(d1);
    seal(model, x, &r, report, CocycleClass::Trivial)
}

/// Cocycles for r_DJ on o(2n+1): the class is decided by the valuation parity of
/// `d_{n+1}² = k_{n+1}⁻¹`.
pub fn classify_o_odd(model: &LieModel, x: &ExtMatrix) -> Result<CocycleReport> {
    if model.n % 2 != 1 {
        return Err(Error::InvalidParam("classify_o_odd needs odd size".into()));
    }
    let r = default_rbd(model, &AdmissibleTriple::empty(model.roots.root_type, model.rank()))?;
    let report = check_cocycle(model, x, &r)?;
    let split = orthogonal_split(x, &report)?;
    let c = model.n / 2;
    let dc = split.d[c].clone();
    let dc_sq = split.k[c].invert()?;
    let parity = dc_sq.valuation().ok_or(Error::Singular)?.rem_euclid(2);

    if parity == 0 {
        if !dc.is_base() {
            let mut report = report;
            report.class = Some(CocycleClass::Unresolved);
            report.note = Some("centre pivot has even square valuation but is not in K".into());
            return Ok(report);
        }
        let (q, d1) = rescale(&split, Some(&dc))?;
        let mut report = orthogonal_witness(report, q);
        report.witness_c = Some(d1);
        return seal(model, x, &r, report, CocycleClass::Trivial);
    }

    // d_c = j·u with u ∈ K; s = u·q_c has B(s, s) = ħ⁻¹
    let prec = matrix_precision(x);
    let j = ExtScalar::j(prec);
    let mut report = report;
    let Some(u) = (&dc * &j.invert().ok_or(Error::Singular)?).base_part() else {
        report.class = Some(CocycleClass::Unresolved);
        report.note = Some("centre pivot is neither in K nor in jK".into());
        return Ok(report);
    };
    let s: Vec<LaurentScalar> = split.q.col(c).iter().map(|v| v * &u).collect();
    let x0 = match build_x0_odd(model.rank(), &s) {
        Ok(x0) => x0,
        Err(e) => {
            report.class = Some(CocycleClass::Unresolved);
            report.note = Some(format!("no representative X0 for this cocycle: {e}"));
            return Ok(report);
        }
    };
    let (_, mut d1) = rescale(&split, None)?;
    d1.set(c, c, ExtScalar::one(AlgebraKind::Ramified, prec));
    let q2 = x.mul(&d1.inverse()?).mul(&x0.inverse()?);
    let Some(q2) = crate::linalg::descend(&q2) else {
        report.class = Some(CocycleClass::Unresolved);
        report.note = Some("X·D1⁻¹·X0⁻¹ is not over K".into());
        return Ok(report);
    };
    let mut report = orthogonal_witness(report, q2);
    report.witness_x0 = Some(x0);
    report.witness_c = Some(d1);
    seal(model, x, &r, report, CocycleClass::Nontrivial)
}

/// `(1, 0, …, 0, ħ⁻¹/2)`, a vector of norm `ħ⁻¹` for the split form on K^{2n+1}.
pub fn default_x0_vector(rank: usize, precision: usize) -> Vec<LaurentScalar> {
    let m = 2 * rank + 1;
    let mut s = vec![LaurentScalar::zero(precision); m];
    s[0] = LaurentScalar::one(precision);
    s[m - 1] = LaurentScalar::monomial(GaussRat::ratio(1, 2), -1, precision);
    s
}

fn form_on(u: &[LaurentScalar], v: &[LaurentScalar]) -> LaurentScalar {
    split_form(u, v)
}

fn axpy(a: &LaurentScalar, x: &[LaurentScalar], y: &[LaurentScalar]) -> Vec<LaurentScalar> {
    x.iter().zip(y).map(|(p, q)| &(a * p) + q).collect()
}

/// An orthogonal basis of the span of `vectors` with the norms of its members.
fn diagonalize(mut vectors: Vec<Vec<LaurentScalar>>) -> Result<Vec<(Vec<LaurentScalar>, LaurentScalar)>> {
    let mut out = Vec::new();
    while !vectors.is_empty() {
        let pos = match vectors.iter().position(|v| !form_on(v, v).is_zero()) {
            Some(p) => p,
            None => {
                let (a, b) = (0..vectors.len())
                    .flat_map(|a| (a + 1..vectors.len()).map(move |b| (a, b)))
                    .find(|&(a, b)| !form_on(&vectors[a], &vectors[b]).is_zero())
                    .ok_or(Error::Singular)?;
                let one = LaurentScalar::one(vectors[a][0].precision());
                vectors[a] = axpy(&one, &vectors[b], &vectors[a]);
                a
            }
        };
        let u = vectors.remove(pos);
        let norm = form_on(&u, &u);
        let inv = norm.invert()?;
        for w in vectors.iter_mut() {
            let c = -(&form_on(w, &u) * &inv);
            *w = axpy(&c, &u, w);
        }
        out.push((u, norm));
    }
    Ok(out)
}

/// `√x` for x of even valuation.
fn sqrt_even(x: &LaurentScalar) -> Result<LaurentScalar> {
    let v = x.valuation().ok_or(Error::Singular)?;
    Ok(x.shift(-v).sqrt_unit()?.shift(v / 2))
}

/// Completes `s` (with `B(s, s) = ħ⁻¹`) to `X₀ ∈ O(2n+1, K[j])` whose centre column is
/// `j·s` and whose other columns form a hyperbolic basis of `s⊥` over K.
///
/// Over K = C((ħ)) the complement `s⊥` has discriminant `(−1)ⁿ·ħ` up to squares, so a
/// hyperbolic basis over K does not exist and the result is `AnisotropicComplement`; the
/// search is carried out anyway and reports where it stops.
pub fn build_x0_odd(rank: usize, s: &[LaurentScalar]) -> Result<ExtMatrix> {
    let m = 2 * rank + 1;
    if s.len() != m {
        return Err(Error::Shape(format!("expected a vector of length {m}")));
    }
    let prec = s.iter().map(|v| v.precision()).min().unwrap_or(crate::scalar::DEFAULT_PRECISION);
    if form_on(s, s) != LaurentScalar::hbar(prec).invert()? {
        return Err(Error::BadNorm);
    }
    let row: Vec<LaurentScalar> = (0..m).map(|i| s[m - 1 - i].clone()).collect();
    let perp = nullspace(&Matrix::from_rows(vec![row]));
    let diag = diagonalize(perp)?;

    let (even, odd): (Vec<_>, Vec<_>) =
        diag.into_iter().partition(|(_, a)| a.valuation().is_some_and(|v| v.rem_euclid(2) == 0));
    if even.len() % 2 == 1 {
        return Err(Error::AnisotropicComplement);
    }
    let mut pairs = Vec::new();
    for group in [even, odd] {
        for p in group.chunks(2) {
            let ((ua, aa), (ub, ab)) = (&p[0], &p[1]);
            let r = sqrt_even(&-(ab / aa))?;
            let v = axpy(&r, ua, ub);
            let neg_ub: Vec<LaurentScalar> = ub.iter().map(|x| -x).collect();
            let w0 = axpy(&r, ua, &neg_ub);
            let scale = (ab * &LaurentScalar::from_int(-2, prec)).invert()?;
            let w: Vec<LaurentScalar> = w0.iter().map(|x| x * &scale).collect();
            pairs.push((v, w));
        }
    }
    let j = ExtScalar::j(prec);
    let mut cols: Vec<Vec<ExtScalar>> = vec![Vec::new(); m];
    for (i, (v, w)) in pairs.iter().enumerate() {
        cols[i] = v.iter().map(ext).collect();
        cols[m - 1 - i] = w.iter().map(ext).collect();
    }
    cols[rank] = s.iter().map(|v| &ext(v) * &j).collect();
    let x0 = Matrix::from_fn(m, m, |i, k| cols[k][i].clone());
    if !group_member(&x0, GroupKind::O) {
        return Err(Error::NotOrthogonal);
    }
    Ok(x0)
}

/// Cocycles for the D-type triple `α_{r−1} ↦ α_r` on o(2r). With `X = Q'·D₁`,
/// `Q' ∈ O(2r, K)`, the slot `s = (D₁)_{r}` satisfies `σ₂(s) = ±s`; the minus sign gives
/// the class of `diag(1, …, j, j⁻¹, …, 1)`.
pub fn classify_o_even_example(model: &LieModel, x: &ExtMatrix) -> Result<CocycleReport> {
    if model.roots.root_type != RootType::D {
        return Err(Error::InvalidParam("classify_o_even_example needs o(2r), r ≥ 4".into()));
    }
    let rank = model.rank();
    let r = default_rbd(model, &d_example_triple(rank))?;
    let report = check_cocycle(model, x, &r)?;
    let split = orthogonal_split(x, &report)?;
    let (q, d1) = rescale(&split, None)?;
    let prec = matrix_precision(x);
    let slot = d1.get(rank - 1, rank - 1).clone();
    let one = ExtScalar::one(AlgebraKind::Ramified, prec);

    let mut c = d1.clone();
    c.set(rank - 1, rank - 1, one.clone());
    c.set(rank, rank, one.clone());
    let pair = |kappa: LaurentScalar| -> Result<KMatrix> {
        let mut e = vec![LaurentScalar::one(prec); 2 * rank];
        e[rank] = kappa.invert()?;
        e[rank - 1] = kappa;
        Ok(Matrix::diagonal(&e))
    };

    let mut report = report;
    if let Some(s) = slot.base_part() {
        report = orthogonal_witness(report, q.mul(&pair(s)?));
        report.witness_c = Some(c);
        return seal(model, x, &r, report, CocycleClass::Trivial);
    }
    let j = ExtScalar::j(prec);
    match (&slot * &j.invert().ok_or(Error::Singular)?).base_part() {
        Some(kappa) => {
            let mut x0 = vec![one; 2 * rank];
            x0[rank - 1] = j.clone();
            x0[rank] = j.invert().ok_or(Error::Singular)?;
            report = orthogonal_witness(report, q.mul(&pair(kappa)?));
            report.witness_x0 = Some(Matrix::diagonal(&x0));
            report.witness_c = Some(c);
            seal(model, x, &r, report, CocycleClass::Nontrivial)
        }
        None => {
            report.class = Some(CocycleClass::Unresolved);
            report.note = Some("centre slot is neither in K nor in jK".into());
            Ok(report)
        }
    }
}

/// `diag(1, …, 1, j, j⁻¹, 1, …, 1)` in O(2r).
pub fn d_example_x0(rank: usize, precision: usize) -> ExtMatrix {
    let one = ExtScalar::one(AlgebraKind::Ramified, precision);
    let j = ExtScalar::j(precision);
    let mut d = vec![one; 2 * rank];
    d[rank] = j.invert().expect("j is invertible");
    d[rank - 1] = j;
    Matrix::diagonal(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: usize = 8;

    fn e(a: i64, b: i64) -> ExtScalar {
        ExtScalar::ramified(LaurentScalar::from_int(a, P), LaurentScalar::from_int(b, P))
    }

    #[test]
    fn o4_diagonal_j() {
        let m = LieModel::new(ModelKind::O, 4).unwrap();
        let j = e(0, 1);
        let x = Matrix::diagonal(&[j.clone(), e(1, 0), e(1, 0), j.invert().unwrap()]);
        let rep = normalize_o_even(&m, &x).unwrap();
        assert_eq!(rep.class, Some(CocycleClass::Trivial));
        assert!(rep.witnesses_recombine(&x));
    }

    #[test]
    fn o5_identity_and_x0() {
        let m = LieModel::new(ModelKind::O, 5).unwrap();
        let x = Matrix::identity_like(&e(1, 0), 5);
        assert_eq!(classify_o_odd(&m, &x).unwrap().class, Some(CocycleClass::Trivial));
        let s = default_x0_vector(2, P);
        assert_eq!(build_x0_odd(2, &s).unwrap_err(), Error::AnisotropicComplement);
        let mut bad = s.clone();
        bad[0] = LaurentScalar::from_int(2, P);
        assert_eq!(build_x0_odd(2, &bad).unwrap_err(), Error::BadNorm);
    }

    #[test]
    fn d4_example_classes() {
        let m = LieModel::new(ModelKind::O, 8).unwrap();
        let x = Matrix::identity_like(&e(1, 0), 8);
        assert_eq!(classify_o_even_example(&m, &x).unwrap().class, Some(CocycleClass::Trivial));
        let x0 = d_example_x0(4, P);
        let rep = classify_o_even_example(&m, &x0).unwrap();
        assert_eq!(rep.class, Some(CocycleClass::Nontrivial));
        assert!(rep.witnesses_recombine(&x0));
    }
}
