//! Construction of the non-skewsymmetric r-matrix of an admissible triple and its
//! verification oracles.

use std::collections::BTreeMap;

use super::r0::check_r0;
use super::triple::AdmissibleTriple;
use crate::error::{Error, Result};
use crate::lie::{wedge_terms, LieModel, Tensor2};
use crate::scalar::{GaussRat, Scalar};

/// Positive roots (indices) whose support lies in Γ₁, by increasing height.
pub fn gamma1_span_roots(model: &LieModel, t: &AdmissibleTriple) -> Vec<usize> {
    model
        .roots
        .positive_roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.support().iter().all(|i| t.tau.contains_key(i)))
        .map(|(k, _)| k)
        .collect()
}

/// The root index of `τ(β)` for a positive root `β` supported on Γ₁.
fn tau_root(model: &LieModel, t: &AdmissibleTriple, root: usize) -> usize {
    let c = t.apply_coeffs(&model.roots.positive_roots[root].coeffs).expect("root supported on gamma1");
    model.roots.index_of_coeffs(&c).expect("isometry maps roots to roots")
}

/// The Lie algebra isomorphism θ extending `e_{±α} ↦ e_{±τ(α)}` on the root vectors:
/// `θ(e_{±β}) = c · e_{±τ(β)}`. Returns `(τβ, c)` per root β supported on Γ₁, for the
/// positive (`sign = 1`) or negative (`sign = −1`) root vectors.
pub fn theta_table(model: &LieModel, t: &AdmissibleTriple, sign: i64) -> BTreeMap<usize, (usize, GaussRat)> {
    let vec_index = |r: usize| if sign > 0 { model.positive_index(r) } else { model.negative_index(r) };
    let coeff_of = |a: usize, b: usize, target: usize| -> GaussRat {
        model.bracket_basis(a, b).iter().find(|(k, _)| *k == target).map_or(GaussRat::zero(), |x| x.1.clone())
    };
    let mut table: BTreeMap<usize, (usize, GaussRat)> = BTreeMap::new();
    for root in gamma1_span_roots(model, t) {
        let image = tau_root(model, t, root);
        let coeffs = &model.roots.positive_roots[root].coeffs;
        if coeffs.iter().sum::<i64>() == 1 {
            table.insert(root, (image, GaussRat::one()));
            continue;
        }
        // β = β′ + α_i with both in the Γ₁-span: θ(e_β) = θ([e_β′, e_αi]) / N
        let (prev, simple) = (0..coeffs.len())
            .filter(|&i| coeffs[i] > 0 && t.tau.contains_key(&i))
            .find_map(|i| {
                let mut c = coeffs.clone();
                c[i] -= 1;
                model.roots.index_of_coeffs(&c).map(|p| (p, model.roots.simple_index(i)))
            })
            .expect("non-simple root decomposes");
        let n = coeff_of(vec_index(prev), vec_index(simple), vec_index(root));
        let (prev_img, prev_c) = table[&prev].clone();
        let simple_img = table[&simple].0;
        let m = coeff_of(vec_index(prev_img), vec_index(simple_img), vec_index(image));
        table.insert(root, (image, &(&prev_c * &m) / &n));
    }
    table
}

/// `Σ_{α>0} e_α ⊗ e_{−α}`.
pub fn root_part(model: &LieModel) -> Tensor2<GaussRat> {
    Tensor2::from_terms(
        (0..model.num_positive()).map(|r| (model.positive_index(r), model.negative_index(r), GaussRat::one())),
    )
}

/// `Σ_{β ∈ (ZΓ₁)⁺} Σ_{k ≥ 1} e_β ∧ θᵏ(e_{−β})`, with `k` running while `τᵏ(β)` is defined.
pub fn wedge_part(model: &LieModel, t: &AdmissibleTriple) -> Tensor2<GaussRat> {
    let theta = theta_table(model, t, -1);
    let mut out = Tensor2::new();
    for &beta in theta.keys() {
        let mut cur = beta;
        let mut coeff = GaussRat::one();
        while let Some((next, c)) = theta.get(&cur) {
            coeff = &coeff * c;
            cur = *next;
            for (i, j, v) in wedge_terms(model.positive_index(beta), model.negative_index(cur), coeff.clone()) {
                out.add_term(i, j, v);
            }
        }
    }
    out
}

/// `r_BD = r₀ + Σ_{α>0} e_α⊗e_{−α} + Σ_β Σ_k e_β ∧ θᵏ(e_{−β})`.
pub fn build_rbd(model: &LieModel, t: &AdmissibleTriple, r0: &Tensor2<GaussRat>) -> Result<Tensor2<GaussRat>> {
    if !t.is_valid() {
        return Err(Error::InvalidTriple(t.validate().join("; ")));
    }
    if (t.root_type, t.rank) != (model.roots.root_type, model.rank()) {
        return Err(Error::InvalidTriple("triple and algebra have different root systems".into()));
    }
    check_r0(model, t, r0)?;
    Ok(r0.add(&root_part(model)).add(&wedge_part(model, t)))
}

/// `r + r²¹ = c·Ω` exactly at precision.
pub fn verify_symmetry<T: Scalar>(model: &LieModel, r: &Tensor2<T>, c: &T) -> bool {
    symmetry_residual(model, r, c).is_empty()
}

/// `r + r²¹ − c·Ω`.
pub fn symmetry_residual<T: Scalar>(model: &LieModel, r: &Tensor2<T>, c: &T) -> Tensor2<T> {
    let (omega, _) = model.casimir();
    let scaled = omega.map(|x| c.clone() * c.embed(x));
    r.add(&r.flip()).sub(&scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ModelKind, RootType};
    use crate::rmatrix::r0::solve_r0;

    #[test]
    fn sl2_drinfeld_jimbo() {
        let m = LieModel::new(ModelKind::Sl, 2).unwrap();
        let t = AdmissibleTriple::empty(RootType::A, 1);
        let p = solve_r0(&m, &t).unwrap();
        let r = build_rbd(&m, &t, &p.r0).unwrap();
        let expected = Tensor2::from_terms([(0, 1, GaussRat::one()), (2, 2, GaussRat::ratio(1, 4))]);
        assert_eq!(r, expected);
        assert!(m.cybe(&r).is_empty());
        assert!(verify_symmetry(&m, &r, &GaussRat::one()));
    }

    #[test]
    fn a2_single_wedge() {
        let m = LieModel::new(ModelKind::Sl, 3).unwrap();
        let t = AdmissibleTriple::new(RootType::A, 2, [(0, 1)]);
        let w = wedge_part(&m, &t);
        assert_eq!(w.len(), 2);
        assert_eq!(w.get(m.positive_index(0), m.negative_index(1)), Some(&GaussRat::one()));
    }

    #[test]
    fn theta_positive_and_negative_are_dual() {
        let m = LieModel::new(ModelKind::Sl, 4).unwrap();
        let t = AdmissibleTriple::new(RootType::A, 3, [(0, 1), (1, 2)]);
        let pos = theta_table(&m, &t, 1);
        let neg = theta_table(&m, &t, -1);
        for (k, (img, c)) in &pos {
            assert_eq!(neg[k].0, *img);
            assert!((c * &neg[k].1).is_one());
        }
    }
}
