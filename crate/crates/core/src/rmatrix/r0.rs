//! The continuous parameter: `r₀ ∈ h⊗h` with `r₀ + r₀²¹ = Ω₀` and
//! `(τ(α)⊗1 + 1⊗α)(r₀) = 0` for every `α ∈ Γ₁`.

use super::triple::AdmissibleTriple;
use crate::error::{Error, Result};
use crate::lie::{LieModel, Tensor2};
use crate::linalg::{nullspace, solve, Matrix};
use crate::scalar::GaussRat;

#[derive(Clone, Debug)]
pub struct ContinuousParam {
    /// A particular solution, `½Ω₀ + s`.
    pub r0: Tensor2<GaussRat>,
    /// Basis of skew Cartan tensors annihilated by the constraints.
    pub free_basis: Vec<Tensor2<GaussRat>>,
}

impl ContinuousParam {
    pub fn free_dim(&self) -> usize {
        self.free_basis.len()
    }

    /// `r₀ + Σ c_i · free_i`.
    pub fn member(&self, coeffs: &[GaussRat]) -> Tensor2<GaussRat> {
        let mut r = self.r0.clone();
        for (c, b) in coeffs.iter().zip(&self.free_basis) {
            r = r.add(&b.scale(c));
        }
        r
    }
}

/// `(β⊗1)(t)`: contracts the first leg of a Cartan tensor with the root whose value on
/// Cartan generator k is `values[k]`; returns coefficients on Cartan generators.
fn contract_first(model: &LieModel, t: &Tensor2<GaussRat>, values: &[GaussRat]) -> Vec<GaussRat> {
    let c0 = model.cartan_index(0);
    let mut out = vec![GaussRat::zero(); model.rank()];
    for (a, b, v) in t.iter() {
        if model.is_cartan(a) && model.is_cartan(b) {
            out[b - c0] = &out[b - c0] + &(v * &values[a - c0]);
        }
    }
    out
}

fn simple_values(model: &LieModel, i: usize) -> Vec<GaussRat> {
    (0..model.rank()).map(|k| model.simple_root_value(i, k).clone()).collect()
}

/// Residuals of the constraints `(τ(α)⊗1 + 1⊗α)(r₀)`, one vector per `α ∈ Γ₁`.
pub fn r0_constraint_residuals(model: &LieModel, t: &AdmissibleTriple, r0: &Tensor2<GaussRat>) -> Vec<Vec<GaussRat>> {
    t.tau
        .iter()
        .map(|(&a, &ta)| {
            let left = contract_first(model, r0, &simple_values(model, ta));
            let right = contract_first(model, &r0.flip(), &simple_values(model, a));
            left.iter().zip(&right).map(|(x, y)| x + y).collect()
        })
        .collect()
}

/// Checks that `r0` is supported on h⊗h, symmetrizes to Ω₀, and satisfies the constraints.
pub fn check_r0(model: &LieModel, t: &AdmissibleTriple, r0: &Tensor2<GaussRat>) -> Result<()> {
    if r0.iter().any(|(a, b, _)| !model.is_cartan(a) || !model.is_cartan(b)) {
        return Err(Error::InvalidParam("r0 has entries outside the Cartan square".into()));
    }
    let (_, omega0) = model.casimir();
    if r0.add(&r0.flip()) != omega0 {
        return Err(Error::InvalidParam("r0 + r0^21 differs from the Cartan part of the Casimir".into()));
    }
    if r0_constraint_residuals(model, t, r0).iter().flatten().any(|x| !x.is_zero()) {
        return Err(Error::InvalidParam("r0 violates (tau(a) x 1 + 1 x a)(r0) = 0".into()));
    }
    Ok(())
}

/// `r₀ = ½Ω₀ + s` from a skew Cartan tensor `s`.
pub fn r0_from_skew(model: &LieModel, s: &Tensor2<GaussRat>) -> Tensor2<GaussRat> {
    let (_, omega0) = model.casimir();
    omega0.scale(&GaussRat::ratio(1, 2)).add(s)
}

/// Solves for the affine space of continuous parameters of an admissible triple.
pub fn solve_r0(model: &LieModel, t: &AdmissibleTriple) -> Result<ContinuousParam> {
    if !t.is_valid() {
        return Err(Error::InvalidTriple(t.validate().join("; ")));
    }
    let r = model.rank();
    let c0 = model.cartan_index(0);
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|k| (k + 1..r).map(move |l| (k, l))).collect();
    let unknown = |k: usize, l: usize| -> Option<(usize, GaussRat)> {
        match k.cmp(&l) {
            std::cmp::Ordering::Less => Some((pairs.iter().position(|&p| p == (k, l)).unwrap(), GaussRat::one())),
            std::cmp::Ordering::Greater => Some((pairs.iter().position(|&p| p == (l, k)).unwrap(), GaussRat::from_int(-1))),
            std::cmp::Ordering::Equal => None,
        }
    };
    let skew = |coeffs: &[GaussRat]| -> Tensor2<GaussRat> {
        let mut s = Tensor2::new();
        for (p, &(k, l)) in pairs.iter().enumerate() {
            s.add_term(c0 + k, c0 + l, coeffs[p].clone());
            s.add_term(c0 + l, c0 + k, -&coeffs[p]);
        }
        s
    };

    // rows: (α, m) for the h_m-component of (τα⊗1 + 1⊗α)(½Ω₀ + s)
    let half_omega0 = r0_from_skew(model, &Tensor2::new());
    let base = r0_constraint_residuals(model, t, &half_omega0);
    let mut rows: Vec<Vec<GaussRat>> = Vec::new();
    let mut rhs: Vec<GaussRat> = Vec::new();
    for (idx, (&a, &ta)) in t.tau.iter().enumerate() {
        let tv = simple_values(model, ta);
        let av = simple_values(model, a);
        for m in 0..r {
            let mut row = vec![GaussRat::zero(); pairs.len()];
            // Σ_k s_{km} τα(h_k)
            for k in 0..r {
                if let Some((p, sign)) = unknown(k, m) {
                    row[p] = &row[p] + &(&sign * &tv[k]);
                }
            }
            // Σ_l s_{ml} α(h_l)
            for l in 0..r {
                if let Some((p, sign)) = unknown(m, l) {
                    row[p] = &row[p] + &(&sign * &av[l]);
                }
            }
            rows.push(row);
            rhs.push(-&base[idx][m]);
        }
    }

    let (particular, free) = if pairs.is_empty() {
        if rhs.iter().any(|x| !x.is_zero()) {
            return Err(Error::Inconsistent);
        }
        (Vec::new(), Vec::new())
    } else if rows.is_empty() {
        let free = (0..pairs.len())
            .map(|p| (0..pairs.len()).map(|q| if p == q { GaussRat::one() } else { GaussRat::zero() }).collect())
            .collect();
        (vec![GaussRat::zero(); pairs.len()], free)
    } else {
        let a = Matrix::from_rows(rows);
        let x = solve(&a, &rhs).ok_or(Error::Inconsistent)?;
        (x, nullspace(&a))
    };

    let r0 = r0_from_skew(model, &skew(&particular));
    check_r0(model, t, &r0)?;
    let free_basis: Vec<Tensor2<GaussRat>> = free.iter().map(|v: &Vec<GaussRat>| skew(v)).collect();
    for b in &free_basis {
        debug_assert!(r0_constraint_residuals(model, t, b).iter().flatten().all(|x| x.is_zero()));
    }
    Ok(ContinuousParam { r0, free_basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ModelKind, RootType};

    #[test]
    fn drinfeld_jimbo_parameters() {
        let m = LieModel::new(ModelKind::Sl, 2).unwrap();
        let p = solve_r0(&m, &AdmissibleTriple::empty(RootType::A, 1)).unwrap();
        assert_eq!(p.free_dim(), 0);
        assert_eq!(p.r0, Tensor2::from_terms([(2, 2, GaussRat::ratio(1, 4))]));

        let m3 = LieModel::new(ModelKind::Sl, 3).unwrap();
        let p3 = solve_r0(&m3, &AdmissibleTriple::empty(RootType::A, 2)).unwrap();
        assert_eq!(p3.free_dim(), 1);
    }

    #[test]
    fn a2_triple_fixes_the_skew_part() {
        let m = LieModel::new(ModelKind::Sl, 3).unwrap();
        let t = AdmissibleTriple::new(RootType::A, 2, [(0, 1)]);
        let p = solve_r0(&m, &t).unwrap();
        assert_eq!(p.free_dim(), 0);
        check_r0(&m, &t, &p.r0).unwrap();
    }
}
