//! The embedded real form `L = {Z : Z = S·Z̄·S, tr Z = 0} ⊂ sl(n, K[j])` and the matrix
//! `X₀` conjugating it onto sl(n, K).

use crate::lie::{antidiagonal, LieModel, ModelKind, Tensor2};
use crate::linalg::{ExtMatrix, Matrix};
use crate::rmatrix::{build_rbd, solve_r0, AdmissibleTriple};
use crate::scalar::{AlgebraKind, ExtScalar, GaussRat};

/// The antidiagonal S over K[j].
pub fn s_matrix(n: usize, precision: usize) -> ExtMatrix {
    Matrix::embed(&ExtScalar::one(AlgebraKind::Ramified, precision), &antidiagonal(n))
}

/// `Z = S·Z̄·S` entrywise, i.e. `z_ik = conj(z_{n+1−i, n+1−k})`.
pub fn check_l_member(z: &ExtMatrix) -> bool {
    let n = z.rows();
    (0..n).all(|i| (0..n).all(|k| (z.get(i, k) - &z.get(n - 1 - i, n - 1 - k).conjugate()).is_zero()))
}

/// The sparse matrix with `x_kk = 1, x_{k,n+1−k} = 1` for `k ≤ m` and
/// `x_kk = −j, x_{k,n+1−k} = j` for `k > m`, `m = ⌈n/2⌉`; the centre of odd n is a single 1.
pub fn build_x0_twisted(n: usize, precision: usize) -> ExtMatrix {
    let one = ExtScalar::one(AlgebraKind::Ramified, precision);
    let j = ExtScalar::j(precision);
    let m = n.div_ceil(2);
    let mut x = Matrix::zeros_like(&one, n, n);
    for k in 0..n {
        if k < m {
            x.set(k, k, one.clone());
            x.set(k, n - 1 - k, one.clone());
        } else {
            x.set(k, k, -j.clone());
            x.set(k, n - 1 - k, j.clone());
        }
    }
    x
}

/// `X` with `X̄ = X·S`; conjugation `Z ↦ X Z X⁻¹` maps L onto sl(n, K).
pub fn find_x_conj(n: usize, precision: usize) -> ExtMatrix {
    let x = build_x0_twisted(n, precision);
    debug_assert!(x.sigma2() == x.mul(&s_matrix(n, precision)));
    x
}

/// A K-basis of L: `X₀⁻¹ A X₀` for the standard basis A of sl(n, K).
pub fn l_basis(model: &LieModel, precision: usize) -> Vec<ExtMatrix> {
    let x0 = build_x0_twisted(model.n, precision);
    let xi = x0.inverse().expect("X0 is invertible");
    let one = ExtScalar::one(AlgebraKind::Ramified, precision);
    model.basis().iter().map(|a| xi.mul(&Matrix::embed(&one, a)).mul(&x0)).collect()
}

fn outer(u: &[GaussRat], v: &[GaussRat]) -> Tensor2<GaussRat> {
    let mut t = Tensor2::new();
    for (a, x) in u.iter().enumerate() {
        for (b, y) in v.iter().enumerate() {
            t.add_term(a, b, x * y);
        }
    }
    t
}

fn unit(n: usize, i: usize, k: usize) -> Matrix<GaussRat> {
    Matrix::from_fn(n, n, |a, b| if (a, b) == (i, k) { GaussRat::one() } else { GaussRat::zero() })
}

/// Checks `(Ad_S ⊗ Ad_S)(r_DJ) = r_DJ²¹` on sl(n), together with
/// `(Ad_S ⊗ Ad_S)(e_ik ⊗ e_ki) = e_{i′k′} ⊗ e_{k′i′}` and `(Ad_S ⊗ Ad_S)(Ω₀) = Ω₀`.
pub fn lemma_s_twist(n: usize) -> bool {
    let Ok(model) = LieModel::new(ModelKind::Sl, n) else { return false };
    let s = antidiagonal(n);
    let t = AdmissibleTriple::empty(model.roots.root_type, model.rank());
    let Ok(r) = solve_r0(&model, &t).and_then(|p| build_rbd(&model, &t, &p.r0)) else { return false };
    let act = |x: &Tensor2<GaussRat>| model.adjoint_act(&s, x).ok();

    let main = act(&r).is_some_and(|v| v == r.flip());
    let (_, omega0) = model.casimir();
    let cartan = act(&omega0).is_some_and(|v| v == omega0);
    let coords = |m: &Matrix<GaussRat>| model.coordinates(m).ok();
    let ingredients = (0..n).all(|i| {
        (0..n).filter(|&k| k != i).all(|k| {
            let (ip, kp) = (n - 1 - i, n - 1 - k);
            match (coords(&unit(n, i, k)), coords(&unit(n, k, i)), coords(&unit(n, ip, kp)), coords(&unit(n, kp, ip))) {
                (Some(a), Some(b), Some(c), Some(d)) => act(&outer(&a, &b)).is_some_and(|v| v == outer(&c, &d)),
                _ => false,
            }
        })
    });
    main && cartan && ingredients
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentScalar;

    const P: usize = 8;

    fn e(a: i64, b: i64) -> ExtScalar {
        ExtScalar::ramified(LaurentScalar::from_int(a, P), LaurentScalar::from_int(b, P))
    }

    #[test]
    fn displayed_x0() {
        let x2 = build_x0_twisted(2, P);
        assert_eq!(x2, Matrix::from_rows(vec![vec![e(1, 0), e(1, 0)], vec![e(0, 1), e(0, -1)]]));
        let x3 = build_x0_twisted(3, P);
        let z = e(0, 0);
        let expected = Matrix::from_rows(vec![
            vec![e(1, 0), z.clone(), e(1, 0)],
            vec![z.clone(), e(1, 0), z.clone()],
            vec![e(0, 1), z, e(0, -1)],
        ]);
        assert_eq!(x3, expected);
        for n in 2..=6 {
            let x = build_x0_twisted(n, P);
            assert_eq!(x.sigma2(), x.mul(&s_matrix(n, P)), "n = {n}");
        }
    }

    #[test]
    fn membership_examples() {
        let z = e(0, 0);
        // [[0, z], [z̄, 0]]
        let m = Matrix::from_rows(vec![vec![z.clone(), e(2, 3)], vec![e(2, -3), z.clone()]]);
        assert!(check_l_member(&m));
        let bad = Matrix::from_rows(vec![vec![z.clone(), e(0, 1)], vec![z.clone(), z.clone()]]);
        assert!(!check_l_member(&bad));
        let h = Matrix::diagonal(&[e(3, 0), e(-3, 0)]);
        assert!(!check_l_member(&h));
        let jh = Matrix::diagonal(&[e(0, 1), e(0, -1)]);
        assert!(check_l_member(&jh));
    }

    #[test]
    fn l_basis_members() {
        let m = LieModel::new(ModelKind::Sl, 3).unwrap();
        assert!(l_basis(&m, P).iter().all(check_l_member));
    }

    #[test]
    fn s_twist_small() {
        assert!(lemma_s_twist(2));
        assert!(lemma_s_twist(3));
    }
}
