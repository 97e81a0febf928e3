//! Seeded generators for group elements, centralizer members and cocycles.
#![allow(dead_code)]

use bialgebra::cohomology::sl_s_classes;
use bialgebra::lie::{LieModel, ModelKind};
use bialgebra::linalg::{lift, ExtMatrix, KMatrix, Matrix};
use bialgebra::rmatrix::AdmissibleTriple;
use bialgebra::scalar::{AlgebraKind, ExtScalar, GaussRat, LaurentScalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const PREC: usize = 16;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn gauss(rng: &mut StdRng) -> GaussRat {
    let re = GaussRat::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    if rng.gen_bool(0.2) {
        &re + &(&GaussRat::i() * &GaussRat::from_int(rng.gen_range(-2..=2)))
    } else {
        re
    }
}

pub fn nonzero_gauss(rng: &mut StdRng) -> GaussRat {
    loop {
        let g = gauss(rng);
        if !g.is_zero() {
            return g;
        }
    }
}

/// A short Laurent polynomial `Σ c_k h^k`, `k ∈ [v, v+len)`.
pub fn series(rng: &mut StdRng) -> LaurentScalar {
    let v = rng.gen_range(-1..=1);
    let len = rng.gen_range(1..=2);
    LaurentScalar::from_coeffs(v, (0..len).map(|_| gauss(rng)).collect(), PREC)
}

pub fn nonzero_series(rng: &mut StdRng) -> LaurentScalar {
    let v = rng.gen_range(-1..=1);
    let mut c = vec![nonzero_gauss(rng)];
    if rng.gen_bool(0.4) {
        c.push(gauss(rng));
    }
    LaurentScalar::from_coeffs(v, c, PREC)
}

/// A nonzero monomial `c·h^v`; inverses of these stay exact.
pub fn monomial(rng: &mut StdRng) -> LaurentScalar {
    LaurentScalar::monomial(nonzero_gauss(rng), rng.gen_range(-1..=1), PREC)
}

/// A nonzero element `a + jb` of K[j].
pub fn nonzero_ext(rng: &mut StdRng) -> ExtScalar {
    loop {
        let a = if rng.gen_bool(0.7) { series(rng) } else { LaurentScalar::zero(PREC) };
        let b = if rng.gen_bool(0.7) { series(rng) } else { LaurentScalar::zero(PREC) };
        let x = ExtScalar::ramified(a, b);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn ext(x: &LaurentScalar) -> ExtScalar {
    ExtScalar::from_base(AlgebraKind::Ramified, x.clone())
}

pub fn lift_k(m: &KMatrix) -> ExtMatrix {
    lift(m, AlgebraKind::Ramified)
}

fn k_identity(n: usize) -> KMatrix {
    Matrix::identity_like(&LaurentScalar::one(PREC), n)
}

/// A product of elementary, permutation and monomial-diagonal matrices in GL(n, K).
pub fn random_gl(rng: &mut StdRng, n: usize) -> KMatrix {
    let mut m = k_identity(n);
    for _ in 0..n + 1 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c = series(rng);
        let mut e = k_identity(n);
        e.set(i, j, c);
        m = m.mul(&e);
    }
    let d: Vec<LaurentScalar> = (0..n).map(|_| monomial(rng)).collect();
    m = m.mul(&Matrix::diagonal(&d));
    if rng.gen_bool(0.5) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let p = Matrix::from_fn(n, n, |a, b| {
            let src = if a == i { j } else if a == j { i } else { a };
            if b == src { LaurentScalar::one(PREC) } else { LaurentScalar::zero(PREC) }
        });
        m = p.mul(&m);
    }
    m
}

/// `exp(t·E)` for nilpotent E.
fn exp_nilpotent(e: &KMatrix) -> KMatrix {
    let n = e.rows();
    let mut out = k_identity(n);
    let mut term = k_identity(n);
    for k in 1..=n {
        term = term.mul(e).scale(&LaurentScalar::constant(GaussRat::ratio(1, k as i64), PREC));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// A product of torus elements, root-group elements `exp(tE_α)` and S in O(m, K).
pub fn random_o(rng: &mut StdRng, m: usize) -> KMatrix {
    let model = LieModel::new(ModelKind::O, m).expect("o(m) model");
    let one = LaurentScalar::one(PREC);
    let mut x = k_identity(m);
    for _ in 0..m {
        let root = rng.gen_range(0..model.num_positive());
        let idx = if rng.gen_bool(0.5) { model.positive_index(root) } else { model.negative_index(root) };
        let e = Matrix::embed(&one, &model.basis()[idx]).scale(&series(rng));
        x = x.mul(&exp_nilpotent(&e));
    }
    let mut t = vec![one.clone(); m];
    for i in 0..m / 2 {
        let u = monomial(rng);
        t[m - 1 - i] = u.invert().unwrap();
        t[i] = u;
    }
    x = x.mul(&Matrix::diagonal(&t));
    if rng.gen_bool(0.3) {
        x = x.mul(&Matrix::embed(&one, &bialgebra::lie::antidiagonal(m)));
    }
    x
}

/// A diagonal matrix over K[j] in the centralizer of r_BD(t) on sl(n).
pub fn sl_centralizer_member(rng: &mut StdRng, n: usize, t: &AdmissibleTriple) -> ExtMatrix {
    let mut s = vec![ExtScalar::one(AlgebraKind::Ramified, PREC); n];
    for class in sl_s_classes(n, t) {
        let v = nonzero_ext(rng);
        for i in class {
            s[i] = v.clone();
        }
    }
    let mut d = s.clone();
    for i in (0..n - 1).rev() {
        d[i] = &s[i] * &d[i + 1];
    }
    Matrix::diagonal(&d)
}

/// `diag(t_1, …, t_h, [±1], t_h⁻¹, …, t_1⁻¹)` over K[j]; with `fixed_centre`, the
/// two middle slots of even m are forced to a common sign.
pub fn o_torus(rng: &mut StdRng, m: usize, fixed_centre: bool) -> ExtMatrix {
    let one = ExtScalar::one(AlgebraKind::Ramified, PREC);
    let mut d = vec![one.clone(); m];
    for i in 0..m / 2 {
        let u = nonzero_ext(rng);
        d[m - 1 - i] = u.invert().unwrap();
        d[i] = u;
    }
    let sign = if rng.gen_bool(0.5) { one.clone() } else { -one.clone() };
    if m % 2 == 1 {
        d[m / 2] = sign;
    } else if fixed_centre {
        d[m / 2 - 1] = sign.clone();
        d[m / 2] = sign;
    }
    Matrix::diagonal(&d)
}

/// A diagonal matrix over K[j] with nonzero entries.
pub fn ext_diagonal(rng: &mut StdRng, n: usize) -> ExtMatrix {
    Matrix::diagonal(&(0..n).map(|_| nonzero_ext(rng)).collect::<Vec<_>>())
}
