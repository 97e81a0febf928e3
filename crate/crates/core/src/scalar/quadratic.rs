//! Two-dimensional algebras `K[e]/(e² + pe + q)` and their classification by the
//! discriminant `Δ = p² − 4q`.

use super::ext::AlgebraKind;
use super::laurent::LaurentScalar;
use super::GaussRat;
use crate::error::{Error, Result};

/// The algebra `K[e]/(e² + pe + q)`; elements are pairs `(x, y) = x + y e`.
#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    pub p: LaurentScalar,
    pub q: LaurentScalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadElem {
    pub x: LaurentScalar,
    pub y: LaurentScalar,
}

impl QuadraticAlgebra {
    pub fn new(p: LaurentScalar, q: LaurentScalar) -> Self {
        QuadraticAlgebra { p, q }
    }

    fn precision(&self) -> usize {
        self.p.precision().min(self.q.precision())
    }

    pub fn elem(&self, x: LaurentScalar, y: LaurentScalar) -> QuadElem {
        QuadElem { x, y }
    }

    /// The generator `e`.
    pub fn generator(&self) -> QuadElem {
        let n = self.precision();
        QuadElem { x: LaurentScalar::zero(n), y: LaurentScalar::one(n) }
    }

    pub fn constant(&self, c: LaurentScalar) -> QuadElem {
        let n = c.precision();
        QuadElem { x: c, y: LaurentScalar::zero(n) }
    }

    pub fn add(&self, u: &QuadElem, v: &QuadElem) -> QuadElem {
        QuadElem { x: &u.x + &v.x, y: &u.y + &v.y }
    }

    /// `(x + ye)(u + ve) = xu − q·yv + (xv + yu − p·yv) e`.
    pub fn mul(&self, u: &QuadElem, v: &QuadElem) -> QuadElem {
        let yv = &u.y * &v.y;
        QuadElem {
            x: &(&u.x * &v.x) - &(&self.q * &yv),
            y: &(&(&u.x * &v.y) + &(&u.y * &v.x)) - &(&self.p * &yv),
        }
    }

    pub fn discriminant(&self) -> LaurentScalar {
        let four = LaurentScalar::from_int(4, self.precision());
        &(&self.p * &self.p) - &(&four * &self.q)
    }

    /// The same algebra presented by the generator `e + λ`.
    pub fn shifted(&self, lambda: &LaurentScalar) -> QuadraticAlgebra {
        let two = LaurentScalar::from_int(2, self.precision());
        let p = &self.p - &(&two * lambda);
        let q = &(&(lambda * lambda) - &(&self.p * lambda)) + &self.q;
        QuadraticAlgebra { p, q }
    }
}

#[derive(Clone, Debug)]
pub enum QuadraticWitness {
    /// `ε = e + p/2` with `ε² = 0`.
    Dual { epsilon: QuadElem },
    /// The two roots of `e² + pe + q` in K.
    Split { roots: [LaurentScalar; 2] },
    /// `j = h^{−m}(2e + p)x⁻¹` with `j² = h`.
    Ramified { j: QuadElem },
}

#[derive(Clone, Debug)]
pub struct QuadraticClassification {
    pub kind: AlgebraKind,
    pub discriminant: LaurentScalar,
    pub algebra: QuadraticAlgebra,
    pub witness: QuadraticWitness,
}

impl QuadraticClassification {
    /// Checks the witness identity in the algebra itself.
    pub fn verify(&self) -> bool {
        let alg = &self.algebra;
        match &self.witness {
            QuadraticWitness::Dual { epsilon } => {
                let sq = alg.mul(epsilon, epsilon);
                sq.x.is_zero() && sq.y.is_zero()
            }
            QuadraticWitness::Split { roots } => roots.iter().all(|e| {
                let val = &(&(e * e) + &(&alg.p * e)) + &alg.q;
                val.is_zero()
            }) && roots[0] != roots[1],
            QuadraticWitness::Ramified { j } => {
                let sq = alg.mul(j, j);
                sq.y.is_zero() && sq.x == LaurentScalar::hbar(sq.x.precision())
            }
        }
    }
}

/// Decides which of K[ε], K ⊕ K, K[j] the algebra `K[e]/(e² + pe + q)` is isomorphic to.
pub fn classify_quadratic(p: &LaurentScalar, q: &LaurentScalar) -> Result<QuadraticClassification> {
    let algebra = QuadraticAlgebra::new(p.clone(), q.clone());
    let n = algebra.precision();
    let delta = algebra.discriminant();
    let half = GaussRat::ratio(1, 2);
    let half_p = p.scale(&half);

    let Some(v) = delta.valuation() else {
        if !delta.is_exact() {
            return Err(Error::PrecisionLoss);
        }
        let epsilon = QuadElem { x: half_p, y: LaurentScalar::one(n) };
        return Ok(QuadraticClassification {
            kind: AlgebraKind::DualNumbers,
            discriminant: delta,
            algebra,
            witness: QuadraticWitness::Dual { epsilon },
        });
    };

    let m = v.div_euclid(2);
    let unit = delta.shift(-2 * m - v.rem_euclid(2));
    let x = unit.sqrt_unit()?;
    if v.rem_euclid(2) == 0 {
        // e = −p/2 ± h^m x / 2
        let offset = x.shift(m).scale(&half);
        let roots = [&(-&half_p) + &offset, &(-&half_p) - &offset];
        Ok(QuadraticClassification {
            kind: AlgebraKind::Split,
            discriminant: delta,
            algebra,
            witness: QuadraticWitness::Split { roots },
        })
    } else {
        // j = h^{−m}(2e + p) x⁻¹
        let c = x.invert()?.shift(-m);
        let j = QuadElem { x: p * &c, y: c.scale(&GaussRat::from_int(2)) };
        Ok(QuadraticClassification {
            kind: AlgebraKind::Ramified,
            discriminant: delta,
            algebra,
            witness: QuadraticWitness::Ramified { j },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: i64) -> LaurentScalar {
        LaurentScalar::from_int(n, 16)
    }

    #[test]
    fn seed_cases() {
        let c = classify_quadratic(&k(0), &k(0)).unwrap();
        assert_eq!(c.kind, AlgebraKind::DualNumbers);
        assert!(c.verify());

        let c = classify_quadratic(&k(0), &k(-1)).unwrap();
        assert_eq!(c.kind, AlgebraKind::Split);
        assert_eq!(c.discriminant, k(4));
        let QuadraticWitness::Split { roots } = &c.witness else { panic!() };
        assert_eq!(roots[0], k(1));
        assert_eq!(roots[1], k(-1));
        assert!(c.verify());

        let c = classify_quadratic(&k(0), &-&LaurentScalar::hbar(16)).unwrap();
        assert_eq!(c.kind, AlgebraKind::Ramified);
        assert_eq!(c.discriminant, LaurentScalar::hbar(16).scale(&GaussRat::from_int(4)));
        assert!(c.verify());
    }

    #[test]
    fn precision_loss_is_reported() {
        // p = 2/(1−h)·(1−h) computed inexactly: Δ vanishes only at precision
        let u = LaurentScalar::from_coeffs(0, vec![GaussRat::one(), GaussRat::from_int(-1)], 16);
        let p = &(&u.invert().unwrap() * &u) * &k(2);
        let r = classify_quadratic(&p, &k(1));
        assert!(matches!(r, Err(Error::PrecisionLoss)));
    }
}
