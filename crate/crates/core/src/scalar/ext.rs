//! Rank-2 algebras over K: dual numbers K[ε], the split algebra K ⊕ K, and the ramified
//! extension K[j] with j² = h.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::laurent::LaurentScalar;
use super::ring::Scalar;
use super::GaussRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AlgebraKind {
    /// K[ε], ε² = 0.
    DualNumbers,
    /// K ⊕ K with componentwise operations.
    Split,
    /// K[j], j² = h.
    Ramified,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::DualNumbers => "DUAL_NUMBERS",
            AlgebraKind::Split => "SPLIT",
            AlgebraKind::Ramified => "RAMIFIED",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "DUAL_NUMBERS" | "DUAL" => Some(AlgebraKind::DualNumbers),
            "SPLIT" => Some(AlgebraKind::Split),
            "RAMIFIED" => Some(AlgebraKind::Ramified),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `a + εb`, `(a, b)`, or `a + jb` depending on `kind`.
///
/// Binary operations on values of different kinds are programming errors and panic;
/// user-facing entry points check kinds first and report `KindMismatch`.
#[derive(Clone, Debug)]
pub struct ExtScalar {
    pub kind: AlgebraKind,
    pub a: LaurentScalar,
    pub b: LaurentScalar,
}

impl ExtScalar {
    pub fn new(kind: AlgebraKind, a: LaurentScalar, b: LaurentScalar) -> Self {
        ExtScalar { kind, a, b }
    }

    /// The image of `x ∈ K` (diagonal for the split algebra).
    pub fn from_base(kind: AlgebraKind, x: LaurentScalar) -> Self {
        match kind {
            AlgebraKind::Split => ExtScalar::new(kind, x.clone(), x),
            _ => {
                let z = LaurentScalar::zero(x.precision());
                ExtScalar::new(kind, x, z)
            }
        }
    }

    pub fn zero(kind: AlgebraKind, precision: usize) -> Self {
        ExtScalar::new(kind, LaurentScalar::zero(precision), LaurentScalar::zero(precision))
    }

    pub fn one(kind: AlgebraKind, precision: usize) -> Self {
        ExtScalar::from_base(kind, LaurentScalar::one(precision))
    }

    /// The generator `j` of K[j].
    pub fn j(precision: usize) -> Self {
        ExtScalar::new(AlgebraKind::Ramified, LaurentScalar::zero(precision), LaurentScalar::one(precision))
    }

    /// The generator `ε` of K[ε].
    pub fn epsilon(precision: usize) -> Self {
        ExtScalar::new(AlgebraKind::DualNumbers, LaurentScalar::zero(precision), LaurentScalar::one(precision))
    }

    /// `a + jb`.
    pub fn ramified(a: LaurentScalar, b: LaurentScalar) -> Self {
        ExtScalar::new(AlgebraKind::Ramified, a, b)
    }

    pub fn precision(&self) -> usize {
        self.a.precision().min(self.b.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Lies in the embedded copy of K.
    pub fn is_base(&self) -> bool {
        match self.kind {
            AlgebraKind::Split => (&self.a - &self.b).is_zero(),
            _ => self.b.is_zero(),
        }
    }

    /// The K-value of an element of the embedded copy of K.
    pub fn base_part(&self) -> Option<LaurentScalar> {
        self.is_base().then(|| self.a.clone())
    }

    /// The nontrivial algebra involution: `a+jb ↦ a−jb`, `a+εb ↦ a−εb`, `(a,b) ↦ (b,a)`.
    pub fn conjugate(&self) -> Self {
        match self.kind {
            AlgebraKind::Split => ExtScalar::new(self.kind, self.b.clone(), self.a.clone()),
            _ => ExtScalar::new(self.kind, self.a.clone(), -&self.b),
        }
    }

    /// K-linear trace functional: coefficient of j or ε, or `(a−b)/2` for the split algebra.
    pub fn trace(&self) -> LaurentScalar {
        match self.kind {
            AlgebraKind::Split => (&self.a - &self.b).scale(&GaussRat::ratio(1, 2)),
            _ => self.b.clone(),
        }
    }

    pub fn scale_base(&self, x: &LaurentScalar) -> Self {
        ExtScalar::new(self.kind, &self.a * x, &self.b * x)
    }

    fn check_kind(&self, other: &Self) {
        assert_eq!(self.kind, other.kind, "mixed algebra kinds in arithmetic");
    }

    pub fn invert(&self) -> Option<Self> {
        match self.kind {
            AlgebraKind::DualNumbers => {
                let ai = self.a.invert().ok()?;
                let b = -&(&self.b * &(&ai * &ai));
                Some(ExtScalar::new(self.kind, ai, b))
            }
            AlgebraKind::Split => Some(ExtScalar::new(self.kind, self.a.invert().ok()?, self.b.invert().ok()?)),
            AlgebraKind::Ramified => {
                let h = LaurentScalar::hbar(self.precision());
                let norm = &(&self.a * &self.a) - &(&h * &(&self.b * &self.b));
                let ni = norm.invert().ok()?;
                Some(ExtScalar::new(self.kind, &self.a * &ni, -&(&self.b * &ni)))
            }
        }
    }

    /// Norm `x · conj(x)` as an element of K.
    pub fn norm(&self) -> LaurentScalar {
        (self * &self.conjugate()).a
    }

    /// h-adic weight used to prefer well-conditioned pivots: `v(x)` measured in units of
    /// `v(j) = 1/2` for K[j].
    pub fn weight(&self) -> Option<i64> {
        match self.kind {
            AlgebraKind::Ramified => {
                let wa = self.a.valuation().map(|v| 2 * v);
                let wb = self.b.valuation().map(|v| 2 * v + 1);
                match (wa, wb) {
                    (None, None) => None,
                    (Some(x), None) | (None, Some(x)) => Some(x),
                    (Some(x), Some(y)) => Some(x.min(y)),
                }
            }
            AlgebraKind::DualNumbers => self.a.valuation(),
            AlgebraKind::Split => match (self.a.valuation(), self.b.valuation()) {
                (Some(x), Some(y)) => Some(x.max(y)),
                _ => None,
            },
        }
    }
}

impl<'a> Add<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        self.check_kind(rhs);
        ExtScalar::new(self.kind, &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        self.check_kind(rhs);
        ExtScalar::new(self.kind, &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        self.check_kind(rhs);
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        match self.kind {
            AlgebraKind::DualNumbers => ExtScalar::new(self.kind, a * c, &(a * d) + &(b * c)),
            AlgebraKind::Split => ExtScalar::new(self.kind, a * c, b * d),
            AlgebraKind::Ramified => {
                let bd = b * d;
                let hbd = if bd.is_exact_zero() { bd } else { bd.shift(1) };
                ExtScalar::new(self.kind, &(a * c) + &hbd, &(a * d) + &(b * c))
            }
        }
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar::new(self.kind, -&self.a, -&self.b)
    }
}

super::gauss::forward_owned!(ExtScalar, Add::add, Sub::sub, Mul::mul);

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

impl PartialEq for ExtScalar {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.a == other.a && self.b == other.b
    }
}

impl Scalar for ExtScalar {
    fn zero_like(&self) -> Self {
        ExtScalar::zero(self.kind, self.precision())
    }
    fn one_like(&self) -> Self {
        ExtScalar::one(self.kind, self.precision())
    }
    fn embed(&self, c: &GaussRat) -> Self {
        ExtScalar::from_base(self.kind, LaurentScalar::constant(c.clone(), self.precision()))
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.invert()
    }
    fn pivot_weight(&self) -> Option<i64> {
        // weight() is None exactly when the element is a zero divisor
        self.weight()
    }
    fn sigma2(&self) -> Self {
        self.conjugate()
    }
}

fn wrap(x: &LaurentScalar) -> String {
    let s = x.to_string();
    if s.contains(' ') || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for ExtScalar {
    /// K[j] values print as `a + j*b`, which the literal parser reads back; the other
    /// kinds print as `KIND(a; b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::Ramified => match (self.a.is_exact_zero(), self.b.is_exact_zero()) {
                (_, true) => write!(f, "{}", self.a),
                (true, false) => write!(f, "j*{}", wrap(&self.b)),
                (false, false) => write!(f, "{} + j*{}", self.a, wrap(&self.b)),
            },
            _ => write!(f, "{}({}; {})", self.kind.name(), self.a, self.b),
        }
    }
}
