//! Gaussian rationals `a + b i` with `a, b ∈ Q`, the coefficient field of every series.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num / den` as a real Gaussian rational. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        GaussRat::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn complex(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRat::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugation `a + bi ↦ a − bi`.
    pub fn complex_conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        GaussRat::new(&self.re * q, &self.im * q)
    }

    /// Exact square root in Q(i), if one exists. Returns the branch with positive real
    /// part, or positive imaginary part when the real part vanishes.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        // w = c + di with c² − d² = a, 2cd = b; |w|² = |z|.
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let c2 = (&modulus + &self.re) / &two;
        let d2 = (&modulus - &self.re) / &two;
        let c = rational_sqrt(&c2)?;
        let mut d = rational_sqrt(&d2)?;
        if !c.is_zero() {
            // sign of d fixed by 2cd = b with c > 0
            if (self.im.is_negative() && d.is_positive()) || (self.im.is_positive() && d.is_negative()) {
                d = -d;
            }
        }
        let w = GaussRat::new(c, d);
        debug_assert_eq!(&w * &w, *self);
        Some(w)
    }
}

/// Nonnegative rational square root when numerator and denominator are perfect squares.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

impl From<BigRational> for GaussRat {
    fn from(q: BigRational) -> Self {
        GaussRat::new(q, BigRational::zero())
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inverse().expect("division by zero Gaussian rational")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(GaussRat, Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussRat {
    /// `p/q`, `r/s*i`, or `(p/q+r/s*i)` for mixed values.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{}*i)", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_plus_i() {
        let z = GaussRat::complex((1, 1), (1, 1));
        let w = z.inverse().unwrap();
        assert_eq!(w, GaussRat::complex((1, 2), (-1, 2)));
        assert!((&z * &w).is_one());
        assert!(GaussRat::zero().inverse().is_none());
    }

    #[test]
    fn sqrt_branches() {
        assert_eq!(GaussRat::from_int(4).sqrt(), Some(GaussRat::from_int(2)));
        assert_eq!(GaussRat::from_int(-4).sqrt(), Some(GaussRat::complex((0, 1), (2, 1))));
        // (1+i)² = 2i
        assert_eq!(GaussRat::complex((0, 1), (2, 1)).sqrt(), Some(GaussRat::complex((1, 1), (1, 1))));
        // (2−i)² = 3 − 4i
        assert_eq!(GaussRat::complex((3, 1), (-4, 1)).sqrt(), Some(GaussRat::complex((2, 1), (-1, 1))));
        assert_eq!(GaussRat::ratio(9, 4).sqrt(), Some(GaussRat::ratio(3, 2)));
        assert_eq!(GaussRat::from_int(2).sqrt(), None);
        assert_eq!(GaussRat::i().sqrt(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(GaussRat::complex((0, 1), (2, 3)).to_string(), "2/3*i");
        assert_eq!(GaussRat::complex((1, 2), (-1, 1)).to_string(), "(1/2-1*i)");
    }
}
