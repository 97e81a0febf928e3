//! Truncated Laurent series over Q(i): the field K = C((h)) at finite precision.
//!
//! A value is `h^v (c_0 + c_1 h + ...)` with at most `precision` stored coefficients.
//! Every value also records whether it is exact (a Laurent polynomial with nothing
//! discarded) or known only up to an absolute error term `O(h^cap)`. Cancellation
//! lowers the number of known digits instead of inventing zeros, so comparisons made
//! "at precision" only look at digits both sides actually know.

use std::cmp::{min, Ordering};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::Scalar;
use super::GaussRat;
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: usize = 16;

#[derive(Clone, Debug)]
pub struct LaurentScalar {
    /// Exponent of `coeffs[0]`. Meaningless for zero.
    valuation: i64,
    /// Leading coefficient nonzero, trailing zeros trimmed; empty for zero.
    coeffs: Vec<GaussRat>,
    /// Working precision N (relative number of coefficients kept).
    precision: usize,
    /// `None` for exact values, otherwise the absolute exponent of the error term.
    cap: Option<i64>,
}

fn min_cap(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, c) | (c, None) => c,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl LaurentScalar {
    pub fn zero(precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        LaurentScalar { valuation: 0, coeffs: Vec::new(), precision, cap: None }
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(GaussRat::one(), precision)
    }

    pub fn constant(c: GaussRat, precision: usize) -> Self {
        Self::monomial(c, 0, precision)
    }

    pub fn from_int(n: i64, precision: usize) -> Self {
        Self::constant(GaussRat::from_int(n), precision)
    }

    /// `c · h^k`, exact.
    pub fn monomial(c: GaussRat, k: i64, precision: usize) -> Self {
        if c.is_zero() {
            return Self::zero(precision);
        }
        assert!(precision > 0, "precision must be positive");
        LaurentScalar { valuation: k, coeffs: vec![c], precision, cap: None }
    }

    /// The uniformizer `h`.
    pub fn hbar(precision: usize) -> Self {
        Self::monomial(GaussRat::one(), 1, precision)
    }

    /// Exact Laurent polynomial `h^v Σ coeffs[k] h^k` (truncated, and then inexact, if it
    /// has more than `precision` significant coefficients).
    pub fn from_coeffs(valuation: i64, coeffs: Vec<GaussRat>, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        Self::normalize(valuation, coeffs, None, precision)
    }

    /// Series known up to `O(h^cap)`.
    pub fn with_cap(valuation: i64, coeffs: Vec<GaussRat>, cap: i64, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        Self::normalize(valuation, coeffs, Some(cap), precision)
    }

    /// Canonical form of `h^start Σ buf[k] h^k + O(h^cap)` at working precision `precision`.
    fn normalize(start: i64, mut buf: Vec<GaussRat>, cap: Option<i64>, precision: usize) -> Self {
        if let Some(c) = cap {
            let keep = (c - start).clamp(0, buf.len() as i64) as usize;
            buf.truncate(keep);
        }
        let Some(first) = buf.iter().position(|c| !c.is_zero()) else {
            return LaurentScalar { valuation: cap.unwrap_or(0), coeffs: Vec::new(), precision, cap };
        };
        let v = start + first as i64;
        let mut coeffs: Vec<GaussRat> = buf.drain(first..).collect();
        let mut cap = cap;
        if coeffs.len() > precision {
            let dropped = coeffs[precision..].iter().any(|c| !c.is_zero());
            coeffs.truncate(precision);
            if dropped || cap.is_some() {
                cap = Some(min_cap(cap, Some(v + precision as i64)).unwrap());
            }
        } else if let Some(c) = cap {
            cap = Some(c.min(v + precision as i64));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LaurentScalar { valuation: v, coeffs, precision, cap }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Same value with a different working precision (truncating if it shrinks).
    pub fn with_precision(&self, precision: usize) -> Self {
        Self::normalize(self.valuation, self.coeffs.clone(), self.cap, precision)
    }

    pub fn is_exact(&self) -> bool {
        self.cap.is_none()
    }

    /// Absolute exponent of the error term, `None` if exact.
    pub fn error_exponent(&self) -> Option<i64> {
        self.cap
    }

    /// Valuation of a nonzero value.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.valuation)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exactly zero, not merely zero at precision.
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.cap.is_none()
    }

    pub fn leading_coefficient(&self) -> Option<&GaussRat> {
        self.coeffs.first()
    }

    /// Coefficient of `h^exponent` (zero when outside the stored window).
    pub fn coeff_at(&self, exponent: i64) -> GaussRat {
        if self.coeffs.is_empty() {
            return GaussRat::zero();
        }
        let k = exponent - self.valuation;
        if k < 0 || k as usize >= self.coeffs.len() {
            GaussRat::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// The N-coefficient window starting at the valuation (zero-padded).
    pub fn coefficients(&self) -> Vec<GaussRat> {
        let mut out = self.coeffs.clone();
        out.resize(self.precision, GaussRat::zero());
        out
    }

    /// Number of relative digits actually known; `None` when exact.
    pub fn known_digits(&self) -> Option<i64> {
        match (self.cap, self.valuation()) {
            (None, _) => None,
            (Some(c), Some(v)) => Some(c - v),
            (Some(_), None) => Some(0),
        }
    }

    /// Multiply by `h^k` exactly.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.valuation += k;
        out.cap = out.cap.map(|c| c + k);
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.precision);
        }
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = &*x * c;
        }
        out
    }

    /// Multiplicative inverse; `ZeroDivision` if the value is zero at precision.
    pub fn invert(&self) -> Result<Self> {
        let Some(v) = self.valuation() else {
            return Err(Error::ZeroDivision);
        };
        let n = self.precision;
        let lead_inv = self.coeffs[0].inverse().expect("leading coefficient is nonzero");
        if self.coeffs.len() == 1 && self.is_exact() {
            return Ok(Self::monomial(lead_inv, -v, n));
        }
        let digits = match self.known_digits() {
            Some(d) => min(d.max(0) as usize, n),
            None => n,
        };
        // w_0 = 1/c_0, w_k = −(1/c_0) Σ_{i=1..k} c_i w_{k−i}
        let mut w: Vec<GaussRat> = Vec::with_capacity(digits);
        w.push(lead_inv.clone());
        for k in 1..digits {
            let mut acc = GaussRat::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &w[k - i]);
                }
            }
            w.push(-&(&acc * &lead_inv));
        }
        Ok(Self::normalize(-v, w, Some(-v + digits as i64), n))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(self.precision);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Square root of a unit (valuation 0) whose leading coefficient has an exact root in
    /// Q(i), by Newton iteration `r ← (r + u/r)/2` from the exact root of the leading term.
    /// Returns the branch with the canonical leading coefficient.
    pub fn sqrt_unit(&self) -> Result<Self> {
        match self.valuation() {
            Some(0) => {}
            _ => return Err(Error::NotUnit),
        }
        let r0 = self.coeffs[0].sqrt().ok_or_else(|| Error::NoExactRoot(self.coeffs[0].to_string()))?;
        let n = self.precision;
        let half = GaussRat::ratio(1, 2);
        let mut r = Self::constant(r0, n);
        if self.coeffs.len() == 1 && self.is_exact() {
            return Ok(r);
        }
        // the correct digit count doubles every step
        let mut correct = 1usize;
        while correct < n {
            r = (&r + &(self / &r)).scale(&half);
            correct *= 2;
        }
        // recover an exact root when the input is an exact square polynomial
        if self.is_exact() && r.cap.is_some() {
            let candidate = Self::from_coeffs(r.valuation, r.coeffs.clone(), n);
            if candidate.is_exact() {
                let sq = &candidate * &candidate;
                if sq.is_exact() && (&sq - self).is_exact_zero() {
                    return Ok(candidate);
                }
            }
        }
        Ok(r)
    }

    fn cap_or_max(&self) -> Option<i64> {
        self.cap
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let precision = min(self.precision, rhs.precision);
        let cap = min_cap(self.cap_or_max(), rhs.cap_or_max());
        let parts: Vec<&LaurentScalar> = [self, rhs].into_iter().filter(|x| !x.is_zero()).collect();
        if parts.is_empty() {
            return LaurentScalar::normalize(0, Vec::new(), cap, precision);
        }
        let lo = parts.iter().map(|x| x.valuation).min().unwrap();
        let mut hi = parts.iter().map(|x| x.valuation + x.coeffs.len() as i64).max().unwrap();
        if let Some(c) = cap {
            hi = hi.min(c);
        }
        if hi <= lo {
            return LaurentScalar::normalize(lo, Vec::new(), cap, precision);
        }
        let mut buf = vec![GaussRat::zero(); (hi - lo) as usize];
        for x in parts {
            for (k, c) in x.coeffs.iter().enumerate() {
                let e = x.valuation + k as i64;
                if e < hi {
                    let slot = &mut buf[(e - lo) as usize];
                    *slot = &*slot + c;
                }
            }
        }
        LaurentScalar::normalize(lo, buf, cap, precision)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -&*c;
        }
        out
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let precision = min(self.precision, rhs.precision);
        match (self.is_zero(), rhs.is_zero()) {
            (false, false) => {
                let v = self.valuation + rhs.valuation;
                let digits = |x: &LaurentScalar| x.cap.map(|c| c - x.valuation);
                let known = min_cap(digits(self), digits(rhs));
                let len = min(self.coeffs.len() + rhs.coeffs.len() - 1, precision + 1);
                let buf = convolve(&self.coeffs, &rhs.coeffs, len);
                let mut cap = known.map(|d| v + d);
                if len > precision && !buf[precision].is_zero() {
                    // more terms exist than the window holds
                    cap = Some(min_cap(cap, Some(v + precision as i64)).unwrap());
                } else if cap.is_none() && self.coeffs.len() + rhs.coeffs.len() - 1 > precision + 1 {
                    // long exact product: only computed up to precision + 1 terms
                    cap = Some(v + precision as i64);
                }
                LaurentScalar::normalize(v, buf, cap, precision)
            }
            _ => {
                if self.is_exact_zero() || rhs.is_exact_zero() {
                    return LaurentScalar::zero(precision);
                }
                // at least one inexact zero; the error term scales by the other factor
                let cap_of = |x: &LaurentScalar| if x.is_zero() { x.cap.unwrap() } else { x.valuation };
                let cap = cap_of(self) + cap_of(rhs);
                LaurentScalar::normalize(0, Vec::new(), Some(cap), precision)
            }
        }
    }
}

/// Gaussian integers over one common denominator: `c_k = (re_k + i·im_k) / den`.
struct Scaled {
    re: Vec<BigInt>,
    im: Vec<BigInt>,
    den: BigInt,
}

fn scaled(coeffs: &[GaussRat]) -> Scaled {
    let mut den = BigInt::one();
    for c in coeffs {
        for q in [c.re(), c.im()] {
            if !q.denom().is_one() {
                den = den.lcm(q.denom());
            }
        }
    }
    let lift = |q: &BigRational| q.numer() * (&den / q.denom());
    Scaled {
        re: coeffs.iter().map(|c| lift(c.re())).collect(),
        im: coeffs.iter().map(|c| lift(c.im())).collect(),
        den: den.clone(),
    }
}

/// The first `len` coefficients of the product of two coefficient lists. Sums run over
/// integers so only the final coefficients are reduced.
fn convolve(a: &[GaussRat], b: &[GaussRat], len: usize) -> Vec<GaussRat> {
    let (x, y) = (scaled(a), scaled(b));
    let mut re = vec![BigInt::zero(); len];
    let mut im = vec![BigInt::zero(); len];
    for i in 0..a.len().min(len) {
        let (xr, xi) = (&x.re[i], &x.im[i]);
        if xr.is_zero() && xi.is_zero() {
            continue;
        }
        for j in 0..b.len().min(len - i) {
            let (yr, yi) = (&y.re[j], &y.im[j]);
            if !xr.is_zero() {
                if !yr.is_zero() {
                    re[i + j] += xr * yr;
                }
                if !yi.is_zero() {
                    im[i + j] += xr * yi;
                }
            }
            if !xi.is_zero() {
                if !yi.is_zero() {
                    re[i + j] -= xi * yi;
                }
                if !yr.is_zero() {
                    im[i + j] += xi * yr;
                }
            }
        }
    }
    let den = &x.den * &y.den;
    re.into_iter()
        .zip(im)
        .map(|(r, i)| GaussRat::new(BigRational::new(r, den.clone()), BigRational::new(i, den.clone())))
        .collect()
}

impl<'a> Div<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn div(self, rhs: &LaurentScalar) -> LaurentScalar {
        self * &rhs.invert().expect("division by zero series")
    }
}

super::gauss::forward_owned!(LaurentScalar, Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

/// Equality at precision: the difference vanishes on every digit both sides know.
impl PartialEq for LaurentScalar {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl PartialOrd for LaurentScalar {
    fn partial_cmp(&self, _: &Self) -> Option<Ordering> {
        None
    }
}

impl Scalar for LaurentScalar {
    fn zero_like(&self) -> Self {
        Self::zero(self.precision)
    }
    fn one_like(&self) -> Self {
        Self::one(self.precision)
    }
    fn embed(&self, c: &GaussRat) -> Self {
        Self::constant(c.clone(), self.precision)
    }
    fn is_zero(&self) -> bool {
        LaurentScalar::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn pivot_weight(&self) -> Option<i64> {
        self.valuation()
    }
    fn sigma2(&self) -> Self {
        self.clone()
    }
}

fn fmt_term(c: &GaussRat, k: i64) -> String {
    let h = match k {
        0 => String::new(),
        1 => "h".to_string(),
        _ => format!("h^{k}"),
    };
    if k == 0 {
        c.to_string()
    } else if c.is_one() {
        h
    } else if (-c).is_one() {
        format!("-{h}")
    } else {
        format!("{c}*{h}")
    }
}

impl fmt::Display for LaurentScalar {
    /// `h^v*(c0 + c1*h + ... + O(h^k))`; the prefix is dropped when `v = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return match self.cap {
                None => write!(f, "0"),
                Some(c) => write!(f, "O(h^{c})"),
            };
        }
        let mut terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| fmt_term(c, k as i64))
            .collect();
        if let Some(c) = self.cap {
            terms.push(format!("O(h^{})", c - self.valuation));
        }
        let mut inner = String::new();
        for (idx, t) in terms.iter().enumerate() {
            if idx == 0 {
                inner.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                inner.push_str(" - ");
                inner.push_str(rest);
            } else {
                inner.push_str(" + ");
                inner.push_str(t);
            }
        }
        if self.valuation == 0 {
            write!(f, "{inner}")
        } else {
            write!(f, "h^{}*({inner})", self.valuation)
        }
    }
}
