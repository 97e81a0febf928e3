//! Text literals for series and K[j] scalars.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" ["-"] integer)?
//! atom  := integer | "i" | "h" | "j" | "(" expr ")" | "O(h^" ["-"] integer ")"
//! ```
//!
//! `O(h^k)` is an error term, so `h^-1*(1 + 2*h + O(h^3))` reads back exactly what the
//! series printer writes.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ext::ExtScalar;
use super::laurent::LaurentScalar;
use super::GaussRat;
use crate::error::{Error, Result};

/// Parses a literal that must lie in K (no `j`).
pub fn parse_series(text: &str, precision: usize) -> Result<LaurentScalar> {
    let v = parse_ramified(text, precision)?;
    if !v.b.is_zero() {
        return Err(Error::Parse(format!("`{text}` is not an element of K")));
    }
    Ok(v.a)
}

/// Parses a literal in K[j].
pub fn parse_ramified(text: &str, precision: usize) -> Result<ExtScalar> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, precision, text };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if matches!(c, 'h' | 'i' | 'j' | 'O') {
            out.push(Tok::Ident(c));
            k += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    precision: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at token {} in `{}`", self.pos, self.text))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.eat_op(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn constant(&self, c: GaussRat) -> ExtScalar {
        ExtScalar::ramified(LaurentScalar::constant(c, self.precision), LaurentScalar::zero(self.precision))
    }

    fn expr(&mut self) -> Result<ExtScalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ExtScalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let d = self.unary()?;
                let inv = d.invert().ok_or_else(|| self.err("division by zero"))?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ExtScalar> {
        if self.eat_op('-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn int_exponent(&mut self) -> Result<i64> {
        let neg = self.eat_op('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let v: i64 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("expected integer exponent")),
        }
    }

    fn power(&mut self) -> Result<ExtScalar> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let e = self.int_exponent()?;
        let b = if e < 0 { base.invert().ok_or_else(|| self.err("zero to a negative power"))? } else { base };
        let mut acc = ExtScalar::one(b.kind, self.precision);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &b;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<ExtScalar> {
        let n = self.precision;
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(self.constant(GaussRat::from(BigRational::from_integer(v))))
            }
            Some(Tok::Ident('i')) => {
                self.pos += 1;
                Ok(self.constant(GaussRat::i()))
            }
            Some(Tok::Ident('h')) => {
                self.pos += 1;
                Ok(ExtScalar::ramified(LaurentScalar::hbar(n), LaurentScalar::zero(n)))
            }
            Some(Tok::Ident('j')) => {
                self.pos += 1;
                Ok(ExtScalar::j(n))
            }
            Some(Tok::Ident('O')) => {
                self.pos += 1;
                self.expect_op('(')?;
                if self.peek() != Some(&Tok::Ident('h')) {
                    return Err(self.err("expected `h` in error term"));
                }
                self.pos += 1;
                let cap = if self.eat_op('^') { self.int_exponent()? } else { 1 };
                self.expect_op(')')?;
                let z = LaurentScalar::with_cap(0, Vec::new(), cap, n);
                Ok(ExtScalar::ramified(z, LaurentScalar::zero(n)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect_op(')')?;
                Ok(v)
            }
            _ => Err(self.err("expected a number, `h`, `i`, `j`, `O(h^k)` or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_series() {
        let x = LaurentScalar::from_coeffs(
            -2,
            vec![GaussRat::ratio(1, 2), GaussRat::zero(), GaussRat::complex((1, 3), (-2, 1))],
            16,
        );
        let s = x.to_string();
        let y = parse_series(&s, 16).unwrap();
        assert_eq!(y, x);
        assert!(y.is_exact());

        let inexact = LaurentScalar::from_coeffs(0, vec![GaussRat::one(), GaussRat::from_int(-1)], 16).invert().unwrap();
        let back = parse_series(&inexact.to_string(), 16).unwrap();
        assert_eq!(back.error_exponent(), inexact.error_exponent());
        assert_eq!(back, inexact);
    }

    #[test]
    fn ramified_literals() {
        let x = parse_ramified("1 - j*(h^-1/2)", 16).unwrap();
        assert_eq!(x.a, LaurentScalar::one(16));
        assert_eq!(x.b, LaurentScalar::monomial(GaussRat::ratio(-1, 2), -1, 16));
        let back = parse_ramified(&x.to_string(), 16).unwrap();
        assert_eq!(back, x);
        assert_eq!(parse_ramified("j^2", 16).unwrap().a, LaurentScalar::hbar(16));
    }

    #[test]
    fn errors() {
        assert!(parse_series("j", 16).is_err());
        assert!(parse_series("1 +", 16).is_err());
        assert!(parse_series("x", 16).is_err());
        assert!(parse_series("1/0", 16).is_err());
    }
}
