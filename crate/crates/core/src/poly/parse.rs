//! Text syntax for polynomials.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power (('*'|'/') power)*        division only by nonzero constants
//! power   := atom ['^' integer]               nonnegative exponent
//! atom    := integer | identifier | '(' expr ')'
//! ident   := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is ignored between tokens. `3/4*x` is the rational coefficient
//! three quarters times `x`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{PolyError, Polynomial};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.power()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.power()?;
                match d.constant_value() {
                    Some(c) if c != BigRational::from_integer(0.into()) => acc = acc.scale(&c.recip()),
                    _ => {
                        self.pos = at;
                        return self.error("division only by a nonzero constant");
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            if self.peek() == Some(b'-') {
                return self.error("negative exponents are not polynomial");
            }
            let Some(n) = self.integer() else {
                return self.error("expected an exponent");
            };
            let Ok(n) = u32::try_from(n) else {
                return self.error("exponent too large");
            };
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("digit seen");
                Ok(Polynomial::constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Polynomial::var(name))
            }
            Some(_) => self.error("unexpected character"),
            None => self.error("unexpected end of input"),
        }
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let poly = p.expr()?;
        if p.peek().is_some() {
            return p.error("trailing input");
        }
        Ok(poly)
    }
}
