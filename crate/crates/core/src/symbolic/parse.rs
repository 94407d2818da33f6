//! Parser for the polynomial text format written by `Display`.
//!
//! Accepts `+ - * / ^`, parentheses, integer literals, ring variables and
//! the constants `I` and `zeta8`. Division is allowed by constants only.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::coeff::Coeff;
use super::poly::{MultiPoly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {1:?} at offset {0}")]
    UnexpectedChar(usize, char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("{0} is not in the coefficient field")]
    NotInField(String),
    #[error("division by a non-constant")]
    NonConstantDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent out of range at offset {0}")]
    BadExponent(usize),
}

struct Parser<'a, C: Coeff> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    _c: core::marker::PhantomData<C>,
}

impl Ring {
    pub fn parse<C: Coeff>(&self, text: &str) -> Result<MultiPoly<C>, ParseError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, ring: self, _c: core::marker::PhantomData };
        let out = p.expr()?;
        p.skip_ws();
        match p.peek() {
            None => Ok(out),
            Some(c) => Err(ParseError::UnexpectedChar(p.pos, c as char)),
        }
    }
}

impl<C: Coeff> Parser<'_, C> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly<C>, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<C>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?.constant_value().ok_or(ParseError::NonConstantDivisor)?;
                acc = acc.scale(&d.inv().ok_or(ParseError::DivisionByZero)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<C>, ParseError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| ParseError::BadExponent(start))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default().to_string()
    }

    fn atom(&mut self) -> Result<MultiPoly<C>, ParseError> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err(ParseError::UnexpectedEnd);
        };
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                return match self.peek() {
                    Some(c) => Err(ParseError::UnexpectedChar(self.pos, c as char)),
                    None => Err(ParseError::UnexpectedEnd),
                };
            }
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let n: BigInt = self.digits().parse().map_err(|_| ParseError::UnexpectedChar(self.pos, c as char))?;
            return Ok(self.ring.constant(C::from_rational(BigRational::from_integer(n))));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                self.pos += 1;
            }
            let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
            if self.ring.index(name).is_some() {
                return Ok(self.ring.var(name));
            }
            let constant = match name {
                "I" => Some(C::root_of_unity(4, 1)),
                "zeta8" => Some(C::root_of_unity(8, 1)),
                _ => None,
            };
            return match constant {
                Some(Some(v)) => Ok(self.ring.constant(v)),
                Some(None) => Err(ParseError::NotInField(name.to_string())),
                None => Err(ParseError::UnknownIdentifier(name.to_string())),
            };
        }
        Err(ParseError::UnexpectedChar(self.pos, c as char))
    }
}
