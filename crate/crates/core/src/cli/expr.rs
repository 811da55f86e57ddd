//! Surface syntax for pseudo-continuum points.
//!
//! ```text
//! expr    := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | atom
//! atom    := rational | 'e[' int (',' int)* ']' | '(' expr ')'
//! rational:= digits ('/' digits)?
//! ```
//!
//! `*` is left-associative and not commutative. Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::pseudo::{CoordIndex, PseudoContinuum, PseudoError, PseudoPoint};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoExpr {
    Lit(Rational),
    Unit(CoordIndex),
    Neg(Box<PseudoExpr>),
    Add(Box<PseudoExpr>, Box<PseudoExpr>),
    Sub(Box<PseudoExpr>, Box<PseudoExpr>),
    Mul(Box<PseudoExpr>, Box<PseudoExpr>),
}

/// A syntax error; `position` is the 1-based character column.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {position}: {message}")]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

impl PseudoExpr {
    pub fn eval(&self, ring: &PseudoContinuum) -> Result<PseudoPoint, PseudoError> {
        Ok(match self {
            PseudoExpr::Lit(q) => ring.embed(q.clone()),
            PseudoExpr::Unit(idx) => ring.unit(idx)?,
            PseudoExpr::Neg(x) => x.eval(ring)?.neg(),
            PseudoExpr::Add(x, y) => ring.add(&x.eval(ring)?, &y.eval(ring)?)?,
            PseudoExpr::Sub(x, y) => ring.sub(&x.eval(ring)?, &y.eval(ring)?)?,
            PseudoExpr::Mul(x, y) => ring.mul(&x.eval(ring)?, &y.eval(ring)?)?,
        })
    }
}

impl fmt::Display for PseudoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PseudoExpr::Lit(q) => write!(f, "{q}"),
            PseudoExpr::Unit(idx) => write!(f, "{idx}"),
            PseudoExpr::Neg(x) => write!(f, "-({x})"),
            PseudoExpr::Add(x, y) => write!(f, "({x} + {y})"),
            PseudoExpr::Sub(x, y) => write!(f, "({x} - {y})"),
            PseudoExpr::Mul(x, y) => write!(f, "({x} * {y})"),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            position: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.fail(format!("expected `{c}`, found `{found}`")),
                None => self.fail(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<PseudoExpr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = PseudoExpr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = PseudoExpr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<PseudoExpr, ExprError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = PseudoExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PseudoExpr, ExprError> {
        if self.eat('-') {
            return Ok(PseudoExpr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<PseudoExpr, ExprError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('e') => {
                self.pos += 1;
                self.expect('[')?;
                let mut coeffs = vec![self.signed()?];
                while self.eat(',') {
                    coeffs.push(self.signed()?);
                }
                self.expect(']')?;
                Ok(PseudoExpr::Unit(CoordIndex::new(coeffs)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                if self.eat('/') {
                    let at = self.pos;
                    let den = self.digits()?;
                    if den == BigInt::from(0) {
                        self.pos = at;
                        return self.fail("zero denominator");
                    }
                    Ok(PseudoExpr::Lit(Rational::new(num, den)))
                } else {
                    Ok(PseudoExpr::Lit(Rational::from_integer(num)))
                }
            }
            Some(c) => self.fail(format!("unexpected `{c}`")),
            None => self.fail("unexpected end of input"),
        }
    }

    fn signed(&mut self) -> Result<BigInt, ExprError> {
        let negative = self.eat('-');
        let n = self.digits()?;
        Ok(if negative { -n } else { n })
    }
}

pub fn parse_expr(src: &str) -> Result<PseudoExpr, ExprError> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.fail(format!("unexpected `{c}`"));
    }
    Ok(e)
}
