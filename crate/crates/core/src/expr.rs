//! Text input for supernumbers.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number ['i'] | 'i' | 'x' INT | 'bx' INT | '(' expr ')' | '-' factor
//! number := INT ['/' INT]
//! ```
//!
//! `bx k` is the conjugate generator, i.e. the pairing partner of `x k`. The
//! printed form of a [`SuperNumber`] is accepted back, so printing and parsing
//! round-trip.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(GaussianRational),
    Gen { index: usize, conjugate: bool },
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, alg: &Arc<GrassmannAlgebra>) -> Result<SuperNumber> {
        Ok(match self {
            Expr::Scalar(c) => SuperNumber::scalar(alg, c.clone()),
            Expr::Gen { index, conjugate } => {
                let g = SuperNumber::generator(alg, *index)?;
                if *conjugate {
                    g.bar()
                } else {
                    g
                }
            }
            Expr::Neg(e) => -&e.eval(alg)?,
            Expr::Sum(a, b) => &a.eval(alg)? + &b.eval(alg)?,
            Expr::Diff(a, b) => &a.eval(alg)? - &b.eval(alg)?,
            Expr::Product(a, b) => &a.eval(alg)? * &b.eval(alg)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "{c}"),
            Expr::Gen { index, conjugate: false } => write!(f, "x{index}"),
            Expr::Gen { index, conjugate: true } => write!(f, "bx{index}"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Sum(a, b) => write!(f, "({a} + {b})"),
            Expr::Diff(a, b) => write!(f, "({a} - {b})"),
            Expr::Product(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(BigInt::from_str(s).expect("digits"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Expr::Neg(Box::new(self.term()?))
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            if self.eat(b'+') {
                acc = Expr::Sum(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Diff(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = Expr::Product(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn generator(&mut self, conjugate: bool) -> Result<Expr> {
        let at = self.pos;
        let n = self.digits()?;
        let index = usize::try_from(n).or_else(|_| self.err("generator index too large"))?;
        if index == 0 {
            return Err(Error::Parse { pos: at, msg: "generators are numbered from 1".into() });
        }
        Ok(Expr::Gen { index, conjugate })
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'x') => {
                self.pos += 1;
                self.generator(false)
            }
            Some(b'b') if self.src.get(self.pos + 1) == Some(&b'x') => {
                self.pos += 2;
                self.generator(true)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Expr::Scalar(GaussianRational::i()))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut value = BigRational::from_integer(num);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    value /= BigRational::from_integer(den);
                }
                if self.src.get(self.pos) == Some(&b'i') {
                    self.pos += 1;
                    return Ok(Expr::Scalar(GaussianRational::new(BigRational::zero(), value)));
                }
                Ok(Expr::Scalar(GaussianRational::from_real(value)))
            }
            Some(c) => self.err(format!("unexpected {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses text into an AST without reference to any algebra.
pub fn parse_ast(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses and evaluates in `alg`; the result is canonical.
pub fn parse_expr(text: &str, alg: &Arc<GrassmannAlgebra>) -> Result<SuperNumber> {
    parse_ast(text)?.eval(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Arc<GrassmannAlgebra> {
        GrassmannAlgebra::default_working()
    }

    fn x(k: usize) -> SuperNumber {
        SuperNumber::generator(&alg(), k).unwrap()
    }

    #[test]
    fn examples() {
        let a = alg();
        assert_eq!(parse_expr("1 + x1*x2", &a).unwrap(), &SuperNumber::one(&a) + &(&x(1) * &x(2)));
        assert_eq!(parse_expr("x2*x1", &a).unwrap(), -&(&x(1) * &x(2)));
        let c = GaussianRational::from_parts((1, 2), (3, 2));
        assert_eq!(parse_expr("(1/2 + 3/2i)*bx1", &a).unwrap(), x(1).bar().scale(&c));
        assert_eq!(parse_expr("bx1", &a).unwrap(), x(5));
    }

    #[test]
    fn printed_forms_parse_back() {
        let a = alg();
        for s in ["0", "-3/2", "1i", "(1/2 - 3i)*x1*x5 + -2i*x2 - x3*x4", "x1 - 7*x8 + 2"] {
            let v = parse_expr(s, &a).unwrap();
            assert_eq!(parse_expr(&v.to_string(), &a).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let a = alg();
        assert_eq!(parse_expr("x9", &a), Err(Error::GeneratorOutOfRange { index: 9, q: 8 }));
        assert!(matches!(parse_expr("1 + * x1", &a), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_expr("(x1", &a), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_expr("x0", &a), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_expr("1/0", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("x1 x2", &a), Err(Error::Parse { pos: 3, .. })));
    }
}
