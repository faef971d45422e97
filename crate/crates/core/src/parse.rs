//! A small expression language for the command line.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! primary := integer | symbol | '(' expr ')' | call
//! call    := poch(expr, n) | qbinom(n, k) | qfact(n) | qinf(expr)
//! ```
//!
//! `qinf(e)` is `(e;q)_inf`; it has no rational-function value and only
//! makes sense under [`Expr::expand`] when `e` vanishes at the origin.

use crate::coeff::{int, RationalFunction, Symbol};
use crate::error::{Error, Result};
use crate::qcomb::{qbinomial, qfactorial, qpochhammer};
use crate::series::{pochhammer_of_series, PochhammerMode, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Sym(Symbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `(e;q)_n`.
    Poch(Box<Expr>, usize),
    QBinom(i64, i64),
    QFact(usize),
    /// `(e;q)_inf`.
    QInf(Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser { src: src.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Exact value; fails on `qinf`.
    pub fn to_rational(&self) -> Result<RationalFunction> {
        Ok(match self {
            Expr::Int(n) => int(*n),
            Expr::Sym(s) => RationalFunction::var(*s),
            Expr::Neg(e) => e.to_rational()?.neg(),
            Expr::Add(a, b) => a.to_rational()?.add(&b.to_rational()?),
            Expr::Sub(a, b) => a.to_rational()?.sub(&b.to_rational()?),
            Expr::Mul(a, b) => a.to_rational()?.mul(&b.to_rational()?),
            Expr::Div(a, b) => a.to_rational()?.div(&b.to_rational()?)?,
            Expr::Pow(a, e) => a.to_rational()?.pow(*e)?,
            Expr::Poch(a, n) => qpochhammer(&a.to_rational()?, *n),
            Expr::QBinom(n, k) => qbinomial(*n, *k),
            Expr::QFact(n) => qfactorial(*n),
            Expr::QInf(_) => {
                return Err(Error::UnsupportedExpression(
                    "an infinite product has no rational value; expand it in a series variable".into(),
                ))
            }
        })
    }

    /// Expansion in `var` through `var^order`.
    ///
    /// Rational subtrees are expanded as a whole, so `x/x` or
    /// `1/(x - x^2)` behave as their reduced forms would.
    pub fn expand(&self, var: Symbol, order: usize) -> Result<TruncatedSeries> {
        if !self.has_qinf() {
            return TruncatedSeries::from_rational(&self.to_rational()?, var, order);
        }
        Ok(match self {
            Expr::Neg(e) => e.expand(var, order)?.neg(),
            Expr::Add(a, b) => a.expand(var, order)?.try_add(&b.expand(var, order)?)?,
            Expr::Sub(a, b) => a.expand(var, order)?.try_sub(&b.expand(var, order)?)?,
            Expr::Mul(a, b) => a.expand(var, order)?.try_mul(&b.expand(var, order)?)?,
            Expr::Div(a, b) => a.expand(var, order)?.try_mul(&b.expand(var, order)?.invert()?)?,
            Expr::Pow(a, e) => {
                let s = a.expand(var, order)?;
                let s = if *e < 0 { s.invert()? } else { s };
                s.pow(e.unsigned_abs() as usize)
            }
            Expr::Poch(a, n) => {
                let s = a.expand(var, order)?;
                let mut acc = TruncatedSeries::one(var, order);
                let mut qk = int(1);
                for _ in 0..*n {
                    let factor = TruncatedSeries::one(var, order).sub(&s.scale(&qk));
                    acc = acc.mul(&factor);
                    qk = qk.mul(&RationalFunction::var(Symbol::Q));
                }
                acc
            }
            Expr::QInf(a) => pochhammer_of_series(&a.expand(var, order)?, PochhammerMode::InfiniteProduct)?,
            Expr::Int(_) | Expr::Sym(_) | Expr::QBinom(..) | Expr::QFact(_) => unreachable!("no qinf inside"),
        })
    }

    fn has_qinf(&self) -> bool {
        match self {
            Expr::QInf(_) => true,
            Expr::Neg(e) | Expr::Pow(e, _) | Expr::Poch(e, _) => e.has_qinf(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.has_qinf() || b.has_qinf(),
            Expr::Int(_) | Expr::Sym(_) | Expr::QBinom(..) | Expr::QFact(_) => false,
        }
    }
}

/// Parse and evaluate in one step.
pub fn parse_rational(src: &str) -> Result<RationalFunction> {
    Expr::parse(src)?.to_rational()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_alphanumeric()) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let e = if self.eat(b'(') {
                let e = self.signed_int()?;
                self.expect(b')')?;
                e
            } else {
                self.signed_int()?
            };
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let n = self.integer()?;
        Ok(if neg { -n } else { n })
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }

    fn count(&mut self) -> Result<usize> {
        let pos = self.pos;
        usize::try_from(self.signed_int()?).map_err(|_| Error::Parse { pos, msg: "expected a non-negative integer".into() })
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters");
                if word.len() > 1 && self.peek() == Some(b'(') {
                    return self.call(word, start);
                }
                // letters juxtapose one symbol at a time, so `qx^2` is q*x^2
                self.pos = start + 1;
                let c = word.as_bytes()[0] as char;
                Symbol::from_char(c)
                    .map(Expr::Sym)
                    .ok_or_else(|| Error::Parse { pos: start, msg: format!("unknown symbol `{c}`") })
            }
            _ => Err(self.error("expected an operand")),
        }
    }

    fn call(&mut self, name: &str, start: usize) -> Result<Expr> {
        self.expect(b'(')?;
        let e = match name {
            "poch" => {
                let a = self.expr()?;
                self.expect(b',')?;
                Expr::Poch(Box::new(a), self.count()?)
            }
            "qbinom" => {
                let n = self.signed_int()?;
                self.expect(b',')?;
                Expr::QBinom(n, self.signed_int()?)
            }
            "qfact" => Expr::QFact(self.count()?),
            "qinf" => Expr::QInf(Box::new(self.expr()?)),
            _ => return Err(Error::Parse { pos: start, msg: format!("unknown function `{name}`") }),
        };
        self.expect(b')')?;
        Ok(e)
    }
}
