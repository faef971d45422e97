use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::monomial::Monomial;
use super::poly::{MultiPoly, Q};
use super::symbol::{Symbol, NSYM};
use crate::error::{Error, Result};

/// Canonical quotient of two integer-coefficient polynomials.
///
/// Invariants: `den != 0`, `gcd(num, den) = 1`, the joint integer content
/// of `(num, den)` is 1 and the lowest term of `den` (the first one
/// printed) has a positive coefficient. Two equal rational functions
/// therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

/// Binary operations accepted by [`rf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_q(Q::from_integer(BigInt::from(c)))
    }

    pub fn from_q(c: Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: MultiPoly::constant(Q::from_integer(c.numer().clone())),
            den: MultiPoly::constant(Q::from_integer(c.denom().clone())),
        }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_q(Q::new(n.into(), d.into()))
    }

    pub fn var(s: Symbol) -> Self {
        RationalFunction {
            num: MultiPoly::var(s),
            den: MultiPoly::one(),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::normalize_content(p, MultiPoly::one())
    }

    /// `num / den` brought to canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::normalize_content(num, den))
    }

    /// Fix integer content and sign, assuming `num` and `den` coprime.
    fn normalize_content(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (g, l) = MultiPoly::content_parts(
            num.terms().iter().map(|t| &t.1).chain(den.terms().iter().map(|t| &t.1)),
        );
        let mut factor = Q::new(l, g);
        if den.terms().last().is_some_and(|t| t.1.is_negative()) {
            factor = -factor;
        }
        if factor.is_one() {
            return RationalFunction { num, den };
        }
        RationalFunction {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    /// `s^e` for any integer `e`; negative powers live in the denominator.
    pub fn power_of(s: Symbol, e: i64) -> Self {
        let m = MultiPoly::var_pow(s, e.unsigned_abs() as u16);
        if e >= 0 {
            RationalFunction { num: m, den: MultiPoly::one() }
        } else {
            RationalFunction { num: MultiPoly::one(), den: m }
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.num.contains(s) || self.den.contains(s)
    }

    pub fn support(&self) -> u16 {
        self.num.support() | self.den.support()
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return Self::reduce_against(num, self.den.clone(), &self.den);
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            let num = &self.num.scale(&rhs.den.leading_coeff()) + &rhs.num.scale(&self.den.leading_coeff());
            let den = &self.den * &rhs.den;
            return Self::normalize_content(num, den);
        }
        // Henrici: with g = gcd(b, d) only g can share factors with the new numerator.
        let g = gcd(&self.den, &rhs.den);
        if g.is_constant() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return Self::normalize_content(num, den);
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &(&b1 * &d1) * &g;
        Self::reduce_against(num, den, &g)
    }

    /// Cancel `gcd(num, g)` where `g` is known to contain every common factor.
    fn reduce_against(num: MultiPoly, den: MultiPoly, g: &MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let h = gcd(&num, g);
        if h.is_constant() {
            return Self::normalize_content(num, den);
        }
        Self::normalize_content(num.div_exact(&h).unwrap(), den.div_exact(&h).unwrap())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        Self::normalize_content(&a * &c, &b * &d)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(Self::normalize_content(base.num.pow(e), base.den.pow(e)))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul(&Self::from_int(c))
    }

    /// Replace `target` by `replacement` and renormalize.
    pub fn substitute(&self, target: Symbol, replacement: &RationalFunction) -> Result<Self> {
        if !self.contains(target) {
            return Ok(self.clone());
        }
        let dn = self.num.degree_in(target);
        let dd = self.den.degree_in(target);
        let r = &replacement.num;
        let s = &replacement.den;

        // x -> c * m * x with a monomial m free of x is invertible on
        // Laurent polynomials, so only a monomial factor can appear.
        if replacement.den.is_constant()
            && replacement.num.is_monomial()
            && replacement.num.terms()[0].0.exp(target) == 1
        {
            let (m, c) = &replacement.num.terms()[0];
            let c = c / replacement.den.leading_coeff();
            let mut scale_vars = *m;
            scale_vars.0[target.index()] = 0;
            let apply = |p: &MultiPoly| {
                MultiPoly::from_terms(p.terms().iter().map(|(pm, pc)| {
                    let e = pm.exp(target);
                    let mut mono = *pm;
                    for (i, se) in scale_vars.0.iter().enumerate() {
                        mono.0[i] += se * e;
                    }
                    (mono, pc * num_traits::pow(c.clone(), e as usize))
                }))
            };
            let n = apply(&self.num);
            let d = apply(&self.den);
            let mg = n.monomial_content().gcd(&d.monomial_content());
            return Ok(Self::normalize_content(n.div_monomial(&mg), d.div_monomial(&mg)));
        }

        let homogenize = |p: &MultiPoly, deg: u16| -> MultiPoly {
            let coeffs = p.to_univariate(target);
            let mut acc = MultiPoly::zero();
            let mut rpow = MultiPoly::one();
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    let spow = s.pow((deg as usize - i) as u32);
                    acc = &acc + &(&(c * &rpow) * &spow);
                }
                rpow = &rpow * r;
            }
            acc
        };
        let mut n = homogenize(&self.num, dn);
        let mut d = homogenize(&self.den, dd);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // f = n / s^dn over d / s^dd
        if dd > dn {
            n = &n * &s.pow((dd - dn) as u32);
        } else if dn > dd {
            d = &d * &s.pow((dn - dd) as u32);
        }
        Self::new(n, d)
    }

    /// Evaluate at a rational point; `None` if the denominator vanishes.
    pub fn eval(&self, point: &[Q; NSYM]) -> Option<Q> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Cheap structural size, used for ordering work.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// Exponent of the largest power of `s` dividing the numerator minus
    /// that of the denominator.
    pub fn valuation(&self, s: Symbol) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.min_degree_in(s) as i64 - self.den.min_degree_in(s) as i64)
    }

    /// Coefficients of the numerator and denominator with respect to `s`.
    pub fn split_in(&self, s: Symbol) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
        (self.num.to_univariate(s), self.den.to_univariate(s))
    }

    /// `c * m` for an integer `c` and monomial `m`.
    pub fn monomial(c: i64, m: Monomial) -> Self {
        Self::from_poly(MultiPoly::term(m, Q::from_integer(c.into())))
    }

    /// `gcd` of all numerator integer coefficients (1 in canonical form).
    #[doc(hidden)]
    pub fn content_is_unit(&self) -> bool {
        let mut g = BigInt::zero();
        for (_, c) in self.num.terms().iter().chain(self.den.terms()) {
            if !c.denom().is_one() {
                return false;
            }
            g = g.gcd(c.numer());
        }
        g.is_one()
    }
}

/// Remove the gcd of `a` and `b` from both.
fn cancel(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if b.is_constant() || a.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = gcd(a, b);
    if g.is_constant() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
    }
}

/// Exact field operation on two rational functions.
pub fn rf_arith(lhs: &RationalFunction, rhs: &RationalFunction, op: ArithOp) -> Result<RationalFunction> {
    Ok(match op {
        ArithOp::Add => lhs.add(rhs),
        ArithOp::Sub => lhs.sub(rhs),
        ArithOp::Mul => lhs.mul(rhs),
        ArithOp::Div => lhs.div(rhs)?,
    })
}

pub fn rf_substitute(f: &RationalFunction, target: Symbol, replacement: &RationalFunction) -> Result<RationalFunction> {
    f.substitute(target, replacement)
}

pub fn rf_eval_integer_power(base: Symbol, exponent: i64) -> RationalFunction {
    RationalFunction::power_of(base, exponent)
}

impl fmt::Display for RationalFunction {
    /// Canonical string, e.g. `(1-q^2)/(1-q)` or `1+q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        let den = self.den.to_string();
        let num = if self.num.len() > 1 { format!("({num})") } else { num };
        let den = if self.den.len() > 1 || den.contains('*') { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RF({self})")
    }
}

macro_rules! rf_ops {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $body(self, rhs)
            }
        }
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $body(&self, rhs)
            }
        }
    };
}

rf_ops!(Add, add, |a: &RationalFunction, b: &RationalFunction| RationalFunction::add(a, b));
rf_ops!(Sub, sub, |a: &RationalFunction, b: &RationalFunction| RationalFunction::sub(a, b));
rf_ops!(Mul, mul, |a: &RationalFunction, b: &RationalFunction| RationalFunction::mul(a, b));
rf_ops!(Div, div, |a: &RationalFunction, b: &RationalFunction| {
    RationalFunction::div(a, b).expect("division by zero rational function")
});

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(self)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(&self)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Symbol> for RationalFunction {
    fn from(s: Symbol) -> Self {
        Self::var(s)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a.add(&b))
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a.mul(&b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, qpow, sym};
    use Symbol::*;

    fn one_minus(f: RationalFunction) -> RationalFunction {
        int(1) - f
    }

    #[test]
    fn cancellation_to_one() {
        let q = sym(Q);
        let lhs = &q / &one_minus(q.clone());
        let rhs = one_minus(q.scale_int(2)) / one_minus(q.clone());
        assert!(rf_arith(&lhs, &rhs, ArithOp::Add).unwrap().is_one());
    }

    #[test]
    fn forced_factor_cancellation() {
        let q = sym(Q);
        let f = one_minus(q.pow(2).unwrap()) / one_minus(q.clone());
        assert_eq!(rf_arith(&f, &int(1), ArithOp::Mul).unwrap().to_string(), "1+q");
    }

    #[test]
    fn division_example() {
        // oracle: (1/(1-q)) * (1-q^2) = (1-q)(1+q)/(1-q) = 1+q
        let q = sym(Q);
        let a = int(1) / one_minus(q.clone());
        let b = int(1) / one_minus(q.pow(2).unwrap());
        assert_eq!(rf_arith(&a, &b, ArithOp::Div).unwrap().to_string(), "1+q");
        assert_eq!(rf_arith(&a, &int(0), ArithOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution_examples() {
        let (q, x) = (sym(Q), sym(X));
        let qx = &q * &x;
        assert_eq!(x.pow(2).unwrap().substitute(X, &qx).unwrap().to_string(), "q^2*x^2");
        let f = int(1) / one_minus(x.clone());
        assert_eq!(f.substitute(X, &qx).unwrap(), int(1) / one_minus(qx.clone()));
        let g = one_minus(x.clone()) / one_minus(q.clone());
        let q2x = &q.pow(2).unwrap() * &x;
        assert_eq!(g.substitute(X, &q2x).unwrap(), one_minus(q2x) / one_minus(q.clone()));
        // a non-monomial replacement takes the general path
        let h = &x / &(&x + &int(1));
        let r = &q + &x;
        assert_eq!(h.substitute(X, &r).unwrap(), &r / &(&r + &int(1)));
        // zeroing the denominator identically
        let bad = int(1) / (&x - &q);
        assert_eq!(bad.substitute(X, &q), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(rf_eval_integer_power(Q, 3).to_string(), "q^3");
        assert_eq!(rf_eval_integer_power(Q, -2).to_string(), "1/q^2");
        assert!(rf_eval_integer_power(U, 0).is_one());
        assert!((qpow(-3) * qpow(3)).is_one());
    }

    #[test]
    fn canonical_representative() {
        let (q, a) = (sym(Q), sym(A));
        // (2 - 2q)/(4a - 4qa) == 1/(2a)
        let f = (int(2) - q.scale_int(2)) / (a.scale_int(4) - (&q * &a).scale_int(4));
        assert_eq!(f, int(1) / a.scale_int(2));
        assert_eq!(f.to_string(), "1/(2*a)");
        assert!(f.content_is_unit());
        let g = int(1) / (q.clone() - int(1));
        assert_eq!(g.to_string(), "-1/(1-q)");
    }
}
