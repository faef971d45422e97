use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::symbol::{Symbol, NSYM};

/// Arbitrary-precision rational scalar.
pub type Q = BigRational;

/// Sparse multivariate polynomial over `Q` in the fixed alphabet.
///
/// Terms are kept sorted by descending [`Monomial`] order, so the first
/// term is the leading term; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Q)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Q::from_integer(BigInt::from(c)))
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    pub fn var(s: Symbol) -> Self {
        Self::term(Monomial::var(s, 1), Q::one())
    }

    pub fn var_pow(s: Symbol, e: u16) -> Self {
        Self::term(Monomial::var(s, e), Q::one())
    }

    /// Build from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Q>) -> Self {
        let mut terms: Vec<(Monomial, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Q)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Q {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Q::zero)
    }

    /// Bitmask of the symbols that occur anywhere.
    pub fn support(&self) -> u16 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.support() & (1 << s.index()) != 0
    }

    pub fn degree_in(&self, s: Symbol) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(s)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, s: Symbol) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(s)).min().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((first, _)) => it.fold(*first, |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect(),
        }
    }

    /// Caller guarantees `mono` divides every term.
    pub fn div_monomial(&self, mono: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.div(mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients with respect to `s`: entry `i` multiplies `s^i`.
    pub fn to_univariate(&self, s: Symbol) -> Vec<MultiPoly> {
        let deg = self.degree_in(s) as usize;
        let mut buckets: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(s) as usize;
            buckets[e].push((m.with_exp(s, 0), c.clone()));
        }
        // Removing one exponent keeps the relative lex order of the others.
        buckets.into_iter().map(|terms| MultiPoly { terms }).collect()
    }

    pub fn from_univariate(s: Symbol, coeffs: &[MultiPoly]) -> Self {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                debug_assert_eq!(m.exp(s), 0);
                terms.push((m.with_exp(s, i as u16), v.clone()));
            }
        }
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MultiPoly { terms }
    }

    /// Exact quotient `self / divisor`, or `None` when it does not divide.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        if divisor.is_monomial() {
            let (dm, dc) = &divisor.terms[0];
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.push((m.div(dm), c * &inv));
            }
            return Some(MultiPoly { terms });
        }
        let (lm, lc) = divisor.terms[0].clone();
        let lc_inv = lc.recip();
        let mut rem: BTreeMap<Monomial, Q> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = &c * &lc_inv;
            for (dm, dc) in &divisor.terms {
                let key = dm.mul(&tm);
                let delta = dc * &tc;
                let remove = match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &delta;
                        v.is_zero()
                    }
                    None => {
                        rem.insert(key, -delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&key);
                }
            }
            quot.push((tm, tc));
        }
        Some(MultiPoly { terms: quot })
    }

    /// Scale to integer coefficients with unit content.
    ///
    /// Returns `(factor, primitive)` with `self = factor * primitive`;
    /// `primitive` has a positive lowest-order coefficient.
    pub fn integer_primitive(&self) -> (Q, MultiPoly) {
        if self.is_zero() {
            return (Q::one(), Self::zero());
        }
        let (num_gcd, den_lcm) = Self::content_parts(self.terms.iter().map(|t| &t.1));
        let mut factor = Q::new(num_gcd, den_lcm);
        if self.terms[self.terms.len() - 1].1.is_negative() {
            factor = -factor;
        }
        let inv = factor.recip();
        (factor, self.scale(&inv))
    }

    /// gcd of numerators and lcm of denominators over a coefficient list.
    pub(crate) fn content_parts<'a, I: Iterator<Item = &'a Q>>(it: I) -> (BigInt, BigInt) {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in it {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        (g, l)
    }

    /// Substitute a polynomial for one symbol.
    pub fn substitute(&self, s: Symbol, value: &MultiPoly) -> MultiPoly {
        if !self.contains(s) {
            return self.clone();
        }
        let coeffs = self.to_univariate(s);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Evaluate at a rational point (indexed by symbol order).
    pub fn eval(&self, point: &[Q; NSYM]) -> Q {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Terms in ascending canonical order (constant first), for display.
    pub fn terms_ascending(&self) -> impl Iterator<Item = &(Monomial, Q)> {
        self.terms.iter().rev()
    }
}

fn merge(a: &[(Monomial, Q)], b: &[(Monomial, Q)], negate_b: bool) -> Vec<(Monomial, Q)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly {
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly {
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MultiPoly::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, m: &Monomial, sep: &str) -> fmt::Result {
    let mut first = true;
    for s in Symbol::ALL {
        let e = m.exp(s);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(sep)?;
        }
        first = false;
        if e == 1 {
            write!(f, "{s}")?;
        } else {
            write!(f, "{s}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    /// Ascending canonical term order, e.g. `1-q^2` or `1+q*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms_ascending().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m, "*")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
