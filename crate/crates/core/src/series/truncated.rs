use std::fmt;

use crate::coeff::{int, qpow, write_monomial, Monomial, RationalFunction, Symbol};
use crate::error::{Error, Result};
use crate::qcomb::qbinomial;

/// Additive and multiplicative series operations for [`series_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Power series in one variable, known exactly through `var^order`.
///
/// Coefficients never contain `var`. Binary operations keep the smaller of
/// the two orders.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Symbol,
    coeffs: Vec<RationalFunction>,
}

impl TruncatedSeries {
    /// `coeffs[j]` multiplies `var^j`; missing entries are zero and extra
    /// entries beyond `order` are dropped.
    pub fn new(var: Symbol, order: usize, mut coeffs: Vec<RationalFunction>) -> Result<Self> {
        coeffs.resize(order + 1, RationalFunction::zero());
        if coeffs.iter().any(|c| c.contains(var)) {
            return Err(Error::ImpureCoefficient(var));
        }
        Ok(TruncatedSeries { var, coeffs })
    }

    pub(crate) fn from_vec_unchecked(var: Symbol, coeffs: Vec<RationalFunction>) -> Self {
        debug_assert!(!coeffs.is_empty());
        debug_assert!(coeffs.iter().all(|c| !c.contains(var)));
        TruncatedSeries { var, coeffs }
    }

    pub fn zero(var: Symbol, order: usize) -> Self {
        TruncatedSeries {
            var,
            coeffs: vec![RationalFunction::zero(); order + 1],
        }
    }

    pub fn constant(var: Symbol, order: usize, c: RationalFunction) -> Result<Self> {
        Self::monomial(var, order, c, 0)
    }

    pub fn one(var: Symbol, order: usize) -> Self {
        Self::constant(var, order, RationalFunction::one()).unwrap()
    }

    /// `c * var^e`.
    pub fn monomial(var: Symbol, order: usize, c: RationalFunction, e: usize) -> Result<Self> {
        if c.contains(var) {
            return Err(Error::ImpureCoefficient(var));
        }
        let mut s = Self::zero(var, order);
        if e <= order {
            s.coeffs[e] = c;
        }
        Ok(s)
    }

    /// Taylor expansion of a rational function about `var = 0`.
    pub fn from_rational(f: &RationalFunction, var: Symbol, order: usize) -> Result<Self> {
        if !f.contains(var) {
            return Self::constant(var, order, f.clone());
        }
        let (num, den) = f.split_in(var);
        let lift = |p: Vec<crate::coeff::MultiPoly>| -> Vec<RationalFunction> {
            p.into_iter().map(RationalFunction::from_poly).collect()
        };
        let num = Self::from_vec_unchecked(var, padded(lift(num), order));
        if den.len() == 1 {
            let inv = RationalFunction::from_poly(den[0].clone()).recip()?;
            return Ok(num.scale(&inv));
        }
        let den = Self::from_vec_unchecked(var, padded(lift(den), order));
        Ok(num.mul(&den.invert()?))
    }

    pub fn var(&self) -> Symbol {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &RationalFunction {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(self.zip(other, |a, b| a.add(b)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(self.zip(other, |a, b| a.sub(b)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let mut out = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut acc = RationalFunction::zero();
            for i in 0..=j {
                let (a, b) = (&self.coeffs[i], &other.coeffs[j - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            out.push(acc);
        }
        Ok(Self::from_vec_unchecked(self.var, out))
    }

    /// Panicking variants for builders that construct both operands in
    /// the same variable.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("series variable mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("series variable mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("series variable mismatch")
    }

    fn zip(&self, other: &Self, f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|j| f(&self.coeffs[j], &other.coeffs[j])).collect();
        Self::from_vec_unchecked(self.var, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_vec_unchecked(self.var, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    /// Multiply every coefficient by `c` (which must be free of `var`).
    pub fn scale(&self, c: &RationalFunction) -> Self {
        assert!(!c.contains(self.var), "scaling by an impure coefficient");
        Self::from_vec_unchecked(self.var, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiply by `var^e`, keeping the order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![RationalFunction::zero(); n];
        coeffs[e..n].clone_from_slice(&self.coeffs[..n - e]);
        Self::from_vec_unchecked(self.var, coeffs)
    }

    /// `s(c * var)`: coefficient `j` picks up `c^j`.
    pub fn dilate(&self, c: &RationalFunction) -> Self {
        let mut pow = RationalFunction::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.mul(&pow));
            pow = pow.mul(c);
        }
        Self::from_vec_unchecked(self.var, coeffs)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.recip()?;
        let mut out: Vec<RationalFunction> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        let minus_inv0 = inv0.neg();
        for j in 1..self.coeffs.len() {
            let mut acc = RationalFunction::zero();
            for i in 1..=j {
                let a = &self.coeffs[i];
                if a.is_zero() || out[j - i].is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&out[j - i]));
            }
            out.push(acc.mul(&minus_inv0));
        }
        Ok(Self::from_vec_unchecked(self.var, out))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var, self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// First index where the two series differ, as `(j, self_j, other_j)`.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, RationalFunction, RationalFunction)> {
        let order = self.order().min(other.order());
        (0..=order)
            .find(|&j| self.coeffs[j] != other.coeffs[j])
            .map(|j| (j, self.coeffs[j].clone(), other.coeffs[j].clone()))
    }

    /// Every coefficient is free of the expansion variable.
    pub fn is_pure(&self) -> bool {
        self.coeffs.iter().all(|c| !c.contains(self.var))
    }

    /// The retained coefficients summed as a polynomial in `var`.
    pub fn to_polynomial(&self) -> RationalFunction {
        let v = RationalFunction::var(self.var);
        let mut acc = RationalFunction::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&v).add(c);
        }
        acc
    }

    /// `D_q^power`, lowering the order by `power`.
    pub fn dq(&self, power: usize) -> Result<Self> {
        dq_apply(self, power)
    }
}

fn padded(mut v: Vec<RationalFunction>, order: usize) -> Vec<RationalFunction> {
    v.resize(order + 1, RationalFunction::zero());
    v
}

/// Exact series arithmetic; multiplication is the Cauchy product.
pub fn series_arith(lhs: &TruncatedSeries, rhs: &TruncatedSeries, op: SeriesOp) -> Result<TruncatedSeries> {
    match op {
        SeriesOp::Add => lhs.try_add(rhs),
        SeriesOp::Sub => lhs.try_sub(rhs),
        SeriesOp::Mul => lhs.try_mul(rhs),
    }
}

pub fn series_invert(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.invert()
}

/// `D_q^power` in the series variable: `D_q x^{j+1} = (1 - q^{j+1}) x^j`.
pub fn dq_apply(s: &TruncatedSeries, power: usize) -> Result<TruncatedSeries> {
    if power > s.order() {
        return Err(Error::OrderExhausted {
            needed: power,
            available: s.order(),
        });
    }
    let new_order = s.order() - power;
    // D_q^p x^{j+p} = (q^{j+1};q)_p x^j
    let coeffs = (0..=new_order)
        .map(|j| {
            let c = &s.coeffs[j + power];
            if c.is_zero() {
                return RationalFunction::zero();
            }
            let mut f = RationalFunction::one();
            for i in 1..=power {
                f = f.mul(&(int(1) - qpow((j + i) as i64)));
            }
            c.mul(&f)
        })
        .collect();
    Ok(TruncatedSeries::from_vec_unchecked(s.var, coeffs))
}

/// Right-hand side of the q-Leibniz rule,
/// `sum_k q^{-k(n-k)} [n,k] D_q^k{f(x)} D_q^{n-k}{g(q^k x)}`.
///
/// `D_q^{n-k}` acts on the dilated function `x -> g(q^k x)`, which carries
/// its own `q^{k(n-k)}`; the negative weight cancels it.
pub fn dq_leibniz(f: &TruncatedSeries, g: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    leibniz_sum(f, g, n, -1)
}

/// The same sum with weight `q^{+k(n-k)}`; differs from `D_q^n{fg}` once
/// `n >= 2`.
pub fn dq_leibniz_printed(f: &TruncatedSeries, g: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    leibniz_sum(f, g, n, 1)
}

fn leibniz_sum(f: &TruncatedSeries, g: &TruncatedSeries, n: usize, sign: i64) -> Result<TruncatedSeries> {
    f.check_var(g)?;
    let order = f.order().min(g.order());
    if n > order {
        return Err(Error::OrderExhausted { needed: n, available: order });
    }
    let mut acc = TruncatedSeries::zero(f.var, order - n);
    for k in 0..=n {
        let weight = qpow(sign * (k * (n - k)) as i64).mul(&qbinomial(n as i64, k as i64));
        let fk = dq_apply(f, k)?;
        let gk = dq_apply(&g.dilate(&qpow(k as i64)), n - k)?;
        acc = acc.add(&fk.mul(&gk).scale(&weight));
    }
    Ok(acc)
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = Monomial::var(self.var, j as u16);
            if j == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "({c})*")?;
                }
                write_monomial(f, &mono, "*")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{sym, Symbol::*};
    use crate::qcomb::qpochhammer;

    fn poly_x(cs: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::new(X, order, cs.iter().map(|&c| int(c)).collect()).unwrap()
    }

    fn x_pow(e: usize, order: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(X, order, int(1), e).unwrap()
    }

    #[test]
    fn products() {
        let p = poly_x(&[1, 1], 2).mul(&poly_x(&[1, -1], 2));
        assert_eq!(p, poly_x(&[1, 0, -1], 2));
        let geo = poly_x(&[1, 1, 1, 1], 3);
        assert_eq!(geo.mul(&TruncatedSeries::one(X, 3)), geo);
        assert_eq!(geo.mul(&poly_x(&[1, -1], 3)), TruncatedSeries::one(X, 3));
    }

    #[test]
    fn mismatched_variables() {
        let a = TruncatedSeries::one(X, 2);
        let b = TruncatedSeries::one(Y, 2);
        assert_eq!(series_arith(&a, &b, SeriesOp::Mul), Err(Error::VariableMismatch(X, Y)));
    }

    #[test]
    fn inversion() {
        let s = TruncatedSeries::new(X, 5, vec![int(1), sym(Y).neg()]).unwrap();
        let inv = series_invert(&s).unwrap();
        for j in 0..=5 {
            assert_eq!(*inv.coeff(j), sym(Y).pow(j as i64).unwrap());
        }
        let two = TruncatedSeries::constant(X, 3, int(2)).unwrap();
        assert_eq!(*series_invert(&two).unwrap().coeff(0), RationalFunction::ratio(1, 2));
        assert_eq!(series_invert(&x_pow(1, 3)), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn rational_expansion() {
        let f = int(1).div(&(int(1) - sym(X) * sym(Y))).unwrap();
        let s = TruncatedSeries::from_rational(&f, X, 4).unwrap();
        assert_eq!(*s.coeff(3), sym(Y).pow(3).unwrap());
        let g = (int(1) + sym(X)).div(&(int(2) * sym(Q))).unwrap();
        let s = TruncatedSeries::from_rational(&g, X, 2).unwrap();
        assert_eq!(*s.coeff(1), int(1).div(&(int(2) * sym(Q))).unwrap());
        assert!(s.coeff(2).is_zero());
    }

    #[test]
    fn dq_examples() {
        let q = sym(Q);
        let d1 = dq_apply(&x_pow(3, 4), 1).unwrap();
        assert_eq!(*d1.coeff(2), int(1) - q.pow(3).unwrap());
        let d2 = dq_apply(&x_pow(3, 4), 2).unwrap();
        assert_eq!(*d2.coeff(1), (int(1) - q.pow(3).unwrap()) * (int(1) - q.pow(2).unwrap()));
        assert_eq!(d2.order(), 2);
        assert!(dq_apply(&TruncatedSeries::constant(X, 3, sym(A)).unwrap(), 1).unwrap().is_zero());
        assert_eq!(
            dq_apply(&x_pow(1, 2), 3),
            Err(Error::OrderExhausted { needed: 3, available: 2 })
        );
    }

    #[test]
    fn dq_on_monomials() {
        for m in 0..6usize {
            for k in 0..=6usize {
                let d = dq_apply(&x_pow(m, 6), k).unwrap();
                let mut expected = TruncatedSeries::zero(X, 6 - k);
                if k <= m {
                    let c = qpochhammer(&sym(Q), m).div(&qpochhammer(&sym(Q), m - k)).unwrap();
                    expected = TruncatedSeries::monomial(X, 6 - k, c, m - k).unwrap();
                }
                assert_eq!(d, expected, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn leibniz_examples() {
        let x = x_pow(1, 4);
        let l = dq_leibniz(&x, &x, 1).unwrap();
        assert_eq!(l, dq_apply(&x_pow(2, 4), 1).unwrap());
        let l = dq_leibniz(&x, &x_pow(2, 4), 2).unwrap();
        assert_eq!(l, dq_apply(&x_pow(3, 4), 2).unwrap());
        let f = poly_x(&[3, -1, 0, 2, 5], 4);
        for n in 0..=4 {
            assert_eq!(dq_leibniz(&f, &TruncatedSeries::one(X, 4), n).unwrap(), dq_apply(&f, n).unwrap());
        }
    }

    #[test]
    fn printed_leibniz_weight_fails_at_second_order() {
        let x = x_pow(1, 4);
        assert_eq!(dq_leibniz_printed(&x, &x, 1).unwrap(), dq_apply(&x_pow(2, 4), 1).unwrap());
        assert_ne!(
            dq_leibniz_printed(&x, &x_pow(2, 4), 2).unwrap(),
            dq_apply(&x_pow(3, 4), 2).unwrap()
        );
    }

    #[test]
    fn impure_coefficients_rejected() {
        assert_eq!(
            TruncatedSeries::new(X, 2, vec![sym(X)]),
            Err(Error::ImpureCoefficient(X))
        );
    }
}
