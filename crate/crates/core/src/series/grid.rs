use std::fmt;

use crate::coeff::{RationalFunction, Symbol};
use crate::error::{Error, Result};
use crate::qcomb::qpochhammer;

use super::pochhammer::{pochhammer_weight, PochhammerMode};
use super::truncated::TruncatedSeries;

/// Double series `sum c_{ij} outer^i inner^j` over the box `i + j <= degree`.
///
/// Coefficients are free of both variables. Products stay inside the box,
/// so the grid is a ring just like [`TruncatedSeries`].
#[derive(Clone, PartialEq, Eq)]
pub struct GridSeries {
    outer: Symbol,
    inner: Symbol,
    degree: usize,
    // rows[i][j] multiplies outer^i inner^j; rows[i].len() == degree - i + 1
    rows: Vec<Vec<RationalFunction>>,
}

impl GridSeries {
    pub fn zero(outer: Symbol, inner: Symbol, degree: usize) -> Self {
        assert_ne!(outer, inner, "grid variables must differ");
        let rows = (0..=degree)
            .map(|i| vec![RationalFunction::zero(); degree - i + 1])
            .collect();
        GridSeries { outer, inner, degree, rows }
    }

    pub fn one(outer: Symbol, inner: Symbol, degree: usize) -> Self {
        let mut g = Self::zero(outer, inner, degree);
        g.rows[0][0] = RationalFunction::one();
        g
    }

    /// `c * outer^i * inner^j`.
    pub fn monomial(outer: Symbol, inner: Symbol, degree: usize, c: RationalFunction, i: usize, j: usize) -> Result<Self> {
        check_pure(&c, outer, inner)?;
        let mut g = Self::zero(outer, inner, degree);
        if i + j <= degree {
            g.rows[i][j] = c;
        }
        Ok(g)
    }

    /// `sum coeff(i, j) outer^i inner^j` over the box.
    pub fn from_fn(
        outer: Symbol,
        inner: Symbol,
        degree: usize,
        mut coeff: impl FnMut(usize, usize) -> Result<RationalFunction>,
    ) -> Result<Self> {
        let mut g = Self::zero(outer, inner, degree);
        for i in 0..=degree {
            for j in 0..=degree - i {
                let c = coeff(i, j)?;
                check_pure(&c, outer, inner)?;
                g.rows[i][j] = c;
            }
        }
        Ok(g)
    }

    /// Taylor expansion about `outer = inner = 0`.
    pub fn from_rational(f: &RationalFunction, outer: Symbol, inner: Symbol, degree: usize) -> Result<Self> {
        let by_outer = TruncatedSeries::from_rational(f, outer, degree)?;
        let mut g = Self::zero(outer, inner, degree);
        for i in 0..=degree {
            let row = TruncatedSeries::from_rational(by_outer.coeff(i), inner, degree - i)?;
            g.rows[i] = row.coeffs().to_vec();
        }
        Ok(g)
    }

    /// Embed a series in `inner` (free of `outer`) as row 0.
    pub fn from_inner(s: &TruncatedSeries, outer: Symbol, degree: usize) -> Result<Self> {
        if s.order() < degree {
            return Err(Error::OrderExhausted { needed: degree, available: s.order() });
        }
        let mut g = Self::zero(outer, s.var(), degree);
        for j in 0..=degree {
            check_pure(s.coeff(j), outer, s.var())?;
            g.rows[0][j] = s.coeff(j).clone();
        }
        Ok(g)
    }

    /// `(c outer^i0 inner^j0; q)_inf` or its reciprocal.
    pub fn pochhammer(
        c: &RationalFunction,
        (i0, j0): (usize, usize),
        mode: PochhammerMode,
        outer: Symbol,
        inner: Symbol,
        degree: usize,
    ) -> Result<Self> {
        check_pure(c, outer, inner)?;
        if i0 + j0 == 0 {
            return Err(Error::ArgumentNotSeriesPositive(outer));
        }
        let mut g = Self::zero(outer, inner, degree);
        let mut pow = RationalFunction::one();
        let mut n = 0;
        while n * (i0 + j0) <= degree {
            g.rows[n * i0][n * j0] = pochhammer_weight(mode, n).mul(&pow);
            pow = pow.mul(c);
            n += 1;
        }
        Ok(g)
    }

    /// Finite `(c outer^i0 inner^j0; q)_n` as a polynomial in the grid.
    pub fn finite_pochhammer(
        c: &RationalFunction,
        (i0, j0): (usize, usize),
        n: usize,
        outer: Symbol,
        inner: Symbol,
        degree: usize,
    ) -> Result<Self> {
        let w = c
            .mul(&RationalFunction::power_of(outer, i0 as i64))
            .mul(&RationalFunction::power_of(inner, j0 as i64));
        Self::from_rational(&qpochhammer(&w, n), outer, inner, degree)
    }

    pub fn outer(&self) -> Symbol {
        self.outer
    }

    pub fn inner(&self) -> Symbol {
        self.inner
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, i: usize, j: usize) -> &RationalFunction {
        &self.rows[i][j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, c: RationalFunction) {
        debug_assert!(!c.contains(self.outer) && !c.contains(self.inner));
        self.rows[i][j] = c;
    }

    pub fn rows(&self) -> &[Vec<RationalFunction>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.is_zero())
    }

    fn compatible(&self, other: &Self) -> Result<usize> {
        if self.outer != other.outer {
            return Err(Error::VariableMismatch(self.outer, other.outer));
        }
        if self.inner != other.inner {
            return Err(Error::VariableMismatch(self.inner, other.inner));
        }
        Ok(self.degree.min(other.degree))
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let degree = degree.min(self.degree);
        let rows = (0..=degree).map(|i| self.rows[i][..=degree - i].to_vec()).collect();
        GridSeries { rows, degree, ..*self }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.compatible(other)?;
        let mut g = self.truncate(d);
        for (i, row) in g.rows.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = c.add(&other.rows[i][j]);
            }
        }
        Ok(g)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.compatible(other)?;
        let mut g = Self::zero(self.outer, self.inner, d);
        for i1 in 0..=d {
            for j1 in 0..=d - i1 {
                let a = &self.rows[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=d - i1 - j1 {
                    for j2 in 0..=d - i1 - j1 - i2 {
                        let b = &other.rows[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        let t = a.mul(b);
                        let slot = &mut g.rows[i1 + i2][j1 + j2];
                        *slot = slot.add(&t);
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("grid variable mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("grid variable mismatch")
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        assert!(!c.contains(self.outer) && !c.contains(self.inner), "scaling by an impure coefficient");
        self.map(|x| x.mul(c))
    }

    fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(&f).collect()).collect();
        GridSeries { rows, ..*self }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.rows[0][0];
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.recip()?;
        // write self = c0 (1 - r); then 1/self = inv0 * sum r^n, r has no constant term
        let mut r = self.scale(&inv0).neg();
        r.rows[0][0] = RationalFunction::zero();
        let mut acc = Self::one(self.outer, self.inner, self.degree);
        let mut pow = acc.clone();
        for _ in 0..self.degree {
            pow = pow.mul(&r);
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow);
        }
        Ok(acc.scale(&inv0))
    }

    /// Coefficients of `outer^i inner^j` in grid order, first difference wins.
    pub fn first_difference(&self, other: &Self) -> Option<((usize, usize), RationalFunction, RationalFunction)> {
        let d = self.degree.min(other.degree);
        for total in 0..=d {
            for i in 0..=total {
                let j = total - i;
                if self.rows[i][j] != other.rows[i][j] {
                    return Some(((i, j), self.rows[i][j].clone(), other.rows[i][j].clone()));
                }
            }
        }
        None
    }

    pub fn is_pure(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .all(|c| !c.contains(self.outer) && !c.contains(self.inner))
    }
}

fn check_pure(c: &RationalFunction, outer: Symbol, inner: Symbol) -> Result<()> {
    for v in [outer, inner] {
        if c.contains(v) {
            return Err(Error::ImpureCoefficient(v));
        }
    }
    Ok(())
}

impl fmt::Display for GridSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for total in 0..=self.degree {
            for i in 0..=total {
                let j = total - i;
                let c = &self.rows[i][j];
                if c.is_zero() {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                let mut mono = Vec::new();
                for (v, e) in [(self.outer, i), (self.inner, j)] {
                    match e {
                        0 => {}
                        1 => mono.push(v.to_string()),
                        _ => mono.push(format!("{v}^{e}")),
                    }
                }
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => write!(f, "{c}")?,
                    (false, true) => write!(f, "{}", mono.join("*"))?,
                    (false, false) => write!(f, "({c})*{}", mono.join("*"))?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(deg {})", self.degree + 1)
    }
}

impl fmt::Debug for GridSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grid[{},{}]({self})", self.outer, self.inner)
    }
}
