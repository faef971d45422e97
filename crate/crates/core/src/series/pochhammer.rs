use crate::coeff::{qpow, RationalFunction, Symbol};
use crate::error::{Error, Result};
use crate::qcomb::{binom2, qfactorial};

use super::truncated::TruncatedSeries;

/// Which side of `(w;q)_inf` to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochhammerMode {
    /// `(w;q)_inf = sum q^{C(n,2)} (-w)^n / (q;q)_n`.
    InfiniteProduct,
    /// `1/(w;q)_inf = sum w^n / (q;q)_n`.
    InverseInfiniteProduct,
}

/// Coefficient of `w^n` in the chosen expansion.
pub fn pochhammer_weight(mode: PochhammerMode, n: usize) -> RationalFunction {
    let inv = qfactorial(n).recip().expect("(q;q)_n is nonzero");
    match mode {
        PochhammerMode::InverseInfiniteProduct => inv,
        PochhammerMode::InfiniteProduct => {
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            inv.mul(&qpow(binom2(n as i64))).scale_int(sign)
        }
    }
}

/// `(c*var;q)_inf` or its reciprocal, exact through `var^order`.
pub fn pochhammer_series(
    coefficient: &RationalFunction,
    mode: PochhammerMode,
    var: Symbol,
    order: usize,
) -> Result<TruncatedSeries> {
    if coefficient.contains(var) {
        return Err(Error::ImpureCoefficient(var));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut pow = RationalFunction::one();
    for n in 0..=order {
        coeffs.push(pochhammer_weight(mode, n).mul(&pow));
        pow = pow.mul(coefficient);
    }
    TruncatedSeries::new(var, order, coeffs)
}

/// `(w;q)_inf` or its reciprocal for a series argument `w` with `w(0) = 0`.
pub fn pochhammer_of_series(w: &TruncatedSeries, mode: PochhammerMode) -> Result<TruncatedSeries> {
    if !w.coeff(0).is_zero() {
        return Err(Error::ArgumentNotSeriesPositive(w.var()));
    }
    let order = w.order();
    let mut acc = TruncatedSeries::zero(w.var(), order);
    let mut pow = TruncatedSeries::one(w.var(), order);
    for n in 0..=order {
        acc = acc.add(&pow.scale(&pochhammer_weight(mode, n)));
        pow = pow.mul(w);
    }
    Ok(acc)
}
