use crate::coeff::{qpow, RationalFunction};
use crate::error::{Error, Result};
use crate::qcomb::{binom2, qfactorial, qpochhammer_multi};

use super::truncated::TruncatedSeries;

/// `r phi s (upper; lower; q, argument)`.
#[derive(Debug, Clone)]
pub struct HypergeometricSpec {
    pub upper: Vec<RationalFunction>,
    pub lower: Vec<RationalFunction>,
    pub argument: TruncatedSeries,
}

impl HypergeometricSpec {
    pub fn new(upper: Vec<RationalFunction>, lower: Vec<RationalFunction>, argument: TruncatedSeries) -> Self {
        HypergeometricSpec { upper, lower, argument }
    }

    /// `1 + s - r`, the power of the `(-1)^n q^{C(n,2)}` balancing factor.
    pub fn balance(&self) -> i64 {
        1 + self.lower.len() as i64 - self.upper.len() as i64
    }

    /// Coefficient of `argument^n` in the defining sum.
    pub fn term(&self, n: usize) -> Result<RationalFunction> {
        phi_coefficient(&self.upper, &self.lower, n)
    }
}

/// `(upper;q)_n / (q, lower;q)_n * [(-1)^n q^{C(n,2)}]^{1+s-r}`.
///
/// Parameters may depend on anything, which lets builders assemble
/// series whose parameters involve a second expansion variable.
pub fn phi_coefficient(upper: &[RationalFunction], lower: &[RationalFunction], n: usize) -> Result<RationalFunction> {
    let den = qpochhammer_multi(lower, n).mul(&qfactorial(n));
    if den.is_zero() {
        return Err(Error::ZeroDenominatorParameter(format!(
            "lower parameters {} vanish at n = {n}",
            join(lower)
        )));
    }
    let num = qpochhammer_multi(upper, n);
    let e = 1 + lower.len() as i64 - upper.len() as i64;
    let sign = if (n as i64 * e) % 2 == 0 { 1 } else { -1 };
    let balance = qpow(binom2(n as i64) * e).scale_int(sign);
    Ok(num.div(&den)?.mul(&balance))
}

fn join(v: &[RationalFunction]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Truncated basic hypergeometric series; the argument must vanish at the
/// expansion point.
pub fn hypergeometric_series(spec: &HypergeometricSpec, order: usize) -> Result<TruncatedSeries> {
    let w = &spec.argument;
    let var = w.var();
    if !w.coeff(0).is_zero() {
        return Err(Error::ArgumentNotSeriesPositive(var));
    }
    if let Some(p) = spec.upper.iter().chain(&spec.lower).find(|p| p.contains(var)) {
        return Err(Error::UnsupportedExpression(format!(
            "parameter {p} depends on the expansion variable {var}"
        )));
    }
    let order = order.min(w.order());
    let w = w.truncate(order);
    let mut acc = TruncatedSeries::zero(var, order);
    let mut pow = TruncatedSeries::one(var, order);
    for n in 0..=order {
        acc = acc.add(&pow.scale(&spec.term(n)?));
        pow = pow.mul(&w);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, sym, Symbol::*};
    use crate::series::{pochhammer_series, PochhammerMode};

    fn x_series(order: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(X, order, int(1), 1).unwrap()
    }

    #[test]
    fn one_phi_zero_at_zero_is_inverse_product() {
        let spec = HypergeometricSpec::new(vec![int(0)], vec![], x_series(6));
        let expected = pochhammer_series(&int(1), PochhammerMode::InverseInfiniteProduct, X, 6).unwrap();
        assert_eq!(hypergeometric_series(&spec, 6).unwrap(), expected);
    }

    #[test]
    fn zero_argument_gives_one() {
        let spec = HypergeometricSpec::new(vec![sym(A), sym(B)], vec![sym(C)], TruncatedSeries::zero(X, 4));
        assert_eq!(hypergeometric_series(&spec, 4).unwrap(), TruncatedSeries::one(X, 4));
    }

    #[test]
    fn q_binomial_theorem_order_ten() {
        let spec = HypergeometricSpec::new(vec![sym(A)], vec![], x_series(10));
        let lhs = hypergeometric_series(&spec, 10).unwrap();
        let num = pochhammer_series(&sym(A), PochhammerMode::InfiniteProduct, X, 10).unwrap();
        let den = pochhammer_series(&int(1), PochhammerMode::InverseInfiniteProduct, X, 10).unwrap();
        assert_eq!(lhs, num.mul(&den));
    }

    #[test]
    fn vanishing_lower_parameter_is_rejected() {
        // (q^{-2};q)_3 = 0
        let spec = HypergeometricSpec::new(vec![], vec![qpow(-2)], x_series(4));
        assert!(matches!(
            hypergeometric_series(&spec, 4),
            Err(Error::ZeroDenominatorParameter(_))
        ));
    }
}
