//! Exact multivariate polynomials and rational functions over the fixed
//! alphabet `q < u < v < a < b < c < d < x < y < z`.

mod gcd;
mod monomial;
mod poly;
mod rational;
mod symbol;

pub use gcd::gcd;
pub use monomial::Monomial;
pub use poly::{MultiPoly, Q};
pub use rational::{rf_arith, rf_eval_integer_power, rf_substitute, ArithOp, RationalFunction};
pub use symbol::{Symbol, NSYM};

pub(crate) use poly::write_monomial;

/// Shorthand for the rational function of a single symbol.
pub fn sym(s: Symbol) -> RationalFunction {
    RationalFunction::var(s)
}

/// Shorthand for an integer constant.
pub fn int(c: i64) -> RationalFunction {
    RationalFunction::from_int(c)
}

/// `q^e` for any integer `e`.
pub fn qpow(e: i64) -> RationalFunction {
    RationalFunction::power_of(Symbol::Q, e)
}
