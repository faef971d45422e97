//! Shared vocabulary for record builders.

use crate::coeff::{qpow, sym, RationalFunction, Symbol};
use crate::error::Result;
use crate::families::{build_polynomial, Family, IndexConvention, PolySpec};
use crate::qcomb::{binom2, qbinomial, qpochhammer};
use crate::series::{pochhammer_series, GridSeries, PochhammerMode, TruncatedSeries};

pub(super) type RF = RationalFunction;

pub(super) fn s(v: Symbol) -> RF {
    sym(v)
}

/// `base^e` for a nonzero base.
pub(super) fn pw(base: &RF, e: i64) -> RF {
    base.pow(e).expect("power of a nonzero base")
}

pub(super) fn qb(n: usize, k: usize) -> RF {
    qbinomial(n as i64, k as i64)
}

pub(super) fn b2(k: usize) -> i64 {
    binom2(k as i64)
}

pub(super) fn poch(a: &RF, n: usize) -> RF {
    qpochhammer(a, n)
}

pub(super) fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(super) fn expand(f: &RF, var: Symbol, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::from_rational(f, var, order)
}

/// `(c var;q)_inf` expanded in `var`.
pub(super) fn poch_inf(c: &RF, var: Symbol, order: usize) -> Result<TruncatedSeries> {
    pochhammer_series(c, PochhammerMode::InfiniteProduct, var, order)
}

/// `1/(c var;q)_inf` expanded in `var`.
pub(super) fn inv_poch_inf(c: &RF, var: Symbol, order: usize) -> Result<TruncatedSeries> {
    pochhammer_series(c, PochhammerMode::InverseInfiniteProduct, var, order)
}

/// `(c outer^i inner^j;q)_inf` on a grid.
pub(super) fn grid_poch(c: &RF, at: (usize, usize), g: (Symbol, Symbol), degree: usize) -> Result<GridSeries> {
    GridSeries::pochhammer(c, at, PochhammerMode::InfiniteProduct, g.0, g.1, degree)
}

pub(super) fn grid_inv_poch(c: &RF, at: (usize, usize), g: (Symbol, Symbol), degree: usize) -> Result<GridSeries> {
    GridSeries::pochhammer(c, at, PochhammerMode::InverseInfiniteProduct, g.0, g.1, degree)
}

/// `sum_j c_j var^j` for the coefficients produced by `coeff`.
pub(super) fn series_from(var: Symbol, order: usize, coeff: impl Fn(usize) -> Result<RF>) -> Result<TruncatedSeries> {
    let coeffs = (0..=order).map(coeff).collect::<Result<Vec<_>>>()?;
    TruncatedSeries::new(var, order, coeffs)
}

/// `Psi_m^{(q^{-n})}(b, x | u q^{-1})`, the homogeneous deformed family
/// evaluated exactly as written.
pub(super) fn printed_psi(n: usize, m: usize, b: &RF, x: &RF, u: &RF) -> Result<RF> {
    let spec = PolySpec::new(Family::AscHomogeneousDeformed, m)
        .with("a", qpow(-(n as i64)))
        .with("x", b.clone())
        .with("y", x.clone())
        .with("u", u.div(&s(Symbol::Q))?);
    build_polynomial(&spec)
}

/// Closed form of `u^{-C(n,2)} g_n(bD_q|u){x^m}`:
/// `sum_k [m,k] (-1)^k (u/q)^{C(k,2)-nk} (q^{-n};q)_k (ub)^k x^{m-k}`.
pub fn monomial_image(n: usize, m: usize, b: &RF, x: &RF, u: &RF) -> RF {
    let uq = u.div(&s(Symbol::Q)).expect("q is nonzero");
    let ub = u.mul(b);
    let qn = qpow(-(n as i64));
    (0..=m)
        .map(|k| {
            let ki = k as i64;
            let e = b2(k) - n as i64 * ki;
            qb(m, k)
                .mul(&pw(&uq, e))
                .mul(&poch(&qn, k))
                .mul(&pw(&ub, ki))
                .mul(&pw(x, (m - k) as i64))
                .scale_int(sign(k))
        })
        .sum()
}

/// `Psi_n^{(a,b,c)}(x, y | u)`.
pub(super) fn generalized_deformed(n: usize, abc: [&RF; 3], x: &RF, y: &RF, u: &RF) -> Result<RF> {
    let spec = PolySpec::new(Family::AscGeneralizedDeformed, n)
        .with("a", abc[0].clone())
        .with("b", abc[1].clone())
        .with("c", abc[2].clone())
        .with("x", x.clone())
        .with("y", y.clone())
        .with("u", u.clone());
    build_polynomial(&spec)
}

pub(super) fn generalized(family: Family, n: usize, abc: [&RF; 3], x: &RF, y: &RF) -> Result<RF> {
    let spec = PolySpec::new(family, n)
        .with("a", abc[0].clone())
        .with("b", abc[1].clone())
        .with("c", abc[2].clone())
        .with("x", x.clone())
        .with("y", y.clone());
    build_polynomial(&spec)
}

/// `Phi_n^{(a)}(x, y | q)`.
pub(super) fn hahn(n: usize, a: &RF, x: &RF, y: &RF) -> Result<RF> {
    let spec = PolySpec::new(Family::Hahn, n)
        .with("a", a.clone())
        .with("x", x.clone())
        .with("y", y.clone());
    build_polynomial(&spec)
}

pub(super) fn general(
    family: Family,
    n: usize,
    upper: [&RF; 3],
    lower: [&RF; 2],
    x: &RF,
    y: &RF,
    index: IndexConvention,
) -> Result<RF> {
    let spec = PolySpec::new(family, n)
        .with("a", upper[0].clone())
        .with("b", upper[1].clone())
        .with("c", upper[2].clone())
        .with("d", lower[0].clone())
        .with("e", lower[1].clone())
        .with("x", x.clone())
        .with("y", y.clone())
        .with_index(index);
    build_polynomial(&spec)
}

/// `u^{C(k+1,2) - nk}`, the deformation weight that recurs in the
/// operator expansions.
pub(super) fn shifted_weight(u: &RF, n: usize, k: usize) -> RF {
    pw(u, b2(k + 1) - (n * k) as i64)
}
