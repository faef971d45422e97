//! Truncated formal power series with rational-function coefficients.
//!
//! [`TruncatedSeries`] expands in one variable; [`GridSeries`] expands in
//! two over a total-degree box. Infinite q-products only ever appear here,
//! as expansions whose argument vanishes at the origin.

mod grid;
mod hyper;
mod pochhammer;
mod truncated;

pub use grid::GridSeries;
pub use hyper::{hypergeometric_series, phi_coefficient, HypergeometricSpec};
pub use pochhammer::{pochhammer_of_series, pochhammer_series, pochhammer_weight, PochhammerMode};
pub use truncated::{dq_apply, dq_leibniz, dq_leibniz_printed, series_arith, series_invert, SeriesOp, TruncatedSeries};
