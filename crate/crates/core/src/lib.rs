pub mod cli;
pub mod coeff;
pub mod error;
pub mod families;
pub mod operators;
pub mod parse;
pub mod qcomb;
pub mod render;
pub mod report;
pub mod series;
pub mod verifier;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/verifier.md")]
    mod verifier {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
