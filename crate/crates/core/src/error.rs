use crate::coeff::Symbol;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("series variables differ: {0} vs {1}")]
    VariableMismatch(Symbol, Symbol),
    #[error("constant term of the series is zero; it has no inverse")]
    NonUnitConstantTerm,
    #[error("truncation order exhausted: need {needed}, have {available}")]
    OrderExhausted { needed: usize, available: usize },
    #[error("infinite product argument must vanish at {0} = 0")]
    ArgumentNotSeriesPositive(Symbol),
    #[error("parameter makes a Pochhammer denominator vanish: {0}")]
    ZeroDenominatorParameter(String),
    #[error("coefficient contains the expansion variable {0}")]
    ImpureCoefficient(Symbol),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unsupported expression: {0}")]
    UnsupportedExpression(String),
    #[error("meta parameter `{name}` = {value} is outside {lo}..={hi}")]
    MetaOutOfRange {
        name: String,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("missing meta parameter `{0}`")]
    MissingMeta(String),
    #[error("polynomial family `{family}`: {reason}")]
    BadPolySpec { family: String, reason: String },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
