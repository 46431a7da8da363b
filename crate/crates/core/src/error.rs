use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the empty partition has no conjugacy class")]
    EmptyPartition,

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: u32,
        right: String,
        right_size: u32,
    },

    #[error("invalid partition {0:?}: parts must be positive")]
    InvalidPartition(Vec<u32>),

    #[error("central character f_{nu}({mu}) = {value} is not an integer")]
    NonIntegral {
        nu: String,
        mu: String,
        value: String,
    },

    #[error("no covers counted: r = 2g - 2 + |eta| + l(eta) - 2|eta|h = {0} is negative")]
    NegativeBranchCount(i64),

    #[error("exp_p needs a zero constant term")]
    ExpConstantTerm,

    #[error("log_p needs constant term 1")]
    LogConstantTerm,

    #[error("truncation degrees differ: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("series has nonzero coefficient below lambda^{0}")]
    NotDivisible(usize),

    #[error("series is not a unit (zero constant term)")]
    NotUnit,

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("character table cache: {0}")]
    Cache(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
