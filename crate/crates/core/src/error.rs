use thiserror::Error;

/// Errors raised by the exact-arithmetic and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is out of range (must be 1..=64)")]
    InvalidDimension(u32),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("invalid bit string {0:?}: expected characters '0' and '1' only")]
    InvalidBitString(String),
    #[error("bits {bits:#x} do not fit in dimension {n}")]
    BitsOutOfRange { bits: u64, n: u32 },
    #[error("invalid step set: {0}")]
    InvalidStepSet(String),
    #[error("n = {n} exceeds the matrix cap of {cap}; raise it with --max-n (memory grows as 4^n)")]
    CapExceeded { n: u32, cap: u32 },
    #[error("enumeration would scan {required} tuples, over the budget of {budget}; raise it with --budget")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("non-integral result in {0}")]
    NonIntegral(&'static str),
    #[error("denominator must have constant term +-1, got {0}")]
    BadDenominator(String),
    #[error("need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("path endpoints differ: {left} vs {right}")]
    EndpointMismatch { left: String, right: String },
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("diagram has {blocks} blocks but only {n} labels are available")]
    TooManyBlocks { blocks: usize, n: u32 },
    #[error("invalid basis element: {0}")]
    InvalidBasisElement(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
