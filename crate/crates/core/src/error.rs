//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {p} is not prime")]
    CompositeCharacteristic { p: u64 },
    #[error("modulus polynomial is reducible over GF({p})")]
    ReduciblePolynomial { p: u64 },
    #[error("invalid modulus polynomial: {reason}")]
    InvalidModulus { reason: &'static str },
    #[error("field order {q} outside the supported range 2..=256")]
    UnsupportedOrder { q: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("word lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("word length {k} is below the read width {b}")]
    LengthBelowWidth { k: usize, b: usize },
    #[error("matrix rows are linearly dependent")]
    RankDeficient,
    #[error("bad matrix shape: {rows} rows x {cols} columns")]
    BadShape { rows: usize, cols: usize },
    #[error("domain of size {size} exceeds the desk-scale cap {cap}")]
    DomainTooLarge { size: u128, cap: u128 },
    #[error("duplicate message in matrix construction")]
    DuplicateMessage,
    #[error("index {index} out of range for dimension {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("codebook has {got} words but the matrix dimension is {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("budget of {budget} checks exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("operation requires GF({expected}), field has order {got}")]
    WrongField { expected: u64, got: u64 },
    #[error("read vector shape mismatch: {reason}")]
    ShapeMismatch { reason: &'static str },
    #[error("matrix has a nonzero diagonal entry at index {index}")]
    NonzeroDiagonal { index: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
