use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("index {0} appears more than once")]
    RepeatedIndex(usize),
    #[error("index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rotation map: {0}")]
    InvalidRotation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("permutation quotient counts are not symmetric")]
    QuotientNotSymmetric,
    #[error("enumeration of {size} candidates exceeds the cap of {cap}")]
    TooLarge { size: String, cap: String },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    NotConnected,
    #[error("input too small: {0}")]
    TooSmall(String),
    #[error("{0} is not divisible by 4")]
    NotDivisibleBy4(usize),
    #[error("root-of-unity sum magnitude {0:e} lies in the ambiguous band [1e-12, 1e-6]")]
    ToleranceBand(f64),
}
