use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("reserved symbol value {value} at position {position}")]
    ReservedSymbol { position: usize, value: u32 },
    #[error("cannot join {k} texts: not enough free symbol values for separators")]
    SeparatorOverflow { k: usize },
    #[error("total length {0} does not fit the index range")]
    TooLong(usize),
    #[error("at least one text is required")]
    NoTexts,
    #[error("text {0} is empty")]
    EmptyText(usize),
    #[error("k' = {k_prime} must satisfy 1 < k' <= k = {k}")]
    InvalidThreshold { k_prime: usize, k: usize },
    #[error("weight {length} out of range (node depth {depth})")]
    WeightOutOfRange { length: usize, depth: usize },
    #[error(
        "factor of length {length} at {start} overruns string {string} of length {string_len}"
    )]
    FactorOutOfRange {
        string: usize,
        start: usize,
        length: usize,
        string_len: usize,
    },
    #[error("no such string {string} (k = {k})")]
    UnknownString { string: usize, k: usize },
    #[error("run [{start}, {end}] lies outside string {string}")]
    RunOutOfRange {
        string: usize,
        start: usize,
        end: usize,
    },
    #[error("interval [{i}, {j}] invalid for text of length {len}")]
    InvalidInterval { i: usize, j: usize, len: usize },
    #[error("oracle input length {len} exceeds cap {cap}")]
    OracleCapExceeded { len: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
