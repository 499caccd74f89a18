use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("substituting {var} introduces a zero denominator")]
    ZeroDenominator { var: String },
    #[error("not a Laurent polynomial, residual denominator {denominator}")]
    NotLaurent { denominator: String },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },
    #[error("duplicate catalog entry {0}")]
    DuplicateName(String),
    #[error("unknown link {0}")]
    UnknownLink(String),
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: i64 },
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("too many strands: {0} (limit {limit})", limit = crate::MAX_STRANDS)]
    TooManyStrands(usize),
    #[error("invalid destabilization: {0}")]
    InvalidDestabilization(String),
    #[error("the closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("the closure is not a split union of knots")]
    NotSplit,
    #[error("crossing {0} is not a mixed crossing")]
    NotMixed(usize),
    #[error("empty subset D")]
    EmptySubset,
    #[error("subset element {0} outside Z/{1}Z")]
    SubsetOutOfRange(i64, u32),
    #[error("supports overlap at {0}")]
    OverlappingSupports(u32),
    #[error("resolution budget of {0} nodes exceeded")]
    BudgetExceeded(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
