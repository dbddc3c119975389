use thiserror::Error;

/// Malformed textual input. Carries the offending token and the grammar rule it broke.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{token}`: expected {rule}")]
pub struct ParseError {
    pub token: String,
    pub rule: &'static str,
}

impl ParseError {
    pub fn new(token: impl Into<String>, rule: &'static str) -> Self {
        ParseError { token: token.into(), rule }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("partitions have different totals ({0} and {1})")]
    MismatchedTotals(u64, u64),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("p+q exceeds n+1, so r = {0} is negative")]
    NegativeR(i64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("Euler condition fails: parts sum to {found}, expected {expected}")]
    EulerViolation { found: u64, expected: u64 },
    #[error("passport {0} is not realizable by a tree")]
    NotRealizable(String),
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("monodromy group is not transitive")]
    NotTransitive,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
