use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group table: {axiom} fails ({detail})")]
    InvalidGroupTable { axiom: &'static str, detail: String },

    #[error("malformed {object}: {detail}")]
    Malformed { object: String, detail: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("polynomial is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("variable {0} carries no parity tag (use y for even, z for odd)")]
    UntaggedVariable(String),

    #[error("Grassmann truncation k = {k} is below the degree {degree}")]
    TruncationUnsound { k: usize, degree: usize },

    #[error("budget refused: estimated work {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("uncertified Wedderburn data: {0}")]
    Uncertified(String),

    #[error("degenerate hook partition h({d},{l},{t})")]
    DegenerateHook { d: usize, l: usize, t: usize },

    #[error("alternating set has {found} variables, the semisimple part has dimension {expected}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn malformed(object: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Malformed {
            object: object.into(),
            detail: detail.into(),
        }
    }
}
