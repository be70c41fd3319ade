use thiserror::Error;

/// Errors raised by the decision procedures and certificate evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exhaustive quantifier would visit more objects than the configured cap.
    #[error("enumeration budget exceeded: {count} objects requested, cap is {cap}")]
    BudgetExceeded { count: String, cap: u64 },
    /// Every polarization of the type admits an equality in King's inequality.
    #[error("all polarizations are irregular: {0}")]
    AllIrregular(String),
    #[error("degenerate type: {0}")]
    Degenerate(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("missing linear-algebra constant {0}")]
    MissingConstant(String),
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
