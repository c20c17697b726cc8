use cutseq_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("boundary point: {0}")]
    Boundary(String),
    #[error("outside domain: {0}")]
    OutOfDomain(String),
    #[error("expansion terminated")]
    Terminated,
    #[error("inadmissible digit: {0}")]
    Inadmissible(String),
    #[error("rational input where an irrational is required")]
    Rational,
    #[error("stream truncated before a period was found")]
    Truncated,
    #[error("digit does not fit in 64 bits")]
    DigitOverflow,
    #[error(transparent)]
    Exact(#[from] ExactError),
}
