use cutseq_cf::CfError;
use cutseq_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("geodesic not in the section: {0}")]
    OutOfSection(String),
    #[error("endpoints must be distinct irrationals")]
    Degenerate,
    #[error("not lifted within depth {0}")]
    NotLifted(usize),
    #[error("odd sign product: not closed; double the period")]
    NotClosed,
    #[error("word not decomposable at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("even words need the sign of the forward endpoint")]
    NeedSign,
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
