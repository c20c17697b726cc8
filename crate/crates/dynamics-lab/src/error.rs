use cutseq_cf::CfError;
use cutseq_exact::ExactError;
use cutseq_geodesic::CodeError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynError {
    #[error("region outside the domain: {0}")]
    OutsideDomain(String),
    #[error("region touches a singularity of the density: {0}")]
    Singular(String),
    #[error("{measure} is not an invariant measure of {map}")]
    Mismatch { measure: String, map: String },
    #[error("orbit left the domain or hit a branch boundary after {steps} steps")]
    OrbitTerminated { steps: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("window test and expansion disagree for {0}")]
    Disagreement(String),
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
