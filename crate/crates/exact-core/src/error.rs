use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("no conjugate of a rational")]
    NoConjugateOfRational,
    #[error("expected a rational or infinity, got an irrational number")]
    Irrational,
    #[error("mixed quadratic fields Q(sqrt {0}) and Q(sqrt {1})")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("parse error: {0}")]
    Parse(String),
}
