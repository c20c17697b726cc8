use std::fmt;

use crate::{ExactError, QuadraticSurd, Rational};

/// A point of the extended real line over a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtPoint {
    Finite(QuadraticSurd),
    Infinity,
}

impl ExtPoint {
    pub fn finite(&self) -> Option<&QuadraticSurd> {
        match self {
            ExtPoint::Finite(x) => Some(x),
            ExtPoint::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<QuadraticSurd> {
        match self {
            ExtPoint::Finite(x) => Some(x),
            ExtPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtPoint::Infinity)
    }

    /// `(numerator, denominator)` of a rational point, with `∞ = 1/0`.
    pub fn as_fraction(&self) -> Result<(num_bigint::BigInt, num_bigint::BigInt), ExactError> {
        match self {
            ExtPoint::Infinity => Ok((1.into(), 0.into())),
            ExtPoint::Finite(x) => {
                let r = x.to_rational().ok_or(ExactError::Irrational)?;
                Ok((r.numer().clone(), r.denom().clone()))
            }
        }
    }
}

impl From<QuadraticSurd> for ExtPoint {
    fn from(x: QuadraticSurd) -> Self {
        ExtPoint::Finite(x)
    }
}

impl From<&Rational> for ExtPoint {
    fn from(x: &Rational) -> Self {
        ExtPoint::Finite(QuadraticSurd::from_rational(x))
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Finite(x) => write!(f, "{x}"),
            ExtPoint::Infinity => write!(f, "inf"),
        }
    }
}
