//! Exact arithmetic over Q and real quadratic fields, Möbius actions of
//! PSL(2,Z), and membership tests for the odd subgroup and the Theta group.

mod cusp;
mod error;
mod matrix;
mod parse;
mod point;
mod subgroup;
mod surd;

pub use cusp::{cusp_class_gamma, cusp_class_theta, CuspClass, CuspWitness};
pub use error::ExactError;
pub use matrix::UnimodularMatrix;
pub use parse::{parse_matrix, parse_point, parse_surd};
pub use point::ExtPoint;
pub use subgroup::{classify_subgroup, SubgroupLabel, SubgroupMembership};
pub use surd::{golden_ratio, squarefree_part, QuadraticSurd};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Rational numbers in lowest terms with positive denominator.
pub type Rational = BigRational;
