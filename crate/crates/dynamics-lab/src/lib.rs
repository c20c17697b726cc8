//! Invariant measures of the odd and even Gauss maps and their natural
//! extensions, Birkhoff averages, the roof function of the first-return
//! map, closed-geodesic lengths, purely periodic expansions and
//! equivalence of quadratic surds under the odd and Theta groups.

pub mod birkhoff;
pub mod equivalence;
mod error;
pub mod invariance;
pub mod length;
pub mod measure;
pub mod periodic;
pub mod real;

pub use birkhoff::{birkhoff_average, BirkhoffReport, Seed};
pub use equivalence::{equivalent, translate_above_one, Equivalence, Group};
pub use error::DynError;
pub use invariance::{check_invariance, InvarianceReport, MapName, DEFAULT_TOLERANCE};
pub use length::{closed_length, primitive_exponent, roof, roof_factors, roof_sum, GeodesicLengthReport, LENGTH_TOLERANCE};
pub use measure::{full_domain, measure_mass, MeasureName, MeasureSpec, Region};
pub use periodic::{purely_periodic, surd_corpus, PeriodicityReport};
pub use real::{Real, DEFAULT_DIGITS};
