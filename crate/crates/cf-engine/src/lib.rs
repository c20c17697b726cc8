//! Odd (OCF), grotesque (GCF), even (ECF), extended-even (EECF) and regular
//! continued fractions of rationals and real quadratic surds.
//!
//! Forward kinds read `x = 1/(a1 + eps1/(a2 + eps2/(...)))` on `(0,1)`;
//! dual kinds read `y = eps0/(b0 + eps1/(b1 + ...))`.

mod digit;
mod error;
pub mod evaluate;
mod expand;
mod extension;
pub mod step;
mod stream;
mod tail;

pub use digit::{Kind, SignedDigit};
pub use error::CfError;
pub use evaluate::{cf_evaluate, Mat2};
pub use expand::{ecf_expand, eecf_expand, expand, gcf_expand, ocf_expand, rcf_expand, DEFAULT_MAX_DEPTH};
pub use extension::{
    inverse_via_rho, natural_extension_even, natural_extension_even_inv, natural_extension_odd,
    natural_extension_odd_inv, ExtensionPoint, Parity,
};
pub use step::{ecf_step, eecf_step, gcf_step, leading_digit, ocf_step, rcf_step, step};
pub use stream::DigitStream;
pub use tail::{tail, tails};
