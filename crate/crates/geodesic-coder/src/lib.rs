//! Geodesics on the odd modular surface and the Theta surface coded by
//! their returns to a section: first-return maps, checkered cutting
//! sequences and their parsing, and the conjugation with the natural
//! extensions of the odd and even Gauss maps.

mod closed;
mod code;
mod error;
mod geodesic;
mod parse;
mod rho;
mod word;

pub use closed::{closed_geodesic_from_period, periodic_pair, sign_product};
pub use code::{cutting_sequence, cutting_sequence_split, CodedGeodesic, SHADE_CONVENTION};
pub use cutseq_cf::Parity;
pub use error::CodeError;
pub use geodesic::{
    conjugation_j, conjugation_j_inv, dual_domain, in_section, lift_to_section, OrientedGeodesic,
    DEFAULT_LIFT_DEPTH,
};
pub use parse::{parse_cutting_sequence, Direction, ParsedWord};
pub use rho::{rho, rho_inverse, rho_step_even, rho_step_odd, RhoStep};
pub use word::{
    grammar_violation, parse_word, word_ascii, word_string, Case, CaseTag, Letter, Segment, Shade, Side,
};
