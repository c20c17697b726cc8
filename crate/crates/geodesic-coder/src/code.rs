//! Cutting sequences of geodesics, segmented at the section.

use cutseq_cf::Parity;
use cutseq_exact::UnimodularMatrix;

use crate::geodesic::{in_section, lift_to_section, OrientedGeodesic, DEFAULT_LIFT_DEPTH};
use crate::rho::{rho, rho_inverse};
use crate::word::{Letter, Segment, Shade};
use crate::CodeError;

/// Shade convention for the checkered tessellation.
pub const SHADE_CONVENTION: &str = "triangle (-1,0,inf) light; shades flip at every crossed triangle; \
a return starting on the ray above +1 begins with a light letter, above -1 with a dark letter";

/// `n` returns before and after the base point `xi` of a lifted geodesic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodedGeodesic {
    pub parity: Parity,
    /// Group element taking the input geodesic into the section.
    pub lift: UnimodularMatrix,
    pub geodesic: OrientedGeodesic,
    /// Returns before `xi`, in reading order (farthest past first).
    pub backward: Vec<Segment>,
    pub forward: Vec<Segment>,
}

impl CodedGeodesic {
    pub fn backward_letters(&self) -> Vec<Letter> {
        self.backward.iter().flat_map(|s| s.word.iter().copied()).collect()
    }

    pub fn forward_letters(&self) -> Vec<Letter> {
        self.forward.iter().flat_map(|s| s.word.iter().copied()).collect()
    }

    /// Shade of the first letter after `xi`.
    pub fn initial_shade(&self) -> Shade {
        self.forward.first().map_or(Shade::Unshaded, |s| s.word[0].shade)
    }

    pub fn segments(&self) -> impl Iterator<Item = &Segment> {
        self.backward.iter().chain(self.forward.iter())
    }
}

/// Lifts `g` to the section if needed and reads `n` returns on each side.
pub fn cutting_sequence(g: &OrientedGeodesic, n: usize, parity: Parity) -> Result<CodedGeodesic, CodeError> {
    cutting_sequence_split(g, n, n, parity)
}

pub fn cutting_sequence_split(
    g: &OrientedGeodesic,
    n_back: usize,
    n_fwd: usize,
    parity: Parity,
) -> Result<CodedGeodesic, CodeError> {
    let (lift, base) = if in_section(g, parity) {
        (UnimodularMatrix::identity(), g.clone())
    } else {
        lift_to_section(g, parity, DEFAULT_LIFT_DEPTH)?
    };
    let mut forward = Vec::with_capacity(n_fwd);
    let mut cur = base.clone();
    for _ in 0..n_fwd {
        let st = rho(&cur, parity)?;
        forward.push(st.segment);
        cur = st.geodesic;
    }
    let mut backward = Vec::with_capacity(n_back);
    let mut cur = base.clone();
    for _ in 0..n_back {
        let st = rho_inverse(&cur, parity)?;
        backward.push(st.segment);
        cur = st.geodesic;
    }
    backward.reverse();
    Ok(CodedGeodesic { parity, lift, geodesic: base, backward, forward })
}
