//! First-return maps `rho_o`, `rho_e` on the sections.

use cutseq_cf::{eecf_step, gcf_step, leading_digit, Kind, Parity};
use cutseq_exact::UnimodularMatrix;

use crate::geodesic::{require_section, OrientedGeodesic};
use crate::word::{CaseTag, Segment};
use crate::CodeError;

pub(crate) fn forward_kind(parity: Parity) -> Kind {
    match parity {
        Parity::Odd => Kind::Ocf,
        Parity::Even => Kind::Ecf,
    }
}

pub(crate) fn dual_kind(parity: Parity) -> Kind {
    match parity {
        Parity::Odd => Kind::Gcf,
        Parity::Even => Kind::Eecf,
    }
}

/// One return: the image geodesic, the segment read on the way, and the
/// group element `z -> 1/(sign * a1 - z)` that was applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoStep {
    pub geodesic: OrientedGeodesic,
    pub segment: Segment,
    pub matrix: UnimodularMatrix,
}

pub(crate) fn rho_step(g: &OrientedGeodesic, parity: Parity, check: bool) -> Result<RhoStep, CodeError> {
    if check {
        require_section(g, parity)?;
    }
    let s = g.sign();
    let (d, _) = leading_digit(forward_kind(parity), &g.forward.abs())?;
    let tag = CaseTag::from_digit(parity, s, d);
    let matrix = UnimodularMatrix::new(0, 1, -1, s as i64 * d.a)?;
    let geodesic = g.apply(&matrix)?;
    Ok(RhoStep { geodesic, segment: Segment::new(parity, tag), matrix })
}

/// `rho_o` on `S_o`.
pub fn rho_step_odd(g: &OrientedGeodesic) -> Result<RhoStep, CodeError> {
    rho_step(g, Parity::Odd, true)
}

/// `rho_e` on `S_e`.
pub fn rho_step_even(g: &OrientedGeodesic) -> Result<RhoStep, CodeError> {
    rho_step(g, Parity::Even, true)
}

pub fn rho(g: &OrientedGeodesic, parity: Parity) -> Result<RhoStep, CodeError> {
    rho_step(g, parity, true)
}

/// The previous return: finds `g0` with `rho(g0) = g`. The first dual digit
/// `(b0, eps0)` of `-sign(g_inf) g_{-inf}` is the digit consumed by `g0`,
/// whose forward sign is `-eps0 sign(g_inf)`.
pub fn rho_inverse(g: &OrientedGeodesic, parity: Parity) -> Result<RhoStep, CodeError> {
    require_section(g, parity)?;
    let s = g.sign();
    let w = &g.backward * -(s as i64);
    let (d, _) = match parity {
        Parity::Odd => gcf_step(&w)?,
        Parity::Even => eecf_step(&w)?,
    };
    let s0 = -d.eps * s;
    let matrix = UnimodularMatrix::new(0, 1, -1, s0 as i64 * d.a)?;
    let prev = g.apply(&matrix.inverse())?;
    let step = rho_step(&prev, parity, true)?;
    if step.geodesic != *g || step.segment.digit != d {
        return Err(CodeError::OutOfSection(format!("{g} has no preimage in the section")));
    }
    Ok(RhoStep { geodesic: prev, segment: step.segment, matrix })
}
