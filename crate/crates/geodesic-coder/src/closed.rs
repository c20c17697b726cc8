//! Closed geodesics from purely periodic digit blocks.

use cutseq_cf::{cf_evaluate, DigitStream, Kind, SignedDigit};

use crate::geodesic::OrientedGeodesic;
use crate::CodeError;

fn dual(kind: Kind) -> Result<Kind, CodeError> {
    match kind {
        Kind::Ocf => Ok(Kind::Gcf),
        Kind::Ecf => Ok(Kind::Eecf),
        other => Err(CodeError::Cf(cutseq_cf::CfError::Inadmissible(format!(
            "closed geodesics are coded by ocf or ecf periods, not {other}"
        )))),
    }
}

/// `(-eps1)...(-epsr)`.
pub fn sign_product(period: &[SignedDigit]) -> i8 {
    period.iter().fold(1, |acc, d| -acc * d.eps)
}

/// `(eps [[ overline(a1..ar) ]], -eps << overline(ar..a1) >>)` with no
/// condition on the sign product.
pub fn periodic_pair(period: &[SignedDigit], kind: Kind, eps: i8) -> Result<OrientedGeodesic, CodeError> {
    let dk = dual(kind)?;
    if period.is_empty() {
        return Err(CodeError::Cf(cutseq_cf::CfError::Inadmissible("empty period".into())));
    }
    for d in period {
        d.check(kind, false)?;
    }
    let mut body = period.to_vec();
    body.rotate_left(1);
    let alpha = cf_evaluate(&DigitStream::new(kind, Some(period[0]), Vec::new(), body))?;
    let rev: Vec<SignedDigit> = period.iter().rev().copied().collect();
    let w = cf_evaluate(&DigitStream::periodic(dk, rev))?;
    let s = if eps < 0 { -1 } else { 1 };
    OrientedGeodesic::new(&alpha * s, &w * -s)
}

/// The lift in the section of the closed geodesic with the given period;
/// requires `(-eps1)...(-epsr) = 1`.
pub fn closed_geodesic_from_period(
    period: &[SignedDigit],
    kind: Kind,
    eps: i8,
) -> Result<OrientedGeodesic, CodeError> {
    dual(kind)?;
    if sign_product(period) != 1 {
        return Err(CodeError::NotClosed);
    }
    periodic_pair(period, kind, eps)
}
