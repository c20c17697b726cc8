use std::collections::HashMap;

use cutseq_exact::QuadraticSurd;

use crate::step::{leading_digit, step};
use crate::{CfError, DigitStream, Kind, SignedDigit};

pub const DEFAULT_MAX_DEPTH: usize = 256;

/// Iterates the Gauss map from `x`, stopping at zero, at a repeated state,
/// or after `max_depth` digits.
fn body(kind: Kind, x: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    let mut seen: HashMap<QuadraticSurd, usize> = HashMap::new();
    let mut digits: Vec<SignedDigit> = Vec::new();
    let mut cur = x.clone();
    loop {
        if cur.is_zero() {
            return Ok(DigitStream::finite(kind, digits));
        }
        if let Some(&i) = seen.get(&cur) {
            let period = digits.split_off(i);
            return Ok(DigitStream::new(kind, None, digits, period));
        }
        if digits.len() >= max_depth {
            let mut s = DigitStream::finite(kind, Vec::new());
            s.preperiod = digits;
            s.truncated = true;
            return Ok(s);
        }
        seen.insert(cur.clone(), digits.len());
        let (d, next) = step(kind, &cur)?;
        digits.push(d);
        cur = next;
    }
}

/// Expansion of `x` in the given system. Forward kinds expand `|x|` and
/// record the sign; dual kinds require `x` inside their domain.
pub fn expand(kind: Kind, x: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    if kind.is_dual() {
        return body(kind, x, max_depth);
    }
    let sign: i8 = if x.is_negative() { -1 } else { 1 };
    let ax = x.abs();
    let mut s = if ax >= QuadraticSurd::one() {
        let (lead, rest) = leading_digit(kind, &ax)?;
        let mut s = body(kind, &rest, max_depth)?;
        s.leading = Some(lead);
        s
    } else {
        body(kind, &ax, max_depth)?
    };
    s.sign = sign;
    Ok(s)
}

pub fn ocf_expand(x: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    expand(Kind::Ocf, x, max_depth)
}

pub fn gcf_expand(y: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    expand(Kind::Gcf, y, max_depth)
}

pub fn ecf_expand(x: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    expand(Kind::Ecf, x, max_depth)
}

pub fn eecf_expand(y: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    expand(Kind::Eecf, y, max_depth)
}

pub fn rcf_expand(x: &QuadraticSurd, max_depth: usize) -> Result<DigitStream, CfError> {
    expand(Kind::Rcf, x, max_depth)
}
