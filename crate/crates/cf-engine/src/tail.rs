//! Signed tails `t_m(x) = (-eps1)...(-epsm) [[(a_{m+1},eps_{m+1}); ...]]`.

use cutseq_exact::QuadraticSurd;

use crate::step::leading_digit;
use crate::{CfError, Kind};

type Q = QuadraticSurd;

/// `x = a1 + eps1/t` for `x > 1`; returns `(eps1, t)` with `t > 1`.
fn advance(kind: Kind, x: &Q) -> Result<(i8, Q), CfError> {
    let (d, body) = leading_digit(kind, x)?;
    if body.is_zero() {
        return Err(CfError::Terminated);
    }
    Ok((d.eps, body.recip()))
}

/// The sequence `t_0(x), ..., t_m(x)`.
pub fn tails(x: &Q, m: usize, kind: Kind) -> Result<Vec<Q>, CfError> {
    if !matches!(kind, Kind::Ocf | Kind::Ecf) {
        return Err(CfError::Inadmissible(format!("tails are defined for ocf and ecf, not {kind}")));
    }
    if x.is_rational() {
        return Err(CfError::Rational);
    }
    if *x <= Q::one() {
        return Err(CfError::OutOfDomain(format!("tail needs x > 1, got {x}")));
    }
    let mut out = vec![x.clone()];
    let mut sign = 1i64;
    let mut cur = x.clone();
    for _ in 0..m {
        let (eps, next) = advance(kind, &cur)?;
        sign *= -(eps as i64);
        out.push(&next * sign);
        cur = next;
    }
    Ok(out)
}

pub fn tail(x: &Q, m: usize, kind: Kind) -> Result<Q, CfError> {
    Ok(tails(x, m, kind)?.pop().unwrap())
}
