use std::ops::Mul;

use cutseq_exact::{BigInt, QuadraticSurd};
use num_traits::{Signed, Zero};

use crate::step::grotesque_domain;
use crate::{CfError, DigitStream, Kind, SignedDigit};

type Q = QuadraticSurd;

/// Integer 2x2 matrix acting by Möbius transformation; determinant +-1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// `z -> (az+b)/(cz+d)`; `None` at the pole.
    pub fn apply(&self, z: &Q) -> Option<Q> {
        let den = z * &Q::from_int(self.c.clone()) + Q::from_int(self.d.clone());
        if den.is_zero() {
            return None;
        }
        Some((z * &Q::from_int(self.a.clone()) + Q::from_int(self.b.clone())) / den)
    }

    /// Matrix of the map applied to the tail: `x = M(rest)`.
    pub fn digit(kind: Kind, d: SignedDigit) -> Self {
        if kind.is_dual() {
            Self::new(0, d.eps, 1, d.a)
        } else {
            Self::new(0, 1, d.eps, d.a)
        }
    }

    pub fn product(kind: Kind, digits: &[SignedDigit]) -> Self {
        digits.iter().fold(Self::identity(), |m, &d| m * Self::digit(kind, d))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

/// Open interval containing every infinite body value of the kind.
pub fn body_domain(kind: Kind) -> (Q, Q) {
    match kind {
        Kind::Rcf | Kind::Ocf | Kind::Ecf => (Q::zero(), Q::one()),
        Kind::Gcf => grotesque_domain(),
        Kind::Eecf => (Q::from_int(-1), Q::one()),
    }
}

/// Attracting fixed point of `m` inside `(lo, hi)`.
pub fn attracting_fixed_point(m: &Mat2, lo: &Q, hi: &Q) -> Result<Q, CfError> {
    let degenerate = || CfError::Inadmissible("period has no attracting irrational fixed point".into());
    if m.c.is_zero() {
        return Err(degenerate());
    }
    // c z^2 + (d - a) z - b = 0
    let amd = &m.a - &m.d;
    let disc = &amd * &amd + BigInt::from(4) * &m.b * &m.c;
    if disc.is_negative() {
        return Err(degenerate());
    }
    let two_c = BigInt::from(2) * &m.c;
    let mut best = None;
    for s in [1, -1] {
        let z = Q::new(amd.clone(), s, two_c.clone(), disc.clone())?;
        if z.is_rational() {
            return Err(degenerate());
        }
        let w = &z * &Q::from_int(m.c.clone()) + Q::from_int(m.d.clone());
        if w.abs() > Q::one() {
            best = Some(z);
        }
    }
    let z = best.ok_or_else(degenerate)?;
    if z <= *lo || z >= *hi {
        return Err(CfError::Inadmissible(format!("periodic value {z} leaves the domain")));
    }
    Ok(z)
}

/// Value of the body digits alone.
pub fn body_value(s: &DigitStream) -> Result<Q, CfError> {
    let kind = s.kind;
    let mut v = if s.period.is_empty() {
        Q::zero()
    } else {
        let (lo, hi) = body_domain(kind);
        attracting_fixed_point(&Mat2::product(kind, &s.period), &lo, &hi)?
    };
    for &d in s.preperiod.iter().rev() {
        let den = if kind.is_dual() { &v + d.a } else { &v * d.eps as i64 + d.a };
        if den.is_zero() {
            return Err(CfError::Inadmissible(format!("digit {d} meets a pole")));
        }
        v = if kind.is_dual() { Q::from_int(d.eps as i64) / den } else { den.recip() };
    }
    Ok(v)
}

/// Exact value of an admissible stream.
pub fn cf_evaluate(s: &DigitStream) -> Result<Q, CfError> {
    if s.truncated {
        return Err(CfError::Truncated);
    }
    s.check()?;
    let body = body_value(s)?;
    let v = match s.leading {
        Some(l) => &body * l.eps as i64 + l.a,
        None => body,
    };
    Ok(if s.sign < 0 { -v } else { v })
}
