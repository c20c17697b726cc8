//! Natural extensions of the odd and even Gauss maps.

use cutseq_exact::QuadraticSurd;

use crate::evaluate::Mat2;
use crate::step::{ecf_step, eecf_step, gcf_step, grotesque_domain, ocf_step};
use crate::CfError;

type Q = QuadraticSurd;

/// A point `(x, y, eps)` of `(0,1) x I x {-1, 1}`, with `I = (G-2, G)` in
/// the odd case and `(-1, 1)` in the even case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionPoint {
    pub x: Q,
    pub y: Q,
    pub eps: i8,
}

impl ExtensionPoint {
    pub fn new(x: Q, y: Q, eps: i8) -> Self {
        ExtensionPoint { x, y, eps }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

fn check(p: &ExtensionPoint, parity: Parity) -> Result<(), CfError> {
    if p.x.is_rational() || p.y.is_rational() {
        return Err(CfError::Rational);
    }
    if p.eps != 1 && p.eps != -1 {
        return Err(CfError::OutOfDomain("eps must be +1 or -1".into()));
    }
    if !(p.x.is_positive() && p.x < Q::one()) {
        return Err(CfError::OutOfDomain(format!("x = {} not in (0,1)", p.x)));
    }
    let (lo, hi) = match parity {
        Parity::Odd => grotesque_domain(),
        Parity::Even => (Q::from_int(-1), Q::one()),
    };
    if p.y <= lo || p.y >= hi {
        return Err(CfError::OutOfDomain(format!("y = {} outside the dual domain", p.y)));
    }
    Ok(())
}

fn forward(p: &ExtensionPoint, parity: Parity) -> Result<ExtensionPoint, CfError> {
    check(p, parity)?;
    let (d, x) = match parity {
        Parity::Odd => ocf_step(&p.x)?,
        Parity::Even => ecf_step(&p.x)?,
    };
    let y = Q::from_int(d.eps as i64) / (&p.y + d.a);
    Ok(ExtensionPoint { x, y, eps: -d.eps * p.eps })
}

fn backward(p: &ExtensionPoint, parity: Parity) -> Result<ExtensionPoint, CfError> {
    check(p, parity)?;
    let (d, y) = match parity {
        Parity::Odd => gcf_step(&p.y)?,
        Parity::Even => eecf_step(&p.y)?,
    };
    let x = (&p.x * d.eps as i64 + d.a).recip();
    Ok(ExtensionPoint { x, y, eps: -d.eps * p.eps })
}

/// `(x, y, eps) -> (T_o x, eps1/(a1 + y), -eps1 eps)`.
pub fn natural_extension_odd(p: &ExtensionPoint) -> Result<ExtensionPoint, CfError> {
    forward(p, Parity::Odd)
}

pub fn natural_extension_odd_inv(p: &ExtensionPoint) -> Result<ExtensionPoint, CfError> {
    backward(p, Parity::Odd)
}

pub fn natural_extension_even(p: &ExtensionPoint) -> Result<ExtensionPoint, CfError> {
    forward(p, Parity::Even)
}

pub fn natural_extension_even_inv(p: &ExtensionPoint) -> Result<ExtensionPoint, CfError> {
    backward(p, Parity::Even)
}

/// Inverse of the odd natural extension (first two coordinates) computed
/// through the inverse first-return map at the section point `(1/u, -v)`:
/// `(-sign(v) / R(1/u), sign(v) R(-v))` with `R(w) = -sign(v) b0(v) - 1/w`.
pub fn inverse_via_rho(u: &Q, v: &Q) -> Result<(Q, Q), CfError> {
    let p = ExtensionPoint::new(u.clone(), v.clone(), 1);
    check(&p, Parity::Odd)?;
    let (d, _) = gcf_step(v)?;
    let s = d.eps as i64;
    let r = Mat2::new(-s * d.a, -1, 1, 0);
    let pole = || CfError::OutOfDomain("inverse return map hits its pole".into());
    let first = r.apply(&u.recip()).ok_or_else(pole)?;
    let second = r.apply(&-v).ok_or_else(pole)?;
    Ok((Q::from_int(-s) / first, &second * s))
}
