//! Oriented geodesics, the sections `S_o`, `S_e`, lifting, and the
//! conjugations `J_o`, `J_e`.

use std::fmt;

use cutseq_cf::step::grotesque_domain;
use cutseq_cf::{ExtensionPoint, Parity};
use cutseq_exact::{classify_subgroup, ExtPoint, QuadraticSurd, UnimodularMatrix};

use crate::rho::rho_step;
use crate::CodeError;

type Q = QuadraticSurd;

/// Geodesic from `backward` (`gamma_{-inf}`) to `forward` (`gamma_inf`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedGeodesic {
    pub forward: Q,
    pub backward: Q,
}

impl OrientedGeodesic {
    pub fn new(forward: Q, backward: Q) -> Result<Self, CodeError> {
        if forward == backward {
            return Err(CodeError::Degenerate);
        }
        Ok(OrientedGeodesic { forward, backward })
    }

    pub fn reversed(&self) -> Self {
        OrientedGeodesic { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    pub fn negated(&self) -> Self {
        OrientedGeodesic { forward: -&self.forward, backward: -&self.backward }
    }

    pub fn scaled(&self, s: i8) -> Self {
        if s < 0 {
            self.negated()
        } else {
            self.clone()
        }
    }

    /// Image under a Möbius map; fails if an endpoint goes to infinity.
    pub fn apply(&self, m: &UnimodularMatrix) -> Result<Self, CodeError> {
        let f = |x: &Q| match m.apply_surd(x) {
            ExtPoint::Finite(y) => Ok(y),
            ExtPoint::Infinity => Err(CodeError::OutOfSection(format!("{m} sends {x} to infinity"))),
        };
        Ok(OrientedGeodesic { forward: f(&self.forward)?, backward: f(&self.backward)? })
    }

    pub fn sign(&self) -> i8 {
        if self.forward.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for OrientedGeodesic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.forward, self.backward)
    }
}

/// Open interval of the dual coordinate: `I_G` (odd) or `(-1, 1)` (even).
pub fn dual_domain(parity: Parity) -> (Q, Q) {
    match parity {
        Parity::Odd => grotesque_domain(),
        Parity::Even => (Q::from_int(-1), Q::one()),
    }
}

/// Membership in `S_o = (1,inf) x (-I_G) u (-inf,-1) x I_G` or
/// `S_e = ((-inf,-1) u (1,inf)) x (-1,1)`; rational endpoints are excluded.
pub fn in_section(g: &OrientedGeodesic, parity: Parity) -> bool {
    if g.forward.is_rational() || g.backward.is_rational() {
        return false;
    }
    let s = g.sign();
    if g.forward.abs() <= Q::one() {
        return false;
    }
    let w = &g.backward * -(s as i64);
    let (lo, hi) = dual_domain(parity);
    lo < w && w < hi
}

pub(crate) fn require_section(g: &OrientedGeodesic, parity: Parity) -> Result<(), CodeError> {
    if in_section(g, parity) {
        Ok(())
    } else {
        Err(CodeError::OutOfSection(g.to_string()))
    }
}

pub const DEFAULT_LIFT_DEPTH: usize = 64;

fn group_ok(m: &UnimodularMatrix, parity: Parity) -> bool {
    let c = classify_subgroup(m);
    match parity {
        Parity::Odd => c.gamma_odd,
        Parity::Even => c.theta,
    }
}

/// Finds `g` in the odd group (or Theta) with `g(gamma)` in the section.
///
/// The forward endpoint is first pushed outside `[-1, 1]` by
/// `z -> 1/(a - z)` (`a = +-1` odd, `a = 0` even), then first-return maps
/// driven by the forward digits are applied until the backward endpoint
/// falls into the dual domain. `max_depth` bounds the number of returns.
pub fn lift_to_section(
    g: &OrientedGeodesic,
    parity: Parity,
    max_depth: usize,
) -> Result<(UnimodularMatrix, OrientedGeodesic), CodeError> {
    if g.forward.is_rational() || g.backward.is_rational() || g.forward == g.backward {
        return Err(CodeError::Degenerate);
    }
    let mut m = UnimodularMatrix::identity();
    let mut cur = g.clone();
    if cur.forward.abs() < Q::one() {
        let a: i64 = match parity {
            Parity::Even => 0,
            Parity::Odd if cur.forward.is_positive() => 1,
            Parity::Odd => -1,
        };
        let push = UnimodularMatrix::new(0, 1, -1, a)?;
        cur = cur.apply(&push)?;
        m = push;
    }
    for _ in 0..=max_depth {
        if in_section(&cur, parity) {
            debug_assert!(group_ok(&m, parity));
            return Ok((m, cur));
        }
        let step = rho_step(&cur, parity, false)?;
        cur = step.geodesic;
        m = &step.matrix * &m;
    }
    Err(CodeError::NotLifted(max_depth))
}

/// `J(x, y) = sign(x) (1/x, -y, 1)`.
pub fn conjugation_j(g: &OrientedGeodesic, parity: Parity) -> Result<ExtensionPoint, CodeError> {
    require_section(g, parity)?;
    let s = g.sign();
    Ok(ExtensionPoint::new(g.forward.recip() * s as i64, &g.backward * -(s as i64), s))
}

pub fn conjugation_j_inv(p: &ExtensionPoint, parity: Parity) -> Result<OrientedGeodesic, CodeError> {
    let s = p.eps as i64;
    let g = OrientedGeodesic::new(p.x.recip() * s, &p.y * -s)?;
    require_section(&g, parity)?;
    Ok(g)
}
