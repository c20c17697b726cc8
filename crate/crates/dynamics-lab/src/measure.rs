//! Closed-form masses of the invariant measures.
//!
//! Densities (unnormalized):
//! `mu_o = 1/(u+G-1) - 1/(u-G-1)` on (0,1), `nu_o = 1/(1+v)` on `I_G = (G-2, G)`,
//! `mu_bar_o = (1+xy)^-2` on `(0,1) x I_G`, `mu_e = 1/(1+u) + 1/(1-u)` on (0,1),
//! `nu_e = 1/(1+v)` on (-1,1), `mu_bar_e = (1+xy)^-2` on `(0,1) x (-1,1)`.
//! The odd measures have total mass `3 log G`; the even ones are infinite.

use std::fmt;

use cutseq_exact::{golden_ratio, QuadraticSurd as Q};
use serde::{Deserialize, Serialize};

use crate::real::{golden, int, real, three_log_golden, Real};
use crate::DynError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureName {
    MuO,
    NuO,
    MuBarO,
    MuE,
    NuE,
    MuBarE,
}

impl MeasureName {
    pub const ALL: [MeasureName; 6] =
        [MeasureName::MuO, MeasureName::NuO, MeasureName::MuBarO, MeasureName::MuE, MeasureName::NuE, MeasureName::MuBarE];

    pub fn is_finite(self) -> bool {
        matches!(self, MeasureName::MuO | MeasureName::NuO | MeasureName::MuBarO)
    }

    pub fn is_planar(self) -> bool {
        matches!(self, MeasureName::MuBarO | MeasureName::MuBarE)
    }

    pub fn density(self) -> &'static str {
        match self {
            MeasureName::MuO => "1/(u+G-1) - 1/(u-G-1) on (0,1)",
            MeasureName::NuO => "1/(1+v) on (G-2,G)",
            MeasureName::MuBarO => "(1+xy)^-2 on (0,1)x(G-2,G)",
            MeasureName::MuE => "1/(1+u) + 1/(1-u) on (0,1)",
            MeasureName::NuE => "1/(1+v) on (-1,1)",
            MeasureName::MuBarE => "(1+xy)^-2 on (0,1)x(-1,1)",
        }
    }

    /// `(x-range, y-range)`; the y-range is `None` for measures on the line.
    pub fn domain(self) -> ((Q, Q), Option<(Q, Q)>) {
        let g = golden_ratio();
        let unit = (Q::zero(), Q::one());
        let ig = (&g - 2, g);
        let sym = (Q::from_int(-1), Q::one());
        match self {
            MeasureName::MuO | MeasureName::MuE => (unit, None),
            MeasureName::NuO => (ig, None),
            MeasureName::NuE => (sym, None),
            MeasureName::MuBarO => (unit, Some(ig)),
            MeasureName::MuBarE => (unit, Some(sym)),
        }
    }
}

impl fmt::Display for MeasureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl MeasureName {
    pub fn as_str(self) -> &'static str {
        match self {
        MeasureName::MuO => "mu_o",
        MeasureName::NuO => "nu_o",
        MeasureName::MuBarO => "mu_bar_o",
        MeasureName::MuE => "mu_e",
        MeasureName::NuE => "nu_e",
        MeasureName::MuBarE => "mu_bar_e",
        }
    }
}

impl std::str::FromStr for MeasureName {
    type Err = DynError;
    fn from_str(s: &str) -> Result<Self, DynError> {
        MeasureName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| DynError::Invalid(format!("unknown measure {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureSpec {
    pub name: MeasureName,
    /// Divide by `3 log G` (finite odd measures only).
    pub normalized: bool,
}

impl MeasureSpec {
    pub fn new(name: MeasureName) -> Self {
        MeasureSpec { name, normalized: false }
    }

    pub fn normalized(name: MeasureName) -> Self {
        MeasureSpec { name, normalized: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    Interval(Q, Q),
    Rectangle { x: (Q, Q), y: (Q, Q) },
}

impl Region {
    pub fn interval(lo: Q, hi: Q) -> Self {
        Region::Interval(lo, hi)
    }

    pub fn rectangle(x: (Q, Q), y: (Q, Q)) -> Self {
        Region::Rectangle { x, y }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Interval(a, b) => write!(f, "[{a}, {b}]"),
            Region::Rectangle { x, y } => write!(f, "[{}, {}] x [{}, {}]", x.0, x.1, y.0, y.1),
        }
    }
}

fn inside(what: &str, (lo, hi): &(Q, Q), (dlo, dhi): &(Q, Q)) -> Result<(), DynError> {
    if lo >= hi {
        return Err(DynError::Invalid(format!("empty {what} [{lo}, {hi}]")));
    }
    if lo < dlo || hi > dhi {
        return Err(DynError::OutsideDomain(format!("{what} [{lo}, {hi}] not inside [{dlo}, {dhi}]")));
    }
    Ok(())
}

/// Checks the region against the measure's domain and singularities.
pub(crate) fn validate(m: MeasureName, region: &Region) -> Result<(), DynError> {
    let (dx, dy) = m.domain();
    match (region, dy) {
        (Region::Interval(a, b), None) => {
            inside("interval", &(a.clone(), b.clone()), &dx)?;
            match m {
                MeasureName::MuE if *b == Q::one() => Err(DynError::Singular("mu_e at u = 1".into())),
                MeasureName::NuE if *a == Q::from_int(-1) => Err(DynError::Singular("nu_e at v = -1".into())),
                _ => Ok(()),
            }
        }
        (Region::Rectangle { x, y }, Some(dy)) => {
            inside("x-interval", x, &dx)?;
            inside("y-interval", y, &dy)?;
            if m == MeasureName::MuBarE && x.1 == Q::one() && y.0 == Q::from_int(-1) {
                return Err(DynError::Singular("mu_bar_e at (1, -1)".into()));
            }
            Ok(())
        }
        (Region::Interval(..), Some(_)) => Err(DynError::Invalid(format!("{m} needs a rectangle"))),
        (Region::Rectangle { .. }, None) => Err(DynError::Invalid(format!("{m} needs an interval"))),
    }
}

/// Mass of `[a,b]` (or `[a,b] x [c,d]`) is `log` of this ratio.
pub(crate) fn mass_ratio(m: MeasureName, a: &Real, b: &Real, cd: Option<(&Real, &Real)>, digits: usize) -> Real {
    let one = int(1, digits);
    match (m, cd) {
        (MeasureName::MuO, _) => {
            let g = golden(digits);
            let gm = &g - &one;
            let gp = &g + &one;
            ((b + &gm) * (&gp - a)) / ((a + &gm) * (&gp - b))
        }
        (MeasureName::MuE, _) => ((&one + b) * (&one - a)) / ((&one + a) * (&one - b)),
        (MeasureName::NuO | MeasureName::NuE, _) => (&one + b) / (&one + a),
        (MeasureName::MuBarO | MeasureName::MuBarE, Some((c, d))) => {
            ((&one + b * d) * (&one + a * c)) / ((&one + a * d) * (&one + b * c))
        }
        (_, None) => unreachable!("planar measure without y-interval"),
    }
}

/// Closed-form mass, evaluated to `digits` significant digits.
pub fn measure_mass(spec: MeasureSpec, region: &Region, digits: usize) -> Result<Real, DynError> {
    validate(spec.name, region)?;
    if spec.normalized && !spec.name.is_finite() {
        return Err(DynError::Invalid(format!("{} is an infinite measure and has no normalization", spec.name)));
    }
    let r = match region {
        Region::Interval(a, b) => mass_ratio(spec.name, &real(a, digits), &real(b, digits), None, digits),
        Region::Rectangle { x, y } => {
            let (c, d) = (real(&y.0, digits), real(&y.1, digits));
            mass_ratio(spec.name, &real(&x.0, digits), &real(&x.1, digits), Some((&c, &d)), digits)
        }
    };
    let mass = r.ln();
    Ok(if spec.normalized { mass / three_log_golden(digits) } else { mass })
}

/// The whole domain (finite odd measures only).
pub fn full_domain(m: MeasureName) -> Region {
    match m.domain() {
        (x, None) => Region::Interval(x.0, x.1),
        (x, Some(y)) => Region::Rectangle { x, y },
    }
}
