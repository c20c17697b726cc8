//! Invariance checks: the mass of the full preimage of a region under all
//! branches of a map against the mass of the region.
//!
//! One-dimensional maps have infinitely many branches; the first ones are
//! summed explicitly and the rest in closed form, since the branch masses
//! telescope in steps of 2. Natural extensions need a y-interval away from
//! 0, which makes the preimage a finite union of rectangles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::measure::{mass_ratio, validate, MeasureName, MeasureSpec, Region};
use crate::real::{golden, int, real, three_log_golden, to_f64, Real};
use crate::DynError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapName {
    TO,
    TauO,
    TE,
    TauE,
    TBarO,
    TBarE,
}

impl MapName {
    pub const ALL: [MapName; 6] = [MapName::TO, MapName::TauO, MapName::TE, MapName::TauE, MapName::TBarO, MapName::TBarE];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::TO => "t_o",
            MapName::TauO => "tau_o",
            MapName::TE => "t_e",
            MapName::TauE => "tau_e",
            MapName::TBarO => "t_bar_o",
            MapName::TBarE => "t_bar_e",
        }
    }

    pub fn invariant_measure(self) -> MeasureName {
        match self {
            MapName::TO => MeasureName::MuO,
            MapName::TauO => MeasureName::NuO,
            MapName::TE => MeasureName::MuE,
            MapName::TauE => MeasureName::NuE,
            MapName::TBarO => MeasureName::MuBarO,
            MapName::TBarE => MeasureName::MuBarE,
        }
    }

    fn odd(self) -> bool {
        matches!(self, MapName::TO | MapName::TauO | MapName::TBarO)
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MapName {
    type Err = DynError;
    fn from_str(s: &str) -> Result<Self, DynError> {
        MapName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| DynError::Invalid(format!("unknown map {s}")))
    }
}

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Branches below this digit are summed one by one.
const EXPLICIT: i64 = 64;
const MAX_BRANCHES: i64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub measure: MeasureName,
    pub normalized: bool,
    pub map: MapName,
    pub region: String,
    pub mass_region: f64,
    pub mass_preimage: f64,
    pub difference: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Branches summed one by one (the remainder, if any, in closed form).
    pub branches: usize,
    pub digits: usize,
}

/// Digits of a branch with sign `eps`, smallest first.
fn first_digit(odd: bool, eps: i8) -> i64 {
    match (odd, eps) {
        (true, 1) => 1,
        (true, _) => 3,
        (false, _) => 2,
    }
}

fn tail_start(odd: bool) -> i64 {
    if odd {
        EXPLICIT + 1
    } else {
        EXPLICIT
    }
}

fn ordered(x: Real, y: Real) -> (Real, Real) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// `(product of branch mass ratios, number of explicit branches)`.
fn preimage_ratio(map: MapName, region: &Region, digits: usize) -> Result<(Real, usize), DynError> {
    let m = map.invariant_measure();
    let odd = map.odd();
    let one = int(1, digits);
    let mut prod = one.clone();
    let mut count = 0usize;
    match (map, region) {
        (MapName::TO | MapName::TE, Region::Interval(a, b)) => {
            let (a, b) = (real(a, digits), real(b, digits));
            for eps in [1i8, -1] {
                let mut n = first_digit(odd, eps);
                while n < EXPLICIT {
                    let nn = int(n, digits);
                    let (lo, hi) = if eps == 1 {
                        (&one / (&nn + &b), &one / (&nn + &a))
                    } else {
                        (&one / (&nn - &a), &one / (&nn - &b))
                    };
                    prod *= mass_ratio(m, &lo, &hi, None, digits);
                    count += 1;
                    n += 2;
                }
            }
            let a0 = int(tail_start(odd), digits);
            let (plus, minus) = if odd {
                let s = &a0 - int(2, digits) + golden(digits);
                ((&s + &b) / (&s + &a), (&s - &a) / (&s - &b))
            } else {
                let s = &a0 - &one;
                ((&s + &b) / (&s + &a), (&s - &a) / (&s - &b))
            };
            prod *= plus * minus;
        }
        (MapName::TauO | MapName::TauE, Region::Interval(c, d)) => {
            let (c, d) = (real(c, digits), real(d, digits));
            for eps in [1i8, -1] {
                let mut n = first_digit(odd, eps);
                while n < EXPLICIT {
                    let nn = int(n, digits);
                    let (lo, hi) = if eps == 1 {
                        (&one / (&nn + &d), &one / (&nn + &c))
                    } else {
                        (-(&one / (&nn + &c)), -(&one / (&nn + &d)))
                    };
                    prod *= mass_ratio(m, &lo, &hi, None, digits);
                    count += 1;
                    n += 2;
                }
            }
            let s = int(tail_start(odd) - 1, digits);
            prod *= (&s + &d) / (&s + &c);
        }
        (MapName::TBarO | MapName::TBarE, Region::Rectangle { x, y }) => {
            if !(y.0.is_positive() || y.1.is_negative()) {
                return Err(DynError::Invalid("the y-interval must not contain 0".into()));
            }
            let eps: i8 = if y.0.is_positive() { 1 } else { -1 };
            let (a, b) = (real(&x.0, digits), real(&x.1, digits));
            let (c, d) = (real(&y.0, digits), real(&y.1, digits));
            // y = eps/(n + y'), so y' runs over [ylo - n, yhi - n]
            let (ylo, yhi) = if eps == 1 { (&one / &d, &one / &c) } else { (-(&one / &c), -(&one / &d)) };
            let dy = m.domain().1.expect("planar");
            let (dlo, dhi) = (real(&dy.0, digits), real(&dy.1, digits));
            let top = to_f64(&(&yhi - &dlo)).ceil() as i64 + 1;
            if top > MAX_BRANCHES {
                return Err(DynError::Invalid("the y-interval is too close to 0".into()));
            }
            let mut n = first_digit(odd, eps);
            while n <= top {
                let nn = int(n, digits);
                let lo = &ylo - &nn;
                let hi = &yhi - &nn;
                let lo = if lo > dlo { lo } else { dlo.clone() };
                let hi = if hi < dhi { hi } else { dhi.clone() };
                if lo < hi {
                    let (xl, xh) = if eps == 1 {
                        ordered(&one / (&nn + &b), &one / (&nn + &a))
                    } else {
                        ordered(&one / (&nn - &a), &one / (&nn - &b))
                    };
                    prod *= mass_ratio(m, &xl, &xh, Some((&lo, &hi)), digits);
                    count += 1;
                }
                n += 2;
            }
        }
        _ => return Err(DynError::Invalid(format!("region shape does not fit {map}"))),
    }
    Ok((prod, count))
}

pub fn check_invariance(
    spec: MeasureSpec,
    map: MapName,
    region: &Region,
    tol: f64,
    digits: usize,
) -> Result<InvarianceReport, DynError> {
    if map.invariant_measure() != spec.name {
        return Err(DynError::Mismatch { measure: spec.name.to_string(), map: map.to_string() });
    }
    if spec.normalized && !spec.name.is_finite() {
        return Err(DynError::Invalid(format!("{} is an infinite measure and has no normalization", spec.name)));
    }
    validate(spec.name, region)?;
    let direct = crate::measure::measure_mass(crate::MeasureSpec::new(spec.name), region, digits)?;
    let (ratio, branches) = preimage_ratio(map, region, digits)?;
    let mut pre = ratio.ln();
    let mut direct = direct;
    if spec.normalized {
        let z = three_log_golden(digits);
        pre /= &z;
        direct /= z;
    }
    let diff = to_f64(&(&pre - &direct)).abs();
    Ok(InvarianceReport {
        measure: spec.name,
        normalized: spec.normalized,
        map,
        region: region.to_string(),
        mass_region: to_f64(&direct),
        mass_preimage: to_f64(&pre),
        difference: diff,
        tolerance: tol,
        pass: diff <= tol,
        branches,
        digits,
    })
}
