//! Time averages of interval indicators along orbits of `T_o` and `tau_o`.
//!
//! Orbits of quadratic surds are eventually periodic, so the orbit is run
//! in binary fixed point from a decimal seed; each step re-selects the
//! branch from the rounded value.

use cutseq_exact::{golden_ratio, BigInt, QuadraticSurd as Q};
use num_bigint::Sign;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::invariance::MapName;
use crate::DynError;

pub const DEFAULT_SEED_DIGITS: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub enum Seed {
    /// A decimal such as `0.14159...`; its digits set the working precision.
    Decimal(String),
    Surd(Q),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BirkhoffReport {
    pub map: MapName,
    pub interval: String,
    pub steps: u64,
    pub hits: u64,
    pub average: f64,
    pub precision_bits: u32,
}

fn bits_for(digits: usize) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

/// `floor(x 2^p)`.
fn fixed(x: &Q, p: u32) -> BigInt {
    x.floor_scaled(p)
}

fn parse_decimal(s: &str) -> Result<(BigInt, usize), DynError> {
    let bad = || DynError::Invalid(format!("seed {s:?} is not a decimal number"));
    let t = s.trim();
    let (neg, t) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t),
    };
    let (int_part, frac) = t.split_once('.').unwrap_or((t, ""));
    if int_part.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac}");
    let mut n: BigInt = digits.parse().map_err(|_| bad())?;
    if neg {
        n = -n;
    }
    Ok((n, frac.len()))
}

fn seed_fixed(seed: &Seed) -> Result<(BigInt, u32), DynError> {
    match seed {
        Seed::Decimal(s) => {
            let (n, k) = parse_decimal(s)?;
            let p = bits_for(k.max(DEFAULT_SEED_DIGITS));
            let ten = BigInt::from(10u32).pow(k as u32);
            let scaled: BigInt = (n << p as usize) / ten;
            Ok((scaled, p))
        }
        Seed::Surd(x) => {
            let p = bits_for(DEFAULT_SEED_DIGITS);
            Ok((fixed(x, p), p))
        }
    }
}

struct Orbit {
    map: MapName,
    p: u32,
    one: BigInt,
    two_p: BigInt,
    /// `floor(G 2^p)` and `floor((G-2) 2^p)`.
    g: BigInt,
    g2: BigInt,
}

impl Orbit {
    fn new(map: MapName, p: u32) -> Self {
        let one = BigInt::one() << p as usize;
        let g = fixed(&golden_ratio(), p);
        let g2 = &g - (&one << 1);
        Orbit { map, p, two_p: BigInt::one() << (2 * p) as usize, one, g, g2 }
    }

    fn in_domain(&self, x: &BigInt) -> bool {
        match self.map {
            MapName::TO => x.is_positive() && *x < self.one,
            _ => *x > self.g2 && *x < self.g,
        }
    }

    fn step(&self, x: &BigInt) -> Option<BigInt> {
        if x.is_zero() {
            return None;
        }
        // u = 1/|x| in fixed point, f = floor(u)
        let u = &self.two_p / x.abs();
        let f: BigInt = &u >> self.p as usize;
        let odd_f = f.bit(0);
        match self.map {
            MapName::TO => {
                let frac = &u - (&f << self.p as usize);
                Some(if odd_f { frac } else { (&self.one - frac) % &self.one })
            }
            _ => {
                // the odd b with u - b in (G-2, G)
                for b in [&f - 1, f.clone(), &f + 1] {
                    if !b.bit(0) || b.sign() != Sign::Plus {
                        continue;
                    }
                    let y = &u - (&b << self.p as usize);
                    if y > self.g2 && y < self.g {
                        return Some(y);
                    }
                }
                None
            }
        }
    }
}

/// Fraction of `n` orbit points of `map` lying in `[lo, hi]`.
pub fn birkhoff_average(map: MapName, lo: &Q, hi: &Q, seed: &Seed, n: u64) -> Result<BirkhoffReport, DynError> {
    if !matches!(map, MapName::TO | MapName::TauO) {
        return Err(DynError::Invalid(format!("birkhoff averages need a finite invariant measure; {map} has none")));
    }
    if n == 0 {
        return Err(DynError::Invalid("need at least one step".into()));
    }
    if lo > hi {
        return Err(DynError::Invalid(format!("empty interval [{lo}, {hi}]")));
    }
    let (mut x, p) = seed_fixed(seed)?;
    let orbit = Orbit::new(map, p);
    if !orbit.in_domain(&x) {
        return Err(DynError::OutsideDomain(format!("seed outside the domain of {map}")));
    }
    // x in [lo, hi] iff floor(lo 2^p) <= x <= floor(hi 2^p), up to one ulp
    let (l, h) = (fixed(lo, p), fixed(hi, p));
    let mut hits = 0u64;
    for i in 0..n {
        if l <= x && x <= h {
            hits += 1;
        }
        if i + 1 == n {
            break;
        }
        x = orbit.step(&x).filter(|y| orbit.in_domain(y) || y.is_zero()).ok_or(DynError::OrbitTerminated { steps: i + 1 })?;
        if x.is_zero() {
            return Err(DynError::OrbitTerminated { steps: i + 1 });
        }
    }
    Ok(BirkhoffReport {
        map,
        interval: format!("[{lo}, {hi}]"),
        steps: n,
        hits,
        average: hits as f64 / n as f64,
        precision_bits: p,
    })
}
