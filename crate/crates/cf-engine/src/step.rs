//! One-digit steps of the Gauss maps `T_o`, `tau_o`, `T_e`, `tau_e` and the
//! regular map, plus leading-digit extraction for numbers at least 1.

use cutseq_exact::{golden_ratio, BigInt, QuadraticSurd};
use num_traits::ToPrimitive;

use crate::{CfError, Kind, SignedDigit};

type Q = QuadraticSurd;

pub(crate) fn small(n: &BigInt) -> Result<i64, CfError> {
    n.to_i64().ok_or(CfError::DigitOverflow)
}

fn int(n: i64) -> Q {
    Q::from_int(n)
}

/// `G - 2` and `G`, the ends of the grotesque domain.
pub fn grotesque_domain() -> (Q, Q) {
    let g = golden_ratio();
    (&g - 2, g)
}

fn check_unit(x: &Q, what: &str) -> Result<(), CfError> {
    if x.is_zero() {
        return Err(CfError::Terminated);
    }
    if x.is_negative() || *x > Q::one() {
        return Err(CfError::OutOfDomain(format!("{what} needs 0 < x <= 1, got {x}")));
    }
    Ok(())
}

/// Odd Gauss map: returns `(a1, eps1)` and `T_o(x)`, with `1/x = a1 + eps1 T_o(x)`.
/// A rational reaching `1/m`, `m` odd, yields `(m, +1)` and remainder 0.
pub fn ocf_step(x: &Q) -> Result<(SignedDigit, Q), CfError> {
    check_unit(x, "odd Gauss map")?;
    let u = x.recip();
    let f = small(&u.floor())?;
    if u.is_integer() {
        return if f % 2 != 0 {
            Ok((SignedDigit::plus(f), Q::zero()))
        } else {
            Err(CfError::Boundary(format!("1/{f} is a branch endpoint of the odd map")))
        };
    }
    Ok(if f % 2 != 0 {
        (SignedDigit::plus(f), &u - f)
    } else {
        (SignedDigit::minus(f + 1), int(f + 1) - &u)
    })
}

/// Even Gauss map: `1/x = a1 + eps1 T_e(x)` with `a1` even.
pub fn ecf_step(x: &Q) -> Result<(SignedDigit, Q), CfError> {
    check_unit(x, "even Gauss map")?;
    let u = x.recip();
    let f = small(&u.floor())?;
    if u.is_integer() {
        return if f % 2 == 0 {
            Ok((SignedDigit::plus(f), Q::zero()))
        } else {
            Err(CfError::Boundary(format!("1/{f} is a branch endpoint of the even map")))
        };
    }
    Ok(if f % 2 == 0 {
        (SignedDigit::plus(f), &u - f)
    } else {
        (SignedDigit::minus(f + 1), int(f + 1) - &u)
    })
}

/// Regular Gauss map `x -> 1/x - floor(1/x)`.
pub fn rcf_step(x: &Q) -> Result<(SignedDigit, Q), CfError> {
    check_unit(x, "regular Gauss map")?;
    let u = x.recip();
    let f = small(&u.floor())?;
    Ok((SignedDigit::plus(f), &u - f))
}

/// Grotesque map `tau_o(y) = 1/|y| - b0(y)` on `(G-2, G)`; returns `(b0, sign y)`.
pub fn gcf_step(y: &Q) -> Result<(SignedDigit, Q), CfError> {
    if y.is_zero() {
        return Err(CfError::Terminated);
    }
    let (lo, hi) = grotesque_domain();
    if *y <= lo || *y >= hi {
        return Err(CfError::OutOfDomain(format!("grotesque map needs G-2 < y < G, got {y}")));
    }
    let eps: i8 = if y.is_positive() { 1 } else { -1 };
    let u = y.abs().recip();
    let f = small(&u.floor())?;
    let g = golden_ratio();
    // the odd b with b + G - 2 <= u <= b + G lies in {f-1, f, f+1}
    for b in [f - 1, f, f + 1] {
        if b < 1 || b % 2 == 0 {
            continue;
        }
        let top = &g + b;
        let bottom = &top - 2;
        if u == top || u == bottom {
            return Err(CfError::Boundary(format!("1/|y| - G is an odd integer for y = {y}")));
        }
        if bottom < u && u < top {
            return Ok((SignedDigit::new(b, eps), &u - b));
        }
    }
    unreachable!("no grotesque digit for {y}")
}

/// Extended-even map `tau_e(y) = 1/|y| - b0(y)` on `(-1, 1)`, `b0` even with `|1/|y| - b0| < 1`.
pub fn eecf_step(y: &Q) -> Result<(SignedDigit, Q), CfError> {
    if y.is_zero() {
        return Err(CfError::Terminated);
    }
    if *y <= int(-1) || *y >= Q::one() {
        return Err(CfError::OutOfDomain(format!("extended-even map needs -1 < y < 1, got {y}")));
    }
    let eps: i8 = if y.is_positive() { 1 } else { -1 };
    let u = y.abs().recip();
    let f = small(&u.floor())?;
    if f % 2 == 0 {
        Ok((SignedDigit::new(f, eps), &u - f))
    } else if u.is_integer() {
        Err(CfError::Boundary(format!("1/|y| = {f} is odd")))
    } else {
        Ok((SignedDigit::new(f + 1, eps), &u - (f + 1)))
    }
}

/// One step of the Gauss map of `kind`.
pub fn step(kind: Kind, x: &Q) -> Result<(SignedDigit, Q), CfError> {
    match kind {
        Kind::Rcf => rcf_step(x),
        Kind::Ocf => ocf_step(x),
        Kind::Ecf => ecf_step(x),
        Kind::Gcf => gcf_step(x),
        Kind::Eecf => eecf_step(x),
    }
}

/// Splits `x >= 1` as `a0 + eps0 * body` with `body` in `[0, 1)`.
pub fn leading_digit(kind: Kind, x: &Q) -> Result<(SignedDigit, Q), CfError> {
    if *x < Q::one() {
        return Err(CfError::OutOfDomain(format!("leading digit needs x >= 1, got {x}")));
    }
    let f = small(&x.floor())?;
    let integral = x.is_integer();
    match kind {
        Kind::Rcf => Ok((SignedDigit::plus(f), x - f)),
        Kind::Ocf => {
            if f % 2 != 0 {
                Ok((SignedDigit::plus(f), x - f))
            } else if integral {
                Err(CfError::Boundary(format!("even integer {f} has no odd expansion")))
            } else {
                Ok((SignedDigit::minus(f + 1), int(f + 1) - x))
            }
        }
        Kind::Ecf => {
            if f % 2 == 0 {
                Ok((SignedDigit::plus(f), x - f))
            } else if integral {
                Err(CfError::Boundary(format!("odd integer {f} has no even expansion")))
            } else {
                Ok((SignedDigit::minus(f + 1), int(f + 1) - x))
            }
        }
        Kind::Gcf | Kind::Eecf => Err(CfError::Inadmissible(format!("{kind} has no leading digit"))),
    }
}
