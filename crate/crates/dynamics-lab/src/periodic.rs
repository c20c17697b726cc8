//! Purely periodic expansions: the conjugate-window criterion checked
//! against direct expansion, and the reversed-period conjugate identity.

use cutseq_cf::evaluate::{body_domain, Mat2};
use cutseq_cf::{expand, Kind, SignedDigit, DEFAULT_MAX_DEPTH};
use cutseq_exact::{golden_ratio, QuadraticSurd as Q};
use num_integer::Integer;
use serde::Serialize;

use crate::DynError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodicityReport {
    pub kind: Kind,
    pub value: String,
    pub conjugate: String,
    /// Conjugate inside `(-G, 2-G]` (odd) or `(-1, 1)` (even). The closed end
    /// admits `G^2 = [[ overline (3,-1) ]]`, whose conjugate is `2 - G`.
    pub window: bool,
    /// Expansion has no preperiod (the leading digit included).
    pub expansion: bool,
    /// The full period when purely periodic.
    pub period: Vec<SignedDigit>,
    /// `conj = -<< reversed period >>`, checked when purely periodic.
    pub conjugate_identity: Option<bool>,
}

fn dual(kind: Kind) -> Result<Kind, DynError> {
    match kind {
        Kind::Ocf => Ok(Kind::Gcf),
        Kind::Ecf => Ok(Kind::Eecf),
        other => Err(DynError::Invalid(format!("periodicity test is for ocf or ecf, not {other}"))),
    }
}

pub fn conjugate_window(kind: Kind) -> Result<(Q, Q), DynError> {
    dual(kind)?;
    Ok(match kind {
        Kind::Ocf => {
            let g = golden_ratio();
            (-g.clone(), Q::from_int(2) - g)
        }
        _ => (Q::from_int(-1), Q::one()),
    })
}

/// Both characterizations of pure periodicity for `alpha > 1`; an error if
/// they disagree or the conjugate identity fails.
pub fn purely_periodic(alpha: &Q, kind: Kind) -> Result<PeriodicityReport, DynError> {
    let dk = dual(kind)?;
    if alpha.is_rational() {
        return Err(DynError::Invalid(format!("{alpha} is rational")));
    }
    if *alpha <= Q::one() {
        return Err(DynError::Invalid(format!("{alpha} is not greater than 1")));
    }
    let conj = alpha.conjugate()?;
    let (lo, hi) = conjugate_window(kind)?;
    let window = lo < conj && (conj < hi || (kind == Kind::Ocf && conj == hi));
    let s = expand(kind, alpha, DEFAULT_MAX_DEPTH)?;
    if s.truncated || s.period.is_empty() {
        return Err(DynError::Invalid(format!("no period found for {alpha} within {DEFAULT_MAX_DEPTH} digits")));
    }
    let expansion = s.preperiod.is_empty() && s.leading.is_some() && s.leading.as_ref() == s.period.last();
    if window != expansion {
        return Err(DynError::Disagreement(alpha.to_string()));
    }
    let (period, identity) = if expansion {
        let r = s.period.len();
        let mut p = vec![s.leading.unwrap()];
        p.extend_from_slice(&s.period[..r - 1]);
        let rev: Vec<SignedDigit> = p.iter().rev().copied().collect();
        // -conj must be the fixed point of the reversed period inside the
        // (closed) dual domain
        let w = -conj.clone();
        let (dlo, dhi) = body_domain(dk);
        let ok = Mat2::product(dk, &rev).apply(&w).as_ref() == Some(&w) && dlo <= w && w <= dhi;
        if !ok {
            return Err(DynError::Disagreement(format!("conjugate identity for {alpha}")));
        }
        (p, Some(ok))
    } else {
        (Vec::new(), None)
    };
    Ok(PeriodicityReport {
        kind,
        value: alpha.to_string(),
        conjugate: conj.to_string(),
        window,
        expansion,
        period,
        conjugate_identity: identity,
    })
}

/// All `alpha = (-B + sqrt(D)) / (2A)` with `A >= 1`, `gcd(A, B, C) = 1`,
/// `D = B^2 - 4AC` a non-square at most `max_disc`, `A <= D/4`,
/// `alpha > 1` and `-3 < conj(alpha) < 3`. Every surd with
/// `-3 < conj < 1 < alpha` and discriminant at most `max_disc` is included:
/// `f(1) <= -1` for the primitive minimal polynomial forces `A <= D/4`.
pub fn surd_corpus(max_disc: i64) -> Vec<Q> {
    let mut out = Vec::new();
    for d in 5..=max_disc {
        let root = (d as f64).sqrt();
        if (root.round() as i64).pow(2) == d || !(d % 4 == 0 || d % 4 == 1) {
            continue;
        }
        for a in 1..=d / 4 {
            let bmin = -((a as f64) * (6.0 + root)).ceil() as i64 - 1;
            let bmax = 2 * a + 1;
            for b in bmin..=bmax {
                let num = b * b - d;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if a.gcd(&b).gcd(&c) != 1 {
                    continue;
                }
                let (x, y) = ((-b as f64 + root) / (2 * a) as f64, (-b as f64 - root) / (2 * a) as f64);
                if x < 0.9 || !(-3.1..3.1).contains(&y) {
                    continue;
                }
                let alpha = Q::new(-b, 1, 2 * a, d).expect("nonzero denominator");
                let conj = Q::new(-b, -1, 2 * a, d).expect("nonzero denominator");
                if alpha > Q::one() && conj > Q::from_int(-3) && conj < Q::from_int(3) {
                    out.push(alpha);
                }
            }
        }
    }
    out
}
