//! Roof function of the first-return map and lengths of closed geodesics.

use cutseq_cf::{Kind, Parity, SignedDigit};
use cutseq_exact::{classify_subgroup, BigInt, QuadraticSurd as Q, UnimodularMatrix};
use cutseq_geodesic::{closed_geodesic_from_period, in_section, periodic_pair, rho, sign_product, OrientedGeodesic};
use dashu_float::ops::SquareRoot;
use num_traits::Signed;
use serde::Serialize;

use crate::real::{big, int, real, to_f64, Real};
use crate::DynError;

pub const LENGTH_TOLERANCE: f64 = 1e-9;

pub(crate) fn parity_of(kind: Kind) -> Result<Parity, DynError> {
    match kind {
        Kind::Ocf => Ok(Parity::Odd),
        Kind::Ecf => Ok(Parity::Even),
        other => Err(DynError::Invalid(format!("closed geodesics are coded by ocf or ecf periods, not {other}"))),
    }
}

/// `rho(x)^2 (x - sign(gamma_inf)) / (rho(x) - sign(rho(gamma_inf)))`.
fn roof_factor(x: &Q, rx: &Q, s: i64, s1: i64) -> Result<Q, DynError> {
    let den = rx - s1;
    if den.is_zero() {
        return Err(DynError::Invalid("roof factor has a zero denominator".into()));
    }
    Ok(rx * rx * (x - s) / den)
}

/// `(F(gamma_inf), F(gamma_-inf))`; the roof is half the log of their ratio.
pub fn roof_factors(g: &OrientedGeodesic, parity: Parity) -> Result<(Q, Q), DynError> {
    let next = rho(g, parity)?.geodesic;
    let (s, s1) = (g.sign() as i64, next.sign() as i64);
    Ok((roof_factor(&g.forward, &next.forward, s, s1)?, roof_factor(&g.backward, &next.backward, s, s1)?))
}

/// Hyperbolic length of the geodesic arc between two consecutive returns
/// to the section.
pub fn roof(g: &OrientedGeodesic, parity: Parity, digits: usize) -> Result<Real, DynError> {
    if !in_section(g, parity) {
        return Err(DynError::OutsideDomain(format!("{g} is not in the section")));
    }
    if g.forward.is_rational() || g.backward.is_rational() {
        return Err(DynError::Invalid("roof needs irrational endpoints".into()));
    }
    let (f, b) = roof_factors(g, parity)?;
    let ratio = real(&f, digits) / real(&b, digits);
    if ratio <= int(0, digits) {
        return Err(DynError::Invalid(format!("roof ratio is not positive for {g}")));
    }
    Ok(ratio.ln() / int(2, digits))
}

/// `(geodesics visited, composed return matrix)` over `steps` returns.
fn orbit(g: &OrientedGeodesic, parity: Parity, steps: usize) -> Result<(Vec<OrientedGeodesic>, UnimodularMatrix), DynError> {
    let mut cur = g.clone();
    let mut m = UnimodularMatrix::identity();
    let mut seen = vec![cur.clone()];
    for _ in 0..steps {
        let st = rho(&cur, parity)?;
        m = &st.matrix * &m;
        cur = st.geodesic;
        seen.push(cur.clone());
    }
    Ok((seen, m))
}

/// Sum of the roofs over one period of returns.
pub fn roof_sum(period: &[SignedDigit], kind: Kind, digits: usize) -> Result<Real, DynError> {
    let parity = parity_of(kind)?;
    let g = closed_geodesic_from_period(period, kind, 1)?;
    let (visited, _) = orbit(&g, parity, period.len())?;
    let mut total = int(0, digits);
    for h in &visited[..period.len()] {
        total += roof(h, parity, digits)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeodesicLengthReport {
    pub kind: Kind,
    pub period: Vec<SignedDigit>,
    /// The trace-oracle length of the period's return matrix.
    pub length: f64,
    /// Half the log of the ratio of derivatives of the return map at the two endpoints.
    pub via_product: f64,
    /// `2 arccosh(|tr M| / 2)`.
    pub via_trace: f64,
    /// The same ratio written as a product over cyclic shifts of the period.
    pub via_shift_product: f64,
    pub relative_difference: f64,
    pub agree: bool,
    pub shift_product_agrees: bool,
    pub matrix: [String; 4],
    pub trace: String,
    /// `m` when the return matrix is the `m`-th power of a shorter closed period.
    pub primitive_exponent: u32,
    pub primitive_length: f64,
    pub tolerance: f64,
}

/// Exponent `m` with the period equal to `u^m`, `u` the shortest block
/// whose sign product is +1.
pub fn primitive_exponent(period: &[SignedDigit]) -> u32 {
    let r = period.len();
    for q in (1..=r).filter(|q| r % q == 0) {
        if (q..r).all(|i| period[i] == period[i - q]) {
            let reps = r / q;
            let block = if sign_product(&period[..q]) == 1 { 1 } else { 2 };
            return (reps / block).max(1) as u32;
        }
    }
    1
}

fn arccosh_half(t: &BigInt, digits: usize) -> Real {
    // 2 arccosh(t/2) = 2 log((t + sqrt(t^2 - 4)) / 2)
    let tt = big(t, digits);
    let root = (&tt * &tt - int(4, digits)).sqrt();
    ((tt + root) / int(2, digits)).ln() * int(2, digits)
}

pub fn closed_length(period: &[SignedDigit], kind: Kind, digits: usize) -> Result<GeodesicLengthReport, DynError> {
    let parity = parity_of(kind)?;
    let r = period.len();
    let g = closed_geodesic_from_period(period, kind, 1)?;
    let (visited, m) = orbit(&g, parity, r)?;
    if visited[r] != g {
        return Err(DynError::Invalid(format!("the period does not close up: {} != {g}", visited[r])));
    }
    let member = classify_subgroup(&m);
    if !(if parity == Parity::Odd { member.gamma_odd } else { member.theta }) {
        return Err(DynError::Invalid("return matrix is outside the expected group".into()));
    }
    let tr = m.trace().abs();
    if tr <= BigInt::from(2) {
        return Err(DynError::Invalid(format!("return matrix has |trace| {tr} <= 2")));
    }
    let via_trace = arccosh_half(&tr, digits);

    let pole = || DynError::Invalid("return map has a pole at an endpoint".into());
    let df = m.derivative_at(&g.forward).ok_or_else(pole)?;
    let db = m.derivative_at(&g.backward).ok_or_else(pole)?;
    let via_product = (real(&df, digits) / real(&db, digits)).ln() / int(2, digits);

    // prod_k ([[ shift k ]] / << reversed shift k >>)^2
    let mut shift = int(1, digits);
    for k in 0..r {
        let mut q = period.to_vec();
        q.rotate_left(k);
        let h = periodic_pair(&q, kind, 1)?;
        let t = real(&h.forward, digits) / real(&h.backward, digits);
        shift *= &t * &t;
    }
    let via_shift = shift.ln() / int(2, digits);

    let rel = |x: &Real| to_f64(&((x - &via_trace) / &via_trace)).abs();
    let relative_difference = rel(&via_product);
    let shift_rel = rel(&via_shift);
    let exp = primitive_exponent(period);
    let length = to_f64(&via_trace);
    let [a, b, c, d] = m.entries();
    Ok(GeodesicLengthReport {
        kind,
        period: period.to_vec(),
        length,
        via_product: to_f64(&via_product),
        via_trace: length,
        via_shift_product: to_f64(&via_shift),
        relative_difference,
        agree: relative_difference <= LENGTH_TOLERANCE,
        shift_product_agrees: shift_rel <= LENGTH_TOLERANCE,
        matrix: [a.to_string(), b.to_string(), c.to_string(), d.to_string()],
        trace: m.trace().to_string(),
        primitive_exponent: exp,
        primitive_length: length / exp as f64,
        tolerance: LENGTH_TOLERANCE,
    })
}

