//! Literal grammar: `(p+q*sqrt(D))/r`, `p/q`, `inf`, `[[a,b],[c,d]]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{ExactError, ExtPoint, QuadraticSurd, UnimodularMatrix};

fn err(msg: impl Into<String>) -> ExactError {
    ExactError::Parse(msg.into())
}

fn int(s: &str) -> Result<BigInt, ExactError> {
    let s = s.strip_prefix('+').unwrap_or(s);
    s.parse::<BigInt>().map_err(|_| err(format!("bad integer {s:?}")))
}

// index of the ')' matching the '(' at position 0
fn matching_paren(t: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

// split at top-level binary + and -, keeping the sign with each term
fn terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let at_sign = (ch == '+' || ch == '-') && depth == 0;
        if at_sign && !cur.is_empty() && !cur.ends_with('*') {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

// one term: `p[/r]` or `[c*]sqrt(D)[/r]` with optional sign, as (rational part, sqrt coefficient, D)
fn term(t: &str) -> Result<(BigRational, BigRational, BigInt), ExactError> {
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let sign = |x: BigRational| if neg { -x } else { x };
    let frac = |num: BigInt, den: Option<&str>| -> Result<BigRational, ExactError> {
        let den = den.map(int).transpose()?.unwrap_or_else(|| BigInt::from(1));
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(BigRational::new(num, den))
    };
    if let Some(pos) = body.find("sqrt(") {
        let coef = if pos == 0 {
            BigInt::from(1)
        } else {
            let c = body[..pos].strip_suffix('*').ok_or_else(|| err(format!("expected '*' in {t:?}")))?;
            int(c)?
        };
        let rest = &body[pos + 5..];
        let close = rest.find(')').ok_or_else(|| err(format!("unclosed sqrt in {t:?}")))?;
        let den = match &rest[close + 1..] {
            "" => None,
            tail => Some(tail.strip_prefix('/').ok_or_else(|| err(format!("unexpected {tail:?} in {t:?}")))?),
        };
        Ok((BigRational::zero(), sign(frac(coef, den)?), int(&rest[..close])?))
    } else {
        let (n, den) = match body.split_once('/') {
            Some((n, den)) => (n, Some(den)),
            None => (body, None),
        };
        Ok((sign(frac(int(n)?, den)?), BigRational::zero(), BigInt::zero()))
    }
}

pub fn parse_surd(s: &str) -> Result<QuadraticSurd, ExactError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err("empty literal"));
    }
    let (num, den) = match t.strip_prefix('(').and(matching_paren(&t)) {
        Some(close) if close + 1 == t.len() || t[close + 1..].starts_with('/') => {
            let rest = &t[close + 1..];
            let den = if rest.is_empty() { BigInt::from(1) } else { int(&rest[1..])? };
            (t[1..close].to_string(), den)
        }
        _ => (t.clone(), BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    let mut p = BigRational::zero();
    let mut q = BigRational::zero();
    let mut d = BigInt::zero();
    for tm in terms(&num) {
        let (tp, tq, td) = term(&tm)?;
        p += tp;
        if !tq.is_zero() {
            if !d.is_zero() && d != td {
                return Err(err("more than one radicand"));
            }
            q += tq;
            d = td;
        }
    }
    // (p + q sqrt d) / den over the common denominator of p and q
    let m = p.denom().lcm(q.denom());
    let scale = |x: &BigRational| x.numer() * (&m / x.denom());
    QuadraticSurd::new(scale(&p), scale(&q), m * den, d)
}

pub fn parse_point(s: &str) -> Result<ExtPoint, ExactError> {
    let t = s.trim();
    match t {
        "inf" | "infinity" | "∞" | "1/0" => Ok(ExtPoint::Infinity),
        _ => parse_surd(t).map(ExtPoint::Finite),
    }
}

pub fn parse_matrix(s: &str) -> Result<UnimodularMatrix, ExactError> {
    let t: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']')
        .collect();
    let parts: Vec<&str> = t.split(',').collect();
    if parts.len() != 4 {
        return Err(err(format!("expected [[a,b],[c,d]], got {s:?}")));
    }
    UnimodularMatrix::new(int(parts[0])?, int(parts[1])?, int(parts[2])?, int(parts[3])?)
}
