//! Symbolic rewriting of regular continued fractions into odd, even and
//! grotesque expansions by singularization and insertion.
//!
//! Every converter is a finite-state machine reading the regular digits
//! `[n1; n2, n3, ...]`. A state remembers the current partial quotient, an
//! optionally rewritten next quotient, and the read position; for periodic
//! inputs the position is taken modulo the period, so a repeated state
//! closes the output period.

use std::collections::HashMap;

use serde::Serialize;

pub use cutseq_cf::rcf_expand;
use cutseq_cf::{CfError, DigitStream, Kind, SignedDigit};

/// Emitted digits are capped at this multiple of the input's digit count.
const ALIGN_DOUBLINGS: usize = 1 << 8;

/// The tail `[0; head, r_idx, r_idx+1, ...]` of the input body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Tail {
    head: Option<i64>,
    idx: usize,
}

struct Reader<'a> {
    s: &'a DigitStream,
}

impl Reader<'_> {
    fn at(&self, i: usize) -> Option<i64> {
        self.s.digit(i).map(|d| d.a)
    }

    fn get(&self, t: Tail, j: usize) -> Option<i64> {
        match (t.head, j) {
            (Some(h), 0) => Some(h),
            (Some(_), j) => self.at(t.idx + j - 1),
            (None, j) => self.at(t.idx + j),
        }
    }

    fn first(&self, t: Tail) -> Option<i64> {
        self.get(t, 0)
    }

    fn pop(&self, t: Tail) -> Tail {
        match t.head {
            Some(_) => Tail { head: None, idx: t.idx },
            None => Tail { head: None, idx: t.idx + 1 },
        }
    }

    fn replace_first(&self, t: Tail, v: i64) -> Tail {
        Tail { head: Some(v), idx: self.pop(t).idx }
    }

    fn canon(&self, t: Tail) -> Tail {
        let (pre, per) = (self.s.preperiod.len(), self.s.period.len());
        let idx = if per == 0 || t.idx < pre { t.idx } else { pre + (t.idx - pre) % per };
        Tail { head: t.head, idx }
    }

    fn budget(&self) -> usize {
        64 + 2 * (self.s.preperiod.len() + ALIGN_DOUBLINGS * self.s.period.len().max(1))
    }

    /// 1-based index of the first quotient of `t` that differs from 1,
    /// `None` when the tail is all ones.
    fn first_non_one(&self, t: Tail) -> Option<usize> {
        let horizon = self.s.preperiod.len() + self.s.period.len() + 2;
        (0..horizon).find_map(|j| match self.get(t, j) {
            Some(1) => None,
            Some(_) => Some(Some(j + 1)),
            None => Some(None),
        })?
    }
}

fn check_input(d: &DigitStream) -> Result<(), CfError> {
    if d.kind != Kind::Rcf {
        return Err(CfError::Inadmissible(format!("expected an rcf stream, got {}", d.kind)));
    }
    if d.truncated {
        return Err(CfError::Truncated);
    }
    d.check()?;
    if d.is_finite() && d.preperiod.last().is_some_and(|x| x.a < 2) {
        return Err(CfError::Inadmissible("finite regular expansion must end in a quotient >= 2".into()));
    }
    Ok(())
}

fn finish(kind: Kind, sign: i8, leading: Option<SignedDigit>, body: Vec<SignedDigit>, start: Option<usize>) -> DigitStream {
    let mut body = body;
    let period = match start {
        Some(i) => body.split_off(i),
        None => Vec::new(),
    };
    DigitStream::new(kind, leading, body, period).with_sign(sign)
}

fn truncated(kind: Kind, sign: i8, leading: Option<SignedDigit>, body: Vec<SignedDigit>) -> DigitStream {
    let mut s = DigitStream::new(kind, leading, Vec::new(), Vec::new()).with_sign(sign);
    s.preperiod = body;
    s.truncated = true;
    s
}

fn to_forward(d: &DigitStream, kind: Kind) -> Result<DigitStream, CfError> {
    check_input(d)?;
    let r = Reader { s: d };
    let keep = |m: i64| if kind == Kind::Ocf { m % 2 != 0 } else { m % 2 == 0 };
    let (mut m, mut f, mut in_body) = match d.leading {
        Some(l) => (l.a, Tail { head: None, idx: 0 }, false),
        None => match r.at(0) {
            None => return Ok(finish(kind, d.sign, None, Vec::new(), None)),
            Some(a) => (a, Tail { head: None, idx: 1 }, true),
        },
    };
    let mut leading = None;
    let mut body = Vec::new();
    let mut seen: HashMap<(i64, Tail), usize> = HashMap::new();
    loop {
        if in_body {
            if let Some(&i) = seen.get(&(m, r.canon(f))) {
                return Ok(finish(kind, d.sign, leading, body, Some(i)));
            }
            if body.len() > r.budget() {
                return Ok(truncated(kind, d.sign, leading, body));
            }
            seen.insert((m, r.canon(f)), body.len());
        }
        let (digit, next) = if keep(m) {
            let digit = SignedDigit::plus(m);
            match r.first(f) {
                None => (digit, None),
                Some(r1) => (digit, Some((r1, r.pop(f)))),
            }
        } else {
            let r1 = r.first(f).ok_or_else(|| {
                CfError::Boundary(format!("integer {m} has no {kind} expansion"))
            })?;
            let digit = SignedDigit::minus(m + 1);
            if r1 == 1 {
                let g = r.pop(f);
                let r2 = r.first(g).ok_or_else(|| CfError::Inadmissible("non-canonical final quotient 1".into()))?;
                (digit, Some((r2 + 1, r.pop(g))))
            } else {
                let g = r.replace_first(f, r1 - 1);
                if r1 == 2 && r.get(g, 1).is_none() {
                    // [0; 1] is the integer 1, not a tail
                    (digit, Some((2, Tail { head: None, idx: g.idx })))
                } else {
                    (digit, Some((1, g)))
                }
            }
        };
        if in_body {
            body.push(digit);
        } else {
            leading = Some(digit);
            in_body = true;
        }
        match next {
            None => return Ok(finish(kind, d.sign, leading, body, None)),
            Some((m2, f2)) => {
                m = m2;
                f = f2;
            }
        }
    }
}

/// Odd expansion of the value of a regular stream.
pub fn rcf_to_ocf(d: &DigitStream) -> Result<DigitStream, CfError> {
    to_forward(d, Kind::Ocf)
}

/// Even expansion of the value of a regular stream.
pub fn rcf_to_ecf(d: &DigitStream) -> Result<DigitStream, CfError> {
    to_forward(d, Kind::Ecf)
}

/// Grotesque expansion with regrouping diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcfConversion {
    pub stream: DigitStream,
    /// Longest run read ahead to decide a regrouping (1-based index of the
    /// first quotient different from 1).
    pub max_lookback: usize,
    /// Set when some regrouping needed more than one group of look-ahead.
    pub deep_lookback: bool,
}

/// Grotesque expansion of `y = [0; n1, n2, ...]`.
pub fn rcf_to_gcf(d: &DigitStream) -> Result<GcfConversion, CfError> {
    check_input(d)?;
    if d.leading.is_some() || d.sign != 1 {
        return Err(CfError::OutOfDomain("grotesque conversion reads a value [0; n1, n2, ...] in (0,1)".into()));
    }
    let r = Reader { s: d };
    let mut out = GcfConversion { stream: DigitStream::finite(Kind::Gcf, Vec::new()), max_lookback: 0, deep_lookback: false };
    let Some(first) = r.at(0) else {
        return Ok(out);
    };
    let (mut sigma, mut m, mut f): (i8, i64, Tail) = (1, first, Tail { head: None, idx: 1 });
    let mut body: Vec<SignedDigit> = Vec::new();
    let mut seen: HashMap<(i8, i64, Tail), usize> = HashMap::new();
    loop {
        let key = (sigma, m, r.canon(f));
        if let Some(&i) = seen.get(&key) {
            out.stream = finish(Kind::Gcf, 1, None, body, Some(i));
            return Ok(out);
        }
        if body.len() > r.budget() {
            out.stream = truncated(Kind::Gcf, 1, None, body);
            return Ok(out);
        }
        seen.insert(key, body.len());
        if m % 2 != 0 {
            body.push(SignedDigit::new(m, sigma));
            match r.first(f) {
                None => break,
                Some(r1) => {
                    (sigma, m, f) = (1, r1, r.pop(f));
                }
            }
            continue;
        }
        if r.first(f).is_none() {
            body.push(SignedDigit::new(m - 1, sigma));
            body.push(SignedDigit::plus(1));
            break;
        }
        let i = r
            .first_non_one(f)
            .ok_or_else(|| CfError::Boundary("tail equals G - 1, a grotesque branch endpoint".into()))?;
        out.max_lookback = out.max_lookback.max(i);
        out.deep_lookback |= i > 2;
        if i % 2 == 1 {
            // tail below G - 1: (m-1, sigma) then (1, +1)
            body.push(SignedDigit::new(m - 1, sigma));
            body.push(SignedDigit::plus(1));
            let r1 = r.first(f).unwrap();
            (sigma, m, f) = (-1, r1 + 1, r.pop(f));
        } else {
            // tail above G - 1, so it starts with 1
            body.push(SignedDigit::new(m + 1, sigma));
            let g = r.pop(f);
            let r2 = r.first(g).ok_or_else(|| CfError::Inadmissible("non-canonical final quotient 1".into()))?;
            (sigma, m, f) = (-1, r2 + 1, r.pop(g));
        }
    }
    out.stream = finish(Kind::Gcf, 1, None, body, None);
    Ok(out)
}
