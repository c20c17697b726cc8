//! Equivalence of quadratic surds under the odd group or the Theta group,
//! decided by comparing signed tails of odd or even expansions.

use std::collections::HashMap;

use cutseq_cf::{expand, tails, Kind, DEFAULT_MAX_DEPTH};
use cutseq_exact::QuadraticSurd as Q;
use serde::{Deserialize, Serialize};

use crate::DynError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    GammaOdd,
    Theta,
}

impl Group {
    pub fn kind(self) -> Kind {
        match self {
            Group::GammaOdd => Kind::Ocf,
            Group::Theta => Kind::Ecf,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Equivalence {
    /// `t_r(alpha) = t_s(beta)`, with the common tail.
    Equivalent { r: usize, s: usize, tail: String },
    NotWithinBound { bound_alpha: usize, bound_beta: usize },
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
}

/// `x + 2n` with the least `n` making it exceed 1 (`T^2` lies in both groups).
pub fn translate_above_one(x: &Q) -> Q {
    if *x > Q::one() {
        return x.clone();
    }
    let n = ((Q::one() - x) / 2).floor() + 1;
    x + &Q::from_int(n * 2)
}

/// Digits before the periodic part plus two periods: past this index
/// every tail value has appeared with both signs it can take.
fn natural_bound(x: &Q, kind: Kind) -> Result<usize, DynError> {
    let s = expand(kind, x, DEFAULT_MAX_DEPTH)?;
    if s.truncated || s.period.is_empty() {
        return Err(DynError::Invalid(format!("no period found for {x}")));
    }
    Ok(1 + s.preperiod.len() + 2 * s.period.len())
}

pub fn equivalent(alpha: &Q, beta: &Q, group: Group, depth_bound: Option<usize>) -> Result<Equivalence, DynError> {
    for x in [alpha, beta] {
        if x.is_rational() {
            return Err(DynError::Invalid(format!("{x} is rational")));
        }
    }
    let kind = group.kind();
    let (a, b) = (translate_above_one(alpha), translate_above_one(beta));
    let (na, nb) = match depth_bound {
        Some(n) => (n, n),
        None => (natural_bound(&a, kind)?, natural_bound(&b, kind)?),
    };
    let ta = tails(&a, na, kind)?;
    let tb = tails(&b, nb, kind)?;
    let mut first: HashMap<&Q, usize> = HashMap::new();
    for (s, t) in tb.iter().enumerate() {
        first.entry(t).or_insert(s);
    }
    for (r, t) in ta.iter().enumerate() {
        if let Some(&s) = first.get(t) {
            return Ok(Equivalence::Equivalent { r, s, tail: t.to_string() });
        }
    }
    Ok(Equivalence::NotWithinBound { bound_alpha: na, bound_beta: nb })
}
