use serde::{Deserialize, Serialize};

use crate::{CfError, Kind, SignedDigit};

fn one() -> i8 {
    1
}

fn is_one(s: &i8) -> bool {
    *s == 1
}

/// An expansion `sign * (a0 + eps0 * body)` (or `sign * body` without a
/// leading digit), where the body is `preperiod` followed by `period`
/// repeated forever. An empty period means the body is finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitStream {
    pub kind: Kind,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub sign: i8,
    pub leading: Option<SignedDigit>,
    pub preperiod: Vec<SignedDigit>,
    pub period: Vec<SignedDigit>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

impl DigitStream {
    pub fn new(kind: Kind, leading: Option<SignedDigit>, preperiod: Vec<SignedDigit>, period: Vec<SignedDigit>) -> Self {
        let mut s = DigitStream { kind, sign: 1, leading, preperiod, period, truncated: false };
        s.normalize();
        s
    }

    pub fn periodic(kind: Kind, period: Vec<SignedDigit>) -> Self {
        Self::new(kind, None, Vec::new(), period)
    }

    pub fn finite(kind: Kind, digits: Vec<SignedDigit>) -> Self {
        Self::new(kind, None, digits, Vec::new())
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = sign;
        self
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.leading.is_none() && self.preperiod.is_empty() && !self.period.is_empty()
    }

    /// Number of body digits if finite.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.preperiod.len())
    }

    /// The `i`-th body digit (leading digit excluded).
    pub fn digit(&self, i: usize) -> Option<SignedDigit> {
        if i < self.preperiod.len() {
            Some(self.preperiod[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.preperiod.len()) % self.period.len()])
        }
    }

    /// Up to `n` body digits.
    pub fn take(&self, n: usize) -> Vec<SignedDigit> {
        (0..n).map_while(|i| self.digit(i)).collect()
    }

    /// Drops the first body digit (the symbolic Gauss map).
    pub fn shifted(&self) -> Option<DigitStream> {
        let mut s = self.clone();
        s.leading = None;
        if !s.preperiod.is_empty() {
            s.preperiod.remove(0);
        } else if !s.period.is_empty() {
            s.period.rotate_left(1);
        } else {
            return None;
        }
        s.normalize();
        Some(s)
    }

    /// Minimal period, then minimal preperiod; terminal eps of a finite
    /// forward stream is set to +1.
    pub fn normalize(&mut self) {
        let n = self.period.len();
        if n > 0 {
            for q in 1..=n {
                if n % q == 0 && (q..n).all(|i| self.period[i] == self.period[i - q]) {
                    self.period.truncate(q);
                    break;
                }
            }
            while let Some(last) = self.preperiod.last().copied() {
                if last == *self.period.last().unwrap() {
                    self.preperiod.pop();
                    self.period.rotate_right(1);
                } else {
                    break;
                }
            }
        } else if self.kind.is_forward() {
            if let Some(last) = self.preperiod.last_mut() {
                last.eps = 1;
            }
        }
    }

    /// Checks every digit against the kind's rules.
    pub fn check(&self) -> Result<(), CfError> {
        if self.sign != 1 && self.sign != -1 {
            return Err(CfError::Inadmissible("sign must be +1 or -1".into()));
        }
        if let Some(l) = self.leading {
            l.check_leading(self.kind)?;
        }
        let n = self.preperiod.len();
        for (i, d) in self.preperiod.iter().enumerate() {
            d.check(self.kind, self.period.is_empty() && i + 1 == n)?;
        }
        for d in &self.period {
            d.check(self.kind, false)?;
        }
        Ok(())
    }

    /// Extended-even digits `<<(b0,e0),(b1,e1),...>>_e` as the signed even
    /// stream `e0 * [[(b0,e1),(b1,e2),...]]_e`.
    pub fn eecf_to_ecf(&self) -> Result<DigitStream, CfError> {
        if self.kind != Kind::Eecf || self.leading.is_some() || self.sign != 1 {
            return Err(CfError::Inadmissible("expected a plain extended-even stream".into()));
        }
        let first = match self.digit(0) {
            Some(d) => d,
            None => return Ok(DigitStream::finite(Kind::Ecf, Vec::new())),
        };
        let shift = |i: usize| -> SignedDigit {
            let d = self.digit(i).unwrap();
            let eps = self.digit(i + 1).map(|n| n.eps).unwrap_or(1);
            SignedDigit::new(d.a, eps)
        };
        let p = self.preperiod.len();
        let pre: Vec<_> = (0..p).map(shift).collect();
        let per: Vec<_> = (p..p + self.period.len()).map(shift).collect();
        Ok(DigitStream::new(Kind::Ecf, None, pre, per).with_sign(first.eps))
    }

    /// Inverse of [`eecf_to_ecf`](Self::eecf_to_ecf).
    pub fn ecf_to_eecf(&self) -> Result<DigitStream, CfError> {
        if self.kind != Kind::Ecf || self.leading.is_some() {
            return Err(CfError::Inadmissible("expected an even stream without leading digit".into()));
        }
        let unshift = |i: usize| -> SignedDigit {
            let d = self.digit(i).unwrap();
            let eps = if i == 0 { self.sign } else { self.digit(i - 1).unwrap().eps };
            SignedDigit::new(d.a, eps)
        };
        let p = self.preperiod.len();
        if self.period.is_empty() {
            let pre = (0..p).map(unshift).collect();
            return Ok(DigitStream::finite(Kind::Eecf, pre));
        }
        let pre = (0..=p).map(unshift).collect();
        let per = (p + 1..=p + self.period.len()).map(unshift).collect();
        Ok(DigitStream::new(Kind::Eecf, None, pre, per))
    }
}
