use std::fmt;

use serde::{Deserialize, Serialize};

use crate::CfError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Rcf,
    Ocf,
    Gcf,
    Ecf,
    Eecf,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Rcf => "rcf",
            Kind::Ocf => "ocf",
            Kind::Gcf => "gcf",
            Kind::Ecf => "ecf",
            Kind::Eecf => "eecf",
        }
    }

    /// Kinds whose digits read `x = 1/(a + eps * rest)`.
    pub fn is_forward(self) -> bool {
        matches!(self, Kind::Rcf | Kind::Ocf | Kind::Ecf)
    }

    /// Kinds whose digits read `y = eps/(b + rest)`.
    pub fn is_dual(self) -> bool {
        matches!(self, Kind::Gcf | Kind::Eecf)
    }

    pub fn odd_digits(self) -> bool {
        matches!(self, Kind::Ocf | Kind::Gcf)
    }

    pub fn even_digits(self) -> bool {
        matches!(self, Kind::Ecf | Kind::Eecf)
    }
}

impl std::str::FromStr for Kind {
    type Err = CfError;
    fn from_str(s: &str) -> Result<Self, CfError> {
        match s.to_ascii_lowercase().as_str() {
            "rcf" => Ok(Kind::Rcf),
            "ocf" => Ok(Kind::Ocf),
            "gcf" => Ok(Kind::Gcf),
            "ecf" => Ok(Kind::Ecf),
            "eecf" => Ok(Kind::Eecf),
            other => Err(CfError::Inadmissible(format!("unknown kind {other}"))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A digit pair `(a, eps)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedDigit {
    pub a: i64,
    pub eps: i8,
}

impl SignedDigit {
    pub const fn new(a: i64, eps: i8) -> Self {
        SignedDigit { a, eps }
    }

    pub fn plus(a: i64) -> Self {
        SignedDigit { a, eps: 1 }
    }

    pub fn minus(a: i64) -> Self {
        SignedDigit { a, eps: -1 }
    }

    /// Checks parity and the `a + eps >= 2` rule for a digit of the body.
    /// `terminal` relaxes the sign rule for the last digit of a finite stream.
    pub fn check(self, kind: Kind, terminal: bool) -> Result<(), CfError> {
        let bad = |why: &str| Err(CfError::Inadmissible(format!("{kind} digit ({}, {}): {why}", self.a, self.eps)));
        if self.eps != 1 && self.eps != -1 {
            return bad("eps must be +1 or -1");
        }
        if self.a < 1 {
            return bad("a must be positive");
        }
        match kind {
            Kind::Rcf => {
                if self.eps != 1 && !terminal {
                    return bad("regular digits carry eps = +1");
                }
            }
            Kind::Ocf | Kind::Gcf => {
                if self.a % 2 == 0 {
                    return bad("a must be odd");
                }
                if self.a + (self.eps as i64) < 2 && !(terminal && kind == Kind::Ocf) {
                    return bad("a + eps must be at least 2");
                }
            }
            Kind::Ecf | Kind::Eecf => {
                if self.a % 2 != 0 {
                    return bad("a must be even");
                }
            }
        }
        Ok(())
    }

    /// Checks a leading (integer part) digit.
    pub fn check_leading(self, kind: Kind) -> Result<(), CfError> {
        let bad = |why: &str| {
            Err(CfError::Inadmissible(format!("{kind} leading digit ({}, {}): {why}", self.a, self.eps)))
        };
        if self.eps != 1 && self.eps != -1 {
            return bad("eps must be +1 or -1");
        }
        match kind {
            Kind::Rcf if self.a >= 1 && self.eps == 1 => Ok(()),
            Kind::Ocf if self.a % 2 != 0 && self.a + self.eps as i64 >= 2 => Ok(()),
            Kind::Ecf if self.a >= 2 && self.a % 2 == 0 => Ok(()),
            Kind::Gcf | Kind::Eecf => bad("dual kinds have no leading digit"),
            _ => bad("violates the leading-digit rule"),
        }
    }
}

impl fmt::Display for SignedDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{:+})", self.a, self.eps)
    }
}
