//! Letters, return-segment templates and case tags.

use std::fmt;

use cutseq_cf::{Parity, SignedDigit};
use serde::{Serialize, Serializer};

use crate::CodeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    L,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    Light,
    Dark,
    Unshaded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub side: Side,
    pub shade: Shade,
}

impl Letter {
    pub const LIGHT_L: Letter = Letter { side: Side::L, shade: Shade::Light };
    pub const DARK_L: Letter = Letter { side: Side::L, shade: Shade::Dark };
    pub const LIGHT_R: Letter = Letter { side: Side::R, shade: Shade::Light };
    pub const DARK_R: Letter = Letter { side: Side::R, shade: Shade::Dark };
    pub const L: Letter = Letter { side: Side::L, shade: Shade::Unshaded };
    pub const R: Letter = Letter { side: Side::R, shade: Shade::Unshaded };

    /// ASCII form: dark letters upper case, light letters lower case,
    /// unshaded letters upper case.
    pub fn ascii(self) -> char {
        match (self.side, self.shade) {
            (Side::L, Shade::Light) => 'l',
            (Side::R, Shade::Light) => 'r',
            (Side::L, _) => 'L',
            (Side::R, _) => 'R',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.side, self.shade) {
            (Side::L, Shade::Light) => "𝕃",
            (Side::L, Shade::Dark) => "𝐋",
            (Side::R, Shade::Light) => "ℝ",
            (Side::R, Shade::Dark) => "𝐑",
            (Side::L, Shade::Unshaded) => "L",
            (Side::R, Shade::Unshaded) => "R",
        };
        f.write_str(s)
    }
}

pub fn word_string(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect()
}

pub fn word_ascii(w: &[Letter]) -> String {
    w.iter().map(|l| l.ascii()).collect()
}

/// Reads a word. Odd words accept `𝕃 𝐋 ℝ 𝐑` or ASCII `l L r R` (lower case
/// light); even words accept `L R` in either case.
pub fn parse_word(s: &str, parity: Parity) -> Result<Vec<Letter>, CodeError> {
    let mut out = Vec::new();
    for (pos, ch) in s.chars().filter(|c| !c.is_whitespace() && !"()|.".contains(*c)).enumerate() {
        let l = match (parity, ch) {
            (Parity::Even, 'L' | 'l') => Letter::L,
            (Parity::Even, 'R' | 'r') => Letter::R,
            (Parity::Odd, 'l' | '𝕃') => Letter::LIGHT_L,
            (Parity::Odd, 'L' | '𝐋') => Letter::DARK_L,
            (Parity::Odd, 'r' | 'ℝ') => Letter::LIGHT_R,
            (Parity::Odd, 'R' | '𝐑') => Letter::DARK_R,
            _ => return Err(CodeError::Parse { pos, msg: format!("unexpected letter {ch:?}") }),
        };
        out.push(l);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    A,
    B,
    C,
    D,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::A, Case::B, Case::C, Case::D];

    /// Sign of the forward endpoint of a geodesic in this case.
    pub fn sign_in(self) -> i8 {
        match self {
            Case::A | Case::B => 1,
            Case::C | Case::D => -1,
        }
    }

    /// Sign of the forward endpoint after the return: flips iff `eps1 = +1`.
    pub fn sign_out(self) -> i8 {
        match self {
            Case::A | Case::D => 1,
            Case::B | Case::C => -1,
        }
    }

    /// Cases that may follow this one.
    pub fn successors(self) -> [Case; 2] {
        if self.sign_out() > 0 {
            [Case::A, Case::B]
        } else {
            [Case::C, Case::D]
        }
    }

    pub fn eps(self) -> i8 {
        match self {
            Case::A | Case::C => -1,
            Case::B | Case::D => 1,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CaseTag {
    pub case: Case,
    pub k: u64,
}

impl CaseTag {
    /// Tag of a return with forward sign `sign` and consumed digit `d`.
    pub fn from_digit(parity: Parity, sign: i8, d: SignedDigit) -> CaseTag {
        let case = match (sign > 0, d.eps > 0) {
            (true, false) => Case::A,
            (true, true) => Case::B,
            (false, false) => Case::C,
            (false, true) => Case::D,
        };
        let a = d.a as u64;
        let k = match (parity, d.eps > 0) {
            (Parity::Odd, false) => (a - 1) / 2,
            (Parity::Odd, true) => (a + 1) / 2,
            (Parity::Even, _) => a / 2,
        };
        CaseTag { case, k }
    }

    pub fn digit(self, parity: Parity) -> SignedDigit {
        let k = self.k as i64;
        let a = match (parity, self.case.eps()) {
            (Parity::Odd, -1) => 2 * k + 1,
            (Parity::Odd, _) => 2 * k - 1,
            (Parity::Even, _) => 2 * k,
        };
        SignedDigit::new(a, self.case.eps())
    }

    /// The letter string of one return.
    pub fn word(self, parity: Parity) -> Vec<Letter> {
        let k = self.k as usize;
        let mut w = Vec::new();
        match parity {
            Parity::Odd => {
                let (pair, tail): ([Letter; 2], &[Letter]) = match self.case {
                    Case::A => ([Letter::LIGHT_L, Letter::DARK_L], &[Letter::LIGHT_L, Letter::DARK_R]),
                    Case::B => ([Letter::LIGHT_L, Letter::DARK_L], &[Letter::LIGHT_R]),
                    Case::C => ([Letter::DARK_R, Letter::LIGHT_R], &[Letter::DARK_R, Letter::LIGHT_L]),
                    Case::D => ([Letter::DARK_R, Letter::LIGHT_R], &[Letter::DARK_L]),
                };
                for _ in 1..k {
                    w.extend_from_slice(&pair);
                }
                w.extend_from_slice(tail);
            }
            Parity::Even => {
                let (run, end, n) = match self.case {
                    Case::A => (Letter::L, Letter::R, 2 * k - 2),
                    Case::B => (Letter::L, Letter::R, 2 * k - 1),
                    Case::C => (Letter::R, Letter::L, 2 * k - 2),
                    Case::D => (Letter::R, Letter::L, 2 * k - 1),
                };
                w.extend(std::iter::repeat(run).take(n));
                w.push(end);
            }
        }
        w
    }

    pub fn word_len(self, parity: Parity) -> usize {
        let k = self.k as usize;
        match (parity, self.case) {
            (Parity::Odd, Case::A | Case::C) => 2 * k,
            (Parity::Odd, _) => 2 * k - 1,
            (Parity::Even, Case::A | Case::C) => 2 * k - 1,
            (Parity::Even, _) => 2 * k,
        }
    }
}

/// One return of a geodesic to the section.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub tag: CaseTag,
    pub digit: SignedDigit,
    #[serde(serialize_with = "ser_word")]
    pub word: Vec<Letter>,
}

impl Segment {
    pub fn new(parity: Parity, tag: CaseTag) -> Segment {
        Segment { tag, digit: tag.digit(parity), word: tag.word(parity) }
    }
}

fn ser_word<S: Serializer>(w: &[Letter], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&word_string(w))
}

/// Checks letter alternation of shades and the succession rule; returns the
/// index of the first offending segment.
pub fn grammar_violation(parity: Parity, segs: &[Segment]) -> Option<usize> {
    for (i, s) in segs.iter().enumerate() {
        if s.word != s.tag.word(parity) || s.digit != s.tag.digit(parity) || s.tag.k == 0 {
            return Some(i);
        }
        if i > 0 && !segs[i - 1].tag.case.successors().contains(&s.tag.case) {
            return Some(i);
        }
    }
    if parity == Parity::Odd {
        let letters: Vec<Letter> = segs.iter().flat_map(|s| s.word.iter().copied()).collect();
        if let Some(j) = letters.windows(2).position(|p| p[0].shade == p[1].shade) {
            let mut acc = 0;
            for (i, s) in segs.iter().enumerate() {
                acc += s.word.len();
                if acc > j + 1 {
                    return Some(i);
                }
            }
        }
    }
    None
}
