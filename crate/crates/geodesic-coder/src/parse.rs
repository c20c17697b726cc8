//! Reading digits back from cutting sequences.
//!
//! Forward words are read left to right: given the sign of the forward
//! endpoint, the return templates are prefix-free, so segmentation is
//! greedy. Backward words are read right to left from `xi`; here a
//! segment can be mistaken for the tail of a longer one, so the reader
//! keeps a table of which prefixes of the word admit a segmentation that
//! respects the succession rule and accepts a segment only when it is the
//! unique one compatible with the rest of the word.

use cutseq_cf::{DigitStream, Parity};
use serde::Serialize;

use crate::rho::{dual_kind, forward_kind};
use crate::word::{Case, CaseTag, Letter, Segment, Shade};
use crate::CodeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedWord {
    /// Forward: the odd/even stream of `|gamma_inf|` with the first digit as
    /// leading digit. Backward: the grotesque/extended-even stream of
    /// `-sign(gamma_inf) gamma_{-inf}`. Both are flagged truncated.
    pub stream: DigitStream,
    /// Segments in reading order (for backward words, nearest to `xi` last).
    pub segments: Vec<Segment>,
    /// Sign of the forward endpoint at `xi`.
    pub sign: i8,
    /// Letters left unread (a trailing partial return for forward words,
    /// leading letters for backward words).
    pub unparsed: usize,
    /// Set when reading stopped because two segmentations remain possible.
    pub ambiguous: bool,
}

/// Every return template is `unit^(k-1) suffix` with a two-letter unit.
struct Shape {
    case: Case,
    unit: [Letter; 2],
    suffix: Vec<Letter>,
}

fn shapes(parity: Parity) -> Vec<Shape> {
    Case::ALL
        .iter()
        .map(|&case| {
            let suffix = CaseTag { case, k: 1 }.word(parity);
            let two = CaseTag { case, k: 2 }.word(parity);
            debug_assert_eq!(two[2..], suffix[..]);
            Shape { case, unit: [two[0], two[1]], suffix }
        })
        .collect()
}

impl Shape {
    /// `runs[j]`: how many copies of the unit end exactly at `j`.
    fn runs_ending(&self, word: &[Letter]) -> Vec<usize> {
        let mut r = vec![0; word.len() + 1];
        for j in 2..=word.len() {
            if word[j - 2..j] == self.unit {
                r[j] = r[j - 2] + 1;
            }
        }
        r
    }

    fn suffix_ends_at(&self, word: &[Letter], i: usize) -> Option<usize> {
        let l = self.suffix.len();
        (i >= l && word[i - l..i] == self.suffix[..]).then(|| i - l)
    }

    /// `word[..i]` is a proper tail of some template of this shape.
    fn tail_of(&self, word: &[Letter], runs: &[usize], i: usize) -> bool {
        let l = self.suffix.len();
        if i <= l {
            return i < l && word[..i] == self.suffix[l - i..];
        }
        let Some(j) = self.suffix_ends_at(word, i) else { return false };
        let full = 2 * runs[j];
        full == j || (full + 1 == j && word[0] == self.unit[1])
    }
}

fn sign_index(s: i8) -> usize {
    usize::from(s < 0)
}

fn stream(kind: cutseq_cf::Kind, sign: i8, digits: Vec<cutseq_cf::SignedDigit>, lead: bool) -> DigitStream {
    let mut s = DigitStream::new(kind, None, Vec::new(), Vec::new()).with_sign(sign);
    let mut it = digits.into_iter();
    if lead {
        s.leading = it.next();
    }
    s.preperiod = it.collect();
    s.truncated = true;
    s
}

pub fn parse_cutting_sequence(
    word: &[Letter],
    direction: Direction,
    parity: Parity,
    sign: Option<i8>,
) -> Result<ParsedWord, CodeError> {
    for (pos, l) in word.iter().enumerate() {
        let ok = match parity {
            Parity::Odd => l.shade != Shade::Unshaded,
            Parity::Even => l.shade == Shade::Unshaded,
        };
        if !ok {
            return Err(CodeError::Parse { pos, msg: "letter shading does not match the coding".into() });
        }
    }
    match direction {
        Direction::Forward => parse_forward(word, parity, sign),
        Direction::Backward => parse_backward(word, parity, sign),
    }
}

fn parse_forward(word: &[Letter], parity: Parity, sign: Option<i8>) -> Result<ParsedWord, CodeError> {
    let inferred = match (parity, word.first()) {
        (Parity::Odd, Some(l)) => Some(if l.shade == Shade::Light { 1 } else { -1 }),
        _ => None,
    };
    let start = match (sign, inferred) {
        (Some(s), Some(t)) if s != t => {
            return Err(CodeError::Parse { pos: 0, msg: "first letter's shade contradicts the given sign".into() })
        }
        (Some(s), _) | (None, Some(s)) => s,
        (None, None) if word.is_empty() => 1,
        (None, None) => return Err(CodeError::NeedSign),
    };
    let shapes = shapes(parity);
    let mut pos = 0;
    let mut s = start;
    let mut segments = Vec::new();
    while pos < word.len() {
        let rest = &word[pos..];
        let mut found = None;
        let mut partial = false;
        for sh in shapes.iter().filter(|sh| sh.case.sign_in() == s) {
            let m = rest.chunks_exact(2).take_while(|c| **c == sh.unit).count();
            let r = &rest[2 * m..];
            let l = sh.suffix.len();
            if r.len() >= l && r[..l] == sh.suffix[..] {
                found = Some(CaseTag { case: sh.case, k: m as u64 + 1 });
                break;
            }
            let unit_then_suffix: Vec<Letter> = sh.unit.iter().chain(&sh.suffix).copied().collect();
            if (r.len() < l && r[..] == sh.suffix[..r.len()])
                || (r.len() < unit_then_suffix.len() && r[..] == unit_then_suffix[..r.len()])
            {
                partial = true;
            }
        }
        match found {
            Some(tag) => {
                segments.push(Segment::new(parity, tag));
                pos += tag.word_len(parity);
                s = tag.case.sign_out();
            }
            None if partial => break,
            None => return Err(CodeError::Parse { pos, msg: "no return template starts here".into() }),
        }
    }
    let digits = segments.iter().map(|g| g.digit).collect();
    Ok(ParsedWord {
        stream: stream(forward_kind(parity), start, digits, true),
        segments,
        sign: start,
        unparsed: word.len() - pos,
        ambiguous: false,
    })
}

fn parse_backward(word: &[Letter], parity: Parity, sign: Option<i8>) -> Result<ParsedWord, CodeError> {
    let n = word.len();
    let shapes = shapes(parity);
    let runs: Vec<Vec<usize>> = shapes.iter().map(|sh| sh.runs_ending(word)).collect();
    // ok(i, s): word[..i] is a (possibly partial) return followed by whole
    // returns, the last of which leaves forward sign s.
    // cnt[i][s]: number of i - 2m, m >= 0, with ok(i - 2m, s).
    let mut cnt = vec![[0usize; 2]; n + 1];
    cnt[0] = [1, 1];
    // how many of ok(j), ok(j - 2), ..., ok(j - 2 m_max) hold
    let window = |cnt: &[[usize; 2]], j: usize, m_max: usize, s: usize| {
        cnt[j][s] - if j >= 2 * m_max + 2 { cnt[j - 2 * m_max - 2][s] } else { 0 }
    };
    let partial_at = |i: usize, s: i8| {
        shapes.iter().zip(&runs).any(|(sh, r)| sh.case.sign_out() == s && sh.tail_of(word, r, i))
    };
    for i in 1..=n {
        for s in [1i8, -1] {
            let whole = shapes.iter().zip(&runs).any(|(sh, r)| {
                sh.case.sign_out() == s
                    && sh
                        .suffix_ends_at(word, i)
                        .is_some_and(|j| window(&cnt, j, r[j], sign_index(sh.case.sign_in())) > 0)
            });
            let v = whole || partial_at(i, s);
            cnt[i][sign_index(s)] = usize::from(v) + if i >= 2 { cnt[i - 2][sign_index(s)] } else { 0 };
        }
    }
    let mut allowed: Vec<i8> = match sign {
        Some(s) => vec![s],
        None => vec![1, -1],
    };
    let mut pos = n;
    let mut rev = Vec::new();
    let mut ambiguous = false;
    while pos > 0 {
        let mut total = 0;
        let mut pick = None;
        for (sh, r) in shapes.iter().zip(&runs) {
            if !allowed.contains(&sh.case.sign_out()) {
                continue;
            }
            let Some(j) = sh.suffix_ends_at(word, pos) else { continue };
            let si = sign_index(sh.case.sign_in());
            let c = window(&cnt, j, r[j], si);
            if c > 0 && pick.is_none() {
                // smallest m with ok(j - 2m)
                let (mut lo, mut hi) = (0, r[j]);
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    if window(&cnt, j, mid, si) > 0 {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                pick = Some(CaseTag { case: sh.case, k: lo as u64 + 1 });
            }
            total += c;
        }
        let partial = allowed.iter().any(|&s| partial_at(pos, s));
        match (total, partial, pick) {
            (1, false, Some(tag)) => {
                rev.push(Segment::new(parity, tag));
                pos -= tag.word_len(parity);
                allowed = vec![tag.case.sign_in()];
            }
            (0, true, _) => break,
            (0, false, _) => return Err(CodeError::Parse { pos, msg: "no return template ends here".into() }),
            _ => {
                ambiguous = true;
                break;
            }
        }
    }
    let end_sign = match (sign, rev.first()) {
        (Some(s), _) => s,
        (None, Some(seg)) => seg.tag.case.sign_out(),
        (None, None) => 1,
    };
    let digits = rev.iter().map(|g| g.digit).collect();
    rev.reverse();
    Ok(ParsedWord {
        stream: stream(dual_kind(parity), 1, digits, false),
        segments: rev,
        sign: end_sign,
        unparsed: pos,
        ambiguous,
    })
}
