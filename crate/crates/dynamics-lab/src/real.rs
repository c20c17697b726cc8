//! Decimal floating point at a chosen number of significant digits.

use cutseq_exact::{BigInt, QuadraticSurd};
use dashu_float::ops::SquareRoot;
use dashu_float::DBig;
use dashu_int::IBig;

pub use dashu_float::DBig as Real;

pub const DEFAULT_DIGITS: usize = 200;

/// Working precision: a few guard digits above what is reported.
pub(crate) fn work(digits: usize) -> usize {
    digits + 12
}

fn ibig(n: &BigInt) -> IBig {
    n.to_string().parse().expect("decimal integer")
}

pub fn int(n: i64, digits: usize) -> DBig {
    DBig::from(n).with_precision(work(digits)).value()
}

pub fn big(n: &BigInt, digits: usize) -> DBig {
    DBig::from(ibig(n)).with_precision(work(digits)).value()
}

pub fn real(x: &QuadraticSurd, digits: usize) -> DBig {
    let mut v = big(x.p(), digits);
    if !x.is_rational() {
        v += big(x.q(), digits) * big(x.d(), digits).sqrt();
    }
    v / big(x.r(), digits)
}

pub fn golden(digits: usize) -> DBig {
    (int(1, digits) + int(5, digits).sqrt()) / int(2, digits)
}

/// `3 log G`, the total mass of the odd measures.
pub fn three_log_golden(digits: usize) -> DBig {
    golden(digits).ln() * int(3, digits)
}

pub fn to_f64(x: &DBig) -> f64 {
    x.to_f64().value()
}

/// `x` rounded to `digits` significant digits, as a decimal string.
pub fn decimal(x: &DBig, digits: usize) -> String {
    x.clone().with_precision(digits.max(1)).value().to_string()
}
