use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{ExactError, ExtPoint, QuadraticSurd};

/// Element of PSL(2,Z): an integer matrix of determinant 1, stored as the
/// representative of `{M, -M}` with `c > 0`, or `c = 0` and `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, ExactError> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(ExactError::NotUnimodular(det.to_string()));
        }
        Ok(Self::canonical(a, b, c, d))
    }

    fn canonical(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let flip = c.is_negative() || (c.is_zero() && d.is_negative());
        if flip {
            UnimodularMatrix { a: -a, b: -b, c: -c, d: -d }
        } else {
            UnimodularMatrix { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self::canonical(1.into(), 0.into(), 0.into(), 1.into())
    }

    /// `z -> -1/(z+1)`, order three.
    pub fn s_odd() -> Self {
        Self::canonical(0.into(), (-1).into(), 1.into(), 1.into())
    }

    /// `z -> 1/(1-z)`, order three; equals `S T^{-1}` with `T(z) = z+2`.
    pub fn st_inv() -> Self {
        Self::canonical(0.into(), 1.into(), (-1).into(), 1.into())
    }

    /// `z -> z+2`.
    pub fn t2() -> Self {
        Self::canonical(1.into(), 2.into(), 0.into(), 1.into())
    }

    /// `z -> -1/z`.
    pub fn s_theta() -> Self {
        Self::canonical(0.into(), (-1).into(), 1.into(), 0.into())
    }

    /// `z -> z+1`, not in either subgroup.
    pub fn t1() -> Self {
        Self::canonical(1.into(), 1.into(), 0.into(), 1.into())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self::canonical(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Residues of `(a, b, c, d)` modulo 2, each 0 or 1.
    pub fn mod2(&self) -> [u8; 4] {
        let m = |x: &BigInt| if (x % 2u32).is_zero() { 0 } else { 1 };
        [m(&self.a), m(&self.b), m(&self.c), m(&self.d)]
    }

    pub fn apply(&self, x: &ExtPoint) -> ExtPoint {
        mobius(&self.a, &self.b, &self.c, &self.d, x)
    }

    pub fn apply_surd(&self, x: &QuadraticSurd) -> ExtPoint {
        mobius_finite(&self.a, &self.b, &self.c, &self.d, x)
    }

    /// Derivative `1/(cx+d)^2` of the Möbius map at a finite point.
    pub fn derivative_at(&self, x: &QuadraticSurd) -> Option<QuadraticSurd> {
        let den = x * &QuadraticSurd::from_int(self.c.clone()) + QuadraticSurd::from_int(self.d.clone());
        if den.is_zero() {
            None
        } else {
            Some((&den * &den).recip())
        }
    }
}

/// `(ax+b)/(cx+d)` for any integer matrix with nonzero determinant.
pub(crate) fn mobius(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, x: &ExtPoint) -> ExtPoint {
    match x {
        ExtPoint::Infinity => {
            if c.is_zero() {
                ExtPoint::Infinity
            } else {
                ExtPoint::Finite(QuadraticSurd::from_ratio(a.clone(), c.clone()))
            }
        }
        ExtPoint::Finite(z) => mobius_finite(a, b, c, d, z),
    }
}

pub(crate) fn mobius_finite(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, z: &QuadraticSurd) -> ExtPoint {
    let den = z * &QuadraticSurd::from_int(c.clone()) + QuadraticSurd::from_int(d.clone());
    if den.is_zero() {
        return ExtPoint::Infinity;
    }
    let num = z * &QuadraticSurd::from_int(a.clone()) + QuadraticSurd::from_int(b.clone());
    ExtPoint::Finite(num / den)
}

impl Mul<&UnimodularMatrix> for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, o: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix::canonical(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, o: UnimodularMatrix) -> UnimodularMatrix {
        &self * &o
    }
}

/// `[[a,b],[c,d]]`
impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}
