use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{ExactError, Rational};

/// Exact real number `(p + q*sqrt(d)) / r`.
///
/// Normal form: `r > 0`, `gcd(p, q, r) = 1`, `d` square-free and at least 2
/// when `q != 0`. Rationals carry `q = 0` and the sentinel `d = 0`, so two
/// values are equal iff their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: BigInt,
}

/// Splits `n > 0` as `s^2 * core` with `core` square-free. Returns `(s, core)`.
pub fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "squarefree_part needs a positive integer");
    let mut m = n.clone();
    let mut s = BigInt::one();
    let mut core = BigInt::one();
    let mut f = BigInt::from(2u32);
    while &f * &f <= m {
        let mut e = 0u32;
        while (&m % &f).is_zero() {
            m /= &f;
            e += 1;
        }
        if e > 0 {
            s *= num_traits::pow(f.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                core *= &f;
            }
        }
        f += 1u32;
    }
    (s, core * m)
}

/// The golden ratio `(1 + sqrt 5) / 2`.
pub fn golden_ratio() -> QuadraticSurd {
    QuadraticSurd::new(1, 1, 2, 5).expect("valid literal")
}

impl QuadraticSurd {
    /// Builds and normalizes `(p + q*sqrt(d)) / r`. `d` may contain square
    /// factors or be a perfect square; it must not be negative.
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, ExactError> {
        let (p, mut q, r, d) = (p.into(), q.into(), r.into(), d.into());
        if r.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if d.is_negative() {
            return Err(ExactError::Parse(format!("negative radicand {d}")));
        }
        if q.is_zero() || d.is_zero() {
            return Ok(Self::raw(p, BigInt::zero(), r, BigInt::zero()));
        }
        let (s, core) = squarefree_part(&d);
        q *= s;
        if core.is_one() {
            return Ok(Self::raw(p + q, BigInt::zero(), r, BigInt::zero()));
        }
        Ok(Self::raw(p, q, r, core))
    }

    /// `sqrt(n)` for a non-negative integer `n`.
    pub fn sqrt(n: impl Into<BigInt>) -> Result<Self, ExactError> {
        Self::new(0, 1, 1, n)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::raw(n.into(), BigInt::zero(), BigInt::one(), BigInt::zero())
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Self::raw(num.into(), BigInt::zero(), den, BigInt::zero())
    }

    pub fn from_rational(x: &Rational) -> Self {
        Self::raw(x.numer().clone(), BigInt::zero(), x.denom().clone(), BigInt::zero())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    fn raw(mut p: BigInt, mut q: BigInt, mut r: BigInt, d: BigInt) -> Self {
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let d = if q.is_zero() { BigInt::zero() } else { d };
        QuadraticSurd { p, q, r, d }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }
    /// Square-free radicand, or 0 for rationals.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.p.clone(), self.r.clone()))
    }

    /// `(p - q*sqrt(d)) / r`.
    pub fn conjugate(&self) -> Result<Self, ExactError> {
        if self.is_rational() {
            return Err(ExactError::NoConjugateOfRational);
        }
        Ok(QuadraticSurd {
            p: self.p.clone(),
            q: -&self.q,
            r: self.r.clone(),
            d: self.d.clone(),
        })
    }

    /// Primitive integer polynomial `(A, B, C)` with `A > 0` vanishing at self.
    /// Degree one (`A = 0`) for rationals.
    pub fn min_poly(&self) -> (BigInt, BigInt, BigInt) {
        if self.is_rational() {
            return (BigInt::zero(), self.r.clone(), -&self.p);
        }
        let a = &self.r * &self.r;
        let b = BigInt::from(-2) * &self.p * &self.r;
        let c = &self.p * &self.p - &self.q * &self.q * &self.d;
        let g = a.gcd(&b).gcd(&c);
        (a / &g, b / &g, c / &g)
    }

    /// Discriminant `B^2 - 4AC` of the primitive minimal polynomial, or `None`
    /// for rationals.
    pub fn discriminant(&self) -> Option<BigInt> {
        if self.is_rational() {
            return None;
        }
        let (a, b, c) = self.min_poly();
        Some(&b * &b - BigInt::from(4) * a * c)
    }

    pub fn signum(&self) -> i32 {
        let sp = sign_i32(&self.p);
        let sq = sign_i32(&self.q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: compare p^2 with q^2 d
        let p2 = &self.p * &self.p;
        let q2d = &self.q * &self.q * &self.d;
        match p2.cmp(&q2d) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact `floor`.
    pub fn floor(&self) -> BigInt {
        let s = if self.q.is_zero() {
            BigInt::zero()
        } else {
            let q2d = &self.q * &self.q * &self.d;
            let root = q2d.sqrt();
            if self.q.is_positive() {
                root
            } else if &root * &root == q2d {
                -root
            } else {
                -root - 1
            }
        };
        (&self.p + s).div_floor(&self.r)
    }

    /// Exact `ceil`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// True if self is an integer.
    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.r.is_one()
    }

    /// `floor(self * 2^bits)`, an exact dyadic lower approximation.
    pub fn floor_scaled(&self, bits: u32) -> BigInt {
        let k = BigInt::one() << bits;
        QuadraticSurd {
            p: &self.p * &k,
            q: &self.q * &k,
            r: self.r.clone(),
            d: self.d.clone(),
        }
        .floor()
    }

    pub fn to_f64(&self) -> f64 {
        let bits = 80u32;
        let n = self.floor_scaled(bits);
        match n.to_f64() {
            Some(v) if v.is_finite() => v / 2f64.powi(bits as i32),
            _ => {
                let qd = self.q.to_f64().unwrap_or(f64::NAN)
                    * self.d.to_f64().unwrap_or(0.0).sqrt();
                (self.p.to_f64().unwrap_or(f64::NAN) + qd) / self.r.to_f64().unwrap_or(f64::NAN)
            }
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        let den = &self.p * &self.p - &self.q * &self.q * &self.d;
        Self::raw(&self.r * &self.p, -(&self.r * &self.q), den, self.d.clone())
    }

    pub fn checked_recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            Err(ExactError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn common_field(&self, other: &Self) -> Result<BigInt, ExactError> {
        if self.d.is_zero() {
            Ok(other.d.clone())
        } else if other.d.is_zero() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(ExactError::FieldMismatch(
                self.d.to_string(),
                other.d.to_string(),
            ))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ExactError> {
        let d = self.common_field(o)?;
        Ok(Self::raw(
            &self.p * &o.r + &o.p * &self.r,
            &self.q * &o.r + &o.q * &self.r,
            &self.r * &o.r,
            d,
        ))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ExactError> {
        let d = self.common_field(o)?;
        Ok(Self::raw(
            &self.p * &o.p + &self.q * &o.q * &d,
            &self.p * &o.q + &self.q * &o.p,
            &self.r * &o.r,
            d,
        ))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ExactError> {
        self.try_add(&-o)
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, ExactError> {
        self.try_mul(&o.checked_recip()?)
    }

    /// Same quadratic field (rationals belong to every field).
    pub fn same_field(&self, o: &Self) -> bool {
        self.common_field(o).is_ok()
    }
}

fn sign_i32(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by real value. Mixed-field comparisons square both sides;
/// they never need to agree on `d`.
impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.same_field(other) {
            return (self - other).signum().cmp(&0);
        }
        cmp_mixed(self, other)
    }
}

// (p1 + q1 s1)/r1 vs (p2 + q2 s2)/r2 with s_i = sqrt(d_i): move to the form
// u + v*s1 - w*s2 with integers and decide the sign by repeated squaring.
fn cmp_mixed(x: &QuadraticSurd, y: &QuadraticSurd) -> Ordering {
    // x - y = (p1 r2 - p2 r1 + q1 r2 s1 - q2 r1 s2) / (r1 r2), r1 r2 > 0
    let u = &x.p * &y.r - &y.p * &x.r;
    let v = &x.q * &y.r;
    let w = -(&y.q * &x.r);
    sign_of_sum(&u, &v, &x.d, &w, &y.d).cmp(&0)
}

// sign of u + v sqrt(a) + w sqrt(b), a, b square-free, distinct, >= 2
fn sign_of_sum(u: &BigInt, v: &BigInt, a: &BigInt, w: &BigInt, b: &BigInt) -> i32 {
    // s = v sqrt(a) + w sqrt(b); its sign
    let sv = sign_i32(v);
    let sw = sign_i32(w);
    let ss = if sv == 0 {
        sw
    } else if sw == 0 || sv == sw {
        sv
    } else {
        match (v * v * a).cmp(&(w * w * b)) {
            Ordering::Greater => sv,
            Ordering::Less => sw,
            Ordering::Equal => 0,
        }
    };
    let su = sign_i32(u);
    if ss == 0 {
        return su;
    }
    if su == 0 || su == ss {
        return ss;
    }
    // opposite signs: compare u^2 with s^2 = v^2 a + w^2 b + 2 v w sqrt(ab)
    // u^2 - s^2 = (u^2 - v^2 a - w^2 b) - 2 v w sqrt(ab)
    let e = u * u - v * v * a - w * w * b;
    let f = BigInt::from(-2) * v * w;
    let ab = a * b;
    let t = sign_single(&e, &f, &ab);
    match t.cmp(&0) {
        Ordering::Greater => su,
        Ordering::Less => ss,
        Ordering::Equal => 0,
    }
}

// sign of e + f sqrt(n), n >= 2 not a square (a*b of distinct square-frees)
fn sign_single(e: &BigInt, f: &BigInt, n: &BigInt) -> i32 {
    let se = sign_i32(e);
    let sf = sign_i32(f);
    if sf == 0 {
        return se;
    }
    if se == 0 || se == sf {
        return sf;
    }
    match (e * e).cmp(&(f * f * n)) {
        Ordering::Greater => se,
        Ordering::Less => sf,
        Ordering::Equal => 0,
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd {
            p: -&self.p,
            q: -&self.q,
            r: self.r.clone(),
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QuadraticSurd> for &QuadraticSurd {
            type Output = QuadraticSurd;
            /// Panics when the operands live in different quadratic fields.
            fn $m(self, o: &QuadraticSurd) -> QuadraticSurd {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QuadraticSurd> for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, o: QuadraticSurd) -> QuadraticSurd {
                (&self).$m(&o)
            }
        }
        impl $tr<&QuadraticSurd> for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, o: &QuadraticSurd) -> QuadraticSurd {
                (&self).$m(o)
            }
        }
        impl $tr<QuadraticSurd> for &QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, o: QuadraticSurd) -> QuadraticSurd {
                self.$m(&o)
            }
        }
        impl $tr<i64> for &QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, o: i64) -> QuadraticSurd {
                self.$m(&QuadraticSurd::from_int(o))
            }
        }
        impl $tr<i64> for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, o: i64) -> QuadraticSurd {
                (&self).$m(&QuadraticSurd::from_int(o))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl From<i64> for QuadraticSurd {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for QuadraticSurd {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

impl From<&Rational> for QuadraticSurd {
    fn from(x: &Rational) -> Self {
        Self::from_rational(x)
    }
}

/// `(p+q*sqrt(D))/r` for irrationals, `p/r` or `p` for rationals.
impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            }
        } else {
            let sign = if self.q.is_negative() { '-' } else { '+' };
            write!(
                f,
                "({}{}{}*sqrt({}))/{}",
                self.p,
                sign,
                self.q.abs(),
                self.d,
                self.r
            )
        }
    }
}
