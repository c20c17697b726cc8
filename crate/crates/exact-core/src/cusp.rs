use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{classify_subgroup, ExactError, ExtPoint, UnimodularMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspClass {
    OrbitOfInfinity,
    OrbitOfOne,
}

/// A cusp class together with a group element carrying the base cusp
/// (`∞` or `1`) to the input point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspWitness {
    pub class: CuspClass,
    pub witness: UnimodularMatrix,
}

fn is_even(n: &BigInt) -> bool {
    n.is_even()
}

// (b', d') with a d' - b' c = 1
fn extend_column(a: &BigInt, c: &BigInt) -> (BigInt, BigInt) {
    let e = a.extended_gcd(c);
    // e.x * a + e.y * c = gcd = ±1
    let (x, y) = if e.gcd.is_one() { (e.x, e.y) } else { (-e.x, -e.y) };
    // a*x + c*y = 1  => d' = x, b' = -y
    (-y, x)
}

/// Theta-orbit of a rational cusp, with a witness in Theta mapping `∞` or `1`
/// onto it.
pub fn cusp_class_theta(x: &ExtPoint) -> Result<CuspWitness, ExactError> {
    let (a, c) = x.as_fraction()?;
    if is_even(&a) || is_even(&c) {
        let (b0, d0) = extend_column(&a, &c);
        for k in 0i32..2 {
            let m = UnimodularMatrix::new(a.clone(), &b0 + &a * k, c.clone(), &d0 + &c * k)?;
            if classify_subgroup(&m).theta {
                return Ok(CuspWitness { class: CuspClass::OrbitOfInfinity, witness: m });
            }
        }
        unreachable!("a or c even always admits a Theta witness");
    }
    // M = (a', m - a'; c', n - c') sends 1 to m/n when n a' - m c' = 1
    let (m, n) = (a, c);
    let e = n.extended_gcd(&m);
    let (ap, cp) = if e.gcd.is_one() { (e.x, -e.y) } else { (-e.x, e.y) };
    for k in 0i32..2 {
        let a1 = &ap + &m * k;
        let c1 = &cp + &n * k;
        let mat = UnimodularMatrix::new(a1.clone(), &m - &a1, c1.clone(), &n - &c1)?;
        if classify_subgroup(&mat).theta {
            return Ok(CuspWitness { class: CuspClass::OrbitOfOne, witness: mat });
        }
    }
    unreachable!("odd m, n always admit a Theta witness");
}

/// Every rational is in the orbit of `∞` under the odd subgroup; the witness
/// `g` satisfies `g(∞) = x` and lies in that subgroup.
pub fn cusp_class_gamma(x: &ExtPoint) -> Result<CuspWitness, ExactError> {
    let (a, c) = x.as_fraction()?;
    if c.is_zero() {
        return Ok(CuspWitness { class: CuspClass::OrbitOfInfinity, witness: UnimodularMatrix::identity() });
    }
    let (b0, d0) = extend_column(&a, &c);
    for k in 0i32..2 {
        let m = UnimodularMatrix::new(a.clone(), &b0 + &a * k, c.clone(), &d0 + &c * k)?;
        if classify_subgroup(&m).gamma_odd {
            return Ok(CuspWitness { class: CuspClass::OrbitOfInfinity, witness: m });
        }
    }
    unreachable!("coprime (a, c) always admits a witness");
}
