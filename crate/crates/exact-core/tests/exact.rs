use cutseq_exact::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

// Independent numeric oracle: enclose (p + q sqrt D)/r in a rational interval
// of width about 2^-200 using an integer square root computed here.
fn enclose(x: &QuadraticSurd) -> (BigRational, BigRational) {
    let k = 200u32;
    let scale = BigInt::one() << k;
    let q2d = x.q() * x.q() * x.d() * &scale * &scale;
    let lo_root: BigInt = num_integer::Roots::sqrt(&q2d);
    let hi_root: BigInt = &lo_root + 1;
    let (lo_s, hi_s) = if x.q() >= &BigInt::zero() {
        (lo_root, hi_root)
    } else {
        (-hi_root, -lo_root)
    };
    let p = x.p() * &scale;
    let den = x.r() * &scale;
    (
        BigRational::new(&p + lo_s, den.clone()),
        BigRational::new(&p + hi_s, den),
    )
}

fn oracle_cmp(x: &QuadraticSurd, y: &QuadraticSurd) -> Option<std::cmp::Ordering> {
    let (xl, xh) = enclose(x);
    let (yl, yh) = enclose(y);
    if xh < yl {
        Some(std::cmp::Ordering::Less)
    } else if yh < xl {
        Some(std::cmp::Ordering::Greater)
    } else if x == y {
        Some(std::cmp::Ordering::Equal)
    } else {
        None
    }
}

fn s(p: i64, q: i64, r: i64, d: i64) -> QuadraticSurd {
    QuadraticSurd::new(p, q, r, d).unwrap()
}

const SQUAREFREE: [i64; 12] = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19];

fn surd_strategy() -> impl Strategy<Value = QuadraticSurd> {
    (-60i64..60, -12i64..12, 1i64..25, 0usize..SQUAREFREE.len()).prop_map(|(p, q, r, i)| {
        let q = if q == 0 { 1 } else { q };
        s(p, q, r, SQUAREFREE[i])
    })
}

fn field_surds(d: i64) -> impl Strategy<Value = QuadraticSurd> {
    (-60i64..60, -12i64..12, 1i64..25).prop_map(move |(p, q, r)| s(p, q, r, d))
}

fn generator_word(gens: Vec<UnimodularMatrix>, max_len: usize) -> impl Strategy<Value = UnimodularMatrix> {
    prop::collection::vec((0..gens.len(), any::<bool>()), 0..max_len).prop_map(move |w| {
        w.iter().fold(UnimodularMatrix::identity(), |acc, &(i, inv)| {
            let g = if inv { gens[i].inverse() } else { gens[i].clone() };
            &acc * &g
        })
    })
}

fn modular_word() -> impl Strategy<Value = UnimodularMatrix> {
    generator_word(vec![UnimodularMatrix::t1(), UnimodularMatrix::s_theta()], 12)
}

#[test]
fn conjugate_examples() {
    let x = s(1, 1, 1, 2);
    assert_eq!(x.conjugate().unwrap(), s(1, -1, 1, 2));
    let y = s(3, 2, 4, 5);
    assert_eq!(y.conjugate().unwrap().conjugate().unwrap(), y);
    assert_eq!(
        QuadraticSurd::from_ratio(1, 2).conjugate(),
        Err(ExactError::NoConjugateOfRational)
    );
    // 1 - sqrt 2 lies in (-G, 2 - G); oracle by squaring by hand:
    // 1 - sqrt2 > -G  <=>  (1+sqrt5)/2 + 1 > sqrt 2  <=>  3 + sqrt5 > 2 sqrt2 (true)
    let g = golden_ratio();
    let xb = x.conjugate().unwrap();
    assert!(xb > -&g);
    assert!(xb < QuadraticSurd::from_int(2) - &g);
    assert!((xb.to_f64() + 0.41421356237).abs() < 1e-10);
}

#[test]
fn normalization() {
    assert_eq!(s(2, 4, 6, 2), s(1, 2, 3, 2));
    assert_eq!(s(1, 1, -1, 2), s(-1, -1, 1, 2));
    assert_eq!(s(0, 1, 1, 8), s(0, 2, 1, 2));
    assert_eq!(s(1, 1, 1, 9), QuadraticSurd::from_int(4));
    assert!(s(5, 0, 10, 7).is_rational());
    assert_eq!(s(5, 0, 10, 7), QuadraticSurd::from_ratio(1, 2));
}

#[test]
fn mobius_examples() {
    let sm = UnimodularMatrix::s_odd();
    assert_eq!(sm.apply(&ExtPoint::Infinity), ExtPoint::Finite(QuadraticSurd::zero()));
    assert_eq!(
        sm.apply(&ExtPoint::Finite(QuadraticSurd::zero())),
        ExtPoint::Finite(QuadraticSurd::from_int(-1))
    );
    assert_eq!(sm.apply(&ExtPoint::Finite(QuadraticSurd::from_int(-1))), ExtPoint::Infinity);
    let t = UnimodularMatrix::t2();
    assert_eq!(t.apply_surd(&s(1, 1, 1, 2)), ExtPoint::Finite(s(3, 1, 1, 2)));
    assert_eq!(t.apply(&ExtPoint::Infinity), ExtPoint::Infinity);
}

#[test]
fn classify_examples() {
    let m = classify_subgroup(&UnimodularMatrix::s_odd());
    assert!(m.gamma_odd && !m.theta && m.full_modular);
    let m = classify_subgroup(&UnimodularMatrix::t1());
    assert!(!m.gamma_odd && !m.theta && m.full_modular);
    assert_eq!(m.labels(), vec![SubgroupLabel::FullModular]);
    let m = classify_subgroup(&UnimodularMatrix::t2());
    assert!(m.gamma_odd && m.theta);
}

// Oracle: enumerate SL(2, Z/2) by brute force and check the index counts.
#[test]
fn residue_census() {
    let mut all = Vec::new();
    for a in 0..2u8 {
        for b in 0..2u8 {
            for c in 0..2u8 {
                for d in 0..2u8 {
                    if (a * d + 2 - b * c) % 2 == 1 {
                        all.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    assert_eq!(all.len(), 6);
    // lift each residue to an actual matrix via small search
    let mut gamma = 0;
    let mut theta = 0;
    for res in &all {
        let mut found = None;
        'search: for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    for d in -3i64..=3 {
                        if a * d - b * c == 1
                            && [a, b, c, d].iter().zip(res).all(|(x, r)| x.rem_euclid(2) as u8 == *r)
                        {
                            found = Some(UnimodularMatrix::new(a, b, c, d).unwrap());
                            break 'search;
                        }
                    }
                }
            }
        }
        let m = classify_subgroup(&found.unwrap());
        gamma += m.gamma_odd as usize;
        theta += m.theta as usize;
    }
    assert_eq!(gamma, 3, "index two");
    assert_eq!(theta, 2, "index three");
}

#[test]
fn cusp_examples() {
    let half = ExtPoint::Finite(QuadraticSurd::from_ratio(1, 2));
    assert_eq!(cusp_class_theta(&half).unwrap().class, CuspClass::OrbitOfInfinity);
    let tf = ExtPoint::Finite(QuadraticSurd::from_ratio(3, 5));
    assert_eq!(cusp_class_theta(&tf).unwrap().class, CuspClass::OrbitOfOne);
    assert_eq!(cusp_class_theta(&ExtPoint::Infinity).unwrap().class, CuspClass::OrbitOfInfinity);
    assert!(cusp_class_theta(&ExtPoint::Finite(s(0, 1, 1, 2))).is_err());

    let w = cusp_class_gamma(&ExtPoint::Infinity).unwrap();
    assert_eq!(w.witness, UnimodularMatrix::identity());
    for (n, d) in [(0, 1), (5, 3), (-7, 4), (2, 9)] {
        let x = ExtPoint::Finite(QuadraticSurd::from_ratio(n, d));
        let w = cusp_class_gamma(&x).unwrap();
        assert!(classify_subgroup(&w.witness).gamma_odd);
        assert_eq!(w.witness.apply(&ExtPoint::Infinity), x);
    }
}

proptest! {
    #[test]
    fn conjugate_involution_and_discriminant(x in surd_strategy()) {
        let c = x.conjugate().unwrap();
        prop_assert_eq!(c.conjugate().unwrap(), x.clone());
        prop_assert_eq!(c.discriminant(), x.discriminant());
    }

    #[test]
    fn field_arithmetic(x in field_surds(7), y in field_surds(7)) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        // min_poly vanishes
        let (a, b, c) = x.min_poly();
        let v = &(&x * &x) * &QuadraticSurd::from_int(a) + &x * &QuadraticSurd::from_int(b) + QuadraticSurd::from_int(c);
        prop_assert!(v.is_zero());
    }

    #[test]
    fn order_matches_oracle(x in surd_strategy(), y in surd_strategy()) {
        if let Some(o) = oracle_cmp(&x, &y) {
            prop_assert_eq!(x.cmp(&y), o);
        }
        // floor agrees with the enclosure
        let (lo, _) = enclose(&x);
        let f = x.floor();
        prop_assert!(BigRational::from_integer(f.clone()) <= lo + BigRational::new(1.into(), BigInt::one() << 150));
        prop_assert!(QuadraticSurd::from_int(f.clone()) <= x);
        prop_assert!(QuadraticSurd::from_int(f + 1) > x);
    }

    #[test]
    fn mobius_is_action(m in modular_word(), n in modular_word(), x in surd_strategy()) {
        let pt = ExtPoint::Finite(x.clone());
        let mn = &m * &n;
        prop_assert_eq!(mn.apply(&pt), m.apply(&n.apply(&pt)));
        prop_assert_eq!(mn.apply(&ExtPoint::Infinity), m.apply(&n.apply(&ExtPoint::Infinity)));
        if let ExtPoint::Finite(y) = m.apply(&pt) {
            prop_assert_eq!(y.discriminant(), x.discriminant());
            prop_assert_eq!(y.d(), x.d());
        }
    }

    #[test]
    fn subgroups_closed(
        a in generator_word(vec![UnimodularMatrix::s_odd(), UnimodularMatrix::st_inv()], 10),
        b in generator_word(vec![UnimodularMatrix::s_odd(), UnimodularMatrix::st_inv()], 10),
        c in generator_word(vec![UnimodularMatrix::s_theta(), UnimodularMatrix::t2()], 10),
        d in generator_word(vec![UnimodularMatrix::s_theta(), UnimodularMatrix::t2()], 10),
    ) {
        prop_assert!(classify_subgroup(&a).gamma_odd);
        prop_assert!(classify_subgroup(&(&a * &b)).gamma_odd);
        prop_assert!(classify_subgroup(&c).theta);
        prop_assert!(classify_subgroup(&(&c * &d)).theta);
        prop_assert!(classify_subgroup(&(&a * &c)).full_modular);
    }

    #[test]
    fn cusp_witnesses(n in -200i64..200, d in 1i64..200) {
        let x = ExtPoint::Finite(QuadraticSurd::from_ratio(n, d));
        let w = cusp_class_gamma(&x).unwrap();
        prop_assert!(classify_subgroup(&w.witness).gamma_odd);
        prop_assert_eq!(w.witness.apply(&ExtPoint::Infinity), x.clone());
        let t = cusp_class_theta(&x).unwrap();
        prop_assert!(classify_subgroup(&t.witness).theta);
        let g = num_integer::Integer::gcd(&n, &d);
        let (nn, dd) = (n / g, d / g);
        let expect = if nn % 2 == 0 || dd % 2 == 0 { CuspClass::OrbitOfInfinity } else { CuspClass::OrbitOfOne };
        prop_assert_eq!(t.class, expect);
        let base = match expect {
            CuspClass::OrbitOfInfinity => ExtPoint::Infinity,
            CuspClass::OrbitOfOne => ExtPoint::Finite(QuadraticSurd::one()),
        };
        prop_assert_eq!(t.witness.apply(&base), x);
    }

    #[test]
    fn mixed_field_order(x in field_surds(2), y in field_surds(3)) {
        if let Some(o) = oracle_cmp(&x, &y) {
            prop_assert_eq!(x.cmp(&y), o);
        }
    }
}
