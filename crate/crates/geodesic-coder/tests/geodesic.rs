use cutseq_cf::{
    expand, natural_extension_even, natural_extension_odd, DigitStream, ExtensionPoint, Kind, SignedDigit,
};
use cutseq_exact::{classify_subgroup, QuadraticSurd as Q};
use cutseq_geodesic::*;
use proptest::prelude::*;

fn s(p: i64, q: i64, r: i64, d: i64) -> Q {
    Q::new(p, q, r, d).unwrap()
}

fn dg(a: i64, e: i8) -> SignedDigit {
    SignedDigit::new(a, e)
}

fn geo(f: Q, b: Q) -> OrientedGeodesic {
    OrientedGeodesic::new(f, b).unwrap()
}

fn fwd_kind(p: Parity) -> Kind {
    if p == Parity::Odd {
        Kind::Ocf
    } else {
        Kind::Ecf
    }
}

fn dual_kind(p: Parity) -> Kind {
    if p == Parity::Odd {
        Kind::Gcf
    } else {
        Kind::Eecf
    }
}

fn all_digits(st: &DigitStream, n: usize) -> Vec<SignedDigit> {
    st.leading.into_iter().chain(st.take(n)).take(n).collect()
}

#[test]
fn section_membership() {
    let r2 = s(0, 1, 1, 2);
    assert!(in_section(&geo(&r2 + 1, -(&r2 - 1)), Parity::Odd));
    assert!(!in_section(&geo(r2.clone(), Q::zero()), Parity::Odd));
    assert!(!in_section(&geo(&r2 - 1, &r2 + 1), Parity::Odd));
    // G itself is excluded
    assert!(!in_section(&geo(-(&r2 + 3), cutseq_exact::golden_ratio()), Parity::Odd));
    assert!(in_section(&geo(-(&r2 + 3), cutseq_exact::golden_ratio() - 1), Parity::Odd));
    // 1/2 + sqrt2/4 is in (-1,1) but not in -I_G
    let y = s(2, 1, 4, 2);
    assert!(in_section(&geo(&r2 + 1, y.clone()), Parity::Even));
    assert!(!in_section(&geo(&r2 + 1, y.clone()), Parity::Odd));
    assert!(in_section(&geo(&r2 + 1, y - 2), Parity::Odd));
}

#[test]
fn rho_odd_example() {
    let r2 = s(0, 1, 1, 2);
    let g = geo(&r2 + 2, -(&r2 - 1));
    let st = rho_step_odd(&g).unwrap();
    assert_eq!(st.segment.tag, CaseTag { case: Case::B, k: 2 });
    assert_eq!(st.segment.digit, dg(3, 1));
    assert_eq!(st.geodesic.forward, -(&r2 + 1));
    assert_eq!(word_string(&st.segment.word), "𝕃𝐋ℝ");
    assert!(classify_subgroup(&st.matrix).gamma_odd);
    assert!(in_section(&st.geodesic, Parity::Odd));
    assert!(rho_step_odd(&geo(r2.clone(), Q::zero())).is_err());
}

#[test]
fn rho_even_example() {
    let r2 = s(0, 1, 1, 2);
    let g = geo(&r2 + 1, -(&r2 - 1));
    let st = rho_step_even(&g).unwrap();
    assert_eq!(st.segment.tag, CaseTag { case: Case::B, k: 1 });
    assert_eq!(word_string(&st.segment.word), "LR");
    assert!(classify_subgroup(&st.matrix).theta);
    // eps1 = +1: forward endpoint changes side
    assert!(st.geodesic.forward.is_negative());
    assert_eq!(rho_inverse(&st.geodesic, Parity::Even).unwrap().geodesic, g);
}

#[test]
fn templates() {
    for k in 1..5u64 {
        let t = |case| CaseTag { case, k };
        let ki = k as i64;
        assert_eq!(t(Case::A).digit(Parity::Odd), dg(2 * ki + 1, -1));
        assert_eq!(t(Case::B).digit(Parity::Odd), dg(2 * ki - 1, 1));
        assert_eq!(t(Case::C).digit(Parity::Odd), dg(2 * ki + 1, -1));
        assert_eq!(t(Case::D).digit(Parity::Odd), dg(2 * ki - 1, 1));
        assert_eq!(t(Case::A).digit(Parity::Even), dg(2 * ki, -1));
        assert_eq!(t(Case::B).digit(Parity::Even), dg(2 * ki, 1));
        let rep = |w: &str, n: u64| w.repeat(n as usize);
        assert_eq!(word_string(&t(Case::A).word(Parity::Odd)), rep("𝕃𝐋", k - 1) + "𝕃𝐑");
        assert_eq!(word_string(&t(Case::B).word(Parity::Odd)), rep("𝕃𝐋", k - 1) + "ℝ");
        assert_eq!(word_string(&t(Case::C).word(Parity::Odd)), rep("𝐑ℝ", k - 1) + "𝐑𝕃");
        assert_eq!(word_string(&t(Case::D).word(Parity::Odd)), rep("𝐑ℝ", k - 1) + "𝐋");
        assert_eq!(word_string(&t(Case::A).word(Parity::Even)), rep("L", 2 * k - 2) + "R");
        assert_eq!(word_string(&t(Case::D).word(Parity::Even)), rep("R", 2 * k - 1) + "L");
        for case in Case::ALL {
            for p in [Parity::Odd, Parity::Even] {
                assert_eq!(t(case).word(p).len(), t(case).word_len(p));
                assert_eq!(CaseTag::from_digit(p, case.sign_in(), t(case).digit(p)), t(case));
            }
        }
    }
}

#[test]
fn parse_single_templates() {
    for k in 1..6u64 {
        let ki = k as i64;
        let w = CaseTag { case: Case::A, k }.word(Parity::Odd);
        let p = parse_cutting_sequence(&w, Direction::Forward, Parity::Odd, None).unwrap();
        assert_eq!(p.stream.leading, Some(dg(2 * ki + 1, -1)));
        let w = CaseTag { case: Case::B, k }.word(Parity::Odd);
        let p = parse_cutting_sequence(&w, Direction::Forward, Parity::Odd, None).unwrap();
        assert_eq!(p.stream.leading, Some(dg(2 * ki - 1, 1)));
        let w = CaseTag { case: Case::A, k }.word(Parity::Even);
        let p = parse_cutting_sequence(&w, Direction::Forward, Parity::Even, Some(1)).unwrap();
        assert_eq!(p.stream.leading, Some(dg(2 * ki, -1)));
    }
    let w = parse_word("RL", Parity::Even).unwrap();
    assert_eq!(parse_cutting_sequence(&w, Direction::Forward, Parity::Even, None), Err(CodeError::NeedSign));
    let w = parse_word("lR", Parity::Odd).unwrap();
    assert!(parse_cutting_sequence(&w, Direction::Forward, Parity::Odd, Some(-1)).is_err());
    let w = parse_word("lRl", Parity::Odd).unwrap();
    let p = parse_cutting_sequence(&w, Direction::Forward, Parity::Odd, None).unwrap();
    assert_eq!(p.unparsed, 1);
    // A must not be followed by a dark letter
    let w = parse_word("lRR", Parity::Odd).unwrap();
    assert!(parse_cutting_sequence(&w, Direction::Forward, Parity::Odd, None).is_err());
}

#[test]
fn golden_forward_word() {
    // 1/gamma_{-inf} = [2; 2, 2, ...] read forward: xi (𝕃𝐑)(ℝ)(𝐋)𝕃𝐑
    let r2 = s(0, 1, 1, 2);
    let g = geo(&r2 + 1, -(&r2 - 1));
    let c = cutting_sequence(&g, 4, Parity::Odd).unwrap();
    let words: Vec<String> = c.forward.iter().map(|x| word_string(&x.word)).collect();
    assert_eq!(words, ["𝕃𝐑", "ℝ", "𝐋", "𝕃𝐑"]);
    assert_eq!(c.initial_shade(), Shade::Light);
}

#[test]
fn golden_backward_word() {
    // gamma_{-inf} = [0; 2, 1, 2, 1, ...] = (sqrt3 - 1)/2 on a case C geodesic:
    // ... ℝ𝐋(𝕃𝐑)(𝕃𝐋ℝ) xi, i.e. << (3,+1), (3,-1), ... >>
    let w = s(-1, 1, 2, 3);
    let g = geo(-(s(0, 1, 1, 3) + 2), w);
    let c = cutting_sequence(&g, 5, Parity::Odd).unwrap();
    let back = word_string(&c.backward_letters());
    assert!(back.ends_with("ℝ𝐋𝕃𝐑𝕃𝐋ℝ"), "{back}");
    let last: Vec<String> = c.backward.iter().rev().take(2).map(|x| word_string(&x.word)).collect();
    assert_eq!(last, ["𝕃𝐋ℝ", "𝕃𝐑"]);
    let digits: Vec<SignedDigit> = c.backward.iter().rev().map(|x| x.digit).collect();
    assert_eq!(&digits[..2], &[dg(3, 1), dg(3, -1)]);
}

#[test]
fn silver_ratio_closes_up() {
    let r2 = s(0, 1, 1, 2);
    let period = [dg(3, -1), dg(1, 1), dg(1, 1)];
    let g = closed_geodesic_from_period(&period, Kind::Ocf, 1).unwrap();
    assert_eq!(g, geo(&r2 + 1, -&r2 + 1));
    let mut cur = g.clone();
    for i in 1..=6 {
        cur = rho_step_odd(&cur).unwrap().geodesic;
        if i == 3 {
            assert_eq!(cur, g);
        }
    }
    assert_eq!(cur, g);
    let e = closed_geodesic_from_period(&[dg(2, 1), dg(2, 1)], Kind::Ecf, 1).unwrap();
    assert_eq!(e, geo(&r2 + 1, -&r2 + 1));
    assert_eq!(closed_geodesic_from_period(&[dg(3, 1)], Kind::Ocf, 1), Err(CodeError::NotClosed));
    // sign product -1: rho^r negates, rho^{2r} fixes
    let p = periodic_pair(&[dg(3, 1)], Kind::Ocf, 1).unwrap();
    let once = rho_step_odd(&p).unwrap().geodesic;
    assert_eq!(once, p.negated());
    assert_eq!(rho_step_odd(&once).unwrap().geodesic, p);
}

#[test]
fn conjugation_examples() {
    let r2 = s(0, 1, 1, 2);
    let g = geo(&r2 + 1, -&r2 + 1);
    let j = conjugation_j(&g, Parity::Odd).unwrap();
    assert_eq!(j, ExtensionPoint::new(&r2 - 1, &r2 - 1, 1));
    assert_eq!(conjugation_j_inv(&j, Parity::Odd).unwrap(), g);
    let rj = conjugation_j(&rho_step_odd(&g).unwrap().geodesic, Parity::Odd).unwrap();
    assert_eq!(rj, natural_extension_odd(&j).unwrap());
}

#[test]
fn lifts() {
    let r2 = s(0, 1, 1, 2);
    let g = geo(&r2 - 1, &r2 + 1);
    let (m, h) = lift_to_section(&g, Parity::Odd, DEFAULT_LIFT_DEPTH).unwrap();
    assert!(classify_subgroup(&m).gamma_odd);
    assert!(in_section(&h, Parity::Odd));
    assert_eq!(g.apply(&m).unwrap(), h);
    let r3 = s(0, 1, 1, 3);
    let g = geo(r3.clone(), -&r3 / 3);
    let (m, h) = lift_to_section(&g, Parity::Even, DEFAULT_LIFT_DEPTH).unwrap();
    assert!(classify_subgroup(&m).theta);
    assert!(in_section(&h, Parity::Even));
    let inside = geo(&r2 + 1, -&r2 + 1);
    let (m, h) = lift_to_section(&inside, Parity::Odd, 8).unwrap();
    assert_eq!(m, cutseq_exact::UnimodularMatrix::identity());
    assert_eq!(h, inside);
    assert!(lift_to_section(&geo(r2.clone(), Q::from_ratio(1, 3)), Parity::Odd, 8).is_err());
}

const FIELDS: [i64; 8] = [2, 3, 6, 7, 10, 11, 13, 17];

fn surd() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..6, prop::bool::ANY, 1i64..9, prop::sample::select(&FIELDS[..]))
        .prop_map(|(p, q, neg, r, d)| s(p, if neg { -q } else { q }, r, d))
}

fn frac(x: &Q) -> Q {
    x - Q::from_int(x.floor())
}

/// Random section geodesic with endpoints in (possibly) different fields.
fn section_geodesic(parity: Parity) -> impl Strategy<Value = OrientedGeodesic> {
    (surd(), surd(), prop::bool::ANY, 0i64..4).prop_map(move |(x, y, neg, shift)| {
        let u = frac(&x);
        let f = u.recip() + shift * 2;
        let f = if neg { -f } else { f };
        let v = frac(&y);
        let w = match parity {
            Parity::Odd => v * Q::from_ratio(8, 5) - Q::from_ratio(3, 8),
            Parity::Even => v * 2 - 1,
        };
        let sgn = if neg { 1 } else { -1 };
        geo(f, w * sgn)
    })
}

fn check_walk(g: &OrientedGeodesic, parity: Parity, steps: usize) -> Result<(), TestCaseError> {
    let mut cur = g.clone();
    let mut prev: Option<Case> = None;
    for _ in 0..steps {
        let st = rho(&cur, parity).unwrap();
        let case = st.segment.tag.case;
        if let Some(p) = prev {
            prop_assert!(p.successors().contains(&case), "{p:?} followed by {case:?}");
        }
        prop_assert!(in_section(&st.geodesic, parity));
        prop_assert_eq!(st.geodesic.sign() != cur.sign(), st.segment.digit.eps == 1);
        let m = classify_subgroup(&st.matrix);
        let ok = if parity == Parity::Odd { m.gamma_odd } else { m.theta };
        prop_assert!(ok);
        let back = rho_inverse(&st.geodesic, parity).unwrap();
        prop_assert_eq!(&back.geodesic, &cur);
        prev = Some(case);
        cur = st.geodesic;
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn succession_and_section_invariance_odd(g in section_geodesic(Parity::Odd)) {
        check_walk(&g, Parity::Odd, 16)?;
    }

    #[test]
    fn succession_and_section_invariance_even(g in section_geodesic(Parity::Even)) {
        check_walk(&g, Parity::Even, 16)?;
    }

    #[test]
    fn conjugacy(g in section_geodesic(Parity::Odd), h in section_geodesic(Parity::Even)) {
        let j = conjugation_j(&g, Parity::Odd).unwrap();
        prop_assert_eq!(conjugation_j_inv(&j, Parity::Odd).unwrap(), g.clone());
        let lhs = conjugation_j(&rho_step_odd(&g).unwrap().geodesic, Parity::Odd).unwrap();
        prop_assert_eq!(lhs, natural_extension_odd(&j).unwrap());
        let j = conjugation_j(&h, Parity::Even).unwrap();
        prop_assert_eq!(conjugation_j_inv(&j, Parity::Even).unwrap(), h.clone());
        let lhs = conjugation_j(&rho_step_even(&h).unwrap().geodesic, Parity::Even).unwrap();
        prop_assert_eq!(lhs, natural_extension_even(&j).unwrap());
    }

    #[test]
    fn round_trip(g in section_geodesic(Parity::Odd), h in section_geodesic(Parity::Even)) {
        for (g, parity) in [(g, Parity::Odd), (h, Parity::Even)] {
            let n = 12;
            let c = cutting_sequence_split(&g, n + 6, n, parity).unwrap();
            prop_assert_eq!(grammar_violation(parity, &c.segments().cloned().collect::<Vec<_>>()), None);
            let f = parse_cutting_sequence(&c.forward_letters(), Direction::Forward, parity, Some(g.sign())).unwrap();
            let want = expand(fwd_kind(parity), &g.forward.abs(), 256).unwrap();
            prop_assert_eq!(all_digits(&f.stream, n), all_digits(&want, n));
            let b = parse_cutting_sequence(&c.backward_letters(), Direction::Backward, parity, Some(g.sign())).unwrap();
            let w = &g.backward * -(g.sign() as i64);
            let want = expand(dual_kind(parity), &w, 256).unwrap();
            prop_assert!(b.stream.preperiod.len() >= n, "only {} digits read", b.stream.preperiod.len());
            prop_assert_eq!(b.stream.take(n), want.take(n));
        }
    }

    #[test]
    fn lift_arbitrary(x in surd(), y in surd()) {
        prop_assume!(x != y);
        for parity in [Parity::Odd, Parity::Even] {
            let g = geo(x.clone(), y.clone());
            let (m, h) = lift_to_section(&g, parity, DEFAULT_LIFT_DEPTH).unwrap();
            prop_assert!(in_section(&h, parity));
            prop_assert_eq!(g.apply(&m).unwrap(), h);
            let c = classify_subgroup(&m);
            let ok = if parity == Parity::Odd { c.gamma_odd } else { c.theta };
            prop_assert!(ok);
        }
    }

    #[test]
    fn return_powers_on_periodic_pairs(period in prop::collection::vec((0i64..3, prop::bool::ANY), 1..4), neg in prop::bool::ANY) {
        let period: Vec<SignedDigit> = period.into_iter().map(|(j, e)| {
            let a = 2 * j + 1;
            if a == 1 || e { dg(a, 1) } else { dg(a, -1) }
        }).collect();
        // (3,-1) repeated puts the conjugate on the window boundary 2 - G
        let Ok(g) = periodic_pair(&period, Kind::Ocf, if neg { -1 } else { 1 }) else {
            prop_assert!(period.iter().all(|d| *d == dg(3, -1)));
            return Ok(());
        };
        let r = period.len();
        let mut cur = g.clone();
        for i in 1..=2 * r {
            cur = rho_step_odd(&cur).unwrap().geodesic;
            if i == r {
                prop_assert_eq!(&cur, &g.scaled(sign_product(&period)));
            }
        }
        prop_assert_eq!(cur, g);
    }
}
