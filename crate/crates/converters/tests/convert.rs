use cutseq_cf::{cf_evaluate, expand, gcf_expand, CfError, DigitStream, Kind, Mat2, SignedDigit};
use cutseq_convert::*;
use cutseq_exact::QuadraticSurd as Q;
use proptest::prelude::*;

fn d(a: i64, eps: i8) -> SignedDigit {
    SignedDigit::new(a, eps)
}

fn rcf(leading: Option<i64>, pre: &[i64], per: &[i64]) -> DigitStream {
    let v = |xs: &[i64]| xs.iter().map(|&a| SignedDigit::plus(a)).collect();
    DigitStream::new(Kind::Rcf, leading.map(SignedDigit::plus), v(pre), v(per))
}

fn s(p: i64, q: i64, r: i64, dd: i64) -> Q {
    Q::new(p, q, r, dd).unwrap()
}

#[test]
fn rcf_examples() {
    assert_eq!(rcf_expand(&s(1, 1, 1, 2), 256).unwrap(), rcf(Some(2), &[], &[2]));
    assert_eq!(rcf_expand(&Q::from_ratio(3, 4), 256).unwrap(), rcf(None, &[1, 3], &[]));
    assert_eq!(rcf_expand(&s(0, 1, 1, 3), 256).unwrap(), rcf(Some(1), &[], &[1, 2]));
}

#[test]
fn ocf_golden() {
    let out = rcf_to_ocf(&rcf(Some(2), &[], &[2])).unwrap();
    assert_eq!(out.leading, Some(d(3, -1)));
    assert!(out.preperiod.is_empty());
    assert_eq!(out.period, vec![d(1, 1), d(1, 1), d(3, -1)]);
}

#[test]
fn ocf_insertion_case() {
    // 2k + 1/(n2 + z), n2 > 1  ->  (2k+1,-1), (1,+1), then n2 - 1 continues
    for (k, n2) in [(1, 3), (2, 5), (3, 2)] {
        let input = rcf(Some(2 * k), &[n2], &[3, 1]);
        let out = rcf_to_ocf(&input).unwrap();
        assert_eq!(out.leading, Some(d(2 * k + 1, -1)));
        assert_eq!(out.digit(0), Some(d(1, 1)));
        assert_eq!(cf_evaluate(&out).unwrap(), cf_evaluate(&input).unwrap());
    }
}

#[test]
fn ocf_identity_case() {
    let input = rcf(Some(3), &[5, 7], &[9, 11]);
    let out = rcf_to_ocf(&input).unwrap();
    assert_eq!(out.leading, Some(d(3, 1)));
    assert_eq!(out.preperiod, vec![d(5, 1), d(7, 1)]);
    assert_eq!(out.period, vec![d(9, 1), d(11, 1)]);
}

#[test]
fn ecf_examples() {
    let out = rcf_to_ecf(&rcf(None, &[], &[2])).unwrap();
    assert_eq!(out.period, vec![d(2, 1)]);
    assert!(out.preperiod.is_empty());
    // 2k-1 + 1/(1 + 1/(n3 + ...))
    let input = rcf(Some(3), &[1, 5], &[3]);
    let out = rcf_to_ecf(&input).unwrap();
    assert_eq!(out.leading, Some(d(4, -1)));
    assert_eq!(out.digit(0), Some(d(6, 1)));
    assert_eq!(cf_evaluate(&out).unwrap(), cf_evaluate(&input).unwrap());
    // run of (2,-1) of length n2 - 1
    let input = rcf(Some(3), &[4, 5, 6], &[]);
    let out = rcf_to_ecf(&input).unwrap();
    assert_eq!(out.leading, Some(d(4, -1)));
    assert_eq!(out.take(4), vec![d(2, -1), d(2, -1), d(2, -1), d(6, 1)]);
    assert_eq!(cf_evaluate(&out).unwrap(), cf_evaluate(&input).unwrap());
}

#[test]
fn gcf_golden() {
    let g = rcf_to_gcf(&rcf(None, &[], &[2, 1])).unwrap();
    assert_eq!(g.stream.take(2), vec![d(3, 1), d(3, -1)]);
    let g = rcf_to_gcf(&rcf(None, &[], &[2])).unwrap();
    assert_eq!(g.stream.take(3), vec![d(1, 1), d(1, 1), d(3, -1)]);
    let g = rcf_to_gcf(&rcf(None, &[3], &[])).unwrap();
    assert_eq!(g.stream.preperiod, vec![d(3, 1)]);
    assert!(g.stream.is_finite());
    assert!(!g.deep_lookback);
    // regrouping that needs to look past one group
    let g = rcf_to_gcf(&rcf(None, &[2, 1, 1, 3], &[])).unwrap();
    assert!(g.deep_lookback);
    assert_eq!(cf_evaluate(&g.stream).unwrap(), Q::from_ratio(7, 18));
    // tail equal to G - 1 is a branch endpoint
    assert!(matches!(rcf_to_gcf(&rcf(None, &[2], &[1])), Err(CfError::Boundary(_))));
    assert!(gcf_expand(&cf_evaluate(&rcf(None, &[2], &[1])).unwrap(), 256).is_err());
}

#[test]
fn rejects_bad_input() {
    assert!(rcf_to_ocf(&DigitStream::periodic(Kind::Ocf, vec![d(3, -1)])).is_err());
    assert!(rcf_to_ocf(&rcf(None, &[2, 1], &[])).is_err());
    assert!(matches!(rcf_to_ocf(&rcf(Some(2), &[], &[])), Err(CfError::Boundary(_))));
    assert!(rcf_to_gcf(&rcf(Some(1), &[], &[2])).is_err());
}

// a + eps/(1 + 1/(b + z)) = (a + eps) + (-eps)/(b + 1 + z), as integer matrices in z
#[test]
fn insertion_identity_matrices() {
    let add = |n: i64| Mat2::new(1, n, 0, 1);
    let inv = Mat2::new(0, 1, 1, 0);
    let scale = |e: i64| Mat2::new(e, 0, 0, 1);
    for a in 1..8i64 {
        for eps in [1i64, -1] {
            for b in 1..8i64 {
                let lhs = add(a) * scale(eps) * inv.clone() * add(1) * inv.clone() * add(b);
                let rhs = add(a + eps) * scale(-eps) * inv.clone() * add(b + 1);
                let neg = Mat2::new(-rhs.a.clone(), -rhs.b.clone(), -rhs.c.clone(), -rhs.d.clone());
                assert!(lhs == rhs || lhs == neg, "a={a} eps={eps} b={b}");
            }
        }
    }
}

fn rcf_stream() -> impl Strategy<Value = DigitStream> {
    (
        prop::option::of(1i64..9),
        prop::collection::vec(1i64..7, 0..5),
        prop::collection::vec(1i64..7, 0..4),
        2i64..9,
    )
        .prop_map(|(lead, pre, per, last)| {
            if per.is_empty() {
                let mut pre = pre;
                pre.push(last);
                rcf(lead, &pre, &[])
            } else {
                rcf(lead, &pre, &per)
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn forward_converters_preserve_value(input in rcf_stream()) {
        let x = cf_evaluate(&input).unwrap();
        for (kind, conv) in [(Kind::Ocf, rcf_to_ocf as fn(&DigitStream) -> Result<DigitStream, CfError>), (Kind::Ecf, rcf_to_ecf)] {
            match conv(&input) {
                Ok(out) => {
                    prop_assert!(out.check().is_ok());
                    prop_assert!(!out.truncated);
                    prop_assert_eq!(out.is_finite(), input.is_finite());
                    prop_assert_eq!(cf_evaluate(&out).unwrap(), x.clone());
                    prop_assert_eq!(expand(kind, &x, 256).unwrap(), out);
                }
                Err(CfError::Boundary(_)) => prop_assert!(expand(kind, &x, 256).is_err()),
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }

    #[test]
    fn gcf_converter_preserves_value(input in rcf_stream()) {
        let mut input = input;
        input.leading = None;
        input.normalize();
        let y = cf_evaluate(&input).unwrap();
        match rcf_to_gcf(&input) {
            Ok(out) => {
                prop_assert!(out.stream.check().is_ok());
                prop_assert_eq!(cf_evaluate(&out.stream).unwrap(), y.clone());
                prop_assert_eq!(gcf_expand(&y, 256).unwrap(), out.stream);
            }
            Err(CfError::Boundary(_)) => prop_assert!(gcf_expand(&y, 256).is_err()),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
