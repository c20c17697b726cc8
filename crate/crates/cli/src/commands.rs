use cutseq_cf::{cf_evaluate, expand, rcf_expand, DigitStream, Kind, SignedDigit, DEFAULT_MAX_DEPTH};
use cutseq_convert::{rcf_to_ecf, rcf_to_gcf, rcf_to_ocf};
use cutseq_dynamics::real::{decimal, real};
use cutseq_dynamics::{
    birkhoff_average, check_invariance, closed_length, equivalent, measure_mass, purely_periodic, Equivalence, Group,
    MapName, MeasureName, MeasureSpec, Region, Seed,
};
use cutseq_exact::{
    classify_subgroup, cusp_class_gamma, cusp_class_theta, parse_matrix, parse_point, parse_surd, CuspWitness,
    QuadraticSurd as Q, UnimodularMatrix,
};
use cutseq_geodesic::{
    cutting_sequence, lift_to_section, parse_cutting_sequence, parse_word, word_ascii, word_string, Direction,
    OrientedGeodesic, Parity, Segment,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{CaseArg, Command, DirectionArg, GroupArg, Output, StreamArgs};
use crate::render::{render, Window};
use crate::{precision, CliError, Outcome};

const SEED_DIGITS: usize = 100;
/// Significant digits in `approx` fields.
const APPROX_DIGITS: usize = 40;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn kind(s: &str) -> Result<Kind, CliError> {
    Ok(s.parse::<Kind>()?)
}

fn surd(s: &str) -> Result<Q, CliError> {
    Ok(parse_surd(s)?)
}

fn parity(c: CaseArg) -> Parity {
    match c {
        CaseArg::Odd => Parity::Odd,
        CaseArg::Even => Parity::Even,
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Odd => "odd",
        Parity::Even => "even",
    }
}

fn digit(v: &Value) -> Result<SignedDigit, CliError> {
    let bad = || invalid(format!("bad digit {v}: expected [a, eps] or {{\"a\": a, \"eps\": eps}}"));
    let (a, e) = match v {
        Value::Array(xs) if xs.len() == 2 => (xs[0].as_i64(), xs[1].as_i64()),
        Value::Object(m) => (m.get("a").and_then(Value::as_i64), m.get("eps").and_then(Value::as_i64)),
        _ => return Err(bad()),
    };
    match (a, e) {
        (Some(a), Some(e)) if e == 1 || e == -1 => Ok(SignedDigit::new(a, e as i8)),
        _ => Err(bad()),
    }
}

fn digits_value(v: &Value) -> Result<Vec<SignedDigit>, CliError> {
    v.as_array().ok_or_else(|| invalid(format!("expected a list of digits, got {v}")))?.iter().map(digit).collect()
}

fn digits(s: &str) -> Result<Vec<SignedDigit>, CliError> {
    let v: Value = serde_json::from_str(s).map_err(|e| invalid(format!("bad digit list {s:?}: {e}")))?;
    digits_value(&v)
}

fn stream(a: &StreamArgs) -> Result<DigitStream, CliError> {
    let (k, sign, leading, pre, per) = if let Some(s) = &a.stream {
        let v: Value = serde_json::from_str(s).map_err(|e| invalid(format!("bad stream: {e}")))?;
        let k = v.get("kind").and_then(Value::as_str).ok_or_else(|| invalid("stream needs a \"kind\""))?;
        let sign = v.get("sign").and_then(Value::as_i64).unwrap_or(1);
        let leading = match v.get("leading") {
            None | Some(Value::Null) => None,
            Some(d) => Some(digit(d)?),
        };
        let list = |key: &str| v.get(key).map_or(Ok(Vec::new()), digits_value);
        (kind(k)?, sign, leading, list("preperiod")?, list("period")?)
    } else {
        let k = a.kind.as_deref().ok_or_else(|| invalid("give --stream or --kind"))?;
        let leading = a.leading.as_deref().map(|s| serde_json::from_str(s).map_err(|e| invalid(e.to_string()))).transpose()?;
        let leading = leading.as_ref().map(digit).transpose()?;
        let list = |o: &Option<String>| o.as_deref().map_or(Ok(Vec::new()), digits);
        (kind(k)?, a.sign.unwrap_or(1) as i64, leading, list(&a.preperiod)?, list(&a.period)?)
    };
    if sign != 1 && sign != -1 {
        return Err(invalid("sign must be +1 or -1"));
    }
    let s = DigitStream::new(k, leading, pre, per).with_sign(sign as i8);
    s.check()?;
    Ok(s)
}

fn stream_json(s: &DigitStream) -> Value {
    serde_json::to_value(s).expect("streams serialize")
}

fn approx(x: &Q, digits: usize) -> String {
    decimal(&real(x, digits.max(APPROX_DIGITS) + 10), APPROX_DIGITS.min(digits))
}

fn value_json(x: &Q, prec: usize) -> Value {
    json!({ "exact": x.to_string(), "approx": approx(x, prec) })
}

fn matrix_json(m: &UnimodularMatrix) -> Value {
    let c = classify_subgroup(m);
    json!({
        "matrix": m.to_string(),
        "gamma_odd": c.gamma_odd,
        "theta": c.theta,
    })
}

fn geodesic_json(g: &OrientedGeodesic) -> Value {
    json!({ "forward": g.forward.to_string(), "backward": g.backward.to_string() })
}

fn segment_json(s: &Segment) -> Value {
    json!({
        "tag": s.tag.case.to_string(),
        "k": s.tag.k,
        "word": word_string(&s.word),
        "ascii": word_ascii(&s.word),
        "digit": s.digit,
    })
}

fn geodesic(forward: &str, backward: &str) -> Result<OrientedGeodesic, CliError> {
    Ok(OrientedGeodesic::new(surd(forward)?, surd(backward)?)?)
}

fn interval(s: &str) -> Result<(Q, Q), CliError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| invalid(format!("expected [a,b], got {s:?}")))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| invalid(format!("expected [a,b], got {s:?}")))?;
    let (a, b) = (surd(a)?, surd(b)?);
    if a >= b {
        return Err(invalid(format!("empty interval {s:?}")));
    }
    Ok((a, b))
}

fn region(s: &str) -> Result<Region, CliError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match t.split_once("]x[") {
        Some((x, y)) => Ok(Region::rectangle(interval(&format!("{x}]"))?, interval(&format!("[{y}"))?)),
        None => {
            let (a, b) = interval(&t)?;
            Ok(Region::interval(a, b))
        }
    }
}

fn map_name(s: &str) -> Result<MapName, CliError> {
    s.parse::<MapName>().map_err(|e| invalid(e.to_string()))
}

fn measure_name(s: &str) -> Result<MeasureName, CliError> {
    s.parse::<MeasureName>().map_err(|e| invalid(e.to_string()))
}

fn cusp_json(w: Result<CuspWitness, cutseq_exact::ExactError>) -> Result<Value, CliError> {
    let w = w?;
    Ok(json!({ "class": format!("{:?}", w.class), "witness": w.witness.to_string() }))
}

/// The 100-digit decimal in (0, 1) drawn from `seed`.
pub fn seed_decimal(seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = String::from("0.");
    for i in 0..SEED_DIGITS {
        // a last digit of 0 would shorten the decimal
        let d = if i + 1 == SEED_DIGITS { rng.gen_range(1..10) } else { rng.gen_range(0..10) };
        s.push(char::from(b'0' + d as u8));
    }
    s
}

pub fn dispatch(cmd: Command, output: Output) -> Result<Outcome, CliError> {
    let prec = precision()?;
    if output == Output::Svg && !matches!(cmd, Command::Render { .. } | Command::Code { .. }) {
        return Err(invalid("--output svg is available for render and code only"));
    }
    let mut o = Outcome::default();
    match cmd {
        Command::Expand { kind: k, value, depth } => {
            let (k, x) = (kind(&k)?, surd(&value)?);
            let s = expand(k, &x, depth)?;
            if s.truncated {
                o.diagnostics.push(format!("expansion truncated after {depth} digits"));
            }
            o.inputs = json!({ "kind": k, "value": x.to_string(), "depth": depth });
            o.outputs = json!({ "stream": stream_json(&s), "value": value_json(&x, prec) });
        }
        Command::Evaluate(a) => {
            let s = stream(&a)?;
            let x = cf_evaluate(&s)?;
            o.inputs = json!({ "stream": stream_json(&s) });
            o.outputs = value_json(&x, prec);
        }
        Command::Convert { from, to, stream: a, value } => {
            if kind(&from)? != Kind::Rcf {
                return Err(invalid(format!("conversion reads regular expansions, not {from}")));
            }
            let input = match (&value, &a.stream, &a.kind) {
                (Some(v), None, None) => rcf_expand(&surd(v)?, DEFAULT_MAX_DEPTH)?,
                (None, _, _) => stream(&a)?,
                _ => return Err(invalid("give either --value or a stream")),
            };
            let to = kind(&to)?;
            let (out, lookback) = match to {
                Kind::Ocf => (rcf_to_ocf(&input)?, None),
                Kind::Ecf => (rcf_to_ecf(&input)?, None),
                Kind::Gcf => {
                    let c = rcf_to_gcf(&input)?;
                    (c.stream, Some(json!({ "max_lookback": c.max_lookback, "deep_lookback": c.deep_lookback })))
                }
                other => return Err(invalid(format!("no converter to {other}"))),
            };
            if out.truncated {
                o.diagnostics.push("output truncated before its period closed".into());
            }
            o.inputs = json!({ "from": "rcf", "to": to, "stream": stream_json(&input) });
            o.outputs = json!({ "stream": stream_json(&out) });
            if let Some(l) = lookback {
                o.outputs["lookback"] = l;
            }
            if !out.truncated {
                o.outputs["value"] = value_json(&cf_evaluate(&out)?, prec);
            }
        }
        Command::Code { case, forward, backward, segments } => {
            let p = parity(case);
            let g = geodesic(&forward, &backward)?;
            let c = cutting_sequence(&g, segments, p)?;
            o.inputs = json!({ "case": parity_name(p), "geodesic": geodesic_json(&g), "segments": segments });
            o.outputs = json!({
                "lift": matrix_json(&c.lift),
                "section_geodesic": geodesic_json(&c.geodesic),
                "backward": c.backward.iter().map(segment_json).collect::<Vec<_>>(),
                "forward": c.forward.iter().map(segment_json).collect::<Vec<_>>(),
                "backward_word": word_string(&c.backward_letters()),
                "forward_word": word_string(&c.forward_letters()),
                "forward_ascii": word_ascii(&c.forward_letters()),
                "backward_ascii": word_ascii(&c.backward_letters()),
                "shade_convention": cutseq_geodesic::SHADE_CONVENTION,
            });
            if output == Output::Svg {
                let n = c.forward_letters().len().min(24);
                let r = render(&Window { x0: -1.5, x1: 1.5, ymax: 1.6 }, 3, Some((&c.geodesic, p, n))).map_err(invalid)?;
                o.svg = Some(r.svg);
            }
        }
        Command::Parse { case, word, direction, sign } => {
            let p = parity(case);
            if sign.is_some_and(|s| s != 1 && s != -1) {
                return Err(invalid("sign must be +1 or -1"));
            }
            let letters = parse_word(&word, p)?;
            let dir = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Backward => Direction::Backward,
            };
            let r = parse_cutting_sequence(&letters, dir, p, sign)?;
            if r.ambiguous {
                o.diagnostics.push(format!("stopped at an ambiguous split with {} letters unread", r.unparsed));
            } else if r.unparsed > 0 {
                o.diagnostics.push(format!("{} letters form a partial return", r.unparsed));
            }
            o.inputs = json!({ "case": parity_name(p), "word": word_string(&letters), "direction": dir, "sign": sign });
            o.outputs = json!({
                "stream": stream_json(&r.stream),
                "segments": r.segments.iter().map(segment_json).collect::<Vec<_>>(),
                "sign": r.sign,
                "unparsed": r.unparsed,
                "ambiguous": r.ambiguous,
            });
        }
        Command::Lift { case, forward, backward, depth } => {
            let p = parity(case);
            let g = geodesic(&forward, &backward)?;
            let (m, h) = lift_to_section(&g, p, depth)?;
            o.inputs = json!({ "case": parity_name(p), "geodesic": geodesic_json(&g), "depth": depth });
            o.outputs = json!({ "lift": matrix_json(&m), "section_geodesic": geodesic_json(&h) });
        }
        Command::Length { kind: k, period } => {
            let (k, per) = (kind(&k)?, digits(&period)?);
            let r = closed_length(&per, k, prec)?;
            if !r.agree {
                o.diagnostics.push("derivative product and trace disagree".into());
            }
            if !r.shift_product_agrees {
                o.diagnostics.push("cyclic-shift product disagrees with the trace".into());
            }
            if r.primitive_exponent > 1 {
                o.diagnostics.push(format!("period is a {}-th power of a shorter closed geodesic", r.primitive_exponent));
            }
            o.inputs = json!({ "kind": k, "period": per });
            o.outputs = serde_json::to_value(&r).expect("reports serialize");
        }
        Command::Equiv { alpha, beta, group, bound } => {
            let (a, b) = (surd(&alpha)?, surd(&beta)?);
            let g = match group {
                GroupArg::GammaOdd => Group::GammaOdd,
                GroupArg::Theta => Group::Theta,
            };
            let r = equivalent(&a, &b, g, bound)?;
            if let Equivalence::NotWithinBound { bound_alpha, bound_beta } = &r {
                o.inconclusive = true;
                o.diagnostics.push(format!("no common tail within depths {bound_alpha} and {bound_beta}"));
            }
            o.inputs = json!({ "alpha": a.to_string(), "beta": b.to_string(), "group": g, "bound": bound });
            o.outputs = serde_json::to_value(&r).expect("reports serialize");
        }
        Command::Periodic { kind: k, value } => {
            let (k, x) = (kind(&k)?, surd(&value)?);
            let r = purely_periodic(&x, k)?;
            o.inputs = json!({ "kind": k, "value": x.to_string() });
            o.outputs = serde_json::to_value(&r).expect("reports serialize");
        }
        Command::MeasureCheck { measure, map, region: reg, normalized, tolerance } => {
            let map = map.as_deref().map(map_name).transpose()?;
            let m = match (&measure, map) {
                (Some(m), _) => measure_name(m)?,
                (None, Some(t)) => t.invariant_measure(),
                (None, None) => return Err(invalid("give --measure, --map or both")),
            };
            let spec = if normalized { MeasureSpec::normalized(m) } else { MeasureSpec::new(m) };
            let r = region(&reg)?;
            let mass = measure_mass(spec, &r, prec)?;
            o.inputs = json!({ "measure": m, "normalized": normalized, "map": map, "region": r.to_string(), "tolerance": tolerance, "precision": prec });
            o.outputs = json!({ "mass": decimal(&mass, prec) });
            if let Some(t) = map {
                let rep = check_invariance(spec, t, &r, tolerance, prec)?;
                if !rep.pass {
                    o.diagnostics.push(format!("difference {:e} exceeds tolerance {:e}", rep.difference, tolerance));
                }
                o.outputs["invariance"] = serde_json::to_value(&rep).expect("reports serialize");
            }
        }
        Command::Birkhoff { map, interval: iv, steps, seed } => {
            let t = map_name(&map)?;
            let (lo, hi) = interval(&iv)?;
            let start = seed_decimal(seed);
            let r = birkhoff_average(t, &lo, &hi, &Seed::Decimal(start.clone()), steps)?;
            let m = MeasureSpec::normalized(t.invariant_measure());
            let reference = cutseq_dynamics::real::to_f64(&measure_mass(m, &Region::interval(lo.clone(), hi.clone()), 40)?);
            o.inputs = json!({ "map": t, "interval": format!("[{lo},{hi}]"), "steps": steps, "seed": seed });
            o.outputs = serde_json::to_value(&r).expect("reports serialize");
            o.outputs["start"] = json!(start);
            o.outputs["reference"] = json!(reference);
            o.outputs["deviation"] = json!((r.average - reference).abs());
        }
        Command::Render { case, forward, backward, window, depth, letters } => {
            let p = parity(case);
            let w = Window::parse(&window).map_err(invalid)?;
            if depth > 12 || (w.x1 - w.x0) * f64::from(1u32 << depth) > 65536.0 {
                return Err(invalid("window too wide for this depth"));
            }
            let lifted = match (forward, backward) {
                (Some(f), Some(b)) => {
                    let g = geodesic(&f, &b)?;
                    let (m, h) = lift_to_section(&g, p, cutseq_geodesic::DEFAULT_LIFT_DEPTH)?;
                    Some((g, m, h))
                }
                _ => None,
            };
            let r = render(&w, depth, lifted.as_ref().map(|(_, _, h)| (h, p, letters))).map_err(invalid)?;
            o.inputs = json!({ "case": parity_name(p), "window": [w.x0, w.x1, w.ymax], "depth": depth,
                "geodesic": lifted.as_ref().map(|(g, _, _)| geodesic_json(g)) });
            o.outputs = json!({
                "section_geodesic": lifted.as_ref().map(|(_, _, h)| geodesic_json(h)),
                "lift": lifted.as_ref().map(|(_, m, _)| matrix_json(m)),
                "letters": word_string(&r.letters),
                "svg": r.svg,
            });
            o.svg = Some(r.svg);
        }
        Command::Classify { matrix, point } => {
            if matrix.is_none() && point.is_none() {
                return Err(invalid("give --matrix or --point"));
            }
            o.inputs = json!({});
            o.outputs = json!({});
            if let Some(s) = matrix {
                let m = parse_matrix(&s)?;
                let c = classify_subgroup(&m);
                o.inputs["matrix"] = json!(m.to_string());
                o.outputs["full_modular"] = json!(c.full_modular);
                o.outputs["gamma_odd"] = json!(c.gamma_odd);
                o.outputs["theta"] = json!(c.theta);
            }
            if let Some(s) = point {
                let x = parse_point(&s)?;
                if x.finite().is_some_and(|q| !q.is_rational()) {
                    return Err(invalid("cusps are rational points or inf"));
                }
                o.inputs["point"] = json!(x.to_string());
                o.outputs["cusp_gamma_odd"] = cusp_json(cusp_class_gamma(&x))?;
                o.outputs["cusp_theta"] = cusp_json(cusp_class_theta(&x))?;
            }
        }
        Command::Batch => return Err(invalid("batch requests cannot nest")),
    }
    Ok(o)
}
