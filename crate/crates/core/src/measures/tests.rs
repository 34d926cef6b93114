use super::*;
use crate::formula::Vocabulary;
use crate::logic::WeightedFormula;
use crate::number::Weight;
use crate::parser::parse_formula;

struct Running {
    ctx: Context,
    e: ApproxArgument,
    d: Vec<ApproxArgument>,
}

fn arg(v: &Vocabulary, premises: &[(&str, &str)], claim: (&str, &str)) -> ApproxArgument {
    let wf = |(f, w): (&str, &str)| WeightedFormula::new(parse_formula(f, v).unwrap(), Weight::parse(w).unwrap());
    ApproxArgument::new(premises.iter().copied().map(wf).collect(), wf(claim))
}

fn running() -> Running {
    let v = Vocabulary::new(["w", "r", "p", "l", "h", "x"]).unwrap();
    let h = ("h", "0.7");
    Running {
        ctx: Context::new(v.len(), LogicConfig::default()).unwrap(),
        e: arg(&v, &[("w", "0.7"), ("r", "0.7"), ("p", "0.8"), ("l", "0.9")], h),
        d: vec![
            arg(&v, &[("r", "0.7"), ("!r | h", "0.8")], h),
            arg(&v, &[("p", "0.8"), ("l", "0.9"), ("!p | !l | h", "0.9")], h),
            arg(&v, &[("!r", "0.7"), ("w", "0.7"), ("!w | h", "0.8")], h),
            arg(&v, &[("r", "0.7"), ("!r | h", "0.8")], ("r & h & x", "0.7")),
        ],
    }
}

fn spec(id: &str, params: &[(&str, &str)]) -> MeasureSpec {
    let raw: RawParams = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    MeasureSpec::from_parts(MeasureKind::parse(id).unwrap(), &raw).unwrap()
}

fn score(r: &Running, m: &MeasureSpec, which: usize) -> Rational {
    m.evaluate(&r.ctx, &r.e, &r.d[which]).unwrap()
}

#[test]
fn coherence_values() {
    let r = running();
    assert_eq!(score(&r, &spec("coherence.divided.weak", &[]), 2), ratio(1, 2));
    assert_eq!(score(&r, &spec("coherence.divided.strong", &[]), 2), ratio(1, 1));
    assert_eq!(score(&r, &spec("coherence.divided.weak", &[]), 0), ratio(1, 1));
    assert_eq!(score(&r, &spec("coherence.penalty.weak", &[("p", "1")]), 2), ratio(0, 1));
    assert_eq!(score(&r, &spec("coherence.penalty.strong", &[("p", "1")]), 1), ratio(1, 1));
}

#[test]
fn three_cores_saturate_the_penalty() {
    let v = Vocabulary::new(["p", "q", "r"]).unwrap();
    let d = arg(
        &v,
        &[("p", "0.6"), ("!p", "0.6"), ("q", "0.6"), ("!q", "0.6"), ("r", "0.6"), ("!r", "0.6")],
        ("p", "0.6"),
    );
    let ctx = Context::new(3, LogicConfig::default()).unwrap();
    assert_eq!(inconsistency_count(&ctx, &d, &d, Scope::Strong).unwrap(), 3);
    let m = spec("coherence.penalty.strong", &[("p", "0.5")]);
    assert_eq!(m.evaluate(&ctx, &d, &d).unwrap(), ratio(0, 1));
}

#[test]
fn inference_values() {
    let r = running();
    for a in ["0", "1"] {
        assert_eq!(score(&r, &spec("inference.divided", &[("a", a)]), 3), ratio(7, 11));
        assert_eq!(score(&r, &spec("inference.penalty", &[("a", a), ("p", "0.1")]), 3), ratio(3, 5));
    }
    assert_eq!(score(&r, &spec("inference.divided", &[("a", "0")]), 1), ratio(0, 1));
    assert_eq!(score(&r, &spec("inference.divided", &[("a", "1")]), 1), ratio(1, 1));
    assert_eq!(score(&r, &spec("inference.penalty", &[("a", "0"), ("p", "0.1")]), 0), ratio(1, 1));
}

#[test]
fn minimality_values() {
    let r = running();
    assert_eq!(score(&r, &spec("minimality.divided", &[]), 2), ratio(1, 2));
    assert_eq!(score(&r, &spec("minimality.divided", &[]), 0), ratio(1, 1));
    assert_eq!(score(&r, &spec("minimality.penalty", &[("p", "1/4")]), 2), ratio(3, 4));
    assert_eq!(score(&r, &spec("minimality.penalty", &[("p", "1/4")]), 1), ratio(1, 1));
}

#[test]
fn similarity_values() {
    let r = running();
    let and = spec("similarity.tversky", &[("preset", "and")]);
    let ss2 = spec("similarity.tversky", &[("preset", "ss2")]);
    assert_eq!(score(&r, &and, 0), ratio(2, 3));
    assert_eq!(score(&r, &and, 1), ratio(16, 19));
    assert_eq!(score(&r, &ss2, 1), ratio(1, 4));
    assert_eq!(score(&r, &and, 2), ratio(8, 13));
    assert_eq!(score(&r, &ss2, 2), ratio(1, 11));
    let basic = spec("preservation.basic", &[]);
    for i in 0..3 {
        assert_eq!(score(&r, &basic, i), ratio(1, 1));
    }
}

#[test]
fn preservation_is_the_definitional_product() {
    let r = running();
    let and = spec("preservation.tversky", &[("preset", "and")]);
    let ss2 = spec("preservation.tversky", &[("preset", "ss2")]);
    assert_eq!(score(&r, &and, 0), ratio(2, 3));
    assert_eq!(score(&r, &and, 1), ratio(16, 19));
    assert_eq!(score(&r, &and, 2), ratio(8, 13));
    assert_eq!(score(&r, &ss2, 2), ratio(1, 11));
}

#[test]
fn granularity_values() {
    let r = running();
    assert_eq!(score(&r, &spec("granularity.concise.divided", &[]), 2), ratio(1, 3));
    assert_eq!(score(&r, &spec("granularity.detailed.divided", &[]), 2), ratio(2, 3));
    let cp = spec("granularity.concise.penalty", &[("s", "1"), ("p", "0.5")]);
    let dp = spec("granularity.detailed.penalty", &[("s", "1"), ("p", "0.5")]);
    assert_eq!(score(&r, &cp, 2), ratio(1, 2));
    assert_eq!(score(&r, &dp, 0), ratio(1, 1));
}

#[test]
fn stability_values() {
    let r = running();
    assert_eq!(score(&r, &spec("stability.strict", &[]), 1), ratio(9, 10));
    assert_eq!(score(&r, &spec("stability.lenient", &[("a", "0"), ("u", "0.3")]), 1), ratio(2, 3));
    assert_eq!(score(&r, &spec("stability.lenient", &[("a", "0"), ("u", "1/2")]), 1), ratio(4, 5));
}

#[test]
fn empty_premises_are_stable() {
    let v = Vocabulary::new(["p"]).unwrap();
    let d = arg(&v, &[], ("p", "0.2"));
    let ctx = Context::new(1, LogicConfig::default()).unwrap();
    assert_eq!(stability_strict(&ctx, &d), ratio(1, 1));
}

#[test]
fn parameter_validation() {
    let kind = |id| MeasureKind::parse(id).unwrap();
    let raw = |pairs: &[(&str, &str)]| -> RawParams {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    };
    assert!(MeasureSpec::from_parts(kind("coherence.penalty.weak"), &raw(&[("p", "0")])).is_err());
    assert!(MeasureSpec::from_parts(kind("coherence.penalty.weak"), &raw(&[])).is_err());
    assert!(MeasureSpec::from_parts(kind("inference.divided"), &raw(&[("a", "1.5")])).is_err());
    assert!(MeasureSpec::from_parts(kind("stability.lenient"), &raw(&[("a", "0.5"), ("u", "0.5")])).is_err());
    assert!(MeasureSpec::from_parts(kind("granularity.detailed.penalty"), &raw(&[("s", "0"), ("p", "1")])).is_err());
    assert!(MeasureSpec::from_parts(kind("similarity.tversky"), &raw(&[("preset", "xyz")])).is_err());
    assert!(MeasureSpec::from_parts(kind("similarity.tversky"), &raw(&[("x", "0"), ("y", "1")])).is_err());
    assert!(MeasureSpec::from_parts(kind("minimality.divided"), &raw(&[("p", "1")])).is_err());
    assert!(MeasureKind::parse("nope").is_err());
}

#[test]
fn params_round_trip() {
    let specs = [
        spec("inference.penalty", &[("a", "1"), ("p", "0.1")]),
        spec("similarity.tversky", &[("preset", "dic")]),
        spec("similarity.tversky", &[("x", "0.3"), ("y", "2")]),
        spec("granularity.concise.penalty", &[("s", "2"), ("p", "1/3")]),
        spec("stability.lenient", &[("a", "0"), ("u", "0.3")]),
    ];
    for s in specs {
        let again = MeasureSpec::from_parts(s.kind(), &s.params()).unwrap();
        assert_eq!(again, s);
    }
    assert_eq!(spec("inference.penalty", &[("a", "1"), ("p", "0.1")]).label(), "ppi(a=1,p=1/10)");
    assert_eq!(spec("similarity.tversky", &[("x", "1/8"), ("y", "0.125")]).label(), "cmtve(and)");
}
