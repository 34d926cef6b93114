//! Acceptance run: one PASS or FAIL line per criterion, non-zero exit on any FAIL.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use enthymeme::closure::{flat_finite_cn, minimal_inconsistent_subsets, ClosureScope};
use enthymeme::measures::{Detail, Tversky, TverskyPreset};
use enthymeme::normal::{canonical_cnf, canonical_dnf, decompose_one, maxterms, merge_clauses_with, Clause};
use enthymeme::number::{int, rational_decimal, ratio};
use enthymeme::problem::Problem;
use enthymeme::quality::{quality, rank, Preset};
use enthymeme::semantics::ModelSet;
use enthymeme::{
    parse_formula, Aggregator, ApproxArgument, Context, Formula, Literal, LogicConfig, MeasureKind, MeasureSpec,
    QualityConfig, Rational, Vocabulary, WLog, Weight, WeightedFormula, WeightedLogic, WeightedSet,
};
use enthymeme_axioms::check::{argument_check, check_matrix, shipped_candidates, CheckConfig};
use enthymeme_axioms::{generate_instance, instance_seed, AxiomId, Shape};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

struct Running {
    vocab: Vocabulary,
    ctx: Context,
    e: ApproxArgument,
    d: Vec<ApproxArgument>,
}

fn running() -> Running {
    let p = Problem::from_json(include_str!("../../../data/running.json")).expect("running example parses");
    let ctx = p.context(LogicConfig::default()).unwrap();
    let mut d: Vec<ApproxArgument> = p.decodings.iter().map(|(_, d)| d.clone()).collect();
    let claim = WeightedFormula::new(parse_formula("r & h & x", &p.vocabulary).unwrap(), Weight::parse("0.7").unwrap());
    d.push(ApproxArgument::new(d[0].premises.clone(), claim));
    Running {
        vocab: p.vocabulary,
        ctx,
        e: p.enthymeme,
        d,
    }
}

fn spec(id: &str, params: &[(&str, &str)]) -> MeasureSpec {
    let raw = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    MeasureSpec::from_parts(MeasureKind::parse(id).unwrap(), &raw).unwrap()
}

fn criterion_1() -> Outcome {
    let r = running();
    let cases: Vec<(&str, &[(&str, &str)], usize, Rational)> = vec![
        ("coherence.divided.weak", &[], 3, ratio(1, 2)),
        ("coherence.penalty.weak", &[("p", "1")], 3, int(0)),
        ("inference.divided", &[("a", "0")], 4, ratio(7, 11)),
        ("inference.penalty", &[("a", "0"), ("p", "0.1")], 4, ratio(3, 5)),
        ("minimality.divided", &[], 3, ratio(1, 2)),
        ("minimality.penalty", &[("p", "1/4")], 3, ratio(3, 4)),
        ("similarity.tversky", &[("preset", "and")], 1, ratio(2, 3)),
        ("similarity.tversky", &[("preset", "and")], 2, ratio(16, 19)),
        ("similarity.tversky", &[("preset", "ss2")], 2, ratio(1, 4)),
        ("similarity.tversky", &[("preset", "and")], 3, ratio(8, 13)),
        ("similarity.tversky", &[("preset", "ss2")], 3, ratio(1, 11)),
        ("preservation.basic", &[], 1, int(1)),
        ("preservation.basic", &[], 2, int(1)),
        ("preservation.basic", &[], 3, int(1)),
        ("granularity.concise.divided", &[], 3, ratio(1, 3)),
        ("granularity.concise.penalty", &[("s", "1"), ("p", "1/2")], 3, ratio(1, 2)),
        ("granularity.detailed.divided", &[], 3, ratio(2, 3)),
        ("stability.strict", &[], 2, ratio(9, 10)),
        ("stability.lenient", &[("a", "0"), ("u", "3/10")], 2, ratio(2, 3)),
        ("stability.lenient", &[("a", "0"), ("u", "1/2")], 2, ratio(4, 5)),
    ];
    for (id, params, which, want) in &cases {
        let m = spec(id, params);
        let got = m.evaluate(&r.ctx, &r.e, &r.d[which - 1]).map_err(|e| e.to_string())?;
        check(got == *want, || format!("{} on D{which}: got {got}, want {want}", m.label()))?;
    }
    Ok(format!("{} exact values", cases.len()))
}

fn criterion_2() -> Outcome {
    let r = running();
    let decodings: Vec<(String, ApproxArgument)> =
        r.d[..3].iter().enumerate().map(|(i, d)| (format!("D{}", i + 1), d.clone())).collect();
    let close = |got: &Rational, want: f64| {
        let g: f64 = rational_decimal(got, 6).parse().unwrap();
        (g - want).abs() <= 5e-4
    };
    let tables = [
        (Preset::Ld, Aggregator::Average, [0.952, 0.949, 0.909], ["D1", "D2", "D3"]),
        (Preset::Ld, Aggregator::Product, [0.667, 0.674, 0.462], ["D2", "D1", "D3"]),
        (Preset::Sd, Aggregator::Average, [0.802, 0.664, 0.608], ["D1", "D2", "D3"]),
        (Preset::Sd, Aggregator::Product, [0.056, 0.0, 0.0], ["D1", "D2", "D3"]),
    ];
    for (preset, agg, values, order) in tables {
        let cfg = QualityConfig::preset(preset, agg);
        let ranking = rank(&r.ctx, &r.e, &decodings, &cfg);
        for (i, want) in values.iter().enumerate() {
            let got = ranking.aggregate(i).ok_or("candidate failed")?;
            check(close(got, *want), || format!("{preset:?}/{agg:?} D{}: {got} vs {want}", i + 1))?;
        }
        let ids: Vec<&str> = ranking.order.iter().map(|&i| ranking.candidates[i].id.as_str()).collect();
        if preset == Preset::Sd {
            check(ids[0] == "D1", || format!("{preset:?}/{agg:?} leader {}", ids[0]))?;
        } else {
            check(ids == order, || format!("{preset:?}/{agg:?} order {ids:?}"))?;
        }
    }
    let mut cfg = QualityConfig::preset(Preset::Sd, Aggregator::Product);
    cfg.threshold = Some(ratio(1, 2));
    let ranking = rank(&r.ctx, &r.e, &decodings, &cfg);
    check(ranking.selected.is_empty(), || "threshold 0.5 selected candidates".into())?;
    Ok("4 tables, orders and empty selection".into())
}

fn criterion_3() -> Outcome {
    let v = Vocabulary::new(["p", "q", "r"]).unwrap();
    let f = |s: &str| parse_formula(s, &v).unwrap();
    let dnf = canonical_dnf(&f("!p"), 3).display(&v).to_string();
    check(
        dnf == "(¬p ∧ q ∧ r) ∨ (¬p ∧ q ∧ ¬r) ∨ (¬p ∧ ¬q ∧ r) ∨ (¬p ∧ ¬q ∧ ¬r)",
        || format!("Dnf(¬p) = {dnf}"),
    )?;
    // ¬Dnf(¬p) in clause form is the four maxterms holding p.
    let negated = maxterms(&ModelSet::of_formula(&f("p"), 3));
    let shown: Vec<String> = negated.iter().map(|c| c.display(&v).to_string()).collect();
    check(
        shown == ["p ∨ q ∨ r", "p ∨ q ∨ ¬r", "p ∨ ¬q ∨ r", "p ∨ ¬q ∨ ¬r"],
        || format!("maxterms {shown:?}"),
    )?;
    let reduced = merge_clauses_with(negated, |_| 0);
    check(reduced == BTreeSet::from([Clause::unit(Literal::pos(0))]), || format!("reduction {reduced:?}"))?;
    let cnf: Vec<String> = canonical_cnf(&f("!(p -> q | !r)"), 3).iter().map(|c| c.display(&v).to_string()).collect();
    check(cnf == ["p", "¬q", "r"], || format!("Cnf = {cnf:?}"))?;
    let wf = WeightedFormula::new(f("!(p -> q | !r)"), Weight::parse("0.6").unwrap());
    let dn: Vec<String> = decompose_one(&wf, 3).iter().map(|c| c.display(&v).to_string()).collect();
    check(dn == ["⟨p, 0.6⟩", "⟨¬q, 0.6⟩", "⟨r, 0.6⟩"], || format!("Dn = {dn:?}"))?;
    Ok("Dnf, reduction, Cnf and Dn goldens".into())
}

fn clause_formula(lits: &[Literal]) -> Formula {
    if lits.is_empty() {
        Formula::False
    } else {
        Formula::disjunction(lits.iter().map(|l| l.to_formula()))
    }
}

/// Entailed non-tautological clauses over the premises' literals, by direct
/// evaluation of every assignment.
fn closure_oracle(premises: &[Formula], atoms: usize) -> BTreeSet<Clause> {
    if premises.is_empty() {
        return BTreeSet::new();
    }
    let lits: Vec<Literal> = premises
        .iter()
        .flat_map(|f| f.literals())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let assignments: Vec<Vec<bool>> = (0..1usize << atoms)
        .map(|row| (0..atoms).map(|a| row >> a & 1 == 1).collect())
        .filter(|asg: &Vec<bool>| premises.iter().all(|f| f.eval(asg)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0..1u32 << lits.len() {
        let chosen: Vec<Literal> = (0..lits.len()).filter(|i| mask >> i & 1 == 1).map(|i| lits[i]).collect();
        let Some(clause) = Clause::new(chosen.iter().copied()) else { continue };
        if clause.len() != chosen.len() {
            continue;
        }
        let satisfied = |asg: &Vec<bool>| chosen.iter().any(|l| asg[l.atom] != l.negated);
        if assignments.iter().all(satisfied) {
            out.insert(clause);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut compared = 0usize;
    for atoms in 1..=3 {
        let logic = WLog::new(atoms, LogicConfig::default()).unwrap();
        let mut clauses: Vec<Vec<Literal>> = vec![Vec::new()];
        for a in 0..atoms {
            let mut next = Vec::new();
            for c in &clauses {
                next.push(c.clone());
                next.push([c.clone(), vec![Literal::pos(a)]].concat());
                next.push([c.clone(), vec![Literal::neg(a)]].concat());
            }
            clauses = next;
        }
        let formulas: Vec<Formula> = clauses.iter().map(|c| clause_formula(c)).collect();
        let n = formulas.len();
        let mut sets: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..n {
            sets.push(vec![i]);
            for j in i + 1..n {
                sets.push(vec![i, j]);
                for k in j + 1..n {
                    sets.push(vec![i, j, k]);
                }
            }
        }
        for set in sets {
            let fs: Vec<Formula> = set.iter().map(|&i| formulas[i].clone()).collect();
            let premises: WeightedSet = fs.iter().map(|f| WeightedFormula::new(f.clone(), Weight::ONE)).collect();
            let got = flat_finite_cn(&logic, &premises, ClosureScope::WholeSet).map_err(|e| e.to_string())?;
            let want = closure_oracle(&fs, atoms);
            check(got == want, || format!("mismatch on {fs:?}"))?;
            compared += 1;
        }
    }
    let r = running();
    let show = |set: &WeightedSet| -> Result<BTreeSet<String>, String> {
        let cn = flat_finite_cn(&r.ctx.logic, set, ClosureScope::WholeSet).map_err(|e| e.to_string())?;
        Ok(cn.iter().map(|c| c.display(&r.vocab).to_string()).collect())
    };
    let strings = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<String>>();
    let one = |wf: &WeightedFormula| std::iter::once(wf.clone()).collect::<WeightedSet>();
    check(show(&r.d[0].premises)? == strings(&["r", "¬r ∨ h", "h", "r ∨ h"]), || "fCN(Δ)".into())?;
    check(show(&one(&r.e.claim))? == strings(&["h"]), || "fCN(α)".into())?;
    check(
        show(&one(&r.d[3].claim))? == strings(&["r", "h", "x", "r ∨ h", "r ∨ x", "h ∨ x", "r ∨ h ∨ x"]),
        || "fCN(β)".into(),
    )?;
    Ok(format!("{compared} premise sets match the oracle, example closures exact"))
}

fn random_formula(rng: &mut ChaCha8Rng, atoms: usize) -> Formula {
    let lit = |rng: &mut ChaCha8Rng| {
        let a = rng.gen_range(0..atoms);
        if rng.gen_bool(0.5) {
            Literal::pos(a).to_formula()
        } else {
            Literal::neg(a).to_formula()
        }
    };
    match rng.gen_range(0..10) {
        0..=4 => lit(rng),
        5..=7 => {
            let (l, r) = (lit(rng), lit(rng));
            Formula::or(l, r)
        }
        8 => {
            let (l, r) = (lit(rng), lit(rng));
            Formula::and(l, r)
        }
        _ => Formula::False,
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut gated = 0;
    for _ in 0..500 {
        let atoms = rng.gen_range(1..=4);
        let logic = WLog::new(atoms, LogicConfig::default()).unwrap();
        let n = rng.gen_range(0..=6);
        let premises: WeightedSet = (0..n)
            .map(|_| WeightedFormula::new(random_formula(&mut rng, atoms), Weight::tenths(rng.gen_range(0..=10))))
            .collect();
        let got = minimal_inconsistent_subsets(&logic, &premises).map_err(|e| e.to_string())?;
        let k = premises.len();
        let inconsistent: Vec<u64> = (0..1u64 << k).filter(|&m| logic.is_inconsistent(&premises.select(m))).collect();
        let want: Vec<WeightedSet> = inconsistent
            .iter()
            .filter(|&&m| !inconsistent.iter().any(|&o| o != m && o & m == o))
            .map(|&m| premises.select(m))
            .collect();
        let as_set = |v: &[WeightedSet]| v.iter().map(|s| format!("{s:?}")).collect::<BTreeSet<String>>();
        check(as_set(&got) == as_set(&want), || format!("mismatch on {premises:?}"))?;
        let unsat_cores = (0..1u64 << k)
            .filter(|&m| logic.models_of_set(&premises.select(m)).is_empty())
            .count();
        if unsat_cores > 0 && want.len() < unsat_cores {
            gated += 1;
        }
    }
    check(gated > 0, || "no threshold-filtered case generated".into())?;
    Ok(format!("500 random sets agree, {gated} with threshold-filtered subsets"))
}

fn criterion_6() -> Outcome {
    let cfg = CheckConfig {
        samples: 1000,
        seed: 0,
        ..CheckConfig::default()
    };
    let report = check_matrix(&shipped_candidates(), &cfg);
    println!("{}", report.to_text());
    let marked: Vec<_> = report.marked().collect();
    let failing: Vec<String> = report
        .marked_failures()
        .map(|c| format!("{} / {}", c.measure, c.verdict.axiom.short()))
        .collect();
    let thin: Vec<String> = marked
        .iter()
        .filter(|c| c.verdict.exercised < 50)
        .map(|c| format!("{} / {} ({} exercised)", c.measure, c.verdict.axiom.short(), c.verdict.exercised))
        .collect();
    let args = argument_check(200, &cfg).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    if !failing.is_empty() {
        problems.push(format!("{} of {} marked cells have counterexamples", failing.len(), marked.len()));
    }
    if !thin.is_empty() {
        problems.push(format!("{} marked cells below 50 exercised samples: {}", thin.len(), thin.join("; ")));
    }
    if !args.passed(200) {
        let which: Vec<String> = args.failures.iter().map(|f| format!("{} ({} of {})", f.measure, f.failures, args.arguments)).collect();
        problems.push(format!("argument check: {}", if which.is_empty() { "too few arguments".into() } else { which.join(", ") }));
    }
    if !report.meta.is_empty() {
        println!("implication findings between verdicts: {}", report.meta.len());
    }
    if problems.is_empty() {
        Ok(format!("{} marked cells clean, argument check clean on {} arguments", marked.len(), args.arguments))
    } else {
        Err(problems.join(" | "))
    }
}

fn fuzzed(count: usize, stream: u64) -> Vec<(Context, ApproxArgument, ApproxArgument)> {
    let axioms = AxiomId::ALL;
    (0..count)
        .map(|i| {
            let axiom = axioms[i % axioms.len()];
            let inst = generate_instance(axiom, instance_seed(stream, axiom, i as u64), Shape::default()).unwrap();
            (inst.context(), inst.e, inst.d)
        })
        .collect()
}

fn criterion_7() -> Outcome {
    let instances = fuzzed(1200, 7);
    let chain = [
        TverskyPreset::SokalSneath2,
        TverskyPreset::Jaccard,
        TverskyPreset::Dice,
        TverskyPreset::Sorensen,
        TverskyPreset::Anderberg,
    ];
    for (ctx, e, d) in &instances {
        let values: Vec<Rational> = chain
            .iter()
            .map(|p| MeasureSpec::SimilarityTversky(Tversky::preset(*p)).evaluate(ctx, e, d).unwrap())
            .collect();
        check(values.windows(2).all(|w| w[0] <= w[1]), || format!("Tversky chain broken: {values:?}"))?;
        let concise = MeasureSpec::GranularityDivided { detail: Detail::Concise }.evaluate(ctx, e, d).unwrap();
        let detailed = MeasureSpec::GranularityDivided { detail: Detail::Detailed }.evaluate(ctx, e, d).unwrap();
        check(concise + detailed == int(1), || "granularity parts do not sum to 1".into())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..1200 {
        let n = rng.gen_range(1..=8);
        let v: Vec<Rational> = (0..n).map(|_| ratio(rng.gen_range(0..=20), 20)).collect();
        let min = v.iter().min().unwrap().clone();
        let max = v.iter().max().unwrap().clone();
        let pr = Aggregator::Product.apply(&v);
        let av = Aggregator::Average.apply(&v);
        check(pr <= min && min <= av && av <= max, || format!("aggregate bounds broken on {v:?}"))?;
    }
    let sequence = Preset::Sd.sequence();
    for (i, (ctx, e, d)) in instances.iter().enumerate() {
        let mut shuffled = sequence.clone();
        shuffled.shuffle(&mut rng);
        for agg in [Aggregator::Average, Aggregator::Product] {
            let a = quality(ctx, e, d, &QualityConfig::new(sequence.clone(), agg).unwrap());
            let b = quality(ctx, e, d, &QualityConfig::new(shuffled.clone(), agg).unwrap());
            let (a, b) = (a.map_err(|e| e.to_string())?, b.map_err(|e| e.to_string())?);
            check(a.aggregate == b.aggregate, || format!("instance {i}: order changed the {agg:?} quality"))?;
        }
    }
    Ok(format!("{} instances per suite", instances.len()))
}

fn criterion_8() -> Outcome {
    let r = running();
    let and = MeasureSpec::PreservationTversky(Tversky::preset(TverskyPreset::Anderberg));
    let want = [ratio(2, 3), ratio(16, 19), ratio(8, 13)];
    let listed = ["1/1.375", "1/1.5", "3/3.25"];
    for (i, w) in want.iter().enumerate() {
        let got = and.evaluate(&r.ctx, &r.e, &r.d[i]).map_err(|e| e.to_string())?;
        check(got == *w, || format!("D{}: {got}", i + 1))?;
    }
    Ok(format!(
        "definitional products 2/3, 16/19, 8/13 pinned; the published example lists {}",
        listed.join(", ")
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("running-example measure values", criterion_1, Duration::from_secs(1)),
        ("quality tables and rankings", criterion_2, Duration::from_secs(2)),
        ("normalization goldens", criterion_3, Duration::from_secs(1)),
        ("closure oracle equivalence", criterion_4, Duration::from_secs(30)),
        ("minimal inconsistent subset oracle", criterion_5, Duration::from_secs(60)),
        ("axiom conformance", criterion_6, Duration::from_secs(600)),
        ("structural property suites", criterion_7, Duration::from_secs(60)),
        ("preservation divergence pinned", criterion_8, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    let mut lines = Vec::new();
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let slow = took > *budget;
        let line = match (&outcome, slow) {
            (Ok(detail), false) => format!("criterion {}: PASS  {name} ({took:.2?}): {detail}", i + 1),
            (Ok(detail), true) => format!("criterion {}: FAIL  {name} ({took:.2?} over {budget:?}): {detail}", i + 1),
            (Err(why), _) => format!("criterion {}: FAIL  {name} ({took:.2?}): {why}", i + 1),
        };
        if outcome.is_err() || slow {
            failed += 1;
        }
        println!("{line}");
        lines.push(line);
    }
    println!("\nsummary");
    for line in &lines {
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
