//! Axiom predicates and the sampling loop that checks measures against them.

use std::collections::BTreeMap;

use enthymeme::closure::flat_finite_cn;
use enthymeme::measures::{inconsistency_count, new_clause_count, tversky_counts, Scope};
use enthymeme::number::rational_string;
use enthymeme::{ApproxArgument, Classification, Context, Error, MeasureSpec, Rational, WeightedLogic, WeightedSet};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::axiom::{AxiomId, Conclusion, Family};
use crate::generate::{generate_argument, generate_instance, instance_seed, Instance, InstanceRecord, Shape};
use crate::matrix::{regime_of, shipped_measures, Regime};

/// What is put under test: a configured measure or a synthetic control.
#[derive(Clone, Debug, PartialEq)]
pub enum Candidate {
    Spec(MeasureSpec),
    /// `1 − M`, a deliberately broken variant used to confirm the harness bites.
    Inverted(MeasureSpec),
    Constant(Rational),
}

impl Candidate {
    pub fn label(&self) -> String {
        match self {
            Candidate::Spec(m) => m.label(),
            Candidate::Inverted(m) => format!("invert({})", m.label()),
            Candidate::Constant(c) => format!("const({})", rational_string(c)),
        }
    }

    pub fn regime(&self) -> Option<Regime> {
        match self {
            Candidate::Spec(m) | Candidate::Inverted(m) => Some(regime_of(m)),
            Candidate::Constant(_) => None,
        }
    }

    pub fn evaluate(&self, ctx: &Context, e: &ApproxArgument, d: &ApproxArgument) -> Result<Rational, Error> {
        match self {
            Candidate::Spec(m) => m.evaluate(ctx, e, d),
            Candidate::Inverted(m) => Ok(Rational::one() - m.evaluate(ctx, e, d)?),
            Candidate::Constant(c) => Ok(c.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckConfig {
    /// Target number of hypothesis-satisfying samples per axiom.
    pub samples: usize,
    pub seed: u64,
    pub shape: Shape,
    /// Fewer exercised samples than this makes a verdict inconclusive.
    pub floor: usize,
    /// Draws allowed per requested sample.
    pub budget: usize,
}

impl Default for CheckConfig {
    fn default() -> CheckConfig {
        CheckConfig {
            samples: 1000,
            seed: 0,
            shape: Shape::default(),
            floor: 50,
            budget: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub seed: u64,
    pub instance: InstanceRecord,
    /// Exact values of the measure on the first and, for pair axioms, second decoding.
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Outcome {
    NoCounterexample,
    Counterexample { violations: usize, witness: Box<Witness> },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub axiom: AxiomId,
    pub measure: String,
    pub exercised: usize,
    pub attempted: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self.outcome, Outcome::Counterexample { .. })
    }

    pub fn is_clean(&self) -> bool {
        self.outcome == Outcome::NoCounterexample
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Counterexample { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

fn claim_cn_overlap(ctx: &Context, d: &ApproxArgument) -> Result<usize, Error> {
    let claim: WeightedSet = std::iter::once(d.claim.clone()).collect();
    let premise_cn = flat_finite_cn(&ctx.logic, &d.premises, ctx.closure)?;
    let claim_cn = flat_finite_cn(&ctx.logic, &claim, ctx.closure)?;
    Ok(premise_cn.intersection(&claim_cn).count())
}

fn weighted_cn_overlap(ctx: &Context, d: &ApproxArgument) -> Result<usize, Error> {
    if ctx.logic.aggregate(&d.premises) != d.claim.weight {
        return Ok(0);
    }
    claim_cn_overlap(ctx, d)
}

/// Proper premise subsets that entail the claim, flatly or with weights.
fn proper_entailing(ctx: &Context, d: &ApproxArgument, weighted: bool) -> usize {
    let n = d.premises.len();
    let full = (1u64 << n) - 1;
    (0..full)
        .filter(|&mask| {
            let sub = d.premises.select(mask);
            if weighted {
                ctx.logic.consequence(&sub, &d.claim)
            } else {
                ctx.logic.flat_entails(&sub, &d.claim.formula)
            }
        })
        .count()
}

fn similarity_counts(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument) -> (usize, usize, usize) {
    tversky_counts(&ctx.normalize(&d.premises), &ctx.normalize(&e.premises))
}

fn stability_gap(ctx: &Context, d: &ApproxArgument) -> Rational {
    ctx.logic.aggregate(&d.premises).distance(d.claim.weight)
}

/// Whether the instance satisfies the axiom's hypothesis, evaluated exactly.
pub fn hypothesis(axiom: AxiomId, ctx: &Context, inst: &Instance) -> Result<bool, Error> {
    use AxiomId::*;
    let (e, d) = (&inst.e, &inst.d);
    let pair = || inst.d2.as_ref().expect("pair axioms come with a second decoding");
    let weak = |x: &ApproxArgument| ApproxArgument::new(x.premises.union(&e.premises), x.claim.clone());
    Ok(match axiom {
        IdealFlatInference => ctx.logic.flat_entails(&d.premises, &d.claim.formula),
        IdealWeightedInference => ctx.logic.consequence(&d.premises, &d.claim),
        LenientIncreasingFlatInference => claim_cn_overlap(ctx, d)? >= claim_cn_overlap(ctx, pair())?,
        StrictIncreasingFlatInference => claim_cn_overlap(ctx, d)? > claim_cn_overlap(ctx, pair())?,
        LenientIncreasingWeightedInference => weighted_cn_overlap(ctx, d)? >= weighted_cn_overlap(ctx, pair())?,
        StrictIncreasingWeightedInference => weighted_cn_overlap(ctx, d)? > weighted_cn_overlap(ctx, pair())?,

        IdealFlatMinimality => proper_entailing(ctx, d, false) == 0,
        IdealWeightedMinimality => proper_entailing(ctx, d, true) == 0,
        LenientDecreasingFlatMinimality => proper_entailing(ctx, d, false) >= proper_entailing(ctx, pair(), false),
        StrictDecreasingFlatMinimality => proper_entailing(ctx, d, false) > proper_entailing(ctx, pair(), false),
        LenientDecreasingWeightedMinimality => proper_entailing(ctx, d, true) >= proper_entailing(ctx, pair(), true),
        StrictDecreasingWeightedMinimality => proper_entailing(ctx, d, true) > proper_entailing(ctx, pair(), true),

        IdealStrongCoherence => !ctx.logic.is_inconsistent(&d.premises),
        IdealWeakCoherence => !ctx.logic.is_inconsistent(&weak(d).premises),
        LenientDecreasingStrongCoherence => {
            inconsistency_count(ctx, e, d, Scope::Strong)? >= inconsistency_count(ctx, e, pair(), Scope::Strong)?
        }
        StrictDecreasingStrongCoherence => {
            inconsistency_count(ctx, e, d, Scope::Strong)? > inconsistency_count(ctx, e, pair(), Scope::Strong)?
        }
        LenientDecreasingWeakCoherence => {
            inconsistency_count(ctx, e, d, Scope::Weak)? >= inconsistency_count(ctx, e, pair(), Scope::Weak)?
        }
        StrictDecreasingWeakCoherence => {
            inconsistency_count(ctx, e, d, Scope::Weak)? > inconsistency_count(ctx, e, pair(), Scope::Weak)?
        }

        PremisesPreservation => similarity_counts(ctx, e, d).0 == 0,
        ClaimPreservation => ctx.normalize_one(&e.claim) != ctx.normalize_one(&d.claim),

        LenientIncreasingSimilarity | StrictIncreasingSimilarity | LenientDecreasingSimilarity | StrictDecreasingSimilarity => {
            let (a, b, c) = similarity_counts(ctx, e, d);
            let (a2, b2, c2) = similarity_counts(ctx, e, pair());
            match axiom {
                LenientIncreasingSimilarity => a >= a2 && b == b2 && c == c2,
                StrictIncreasingSimilarity => a > a2 && b == b2 && c == c2,
                LenientDecreasingSimilarity => a == a2 && b >= b2 && c >= c2,
                _ => a == a2 && ((b > b2 && c >= c2) || (b >= b2 && c > c2)),
            }
        }

        LenientConciseGranularity => new_clause_count(ctx, e, d) <= new_clause_count(ctx, e, pair()),
        StrictConciseGranularity => new_clause_count(ctx, e, d) < new_clause_count(ctx, e, pair()),
        LenientDetailedGranularity => new_clause_count(ctx, e, d) >= new_clause_count(ctx, e, pair()),
        StrictDetailedGranularity => new_clause_count(ctx, e, d) > new_clause_count(ctx, e, pair()),

        IdealStability => ctx.logic.aggregate(&d.premises) == d.claim.weight,
        LenientDecreasingStability => stability_gap(ctx, d) >= stability_gap(ctx, pair()),
        StrictDecreasingStability => stability_gap(ctx, d) > stability_gap(ctx, pair()),
    })
}

/// Whether measure values satisfy the axiom's conclusion.
pub fn conclusion_holds(conclusion: Conclusion, m: &Rational, m2: Option<&Rational>) -> bool {
    let other = || m2.expect("comparative conclusions need two values");
    match conclusion {
        Conclusion::One => m.is_one(),
        Conclusion::Zero => m.is_zero(),
        Conclusion::AtLeast => m >= other(),
        Conclusion::Above => m > other(),
        Conclusion::AtMost => m <= other(),
        Conclusion::Below => m < other(),
    }
}

struct Tally<'a> {
    candidate: &'a Candidate,
    violations: usize,
    witness: Option<Witness>,
    error: Option<Error>,
}

/// Runs one sample stream for `axiom` and judges every candidate on it.
fn run_stream(axiom: AxiomId, candidates: &[&Candidate], cfg: &CheckConfig) -> Vec<Result<Verdict, Error>> {
    let mut tallies: Vec<Tally> = candidates
        .iter()
        .map(|c| Tally {
            candidate: c,
            violations: 0,
            witness: None,
            error: None,
        })
        .collect();
    let limit = cfg.samples.saturating_mul(cfg.budget);
    let (mut exercised, mut attempted) = (0, 0);
    while exercised < cfg.samples && attempted < limit {
        let seed = instance_seed(cfg.seed, axiom, attempted as u64);
        attempted += 1;
        let Ok(inst) = generate_instance(axiom, seed, cfg.shape) else {
            continue;
        };
        let ctx = inst.context();
        if !hypothesis(axiom, &ctx, &inst).unwrap_or(false) {
            continue;
        }
        exercised += 1;
        for t in tallies.iter_mut().filter(|t| t.error.is_none()) {
            let values = std::iter::once(&inst.d)
                .chain(inst.d2.as_ref())
                .map(|d| t.candidate.evaluate(&ctx, &inst.e, d))
                .collect::<Result<Vec<Rational>, Error>>();
            let values = match values {
                Ok(v) => v,
                Err(err) => {
                    t.error = Some(Error::Measure {
                        measure: format!("{} (seed {seed})", t.candidate.label()),
                        source: Box::new(err),
                    });
                    continue;
                }
            };
            if !conclusion_holds(axiom.conclusion(), &values[0], values.get(1)) {
                t.violations += 1;
                if t.witness.is_none() {
                    t.witness = Some(Witness {
                        seed,
                        instance: inst.record(),
                        values: values.iter().map(rational_string).collect(),
                    });
                }
            }
        }
    }
    tallies
        .into_iter()
        .map(|t| {
            if let Some(err) = t.error {
                return Err(err);
            }
            let outcome = match t.witness {
                Some(w) => Outcome::Counterexample {
                    violations: t.violations,
                    witness: Box::new(w),
                },
                None if exercised < cfg.floor => Outcome::Inconclusive,
                None => Outcome::NoCounterexample,
            };
            Ok(Verdict {
                axiom,
                measure: t.candidate.label(),
                exercised,
                attempted,
                outcome,
            })
        })
        .collect()
}

/// Checks one candidate against one axiom, drawing until `cfg.samples`
/// hypothesis-satisfying instances have been seen or the budget is spent.
pub fn check_axiom(axiom: AxiomId, candidate: &Candidate, cfg: &CheckConfig) -> Result<Verdict, Error> {
    run_stream(axiom, &[candidate], cfg).pop().expect("one candidate in, one verdict out")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cell {
    pub measure: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<&'static str>,
    pub marked: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// A pair of verdicts contradicting an implication between axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetaFinding {
    pub measure: String,
    pub passed: AxiomId,
    pub failed: AxiomId,
    pub relation: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conformance {
    Full,
    Counterexamples,
    Inconclusive,
}

impl Conformance {
    pub fn exit_code(self) -> i32 {
        match self {
            Conformance::Full => 0,
            Conformance::Counterexamples => 3,
            Conformance::Inconclusive => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixReport {
    pub config: CheckConfig,
    pub conformance: Conformance,
    pub cells: Vec<Cell>,
    pub errors: Vec<String>,
    pub meta: Vec<MetaFinding>,
}

impl MatrixReport {
    pub fn marked(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.marked)
    }

    pub fn marked_failures(&self) -> impl Iterator<Item = &Cell> {
        self.marked().filter(|c| c.verdict.is_counterexample())
    }

    pub fn cell(&self, measure: &str, axiom: AxiomId) -> Option<&Cell> {
        self.cells.iter().find(|c| c.measure == measure && c.verdict.axiom == axiom)
    }
}

fn axioms_for(candidate: &Candidate) -> &'static [AxiomId] {
    candidate.regime().map_or(AxiomId::ALL, |r| r.block)
}

/// Checks every candidate on every axiom of its table block. Streams are
/// shared by the candidates tested on the same axiom and run in parallel.
pub fn check_matrix(candidates: &[Candidate], cfg: &CheckConfig) -> MatrixReport {
    let per_axiom: Vec<(AxiomId, Vec<(usize, Result<Verdict, Error>)>)> = AxiomId::ALL
        .par_iter()
        .map(|&axiom| {
            let idx: Vec<usize> = (0..candidates.len())
                .filter(|&i| axioms_for(&candidates[i]).contains(&axiom))
                .collect();
            let members: Vec<&Candidate> = idx.iter().map(|&i| &candidates[i]).collect();
            let verdicts = if members.is_empty() {
                Vec::new()
            } else {
                run_stream(axiom, &members, cfg)
            };
            (axiom, idx.into_iter().zip(verdicts).collect())
        })
        .collect();

    let mut cells = Vec::new();
    let mut errors = Vec::new();
    for (i, candidate) in candidates.iter().enumerate() {
        for (_, results) in &per_axiom {
            for (_, result) in results.iter().filter(|(j, _)| *j == i) {
                match result {
                    Ok(v) => cells.push(Cell {
                        measure: candidate.label(),
                        regime: candidate.regime().map(|r| r.name),
                        marked: candidate.regime().is_some_and(|r| r.is_marked(v.axiom)),
                        verdict: v.clone(),
                    }),
                    Err(e) => errors.push(e.to_string()),
                }
            }
        }
    }
    let meta = meta_findings(&cells);
    let conformance = if !errors.is_empty() || cells.iter().any(|c| c.marked && c.verdict.is_counterexample()) {
        Conformance::Counterexamples
    } else if cells.iter().any(|c| c.marked && !c.verdict.is_clean()) {
        Conformance::Inconclusive
    } else {
        Conformance::Full
    };
    MatrixReport {
        config: *cfg,
        conformance,
        cells,
        errors,
        meta,
    }
}

/// Strict passes should come with lenient passes and strong with weak.
pub fn meta_findings(cells: &[Cell]) -> Vec<MetaFinding> {
    let mut by_measure: BTreeMap<&str, BTreeMap<AxiomId, &Verdict>> = BTreeMap::new();
    for c in cells {
        by_measure.entry(&c.measure).or_default().insert(c.verdict.axiom, &c.verdict);
    }
    let mut out = Vec::new();
    for (measure, verdicts) in &by_measure {
        for (&axiom, v) in verdicts {
            let links = [
                (axiom.lenient_version(), "strict implies lenient"),
                (axiom.weak_version(), "strong implies weak"),
            ];
            for (other, relation) in links {
                let Some(other) = other else { continue };
                if v.is_clean() && verdicts.get(&other).is_some_and(|w| w.is_counterexample()) {
                    out.push(MetaFinding {
                        measure: measure.to_string(),
                        passed: axiom,
                        failed: other,
                        relation,
                    });
                }
            }
        }
    }
    out
}

pub fn shipped_candidates() -> Vec<Candidate> {
    shipped_measures().into_iter().map(Candidate::Spec).collect()
}

/// Measures that must score 1 on every genuine argument: those satisfying
/// ideal weighted inference, ideal strong coherence or an ideal minimality axiom.
pub fn argument_measures() -> Vec<MeasureSpec> {
    shipped_measures()
        .into_iter()
        .filter(|m| {
            let r = regime_of(m);
            match r.block[0].family() {
                Family::Inference => r.is_marked(AxiomId::IdealWeightedInference),
                Family::Coherence => r.is_marked(AxiomId::IdealStrongCoherence),
                Family::Minimality => {
                    r.is_marked(AxiomId::IdealFlatMinimality) || r.is_marked(AxiomId::IdealWeightedMinimality)
                }
                _ => false,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArgumentFailure {
    pub measure: String,
    pub failures: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArgumentReport {
    pub arguments: usize,
    pub attempts: usize,
    pub measures: Vec<String>,
    pub failures: Vec<ArgumentFailure>,
}

impl ArgumentReport {
    pub fn passed(&self, wanted: usize) -> bool {
        self.arguments >= wanted && self.failures.is_empty()
    }
}

/// Scores `count` generated genuine arguments with [`argument_measures`]
/// and records every value other than 1.
pub fn argument_check(count: usize, cfg: &CheckConfig) -> Result<ArgumentReport, Error> {
    let measures = argument_measures();
    let mut failures: Vec<Option<ArgumentFailure>> = vec![None; measures.len()];
    let (mut arguments, mut attempts) = (0, 0);
    while arguments < count && attempts < count.saturating_mul(cfg.budget) {
        let seed = instance_seed(cfg.seed, AxiomId::IdealWeightedInference, (1u64 << 40) + attempts as u64);
        attempts += 1;
        let Ok(inst) = generate_argument(seed, cfg.shape) else { continue };
        let ctx = inst.context();
        if !matches!(ctx.logic.classify(&inst.d), Ok(Classification::Argument)) {
            continue;
        }
        arguments += 1;
        for (m, slot) in measures.iter().zip(failures.iter_mut()) {
            let v = m.evaluate(&ctx, &inst.e, &inst.d)?;
            if v.is_one() {
                continue;
            }
            match slot {
                Some(f) => f.failures += 1,
                None => {
                    *slot = Some(ArgumentFailure {
                        measure: m.label(),
                        failures: 1,
                        witness: Witness {
                            seed,
                            instance: inst.record(),
                            values: vec![rational_string(&v)],
                        },
                    })
                }
            }
        }
    }
    Ok(ArgumentReport {
        arguments,
        attempts,
        measures: measures.iter().map(MeasureSpec::label).collect(),
        failures: failures.into_iter().flatten().collect(),
    })
}
