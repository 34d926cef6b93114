//! Seeded generation of (enthymeme, decoding, second decoding) triples,
//! biased per axiom towards samples that satisfy its hypothesis.

use std::fmt;

use enthymeme::logic::WeightedLogic;
use enthymeme::problem::{ArgumentFile, WeightedFormulaFile};
use enthymeme::semantics::ModelSet;
use enthymeme::{ApproxArgument, Context, Formula, Literal, LogicConfig, Vocabulary, Weight, WeightedFormula, WeightedSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::axiom::{AxiomId, Family};
use crate::check::hypothesis;

/// Atom names used by generated instances, in enumeration order.
pub const ATOM_NAMES: [&str; 6] = ["p", "q", "r", "s", "u", "v"];

/// Draws per seed before generation gives up.
pub const RETRY_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub max_atoms: usize,
    pub max_premises: usize,
}

impl Default for Shape {
    fn default() -> Shape {
        Shape {
            max_atoms: 4,
            max_premises: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub atoms: usize,
    pub e: ApproxArgument,
    pub d: ApproxArgument,
    pub d2: Option<ApproxArgument>,
}

/// A serializable view of an instance, with formulas in ASCII syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub atoms: Vec<String>,
    pub enthymeme: ArgumentFile,
    pub decoding: ArgumentFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_decoding: Option<ArgumentFile>,
}

pub fn vocabulary(atoms: usize) -> Vocabulary {
    Vocabulary::new(ATOM_NAMES[..atoms].iter().copied()).expect("fixed atom names are valid")
}

fn argument_file(v: &Vocabulary, arg: &ApproxArgument) -> ArgumentFile {
    let wf = |x: &WeightedFormula| WeightedFormulaFile {
        formula: x.formula.ascii(v).to_string(),
        weight: x.weight.to_string(),
    };
    ArgumentFile {
        premises: arg.premises.iter().map(wf).collect(),
        claim: wf(&arg.claim),
    }
}

impl Instance {
    pub fn record(&self) -> InstanceRecord {
        let v = vocabulary(self.atoms);
        InstanceRecord {
            atoms: v.names().to_vec(),
            enthymeme: argument_file(&v, &self.e),
            decoding: argument_file(&v, &self.d),
            second_decoding: self.d2.as_ref().map(|d| argument_file(&v, d)),
        }
    }

    pub fn context(&self) -> Context {
        harness_context(self.atoms)
    }
}

pub fn harness_context(atoms: usize) -> Context {
    Context::new(atoms, LogicConfig::default()).expect("generated shapes stay within the table limits")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationError {
    pub seed: u64,
    pub attempts: usize,
}

impl fmt::Display for GenerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no instance after {} attempts (seed {})", self.attempts, self.seed)
    }
}

impl std::error::Error for GenerationError {}

/// Seed of the `index`-th draw for `axiom` in a run started from `base`.
pub fn instance_seed(base: u64, axiom: AxiomId, index: u64) -> u64 {
    // SplitMix64 finalizer over the three inputs.
    let mut z = base
        ^ (axiom.index() as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Builds the instance for `seed`. Equal inputs always give equal instances.
pub fn generate_instance(axiom: AxiomId, seed: u64, shape: Shape) -> Result<Instance, GenerationError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if shape.max_atoms == 0 || shape.max_atoms > ATOM_NAMES.len() {
        return Err(GenerationError { seed, attempts: 0 });
    }
    for _ in 0..RETRY_LIMIT {
        if let Some(inst) = Gen::new(&mut rng, shape).instance(axiom) {
            return Ok(inst);
        }
    }
    Err(GenerationError {
        seed,
        attempts: RETRY_LIMIT,
    })
}

/// The next instance whose decoding is a genuine weighted argument.
pub fn generate_argument(seed: u64, shape: Shape) -> Result<Instance, GenerationError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_LIMIT {
        let mut g = Gen::new(&mut rng, shape);
        let Some(e) = g.enthymeme() else { continue };
        let d = g.minimal_decoding(&e, true);
        let inst = Instance {
            atoms: g.atoms,
            e,
            d,
            d2: None,
        };
        if !fits(&inst) {
            continue;
        }
        let arg = inst.context().logic.classify(&inst.d);
        if arg == Ok(enthymeme::Classification::Argument) {
            return Ok(inst);
        }
    }
    Err(GenerationError {
        seed,
        attempts: RETRY_LIMIT,
    })
}

/// Rejects instances whose normal forms would exceed the measures' limits.
fn fits(inst: &Instance) -> bool {
    let ctx = inst.context();
    let caps = ctx.logic.config().caps;
    let ok = |a: &ApproxArgument| {
        ctx.normalize(&a.premises).len() <= caps.max_premises && ctx.normalize_one(&a.claim).len() <= caps.max_premises
    };
    ok(&inst.e) && ok(&inst.d) && inst.d2.as_ref().is_none_or(ok)
}

struct Gen<'a> {
    rng: &'a mut ChaCha8Rng,
    atoms: usize,
    shape: Shape,
    ctx: Context,
}

impl<'a> Gen<'a> {
    fn new(rng: &'a mut ChaCha8Rng, shape: Shape) -> Gen<'a> {
        let atoms = if shape.max_atoms == 1 || rng.gen_bool(0.15) {
            rng.gen_range(1..=shape.max_atoms)
        } else {
            rng.gen_range(2.min(shape.max_atoms)..=shape.max_atoms)
        };
        Gen {
            rng,
            atoms,
            shape,
            ctx: harness_context(atoms),
        }
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn weight(&mut self) -> Weight {
        if self.chance(0.8) {
            Weight::tenths(self.rng.gen_range(3..=9))
        } else {
            Weight::tenths(self.rng.gen_range(0..=10))
        }
    }

    fn literal(&mut self) -> Literal {
        let atom = self.rng.gen_range(0..self.atoms);
        if self.chance(0.5) {
            Literal::pos(atom)
        } else {
            Literal::neg(atom)
        }
    }

    fn clause(&mut self) -> Formula {
        let max = self.atoms.min(3);
        let size = if self.chance(0.5) { 1 } else { self.rng.gen_range(1..=max) };
        let mut atoms: Vec<usize> = (0..self.atoms).collect();
        atoms.shuffle(self.rng);
        let lits: Vec<Formula> = atoms[..size]
            .iter()
            .map(|&a| {
                if self.rng.gen_bool(0.5) {
                    Literal::pos(a).to_formula()
                } else {
                    Literal::neg(a).to_formula()
                }
            })
            .collect();
        Formula::disjunction(lits)
    }

    fn formula(&mut self) -> Formula {
        let roll = self.rng.gen_range(0..100);
        match roll {
            0..=64 => self.clause(),
            65..=82 => {
                let l = self.clause();
                let r = self.clause();
                Formula::and(l, r)
            }
            83..=93 => {
                let l = self.literal().to_formula();
                let r = self.clause();
                Formula::implies(l, r)
            }
            94..=96 => {
                let l = self.literal().to_formula();
                let r = self.literal().to_formula();
                Formula::iff(l, r)
            }
            97 => Formula::True,
            98 => Formula::False,
            _ => Formula::not(self.clause()),
        }
    }

    fn weighted(&mut self) -> WeightedFormula {
        let f = self.formula();
        WeightedFormula::new(f, self.weight())
    }

    fn set(&mut self, n: usize) -> WeightedSet {
        let mut s = WeightedSet::new();
        for _ in 0..n {
            let wf = self.weighted();
            s.insert(wf);
        }
        s
    }

    fn premise_count(&mut self) -> usize {
        if self.chance(0.08) {
            0
        } else {
            self.rng.gen_range(1..=self.shape.max_premises.max(1))
        }
    }

    fn enthymeme(&mut self) -> Option<ApproxArgument> {
        let n = self.premise_count();
        let gamma = self.set(n);
        let mut alpha = self.weighted();
        for _ in 0..8 {
            if !self.ctx.logic.consequence(&gamma, &alpha) {
                return Some(ApproxArgument::new(gamma, alpha));
            }
            alpha.weight = self.weight();
            if self.chance(0.3) {
                alpha.formula = self.formula();
            }
        }
        None
    }

    fn aggregate(&self, set: &WeightedSet) -> Weight {
        self.ctx.logic.aggregate(set)
    }

    /// Premises mixing copies of the enthymeme's premises with fresh formulas.
    fn premises_near(&mut self, e: &ApproxArgument) -> WeightedSet {
        let mut out = WeightedSet::new();
        if self.chance(0.08) {
            return out;
        }
        let max = self.shape.max_premises.max(1);
        for wf in e.premises.iter() {
            if out.len() < max && self.rng.gen_bool(0.35) {
                out.insert(wf.clone());
            }
        }
        let extra = self.rng.gen_range(0..=max - out.len());
        for _ in 0..extra {
            let wf = self.weighted();
            out.insert(wf);
        }
        if out.is_empty() && self.chance(0.7) {
            let wf = self.weighted();
            out.insert(wf);
        }
        out
    }

    fn claim_near(&mut self, e: &ApproxArgument) -> WeightedFormula {
        if self.chance(0.6) {
            e.claim.clone()
        } else {
            self.weighted()
        }
    }

    /// A formula the flat premises entail, or a tautology when there are none.
    fn entailed_by(&mut self, premises: &WeightedSet) -> Formula {
        let items: Vec<Formula> = premises.flat().cloned().collect();
        if items.is_empty() || self.chance(0.08) {
            let l = self.literal().to_formula();
            return Formula::or(l.clone(), Formula::not(l));
        }
        for _ in 0..12 {
            let candidate = match self.rng.gen_range(0..4) {
                0 => items.choose(self.rng).cloned().expect("non-empty"),
                1 => {
                    let f = items.choose(self.rng).cloned().expect("non-empty");
                    Formula::or(f, self.literal().to_formula())
                }
                2 if items.len() > 1 => {
                    let mut pick: Vec<Formula> = items.clone();
                    pick.shuffle(self.rng);
                    Formula::and(pick[0].clone(), pick[1].clone())
                }
                _ => self.clause(),
            };
            if self.ctx.logic.flat_entails(premises, &candidate) {
                return candidate;
            }
        }
        items[0].clone()
    }

    /// Premises along a chain `l₀, ¬l₀ ∨ l₁, …` whose claim needs every link.
    fn chain(&mut self) -> (WeightedSet, Formula) {
        let mut atoms: Vec<usize> = (0..self.atoms).collect();
        atoms.shuffle(self.rng);
        let len = self.rng.gen_range(1..=self.shape.max_premises.clamp(1, self.atoms));
        let lits: Vec<Literal> = atoms[..len]
            .iter()
            .map(|&a| if self.rng.gen_bool(0.5) { Literal::pos(a) } else { Literal::neg(a) })
            .collect();
        let mut premises = WeightedSet::new();
        premises.insert(WeightedFormula::new(lits[0].to_formula(), self.weight()));
        for w in lits.windows(2) {
            let link = if self.chance(0.5) {
                Formula::or(w[0].complement().to_formula(), w[1].to_formula())
            } else {
                Formula::implies(w[0].to_formula(), w[1].to_formula())
            };
            let wt = self.weight();
            premises.insert(WeightedFormula::new(link, wt));
        }
        let last = lits[len - 1].to_formula();
        let claim = if self.chance(0.2) {
            Formula::or(last, self.literal().to_formula())
        } else {
            last
        };
        (premises, claim)
    }

    fn entailing_decoding(&mut self, e: &ApproxArgument, weighted: bool) -> ApproxArgument {
        let premises = if self.chance(0.3) {
            self.chain().0
        } else {
            let mut p = self.premises_near(e);
            if p.is_empty() && self.chance(0.5) {
                let wf = self.weighted();
                p.insert(wf);
            }
            p
        };
        let f = self.entailed_by(&premises);
        let weight = if self.ctx.logic.is_tautology(&f) && self.chance(0.5) {
            Weight::ONE
        } else if weighted || self.chance(0.5) {
            self.aggregate(&premises)
        } else {
            self.weight()
        };
        ApproxArgument::new(premises, WeightedFormula::new(f, weight))
    }

    fn minimal_decoding(&mut self, e: &ApproxArgument, weighted: bool) -> ApproxArgument {
        let (premises, claim) = if self.chance(0.75) {
            self.chain()
        } else {
            let wf = self.weighted();
            let f = wf.formula.clone();
            let set: WeightedSet = std::iter::once(wf).collect();
            let claim = if self.chance(0.5) { f } else { self.entailed_by(&set) };
            (set, claim)
        };
        let weight = if weighted || self.chance(0.5) {
            self.aggregate(&premises)
        } else {
            self.weight()
        };
        let _ = e;
        ApproxArgument::new(premises, WeightedFormula::new(claim, weight))
    }

    /// Premises true in one model of `base`, with an occasional low-weight clash.
    fn consistent_decoding(&mut self, e: &ApproxArgument, with_enthymeme: bool) -> ApproxArgument {
        let mut models = if with_enthymeme {
            self.ctx.logic.models_of_set(&e.premises)
        } else {
            ModelSet::full(self.atoms)
        };
        if models.is_empty() {
            models = ModelSet::full(self.atoms);
        }
        let rows: Vec<usize> = models.iter().collect();
        let row = *rows.choose(self.rng).expect("non-empty model set");
        let assignment = ModelSet::assignment(self.atoms, row);
        let mut premises = WeightedSet::new();
        let n = self.premise_count();
        let mut tries = 0;
        while premises.len() < n && tries < 40 {
            tries += 1;
            let wf = self.weighted();
            if wf.formula.eval(&assignment) {
                premises.insert(wf);
            }
        }
        if self.chance(0.25) && premises.len() + 2 <= self.shape.max_premises {
            let l = self.literal();
            premises.insert(WeightedFormula::new(l.to_formula(), Weight::tenths(self.rng.gen_range(1..=9))));
            premises.insert(WeightedFormula::new(l.complement().to_formula(), Weight::tenths(self.rng.gen_range(1..=4))));
        }
        let claim = self.claim_near(e);
        ApproxArgument::new(premises, claim)
    }

    fn clashing_decoding(&mut self, e: &ApproxArgument) -> ApproxArgument {
        let mut d = ApproxArgument::new(self.premises_near(e), self.claim_near(e));
        let clashes = self.rng.gen_range(0..=2);
        for _ in 0..clashes {
            if d.premises.len() >= self.shape.max_premises {
                break;
            }
            let l = if self.chance(0.5) {
                e.premises
                    .as_slice()
                    .choose(self.rng)
                    .and_then(|wf| wf.formula.literals().into_iter().next())
                    .unwrap_or_else(|| self.literal())
            } else {
                self.literal()
            };
            let w = self.weight();
            d.premises.insert(WeightedFormula::new(l.complement().to_formula(), w));
        }
        d
    }

    fn fresh_premise_avoiding(&mut self, e: &ApproxArgument) -> WeightedFormula {
        let used: Vec<Weight> = e.premises.weights().collect();
        let mut wf = self.weighted();
        for _ in 0..6 {
            if !used.contains(&wf.weight) {
                break;
            }
            wf.weight = self.weight();
        }
        wf
    }

    fn decoding(&mut self, axiom: AxiomId, e: &ApproxArgument) -> ApproxArgument {
        use AxiomId::*;
        match axiom {
            IdealFlatInference => self.entailing_decoding(e, false),
            IdealWeightedInference => self.entailing_decoding(e, true),
            IdealFlatMinimality => self.minimal_decoding(e, false),
            IdealWeightedMinimality => self.minimal_decoding(e, true),
            IdealStrongCoherence => self.consistent_decoding(e, false),
            IdealWeakCoherence => self.consistent_decoding(e, true),
            PremisesPreservation => {
                let n = self.premise_count();
                let mut premises = WeightedSet::new();
                for _ in 0..n {
                    let wf = self.fresh_premise_avoiding(e);
                    premises.insert(wf);
                }
                let claim = self.claim_near(e);
                ApproxArgument::new(premises, claim)
            }
            ClaimPreservation => {
                let premises = self.premises_near(e);
                let claim = match self.rng.gen_range(0..3) {
                    0 => WeightedFormula::new(e.claim.formula.clone(), self.weight()),
                    1 => {
                        let f = self.entailed_by(&std::iter::once(e.claim.clone()).collect());
                        WeightedFormula::new(f, e.claim.weight)
                    }
                    _ => self.weighted(),
                };
                ApproxArgument::new(premises, claim)
            }
            IdealStability => {
                let premises = self.premises_near(e);
                let f = self.formula();
                let w = if self.chance(0.8) { self.aggregate(&premises) } else { self.weight() };
                ApproxArgument::new(premises, WeightedFormula::new(f, w))
            }
            _ => match axiom.family() {
                Family::Inference => {
                    let weighted = self.chance(0.5);
                    self.entailing_or_near(e, weighted)
                }
                Family::Minimality => {
                    let weighted = self.chance(0.5);
                    let mut d = self.minimal_decoding(e, weighted);
                    self.pad(e, &mut d);
                    d
                }
                Family::Coherence => self.clashing_decoding(e),
                _ => {
                    let premises = self.premises_near(e);
                    let claim = self.claim_near(e);
                    ApproxArgument::new(premises, claim)
                }
            },
        }
    }

    fn entailing_or_near(&mut self, e: &ApproxArgument, weighted: bool) -> ApproxArgument {
        if self.chance(0.5) {
            self.entailing_decoding(e, weighted)
        } else {
            let premises = self.premises_near(e);
            let claim = self.claim_near(e);
            ApproxArgument::new(premises, claim)
        }
    }

    /// Adds redundant premises so that several subsets entail the claim.
    fn pad(&mut self, e: &ApproxArgument, d: &mut ApproxArgument) {
        while d.premises.len() < self.shape.max_premises && self.chance(0.5) {
            let wf = if self.chance(0.5) {
                WeightedFormula::new(d.claim.formula.clone(), self.weight())
            } else if self.chance(0.4) && !e.premises.is_empty() {
                e.premises.as_slice().choose(self.rng).cloned().expect("non-empty")
            } else {
                self.weighted()
            };
            d.premises.insert(wf);
        }
    }

    /// A second decoding obtained from `d` by a few local edits.
    fn edit(&mut self, axiom: AxiomId, e: &ApproxArgument, d: &ApproxArgument) -> ApproxArgument {
        let mut items: Vec<WeightedFormula> = d.premises.iter().cloned().collect();
        let edits = self.rng.gen_range(1..=2);
        let shared: Vec<WeightedFormula> = e.premises.iter().cloned().collect();
        for _ in 0..edits {
            match self.rng.gen_range(0..6) {
                0 if !items.is_empty() => {
                    let i = self.rng.gen_range(0..items.len());
                    items.remove(i);
                }
                1 if !items.is_empty() => {
                    let i = self.rng.gen_range(0..items.len());
                    items[i] = self.weighted();
                }
                2 if !items.is_empty() => {
                    let i = self.rng.gen_range(0..items.len());
                    items[i].weight = self.weight();
                }
                3 if !shared.is_empty() => {
                    let wf = shared.choose(self.rng).cloned().expect("non-empty");
                    items.push(wf);
                }
                4 if axiom.family() == Family::Coherence => {
                    let l = self.literal();
                    items.push(WeightedFormula::new(l.to_formula(), self.weight()));
                    items.push(WeightedFormula::new(l.complement().to_formula(), self.weight()));
                }
                4 if axiom.family() == Family::Minimality => {
                    items.push(WeightedFormula::new(d.claim.formula.clone(), self.weight()));
                }
                _ => {
                    let wf = self.weighted();
                    items.push(wf);
                }
            }
        }
        items.truncate(self.shape.max_premises);
        let premises: WeightedSet = items.into_iter().collect();
        let claim = if axiom.shares_claim() || self.chance(0.5) {
            d.claim.clone()
        } else if axiom.family() == Family::Stability && self.chance(0.7) {
            WeightedFormula::new(d.claim.formula.clone(), self.weight())
        } else {
            self.claim_near(e)
        };
        ApproxArgument::new(premises, claim)
    }

    /// For similarity: swaps or drops clauses outside the enthymeme's premises.
    fn edit_new_only(&mut self, e: &ApproxArgument, d: &ApproxArgument, drop: bool) -> ApproxArgument {
        let mut premises = WeightedSet::new();
        let mut dropped = false;
        for wf in d.premises.iter() {
            if e.premises.contains(wf) {
                premises.insert(wf.clone());
            } else if drop && (!dropped || self.chance(0.3)) {
                dropped = true;
            } else if !drop && self.chance(0.5) {
                let replacement = self.fresh_premise_avoiding(e);
                premises.insert(replacement);
            } else {
                premises.insert(wf.clone());
            }
        }
        ApproxArgument::new(premises, self.claim_near(e))
    }

    fn instance(&mut self, axiom: AxiomId) -> Option<Instance> {
        let e = self.enthymeme()?;
        let d = self.decoding(axiom, &e);
        let d2 = if axiom.needs_pair() {
            let second = match axiom {
                AxiomId::LenientIncreasingSimilarity | AxiomId::StrictIncreasingSimilarity if self.chance(0.6) => {
                    self.edit_new_only(&e, &d, false)
                }
                AxiomId::LenientDecreasingSimilarity | AxiomId::StrictDecreasingSimilarity if self.chance(0.6) => {
                    self.edit_new_only(&e, &d, true)
                }
                _ => self.edit(axiom, &e, &d),
            };
            Some(second)
        } else {
            None
        };
        let mut inst = Instance {
            atoms: self.atoms,
            e,
            d,
            d2,
        };
        if !fits(&inst) {
            return None;
        }
        if inst.d2.is_some() && !hypothesis(axiom, &self.ctx, &inst).unwrap_or(false) {
            let swapped = Instance {
                atoms: inst.atoms,
                e: inst.e.clone(),
                d: inst.d2.clone().expect("pair"),
                d2: Some(inst.d.clone()),
            };
            if hypothesis(axiom, &self.ctx, &swapped).unwrap_or(false) {
                inst = swapped;
            }
        }
        Some(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        for axiom in AxiomId::ALL {
            for i in 0..5 {
                let seed = instance_seed(7, *axiom, i);
                let a = generate_instance(*axiom, seed, Shape::default()).unwrap();
                let b = generate_instance(*axiom, seed, Shape::default()).unwrap();
                assert_eq!(a, b);
                assert_eq!(a.d2.is_some(), axiom.needs_pair());
                assert!(a.atoms <= 4 && a.e.premises.len() <= 4 && a.d.premises.len() <= 4);
            }
        }
    }

    #[test]
    fn enthymemes_are_enthymemes() {
        for i in 0..200 {
            let seed = instance_seed(1, AxiomId::IdealStability, i);
            let inst = generate_instance(AxiomId::IdealStability, seed, Shape::default()).unwrap();
            assert!(!inst.context().logic.consequence(&inst.e.premises, &inst.e.claim));
        }
    }

    #[test]
    fn tiny_shapes_are_well_formed() {
        let shape = Shape {
            max_atoms: 1,
            max_premises: 1,
        };
        for axiom in AxiomId::ALL {
            let inst = generate_instance(*axiom, instance_seed(3, *axiom, 0), shape).unwrap();
            assert_eq!(inst.atoms, 1);
            assert!(inst.d.premises.len() <= 1);
        }
    }

    #[test]
    fn impossible_shape_reports_the_seed() {
        let shape = Shape {
            max_atoms: 0,
            max_premises: 2,
        };
        let err = generate_instance(AxiomId::IdealFlatInference, 42, shape).unwrap_err();
        assert_eq!(err.seed, 42);
        assert!(err.to_string().contains("seed 42"));
    }

    #[test]
    fn seeds_differ_across_axioms_and_indices() {
        let a = instance_seed(0, AxiomId::IdealFlatInference, 0);
        assert_ne!(a, instance_seed(0, AxiomId::IdealWeightedInference, 0));
        assert_ne!(a, instance_seed(0, AxiomId::IdealFlatInference, 1));
        assert_ne!(a, instance_seed(1, AxiomId::IdealFlatInference, 0));
    }
}
