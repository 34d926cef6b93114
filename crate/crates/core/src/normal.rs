//! Canonical normal forms and the weighted clause decomposition `Dn`.
//!
//! The conjunctive form starts from one full-width clause per non-model.
//! Two clauses of equal length that differ in exactly one complementary
//! literal merge into the clause without that literal. Merging runs in
//! rounds over all such pairs at once, and a clause that took part in no
//! merge is kept. The fixpoint is the set of prime implicates, which does
//! not depend on the order in which pairs are found.
//!
//! [`merge_clauses_with`] implements the variant in which every merge
//! consumes both of its clauses. Its outcome depends on the pair picked at
//! each step and it is kept for comparing the two readings.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::formula::{Formula, Literal, Vocabulary};
use crate::logic::{WeightedFormula, WeightedSet};
use crate::number::Weight;
use crate::semantics::ModelSet;

/// A disjunction of literals, kept sorted by atom. A clause never holds
/// both polarities of an atom. The empty clause stands for `⊥`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause(Vec<Literal>);

impl Clause {
    /// Builds a clause, returning `None` when the literals are tautological.
    pub fn new<I: IntoIterator<Item = Literal>>(lits: I) -> Option<Clause> {
        let set: BTreeSet<Literal> = lits.into_iter().collect();
        let lits: Vec<Literal> = set.into_iter().collect();
        if lits.windows(2).any(|w| w[0].atom == w[1].atom) {
            return None;
        }
        Some(Clause(lits))
    }

    pub fn empty() -> Clause {
        Clause(Vec::new())
    }

    pub fn unit(lit: Literal) -> Clause {
        Clause(vec![lit])
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_formula(&self) -> Formula {
        Formula::disjunction(self.0.iter().map(|l| l.to_formula()))
    }

    pub fn models(&self, atoms: usize) -> ModelSet {
        let mut m = ModelSet::empty(atoms);
        for lit in &self.0 {
            m.union_with(&ModelSet::literal(atoms, *lit));
        }
        m
    }

    /// The clause with the literal at `pos` replaced by its complement.
    fn flipped(&self, pos: usize) -> Clause {
        let mut lits = self.0.clone();
        lits[pos] = lits[pos].complement();
        Clause(lits)
    }

    fn without(&self, pos: usize) -> Clause {
        let mut lits = self.0.clone();
        lits.remove(pos);
        Clause(lits)
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        ClauseDisplay(self, vocab)
    }
}

struct ClauseDisplay<'a>(&'a Clause, &'a Vocabulary);

impl fmt::Display for ClauseDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("⊥");
        }
        for (i, lit) in self.0.literals().iter().enumerate() {
            if i > 0 {
                f.write_str(" ∨ ")?;
            }
            if lit.negated {
                f.write_str("¬")?;
            }
            f.write_str(self.1.name(lit.atom))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedClause {
    pub clause: Clause,
    pub weight: Weight,
}

impl WeightedClause {
    pub fn to_weighted_formula(&self) -> WeightedFormula {
        WeightedFormula::new(self.clause.to_formula(), self.weight)
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        WeightedClauseDisplay(self, vocab)
    }
}

struct WeightedClauseDisplay<'a>(&'a WeightedClause, &'a Vocabulary);

impl fmt::Display for WeightedClauseDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.0.clause.display(self.1), self.0.weight)
    }
}

/// The output of `Dn`: a set of weighted clauses.
pub type NormalSet = BTreeSet<WeightedClause>;

/// Disjunction of the full-width model conjunctions, in enumeration order.
/// An unsatisfiable formula yields `⊥`.
pub fn canonical_dnf(f: &Formula, atoms: usize) -> Formula {
    let models = ModelSet::of_formula(f, atoms);
    Formula::disjunction(models.iter().map(|row| {
        let assignment = ModelSet::assignment(atoms, row);
        Formula::conjunction(assignment.iter().enumerate().map(|(atom, value)| {
            Literal {
                atom,
                negated: !value,
            }
            .to_formula()
        }))
    }))
}

/// One full-width clause per non-model: the negation of that model's row.
pub fn maxterms(models: &ModelSet) -> BTreeSet<Clause> {
    let atoms = models.atoms();
    models
        .complement()
        .iter()
        .map(|row| {
            let assignment = ModelSet::assignment(atoms, row);
            Clause(
                assignment
                    .iter()
                    .enumerate()
                    .map(|(atom, value)| Literal {
                        atom,
                        negated: *value,
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Canonical conjunctive form as a clause set. Tautologies give the empty
/// set and contradictions give the set holding only the empty clause.
pub fn canonical_cnf(f: &Formula, atoms: usize) -> BTreeSet<Clause> {
    cnf_of_models(&ModelSet::of_formula(f, atoms))
}

pub fn cnf_of_models(models: &ModelSet) -> BTreeSet<Clause> {
    if models.is_empty() {
        return BTreeSet::from([Clause::empty()]);
    }
    prime_implicates(maxterms(models))
}

/// The flat decomposer: the clauses of the canonical conjunctive form.
pub fn decompose_flat(f: &Formula, atoms: usize) -> BTreeSet<Clause> {
    canonical_cnf(f, atoms)
}

/// `Dn`: every clause of every formula, paired with the formula's weight.
pub fn decompose(premises: &WeightedSet, atoms: usize) -> NormalSet {
    let mut out = NormalSet::new();
    for wf in premises {
        for clause in decompose_flat(&wf.formula, atoms) {
            out.insert(WeightedClause {
                clause,
                weight: wf.weight,
            });
        }
    }
    out
}

pub fn decompose_one(wf: &WeightedFormula, atoms: usize) -> NormalSet {
    decompose_flat(&wf.formula, atoms)
        .into_iter()
        .map(|clause| WeightedClause {
            clause,
            weight: wf.weight,
        })
        .collect()
}

/// Round-based merging of full-width clauses into prime implicates.
///
/// Every implicate of width `k` is present in the round that handles width
/// `k`, so a clause without a partner in its round is prime. Unit clauses
/// never meet both polarities here because the input is satisfiable.
pub fn prime_implicates(full_width: BTreeSet<Clause>) -> BTreeSet<Clause> {
    let mut level: HashSet<Clause> = full_width.into_iter().collect();
    let mut primes = BTreeSet::new();
    while !level.is_empty() {
        let mut next = HashSet::new();
        let mut merged = HashSet::new();
        for c in &level {
            for i in 0..c.len() {
                if level.contains(&c.flipped(i)) {
                    next.insert(c.without(i));
                    merged.insert(c.clone());
                }
            }
        }
        primes.extend(level.into_iter().filter(|c| !merged.contains(c)));
        level = next;
    }
    primes
}

/// Consuming merges under an arbitrary choice of pair at each step.
///
/// Each step replaces both clauses of one mergeable pair by their merge.
/// Unit clauses never merge. `choose` receives every currently mergeable
/// pair in lexicographic order and returns the index of the pair to merge,
/// so always returning 0 is the restart-after-each-merge lexicographic scan.
pub fn merge_clauses_with<F>(mut clauses: BTreeSet<Clause>, mut choose: F) -> BTreeSet<Clause>
where
    F: FnMut(&[(Clause, Clause, usize)]) -> usize,
{
    loop {
        let mut pairs = Vec::new();
        for c in &clauses {
            if c.len() < 2 {
                continue;
            }
            for i in 0..c.len() {
                let other = c.flipped(i);
                if other > *c && clauses.contains(&other) {
                    pairs.push((c.clone(), other, i));
                }
            }
        }
        if pairs.is_empty() {
            return clauses;
        }
        pairs.sort();
        let pick = choose(&pairs).min(pairs.len() - 1);
        let (c, other, pos) = pairs.swap_remove(pick);
        clauses.remove(&c);
        clauses.remove(&other);
        clauses.insert(c.without(pos));
    }
}
