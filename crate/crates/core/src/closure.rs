//! Finite consequence machinery: the flat finite closure `fCN`, minimal
//! inconsistent subsets and entailing subsets of a normalized set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formula::Literal;
use crate::logic::{WLog, WeightedLogic, WeightedSet};
use crate::normal::{Clause, NormalSet, WeightedClause};
use crate::semantics::ModelSet;
use crate::Formula;

/// Which premises scope the literals a closure clause may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosureScope {
    /// Literals of the whole premise set.
    #[default]
    WholeSet,
    /// Literals of some minimal premise subset that entails the clause.
    MinimalSupport,
}

/// Index lists of all subsets of `0..n`, by size and then lexicographically.
pub fn subsets_by_size(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << n);
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            out.push(combo.clone());
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    out
}

fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, i| m | 1 << i)
}

/// Union of the polarity-aware literals of every premise.
pub fn premise_literals(premises: &WeightedSet) -> BTreeSet<Literal> {
    premises.flat().flat_map(Formula::literals).collect()
}

/// Every clause over `lits` with no complementary pair, the empty clause included.
fn clauses_over(lits: &BTreeSet<Literal>) -> Vec<Clause> {
    let mut atoms: Vec<(usize, Vec<Literal>)> = Vec::new();
    for lit in lits {
        match atoms.last_mut() {
            Some((a, options)) if *a == lit.atom => options.push(*lit),
            _ => atoms.push((lit.atom, vec![*lit])),
        }
    }
    let mut out = vec![Vec::new()];
    for (_, options) in &atoms {
        let mut next = Vec::with_capacity(out.len() * (options.len() + 1));
        for partial in &out {
            next.push(partial.clone());
            for lit in options {
                let mut extended = partial.clone();
                extended.push(*lit);
                next.push(extended);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|lits| Clause::new(lits).expect("one literal per atom"))
        .collect()
}

/// The flat finite closure of `premises`: every non-tautological clause
/// built from the premises' literals that the flat premises entail.
///
/// The empty clause belongs to the closure exactly when the flat premises
/// are unsatisfiable. An empty premise set has an empty closure.
pub fn flat_finite_cn(
    logic: &WLog,
    premises: &WeightedSet,
    scope: ClosureScope,
) -> Result<BTreeSet<Clause>> {
    if premises.is_empty() {
        return Ok(BTreeSet::new());
    }
    let lits = premise_literals(premises);
    let cap = logic.config().caps.max_literals;
    if lits.len() > cap {
        return Err(Error::CapExceeded {
            what: "closure literal",
            actual: lits.len(),
            limit: cap,
        });
    }
    let atoms = logic.atom_count();
    let models = logic.models_of_set(premises);
    let entailed = clauses_over(&lits)
        .into_iter()
        .filter(|c| models.is_subset_of(&c.models(atoms)));
    match scope {
        ClosureScope::WholeSet => Ok(entailed.collect()),
        ClosureScope::MinimalSupport => {
            logic.config().caps.check_premises(premises.len())?;
            let subsets = subsets_by_size(premises.len());
            let formula_models: Vec<ModelSet> =
                premises.flat().map(|f| logic.models(f)).collect();
            let formula_lits: Vec<BTreeSet<Literal>> =
                premises.flat().map(Formula::literals).collect();
            Ok(entailed
                .filter(|c| has_scoped_minimal_support(c, atoms, &subsets, &formula_models, &formula_lits))
                .collect())
        }
    }
}

fn has_scoped_minimal_support(
    clause: &Clause,
    atoms: usize,
    subsets: &[Vec<usize>],
    formula_models: &[ModelSet],
    formula_lits: &[BTreeSet<Literal>],
) -> bool {
    let target = clause.models(atoms);
    let mut supports: Vec<u64> = Vec::new();
    for subset in subsets {
        let mask = mask_of(subset);
        if supports.iter().any(|s| s & mask == *s) {
            continue;
        }
        let mut m = ModelSet::full(atoms);
        for &i in subset {
            m.intersect_with(&formula_models[i]);
        }
        if !m.is_subset_of(&target) {
            continue;
        }
        supports.push(mask);
        let scoped = clause
            .literals()
            .iter()
            .all(|l| subset.iter().any(|&i| formula_lits[i].contains(l)));
        if scoped {
            return true;
        }
    }
    false
}

/// Minimal inconsistent subsets of `premises`, by size then position.
///
/// Unsatisfiable subsets with no unsatisfiable proper subset are collected
/// first and then filtered by the threshold on their minimum weight. That
/// filter is exact: a subset whose minimum weight reaches the threshold
/// has proper subsets with weights at least as high.
pub fn minimal_inconsistent_subsets(logic: &WLog, premises: &WeightedSet) -> Result<Vec<WeightedSet>> {
    logic.config().caps.check_premises(premises.len())?;
    let atoms = logic.atom_count();
    let formula_models: Vec<ModelSet> = premises.flat().map(|f| logic.models(f)).collect();
    let mut cores: Vec<u64> = Vec::new();
    for subset in subsets_by_size(premises.len()) {
        let mask = mask_of(&subset);
        if cores.iter().any(|c| c & mask == *c) {
            continue;
        }
        let mut m = ModelSet::full(atoms);
        for &i in &subset {
            m.intersect_with(&formula_models[i]);
        }
        if m.is_empty() {
            cores.push(mask);
        }
    }
    Ok(cores
        .into_iter()
        .map(|mask| premises.select(mask))
        .filter(|core| logic.is_inconsistent(core))
        .collect())
}

/// Subsets of a normalized set whose clauses jointly entail a goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntailingSubsets {
    pub items: Vec<WeightedClause>,
    /// Index lists into `items`, by size then lexicographically.
    pub subsets: Vec<Vec<usize>>,
}

impl EntailingSubsets {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn min_size(&self) -> Option<usize> {
        self.subsets.first().map(Vec::len)
    }
}

pub fn entailing_subsets(logic: &WLog, normal: &NormalSet, goal: &Formula) -> Result<EntailingSubsets> {
    logic.config().caps.check_premises(normal.len())?;
    let atoms = logic.atom_count();
    let items: Vec<WeightedClause> = normal.iter().cloned().collect();
    let clause_models: Vec<ModelSet> = items.iter().map(|wc| wc.clause.models(atoms)).collect();
    let target = logic.models(goal);
    let subsets = subsets_by_size(items.len())
        .into_iter()
        .filter(|subset| {
            let mut m = ModelSet::full(atoms);
            for &i in subset {
                m.intersect_with(&clause_models[i]);
            }
            m.is_subset_of(&target)
        })
        .collect();
    Ok(EntailingSubsets { items, subsets })
}
