//! Weighted formulas and the weighted consequence relation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{Formula, Vocabulary};
use crate::number::Weight;
use crate::semantics::{models_of_all, ModelSet, MAX_TABLE_ATOMS};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedFormula {
    pub formula: Formula,
    pub weight: Weight,
}

impl WeightedFormula {
    pub fn new(formula: Formula, weight: Weight) -> WeightedFormula {
        WeightedFormula { formula, weight }
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        DisplayWeighted(self, vocab)
    }
}

struct DisplayWeighted<'a>(&'a WeightedFormula, &'a Vocabulary);

impl fmt::Display for DisplayWeighted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.0.formula.display(self.1), self.0.weight)
    }
}

/// A finite set of weighted formulas. Insertion order is kept so that
/// subset enumeration is deterministic; equality ignores it.
#[derive(Clone, Debug, Default, Eq)]
pub struct WeightedSet {
    items: Vec<WeightedFormula>,
}

impl WeightedSet {
    pub fn new() -> WeightedSet {
        WeightedSet::default()
    }

    pub fn insert(&mut self, wf: WeightedFormula) -> bool {
        if self.items.contains(&wf) {
            false
        } else {
            self.items.push(wf);
            true
        }
    }

    pub fn contains(&self, wf: &WeightedFormula) -> bool {
        self.items.contains(wf)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeightedFormula> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[WeightedFormula] {
        &self.items
    }

    /// The flat formulas, one per element.
    pub fn flat(&self) -> impl Iterator<Item = &Formula> {
        self.items.iter().map(|wf| &wf.formula)
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.items.iter().map(|wf| wf.weight)
    }

    /// The elements selected by the bitmask `mask` over positions.
    pub fn select(&self, mask: u64) -> WeightedSet {
        self.items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, wf)| wf.clone())
            .collect()
    }

    pub fn union(&self, other: &WeightedSet) -> WeightedSet {
        let mut out = self.clone();
        for wf in other.iter() {
            out.insert(wf.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        DisplaySet(self, vocab)
    }
}

struct DisplaySet<'a>(&'a WeightedSet, &'a Vocabulary);

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, wf) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", wf.display(self.1))?;
        }
        f.write_str("}")
    }
}

impl PartialEq for WeightedSet {
    fn eq(&self, other: &WeightedSet) -> bool {
        self.len() == other.len() && self.items.iter().all(|wf| other.contains(wf))
    }
}

impl FromIterator<WeightedFormula> for WeightedSet {
    fn from_iter<I: IntoIterator<Item = WeightedFormula>>(iter: I) -> WeightedSet {
        let mut set = WeightedSet::new();
        for wf in iter {
            set.insert(wf);
        }
        set
    }
}

impl<'a> IntoIterator for &'a WeightedSet {
    type Item = &'a WeightedFormula;
    type IntoIter = std::slice::Iter<'a, WeightedFormula>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// A pair of premises and a claim. Enthymemes and decodings are both
/// represented this way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxArgument {
    pub premises: WeightedSet,
    pub claim: WeightedFormula,
}

impl ApproxArgument {
    pub fn new(premises: WeightedSet, claim: WeightedFormula) -> ApproxArgument {
        ApproxArgument { premises, claim }
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        DisplayArg(self, vocab)
    }
}

struct DisplayArg<'a>(&'a ApproxArgument, &'a Vocabulary);

impl fmt::Display for DisplayArg<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{}, {}⟩",
            self.0.premises.display(self.1),
            self.0.claim.display(self.1)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Argument,
    Enthymeme,
    OtherApprox,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Argument => "argument",
            Classification::Enthymeme => "enthymeme",
            Classification::OtherApprox => "other",
        })
    }
}

/// Configurable resource limits. Exceeding one is an error, never a silent cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_atoms: usize,
    pub max_premises: usize,
    pub max_literals: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            max_atoms: 16,
            max_premises: 12,
            max_literals: 12,
        }
    }
}

impl Caps {
    pub fn check_premises(&self, n: usize) -> Result<()> {
        if n > self.max_premises {
            return Err(Error::CapExceeded {
                what: "premise set",
                actual: n,
                limit: self.max_premises,
            });
        }
        Ok(())
    }
}

/// How the weights of a premise set are aggregated into one value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WeightAggregator {
    #[default]
    Minimum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LogicConfig {
    /// Inconsistency threshold `t`.
    pub threshold: Weight,
    pub aggregator: WeightAggregator,
    /// Aggregate of the empty weight multiset.
    pub empty_aggregate: Weight,
    pub caps: Caps,
}

impl Default for LogicConfig {
    fn default() -> LogicConfig {
        LogicConfig {
            threshold: Weight::HALF,
            aggregator: WeightAggregator::Minimum,
            empty_aggregate: Weight::ONE,
            caps: Caps::default(),
        }
    }
}

/// The interface measures rely on: a consequence relation, an
/// inconsistency test and the weight aggregator `V`.
pub trait WeightedLogic {
    fn atom_count(&self) -> usize;
    fn config(&self) -> &LogicConfig;
    fn aggregate(&self, premises: &WeightedSet) -> Weight;
    fn consequence(&self, premises: &WeightedSet, claim: &WeightedFormula) -> bool;
    fn is_inconsistent(&self, premises: &WeightedSet) -> bool;
}

/// Weighted propositional logic: a non-tautological claim follows when it
/// follows classically and its weight equals the minimum premise weight.
#[derive(Clone, Debug)]
pub struct WLog {
    atoms: usize,
    config: LogicConfig,
}

impl WLog {
    pub fn new(atoms: usize, config: LogicConfig) -> Result<WLog> {
        let limit = config.caps.max_atoms.min(MAX_TABLE_ATOMS);
        if atoms > limit {
            return Err(Error::CapExceeded {
                what: "atom",
                actual: atoms,
                limit,
            });
        }
        Ok(WLog { atoms, config })
    }

    pub fn models(&self, f: &Formula) -> ModelSet {
        ModelSet::of_formula(f, self.atoms)
    }

    pub fn models_of_set(&self, premises: &WeightedSet) -> ModelSet {
        models_of_all(premises.flat(), self.atoms)
    }

    pub fn is_tautology(&self, f: &Formula) -> bool {
        self.models(f).is_full()
    }

    pub fn is_satisfiable(&self, f: &Formula) -> bool {
        !self.models(f).is_empty()
    }

    /// Classical entailment from the flat premises to `goal`.
    pub fn flat_entails(&self, premises: &WeightedSet, goal: &Formula) -> bool {
        self.models_of_set(premises).is_subset_of(&self.models(goal))
    }

    pub fn classify(&self, arg: &ApproxArgument) -> Result<Classification> {
        if !self.consequence(&arg.premises, &arg.claim) {
            return Ok(Classification::Enthymeme);
        }
        if self.is_inconsistent(&arg.premises) {
            return Ok(Classification::OtherApprox);
        }
        let n = arg.premises.len();
        self.config.caps.check_premises(n)?;
        let full = (1u64 << n) - 1;
        for mask in 0..full {
            if self.consequence(&arg.premises.select(mask), &arg.claim) {
                return Ok(Classification::OtherApprox);
            }
        }
        Ok(Classification::Argument)
    }
}

impl WeightedLogic for WLog {
    fn atom_count(&self) -> usize {
        self.atoms
    }

    fn config(&self) -> &LogicConfig {
        &self.config
    }

    fn aggregate(&self, premises: &WeightedSet) -> Weight {
        match self.config.aggregator {
            WeightAggregator::Minimum => premises
                .weights()
                .min()
                .unwrap_or(self.config.empty_aggregate),
        }
    }

    fn consequence(&self, premises: &WeightedSet, claim: &WeightedFormula) -> bool {
        if self.is_tautology(&claim.formula) {
            return claim.weight == Weight::ONE;
        }
        self.flat_entails(premises, &claim.formula) && claim.weight == self.aggregate(premises)
    }

    fn is_inconsistent(&self, premises: &WeightedSet) -> bool {
        self.models_of_set(premises).is_empty() && self.aggregate(premises) >= self.config.threshold
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;

    fn setup() -> (Vocabulary, WLog) {
        let v = Vocabulary::new(["w", "r", "p", "l", "h", "x"]).unwrap();
        let logic = WLog::new(v.len(), LogicConfig::default()).unwrap();
        (v, logic)
    }

    fn wf(v: &Vocabulary, s: &str, w: &str) -> WeightedFormula {
        WeightedFormula::new(parse_formula(s, v).unwrap(), Weight::parse(w).unwrap())
    }

    fn set(v: &Vocabulary, items: &[(&str, &str)]) -> WeightedSet {
        items.iter().map(|(s, w)| wf(v, s, w)).collect()
    }

    #[test]
    fn weighted_consequence_needs_matching_weight() {
        let (v, logic) = setup();
        let gamma = set(&v, &[("p", "0.8"), ("l", "0.9"), ("¬p ∨ ¬l ∨ h", "0.9")]);
        assert!(logic.consequence(&gamma, &wf(&v, "h", "0.8")));
        assert!(!logic.consequence(&gamma, &wf(&v, "h", "0.7")));
        assert!(logic.consequence(&WeightedSet::new(), &wf(&v, "h ∨ ¬h", "1")));
        assert!(!logic.consequence(&gamma, &wf(&v, "h ∨ ¬h", "0.8")));
    }

    #[test]
    fn inconsistency_is_gated_by_threshold() {
        let (v, logic) = setup();
        assert!(logic.is_inconsistent(&set(&v, &[("p", "0.7"), ("¬p", "0.5")])));
        assert!(!logic.is_inconsistent(&set(&v, &[("p", "0.7"), ("¬p", "0.4")])));
        // A low-weight addition lowers the minimum and the set stops counting.
        assert!(!logic.is_inconsistent(&set(&v, &[("p", "0.7"), ("¬p", "0.7"), ("r", "0.3")])));
        assert!(!logic.is_inconsistent(&WeightedSet::new()));
    }

    #[test]
    fn running_example_classification() {
        let (v, logic) = setup();
        let h = wf(&v, "h", "0.7");
        let e = ApproxArgument::new(
            set(&v, &[("w", "0.7"), ("r", "0.7"), ("p", "0.8"), ("l", "0.9")]),
            h.clone(),
        );
        let d1 = ApproxArgument::new(set(&v, &[("r", "0.7"), ("¬r ∨ h", "0.8")]), h.clone());
        let d2 = ApproxArgument::new(
            set(&v, &[("p", "0.8"), ("l", "0.9"), ("¬p ∨ ¬l ∨ h", "0.9")]),
            h.clone(),
        );
        let d3 = ApproxArgument::new(
            set(&v, &[("¬r", "0.7"), ("w", "0.7"), ("¬w ∨ h", "0.8")]),
            h,
        );
        assert_eq!(logic.classify(&e).unwrap(), Classification::Enthymeme);
        assert_eq!(logic.classify(&d1).unwrap(), Classification::Argument);
        assert_eq!(logic.classify(&d2).unwrap(), Classification::Enthymeme);
        assert_eq!(logic.classify(&d3).unwrap(), Classification::OtherApprox);
    }

    #[test]
    fn atom_cap_is_enforced() {
        let err = WLog::new(17, LogicConfig::default()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { what: "atom", .. }));
    }

    #[test]
    fn set_equality_ignores_order() {
        let (v, _) = setup();
        let a = set(&v, &[("p", "0.5"), ("r", "0.5")]);
        let b = set(&v, &[("r", "0.5"), ("p", "0.5"), ("p", "0.5")]);
        assert_eq!(a, b);
        assert_eq!(b.len(), 2);
    }
}
