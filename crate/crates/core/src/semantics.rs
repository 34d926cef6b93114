//! Truth tables as bitsets over the enumeration of interpretations.
//!
//! Row `k` of a table over `n` atoms is the interpretation in which atom `j`
//! is true exactly when bit `n - 1 - j` of `k` is clear. Row 0 therefore
//! makes every atom true and the first declared atom varies slowest, which
//! is the order canonical normal forms list their models in.

use crate::formula::{Formula, Literal};

/// Hard ceiling on table width, independent of configurable caps.
pub const MAX_TABLE_ATOMS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModelSet {
    atoms: usize,
    words: Vec<u64>,
}

impl ModelSet {
    fn word_count(atoms: usize) -> usize {
        assert!(atoms <= MAX_TABLE_ATOMS, "truth table too wide");
        ((1usize << atoms) + 63) / 64
    }

    fn tail_mask(atoms: usize) -> u64 {
        let rows = 1usize << atoms;
        if rows % 64 == 0 {
            u64::MAX
        } else {
            (1u64 << (rows % 64)) - 1
        }
    }

    pub fn empty(atoms: usize) -> ModelSet {
        ModelSet {
            atoms,
            words: vec![0; Self::word_count(atoms)],
        }
    }

    pub fn full(atoms: usize) -> ModelSet {
        let mut words = vec![u64::MAX; Self::word_count(atoms)];
        *words.last_mut().expect("at least one word") &= Self::tail_mask(atoms);
        ModelSet { atoms, words }
    }

    pub fn atom(atoms: usize, atom: usize) -> ModelSet {
        assert!(atom < atoms, "atom outside the table");
        let mut set = ModelSet::empty(atoms);
        let shift = atoms - 1 - atom;
        for row in 0..set.rows() {
            if (row >> shift) & 1 == 0 {
                set.words[row / 64] |= 1u64 << (row % 64);
            }
        }
        set
    }

    pub fn literal(atoms: usize, lit: Literal) -> ModelSet {
        let set = ModelSet::atom(atoms, lit.atom);
        if lit.negated {
            set.complement()
        } else {
            set
        }
    }

    pub fn of_formula(f: &Formula, atoms: usize) -> ModelSet {
        match f {
            Formula::True => ModelSet::full(atoms),
            Formula::False => ModelSet::empty(atoms),
            Formula::Atom(a) => ModelSet::atom(atoms, *a),
            Formula::Not(g) => ModelSet::of_formula(g, atoms).complement(),
            Formula::And(l, r) => {
                let mut m = ModelSet::of_formula(l, atoms);
                m.intersect_with(&ModelSet::of_formula(r, atoms));
                m
            }
            Formula::Or(l, r) => {
                let mut m = ModelSet::of_formula(l, atoms);
                m.union_with(&ModelSet::of_formula(r, atoms));
                m
            }
            Formula::Implies(l, r) => {
                let mut m = ModelSet::of_formula(l, atoms).complement();
                m.union_with(&ModelSet::of_formula(r, atoms));
                m
            }
            Formula::Iff(l, r) => {
                let a = ModelSet::of_formula(l, atoms);
                let b = ModelSet::of_formula(r, atoms);
                let mut words: Vec<u64> = a
                    .words
                    .iter()
                    .zip(&b.words)
                    .map(|(x, y)| !(x ^ y))
                    .collect();
                *words.last_mut().expect("at least one word") &= Self::tail_mask(atoms);
                ModelSet { atoms, words }
            }
        }
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    pub fn rows(&self) -> usize {
        1usize << self.atoms
    }

    pub fn contains(&self, row: usize) -> bool {
        (self.words[row / 64] >> (row % 64)) & 1 == 1
    }

    pub fn complement(&self) -> ModelSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        *words.last_mut().expect("at least one word") &= Self::tail_mask(self.atoms);
        ModelSet {
            atoms: self.atoms,
            words,
        }
    }

    pub fn intersect_with(&mut self, other: &ModelSet) {
        debug_assert_eq!(self.atoms, other.atoms);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &ModelSet) {
        debug_assert_eq!(self.atoms, other.atoms);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == ModelSet::full(self.atoms)
    }

    pub fn is_subset_of(&self, other: &ModelSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Rows in the set, in enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows()).filter(move |r| self.contains(*r))
    }

    /// The interpretation of `row`, indexed by atom.
    pub fn assignment(atoms: usize, row: usize) -> Vec<bool> {
        (0..atoms)
            .map(|j| (row >> (atoms - 1 - j)) & 1 == 0)
            .collect()
    }
}

/// Models of a conjunction of formulas.
pub fn models_of_all<'a, I>(formulas: I, atoms: usize) -> ModelSet
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut acc = ModelSet::full(atoms);
    for f in formulas {
        acc.intersect_with(&ModelSet::of_formula(f, atoms));
        if acc.is_empty() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn row_zero_is_all_true() {
        let p = ModelSet::atom(3, 0);
        let r = ModelSet::atom(3, 2);
        assert!(p.contains(0) && r.contains(0));
        assert_eq!(ModelSet::assignment(3, 0), vec![true, true, true]);
        assert_eq!(ModelSet::assignment(3, 1), vec![true, true, false]);
        assert_eq!(ModelSet::assignment(3, 4), vec![false, true, true]);
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn zero_atoms() {
        assert!(ModelSet::of_formula(&Formula::True, 0).is_full());
        assert!(ModelSet::of_formula(&Formula::False, 0).is_empty());
        assert_eq!(ModelSet::full(0).rows(), 1);
    }

    #[test]
    fn wide_tables() {
        let f = Formula::or(Formula::Atom(0), Formula::not(Formula::Atom(7)));
        let m = ModelSet::of_formula(&f, 8);
        assert_eq!(m.iter().count(), 192);
        assert!(ModelSet::of_formula(&Formula::or(Formula::Atom(3), Formula::not(Formula::Atom(3))), 8).is_full());
    }

    proptest! {
        #[test]
        fn bitset_agrees_with_direct_evaluation(
            ops in proptest::collection::vec((0u8..4, 0usize..7, 0usize..7), 1..8),
            n in 1usize..8,
        ) {
            let mut f = Formula::Atom(0);
            for (op, a, b) in ops {
                let x = Formula::Atom(a % n);
                let y = Formula::Atom(b % n);
                f = match op {
                    0 => Formula::and(f, Formula::not(x)),
                    1 => Formula::or(f, x),
                    2 => Formula::implies(x, f),
                    _ => Formula::iff(f, Formula::or(x, y)),
                };
            }
            let m = ModelSet::of_formula(&f, n);
            for row in 0..m.rows() {
                prop_assert_eq!(m.contains(row), f.eval(&ModelSet::assignment(n, row)));
            }
        }
    }
}
