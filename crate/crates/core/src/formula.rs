//! Propositional formulas over a declared, ordered atom vocabulary.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// The ordered list of declared atoms. Declaration order is the
/// enumeration order used by canonical normal forms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocabulary {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    pub fn new<I, S>(names: I) -> Result<Vocabulary>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut vocab = Vocabulary::default();
        for name in names {
            vocab.declare(name.as_ref())?;
        }
        Ok(vocab)
    }

    pub fn declare(&mut self, name: &str) -> Result<usize> {
        if !is_atom_name(name) {
            return Err(Error::InvalidAtomName(name.to_string()));
        }
        if self.index.contains_key(name) {
            return Err(Error::DuplicateAtom(name.to_string()));
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, atom: usize) -> &str {
        &self.names[atom]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// True when `name` matches `[A-Za-z_][A-Za-z0-9_]*` and is not a constant keyword.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "true" && name != "false"
}

/// A literal: an atom index and its polarity. Positive literals order
/// before negative ones on the same atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: usize) -> Literal {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: usize) -> Literal {
        Literal {
            atom,
            negated: true,
        }
    }

    pub fn complement(self) -> Literal {
        Literal {
            atom: self.atom,
            negated: !self.negated,
        }
    }

    pub fn to_formula(self) -> Formula {
        if self.negated {
            Formula::not(Formula::Atom(self.atom))
        } else {
            Formula::Atom(self.atom)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// Left-nested conjunction; `True` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }

    /// Left-nested disjunction; `False` when empty.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::False)
    }

    /// Largest atom index plus one, or zero for constant formulas.
    pub fn atom_bound(&self) -> usize {
        match self {
            Formula::True | Formula::False => 0,
            Formula::Atom(a) => a + 1,
            Formula::Not(f) => f.atom_bound(),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => l.atom_bound().max(r.atom_bound()),
        }
    }

    pub fn atoms(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<usize>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(a) => {
                out.insert(*a);
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Literals occurring in the negation normal form of the formula.
    ///
    /// An atom occurs positively or negatively depending on the number of
    /// negations above it, where an implication's antecedent counts as
    /// negated and both sides of a biconditional occur with both polarities.
    pub fn literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        self.collect_literals(false, &mut out);
        out
    }

    fn collect_literals(&self, negated: bool, out: &mut BTreeSet<Literal>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(a) => {
                out.insert(Literal { atom: *a, negated });
            }
            Formula::Not(f) => f.collect_literals(!negated, out),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_literals(negated, out);
                r.collect_literals(negated, out);
            }
            Formula::Implies(l, r) => {
                l.collect_literals(!negated, out);
                r.collect_literals(negated, out);
            }
            Formula::Iff(l, r) => {
                for side in [l, r] {
                    side.collect_literals(false, out);
                    side.collect_literals(true, out);
                }
            }
        }
    }

    /// Evaluates the formula under an assignment indexed by atom.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(a) => assignment[*a],
            Formula::Not(f) => !f.eval(assignment),
            Formula::And(l, r) => l.eval(assignment) && r.eval(assignment),
            Formula::Or(l, r) => l.eval(assignment) || r.eval(assignment),
            Formula::Implies(l, r) => !l.eval(assignment) || r.eval(assignment),
            Formula::Iff(l, r) => l.eval(assignment) == r.eval(assignment),
        }
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> FormulaDisplay<'a> {
        FormulaDisplay {
            formula: self,
            vocab,
            style: Style::Unicode,
        }
    }

    pub fn ascii<'a>(&'a self, vocab: &'a Vocabulary) -> FormulaDisplay<'a> {
        FormulaDisplay {
            formula: self,
            vocab,
            style: Style::Ascii,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Unicode,
    Ascii,
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    vocab: &'a Vocabulary,
    style: Style,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Op {
    And,
    Or,
    Implies,
    Iff,
}

impl Op {
    fn of(f: &Formula) -> Option<(Op, &Formula, &Formula)> {
        match f {
            Formula::And(l, r) => Some((Op::And, l, r)),
            Formula::Or(l, r) => Some((Op::Or, l, r)),
            Formula::Implies(l, r) => Some((Op::Implies, l, r)),
            Formula::Iff(l, r) => Some((Op::Iff, l, r)),
            _ => None,
        }
    }

    fn left_assoc(self) -> bool {
        matches!(self, Op::And | Op::Or)
    }

    fn symbol(self, style: Style) -> &'static str {
        match (self, style) {
            (Op::And, Style::Unicode) => " ∧ ",
            (Op::Or, Style::Unicode) => " ∨ ",
            (Op::Implies, Style::Unicode) => " → ",
            (Op::Iff, Style::Unicode) => " ↔ ",
            (Op::And, Style::Ascii) => " & ",
            (Op::Or, Style::Ascii) => " | ",
            (Op::Implies, Style::Ascii) => " -> ",
            (Op::Iff, Style::Ascii) => " <-> ",
        }
    }
}

impl FormulaDisplay<'_> {
    fn write(&self, f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f {
            Formula::True => out.write_str(if self.style == Style::Unicode {
                "⊤"
            } else {
                "true"
            }),
            Formula::False => out.write_str(if self.style == Style::Unicode {
                "⊥"
            } else {
                "false"
            }),
            Formula::Atom(a) => out.write_str(self.vocab.name(*a)),
            Formula::Not(inner) => {
                out.write_str(if self.style == Style::Unicode { "¬" } else { "!" })?;
                if Op::of(inner).is_some() {
                    out.write_str("(")?;
                    self.write(inner, out)?;
                    out.write_str(")")
                } else {
                    self.write(inner, out)
                }
            }
            _ => {
                let (op, l, r) = Op::of(f).expect("binary node");
                self.child(op, l, op.left_assoc(), out)?;
                out.write_str(op.symbol(self.style))?;
                self.child(op, r, !op.left_assoc(), out)
            }
        }
    }

    /// Writes a binary operand, omitting parentheses only on the side
    /// where the parser would regroup an unparenthesized chain the same way.
    fn child(
        &self,
        parent: Op,
        child: &Formula,
        chain_side: bool,
        out: &mut fmt::Formatter<'_>,
    ) -> fmt::Result {
        match Op::of(child) {
            Some((op, _, _)) if !(op == parent && chain_side) => {
                out.write_str("(")?;
                self.write(child, out)?;
                out.write_str(")")
            }
            _ => self.write(child, out),
        }
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.formula, out)
    }
}
