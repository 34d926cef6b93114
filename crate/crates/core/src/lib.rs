//! Evaluating candidate decodings of enthymemes in weighted propositional logic.
//!
//! An enthymeme is an argument whose premises do not yield its claim. A
//! decoding proposes premises and a claim meant to capture the intended
//! argument. This crate parses problems, normalizes weighted formulas into
//! clauses, computes the logical quantities criterion measures depend on,
//! scores decodings against configurable measure sequences and ranks them.

pub mod closure;
pub mod error;
pub mod formula;
pub mod logic;
pub mod measures;
pub mod normal;
pub mod number;
pub mod parser;
pub mod problem;
pub mod quality;
pub mod report;
pub mod semantics;

pub use error::{Error, Result};
pub use formula::{Formula, Literal, Vocabulary};
pub use logic::{ApproxArgument, Caps, Classification, LogicConfig, WLog, WeightedFormula, WeightedLogic, WeightedSet};

pub use normal::{Clause, NormalSet, WeightedClause};
pub use number::{Rational, Weight};
pub use measures::{Context, MeasureKind, MeasureSpec};
pub use parser::parse_formula;
pub use quality::{Aggregator, QualityConfig};

