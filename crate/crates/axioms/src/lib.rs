//! Property-based checking of criterion measures against their axioms.
//!
//! Each axiom is an implication: a hypothesis about one or two decodings of
//! an enthymeme and a conclusion about measure values. The harness draws
//! seeded instances biased towards the hypothesis, evaluates it exactly and
//! reports "no counterexample in n samples" or a replayable witness. Results
//! are evidence, not proofs.

pub mod axiom;
pub mod check;
pub mod generate;
pub mod matrix;
pub mod report;

pub use axiom::{AxiomId, Conclusion, Family};
pub use check::{
    argument_check, check_axiom, check_matrix, hypothesis, shipped_candidates, Candidate, CheckConfig, Conformance,
    MatrixReport, Outcome, Verdict,
};
pub use generate::{generate_instance, instance_seed, GenerationError, Instance, Shape};
pub use matrix::{regime_of, shipped_measures, Regime, ALL_REGIMES};
