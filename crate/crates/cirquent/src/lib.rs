//! Cirquent calculus for the `(~, /\, \/)` fragment of computability
//! logic: the proof system CL5.
//!
//! A *cirquent* generalizes a sequent by letting different disjunctive
//! groups share formula occurrences through explicit arcs. This crate
//! implements the shallow (height-2) cirquents CL5 works with, the six
//! inference rules, a step-by-step proof checker, a terminating
//! exhaustive prover, and an independent brute-force validity oracle to
//! cross-validate the prover against.
//!
//! ```
//! use cirquent::{prove, Cirquent, Formula, Limits, ProveOutcome};
//!
//! let excluded_middle = Formula::parse("~A \\/ A").unwrap();
//! let outcome = prove(&Cirquent::from_formula(excluded_middle), Limits::default());
//! assert!(matches!(outcome, ProveOutcome::Provable(_)));
//!
//! // contraction is classically fine but fails here: one pregnancy test
//! // kit cannot answer two questions
//! let contraction = Formula::parse("~A \\/ (A /\\ A)").unwrap();
//! let outcome = prove(&Cirquent::from_formula(contraction), Limits::default());
//! assert!(matches!(outcome, ProveOutcome::NotProvable { .. }));
//! ```
//!
//! The `examples/` directory walks every capability: parsing, building
//! cirquents, applying rules, checking and searching for proofs, the
//! oracle, and rendering. The `cl5` binary wraps the same operations for
//! the command line.

pub mod cirquent;
pub mod cli;
pub mod formula;
pub mod io;
pub mod oracle;
pub mod proof;
pub mod prover;
pub mod render;
pub mod rules;
pub mod samples;

pub use crate::cirquent::{CanonicalForm, Cirquent, CirquentError, Measure};
pub use crate::formula::{Atom, EvalError, Formula, Literal, ParseError};
pub use crate::oracle::{
    enumerate_binarizations, is_tautology, is_tautology_capped, oracle_valid, Binarization,
    OracleError,
};
pub use crate::proof::{check_proof, CheckMode, Failure, Proof, ProofStep, ReasonCode, Verdict};
pub use crate::prover::{proof_stats, prove, Limits, ProofStats, ProveOutcome};
pub use crate::render::{render, render_proof, RenderFormat, RenderSpec};
pub use crate::rules::{
    apply_forward, enumerate_backward, ExchangeKind, NewFormula, RuleApplication, RuleError,
};
