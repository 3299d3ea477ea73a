//! Provability by terminating exhaustive backward search.
//!
//! The search walks backward rule instances depth first, memoizing
//! outcomes per Exchange-equivalence class (keyed by canonical form).
//! Connective-reducing splits are tried before Weakening and
//! Duplication. Every backward edge strictly shrinks the measure, so the
//! reachable space is finite and a failed exhaustive search is a genuine
//! "not provable", never a timeout in disguise.
//!
//! Successful searches are turned into strict proofs: Exchange is never
//! a search move, so swap steps are reinserted afterwards from the
//! permutations the canonicalizer recorded.

use std::collections::HashMap;
use std::rc::Rc;
use std::time::{Duration, Instant};

use crate::cirquent::Cirquent;
use crate::formula::{Atom, Formula};
use crate::proof::{check_proof, CheckMode, Failure, Proof, ProofStep};
use crate::rules::{apply_forward, enumerate_backward, exchange_path, RuleApplication};

/// Search resource bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of distinct canonical states to explore.
    pub max_states: usize,
    /// Wall-clock bound in seconds.
    pub max_seconds: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 1_000_000,
            max_seconds: 60,
        }
    }
}

/// Outcome of a provability query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProveOutcome {
    /// A proof was found; it passes strict checking.
    Provable(Proof),
    /// The whole finite backward space was exhausted without an axiom.
    NotProvable { states_explored: usize },
    /// A limit was hit before exhaustion — deliberately distinct from
    /// `NotProvable`, which is only reported on certainty.
    ResourceLimit(String),
}

impl ProveOutcome {
    pub fn is_provable(&self) -> bool {
        matches!(self, ProveOutcome::Provable(_))
    }
}

enum LimitHit {
    States(usize),
    Time(u64),
}

struct ProvedEntry {
    /// The concrete layout this class was first explored in; its proof
    /// below ends exactly here.
    representative: Cirquent,
    steps: Vec<ProofStep>,
}

struct Search {
    memo: HashMap<Cirquent, Option<Rc<ProvedEntry>>>,
    states: usize,
    started: Instant,
    limits: Limits,
}

impl Search {
    fn explore(&mut self, cirquent: &Cirquent) -> Result<Option<Rc<ProvedEntry>>, LimitHit> {
        let canonical = cirquent.canonicalize();
        if let Some(status) = self.memo.get(canonical.cirquent()) {
            return Ok(status.clone());
        }

        self.states += 1;
        if self.states > self.limits.max_states {
            return Err(LimitHit::States(self.limits.max_states));
        }
        if self.started.elapsed() > Duration::from_secs(self.limits.max_seconds) {
            return Err(LimitHit::Time(self.limits.max_seconds));
        }

        if cirquent.is_axiom() {
            let entry = Rc::new(ProvedEntry {
                representative: cirquent.clone(),
                steps: vec![ProofStep {
                    application: RuleApplication::Axiom {
                        cirquent: cirquent.clone(),
                    },
                    result: cirquent.clone(),
                }],
            });
            self.memo
                .insert(canonical.cirquent().clone(), Some(entry.clone()));
            return Ok(Some(entry));
        }

        // Axioms read classically as tautologies and every forward rule
        // preserves that, so a state whose conjunction-of-disjunctions
        // reading fails a truth table can never be proved. Cutting here
        // keeps the search exact while skipping dead subtrees.
        if !classical_reading_is_tautology(cirquent) {
            self.memo.insert(canonical.cirquent().clone(), None);
            return Ok(None);
        }

        for (rule, premise) in enumerate_backward(cirquent) {
            debug_assert!(premise.measure() < cirquent.measure(), "descent violated");
            if let Some(sub) = self.explore(&premise)? {
                let steps = assemble(cirquent, &premise, rule, &sub);
                let entry = Rc::new(ProvedEntry {
                    representative: cirquent.clone(),
                    steps,
                });
                self.memo
                    .insert(canonical.cirquent().clone(), Some(entry.clone()));
                return Ok(Some(entry));
            }
        }

        self.memo.insert(canonical.cirquent().clone(), None);
        Ok(None)
    }
}

/// Truth-table check of a cirquent's classical reading: under every
/// assignment, each group must contain a true occurrence. Deliberately
/// self-contained so the validity oracle stays an independent
/// implementation.
fn classical_reading_is_tautology(cirquent: &Cirquent) -> bool {
    let mut atoms: Vec<Atom> = Vec::new();
    for formula in cirquent.formulas() {
        for atom in formula.atoms() {
            if !atoms.contains(&atom) {
                atoms.push(atom);
            }
        }
    }
    if atoms.len() > 20 {
        return true; // table too big to be worth it; search on without the cut
    }
    let index: HashMap<&Atom, usize> = atoms.iter().enumerate().map(|(i, a)| (a, i)).collect();

    fn truth(formula: &Formula, index: &HashMap<&Atom, usize>, bits: u64) -> bool {
        match formula {
            Formula::Pos(a) => bits >> index[a] & 1 == 1,
            Formula::Neg(a) => bits >> index[a] & 1 == 0,
            Formula::And(l, r) => truth(l, index, bits) && truth(r, index, bits),
            Formula::Or(l, r) => truth(l, index, bits) || truth(r, index, bits),
        }
    }

    for bits in 0..1u64 << atoms.len() {
        let all_groups_hold = cirquent.groups().iter().all(|group| {
            group
                .iter()
                .any(|&i| truth(&cirquent.formulas()[i], &index, bits))
        });
        if !all_groups_hold {
            return false;
        }
    }
    true
}

/// Extends the sub-proof to `conclusion`: swap the proved layout into
/// the premise the rule expects, apply the rule, then swap the result
/// into the exact conclusion (backward Duplication can land its merged
/// copy at a different spot).
fn assemble(
    conclusion: &Cirquent,
    premise: &Cirquent,
    rule: RuleApplication,
    sub: &ProvedEntry,
) -> Vec<ProofStep> {
    let mut steps = sub.steps.clone();
    steps.extend(
        exchange_path(&sub.representative, premise)
            .into_iter()
            .map(|(application, result)| ProofStep {
                application,
                result,
            }),
    );
    let applied = apply_forward(premise, &rule).expect("backward edges replay forward");
    steps.push(ProofStep {
        application: rule,
        result: applied.clone(),
    });
    if &applied != conclusion {
        steps.extend(
            exchange_path(&applied, conclusion)
                .into_iter()
                .map(|(application, result)| ProofStep {
                    application,
                    result,
                }),
        );
    }
    steps
}

/// Decides CL5 provability of `target`, emitting a strict proof on
/// success. Deterministic: identical inputs and limits produce identical
/// outcomes and identical proofs.
pub fn prove(target: &Cirquent, limits: Limits) -> ProveOutcome {
    let mut search = Search {
        memo: HashMap::new(),
        states: 0,
        started: Instant::now(),
        limits,
    };
    match search.explore(target) {
        Err(LimitHit::States(n)) => {
            ProveOutcome::ResourceLimit(format!("state limit of {n} reached"))
        }
        Err(LimitHit::Time(s)) => {
            ProveOutcome::ResourceLimit(format!("time limit of {s}s reached"))
        }
        Ok(None) => ProveOutcome::NotProvable {
            states_explored: search.states,
        },
        Ok(Some(entry)) => {
            let mut steps = entry.steps.clone();
            if &entry.representative != target {
                steps.extend(
                    exchange_path(&entry.representative, target)
                        .into_iter()
                        .map(|(application, result)| ProofStep {
                            application,
                            result,
                        }),
                );
            }
            let proof = Proof::new(steps, target.clone());
            debug_assert!(
                check_proof(&proof, CheckMode::Strict).accepted(),
                "prover emitted an invalid proof"
            );
            ProveOutcome::Provable(proof)
        }
    }
}

/// Statistics over an accepted proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofStats {
    /// All steps, the axiom included.
    pub steps: usize,
    /// Steps that are not Exchange moves.
    pub steps_non_exchange: usize,
    /// Widest intermediate cirquent (formula occurrences).
    pub max_width: usize,
    /// Largest group count over the intermediate cirquents.
    pub max_groups: usize,
}

/// Measures a proof. The proof must pass checking (normalized mode, the
/// weaker of the two); unchecked garbage is rejected with the checker's
/// failure.
pub fn proof_stats(proof: &Proof) -> Result<ProofStats, Failure> {
    let verdict = check_proof(proof, CheckMode::Normalized);
    if let Some(failure) = verdict.failure() {
        return Err(failure.clone());
    }
    Ok(ProofStats {
        steps: proof.steps().len(),
        steps_non_exchange: proof
            .steps()
            .iter()
            .filter(|s| !matches!(s.application, RuleApplication::Exchange { .. }))
            .count(),
        max_width: proof
            .steps()
            .iter()
            .map(|s| s.result.formulas().len())
            .max()
            .unwrap_or(0),
        max_groups: proof
            .steps()
            .iter()
            .map(|s| s.result.groups().len())
            .max()
            .unwrap_or(0),
    })
}
