//! Proof objects and the step-by-step checker.
//!
//! A proof is a sequence of cirquents: the first introduced by the axiom
//! rule, each later one obtained from its predecessor by a single rule
//! application, the last being the conclusion. Steps carry their
//! resulting cirquent so that failures diff cleanly; an
//! applications-only proof can be elaborated into the full form.

use std::fmt;

use crate::cirquent::Cirquent;
use crate::rules::{apply_forward, RuleApplication, RuleError};

/// One proof step: a rule instance and the cirquent it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub application: RuleApplication,
    pub result: Cirquent,
}

/// A proof of `conclusion`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    steps: Vec<ProofStep>,
    conclusion: Cirquent,
}

/// How strictly results are compared while checking.
///
/// `Strict` demands byte-for-byte layouts. `Normalized` compares modulo
/// Exchange, which makes generated proofs and hand transcriptions with
/// spelled-out swap blocks interchangeable; it accepts everything
/// `Strict` does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckMode {
    #[default]
    Strict,
    Normalized,
}

/// Machine-readable reason for a rejection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReasonCode {
    /// Structurally broken proof object: no steps, an axiom application
    /// after step zero, or a rule that breaks cirquent invariants.
    Malformed,
    /// Step zero's cirquent is not an axiom.
    NotAxiom,
    /// A rule parameter points outside the cirquent.
    PositionRange,
    /// A Weakening arc clash: already present, or aimed past the
    /// inserted occurrence.
    WeakeningArc,
    /// A conjunction merge pair of the wrong shape.
    AndShape,
    /// A group holding a conjunct was left out of the merge pairs.
    AndCoverage,
    /// The recomputed cirquent differs from the one the step recorded.
    ResultMismatch,
    /// The last step does not yield the stated conclusion.
    ConclusionMismatch,
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReasonCode::Malformed => "MALFORMED",
            ReasonCode::NotAxiom => "NOT_AXIOM",
            ReasonCode::PositionRange => "POSITION_RANGE",
            ReasonCode::WeakeningArc => "WEAKENING_ARC",
            ReasonCode::AndShape => "AND_SHAPE",
            ReasonCode::AndCoverage => "AND_COVERAGE",
            ReasonCode::ResultMismatch => "RESULT_MISMATCH",
            ReasonCode::ConclusionMismatch => "CONCLUSION_MISMATCH",
        };
        f.write_str(s)
    }
}

/// Where and why a proof was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub step: usize,
    pub reason: ReasonCode,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {} — {}", self.step, self.reason, self.message)
    }
}

/// Outcome of checking: accepted, or rejected at the first bad step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict(Option<Failure>);

impl Verdict {
    fn accept() -> Verdict {
        Verdict(None)
    }

    fn reject(step: usize, reason: ReasonCode, message: impl Into<String>) -> Verdict {
        Verdict(Some(Failure {
            step,
            reason,
            message: message.into(),
        }))
    }

    pub fn accepted(&self) -> bool {
        self.0.is_none()
    }

    pub fn failure(&self) -> Option<&Failure> {
        self.0.as_ref()
    }
}

fn reason_for(error: &RuleError) -> ReasonCode {
    match error {
        RuleError::AxiomTakesNoPremise => ReasonCode::Malformed,
        RuleError::PositionOutOfRange { .. } => ReasonCode::PositionRange,
        RuleError::ArcAlreadyPresent { .. } | RuleError::ArcMismatch { .. } => {
            ReasonCode::WeakeningArc
        }
        RuleError::AndShape(_) => ReasonCode::AndShape,
        RuleError::AndCoverage { .. } => ReasonCode::AndCoverage,
        RuleError::Invariant(_) => ReasonCode::Malformed,
    }
}

impl Proof {
    /// Wraps already-elaborated steps. Use [`check_proof`] to validate.
    pub fn new(steps: Vec<ProofStep>, conclusion: Cirquent) -> Proof {
        Proof { steps, conclusion }
    }

    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn conclusion(&self) -> &Cirquent {
        &self.conclusion
    }

    /// Elaborates an applications-only proof by recomputing every result
    /// forward. Fails like [`check_proof`] on any step that cannot be
    /// applied.
    pub fn from_applications(
        applications: Vec<RuleApplication>,
        conclusion: Cirquent,
    ) -> Result<Proof, Failure> {
        Proof::elaborate(
            applications.into_iter().map(|a| (a, None)).collect(),
            conclusion,
        )
    }

    /// Elaborates a proof whose steps may or may not carry results.
    /// Recorded results are kept as written (the checker will compare
    /// them); missing ones are filled in by forward application.
    pub fn elaborate(
        steps: Vec<(RuleApplication, Option<Cirquent>)>,
        conclusion: Cirquent,
    ) -> Result<Proof, Failure> {
        if steps.is_empty() {
            return Err(Failure {
                step: 0,
                reason: ReasonCode::Malformed,
                message: "a proof needs at least one step".into(),
            });
        }
        let mut elaborated: Vec<ProofStep> = Vec::with_capacity(steps.len());
        for (index, (application, recorded)) in steps.into_iter().enumerate() {
            let computed = if index == 0 {
                match &application {
                    RuleApplication::Axiom { cirquent } => {
                        if !cirquent.is_axiom() {
                            return Err(Failure {
                                step: 0,
                                reason: ReasonCode::NotAxiom,
                                message: format!("{cirquent} is not an axiom"),
                            });
                        }
                        cirquent.clone()
                    }
                    other => {
                        return Err(Failure {
                            step: 0,
                            reason: ReasonCode::Malformed,
                            message: format!("a proof must start with axiom, not {}", other.name()),
                        });
                    }
                }
            } else {
                if matches!(application, RuleApplication::Axiom { .. }) {
                    return Err(Failure {
                        step: index,
                        reason: ReasonCode::Malformed,
                        message: "axiom introduction is only allowed as step 0".into(),
                    });
                }
                let previous = &elaborated[index - 1].result;
                apply_forward(previous, &application).map_err(|e| Failure {
                    step: index,
                    reason: reason_for(&e),
                    message: e.to_string(),
                })?
            };
            elaborated.push(ProofStep {
                application,
                result: recorded.unwrap_or(computed),
            });
        }
        Ok(Proof {
            steps: elaborated,
            conclusion,
        })
    }
}

/// Checks a proof step by step, localizing the first failure.
pub fn check_proof(proof: &Proof, mode: CheckMode) -> Verdict {
    let same = |a: &Cirquent, b: &Cirquent| match mode {
        CheckMode::Strict => a == b,
        CheckMode::Normalized => a.is_exchange_equivalent(b),
    };

    let Some(first) = proof.steps.first() else {
        return Verdict::reject(0, ReasonCode::Malformed, "a proof needs at least one step");
    };

    match &first.application {
        RuleApplication::Axiom { cirquent } => {
            if !cirquent.is_axiom() {
                return Verdict::reject(
                    0,
                    ReasonCode::NotAxiom,
                    format!("{cirquent} is not an axiom"),
                );
            }
            if !same(cirquent, &first.result) {
                return Verdict::reject(
                    0,
                    ReasonCode::ResultMismatch,
                    format!(
                        "step records {} but the axiom introduces {}",
                        first.result, cirquent
                    ),
                );
            }
        }
        other => {
            return Verdict::reject(
                0,
                ReasonCode::Malformed,
                format!("a proof must start with axiom, not {}", other.name()),
            );
        }
    }

    for index in 1..proof.steps.len() {
        let step = &proof.steps[index];
        if matches!(step.application, RuleApplication::Axiom { .. }) {
            return Verdict::reject(
                index,
                ReasonCode::Malformed,
                "axiom introduction is only allowed as step 0",
            );
        }
        let previous = &proof.steps[index - 1].result;
        match apply_forward(previous, &step.application) {
            Err(e) => {
                return Verdict::reject(index, reason_for(&e), e.to_string());
            }
            Ok(computed) => {
                if !same(&computed, &step.result) {
                    return Verdict::reject(
                        index,
                        ReasonCode::ResultMismatch,
                        format!(
                            "{} yields {} but the step records {}",
                            step.application.name(),
                            computed,
                            step.result
                        ),
                    );
                }
            }
        }
    }

    let last = proof.steps.last().expect("nonempty");
    if !same(&last.result, &proof.conclusion) {
        return Verdict::reject(
            proof.steps.len() - 1,
            ReasonCode::ConclusionMismatch,
            format!(
                "proof ends in {} but claims {}",
                last.result, proof.conclusion
            ),
        );
    }
    Verdict::accept()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::rules::{ExchangeKind, RuleApplication};

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    fn cq(formulas: &[&str], groups: &[&[usize]]) -> Cirquent {
        Cirquent::new(
            formulas.iter().map(|s| f(s)).collect(),
            groups.iter().map(|g| g.iter().copied().collect()).collect(),
        )
        .unwrap()
    }

    fn axiom_np() -> Cirquent {
        cq(&["~P", "P"], &[&[0, 1]])
    }

    fn two_step_proof() -> Proof {
        Proof::from_applications(
            vec![
                RuleApplication::Axiom {
                    cirquent: axiom_np(),
                },
                RuleApplication::OrIntro { position: 0 },
            ],
            Cirquent::from_formula(f("~P \\/ P")),
        )
        .unwrap()
    }

    #[test]
    fn accepts_the_two_step_proof() {
        let proof = two_step_proof();
        assert!(check_proof(&proof, CheckMode::Strict).accepted());
        assert!(check_proof(&proof, CheckMode::Normalized).accepted());
        assert_eq!(proof.steps()[1].result, Cirquent::from_formula(f("~P \\/ P")));
    }

    #[test]
    fn elaboration_fills_in_results() {
        let proof = two_step_proof();
        assert_eq!(proof.steps().len(), 2);
        assert_eq!(proof.steps()[0].result, axiom_np());
    }

    #[test]
    fn elaboration_reports_bad_steps() {
        let err = Proof::from_applications(
            vec![
                RuleApplication::Axiom {
                    cirquent: axiom_np(),
                },
                RuleApplication::Duplication { group: 5 },
            ],
            Cirquent::from_formula(f("~P \\/ P")),
        )
        .unwrap_err();
        assert_eq!(err.step, 1);
        assert_eq!(err.reason, ReasonCode::PositionRange);
    }

    #[test]
    fn rejects_empty_and_misplaced_axioms() {
        let empty = Proof::new(vec![], Cirquent::from_formula(f("A")));
        let verdict = check_proof(&empty, CheckMode::Strict);
        assert_eq!(verdict.failure().unwrap().reason, ReasonCode::Malformed);

        let misplaced = Proof::new(
            vec![
                ProofStep {
                    application: RuleApplication::Axiom {
                        cirquent: axiom_np(),
                    },
                    result: axiom_np(),
                },
                ProofStep {
                    application: RuleApplication::Axiom {
                        cirquent: axiom_np(),
                    },
                    result: axiom_np(),
                },
            ],
            axiom_np(),
        );
        let verdict = check_proof(&misplaced, CheckMode::Strict);
        let failure = verdict.failure().unwrap();
        assert_eq!((failure.step, failure.reason), (1, ReasonCode::Malformed));
    }

    #[test]
    fn rejects_non_axiom_start() {
        let start = cq(&["P", "Q"], &[&[0, 1]]);
        let proof = Proof::new(
            vec![ProofStep {
                application: RuleApplication::Axiom {
                    cirquent: start.clone(),
                },
                result: start.clone(),
            }],
            start,
        );
        let verdict = check_proof(&proof, CheckMode::Strict);
        assert_eq!(verdict.failure().unwrap().reason, ReasonCode::NotAxiom);
    }

    #[test]
    fn normalized_mode_is_weaker_than_strict() {
        // record the final result with its groups in swapped order
        let axiom = cq(&["~P", "P", "~Q", "Q"], &[&[0, 1], &[2, 3]]);
        let swapped = cq(&["~P", "P", "~Q", "Q"], &[&[2, 3], &[0, 1]]);
        let proof = Proof::new(
            vec![ProofStep {
                application: RuleApplication::Axiom {
                    cirquent: axiom.clone(),
                },
                result: swapped.clone(),
            }],
            swapped,
        );
        assert!(!check_proof(&proof, CheckMode::Strict).accepted());
        assert!(check_proof(&proof, CheckMode::Normalized).accepted());
    }

    #[test]
    fn explicit_exchange_steps_are_checked_as_written() {
        let axiom = cq(&["~P", "P", "~Q", "Q"], &[&[0, 1], &[2, 3]]);
        let proof = Proof::from_applications(
            vec![
                RuleApplication::Axiom {
                    cirquent: axiom.clone(),
                },
                RuleApplication::Exchange {
                    kind: ExchangeKind::Group,
                    position: 0,
                },
            ],
            cq(&["~P", "P", "~Q", "Q"], &[&[2, 3], &[0, 1]]),
        )
        .unwrap();
        assert!(check_proof(&proof, CheckMode::Strict).accepted());
        assert!(check_proof(&proof, CheckMode::Normalized).accepted());
    }

    #[test]
    fn corrupting_a_step_localizes_the_failure() {
        let good = two_step_proof();

        // corrupt the recorded result of step 1
        let mut bad = good.clone();
        bad.steps[1].result = Cirquent::from_formula(f("P \\/ ~P"));
        let verdict = check_proof(&bad, CheckMode::Strict);
        let failure = verdict.failure().unwrap();
        assert_eq!(failure.step, 1);
        assert_eq!(failure.reason, ReasonCode::ResultMismatch);

        // corrupt the conclusion
        let bad = Proof::new(good.steps().to_vec(), Cirquent::from_formula(f("P \\/ P")));
        let verdict = check_proof(&bad, CheckMode::Strict);
        assert_eq!(
            verdict.failure().unwrap().reason,
            ReasonCode::ConclusionMismatch
        );
    }

    #[test]
    fn weakening_misuse_gets_its_own_code() {
        let axiom = axiom_np();
        let mut steps = vec![ProofStep {
            application: RuleApplication::Axiom {
                cirquent: axiom.clone(),
            },
            result: axiom.clone(),
        }];
        let dup_arc = RuleApplication::Weakening {
            new_formula: None,
            arc: (0, 1),
        };
        steps.push(ProofStep {
            application: dup_arc,
            result: axiom.clone(),
        });
        let proof = Proof::new(steps, axiom);
        let verdict = check_proof(&proof, CheckMode::Strict);
        assert_eq!(verdict.failure().unwrap().reason, ReasonCode::WeakeningArc);
    }

    #[test]
    fn and_shape_violations_are_reported() {
        // a merge pair in the wrong order is a shape error, not a mismatch
        let err = crate::rules::apply_forward(
            &cq(&["F", "G", "H"], &[&[0, 2], &[1, 2]]),
            &RuleApplication::AndIntro {
                position: 0,
                merges: vec![(1, 0)],
            },
        )
        .unwrap_err();
        assert_eq!(reason_for(&err), ReasonCode::AndShape);
    }

    #[test]
    fn verdict_shape_holds() {
        let proof = two_step_proof();
        let verdict = check_proof(&proof, CheckMode::Strict);
        assert!(verdict.accepted() == verdict.failure().is_none());
    }

    #[test]
    fn elaborate_keeps_recorded_results_as_written() {
        let axiom = axiom_np();
        let wrong = cq(&["~Q", "Q"], &[&[0, 1]]);
        let proof = Proof::elaborate(
            vec![(
                RuleApplication::Axiom {
                    cirquent: axiom.clone(),
                },
                Some(wrong.clone()),
            )],
            wrong.clone(),
        )
        .unwrap();
        assert_eq!(proof.steps()[0].result, wrong);
        assert!(!check_proof(&proof, CheckMode::Strict).accepted());
    }
}
