//! Proof objects: elaboration from applications, strict and normalized
//! checking, and localized rejections.
//!
//! Run with `cargo run --example check_proofs`.

use std::collections::BTreeSet;

use cirquent::{
    check_proof, CheckMode, Cirquent, Formula, Proof, ProofStep, RuleApplication,
};

fn main() {
    let axiom = Cirquent::new(
        vec![
            Formula::parse("~P").unwrap(),
            Formula::parse("P").unwrap(),
        ],
        vec![BTreeSet::from([0, 1])],
    )
    .unwrap();

    // A proof can be written as applications only; elaboration recomputes
    // every intermediate cirquent.
    let proof = Proof::from_applications(
        vec![
            RuleApplication::Axiom {
                cirquent: axiom.clone(),
            },
            RuleApplication::OrIntro { position: 0 },
        ],
        Cirquent::from_formula(Formula::parse("~P \\/ P").unwrap()),
    )
    .unwrap();

    println!("proof of {}:", proof.conclusion());
    for (i, step) in proof.steps().iter().enumerate() {
        println!("  step {i}: {:12} {}", step.application.name(), step.result);
    }
    println!(
        "strict:     {}",
        verdict_line(&proof, CheckMode::Strict)
    );
    println!(
        "normalized: {}",
        verdict_line(&proof, CheckMode::Normalized)
    );

    // Corrupt one step and the checker points at it.
    let mut steps: Vec<ProofStep> = proof.steps().to_vec();
    steps[1].application = RuleApplication::Duplication { group: 0 };
    let corrupted = Proof::new(steps, proof.conclusion().clone());
    println!("\nafter corrupting step 1:");
    println!("strict:     {}", verdict_line(&corrupted, CheckMode::Strict));

    // Elaboration itself refuses impossible applications.
    let bad = Proof::from_applications(
        vec![
            RuleApplication::Axiom { cirquent: axiom },
            RuleApplication::Duplication { group: 5 },
        ],
        Cirquent::from_formula(Formula::parse("~P \\/ P").unwrap()),
    );
    println!("\nelaborating a bad proof: {}", bad.unwrap_err());
}

fn verdict_line(proof: &Proof, mode: CheckMode) -> String {
    let verdict = check_proof(proof, mode);
    match verdict.failure() {
        None => "accepted".to_string(),
        Some(failure) => format!("rejected at {failure}"),
    }
}
