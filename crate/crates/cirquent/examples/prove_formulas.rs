//! The prover: exhaustive backward search with certificates.
//!
//! Validity here is resource-conscious — classical tautologies like
//! `~A \/ (A /\ A)` fail, because one copy of the resource A cannot
//! serve two consumers. Run with `cargo run --example prove_formulas`.

use cirquent::{proof_stats, prove, Cirquent, Formula, Limits, ProveOutcome};

fn main() {
    let cases = [
        "~A \\/ A",
        "A \\/ B \\/ ~A",
        "((~A \\/ ~B) /\\ (~C \\/ ~D)) \\/ ((A \\/ C) /\\ (B \\/ D))",
        "~A \\/ (A /\\ A)",
        "A \\/ A",
        "A",
    ];
    for text in cases {
        let formula = Formula::parse(text).unwrap();
        let target = Cirquent::from_formula(formula);
        match prove(&target, Limits::default()) {
            ProveOutcome::Provable(proof) => {
                let stats = proof_stats(&proof).unwrap();
                println!(
                    "provable      {text}  ({} steps, {} without exchanges, width {}, groups {})",
                    stats.steps, stats.steps_non_exchange, stats.max_width, stats.max_groups
                );
            }
            ProveOutcome::NotProvable { states_explored } => {
                println!("not provable  {text}  (search exhausted after {states_explored} states)");
            }
            ProveOutcome::ResourceLimit(description) => {
                println!("undecided     {text}  ({description})");
            }
        }
    }

    // Tight limits give a distinct outcome instead of a false negative.
    let target = Cirquent::from_formula(Formula::parse("~A \\/ (A /\\ A)").unwrap());
    let outcome = prove(
        &target,
        Limits {
            max_states: 2,
            max_seconds: 60,
        },
    );
    println!("\nwith max_states=2: {outcome:?}");
}
