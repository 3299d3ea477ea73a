//! Blass's principle end to end: the bundled proof, its displayed rows,
//! checking in both modes, statistics, and agreement of prover and
//! oracle. Provable here, yet out of reach for affine logic.
//!
//! Run with `cargo run --example blass_principle`.
//! With `-- --write-fixture PATH` it rewrites the JSON fixture bundled
//! in `fixtures/blass.proof.json`.

use cirquent::{
    check_proof, oracle_valid, proof_stats, prove, samples, CheckMode, Cirquent, Limits,
    ProveOutcome,
};

fn main() {
    let principle = samples::blass_principle();
    println!("Blass's principle: {principle}\n");

    let proof = samples::blass_proof();
    println!("bundled proof, displayed rows:");
    for row in samples::blass_display_rows() {
        println!("  {row}");
    }

    let strict = check_proof(&proof, CheckMode::Strict);
    let normalized = check_proof(&proof, CheckMode::Normalized);
    println!("\nstrict accepted:     {}", strict.accepted());
    println!("normalized accepted: {}", normalized.accepted());

    let stats = proof_stats(&proof).unwrap();
    println!(
        "steps: {} ({} without exchanges), max width {}, max groups {}",
        stats.steps, stats.steps_non_exchange, stats.max_width, stats.max_groups
    );

    println!("\noracle says valid: {}", oracle_valid(&principle).unwrap());
    let outcome = prove(
        &Cirquent::from_formula(principle.clone()),
        Limits::default(),
    );
    match outcome {
        ProveOutcome::Provable(found) => {
            let stats = proof_stats(&found).unwrap();
            println!(
                "prover found its own proof: {} steps ({} without exchanges)",
                stats.steps, stats.steps_non_exchange
            );
        }
        other => println!("prover disagreed: {other:?}"),
    }

    if let Some(path) = fixture_path() {
        let text = cirquent::io::proof_to_json(&proof, CheckMode::Strict);
        std::fs::write(&path, text).expect("writing the fixture");
        println!("\nwrote {path}");
    }
}

fn fixture_path() -> Option<String> {
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        if arg == "--write-fixture" {
            return Some(args.next().expect("--write-fixture needs a path"));
        }
    }
    None
}
