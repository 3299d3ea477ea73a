//! The JSON file formats: cirquent files, proof files with and without
//! embedded results, and the shapes the `cl5` binary exchanges.
//!
//! Run with `cargo run --example save_and_load`.

use cirquent::io::{cirquent_from_json, cirquent_to_json, proof_from_json, proof_to_json};
use cirquent::{check_proof, CheckMode, Proof, samples};

fn main() {
    // Cirquent files: formulas as grammar strings, groups as index
    // arrays, order significant.
    let text = r#"{"formulas": ["~P", "P"], "groups": [[0, 1]]}"#;
    let axiom = cirquent_from_json(text).unwrap();
    println!("loaded:  {axiom}  (axiom: {})", axiom.is_axiom());
    println!("saved back:\n{}", cirquent_to_json(&axiom));

    // Proof files may omit step results; they are recomputed on load.
    let sketch = r#"{
        "conclusion": {"formulas": ["~P \\/ P"], "groups": [[0]]},
        "steps": [
            {"rule": "axiom", "cirquent": {"formulas": ["~P", "P"], "groups": [[0, 1]]}},
            {"rule": "or_intro", "position": 0}
        ]
    }"#;
    let file = proof_from_json(sketch).unwrap();
    let proof = Proof::elaborate(file.steps, file.conclusion).unwrap();
    println!(
        "elaborated sketch checks strictly: {}",
        check_proof(&proof, CheckMode::Strict).accepted()
    );

    // Full round trip of the bundled proof.
    let blass = samples::blass_proof();
    let serialized = proof_to_json(&blass, CheckMode::Strict);
    let reloaded = proof_from_json(&serialized).unwrap();
    let reloaded = Proof::elaborate(reloaded.steps, reloaded.conclusion).unwrap();
    println!(
        "blass proof survives a round trip: {}",
        reloaded == blass
    );
    println!("file size: {} bytes", serialized.len());
}
