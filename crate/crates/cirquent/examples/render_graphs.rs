//! Rendering cirquents as ASCII and as DOT digraphs.
//!
//! Run with `cargo run --example render_graphs`. Pipe the DOT block
//! through `dot -Tsvg` to draw it.

use std::collections::BTreeSet;

use cirquent::{render, render_proof, Cirquent, Formula, RenderSpec, samples};

fn main() {
    let shared = Cirquent::new(
        ["F", "G", "H", "F"]
            .iter()
            .map(|s| Formula::parse(s).unwrap())
            .collect(),
        vec![
            BTreeSet::from([0, 1]),
            BTreeSet::from([1, 2]),
            BTreeSet::from([3]),
        ],
    )
    .unwrap();

    println!("ascii:\n{}", render(&shared, &RenderSpec::ascii()));

    let mut spec = RenderSpec::ascii();
    spec.show_indices = true;
    println!("ascii with indices:\n{}", render(&shared, &spec));

    println!("dot:\n{}", render(&shared, &RenderSpec::dot()));

    // Whole proofs render step by step; here the first rows of the
    // Blass-principle proof.
    let proof = samples::blass_proof();
    let text = render_proof(&proof, &RenderSpec::ascii());
    let head: Vec<&str> = text.lines().take(14).collect();
    println!("proof (first steps):\n{}", head.join("\n"));
}
