//! Building cirquents and asking structural questions: axiom shape,
//! measure, Exchange-equivalence, canonical forms.
//!
//! Run with `cargo run --example build_cirquents`.

use std::collections::BTreeSet;

use cirquent::{Cirquent, Formula};

fn cq(formulas: &[&str], groups: &[&[usize]]) -> Cirquent {
    Cirquent::new(
        formulas
            .iter()
            .map(|s| Formula::parse(s).unwrap())
            .collect(),
        groups
            .iter()
            .map(|g| g.iter().copied().collect::<BTreeSet<usize>>())
            .collect(),
    )
    .unwrap()
}

fn main() {
    // A lone formula embeds as a single occurrence under a single group.
    let embedded = Cirquent::from_formula(Formula::parse("~P \\/ P").unwrap());
    println!("embedded      {embedded}");
    println!("measure       {:?}", embedded.measure());

    // Sharing lives in the arcs: here G sits in two groups at once, and
    // the two F occurrences stay distinct objects.
    let shared = cq(&["F", "G", "H", "F"], &[&[0, 1], &[1, 2], &[3]]);
    println!("\nshared        {shared}");
    println!("groups with G {:?}", shared.groups_containing(1));

    // Axioms are arrays of dual pairs, one arc per occurrence. The pair
    // may be compound and its order does not matter.
    for c in [
        cq(&["~P", "P", "~Q", "Q"], &[&[0, 1], &[2, 3]]),
        cq(&["A /\\ B", "~A \\/ ~B"], &[&[0, 1]]),
        cq(&["~P", "P", "Q"], &[&[0, 1], &[2]]),
    ] {
        println!("\n{c}\n  axiom? {}", c.is_axiom());
    }

    // Adjacent swaps do not change identity: canonical forms agree.
    let swapped = cq(&["G", "F", "H", "F"], &[&[0, 1], &[0, 2], &[3]]);
    println!("\nswapped       {swapped}");
    println!(
        "exchange-equivalent to shared? {}",
        shared.is_exchange_equivalent(&swapped)
    );
    println!("canonical     {}", shared.canonicalize().cirquent());

    // Structural invariants are enforced at construction.
    let orphan = Cirquent::new(
        vec![Formula::parse("A").unwrap(), Formula::parse("B").unwrap()],
        vec![BTreeSet::from([0])],
    );
    println!("\norphan build: {}", orphan.unwrap_err());
}
