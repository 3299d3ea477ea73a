//! The six rules applied forward, one by one, and the backward
//! enumeration the prover searches over.
//!
//! Run with `cargo run --example apply_rules`.

use std::collections::BTreeSet;

use cirquent::{
    apply_forward, enumerate_backward, Cirquent, ExchangeKind, Formula, NewFormula,
    RuleApplication,
};

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

fn show(premise: &Cirquent, rule: &RuleApplication) {
    match apply_forward(premise, rule) {
        Ok(conclusion) => {
            println!("{premise}");
            println!("  --{}-->", rule.name());
            println!("{conclusion}\n");
        }
        Err(e) => println!("{premise}\n  --{}--> error: {e}\n", rule.name()),
    }
}

fn main() {
    // Exchange swaps adjacent formulas or groups; arcs travel along.
    let c = cq(&["A", "B", "C"], &[&[0, 1], &[1, 2], &[2]]);
    show(
        &c,
        &RuleApplication::Exchange {
            kind: ExchangeKind::Formula,
            position: 0,
        },
    );

    // Weakening adds one arc, optionally bringing a fresh occurrence.
    show(
        &cq(&["A", "C"], &[&[0], &[1]]),
        &RuleApplication::Weakening {
            new_formula: None,
            arc: (0, 1),
        },
    );
    show(
        &cq(&["A", "C"], &[&[0, 1]]),
        &RuleApplication::Weakening {
            new_formula: Some(NewFormula {
                position: 1,
                formula: Formula::parse("B").unwrap(),
            }),
            arc: (0, 1),
        },
    );

    // Duplication clones a group in place.
    show(
        &cq(&["F", "G", "H"], &[&[0, 1], &[1, 2]]),
        &RuleApplication::Duplication { group: 0 },
    );

    // Disjunction introduction fuses two adjacent occurrences; arcs to
    // either or both collapse into one.
    show(
        &cq(&["E", "F", "G", "H"], &[&[0], &[0, 1, 2], &[2, 3]]),
        &RuleApplication::OrIntro { position: 1 },
    );

    // Conjunction introduction merges paired adjacent groups around the
    // two conjuncts; each merged group keeps the arcs of both sides.
    show(
        &cq(
            &["E", "F", "G", "H", "J"],
            &[&[0, 1], &[0, 2], &[1, 3], &[2, 4], &[4]],
        ),
        &RuleApplication::AndIntro {
            position: 1,
            merges: vec![(0, 1), (2, 3)],
        },
    );

    // Backward enumeration inverts everything but Exchange. From the
    // excluded-middle embedding, one split already lands on an axiom.
    let target = Cirquent::from_formula(Formula::parse("~P \\/ P").unwrap());
    println!("backward from {target}:");
    for (rule, premise) in enumerate_backward(&target) {
        println!(
            "  {:12} premise {premise}{}",
            rule.name(),
            if premise.is_axiom() { "   <- axiom" } else { "" }
        );
    }
}
