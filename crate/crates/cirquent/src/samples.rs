//! Ready-made worked objects: Blass's principle and its proof.
//!
//! Blass's principle, `((~P \/ ~Q) /\ (~R \/ ~S)) \/ ((P \/ R) /\ (Q \/ S))`,
//! is the standard example separating this system from affine logic: it
//! is provable here, and the proof below is the classic one — an axiom
//! of four dual pairs, a block of exchanges, a block of disjunction
//! introductions, two conjunction introductions, and a final disjunction
//! introduction. The macro blocks are expanded into primitive steps
//! (exchanges ordered by a left-to-right bubble of the axiom row), so
//! the object checks in strict mode.

use std::collections::BTreeSet;

use crate::cirquent::Cirquent;
use crate::formula::Formula;
use crate::proof::Proof;
use crate::rules::{ExchangeKind, RuleApplication};

/// `((~P \/ ~Q) /\ (~R \/ ~S)) \/ ((P \/ R) /\ (Q \/ S))`.
pub fn blass_principle() -> Formula {
    Formula::parse("((~P \\/ ~Q) /\\ (~R \\/ ~S)) \\/ ((P \\/ R) /\\ (Q \\/ S))")
        .expect("fixed text parses")
}

fn cq(formulas: &[&str], groups: &[&[usize]]) -> Cirquent {
    Cirquent::new(
        formulas
            .iter()
            .map(|s| Formula::parse(s).expect("fixed text parses"))
            .collect(),
        groups
            .iter()
            .map(|g| g.iter().copied().collect::<BTreeSet<usize>>())
            .collect(),
    )
    .expect("fixed cirquent is well formed")
}

/// The six cirquents the proof displays, from the axiom row down to the
/// single-occurrence embedding of the principle. Intermediate steps of
/// the expanded exchange block sit between rows 0 and 1.
pub fn blass_display_rows() -> Vec<Cirquent> {
    vec![
        cq(
            &["~P", "P", "~Q", "Q", "~S", "S", "~R", "R"],
            &[&[0, 1], &[2, 3], &[4, 5], &[6, 7]],
        ),
        cq(
            &["~P", "~Q", "~R", "~S", "P", "R", "Q", "S"],
            &[&[0, 4], &[1, 6], &[2, 5], &[3, 7]],
        ),
        cq(
            &["~P \\/ ~Q", "~R \\/ ~S", "P \\/ R", "Q \\/ S"],
            &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]],
        ),
        cq(
            &["~P \\/ ~Q", "~R \\/ ~S", "(P \\/ R) /\\ (Q \\/ S)"],
            &[&[0, 2], &[1, 2]],
        ),
        cq(
            &["(~P \\/ ~Q) /\\ (~R \\/ ~S)", "(P \\/ R) /\\ (Q \\/ S)"],
            &[&[0, 1]],
        ),
        Cirquent::from_formula(blass_principle()),
    ]
}

/// The applications of the proof, axiom first.
pub fn blass_applications() -> Vec<RuleApplication> {
    let mut apps = vec![RuleApplication::Axiom {
        cirquent: cq(
            &["~P", "P", "~Q", "Q", "~S", "S", "~R", "R"],
            &[&[0, 1], &[2, 3], &[4, 5], &[6, 7]],
        ),
    }];
    for position in [1, 5, 4, 3, 2, 4, 3, 6, 5] {
        apps.push(RuleApplication::Exchange {
            kind: ExchangeKind::Formula,
            position,
        });
    }
    apps.push(RuleApplication::Exchange {
        kind: ExchangeKind::Group,
        position: 2,
    });
    for position in [0, 1, 2, 3] {
        apps.push(RuleApplication::OrIntro { position });
    }
    apps.push(RuleApplication::AndIntro {
        position: 2,
        merges: vec![(0, 1), (2, 3)],
    });
    apps.push(RuleApplication::AndIntro {
        position: 0,
        merges: vec![(0, 1)],
    });
    apps.push(RuleApplication::OrIntro { position: 0 });
    apps
}

/// The fully elaborated proof of Blass's principle; passes strict
/// checking.
pub fn blass_proof() -> Proof {
    Proof::from_applications(
        blass_applications(),
        Cirquent::from_formula(blass_principle()),
    )
    .expect("the fixed transcription elaborates")
}
