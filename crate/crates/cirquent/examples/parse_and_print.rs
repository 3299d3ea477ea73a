//! Formula basics: parsing, canonical printing, duals, evaluation.
//!
//! Run with `cargo run --example parse_and_print`.

use std::collections::HashMap;

use cirquent::{Atom, Formula};

fn main() {
    // Surface syntax may negate anything; the stored form is negation
    // normal, so De Morgan steps happen at parse time.
    for text in ["(F /\\ H) \\/ G", "~(A /\\ B)", "~~P", "¬P ∨ (Q ∧ R)"] {
        let formula = Formula::parse(text).unwrap();
        println!("{text:24} parses to {formula}");
    }

    // The dual is the negation, kept in normal form. It is an involution.
    let formula = Formula::parse("(~P \\/ ~Q) /\\ (~R \\/ ~S)").unwrap();
    println!("\nformula   {formula}");
    println!("dual      {}", formula.dual());
    println!("dual²     {}", formula.dual().dual());

    // Classical evaluation needs a total assignment.
    let excluded_middle = Formula::parse("~P \\/ P").unwrap();
    let assignment: HashMap<Atom, bool> =
        [(Atom::new("P").unwrap(), false)].into_iter().collect();
    println!(
        "\n{excluded_middle} under P=false: {}",
        excluded_middle.eval(&assignment).unwrap()
    );

    // A partial assignment is an error, not a guess.
    let conjunction = Formula::parse("P /\\ Q").unwrap();
    println!(
        "{conjunction} under P=false: {}",
        conjunction.eval(&assignment).unwrap_err()
    );

    // Parse errors carry the offending position.
    let err = Formula::parse("A \\/ q").unwrap_err();
    println!("\nbad input: {err}");
}
