//! The brute-force validity oracle: binarizations and truth tables,
//! sharing no machinery with the prover.
//!
//! Run with `cargo run --example validity_oracle`.

use cirquent::{
    enumerate_binarizations, is_tautology, oracle_valid, prove, Cirquent, Formula, Limits,
    ProveOutcome,
};

fn main() {
    // Every binarization of three A-occurrences: singletons, plus the
    // three possible pairings. None rescues contraction.
    let contraction = Formula::parse("~A \\/ (A /\\ A)").unwrap();
    println!("binarizations of {contraction}:");
    for binarization in enumerate_binarizations(&contraction) {
        let rewritten = binarization.apply(&contraction);
        println!(
            "  {rewritten:24} tautology: {}",
            is_tautology(&rewritten).unwrap()
        );
    }
    println!("oracle_valid: {}\n", oracle_valid(&contraction).unwrap());

    // Blass's principle needs each atom's two occurrences paired.
    let blass = cirquent::samples::blass_principle();
    println!("{blass}");
    println!("oracle_valid: {}\n", oracle_valid(&blass).unwrap());

    // The oracle and the prover are independent implementations; their
    // agreement is the empirical adequacy check.
    for text in ["~A \\/ A", "A \\/ A", "(A \\/ B) \\/ (A \\/ ~B)"] {
        let formula = Formula::parse(text).unwrap();
        let oracle = oracle_valid(&formula).unwrap();
        let prover = prove(&Cirquent::from_formula(formula), Limits::default());
        println!(
            "{text:24} oracle: {oracle:5}  prover: {}",
            matches!(prover, ProveOutcome::Provable(_))
        );
    }
}
