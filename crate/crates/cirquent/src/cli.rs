//! The `cl5` command line: parse, prove, check, validate, render,
//! corpus.
//!
//! Exit codes are part of the contract:
//!
//! | command  | 0        | 1            | 2           | 3              |
//! |----------|----------|--------------|-------------|----------------|
//! | parse    | ok       |              | bad input   |                |
//! | prove    | provable | not provable | bad input   | resource limit |
//! | check    | accepted | rejected     | unreadable  |                |
//! | validate | valid    | invalid      | bad input   |                |
//! | render   | ok       |              | bad input   |                |
//! | corpus   | agreement| mismatch     | bad input   |                |
//!
//! Machine-readable results go to stdout, diagnostics to stderr.
//! `CIRQ5_COLOR=1` colors the stderr `error:` prefix; `0` or unset keeps
//! it plain.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cirquent::Cirquent;
use crate::formula::{Atom, Formula};
use crate::io::{cirquent_from_json, looks_like_proof, proof_from_json, proof_to_json};
use crate::oracle::oracle_valid;
use crate::proof::{check_proof, CheckMode, Proof};
use crate::prover::{prove, Limits, ProveOutcome};
use crate::render::{render, render_proof, RenderFormat, RenderSpec};

#[derive(Parser)]
#[command(
    name = "cl5",
    about = "Cirquent-calculus toolbox: prove, check, and render CL5 objects",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical form.
    Parse { formula: String },
    /// Decide provability of a formula or a cirquent file.
    Prove {
        /// A formula, or a path to a cirquent JSON file.
        input: String,
        #[arg(long, default_value_t = Limits::default().max_states)]
        max_states: usize,
        #[arg(long, default_value_t = Limits::default().max_seconds)]
        max_seconds: u64,
        /// Write the found proof to this file (strict layout).
        #[arg(long, value_name = "FILE")]
        emit_proof: Option<PathBuf>,
    },
    /// Check a proof file step by step.
    Check {
        proof_file: PathBuf,
        /// Overrides the mode recorded in the file (default strict).
        #[arg(long)]
        mode: Option<ModeArg>,
    },
    /// Run the brute-force validity oracle on a formula.
    Validate { formula: String },
    /// Render a cirquent or proof file as ASCII or DOT.
    Render {
        file: PathBuf,
        #[arg(long)]
        format: FormatArg,
        /// Prefix formula labels with occurrence indices.
        #[arg(long)]
        show_indices: bool,
        /// Suppress the g0, g1, ... group labels.
        #[arg(long)]
        plain_groups: bool,
    },
    /// Sweep all small formulas and compare prover and oracle verdicts.
    Corpus {
        /// Number of distinct atoms (A, B, ...).
        #[arg(long)]
        atoms: usize,
        /// Largest number of binary connectives.
        #[arg(long)]
        max_connectives: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Normalized,
}

impl From<ModeArg> for CheckMode {
    fn from(mode: ModeArg) -> CheckMode {
        match mode {
            ModeArg::Strict => CheckMode::Strict,
            ModeArg::Normalized => CheckMode::Normalized,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Dot,
}

fn diag(message: impl std::fmt::Display) {
    let colored = std::env::var("CIRQ5_COLOR").map(|v| v == "1").unwrap_or(false);
    if colored {
        eprintln!("\x1b[31merror:\x1b[0m {message}");
    } else {
        eprintln!("error: {message}");
    }
}

/// Runs the CLI on the given argument list and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Parse { formula } => cmd_parse(&formula),
        Command::Prove {
            input,
            max_states,
            max_seconds,
            emit_proof,
        } => cmd_prove(&input, max_states, max_seconds, emit_proof.as_deref()),
        Command::Check { proof_file, mode } => cmd_check(&proof_file, mode),
        Command::Validate { formula } => cmd_validate(&formula),
        Command::Render {
            file,
            format,
            show_indices,
            plain_groups,
        } => cmd_render(&file, format, show_indices, plain_groups),
        Command::Corpus {
            atoms,
            max_connectives,
        } => cmd_corpus(atoms, max_connectives),
    }
}

fn cmd_parse(text: &str) -> i32 {
    match Formula::parse(text) {
        Ok(formula) => {
            println!("{formula}");
            0
        }
        Err(e) => {
            diag(e);
            2
        }
    }
}

fn load_target(input: &str) -> Result<Cirquent, String> {
    let path = Path::new(input);
    if input.ends_with(".json") || path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
        cirquent_from_json(&text).map_err(|e| format!("{input}: {e}"))
    } else {
        Formula::parse(input)
            .map(Cirquent::from_formula)
            .map_err(|e| e.to_string())
    }
}

fn cmd_prove(
    input: &str,
    max_states: usize,
    max_seconds: u64,
    emit_proof: Option<&Path>,
) -> i32 {
    let target = match load_target(input) {
        Ok(target) => target,
        Err(message) => {
            diag(message);
            return 2;
        }
    };
    let limits = Limits {
        max_states,
        max_seconds,
    };
    match prove(&target, limits) {
        ProveOutcome::Provable(proof) => {
            if let Some(path) = emit_proof {
                let text = proof_to_json(&proof, CheckMode::Strict);
                if let Err(e) = fs::write(path, text) {
                    diag(format!("{}: {e}", path.display()));
                    return 2;
                }
            }
            println!("provable steps={}", proof.steps().len());
            0
        }
        ProveOutcome::NotProvable { states_explored } => {
            println!("not-provable states={states_explored}");
            1
        }
        ProveOutcome::ResourceLimit(description) => {
            println!("resource-limit {description}");
            3
        }
    }
}

fn cmd_check(path: &Path, mode: Option<ModeArg>) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            diag(format!("{}: {e}", path.display()));
            return 2;
        }
    };
    let file = match proof_from_json(&text) {
        Ok(file) => file,
        Err(e) => {
            diag(format!("{}: {e}", path.display()));
            return 2;
        }
    };
    let mode = mode
        .map(CheckMode::from)
        .or(file.mode)
        .unwrap_or(CheckMode::Strict);
    let proof = match Proof::elaborate(file.steps, file.conclusion) {
        Ok(proof) => proof,
        Err(failure) => {
            println!(
                "rejected step={} reason={} {}",
                failure.step, failure.reason, failure.message
            );
            return 1;
        }
    };
    let verdict = check_proof(&proof, mode);
    match verdict.failure() {
        None => {
            println!("accepted");
            0
        }
        Some(failure) => {
            println!(
                "rejected step={} reason={} {}",
                failure.step, failure.reason, failure.message
            );
            1
        }
    }
}

fn cmd_validate(text: &str) -> i32 {
    let formula = match Formula::parse(text) {
        Ok(formula) => formula,
        Err(e) => {
            diag(e);
            return 2;
        }
    };
    match oracle_valid(&formula) {
        Ok(true) => {
            println!("valid");
            0
        }
        Ok(false) => {
            println!("invalid");
            1
        }
        Err(e) => {
            diag(e);
            2
        }
    }
}

fn cmd_render(path: &Path, format: FormatArg, show_indices: bool, plain_groups: bool) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            diag(format!("{}: {e}", path.display()));
            return 2;
        }
    };
    let spec = RenderSpec {
        format: match format {
            FormatArg::Ascii => RenderFormat::Ascii,
            FormatArg::Dot => RenderFormat::Dot,
        },
        show_indices,
        label_groups: !plain_groups,
    };
    if looks_like_proof(&text) {
        let file = match proof_from_json(&text) {
            Ok(file) => file,
            Err(e) => {
                diag(format!("{}: {e}", path.display()));
                return 2;
            }
        };
        let proof = match Proof::elaborate(file.steps, file.conclusion) {
            Ok(proof) => proof,
            Err(failure) => {
                diag(format!("{}: cannot elaborate proof: {failure}", path.display()));
                return 2;
            }
        };
        print!("{}", render_proof(&proof, &spec));
    } else {
        let cirquent = match cirquent_from_json(&text) {
            Ok(cirquent) => cirquent,
            Err(e) => {
                diag(format!("{}: {e}", path.display()));
                return 2;
            }
        };
        print!("{}", render(&cirquent, &spec));
    }
    0
}

/// All negation-normal formulas over the first `atoms` atom names with
/// up to `max_connectives` binary connectives, sorted by printed text.
pub fn enumerate_small_formulas(atoms: usize, max_connectives: usize) -> Vec<Formula> {
    let names: Vec<Atom> = (0..atoms)
        .map(|i| {
            let letter = char::from(b'A' + (i % 26) as u8);
            let name = if i < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", i / 26)
            };
            Atom::new(name).expect("generated name is valid")
        })
        .collect();
    let mut levels: Vec<Vec<Formula>> = Vec::with_capacity(max_connectives + 1);
    levels.push(
        names
            .iter()
            .flat_map(|a| [Formula::Pos(a.clone()), Formula::Neg(a.clone())])
            .collect(),
    );
    for size in 1..=max_connectives {
        let mut level = Vec::new();
        for left_size in 0..size {
            let right_size = size - 1 - left_size;
            for left in &levels[left_size] {
                for right in &levels[right_size] {
                    level.push(Formula::and(left.clone(), right.clone()));
                    level.push(Formula::or(left.clone(), right.clone()));
                }
            }
        }
        levels.push(level);
    }
    let mut all: Vec<Formula> = levels.into_iter().flatten().collect();
    all.sort_by_key(|f| f.to_string());
    all
}

fn cmd_corpus(atoms: usize, max_connectives: usize) -> i32 {
    if atoms == 0 || atoms > 26 {
        diag("--atoms must be between 1 and 26");
        return 2;
    }
    let formulas = enumerate_small_formulas(atoms, max_connectives);
    let total = formulas.len();
    let mut agreed = 0usize;
    let mut failed = false;
    for formula in &formulas {
        let oracle = match oracle_valid(formula) {
            Ok(verdict) => verdict,
            Err(e) => {
                println!("undecided {formula} (oracle: {e})");
                failed = true;
                continue;
            }
        };
        let prover = match prove(&Cirquent::from_formula(formula.clone()), Limits::default()) {
            ProveOutcome::Provable(_) => true,
            ProveOutcome::NotProvable { .. } => false,
            ProveOutcome::ResourceLimit(description) => {
                println!("undecided {formula} (prover: {description})");
                failed = true;
                continue;
            }
        };
        if prover == oracle {
            agreed += 1;
        } else {
            println!(
                "mismatch {formula} prover={} oracle={}",
                if prover { "provable" } else { "not-provable" },
                if oracle { "valid" } else { "invalid" }
            );
            failed = true;
        }
    }
    println!("agreement {agreed}/{total}");
    if failed {
        1
    } else {
        0
    }
}
