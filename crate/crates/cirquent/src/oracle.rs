//! Brute-force validity oracle, independent of the rule engine.
//!
//! A formula is valid exactly when some binarization of it — a rewriting
//! that partitions same-atom literal occurrences into classes of size at
//! most two and gives each class a fresh atom — is a classical
//! tautology. Sharing an atom between two occurrences expresses that
//! they name one underlying resource; the size-two cap is what makes the
//! target a *binary* tautology. This module decides the criterion by
//! exhaustive enumeration: all partial matchings per atom, crossed over
//! atoms, each candidate settled by a truth table.
//!
//! Nothing here touches the rules or the prover; agreement between the
//! two is an empirical check of the system's adequacy, not a shared code
//! path.

use thiserror::Error;

use std::collections::HashMap;

use crate::formula::{Atom, Formula};

/// Truth tables refuse to run above this many distinct atoms.
pub const DEFAULT_ATOM_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("formula has {atoms} distinct atoms, above the truth-table cap of {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },
}

/// A partition of a formula's literal occurrences into classes of size
/// one or two, where paired occurrences share their atom (polarities
/// free). Class k is rewritten to the fresh atom `Xk`, each occurrence
/// keeping its own polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binarization {
    classes: Vec<Vec<usize>>,
}

impl Binarization {
    /// The occurrence-index classes, in enumeration order.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Rewrites `formula` under this binarization.
    pub fn apply(&self, formula: &Formula) -> Formula {
        let occurrence_count: usize = self.classes.iter().map(|c| c.len()).sum();
        let mut labels = vec![None; occurrence_count];
        for (k, class) in self.classes.iter().enumerate() {
            let fresh = Atom::new(format!("X{k}")).expect("generated name is valid");
            for &occurrence in class {
                labels[occurrence] = Some(fresh.clone());
            }
        }
        let labels: Vec<Atom> = labels.into_iter().map(Option::unwrap).collect();
        formula.relabel_literals(&labels)
    }
}

/// Classical tautology test by truth table over all `2^k` assignments,
/// with the default atom cap.
pub fn is_tautology(formula: &Formula) -> Result<bool, OracleError> {
    is_tautology_capped(formula, DEFAULT_ATOM_CAP)
}

/// Tautology test with an explicit cap on distinct atoms.
pub fn is_tautology_capped(formula: &Formula, cap: usize) -> Result<bool, OracleError> {
    let atoms: Vec<Atom> = formula.atoms().into_iter().collect();
    if atoms.len() > cap {
        return Err(OracleError::TooManyAtoms {
            atoms: atoms.len(),
            cap,
        });
    }
    let index: HashMap<&Atom, usize> = atoms.iter().enumerate().map(|(i, a)| (a, i)).collect();
    for bits in 0..1u64 << atoms.len() {
        if !eval_bits(formula, &index, bits) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn eval_bits(formula: &Formula, index: &HashMap<&Atom, usize>, bits: u64) -> bool {
    match formula {
        Formula::Pos(a) => bits >> index[a] & 1 == 1,
        Formula::Neg(a) => bits >> index[a] & 1 == 0,
        Formula::And(l, r) => eval_bits(l, index, bits) && eval_bits(r, index, bits),
        Formula::Or(l, r) => eval_bits(l, index, bits) || eval_bits(r, index, bits),
    }
}

/// Enumerates every binarization of `formula`, without duplicates.
///
/// Per atom with `m` occurrences the matchings number T(m), the
/// telephone numbers (1, 1, 2, 4, 10, 26, ...); the iterator walks the
/// product across atoms lazily.
pub fn enumerate_binarizations(formula: &Formula) -> Binarizations {
    let occurrences = formula.literal_occurrences();
    let mut per_atom: Vec<(Atom, Vec<usize>)> = Vec::new();
    for (i, literal) in occurrences.iter().enumerate() {
        match per_atom.iter_mut().find(|(a, _)| *a == literal.atom) {
            Some((_, positions)) => positions.push(i),
            None => per_atom.push((literal.atom.clone(), vec![i])),
        }
    }
    let choices: Vec<Vec<Vec<Vec<usize>>>> = per_atom
        .iter()
        .map(|(_, positions)| partial_matchings(positions))
        .collect();
    Binarizations {
        choices,
        cursor: Vec::new(),
        fresh: true,
        exhausted: false,
    }
}

/// All partitions of `items` into singletons and pairs.
fn partial_matchings(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let first = items[0];
    let rest = &items[1..];
    let mut out = Vec::new();
    for mut matching in partial_matchings(rest) {
        matching.insert(0, vec![first]);
        out.push(matching);
    }
    for j in 0..rest.len() {
        let mut remaining = rest.to_vec();
        let partner = remaining.remove(j);
        for mut matching in partial_matchings(&remaining) {
            matching.insert(0, vec![first, partner]);
            out.push(matching);
        }
    }
    out
}

/// Lazy product over the per-atom matchings.
pub struct Binarizations {
    choices: Vec<Vec<Vec<Vec<usize>>>>,
    cursor: Vec<usize>,
    fresh: bool,
    exhausted: bool,
}

impl Iterator for Binarizations {
    type Item = Binarization;

    fn next(&mut self) -> Option<Binarization> {
        if self.exhausted {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            self.cursor = vec![0; self.choices.len()];
        } else {
            // odometer advance, least significant last
            let mut i = self.choices.len();
            loop {
                if i == 0 {
                    self.exhausted = true;
                    return None;
                }
                i -= 1;
                self.cursor[i] += 1;
                if self.cursor[i] < self.choices[i].len() {
                    break;
                }
                self.cursor[i] = 0;
            }
        }
        let mut classes = Vec::new();
        for (atom_idx, &pick) in self.cursor.iter().enumerate() {
            classes.extend(self.choices[atom_idx][pick].iter().cloned());
        }
        Some(Binarization { classes })
    }
}

/// The validity decision: true when some binarization of `formula` is a
/// classical tautology.
pub fn oracle_valid(formula: &Formula) -> Result<bool, OracleError> {
    for binarization in enumerate_binarizations(formula) {
        if is_tautology(&binarization.apply(formula))? {
            return Ok(true);
        }
    }
    Ok(false)
}
