//! The six inference rules: forward application and backward enumeration.
//!
//! Forward application turns a premise into the conclusion a rule
//! instance determines; backward enumeration lists, for a conclusion,
//! every (rule, premise) pair the prover needs to consider. Exchange is
//! deliberately absent from the backward enumeration — the search works
//! modulo Exchange via canonical forms — but stays available as a
//! forward rule for proof objects that spell their swaps out.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cirquent::{Cirquent, CirquentError};
use crate::formula::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExchangeKind {
    Formula,
    Group,
}

/// A freshly introduced occurrence for the formula-adding form of
/// Weakening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewFormula {
    pub position: usize,
    pub formula: Formula,
}

/// One rule instance, with the positional parameters that pin it down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleApplication {
    /// Step zero of a proof; carries the axiom cirquent it introduces.
    Axiom { cirquent: Cirquent },
    /// Swaps the formulas (or groups) at `position` and `position + 1`.
    Exchange { kind: ExchangeKind, position: usize },
    /// Adds the arc `(group, formula)`; when `new_formula` is present the
    /// occurrence is inserted first and the arc is its only one.
    Weakening {
        new_formula: Option<NewFormula>,
        arc: (usize, usize),
    },
    /// Replaces the group with two identical adjacent copies.
    Duplication { group: usize },
    /// Fuses the adjacent occurrences at `position`, `position + 1` into
    /// their disjunction; arcs to either or both collapse into one.
    OrIntro { position: usize },
    /// Fuses the adjacent occurrences at `position`, `position + 1` into
    /// their conjunction. Each `merges` pair names two adjacent premise
    /// groups — the left containing the conjunct at `position`, the
    /// right the one at `position + 1` — that collapse into a single
    /// conclusion group keeping the arcs of both sides.
    AndIntro {
        position: usize,
        merges: Vec<(usize, usize)>,
    },
}

impl RuleApplication {
    /// Short name matching the wire format.
    pub fn name(&self) -> &'static str {
        match self {
            RuleApplication::Axiom { .. } => "axiom",
            RuleApplication::Exchange { .. } => "exchange",
            RuleApplication::Weakening { .. } => "weakening",
            RuleApplication::Duplication { .. } => "duplication",
            RuleApplication::OrIntro { .. } => "or_intro",
            RuleApplication::AndIntro { .. } => "and_intro",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("axiom introduction takes no premise")]
    AxiomTakesNoPremise,
    #[error("{what} position {position} is out of range (have {len})")]
    PositionOutOfRange {
        what: &'static str,
        position: usize,
        len: usize,
    },
    #[error("weakening arc ({group}, {formula}) is already present")]
    ArcAlreadyPresent { group: usize, formula: usize },
    #[error("weakening arc must point at the inserted occurrence {position}, not {formula}")]
    ArcMismatch { position: usize, formula: usize },
    #[error("bad conjunction merge: {0}")]
    AndShape(String),
    #[error("group {group} contains a conjunct but is not in any merge pair")]
    AndCoverage { group: usize },
    #[error("rule would break a cirquent invariant: {0}")]
    Invariant(#[from] CirquentError),
}

/// Applies `rule` to `premise`, producing the conclusion.
pub fn apply_forward(premise: &Cirquent, rule: &RuleApplication) -> Result<Cirquent, RuleError> {
    match rule {
        RuleApplication::Axiom { .. } => Err(RuleError::AxiomTakesNoPremise),
        RuleApplication::Exchange { kind, position } => exchange(premise, *kind, *position),
        RuleApplication::Weakening { new_formula, arc } => {
            weakening(premise, new_formula.as_ref(), *arc)
        }
        RuleApplication::Duplication { group } => duplication(premise, *group),
        RuleApplication::OrIntro { position } => or_intro(premise, *position),
        RuleApplication::AndIntro { position, merges } => and_intro(premise, *position, merges),
    }
}

fn check_position(
    what: &'static str,
    position: usize,
    len: usize,
    need_adjacent: bool,
) -> Result<(), RuleError> {
    let bound = if need_adjacent {
        len.saturating_sub(1)
    } else {
        len
    };
    if position >= bound {
        Err(RuleError::PositionOutOfRange {
            what,
            position,
            len,
        })
    } else {
        Ok(())
    }
}

fn exchange(premise: &Cirquent, kind: ExchangeKind, position: usize) -> Result<Cirquent, RuleError> {
    match kind {
        ExchangeKind::Formula => {
            check_position("formula", position, premise.formulas().len(), true)?;
            Ok(premise.swap_adjacent_formulas(position))
        }
        ExchangeKind::Group => {
            check_position("group", position, premise.groups().len(), true)?;
            Ok(premise.swap_adjacent_groups(position))
        }
    }
}

fn weakening(
    premise: &Cirquent,
    new_formula: Option<&NewFormula>,
    (group, formula): (usize, usize),
) -> Result<Cirquent, RuleError> {
    check_position("group", group, premise.groups().len(), false)?;
    match new_formula {
        None => {
            check_position("formula", formula, premise.formulas().len(), false)?;
            if premise.groups()[group].contains(&formula) {
                return Err(RuleError::ArcAlreadyPresent { group, formula });
            }
            let mut groups = premise.groups().to_vec();
            groups[group].insert(formula);
            Ok(Cirquent::new(premise.formulas().to_vec(), groups)?)
        }
        Some(new) => {
            if new.position > premise.formulas().len() {
                return Err(RuleError::PositionOutOfRange {
                    what: "formula",
                    position: new.position,
                    len: premise.formulas().len(),
                });
            }
            if formula != new.position {
                return Err(RuleError::ArcMismatch {
                    position: new.position,
                    formula,
                });
            }
            let mut formulas = premise.formulas().to_vec();
            formulas.insert(new.position, new.formula.clone());
            let mut groups: Vec<BTreeSet<usize>> = premise
                .groups()
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|&i| if i >= new.position { i + 1 } else { i })
                        .collect()
                })
                .collect();
            groups[group].insert(new.position);
            Ok(Cirquent::new(formulas, groups)?)
        }
    }
}

fn duplication(premise: &Cirquent, group: usize) -> Result<Cirquent, RuleError> {
    check_position("group", group, premise.groups().len(), false)?;
    let mut groups = premise.groups().to_vec();
    let copy = groups[group].clone();
    groups.insert(group + 1, copy);
    Ok(Cirquent::new(premise.formulas().to_vec(), groups)?)
}

fn or_intro(premise: &Cirquent, position: usize) -> Result<Cirquent, RuleError> {
    check_position("formula", position, premise.formulas().len(), true)?;
    let left = premise.formulas()[position].clone();
    let right = premise.formulas()[position + 1].clone();

    let mut formulas = Vec::with_capacity(premise.formulas().len() - 1);
    formulas.extend_from_slice(&premise.formulas()[..position]);
    formulas.push(Formula::or(left, right));
    formulas.extend_from_slice(&premise.formulas()[position + 2..]);

    // arcs to either conjunct-to-be or both collapse onto the fusion
    let groups = premise
        .groups()
        .iter()
        .map(|g| {
            g.iter()
                .map(|&i| match i {
                    _ if i < position => i,
                    _ if i <= position + 1 => position,
                    _ => i - 1,
                })
                .collect()
        })
        .collect();
    Ok(Cirquent::new(formulas, groups)?)
}

fn and_intro(
    premise: &Cirquent,
    position: usize,
    merges: &[(usize, usize)],
) -> Result<Cirquent, RuleError> {
    check_position("formula", position, premise.formulas().len(), true)?;
    let group_count = premise.groups().len();
    let f_pos = position;
    let g_pos = position + 1;

    let mut pair_left = vec![false; group_count];
    let mut paired = vec![false; group_count];
    for &(l, r) in merges {
        if l >= group_count || r >= group_count {
            return Err(RuleError::AndShape(format!(
                "merge pair ({l}, {r}) is out of range (have {group_count} groups)"
            )));
        }
        if r != l + 1 {
            return Err(RuleError::AndShape(format!(
                "merge pair ({l}, {r}) must name two adjacent groups"
            )));
        }
        if paired[l] || paired[r] {
            return Err(RuleError::AndShape(format!(
                "merge pair ({l}, {r}) overlaps another pair"
            )));
        }
        let left = &premise.groups()[l];
        let right = &premise.groups()[r];
        if !left.contains(&f_pos) || left.contains(&g_pos) {
            return Err(RuleError::AndShape(format!(
                "left group {l} must contain the occurrence at {f_pos} and not the one at {g_pos}"
            )));
        }
        if !right.contains(&g_pos) || right.contains(&f_pos) {
            return Err(RuleError::AndShape(format!(
                "right group {r} must contain the occurrence at {g_pos} and not the one at {f_pos}"
            )));
        }
        paired[l] = true;
        paired[r] = true;
        pair_left[l] = true;
    }
    for (g, group) in premise.groups().iter().enumerate() {
        if !paired[g] && (group.contains(&f_pos) || group.contains(&g_pos)) {
            return Err(RuleError::AndCoverage { group: g });
        }
    }

    let left = premise.formulas()[f_pos].clone();
    let right = premise.formulas()[g_pos].clone();
    let mut formulas = Vec::with_capacity(premise.formulas().len() - 1);
    formulas.extend_from_slice(&premise.formulas()[..f_pos]);
    formulas.push(Formula::and(left, right));
    formulas.extend_from_slice(&premise.formulas()[g_pos + 1..]);

    let remap = |i: usize| if i > g_pos { i - 1 } else { i };
    let mut groups: Vec<BTreeSet<usize>> = Vec::new();
    let mut g = 0;
    while g < group_count {
        if pair_left[g] {
            // the pair collapses in place, keeping the arcs of both sides
            let mut merged: BTreeSet<usize> = premise.groups()[g]
                .union(&premise.groups()[g + 1])
                .filter(|&&i| i != f_pos && i != g_pos)
                .map(|&i| remap(i))
                .collect();
            merged.insert(f_pos);
            groups.push(merged);
            g += 2;
        } else {
            groups.push(premise.groups()[g].iter().map(|&i| remap(i)).collect());
            g += 1;
        }
    }
    Ok(Cirquent::new(formulas, groups)?)
}

/// Lists every non-Exchange (rule, premise) pair whose forward
/// application yields `conclusion` up to Exchange. Connective-reducing
/// rules come first so the prover reaches axioms fastest.
///
/// For the disjunction and conjunction splits, the enumerated premise is
/// the saturated one — arcs copied to both halves, duplicated groups
/// keeping all side arcs. Premises with fewer arcs are reachable from it
/// through the backward Weakening entries, so nothing is lost.
pub fn enumerate_backward(conclusion: &Cirquent) -> Vec<(RuleApplication, Cirquent)> {
    let mut out = Vec::new();
    backward_or(conclusion, &mut out);
    backward_and(conclusion, &mut out);
    backward_weakening(conclusion, &mut out);
    backward_duplication(conclusion, &mut out);
    debug_assert!(out.iter().all(|(_, p)| p.measure() < conclusion.measure()));
    out
}

fn backward_or(conclusion: &Cirquent, out: &mut Vec<(RuleApplication, Cirquent)>) {
    for (p, formula) in conclusion.formulas().iter().enumerate() {
        let Formula::Or(left, right) = formula else {
            continue;
        };
        let mut formulas = Vec::with_capacity(conclusion.formulas().len() + 1);
        formulas.extend_from_slice(&conclusion.formulas()[..p]);
        formulas.push((**left).clone());
        formulas.push((**right).clone());
        formulas.extend_from_slice(&conclusion.formulas()[p + 1..]);

        let groups = conclusion
            .groups()
            .iter()
            .map(|g| {
                let mut set = BTreeSet::new();
                for &i in g {
                    if i < p {
                        set.insert(i);
                    } else if i == p {
                        set.insert(p);
                        set.insert(p + 1);
                    } else {
                        set.insert(i + 1);
                    }
                }
                set
            })
            .collect();
        let premise = Cirquent::new(formulas, groups).expect("split keeps invariants");
        out.push((RuleApplication::OrIntro { position: p }, premise));
    }
}

fn backward_and(conclusion: &Cirquent, out: &mut Vec<(RuleApplication, Cirquent)>) {
    for (p, formula) in conclusion.formulas().iter().enumerate() {
        let Formula::And(left, right) = formula else {
            continue;
        };
        let mut formulas = Vec::with_capacity(conclusion.formulas().len() + 1);
        formulas.extend_from_slice(&conclusion.formulas()[..p]);
        formulas.push((**left).clone());
        formulas.push((**right).clone());
        formulas.extend_from_slice(&conclusion.formulas()[p + 1..]);

        let mut groups: Vec<BTreeSet<usize>> = Vec::new();
        let mut merges = Vec::new();
        for group in conclusion.groups() {
            let shifted: BTreeSet<usize> = group
                .iter()
                .filter(|&&i| i != p)
                .map(|&i| if i > p { i + 1 } else { i })
                .collect();
            if group.contains(&p) {
                let mut first = shifted.clone();
                first.insert(p);
                let mut second = shifted;
                second.insert(p + 1);
                merges.push((groups.len(), groups.len() + 1));
                groups.push(first);
                groups.push(second);
            } else {
                groups.push(shifted);
            }
        }
        let premise = Cirquent::new(formulas, groups).expect("split keeps invariants");
        out.push((RuleApplication::AndIntro { position: p, merges }, premise));
    }
}

fn backward_weakening(conclusion: &Cirquent, out: &mut Vec<(RuleApplication, Cirquent)>) {
    for (g, group) in conclusion.groups().iter().enumerate() {
        if group.len() < 2 {
            continue; // deleting the only arc would empty the group
        }
        for &i in group {
            let orphaned = conclusion.groups_containing(i) == [g];
            let rule = RuleApplication::Weakening {
                new_formula: orphaned.then(|| NewFormula {
                    position: i,
                    formula: conclusion.formulas()[i].clone(),
                }),
                arc: (g, i),
            };
            let premise = if orphaned {
                let mut formulas = conclusion.formulas().to_vec();
                formulas.remove(i);
                let groups = conclusion
                    .groups()
                    .iter()
                    .map(|grp| {
                        grp.iter()
                            .filter(|&&j| j != i)
                            .map(|&j| if j > i { j - 1 } else { j })
                            .collect()
                    })
                    .collect();
                Cirquent::new(formulas, groups).expect("arc removal keeps invariants")
            } else {
                let mut groups = conclusion.groups().to_vec();
                groups[g].remove(&i);
                Cirquent::new(conclusion.formulas().to_vec(), groups)
                    .expect("arc removal keeps invariants")
            };
            out.push((rule, premise));
        }
    }
}

fn backward_duplication(conclusion: &Cirquent, out: &mut Vec<(RuleApplication, Cirquent)>) {
    let groups = conclusion.groups();
    for k in 0..groups.len() {
        for l in k + 1..groups.len() {
            if groups[k] != groups[l] {
                continue;
            }
            let mut remaining = groups.to_vec();
            remaining.remove(l);
            let premise = Cirquent::new(conclusion.formulas().to_vec(), remaining)
                .expect("dropping a duplicate keeps invariants");
            out.push((RuleApplication::Duplication { group: k }, premise));
        }
    }
}

/// Positions of adjacent swaps that sort `arrangement` into the identity,
/// in application order. `arrangement[slot]` is the destination of the
/// element currently in `slot`.
pub(crate) fn adjacent_swap_plan(arrangement: &[usize]) -> Vec<usize> {
    let mut work = arrangement.to_vec();
    let mut swaps = Vec::new();
    for target in 0..work.len() {
        let mut at = (target..work.len())
            .find(|&s| work[s] == target)
            .expect("arrangement must be a permutation");
        while at > target {
            work.swap(at - 1, at);
            swaps.push(at - 1);
            at -= 1;
        }
    }
    swaps
}

/// Exchange steps (rule, result) turning `from` into exactly `to`.
/// The two cirquents must be Exchange-equivalent.
pub(crate) fn exchange_path(from: &Cirquent, to: &Cirquent) -> Vec<(RuleApplication, Cirquent)> {
    let canon_from = from.canonicalize();
    let canon_to = to.canonicalize();
    debug_assert_eq!(canon_from, canon_to, "exchange path needs equivalent endpoints");

    // invert `to`'s permutations so both sides meet at the representative
    let mut to_formula_inv = vec![0; canon_to.formula_perm().len()];
    for (old, &new) in canon_to.formula_perm().iter().enumerate() {
        to_formula_inv[new] = old;
    }
    let mut to_group_inv = vec![0; canon_to.group_perm().len()];
    for (old, &new) in canon_to.group_perm().iter().enumerate() {
        to_group_inv[new] = old;
    }

    let formula_arrangement: Vec<usize> = canon_from
        .formula_perm()
        .iter()
        .map(|&mid| to_formula_inv[mid])
        .collect();
    let group_arrangement: Vec<usize> = canon_from
        .group_perm()
        .iter()
        .map(|&mid| to_group_inv[mid])
        .collect();

    let mut steps = Vec::new();
    let mut current = from.clone();
    for position in adjacent_swap_plan(&formula_arrangement) {
        let rule = RuleApplication::Exchange {
            kind: ExchangeKind::Formula,
            position,
        };
        current = apply_forward(&current, &rule).expect("swap within range");
        steps.push((rule, current.clone()));
    }
    for position in adjacent_swap_plan(&group_arrangement) {
        let rule = RuleApplication::Exchange {
            kind: ExchangeKind::Group,
            position,
        };
        current = apply_forward(&current, &rule).expect("swap within range");
        steps.push((rule, current.clone()));
    }
    debug_assert_eq!(&current, to);
    steps
}
