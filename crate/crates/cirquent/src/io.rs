//! JSON file formats for cirquents and proofs.
//!
//! Cirquent: `{"formulas": ["~P", "P"], "groups": [[0, 1]]}` — formulas
//! as grammar strings, groups as arrays of zero-based occurrence
//! indices. The order of the two arrays is significant (it is the
//! pre-Exchange layout); the index order inside a group is not, and a
//! repeated index inside one group is rejected, since a group holds at
//! most one arc per occurrence.
//!
//! Proof: `{"conclusion": {..}, "steps": [{"rule": "or_intro",
//! "position": 0, "result": {..}}, ..], "mode": "strict"}` with `result`
//! optional per step (missing results are recomputed on load).
//!
//! Standalone files carry `"format_version": 1`; embedded objects may
//! omit it. Unknown versions are rejected.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cirquent::{Cirquent, CirquentError};
use crate::formula::{Formula, ParseError};
use crate::proof::{CheckMode, Proof};
use crate::rules::{ExchangeKind, NewFormula, RuleApplication};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0}, expected {FORMAT_VERSION}")]
    Version(u32),
    #[error("bad formula: {0}")]
    Formula(#[from] ParseError),
    #[error("bad cirquent: {0}")]
    Cirquent(#[from] CirquentError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CirquentDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format_version: Option<u32>,
    formulas: Vec<String>,
    groups: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct NewFormulaDoc {
    position: usize,
    formula: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
enum RuleDoc {
    Axiom {
        cirquent: CirquentDoc,
    },
    Exchange {
        kind: KindDoc,
        position: usize,
    },
    Weakening {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        new_formula: Option<NewFormulaDoc>,
        arc: (usize, usize),
    },
    Duplication {
        group: usize,
    },
    OrIntro {
        position: usize,
    },
    AndIntro {
        position: usize,
        merges: Vec<(usize, usize)>,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum KindDoc {
    Formula,
    Group,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct StepDoc {
    #[serde(flatten)]
    rule: RuleDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    result: Option<CirquentDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum ModeDoc {
    Strict,
    Normalized,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ProofDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format_version: Option<u32>,
    conclusion: CirquentDoc,
    steps: Vec<StepDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<ModeDoc>,
}

fn check_version(version: Option<u32>) -> Result<(), IoError> {
    match version {
        None | Some(FORMAT_VERSION) => Ok(()),
        Some(other) => Err(IoError::Version(other)),
    }
}

fn cirquent_from_doc(doc: &CirquentDoc) -> Result<Cirquent, IoError> {
    check_version(doc.format_version)?;
    let formulas = doc
        .formulas
        .iter()
        .map(|s| Formula::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut groups = Vec::with_capacity(doc.groups.len());
    for (g, indices) in doc.groups.iter().enumerate() {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        if set.len() != indices.len() {
            let dup = indices
                .iter()
                .find(|i| indices.iter().filter(|j| j == i).count() > 1)
                .copied()
                .unwrap_or(0);
            return Err(IoError::Cirquent(CirquentError::DuplicateArc {
                group: g,
                index: dup,
            }));
        }
        groups.push(set);
    }
    Ok(Cirquent::new(formulas, groups)?)
}

fn cirquent_to_doc(cirquent: &Cirquent, versioned: bool) -> CirquentDoc {
    CirquentDoc {
        format_version: versioned.then_some(FORMAT_VERSION),
        formulas: cirquent.formulas().iter().map(|f| f.to_string()).collect(),
        groups: cirquent
            .groups()
            .iter()
            .map(|g| g.iter().copied().collect())
            .collect(),
    }
}

fn rule_from_doc(doc: &RuleDoc) -> Result<RuleApplication, IoError> {
    Ok(match doc {
        RuleDoc::Axiom { cirquent } => RuleApplication::Axiom {
            cirquent: cirquent_from_doc(cirquent)?,
        },
        RuleDoc::Exchange { kind, position } => RuleApplication::Exchange {
            kind: match kind {
                KindDoc::Formula => ExchangeKind::Formula,
                KindDoc::Group => ExchangeKind::Group,
            },
            position: *position,
        },
        RuleDoc::Weakening { new_formula, arc } => RuleApplication::Weakening {
            new_formula: new_formula
                .as_ref()
                .map(|nf| {
                    Ok::<_, IoError>(NewFormula {
                        position: nf.position,
                        formula: Formula::parse(&nf.formula)?,
                    })
                })
                .transpose()?,
            arc: *arc,
        },
        RuleDoc::Duplication { group } => RuleApplication::Duplication { group: *group },
        RuleDoc::OrIntro { position } => RuleApplication::OrIntro {
            position: *position,
        },
        RuleDoc::AndIntro { position, merges } => RuleApplication::AndIntro {
            position: *position,
            merges: merges.clone(),
        },
    })
}

fn rule_to_doc(rule: &RuleApplication) -> RuleDoc {
    match rule {
        RuleApplication::Axiom { cirquent } => RuleDoc::Axiom {
            cirquent: cirquent_to_doc(cirquent, false),
        },
        RuleApplication::Exchange { kind, position } => RuleDoc::Exchange {
            kind: match kind {
                ExchangeKind::Formula => KindDoc::Formula,
                ExchangeKind::Group => KindDoc::Group,
            },
            position: *position,
        },
        RuleApplication::Weakening { new_formula, arc } => RuleDoc::Weakening {
            new_formula: new_formula.as_ref().map(|nf| NewFormulaDoc {
                position: nf.position,
                formula: nf.formula.to_string(),
            }),
            arc: *arc,
        },
        RuleApplication::Duplication { group } => RuleDoc::Duplication { group: *group },
        RuleApplication::OrIntro { position } => RuleDoc::OrIntro {
            position: *position,
        },
        RuleApplication::AndIntro { position, merges } => RuleDoc::AndIntro {
            position: *position,
            merges: merges.clone(),
        },
    }
}

/// Parses a standalone cirquent file.
pub fn cirquent_from_json(text: &str) -> Result<Cirquent, IoError> {
    let doc: CirquentDoc = serde_json::from_str(text)?;
    cirquent_from_doc(&doc)
}

/// Serializes a cirquent as a standalone, versioned file.
pub fn cirquent_to_json(cirquent: &Cirquent) -> String {
    let doc = cirquent_to_doc(cirquent, true);
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

/// A proof file after parsing: raw steps (results optional), the claimed
/// conclusion, and the mode recorded in the file, if any.
pub struct ProofFile {
    pub steps: Vec<(RuleApplication, Option<Cirquent>)>,
    pub conclusion: Cirquent,
    pub mode: Option<CheckMode>,
}

/// Parses a proof file without elaborating or checking it.
pub fn proof_from_json(text: &str) -> Result<ProofFile, IoError> {
    let doc: ProofDoc = serde_json::from_str(text)?;
    check_version(doc.format_version)?;
    let conclusion = cirquent_from_doc(&doc.conclusion)?;
    let mut steps = Vec::with_capacity(doc.steps.len());
    for step in &doc.steps {
        let rule = rule_from_doc(&step.rule)?;
        let result = step.result.as_ref().map(cirquent_from_doc).transpose()?;
        steps.push((rule, result));
    }
    Ok(ProofFile {
        steps,
        conclusion,
        mode: doc.mode.map(|m| match m {
            ModeDoc::Strict => CheckMode::Strict,
            ModeDoc::Normalized => CheckMode::Normalized,
        }),
    })
}

/// Serializes a proof with every intermediate result embedded.
pub fn proof_to_json(proof: &Proof, mode: CheckMode) -> String {
    let doc = ProofDoc {
        format_version: Some(FORMAT_VERSION),
        conclusion: cirquent_to_doc(proof.conclusion(), false),
        steps: proof
            .steps()
            .iter()
            .map(|step| StepDoc {
                rule: rule_to_doc(&step.application),
                result: Some(cirquent_to_doc(&step.result, false)),
            })
            .collect(),
        mode: Some(match mode {
            CheckMode::Strict => ModeDoc::Strict,
            CheckMode::Normalized => ModeDoc::Normalized,
        }),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

/// Distinguishes proof files from cirquent files by shape.
pub fn looks_like_proof(text: &str) -> bool {
    serde_json::from_str::<serde_json::Value>(text)
        .map(|v| v.get("steps").is_some())
        .unwrap_or(false)
}
