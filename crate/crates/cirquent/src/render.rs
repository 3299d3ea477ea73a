//! Deterministic text renderings of cirquents and proofs.
//!
//! ASCII output flattens the usual cirquent picture into three zones:
//! the formula row, a bullet row (one bullet per group), and an arc
//! adjacency list. DOT output is a bipartite digraph — boxed formula
//! nodes, filled circles for groups, one edge per arc — fit for
//! `dot -Tsvg` but emitted without ever invoking external tooling.

use std::fmt::Write;

use crate::cirquent::Cirquent;
use crate::proof::Proof;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// Prefix formula labels with their occurrence index.
    pub show_indices: bool,
    /// Name groups `g0, g1, ...` instead of bare bullets.
    pub label_groups: bool,
}

impl RenderSpec {
    pub fn ascii() -> RenderSpec {
        RenderSpec {
            format: RenderFormat::Ascii,
            show_indices: false,
            label_groups: true,
        }
    }

    pub fn dot() -> RenderSpec {
        RenderSpec {
            format: RenderFormat::Dot,
            show_indices: false,
            label_groups: true,
        }
    }
}

/// Renders one cirquent. Same input and spec always give identical
/// bytes.
pub fn render(cirquent: &Cirquent, spec: &RenderSpec) -> String {
    match spec.format {
        RenderFormat::Ascii => ascii_cirquent(cirquent, spec),
        RenderFormat::Dot => {
            let mut out = String::from("digraph cirquent {\n  rankdir=TB;\n");
            dot_cirquent_body(&mut out, cirquent, spec, "", "  ");
            out.push_str("}\n");
            out
        }
    }
}

/// Renders a whole proof, one block (ASCII) or cluster (DOT) per step.
pub fn render_proof(proof: &Proof, spec: &RenderSpec) -> String {
    match spec.format {
        RenderFormat::Ascii => {
            let mut out = String::new();
            for (index, step) in proof.steps().iter().enumerate() {
                let _ = writeln!(out, "-- step {index}: {} --", step.application.name());
                out.push_str(&ascii_cirquent(&step.result, spec));
            }
            out
        }
        RenderFormat::Dot => {
            let mut out = String::from("digraph proof {\n  rankdir=TB;\n");
            for (index, step) in proof.steps().iter().enumerate() {
                let _ = writeln!(out, "  subgraph cluster_step{index} {{");
                let _ = writeln!(
                    out,
                    "    label=\"step {index}: {}\";",
                    step.application.name()
                );
                dot_cirquent_body(&mut out, &step.result, spec, &format!("s{index}_"), "    ");
                out.push_str("  }\n");
            }
            out.push_str("}\n");
            out
        }
    }
}

fn ascii_cirquent(cirquent: &Cirquent, spec: &RenderSpec) -> String {
    let mut out = String::new();
    let formulas: Vec<String> = cirquent
        .formulas()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if spec.show_indices {
                format!("{i}:{f}")
            } else {
                f.to_string()
            }
        })
        .collect();
    out.push_str(&formulas.join("  "));
    out.push('\n');

    let bullets: Vec<String> = (0..cirquent.groups().len())
        .map(|g| {
            if spec.label_groups {
                format!("*g{g}")
            } else {
                "*".to_string()
            }
        })
        .collect();
    out.push_str(&bullets.join("  "));
    out.push('\n');

    for (g, group) in cirquent.groups().iter().enumerate() {
        let name = if spec.label_groups {
            format!("g{g}")
        } else {
            "*".to_string()
        };
        let arcs: Vec<String> = group.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{name} -> {}", arcs.join(" "));
    }
    out
}

fn dot_cirquent_body(out: &mut String, cirquent: &Cirquent, spec: &RenderSpec, prefix: &str, indent: &str) {
    for (i, formula) in cirquent.formulas().iter().enumerate() {
        let label = if spec.show_indices {
            format!("{i}: {formula}")
        } else {
            formula.to_string()
        };
        let _ = writeln!(
            out,
            "{indent}{prefix}f{i} [shape=box, label=\"{}\"];",
            escape_dot(&label)
        );
    }
    for g in 0..cirquent.groups().len() {
        let label = if spec.label_groups {
            format!("g{g}")
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "{indent}{prefix}g{g} [shape=circle, style=filled, label=\"{}\"];",
            escape_dot(&label)
        );
    }
    for (g, group) in cirquent.groups().iter().enumerate() {
        for &i in group {
            let _ = writeln!(out, "{indent}{prefix}g{g} -> {prefix}f{i};");
        }
    }
}

/// Escapes a label for a double-quoted DOT string. Formula text is full
/// of backslashes, which DOT would otherwise eat.
fn escape_dot(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::rules::RuleApplication;
    use std::collections::BTreeSet;

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

    #[test]
    fn dot_counts_nodes_and_edges() {
        let axiom = cq(&["~P", "P"], &[&[0, 1]]);
        let dot = render(&axiom, &RenderSpec::dot());
        assert_eq!(dot.matches("[shape=box").count(), 2);
        assert_eq!(dot.matches("[shape=circle").count(), 1);
        assert_eq!(dot.matches("->").count(), 2);

        let shared = cq(&["F", "G", "H", "F"], &[&[0, 1], &[1, 2], &[3]]);
        let dot = render(&shared, &RenderSpec::dot());
        assert_eq!(
            dot.matches("[shape=box").count() + dot.matches("[shape=circle").count(),
            7
        );
        assert_eq!(dot.matches("->").count(), 5);
    }

    #[test]
    fn dot_escapes_connective_backslashes() {
        let c = Cirquent::from_formula(Formula::parse("~P \\/ P").unwrap());
        let dot = render(&c, &RenderSpec::dot());
        assert!(dot.contains(r"~P \\/ P"));
    }

    #[test]
    fn rendering_is_stable() {
        let c = cq(&["F", "G", "H", "F"], &[&[0, 1], &[1, 2], &[3]]);
        for spec in [RenderSpec::ascii(), RenderSpec::dot()] {
            assert_eq!(render(&c, &spec), render(&c, &spec));
        }
    }

    #[test]
    fn ascii_layout_has_three_zones() {
        let c = cq(&["~P", "P"], &[&[0, 1]]);
        let text = render(&c, &RenderSpec::ascii());
        assert_eq!(text, "~P  P\n*g0\ng0 -> 0 1\n");

        let mut spec = RenderSpec::ascii();
        spec.show_indices = true;
        spec.label_groups = false;
        let text = render(&c, &spec);
        assert_eq!(text, "0:~P  1:P\n*\n* -> 0 1\n");
    }

    #[test]
    fn proof_rendering_shows_every_step() {
        let proof = crate::proof::Proof::from_applications(
            vec![
                RuleApplication::Axiom {
                    cirquent: cq(&["~P", "P"], &[&[0, 1]]),
                },
                RuleApplication::OrIntro { position: 0 },
            ],
            Cirquent::from_formula(Formula::parse("~P \\/ P").unwrap()),
        )
        .unwrap();
        let text = render_proof(&proof, &RenderSpec::ascii());
        assert!(text.contains("-- step 0: axiom --"));
        assert!(text.contains("-- step 1: or_intro --"));
        let dot = render_proof(&proof, &RenderSpec::dot());
        assert!(dot.contains("subgraph cluster_step0"));
        assert!(dot.contains("subgraph cluster_step1"));
    }
}
