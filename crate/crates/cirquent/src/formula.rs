//! Formulas of the `(~, /\, \/)` fragment: parsing, printing, duals,
//! and classical evaluation.
//!
//! Formulas are kept in negation normal form: negation lives only on
//! atoms. Surface syntax may negate arbitrary subformulas; the parser
//! pushes those negations inward by De Morgan rewriting, so `~(A /\ B)`
//! parses to the same value as `~A \/ ~B`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A propositional atom. Names match `[A-Z][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(String);

impl Atom {
    /// Creates an atom, rejecting names outside the token grammar.
    pub fn new(name: impl Into<String>) -> Result<Atom, ParseError> {
        let name = name.into();
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_uppercase() => {}
            Some(c) if c.is_ascii_lowercase() => {
                return Err(ParseError {
                    position: 0,
                    message: format!("atom `{name}` must start with an uppercase letter"),
                });
            }
            _ => {
                return Err(ParseError {
                    position: 0,
                    message: format!("`{name}` is not a valid atom name"),
                });
            }
        }
        if let Some(c) = chars.find(|c| !c.is_ascii_alphanumeric() && *c != '_') {
            return Err(ParseError {
                position: 0,
                message: format!("invalid character `{c}` in atom name `{name}`"),
            });
        }
        Ok(Atom(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A formula in negation normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// An atom occurring positively.
    Pos(Atom),
    /// An atom occurring under negation.
    Neg(Atom),
    /// Parallel conjunction.
    And(Box<Formula>, Box<Formula>),
    /// Parallel disjunction.
    Or(Box<Formula>, Box<Formula>),
}

/// A literal occurrence: an atom together with its polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Formula {
    pub fn pos(name: &str) -> Formula {
        Formula::Pos(Atom::new(name).expect("valid atom name"))
    }

    pub fn neg(name: &str) -> Formula {
        Formula::Neg(Atom::new(name).expect("valid atom name"))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    /// Parses a formula from the surface grammar.
    ///
    /// Precedence `~` > `/\` > `\/`, binary operators left-associative,
    /// `¬ ∧ ∨` accepted as aliases. The result is in negation normal
    /// form: negations of compound subformulas are elaborated away.
    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        Parser::new(text)?.parse_complete()
    }

    /// The negation normal form of the negation of `self`.
    ///
    /// Swaps `/\` with `\/` and flips literal polarity throughout; an
    /// involution.
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Pos(a) => Formula::Neg(a.clone()),
            Formula::Neg(a) => Formula::Pos(a.clone()),
            Formula::And(l, r) => Formula::or(l.dual(), r.dual()),
            Formula::Or(l, r) => Formula::and(l.dual(), r.dual()),
        }
    }

    /// Classical Boolean evaluation. The assignment must cover every
    /// atom of the formula, even ones short-circuiting would skip.
    pub fn eval(&self, assignment: &HashMap<Atom, bool>) -> Result<bool, EvalError> {
        for atom in self.atoms() {
            if !assignment.contains_key(&atom) {
                return Err(EvalError::MissingAtom(atom));
            }
        }
        Ok(self.eval_total(assignment))
    }

    fn eval_total(&self, assignment: &HashMap<Atom, bool>) -> bool {
        match self {
            Formula::Pos(a) => assignment[a],
            Formula::Neg(a) => !assignment[a],
            Formula::And(l, r) => l.eval_total(assignment) && r.eval_total(assignment),
            Formula::Or(l, r) => l.eval_total(assignment) || r.eval_total(assignment),
        }
    }

    /// Number of binary connectives.
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Pos(_) | Formula::Neg(_) => 0,
            Formula::And(l, r) | Formula::Or(l, r) => {
                1 + l.connective_count() + r.connective_count()
            }
        }
    }

    /// Number of literal occurrences (always at least one).
    pub fn literal_count(&self) -> usize {
        match self {
            Formula::Pos(_) | Formula::Neg(_) => 1,
            Formula::And(l, r) | Formula::Or(l, r) => l.literal_count() + r.literal_count(),
        }
    }

    /// The set of distinct atoms.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set
    }

    fn collect_atoms(&self, set: &mut BTreeSet<Atom>) {
        match self {
            Formula::Pos(a) | Formula::Neg(a) => {
                set.insert(a.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_atoms(set);
                r.collect_atoms(set);
            }
        }
    }

    /// Literal occurrences in left-to-right order.
    pub fn literal_occurrences(&self) -> Vec<Literal> {
        let mut out = Vec::new();
        self.collect_literals(&mut out);
        out
    }

    fn collect_literals(&self, out: &mut Vec<Literal>) {
        match self {
            Formula::Pos(a) => out.push(Literal {
                atom: a.clone(),
                negated: false,
            }),
            Formula::Neg(a) => out.push(Literal {
                atom: a.clone(),
                negated: true,
            }),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_literals(out);
                r.collect_literals(out);
            }
        }
    }

    /// Rebuilds the formula with the i-th literal occurrence renamed to
    /// `labels[i]`, polarities kept. `labels` must cover every occurrence.
    pub fn relabel_literals(&self, labels: &[Atom]) -> Formula {
        let mut next = 0;
        let relabeled = self.relabel_walk(labels, &mut next);
        assert_eq!(next, labels.len(), "label count must match literal count");
        relabeled
    }

    fn relabel_walk(&self, labels: &[Atom], next: &mut usize) -> Formula {
        match self {
            Formula::Pos(_) => {
                let a = labels[*next].clone();
                *next += 1;
                Formula::Pos(a)
            }
            Formula::Neg(_) => {
                let a = labels[*next].clone();
                *next += 1;
                Formula::Neg(a)
            }
            Formula::And(l, r) => {
                let l = l.relabel_walk(labels, next);
                let r = r.relabel_walk(labels, next);
                Formula::and(l, r)
            }
            Formula::Or(l, r) => {
                let l = l.relabel_walk(labels, next);
                let r = r.relabel_walk(labels, next);
                Formula::or(l, r)
            }
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Pos(_) | Formula::Neg(_) => write!(f, "{self}"),
            Formula::And(_, _) | Formula::Or(_, _) => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for Formula {
    /// Canonical text: every nested binary subformula is parenthesized,
    /// literals are bare, so parsing the output reproduces the value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Pos(a) => write!(f, "{a}"),
            Formula::Neg(a) => write!(f, "~{a}"),
            Formula::And(l, r) => {
                l.fmt_operand(f)?;
                write!(f, " /\\ ")?;
                r.fmt_operand(f)
            }
            Formula::Or(l, r) => {
                l.fmt_operand(f)?;
                write!(f, " \\/ ")?;
                r.fmt_operand(f)
            }
        }
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

/// A syntax error, with the character offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("assignment does not cover atom `{0}`")]
    MissingAtom(Atom),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Atom(String),
    Not,
    And,
    Or,
    LParen,
    RParen,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '~' | '\u{ac}' => {
                tokens.push((i, Token::Not));
                i += 1;
            }
            '\u{2227}' => {
                tokens.push((i, Token::And));
                i += 1;
            }
            '\u{2228}' => {
                tokens.push((i, Token::Or));
                i += 1;
            }
            '/' => {
                if chars.get(i + 1) == Some(&'\\') {
                    tokens.push((i, Token::And));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected `/\\`".into(),
                    });
                }
            }
            '\\' => {
                if chars.get(i + 1) == Some(&'/') {
                    tokens.push((i, Token::Or));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected `\\/`".into(),
                    });
                }
            }
            _ if c.is_ascii_uppercase() => {
                let start = i;
                let mut name = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    name.push(chars[i]);
                    i += 1;
                }
                tokens.push((start, Token::Atom(name)));
            }
            _ if c.is_ascii_lowercase() => {
                return Err(ParseError {
                    position: i,
                    message: format!("atom names must start with an uppercase letter, got `{c}`"),
                });
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(tokens)
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            tokens: lex(text)?,
            pos: 0,
            end: text.chars().count(),
        })
    }

    fn parse_complete(mut self) -> Result<Formula, ParseError> {
        let formula = self.disjunction()?;
        match self.tokens.get(self.pos) {
            None => Ok(formula),
            Some((at, _)) => Err(ParseError {
                position: *at,
                message: "unexpected trailing input".into(),
            }),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(at, _)| *at)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            let right = self.conjunction()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Not) => {
                self.pos += 1;
                // NNF is restored by dualizing the already-normal operand.
                Ok(self.unary()?.dual())
            }
            Some(Token::Atom(name)) => {
                let at = self.here();
                let atom = Atom::new(name.clone()).map_err(|e| ParseError {
                    position: at,
                    message: e.message,
                })?;
                self.pos += 1;
                Ok(Formula::Pos(atom))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.disjunction()?;
                if self.peek() == Some(&Token::RParen) {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(ParseError {
                        position: self.here(),
                        message: "expected `)`".into(),
                    })
                }
            }
            _ => Err(ParseError {
                position: self.here(),
                message: "expected a formula".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn parses_precedence_and_associativity() {
        assert_eq!(
            p("(F /\\ H) \\/ G"),
            Formula::or(Formula::and(Formula::pos("F"), Formula::pos("H")), Formula::pos("G"))
        );
        // ~ binds tighter than /\ which binds tighter than \/
        assert_eq!(
            p("~A \\/ B /\\ C"),
            Formula::or(Formula::neg("A"), Formula::and(Formula::pos("B"), Formula::pos("C")))
        );
        // left-associative
        assert_eq!(
            p("A \\/ B \\/ C"),
            Formula::or(Formula::or(Formula::pos("A"), Formula::pos("B")), Formula::pos("C"))
        );
    }

    #[test]
    fn parses_to_negation_normal_form() {
        assert_eq!(p("~(A /\\ B)"), Formula::or(Formula::neg("A"), Formula::neg("B")));
        assert_eq!(p("~~P"), Formula::pos("P"));
        assert_eq!(
            p("~((A \\/ B) /\\ ~C)"),
            Formula::or(
                Formula::and(Formula::neg("A"), Formula::neg("B")),
                Formula::pos("C")
            )
        );
    }

    #[test]
    fn accepts_unicode_aliases() {
        assert_eq!(p("¬P ∨ (Q ∧ R)"), p("~P \\/ (Q /\\ R)"));
    }

    #[test]
    fn rejects_bad_input_with_position() {
        let err = Formula::parse("A \\/ q").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.message.contains("uppercase"));

        let err = Formula::parse("(A \\/ B").unwrap_err();
        assert_eq!(err.position, 7);

        assert!(Formula::parse("").is_err());
        assert!(Formula::parse("A B").is_err());
        assert!(Formula::parse("A /").is_err());
    }

    #[test]
    fn prints_canonically() {
        assert_eq!(p("~P \\/ P").to_string(), "~P \\/ P");
        assert_eq!(
            Formula::and(Formula::pos("A"), Formula::or(Formula::pos("B"), Formula::pos("C")))
                .to_string(),
            "A /\\ (B \\/ C)"
        );
        assert_eq!(Formula::pos("Q").to_string(), "Q");
        assert_eq!(p("A \\/ B \\/ C").to_string(), "(A \\/ B) \\/ C");
    }

    #[test]
    fn dual_matches_de_morgan() {
        assert_eq!(
            p("A /\\ B").dual(),
            Formula::or(Formula::neg("A"), Formula::neg("B"))
        );
        assert_eq!(p("~P").dual(), Formula::pos("P"));
        // two De Morgan steps
        assert_eq!(p("(~P \\/ ~Q) /\\ (~R \\/ ~S)").dual(), p("(P /\\ Q) \\/ (R /\\ S)"));
    }

    #[test]
    fn eval_basics() {
        let mut v = HashMap::new();
        v.insert(Atom::new("P").unwrap(), false);
        assert!(p("~P \\/ P").eval(&v).unwrap());

        let mut v = HashMap::new();
        v.insert(Atom::new("A").unwrap(), false);
        assert!(!p("A /\\ A").eval(&v).unwrap());

        let err = p("A /\\ B").eval(&v).unwrap_err();
        assert_eq!(err, EvalError::MissingAtom(Atom::new("B").unwrap()));
    }

    #[test]
    fn blass_principle_is_a_classical_tautology() {
        let blass = p("((~P \\/ ~Q) /\\ (~R \\/ ~S)) \\/ ((P \\/ R) /\\ (Q \\/ S))");
        let atoms: Vec<Atom> = blass.atoms().into_iter().collect();
        assert_eq!(atoms.len(), 4);
        for bits in 0..16u32 {
            let v: HashMap<Atom, bool> = atoms
                .iter()
                .enumerate()
                .map(|(i, a)| (a.clone(), bits >> i & 1 == 1))
                .collect();
            assert!(blass.eval(&v).unwrap(), "false under {bits:04b}");
        }
    }

    #[test]
    fn counts() {
        let f = p("((~P \\/ ~Q) /\\ (~R \\/ ~S)) \\/ ((P \\/ R) /\\ (Q \\/ S))");
        assert_eq!(f.connective_count(), 7);
        assert_eq!(f.literal_count(), 8);
        assert_eq!(p("A").connective_count(), 0);
    }

    #[test]
    fn literal_occurrences_and_relabel() {
        let f = p("~A \\/ (A /\\ A)");
        let occ = f.literal_occurrences();
        assert_eq!(occ.len(), 3);
        assert!(occ[0].negated);
        assert!(!occ[1].negated);

        let labels = vec![
            Atom::new("X").unwrap(),
            Atom::new("X").unwrap(),
            Atom::new("Y").unwrap(),
        ];
        assert_eq!(f.relabel_literals(&labels), p("~X \\/ (X /\\ Y)"));
    }

    pub(crate) fn arb_formula(max_connectives: usize) -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            "[A-E]".prop_map(|s| Formula::pos(&s)),
            "[A-E]".prop_map(|s| Formula::neg(&s)),
        ];
        leaf.prop_recursive(max_connectives as u32, (max_connectives * 2) as u32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| Formula::or(l, r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_formula(12)) {
            let printed = f.to_string();
            prop_assert_eq!(Formula::parse(&printed).unwrap(), f);
        }

        #[test]
        fn dual_is_an_involution(f in arb_formula(8)) {
            prop_assert_eq!(f.dual().dual(), f);
        }

        #[test]
        fn dual_negates_semantically(f in arb_formula(6)) {
            let atoms: Vec<Atom> = f.atoms().into_iter().collect();
            let dual = f.dual();
            for bits in 0..1u32 << atoms.len() {
                let v: HashMap<Atom, bool> = atoms
                    .iter()
                    .enumerate()
                    .map(|(i, a)| (a.clone(), bits >> i & 1 == 1))
                    .collect();
                prop_assert_eq!(dual.eval(&v).unwrap(), !f.eval(&v).unwrap());
            }
        }
    }
}
