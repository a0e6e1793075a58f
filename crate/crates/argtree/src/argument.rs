//! Argument trees and their accessors.
//!
//! An argument is either a knowledge-base formula (a leaf) or a rule applied
//! to one sub-argument per premise. Trees are immutable and cheap to clone;
//! equality is structural: same leaf formulas, same rules, same child order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use crate::formula::Formula;
use crate::theory::{ArgumentationTheory, Rule, RuleKind};

#[derive(Clone)]
pub struct Argument {
    inner: Arc<Node>,
}

struct Node {
    kind: NodeKind,
    nodes: u64,
    digest: u64,
}

enum NodeKind {
    Leaf(Formula),
    Apply { rule: Rule, children: Vec<Argument> },
}

impl Argument {
    /// Clause 1: a knowledge-base formula stands as its own argument.
    pub fn leaf(theory: &ArgumentationTheory, formula: Formula) -> Result<Self, ArgumentError> {
        if !theory.kb().contains(&formula) {
            return Err(ArgumentError::LeafNotInKb(formula));
        }
        Ok(Self::leaf_unchecked(formula))
    }

    /// Clauses 2–3: apply a rule of the theory to one child per premise,
    /// where child `i` concludes premise `i`.
    pub fn apply(
        theory: &ArgumentationTheory,
        rule: &Rule,
        children: Vec<Argument>,
    ) -> Result<Self, ArgumentError> {
        let rule = theory
            .find_rule(rule)
            .ok_or_else(|| ArgumentError::RuleNotInTheory(rule.text()))?
            .clone();
        if children.len() != rule.premises().len() {
            return Err(ArgumentError::ArityMismatch {
                rule: rule.text(),
                expected: rule.premises().len(),
                found: children.len(),
            });
        }
        for (index, (child, premise)) in children.iter().zip(rule.premises()).enumerate() {
            if child.conclusion() != premise {
                return Err(ArgumentError::PremiseMismatch {
                    rule: rule.text(),
                    index,
                    expected: premise.clone(),
                    found: child.conclusion().clone(),
                });
            }
        }
        Ok(Self::apply_unchecked(rule, children))
    }

    pub(crate) fn leaf_unchecked(formula: Formula) -> Self {
        let mut hasher = DefaultHasher::new();
        0u8.hash(&mut hasher);
        formula.hash(&mut hasher);
        Argument {
            inner: Arc::new(Node {
                digest: hasher.finish(),
                nodes: 1,
                kind: NodeKind::Leaf(formula),
            }),
        }
    }

    pub(crate) fn apply_unchecked(rule: Rule, children: Vec<Argument>) -> Self {
        let mut hasher = DefaultHasher::new();
        1u8.hash(&mut hasher);
        rule.hash(&mut hasher);
        let mut nodes: u64 = 1;
        for child in &children {
            child.inner.digest.hash(&mut hasher);
            nodes = nodes.saturating_add(child.inner.nodes);
        }
        Argument {
            inner: Arc::new(Node {
                digest: hasher.finish(),
                nodes,
                kind: NodeKind::Apply { rule, children },
            }),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.inner.kind, NodeKind::Leaf(_))
    }

    /// The leaf's formula, when this argument is one.
    pub fn leaf_formula(&self) -> Option<&Formula> {
        match &self.inner.kind {
            NodeKind::Leaf(formula) => Some(formula),
            NodeKind::Apply { .. } => None,
        }
    }

    /// The last rule applied; absent for leaves.
    pub fn top_rule(&self) -> Option<&Rule> {
        match &self.inner.kind {
            NodeKind::Leaf(_) => None,
            NodeKind::Apply { rule, .. } => Some(rule),
        }
    }

    /// Direct sub-arguments in premise order; empty for leaves.
    pub fn children(&self) -> &[Argument] {
        match &self.inner.kind {
            NodeKind::Leaf(_) => &[],
            NodeKind::Apply { children, .. } => children,
        }
    }

    pub fn conclusion(&self) -> &Formula {
        match &self.inner.kind {
            NodeKind::Leaf(formula) => formula,
            NodeKind::Apply { rule, .. } => rule.conclusion(),
        }
    }

    /// The knowledge-base formulas at the leaves.
    pub fn premises(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(arg) = stack.pop() {
            match &arg.inner.kind {
                NodeKind::Leaf(formula) => {
                    out.insert(formula.clone());
                }
                NodeKind::Apply { children, .. } => stack.extend(children.iter()),
            }
        }
        out
    }

    /// Every rule applied anywhere in the tree.
    pub fn rules(&self) -> BTreeSet<Rule> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(arg) = stack.pop() {
            if let NodeKind::Apply { rule, children } = &arg.inner.kind {
                out.insert(rule.clone());
                stack.extend(children.iter());
            }
        }
        out
    }

    /// All structurally distinct sub-trees, including the argument itself.
    pub fn subarguments(&self) -> BTreeSet<Argument> {
        fn walk(arg: &Argument, out: &mut BTreeSet<Argument>) {
            if out.insert(arg.clone()) {
                for child in arg.children() {
                    walk(child, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }

    /// Number of tree nodes: leaves plus rule applications. Shared sub-trees
    /// count once per occurrence.
    pub fn node_count(&self) -> u64 {
        self.inner.nodes
    }

    /// The triple (grounds, rules, conclusion) describing this argument.
    pub fn description(&self) -> ArgumentDescription {
        ArgumentDescription {
            grounds: self.premises(),
            rules: self.rules(),
            conclusion: self.conclusion().clone(),
        }
    }

    /// All accessors at once.
    pub fn inspect(&self) -> Inspection {
        Inspection {
            premises: self.premises(),
            conclusion: self.conclusion().clone(),
            subarguments: self.subarguments(),
            top_rule: self.top_rule().cloned(),
            rules: self.rules(),
            description: self.description(),
        }
    }

    /// Deterministic serialization: a leaf prints as its formula, a rule
    /// application as `[child,child… ARROW conclusion]` with `->` or `=>`.
    /// Two arguments print identically iff they are structurally equal.
    pub fn canonical_form(&self) -> String {
        let mut out = String::new();
        self.write_canonical(&mut out);
        out
    }

    fn write_canonical(&self, out: &mut String) {
        match &self.inner.kind {
            NodeKind::Leaf(formula) => out.push_str(&formula.to_string()),
            NodeKind::Apply { rule, children } => {
                out.push('[');
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    child.write_canonical(out);
                }
                out.push(' ');
                out.push_str(rule.kind().arrow());
                out.push(' ');
                out.push_str(&rule.conclusion().to_string());
                out.push(']');
            }
        }
    }

    /// Parses the canonical form back into a checked argument of `theory`.
    pub fn parse(theory: &ArgumentationTheory, text: &str) -> Result<Self, ArgumentError> {
        let mut scanner = Scanner::new(text);
        let arg = scanner.parse_argument(theory)?;
        scanner.skip_ws();
        if !scanner.at_end() {
            return Err(ArgumentError::Syntax(format!(
                "trailing input after argument: {:?}",
                scanner.rest()
            )));
        }
        Ok(arg)
    }
}

impl PartialEq for Argument {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        if self.inner.digest != other.inner.digest || self.inner.nodes != other.inner.nodes {
            return false;
        }
        match (&self.inner.kind, &other.inner.kind) {
            (NodeKind::Leaf(a), NodeKind::Leaf(b)) => a == b,
            (
                NodeKind::Apply {
                    rule: ra,
                    children: ca,
                },
                NodeKind::Apply {
                    rule: rb,
                    children: cb,
                },
            ) => ra == rb && ca == cb,
            _ => false,
        }
    }
}

impl Eq for Argument {}

impl Hash for Argument {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.inner.digest);
    }
}

impl Ord for Argument {
    /// Orders by size first, then by canonical form; consistent with
    /// structural equality.
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return Ordering::Equal;
        }
        self.inner
            .nodes
            .cmp(&other.inner.nodes)
            .then_with(|| self.canonical_form().cmp(&other.canonical_form()))
    }
}

impl PartialOrd for Argument {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_form())
    }
}

impl fmt::Debug for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_form())
    }
}

/// The record returned by [`Argument::inspect`].
#[derive(Clone, Debug)]
pub struct Inspection {
    pub premises: BTreeSet<Formula>,
    pub conclusion: Formula,
    pub subarguments: BTreeSet<Argument>,
    pub top_rule: Option<Rule>,
    pub rules: BTreeSet<Rule>,
    pub description: ArgumentDescription,
}

/// The triple (G, R, p): grounds, rules, and conclusion.
///
/// Structurally equal arguments have equal descriptions; the converse fails
/// in general, since distinct arguments can share a triple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentDescription {
    grounds: BTreeSet<Formula>,
    rules: BTreeSet<Rule>,
    conclusion: Formula,
}

impl ArgumentDescription {
    pub fn new(grounds: BTreeSet<Formula>, rules: BTreeSet<Rule>, conclusion: Formula) -> Self {
        ArgumentDescription {
            grounds,
            rules,
            conclusion,
        }
    }

    pub fn grounds(&self) -> &BTreeSet<Formula> {
        &self.grounds
    }

    pub fn rules(&self) -> &BTreeSet<Rule> {
        &self.rules
    }

    pub fn conclusion(&self) -> &Formula {
        &self.conclusion
    }
}

impl fmt::Display for ArgumentDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grounds: Vec<String> = self.grounds.iter().map(|g| g.to_string()).collect();
        let mut rules: Vec<String> = self.rules.iter().map(|r| r.label()).collect();
        rules.sort();
        write!(
            f,
            "({{{}}}, {{{}}}, {})",
            grounds.join(","),
            rules.join(";"),
            self.conclusion
        )
    }
}

/// Rejected argument construction or canonical-form text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArgumentError {
    LeafNotInKb(Formula),
    RuleNotInTheory(String),
    ArityMismatch {
        rule: String,
        expected: usize,
        found: usize,
    },
    PremiseMismatch {
        rule: String,
        index: usize,
        expected: Formula,
        found: Formula,
    },
    Syntax(String),
}

impl fmt::Display for ArgumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgumentError::LeafNotInKb(formula) => {
                write!(f, "formula {formula} is not in the knowledge base")
            }
            ArgumentError::RuleNotInTheory(rule) => {
                write!(f, "rule {rule} is not part of the theory")
            }
            ArgumentError::ArityMismatch {
                rule,
                expected,
                found,
            } => write!(f, "rule {rule} takes {expected} sub-arguments, got {found}"),
            ArgumentError::PremiseMismatch {
                rule,
                index,
                expected,
                found,
            } => write!(
                f,
                "sub-argument {index} of rule {rule} concludes {found}, premise requires {expected}"
            ),
            ArgumentError::Syntax(message) => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for ArgumentError {}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn parse_formula(&mut self) -> Result<Formula, ArgumentError> {
        self.skip_ws();
        let negated = self.eat("-");
        let start = self.pos;
        while let Some(c) = self.rest().chars().next() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        Formula::new(&self.src[start..self.pos], negated)
            .map_err(|e| ArgumentError::Syntax(e.to_string()))
    }

    fn parse_argument(&mut self, theory: &ArgumentationTheory) -> Result<Argument, ArgumentError> {
        self.skip_ws();
        if !self.eat("[") {
            let formula = self.parse_formula()?;
            return Argument::leaf(theory, formula);
        }
        let mut children = vec![self.parse_argument(theory)?];
        loop {
            self.skip_ws();
            if self.eat(",") {
                children.push(self.parse_argument(theory)?);
            } else {
                break;
            }
        }
        self.skip_ws();
        let kind = if self.eat("->") {
            RuleKind::Strict
        } else if self.eat("=>") {
            RuleKind::Defeasible
        } else {
            return Err(ArgumentError::Syntax(format!(
                "expected '->' or '=>' at {:?}",
                self.rest()
            )));
        };
        let conclusion = self.parse_formula()?;
        self.skip_ws();
        if !self.eat("]") {
            return Err(ArgumentError::Syntax(format!(
                "expected ']' at {:?}",
                self.rest()
            )));
        }
        let premises: Vec<Formula> = children.iter().map(|c| c.conclusion().clone()).collect();
        let rule = theory
            .rules()
            .find(|r| {
                r.kind() == kind
                    && r.premises() == premises.as_slice()
                    && r.conclusion() == &conclusion
            })
            .cloned()
            .ok_or_else(|| {
                ArgumentError::RuleNotInTheory(format!(
                    "{} {} {}",
                    premises
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    kind.arrow(),
                    conclusion
                ))
            })?;
        Argument::apply(theory, &rule, children)
    }
}
