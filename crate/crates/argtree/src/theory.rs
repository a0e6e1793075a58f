//! Argumentation systems, knowledge bases, and their validated combination.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::formula::Formula;

/// Whether a rule's conclusion holds without exception or only by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleKind {
    Strict,
    Defeasible,
}

impl RuleKind {
    /// The arrow used in the concrete syntax: `->` or `=>`.
    pub fn arrow(self) -> &'static str {
        match self {
            RuleKind::Strict => "->",
            RuleKind::Defeasible => "=>",
        }
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Strict => write!(f, "strict"),
            RuleKind::Defeasible => write!(f, "defeasible"),
        }
    }
}

/// An inference rule with an ordered, non-empty premise list.
///
/// Identity (equality, ordering, hashing) is by `(kind, premises, conclusion)`;
/// the name is metadata and does not participate. Rules are created by theory
/// construction, which also assigns generated names (`d1, d2, …` for unnamed
/// defeasible rules, `s1, s2, …` for unnamed strict rules).
#[derive(Clone)]
pub struct Rule {
    name: Option<String>,
    kind: RuleKind,
    premises: Vec<Formula>,
    conclusion: Formula,
}

impl Rule {
    fn new(
        name: Option<String>,
        kind: RuleKind,
        premises: Vec<Formula>,
        conclusion: Formula,
    ) -> Self {
        Rule {
            name,
            kind,
            premises,
            conclusion,
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn is_defeasible(&self) -> bool {
        self.kind == RuleKind::Defeasible
    }

    pub fn premises(&self) -> &[Formula] {
        &self.premises
    }

    pub fn conclusion(&self) -> &Formula {
        &self.conclusion
    }

    /// The name when present, otherwise the rule text. Used for reports.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.to_string(),
        }
    }

    /// The rule text without its name, e.g. `p,q => r`.
    pub fn text(&self) -> String {
        let premises: Vec<String> = self.premises.iter().map(|p| p.to_string()).collect();
        format!(
            "{} {} {}",
            premises.join(","),
            self.kind.arrow(),
            self.conclusion
        )
    }

    fn identity(&self) -> (RuleKind, &[Formula], &Formula) {
        (self.kind, &self.premises, &self.conclusion)
    }
}

impl PartialEq for Rule {
    fn eq(&self, other: &Self) -> bool {
        self.identity() == other.identity()
    }
}

impl Eq for Rule {}

impl Hash for Rule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kind.hash(state);
        self.premises.hash(state);
        self.conclusion.hash(state);
    }
}

impl Ord for Rule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.identity().cmp(&other.identity())
    }
}

impl PartialOrd for Rule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{}: {}", n, self.text()),
            None => write!(f, "{}", self.text()),
        }
    }
}

/// A rule as declared, before theory construction assigns kind and name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleDecl {
    pub name: Option<String>,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl RuleDecl {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Self {
        RuleDecl {
            name: None,
            premises,
            conclusion,
        }
    }

    pub fn named(name: impl Into<String>, premises: Vec<Formula>, conclusion: Formula) -> Self {
        RuleDecl {
            name: Some(name.into()),
            premises,
            conclusion,
        }
    }

    fn shape(&self) -> (Vec<Formula>, Formula) {
        (self.premises.clone(), self.conclusion.clone())
    }

    fn text(&self) -> String {
        let premises: Vec<String> = self.premises.iter().map(|p| p.to_string()).collect();
        format!("{} ~> {}", premises.join(","), self.conclusion)
    }
}

/// The contrariness function as a set of directed pairs.
///
/// A pair `(φ, ψ)` records that φ is in the contrary set of ψ. φ is a
/// *contrary* of ψ when only `(φ, ψ)` is present, and a *contradictory* of ψ
/// when `(ψ, φ)` is present as well.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContrarinessMap {
    pairs: BTreeSet<(Formula, Formula)>,
}

impl ContrarinessMap {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Formula, Formula)>) -> Self {
        ContrarinessMap {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(Formula, Formula)> {
        self.pairs.iter()
    }

    pub fn contains(&self, of: &Formula, target: &Formula) -> bool {
        self.pairs.contains(&(of.clone(), target.clone()))
    }

    pub fn is_contrary(&self, of: &Formula, target: &Formula) -> bool {
        self.contains(of, target) && !self.contains(target, of)
    }

    pub fn is_contradictory(&self, of: &Formula, target: &Formula) -> bool {
        self.contains(of, target) && self.contains(target, of)
    }

    /// Whether some formula is a contradictory of `target`.
    pub fn has_contradictory(&self, target: &Formula) -> bool {
        self.pairs
            .iter()
            .any(|(a, b)| b == target && self.contains(target, a))
    }

    /// Every formula mentioned on either side of a pair.
    pub fn mentioned(&self) -> BTreeSet<Formula> {
        self.pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Axioms and ordinary premises; disjoint by construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    axioms: BTreeSet<Formula>,
    ordinary: BTreeSet<Formula>,
}

impl KnowledgeBase {
    pub fn axioms(&self) -> &BTreeSet<Formula> {
        &self.axioms
    }

    pub fn ordinary_premises(&self) -> &BTreeSet<Formula> {
        &self.ordinary
    }

    pub fn contains(&self, formula: &Formula) -> bool {
        self.axioms.contains(formula) || self.ordinary.contains(formula)
    }

    /// All knowledge-base formulas in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.axioms.iter().chain(self.ordinary.iter())
    }

    pub fn len(&self) -> usize {
        self.axioms.len() + self.ordinary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty() && self.ordinary.is_empty()
    }
}

/// The description from which a theory is built: a language, a contrariness
/// relation, strict and defeasible rule declarations, and the knowledge base.
#[derive(Clone, Debug, Default)]
pub struct TheoryDescription {
    pub language: BTreeSet<Formula>,
    pub contrariness: Vec<(Formula, Formula)>,
    pub strict: Vec<RuleDecl>,
    pub defeasible: Vec<RuleDecl>,
    pub axioms: BTreeSet<Formula>,
    pub premises: BTreeSet<Formula>,
}

impl TheoryDescription {
    /// Checks every invariant and produces an immutable theory.
    ///
    /// Checks run in a fixed order: empty premise lists, duplicate rules and
    /// names, knowledge-base overlap, then language membership. Unnamed rules
    /// receive generated names (`d1, d2, …` and `s1, s2, …`) in declaration
    /// order, skipping names that are already taken.
    pub fn build(self) -> Result<ArgumentationTheory, TheoryError> {
        for decl in self.strict.iter().chain(self.defeasible.iter()) {
            if decl.premises.is_empty() {
                return Err(TheoryError::EmptyPremises { rule: decl.text() });
            }
        }

        let strict = dedupe_decls(&self.strict)?;
        let defeasible = dedupe_decls(&self.defeasible)?;

        let strict_shapes: BTreeSet<_> = strict.iter().map(RuleDecl::shape).collect();
        for decl in &defeasible {
            if strict_shapes.contains(&decl.shape()) {
                return Err(TheoryError::DuplicateRule { rule: decl.text() });
            }
        }

        let mut taken: BTreeSet<String> = BTreeSet::new();
        let mut named_shapes: BTreeMap<String, (RuleKind, (Vec<Formula>, Formula))> =
            BTreeMap::new();
        for (kind, decl) in strict
            .iter()
            .map(|d| (RuleKind::Strict, d))
            .chain(defeasible.iter().map(|d| (RuleKind::Defeasible, d)))
        {
            if let Some(name) = &decl.name {
                if named_shapes
                    .insert(name.clone(), (kind, decl.shape()))
                    .is_some()
                {
                    return Err(TheoryError::DuplicateName { name: name.clone() });
                }
                taken.insert(name.clone());
            }
        }

        let strict_rules = assign_names(strict, RuleKind::Strict, "s", &mut taken);
        let defeasible_rules = assign_names(defeasible, RuleKind::Defeasible, "d", &mut taken);

        if let Some(overlap) = self.axioms.intersection(&self.premises).next() {
            return Err(TheoryError::OverlappingKb {
                formula: overlap.clone(),
            });
        }

        let contrariness = ContrarinessMap::from_pairs(self.contrariness);
        let mut mentioned: Vec<Formula> = Vec::new();
        for rule in strict_rules.iter().chain(defeasible_rules.iter()) {
            mentioned.extend(rule.premises.iter().cloned());
            mentioned.push(rule.conclusion.clone());
        }
        mentioned.extend(self.axioms.iter().cloned());
        mentioned.extend(self.premises.iter().cloned());
        mentioned.extend(contrariness.mentioned());
        for formula in mentioned {
            if !self.language.contains(&formula) {
                return Err(TheoryError::UnknownFormula { formula });
            }
        }

        Ok(ArgumentationTheory {
            language: self.language,
            contrariness,
            strict: strict_rules,
            defeasible: defeasible_rules,
            kb: KnowledgeBase {
                axioms: self.axioms,
                ordinary: self.premises,
            },
        })
    }
}

/// Drops exact repeats of a shape; a repeated shape with a different name is
/// an error, as is reusing a name for a different shape (checked later).
fn dedupe_decls(decls: &[RuleDecl]) -> Result<Vec<RuleDecl>, TheoryError> {
    let mut seen: BTreeMap<(Vec<Formula>, Formula), Option<String>> = BTreeMap::new();
    let mut out = Vec::new();
    for decl in decls {
        match seen.get(&decl.shape()) {
            None => {
                seen.insert(decl.shape(), decl.name.clone());
                out.push(decl.clone());
            }
            Some(existing) if *existing == decl.name => {}
            Some(_) => {
                return Err(TheoryError::DuplicateName {
                    name: decl.name.clone().unwrap_or_else(|| decl.text()),
                })
            }
        }
    }
    Ok(out)
}

fn assign_names(
    decls: Vec<RuleDecl>,
    kind: RuleKind,
    prefix: &str,
    taken: &mut BTreeSet<String>,
) -> Vec<Rule> {
    let mut counter = 1usize;
    decls
        .into_iter()
        .map(|decl| {
            let name = match decl.name {
                Some(name) => name,
                None => loop {
                    let candidate = format!("{prefix}{counter}");
                    counter += 1;
                    if taken.insert(candidate.clone()) {
                        break candidate;
                    }
                },
            };
            Rule::new(Some(name), kind, decl.premises, decl.conclusion)
        })
        .collect()
}

/// An immutable argumentation theory: language, contrariness, rules, and
/// knowledge base, with every invariant checked at construction.
#[derive(Clone, Debug)]
pub struct ArgumentationTheory {
    language: BTreeSet<Formula>,
    contrariness: ContrarinessMap,
    strict: Vec<Rule>,
    defeasible: Vec<Rule>,
    kb: KnowledgeBase,
}

impl ArgumentationTheory {
    pub fn language(&self) -> &BTreeSet<Formula> {
        &self.language
    }

    pub fn contrariness(&self) -> &ContrarinessMap {
        &self.contrariness
    }

    pub fn strict_rules(&self) -> &[Rule] {
        &self.strict
    }

    pub fn defeasible_rules(&self) -> &[Rule] {
        &self.defeasible
    }

    /// All rules, strict first, in declaration order.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.strict.iter().chain(self.defeasible.iter())
    }

    pub fn kb(&self) -> &KnowledgeBase {
        &self.kb
    }

    pub fn rule_named(&self, name: &str) -> Option<&Rule> {
        self.rules().find(|r| r.name() == Some(name))
    }

    /// The theory's own copy of a rule with the same identity, if any.
    pub fn find_rule(&self, rule: &Rule) -> Option<&Rule> {
        self.rules().find(|r| *r == rule)
    }

    /// All rules in a stable set order, for closure queries.
    pub fn rule_set(&self) -> BTreeSet<Rule> {
        self.rules().cloned().collect()
    }

    /// The description this theory was built from, names included, suitable
    /// for modification and rebuilding.
    pub fn description(&self) -> TheoryDescription {
        let decl = |rule: &Rule| RuleDecl {
            name: rule.name.clone(),
            premises: rule.premises.clone(),
            conclusion: rule.conclusion.clone(),
        };
        TheoryDescription {
            language: self.language.clone(),
            contrariness: self.contrariness.pairs().cloned().collect(),
            strict: self.strict.iter().map(decl).collect(),
            defeasible: self.defeasible.iter().map(decl).collect(),
            axioms: self.kb.axioms.clone(),
            premises: self.kb.ordinary.clone(),
        }
    }

    /// Checks the contrariness requirement that every formula has at least
    /// one contradictory. Missing contradictories are errors in strict mode
    /// and warnings otherwise; self-contrary pairs always warn. Disjointness
    /// of the knowledge base and of the rule kinds is re-checked and echoed.
    pub fn validate(&self, strict_mode: bool) -> ValidationReport {
        let mut report = ValidationReport {
            contradictories: Vec::new(),
            kb_disjoint: self
                .kb
                .axioms
                .intersection(&self.kb.ordinary)
                .next()
                .is_none(),
            rule_kinds_disjoint: self.strict.iter().all(|s| {
                !self
                    .defeasible
                    .iter()
                    .any(|d| d.premises == s.premises && d.conclusion == s.conclusion)
            }),
            errors: Vec::new(),
            warnings: Vec::new(),
        };
        for formula in &self.language {
            let present = self.contrariness.has_contradictory(formula);
            report.contradictories.push((formula.clone(), present));
            if !present {
                let issue = ValidationIssue::MissingContradictory(formula.clone());
                if strict_mode {
                    report.errors.push(issue);
                } else {
                    report.warnings.push(issue);
                }
            }
        }
        for (a, b) in self.contrariness.pairs() {
            if a == b {
                report
                    .warnings
                    .push(ValidationIssue::SelfContrary(a.clone()));
            }
        }
        report
    }
}

impl PartialEq for ArgumentationTheory {
    /// Presentation equality: identical language, contrariness, knowledge
    /// base, and rule lists including names and order.
    fn eq(&self, other: &Self) -> bool {
        fn rules_eq(a: &[Rule], b: &[Rule]) -> bool {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y && x.name == y.name)
        }
        self.language == other.language
            && self.contrariness == other.contrariness
            && self.kb == other.kb
            && rules_eq(&self.strict, &other.strict)
            && rules_eq(&self.defeasible, &other.defeasible)
    }
}

impl Eq for ArgumentationTheory {}

/// A finding from [`ArgumentationTheory::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    MissingContradictory(Formula),
    SelfContrary(Formula),
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::MissingContradictory(formula) => {
                write!(f, "formula {formula} has no contradictory")
            }
            ValidationIssue::SelfContrary(formula) => {
                write!(f, "formula {formula} is declared contrary to itself")
            }
        }
    }
}

/// Per-formula contradictory status plus echoed disjointness checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// For each formula of the language, whether a contradictory exists.
    pub contradictories: Vec<(Formula, bool)>,
    pub kb_disjoint: bool,
    pub rule_kinds_disjoint: bool,
    pub errors: Vec<ValidationIssue>,
    pub warnings: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Rejected theory description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryError {
    /// A rule was declared with no premises.
    EmptyPremises { rule: String },
    /// The same premises/conclusion shape appears as both strict and defeasible.
    DuplicateRule { rule: String },
    /// A rule name is used twice, or one shape is declared under two names.
    DuplicateName { name: String },
    /// A formula appears both as an axiom and as an ordinary premise.
    OverlappingKb { formula: Formula },
    /// A mentioned formula is not a member of the language.
    UnknownFormula { formula: Formula },
}

impl fmt::Display for TheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryError::EmptyPremises { rule } => {
                write!(f, "rule {rule} has an empty premise list")
            }
            TheoryError::DuplicateRule { rule } => {
                write!(f, "rule {rule} is declared both strict and defeasible")
            }
            TheoryError::DuplicateName { name } => {
                write!(f, "conflicting declarations for rule name {name}")
            }
            TheoryError::OverlappingKb { formula } => {
                write!(
                    f,
                    "formula {formula} is both an axiom and an ordinary premise"
                )
            }
            TheoryError::UnknownFormula { formula } => {
                write!(f, "formula {formula} is not in the language")
            }
        }
    }
}

impl std::error::Error for TheoryError {}
