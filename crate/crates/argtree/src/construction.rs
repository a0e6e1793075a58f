//! Argument enumeration and triple realizability.
//!
//! Arguments are built bottom-up from the knowledge base, indexed by
//! conclusion, with each round combining rules with previously built
//! sub-arguments. Exhaustive enumeration requires an acyclic rule graph;
//! cyclic theories are explored through a node-count budget or restricted
//! to regular arguments, both of which keep the search finite.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::argument::{Argument, ArgumentDescription};
use crate::classify::is_regular;
use crate::formula::Formula;
use crate::inference::entails;
use crate::theory::{ArgumentationTheory, Rule};

/// Node budget used by the command line when none is given. Every worked
/// fixture fits well inside ten nodes.
pub const DEFAULT_BUDGET: u64 = 64;

/// True when the graph with an edge from each rule premise to the rule's
/// conclusion has no directed cycle. Acyclic theories have finitely many
/// arguments.
pub fn is_acyclic(theory: &ArgumentationTheory) -> bool {
    let mut edges: BTreeMap<&Formula, BTreeSet<&Formula>> = BTreeMap::new();
    for rule in theory.rules() {
        for premise in rule.premises() {
            edges.entry(premise).or_default().insert(rule.conclusion());
        }
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Visiting,
        Done,
    }
    let mut marks: HashMap<&Formula, Mark> = HashMap::new();
    let nodes: Vec<&Formula> = edges.keys().copied().collect();
    for start in nodes {
        if marks.contains_key(start) {
            continue;
        }
        // Iterative DFS; a back edge to a Visiting node closes a cycle.
        let mut stack = vec![(start, false)];
        while let Some((node, expanded)) = stack.pop() {
            if expanded {
                marks.insert(node, Mark::Done);
                continue;
            }
            match marks.get(node) {
                Some(Mark::Visiting) => return false,
                Some(Mark::Done) => continue,
                None => {}
            }
            marks.insert(node, Mark::Visiting);
            stack.push((node, true));
            if let Some(next) = edges.get(node) {
                for succ in next {
                    match marks.get(succ) {
                        Some(Mark::Visiting) => return false,
                        Some(Mark::Done) => {}
                        None => stack.push((succ, false)),
                    }
                }
            }
        }
    }
    true
}

/// Bottom-up saturation. `size_cap` prunes candidates by node count before
/// construction; `keep` filters the arguments that participate further.
/// Both filters are closed under sub-arguments, so building only from kept
/// arguments loses nothing. Results are sorted by (node count, canonical
/// form).
fn saturate(
    theory: &ArgumentationTheory,
    size_cap: Option<u64>,
    keep: impl Fn(&Argument) -> bool,
) -> Vec<Argument> {
    let mut all: HashSet<Argument> = HashSet::new();
    // Arguments by conclusion, tagged with the round that produced them.
    let mut index: BTreeMap<Formula, Vec<(Argument, usize)>> = BTreeMap::new();

    let mut frontier: Vec<Argument> = Vec::new();
    for formula in theory.kb().iter() {
        let leaf = Argument::leaf_unchecked(formula.clone());
        if size_cap.is_some_and(|cap| leaf.node_count() > cap) || !keep(&leaf) {
            continue;
        }
        all.insert(leaf.clone());
        index
            .entry(formula.clone())
            .or_default()
            .push((leaf.clone(), 0));
        frontier.push(leaf);
    }

    let mut round = 0;
    while !frontier.is_empty() {
        round += 1;
        let mut fresh: Vec<Argument> = Vec::new();
        for rule in theory.rules() {
            let slots: Option<Vec<&[(Argument, usize)]>> = rule
                .premises()
                .iter()
                .map(|p| index.get(p).map(Vec::as_slice))
                .collect();
            let Some(slots) = slots else { continue };
            combine(rule, &slots, round - 1, size_cap, &mut |candidate| {
                if keep(&candidate) && all.insert(candidate.clone()) {
                    fresh.push(candidate);
                }
            });
        }
        for arg in &fresh {
            index
                .entry(arg.conclusion().clone())
                .or_default()
                .push((arg.clone(), round));
        }
        frontier = fresh;
    }

    let mut out: Vec<Argument> = all.into_iter().collect();
    out.sort();
    out
}

/// Feeds every child combination for `rule` to `emit`, taking one argument
/// per premise slot. At least one child must come from `last_round`, so a
/// combination is produced exactly once across rounds.
fn combine(
    rule: &Rule,
    slots: &[&[(Argument, usize)]],
    last_round: usize,
    size_cap: Option<u64>,
    emit: &mut impl FnMut(Argument),
) {
    if slots.iter().any(|s| s.is_empty()) {
        return;
    }
    let mut picks = vec![0usize; slots.len()];
    'outer: loop {
        let chosen: Vec<&(Argument, usize)> =
            picks.iter().zip(slots).map(|(&i, s)| &s[i]).collect();
        if chosen.iter().any(|(_, round)| *round == last_round) {
            let size = 1u64.saturating_add(
                chosen
                    .iter()
                    .fold(0u64, |acc, (arg, _)| acc.saturating_add(arg.node_count())),
            );
            if size_cap.is_none_or(|cap| size <= cap) {
                let children: Vec<Argument> = chosen.iter().map(|(arg, _)| arg.clone()).collect();
                emit(Argument::apply_unchecked(rule.clone(), children));
            }
        }
        for slot in (0..picks.len()).rev() {
            picks[slot] += 1;
            if picks[slot] < slots[slot].len() {
                continue 'outer;
            }
            picks[slot] = 0;
        }
        break;
    }
}

/// The theory's rules have a cycle, so the argument set is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTheory;

impl fmt::Display for CyclicTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the rule graph is cyclic; exhaustive enumeration would not terminate"
        )
    }
}

impl std::error::Error for CyclicTheory {}

/// Every argument of an acyclic theory, sorted by (node count, canonical
/// form).
pub fn enumerate_all(theory: &ArgumentationTheory) -> Result<Vec<Argument>, CyclicTheory> {
    if !is_acyclic(theory) {
        return Err(CyclicTheory);
    }
    Ok(saturate(theory, None, |_| true))
}

/// Every argument with at most `budget` nodes. Monotone in the budget, and
/// equal to [`enumerate_all`] once the budget covers the largest argument of
/// an acyclic theory.
pub fn enumerate_bounded(theory: &ArgumentationTheory, budget: u64) -> Vec<Argument> {
    saturate(theory, Some(budget), |_| true)
}

/// Every regular argument: no two distinct sub-arguments share a conclusion.
/// Terminates on cyclic theories, since a repeated conclusion on any path
/// would violate regularity.
pub fn enumerate_regular(theory: &ArgumentationTheory) -> Vec<Argument> {
    saturate(theory, None, is_regular)
}

/// How a realizability query was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realizability {
    /// At least one argument of the theory has exactly this description.
    Realizable { witnesses: Vec<Argument> },
    /// No argument has this description; `exact` records that the verdict
    /// is definitive (a necessary condition failed, or an acyclic theory was
    /// searched exhaustively).
    NotRealizable { exact: bool },
    /// Not found within the budget of a cyclic theory; no claim beyond it.
    Unknown,
}

/// Verdict plus the necessary-condition violations when refuted locally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizabilityResult {
    pub verdict: Realizability,
    pub refutation: Vec<ConditionViolation>,
}

/// A necessary condition on argument descriptions that the queried triple
/// fails. Every argument's triple satisfies all of these, so any violation
/// refutes realizability outright.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionViolation {
    /// A rule-free triple must be ({p}, {}, p) with p in the knowledge base.
    LeafShape,
    /// A ground is not a premise of any rule in the triple.
    UnusedGround { ground: Formula },
    /// A ground is outside the knowledge base, so it cannot be a leaf.
    GroundOutsideKb { ground: Formula },
    /// A rule premise is neither a ground nor another rule's conclusion, so
    /// the rule could never fire in a derivation from these grounds.
    UnusedRulePremise { rule: Rule, premise: Formula },
    /// A rule's conclusion feeds nothing: it is not the triple's conclusion
    /// and no rule in the triple consumes it.
    UnusedRuleConclusion { rule: Rule },
    /// The conclusion is not the conclusion of any rule in the triple.
    ConclusionNotRuleHead,
    /// The conclusion is not in the closure of the grounds under the rules.
    ConclusionNotDerivable,
    /// The triple mentions a rule the theory does not contain.
    RuleOutsideTheory { rule: Rule },
}

impl ConditionViolation {
    /// Part of the unused-rule family: some listed rule cannot take part in
    /// a derivation of the conclusion.
    pub fn is_unused_rule(&self) -> bool {
        matches!(
            self,
            ConditionViolation::UnusedRulePremise { .. }
                | ConditionViolation::UnusedRuleConclusion { .. }
        )
    }

    /// Part of the unused-ground family: some ground cannot take part.
    pub fn is_unused_ground(&self) -> bool {
        matches!(
            self,
            ConditionViolation::UnusedGround { .. } | ConditionViolation::GroundOutsideKb { .. }
        )
    }
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionViolation::LeafShape => {
                write!(
                    f,
                    "a rule-free triple must be ({{p}}, {{}}, p) with p in the knowledge base"
                )
            }
            ConditionViolation::UnusedGround { ground } => {
                write!(f, "ground {ground} is not a premise of any listed rule")
            }
            ConditionViolation::GroundOutsideKb { ground } => {
                write!(f, "ground {ground} is not in the knowledge base")
            }
            ConditionViolation::UnusedRulePremise { rule, premise } => write!(
                f,
                "premise {premise} of rule {} is neither a ground nor a listed rule's conclusion",
                rule.label()
            ),
            ConditionViolation::UnusedRuleConclusion { rule } => write!(
                f,
                "rule {} concludes neither the triple's conclusion nor any listed rule's premise",
                rule.label()
            ),
            ConditionViolation::ConclusionNotRuleHead => {
                write!(f, "the conclusion is not the conclusion of any listed rule")
            }
            ConditionViolation::ConclusionNotDerivable => {
                write!(
                    f,
                    "the conclusion is not in the closure of the grounds under the listed rules"
                )
            }
            ConditionViolation::RuleOutsideTheory { rule } => {
                write!(f, "rule {} is not part of the theory", rule.label())
            }
        }
    }
}

/// Collects every necessary-condition violation for the triple.
fn refute(theory: &ArgumentationTheory, triple: &ArgumentDescription) -> Vec<ConditionViolation> {
    let grounds = triple.grounds();
    let rules = triple.rules();
    let goal = triple.conclusion();
    let mut violations = Vec::new();

    for rule in rules {
        if theory.find_rule(rule).is_none() {
            violations.push(ConditionViolation::RuleOutsideTheory { rule: rule.clone() });
        }
    }

    if rules.is_empty() {
        let leaf_shaped =
            grounds.len() == 1 && grounds.contains(goal) && theory.kb().contains(goal);
        if !leaf_shaped {
            violations.push(ConditionViolation::LeafShape);
        }
        return violations;
    }

    let consumed: BTreeSet<&Formula> = rules.iter().flat_map(|r| r.premises()).collect();
    let produced: BTreeSet<&Formula> = rules.iter().map(|r| r.conclusion()).collect();

    for ground in grounds {
        if !theory.kb().contains(ground) {
            violations.push(ConditionViolation::GroundOutsideKb {
                ground: ground.clone(),
            });
        }
        if !consumed.contains(ground) {
            violations.push(ConditionViolation::UnusedGround {
                ground: ground.clone(),
            });
        }
    }

    for rule in rules {
        let mut seen: BTreeSet<&Formula> = BTreeSet::new();
        for premise in rule.premises() {
            if !seen.insert(premise) {
                continue;
            }
            if !grounds.contains(premise) && !produced.contains(premise) {
                violations.push(ConditionViolation::UnusedRulePremise {
                    rule: rule.clone(),
                    premise: premise.clone(),
                });
            }
        }
        if rule.conclusion() != goal && !consumed.contains(rule.conclusion()) {
            violations.push(ConditionViolation::UnusedRuleConclusion { rule: rule.clone() });
        }
    }

    if !produced.contains(goal) {
        violations.push(ConditionViolation::ConclusionNotRuleHead);
    }
    if !entails(grounds, rules, goal) {
        violations.push(ConditionViolation::ConclusionNotDerivable);
    }
    violations
}

/// Decides whether some argument of the theory has exactly this triple as
/// its description.
///
/// Necessary-condition refutation runs first and is definitive. Otherwise
/// the triple is searched for: exhaustively when the theory is acyclic, and
/// within `budget` nodes when it is cyclic, where absence only justifies
/// [`Realizability::Unknown`].
pub fn triple_realizable(
    theory: &ArgumentationTheory,
    triple: &ArgumentDescription,
    budget: u64,
) -> RealizabilityResult {
    let refutation = refute(theory, triple);
    if !refutation.is_empty() {
        return RealizabilityResult {
            verdict: Realizability::NotRealizable { exact: true },
            refutation,
        };
    }

    let acyclic = is_acyclic(theory);
    let candidates = if acyclic {
        saturate(theory, None, |_| true)
    } else {
        enumerate_bounded(theory, budget)
    };
    let witnesses: Vec<Argument> = candidates
        .into_iter()
        .filter(|arg| &arg.description() == triple)
        .collect();

    let verdict = if !witnesses.is_empty() {
        Realizability::Realizable { witnesses }
    } else if acyclic {
        Realizability::NotRealizable { exact: true }
    } else {
        Realizability::Unknown
    };
    RealizabilityResult {
        verdict,
        refutation: Vec::new(),
    }
}
