//! Fixpoint closure, the entailment relation, and the minimality test.

use std::collections::BTreeSet;
use std::fmt;

use crate::argument::{Argument, ArgumentDescription};
use crate::classify;
use crate::construction;
use crate::formula::Formula;
use crate::theory::{ArgumentationTheory, Rule};

/// One rule firing during closure computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Firing {
    pub rule: Rule,
    /// 1-based fixpoint round in which the rule fired.
    pub round: usize,
}

/// The least superset of the base closed under the given rules, together
/// with the firings that produced it. Replaying the trace from the base
/// reproduces the closed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub closed: BTreeSet<Formula>,
    pub trace: Vec<Firing>,
}

/// Iterates rule firing to a fixpoint. Rules fire in sorted order within
/// each round; a rule fires only when its premises are available and its
/// conclusion is new. The closed set is independent of firing order.
pub fn closure(base: &BTreeSet<Formula>, rules: &BTreeSet<Rule>) -> ClosureResult {
    let mut closed = base.clone();
    let mut trace = Vec::new();
    let mut round = 0;
    loop {
        round += 1;
        let mut fired = false;
        for rule in rules {
            if closed.contains(rule.conclusion()) {
                continue;
            }
            if rule.premises().iter().all(|p| closed.contains(p)) {
                closed.insert(rule.conclusion().clone());
                trace.push(Firing {
                    rule: rule.clone(),
                    round,
                });
                fired = true;
            }
        }
        if !fired {
            break;
        }
    }
    ClosureResult { closed, trace }
}

/// Whether `goal` is inferred from `base` under `rules`.
pub fn entails(base: &BTreeSet<Formula>, rules: &BTreeSet<Rule>, goal: &Formula) -> bool {
    base.contains(goal) || closure(base, rules).closed.contains(goal)
}

/// The outcome of the minimality test, with a violating proper subset on
/// each failing side. Witnesses are greedily minimized: no element can be
/// removed from them while preserving the entailment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    /// A proper subset of the grounds that still entails the conclusion.
    pub ground_witness: Option<BTreeSet<Formula>>,
    /// A proper subset of the rules under which the grounds still entail
    /// the conclusion.
    pub rule_witness: Option<BTreeSet<Rule>>,
}

/// Decides whether a triple is minimal: no proper subset of its grounds
/// entails the conclusion under its rules, and no proper subset of its rules
/// lets the grounds entail the conclusion.
///
/// Only single-element removals are probed. Closure is monotone, so any
/// violating proper subset extends to one obtained by removing a single
/// element, and the two probes are decisive.
pub fn is_minimal(triple: &ArgumentDescription) -> MinimalityVerdict {
    let grounds = triple.grounds();
    let rules = triple.rules();
    let goal = triple.conclusion();

    let mut ground_witness = None;
    for dropped in grounds {
        let mut reduced: BTreeSet<Formula> = grounds.clone();
        reduced.remove(dropped);
        if entails(&reduced, rules, goal) {
            shrink(&mut reduced, |candidate| entails(candidate, rules, goal));
            ground_witness = Some(reduced);
            break;
        }
    }

    let mut rule_witness = None;
    for dropped in rules {
        let mut reduced: BTreeSet<Rule> = rules.clone();
        reduced.remove(dropped);
        if entails(grounds, &reduced, goal) {
            shrink(&mut reduced, |candidate| entails(grounds, candidate, goal));
            rule_witness = Some(reduced);
            break;
        }
    }

    MinimalityVerdict {
        minimal: ground_witness.is_none() && rule_witness.is_none(),
        ground_witness,
        rule_witness,
    }
}

/// Greedily removes elements while the predicate stays true.
fn shrink<T: Clone + Ord>(set: &mut BTreeSet<T>, keep: impl Fn(&BTreeSet<T>) -> bool) {
    let elements: Vec<T> = set.iter().cloned().collect();
    for element in elements {
        set.remove(&element);
        if !keep(set) {
            set.insert(element);
        }
    }
}

/// A regular argument that failed the minimality test: a counterexample to
/// the regular-iff-minimal equivalence, surfaced instead of being dropped.
#[derive(Clone, Debug)]
pub struct PropertyViolation {
    pub argument: Argument,
    pub verdict: MinimalityVerdict,
}

impl fmt::Display for PropertyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "regular argument {} fails the minimality test ({:?})",
            self.argument, self.verdict
        )
    }
}

impl std::error::Error for PropertyViolation {}

/// All minimal arguments for a conclusion: the regular arguments concluding
/// it, each re-verified with [`is_minimal`]. A regular argument that fails
/// the verification is reported as a [`PropertyViolation`].
pub fn minimal_arguments_for(
    theory: &ArgumentationTheory,
    conclusion: &Formula,
) -> Result<Vec<Argument>, PropertyViolation> {
    let mut out = Vec::new();
    for arg in construction::enumerate_regular(theory) {
        if arg.conclusion() != conclusion {
            continue;
        }
        debug_assert!(classify::classify(&arg).regular);
        let verdict = is_minimal(&arg.description());
        if !verdict.minimal {
            return Err(PropertyViolation {
                argument: arg,
                verdict,
            });
        }
        out.push(arg);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example_one, fm, fms, loop_theory as cyclic_theory, minimality_theory};

    fn rules_named(theory: &ArgumentationTheory, names: &[&str]) -> BTreeSet<Rule> {
        names
            .iter()
            .map(|n| theory.rule_named(n).unwrap().clone())
            .collect()
    }

    #[test]
    fn closure_of_the_example_grounds() {
        let theory = example_one();
        let result = closure(&fms(&["p", "q"]), &theory.rule_set());
        assert_eq!(result.closed, fms(&["p", "q", "r", "s"]));
        let fired: Vec<_> = result
            .trace
            .iter()
            .map(|f| (f.rule.name().unwrap().to_string(), f.round))
            .collect();
        assert_eq!(fired, [("r1".to_string(), 1), ("r3".to_string(), 1)]);
    }

    #[test]
    fn closure_of_the_empty_set_is_empty() {
        let theory = example_one();
        let result = closure(&BTreeSet::new(), &theory.rule_set());
        assert!(result.closed.is_empty());
        assert!(result.trace.is_empty());
    }

    #[test]
    fn closure_saturates_the_cycle() {
        let theory = cyclic_theory();
        let result = closure(&fms(&["a"]), &theory.rule_set());
        assert_eq!(result.closed, fms(&["a", "b", "c"]));
    }

    #[test]
    fn replaying_the_trace_reproduces_the_closed_set() {
        for (theory, base) in [
            (example_one(), fms(&["p", "q", "u"])),
            (cyclic_theory(), fms(&["a"])),
            (minimality_theory(), fms(&["d"])),
        ] {
            let result = closure(&base, &theory.rule_set());
            let mut replay = base;
            for firing in &result.trace {
                assert!(firing.rule.premises().iter().all(|p| replay.contains(p)));
                replay.insert(firing.rule.conclusion().clone());
            }
            assert_eq!(replay, result.closed);
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let theory = minimality_theory();
        let rules = theory.rule_set();
        let once = closure(&fms(&["d"]), &rules).closed;
        assert_eq!(closure(&once, &rules).closed, once);
    }

    #[test]
    fn entailment_matches_the_minimality_example() {
        let theory = minimality_theory();
        let all = rules_named(&theory, &["r1", "r2", "r3"]);
        let reduced = rules_named(&theory, &["r2", "r3"]);
        assert!(entails(&fms(&["d"]), &all, &fm("a")));
        assert!(!entails(&fms(&["d"]), &reduced, &fm("a")));
        assert!(entails(&fms(&["b"]), &reduced, &fm("a")));
        assert!(!entails(&BTreeSet::new(), &all, &fm("a")));
    }

    #[test]
    fn ground_supersets_are_not_minimal() {
        let theory = minimality_theory();
        let triple = ArgumentDescription::new(
            fms(&["b", "d"]),
            rules_named(&theory, &["r1", "r2", "r3"]),
            fm("a"),
        );
        let verdict = is_minimal(&triple);
        assert!(!verdict.minimal);
        assert_eq!(verdict.ground_witness, Some(fms(&["d"])));
    }

    #[test]
    fn the_two_rival_derivations_are_both_minimal() {
        let theory = minimality_theory();
        let b = ArgumentDescription::new(
            fms(&["d"]),
            rules_named(&theory, &["r1", "r2", "r3"]),
            fm("a"),
        );
        let c = ArgumentDescription::new(fms(&["b"]), rules_named(&theory, &["r2", "r3"]), fm("a"));
        assert!(is_minimal(&b).minimal);
        assert!(is_minimal(&c).minimal);
    }

    #[test]
    fn same_conclusion_chains_are_both_minimal() {
        let theory = crate::testutil::chain_theory();
        let h = ArgumentDescription::new(fms(&["p"]), rules_named(&theory, &["r1", "r2"]), fm("r"));
        let i = ArgumentDescription::new(fms(&["q"]), rules_named(&theory, &["r2"]), fm("r"));
        assert!(is_minimal(&h).minimal);
        assert!(is_minimal(&i).minimal);
    }

    #[test]
    fn the_loop_triple_shrinks_to_an_empty_rule_witness() {
        let theory = cyclic_theory();
        let triple = ArgumentDescription::new(
            fms(&["a"]),
            rules_named(&theory, &["r1", "r2", "r3"]),
            fm("a"),
        );
        let verdict = is_minimal(&triple);
        assert!(!verdict.minimal);
        assert!(verdict.ground_witness.is_none());
        assert_eq!(verdict.rule_witness, Some(BTreeSet::new()));
    }

    #[test]
    fn witnesses_entail_the_conclusion() {
        let theory = minimality_theory();
        let triple = ArgumentDescription::new(
            fms(&["b", "d"]),
            rules_named(&theory, &["r1", "r2", "r3"]),
            fm("a"),
        );
        let verdict = is_minimal(&triple);
        if let Some(witness) = &verdict.ground_witness {
            assert!(witness.is_subset(triple.grounds()) && witness != triple.grounds());
            assert!(entails(witness, triple.rules(), triple.conclusion()));
        }
        if let Some(witness) = &verdict.rule_witness {
            assert!(witness.is_subset(triple.rules()) && witness != triple.rules());
            assert!(entails(triple.grounds(), witness, triple.conclusion()));
        }
        assert!(verdict.ground_witness.is_some());
    }

    #[test]
    fn minimal_arguments_for_the_example_conclusion() {
        let theory = example_one();
        let minimal = minimal_arguments_for(&theory, &fm("s")).unwrap();
        let forms: Vec<String> = minimal.iter().map(|a| a.canonical_form()).collect();
        assert_eq!(forms, ["[[p,q => r] => s]", "[[t,u => r] => s]"]);
    }

    #[test]
    fn only_the_leaf_is_minimal_in_the_loop_theory() {
        let theory = cyclic_theory();
        let minimal = minimal_arguments_for(&theory, &fm("a")).unwrap();
        let forms: Vec<String> = minimal.iter().map(|a| a.canonical_form()).collect();
        assert_eq!(forms, ["a"]);
    }

    #[test]
    fn no_minimal_arguments_for_an_underivable_formula() {
        let theory = example_one();
        assert!(minimal_arguments_for(&theory, &fm("-v"))
            .unwrap()
            .is_empty());
    }
}
