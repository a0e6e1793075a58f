//! Brute-force oracles, random theory generation, and property campaigns.
//!
//! The checks here re-derive results along independent routes: subset
//! enumeration instead of single-element probing, and a clause-by-clause
//! walk instead of the construction engine. Campaign runs repeat them over
//! deterministic random theories and aggregate one report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::argument::{Argument, ArgumentDescription};
use crate::classify::classify;
use crate::construction::enumerate_bounded;
use crate::dsl::unparse_theory;
use crate::formula::Formula;
use crate::inference::{entails, is_minimal, MinimalityVerdict};
use crate::theory::{ArgumentationTheory, RuleDecl, RuleKind, TheoryDescription};

/// The machine-checked properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyId {
    /// Every ground and rule of an argument takes part in its derivation.
    Relevance,
    /// An argument is regular exactly when its triple is minimal.
    RegularMinimalEquivalence,
    /// No two distinct arguments share a triple when one of them is minimal.
    UniqueDescription,
    /// The fast minimality test agrees with subset enumeration.
    MinimalityOracleAgreement,
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PropertyId::Relevance => "relevance",
            PropertyId::RegularMinimalEquivalence => "regular-minimal-equivalence",
            PropertyId::UniqueDescription => "unique-description",
            PropertyId::MinimalityOracleAgreement => "minimality-oracle-agreement",
        };
        write!(f, "{name}")
    }
}

/// One finding: the property, the subject (argument or triple), a witness
/// description, and the theory it happened in, with a greedily minimized
/// variant that still exhibits the problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyFinding {
    pub property: PropertyId,
    pub seed: Option<u64>,
    pub subject: String,
    pub detail: String,
    pub theory: Option<String>,
    pub minimized_theory: Option<String>,
}

/// Aggregated outcome of one or more property checks. `violations` empty
/// means every check passed; `info` holds expected oddities such as triple
/// collisions among non-minimal arguments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub checked: BTreeMap<PropertyId, u64>,
    pub violations: Vec<PropertyFinding>,
    pub info: Vec<PropertyFinding>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&mut self, property: PropertyId, n: u64) {
        *self.checked.entry(property).or_insert(0) += n;
    }

    pub fn merge(&mut self, other: PropertyReport) {
        for (property, n) in other.checked {
            *self.checked.entry(property).or_insert(0) += n;
        }
        self.violations.extend(other.violations);
        self.info.extend(other.info);
    }
}

/// Size guard for [`naive_is_minimal`].
pub const NAIVE_SIZE_LIMIT: usize = 20;

/// The triple is too large for subset enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TooLarge {
    pub size: usize,
    pub limit: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triple has {} grounds and rules, above the enumeration limit {}",
            self.size, self.limit
        )
    }
}

impl std::error::Error for TooLarge {}

/// Literal minimality: enumerates every proper subset of the grounds and of
/// the rules, largest first. Agrees with the probing test on verdicts; the
/// reported witnesses are the largest violating subsets.
pub fn naive_is_minimal(triple: &ArgumentDescription) -> Result<MinimalityVerdict, TooLarge> {
    let size = triple.grounds().len() + triple.rules().len();
    if size > NAIVE_SIZE_LIMIT {
        return Err(TooLarge {
            size,
            limit: NAIVE_SIZE_LIMIT,
        });
    }
    let goal = triple.conclusion();
    let ground_witness = find_largest_subset(triple.grounds(), |candidate| {
        entails(candidate, triple.rules(), goal)
    });
    let rule_witness = find_largest_subset(triple.rules(), |candidate| {
        entails(triple.grounds(), candidate, goal)
    });
    Ok(MinimalityVerdict {
        minimal: ground_witness.is_none() && rule_witness.is_none(),
        ground_witness,
        rule_witness,
    })
}

/// The first satisfying proper subset, scanning sizes from largest to
/// smallest and lexicographically within a size.
fn find_largest_subset<T: Clone + Ord>(
    set: &BTreeSet<T>,
    satisfies: impl Fn(&BTreeSet<T>) -> bool,
) -> Option<BTreeSet<T>> {
    let items: Vec<T> = set.iter().cloned().collect();
    for size in (0..items.len()).rev() {
        let mut current = Vec::with_capacity(size);
        if let Some(found) = subsets_of_size(&items, size, 0, &mut current, &satisfies) {
            return Some(found);
        }
    }
    None
}

fn subsets_of_size<T: Clone + Ord>(
    items: &[T],
    size: usize,
    start: usize,
    current: &mut Vec<T>,
    satisfies: &impl Fn(&BTreeSet<T>) -> bool,
) -> Option<BTreeSet<T>> {
    if current.len() == size {
        let candidate: BTreeSet<T> = current.iter().cloned().collect();
        return satisfies(&candidate).then_some(candidate);
    }
    let needed = size - current.len();
    for i in start..items.len() {
        if items.len() - i < needed {
            break;
        }
        current.push(items[i].clone());
        if let Some(found) = subsets_of_size(items, size, i + 1, current, satisfies) {
            return Some(found);
        }
        current.pop();
    }
    None
}

/// Re-checks an argument clause by clause, independently of the construction
/// engine: leaves must be knowledge-base formulas, every application must
/// use a rule of the proper kind with one child per premise, and child `i`
/// must conclude premise `i`.
pub fn check_wellformed(theory: &ArgumentationTheory, arg: &Argument) -> Result<(), String> {
    match arg.top_rule() {
        None => {
            let formula = arg.conclusion();
            if theory.kb().contains(formula) {
                Ok(())
            } else {
                Err(format!("leaf {formula} is not in the knowledge base"))
            }
        }
        Some(rule) => {
            let pool = match rule.kind() {
                RuleKind::Strict => theory.strict_rules(),
                RuleKind::Defeasible => theory.defeasible_rules(),
            };
            if !pool.contains(rule) {
                return Err(format!("rule {} is not in the theory", rule.text()));
            }
            if arg.children().len() != rule.premises().len() {
                return Err(format!(
                    "rule {} applied to {} sub-arguments",
                    rule.text(),
                    arg.children().len()
                ));
            }
            for (child, premise) in arg.children().iter().zip(rule.premises()) {
                if child.conclusion() != premise {
                    return Err(format!(
                        "child concluding {} fills premise {} of rule {}",
                        child.conclusion(),
                        premise,
                        rule.text()
                    ));
                }
                check_wellformed(theory, child)?;
            }
            Ok(())
        }
    }
}

/// Checks the relevance property on one argument: either it is a bare
/// knowledge-base fact described by ({p}, {}, p), or every ground has a leaf
/// sub-argument and backs some rule premise, and every rule is the top rule
/// of some sub-argument.
pub fn check_relevance(arg: &Argument) -> PropertyReport {
    let mut report = PropertyReport::default();
    report.count(PropertyId::Relevance, 1);
    let mut problems: Vec<String> = Vec::new();

    let description = arg.description();
    if arg.top_rule().is_none() {
        let expected = ArgumentDescription::new(
            [arg.conclusion().clone()].into(),
            BTreeSet::new(),
            arg.conclusion().clone(),
        );
        if description != expected {
            problems.push(format!("leaf described by {description}"));
        }
    } else {
        let subs = arg.subarguments();
        for ground in description.grounds() {
            let leaf_present = subs
                .iter()
                .any(|s| s.top_rule().is_none() && s.conclusion() == ground);
            if !leaf_present {
                problems.push(format!("ground {ground} has no leaf sub-argument"));
            }
            let backs_a_premise = description
                .rules()
                .iter()
                .any(|r| r.premises().contains(ground));
            if !backs_a_premise {
                problems.push(format!("ground {ground} backs no rule premise"));
            }
        }
        for rule in description.rules() {
            let applied = subs.iter().any(|s| s.top_rule() == Some(rule));
            if !applied {
                problems.push(format!(
                    "rule {} is never the top rule of a sub-argument",
                    rule.label()
                ));
            }
        }
    }

    if !problems.is_empty() {
        report.violations.push(PropertyFinding {
            property: PropertyId::Relevance,
            seed: None,
            subject: arg.canonical_form(),
            detail: problems.join("; "),
            theory: None,
            minimized_theory: None,
        });
    }
    report
}

/// Checks regular-iff-minimal over every argument within the budget.
pub fn check_regular_minimal_equivalence(
    theory: &ArgumentationTheory,
    budget: u64,
) -> PropertyReport {
    check_regular_minimal_equivalence_with(theory, budget, is_minimal)
}

/// Same check against an arbitrary minimality decision, for differential
/// and mutation testing of the harness itself.
pub fn check_regular_minimal_equivalence_with(
    theory: &ArgumentationTheory,
    budget: u64,
    minimality: impl Fn(&ArgumentDescription) -> MinimalityVerdict,
) -> PropertyReport {
    let mut report = PropertyReport::default();
    for arg in enumerate_bounded(theory, budget) {
        report.count(PropertyId::RegularMinimalEquivalence, 1);
        let regular = classify(&arg).regular;
        let verdict = minimality(&arg.description());
        if regular != verdict.minimal {
            let violates = |candidate: &ArgumentationTheory| {
                enumerate_bounded(candidate, budget)
                    .iter()
                    .any(|a| classify(a).regular != minimality(&a.description()).minimal)
            };
            report.violations.push(PropertyFinding {
                property: PropertyId::RegularMinimalEquivalence,
                seed: None,
                subject: arg.canonical_form(),
                detail: format!(
                    "regular={regular} but minimal={} (ground witness {:?}, rule witness {:?})",
                    verdict.minimal, verdict.ground_witness, verdict.rule_witness
                ),
                theory: Some(unparse_theory(theory)),
                minimized_theory: Some(unparse_theory(&shrink_theory(theory, violates))),
            });
        }
    }
    report
}

/// Groups arguments by triple and requires every group that contains a
/// minimal argument to be a singleton. Collisions among non-minimal
/// arguments are recorded as informational.
pub fn check_unique_description(theory: &ArgumentationTheory, budget: u64) -> PropertyReport {
    let mut report = PropertyReport::default();
    let mut groups: BTreeMap<ArgumentDescription, Vec<Argument>> = BTreeMap::new();
    for arg in enumerate_bounded(theory, budget) {
        groups.entry(arg.description()).or_default().push(arg);
    }
    report.count(PropertyId::UniqueDescription, groups.len() as u64);
    for (triple, group) in groups {
        if group.len() < 2 {
            continue;
        }
        let members: Vec<String> = group.iter().map(|a| a.canonical_form()).collect();
        let detail = format!("shared by {}", members.join(" and "));
        if is_minimal(&triple).minimal {
            let violates = |candidate: &ArgumentationTheory| {
                let mut seen: BTreeMap<ArgumentDescription, u64> = BTreeMap::new();
                for arg in enumerate_bounded(candidate, budget) {
                    *seen.entry(arg.description()).or_insert(0) += 1;
                }
                seen.iter().any(|(t, n)| *n >= 2 && is_minimal(t).minimal)
            };
            report.violations.push(PropertyFinding {
                property: PropertyId::UniqueDescription,
                seed: None,
                subject: triple.to_string(),
                detail,
                theory: Some(unparse_theory(theory)),
                minimized_theory: Some(unparse_theory(&shrink_theory(theory, violates))),
            });
        } else {
            report.info.push(PropertyFinding {
                property: PropertyId::UniqueDescription,
                seed: None,
                subject: triple.to_string(),
                detail,
                theory: None,
                minimized_theory: None,
            });
        }
    }
    report
}

/// Compares the probing minimality test against subset enumeration on every
/// distinct triple within the budget whose size permits enumeration.
pub fn check_oracle_agreement(
    theory: &ArgumentationTheory,
    budget: u64,
    size_limit: usize,
) -> PropertyReport {
    let mut report = PropertyReport::default();
    let triples: BTreeSet<ArgumentDescription> = enumerate_bounded(theory, budget)
        .iter()
        .map(Argument::description)
        .collect();
    for triple in triples {
        if triple.grounds().len() + triple.rules().len() > size_limit {
            continue;
        }
        report.count(PropertyId::MinimalityOracleAgreement, 1);
        let fast = is_minimal(&triple);
        let naive = naive_is_minimal(&triple).expect("size checked above");
        if fast.minimal != naive.minimal {
            let violates = |candidate: &ArgumentationTheory| {
                enumerate_bounded(candidate, budget)
                    .iter()
                    .map(Argument::description)
                    .filter(|t| t.grounds().len() + t.rules().len() <= size_limit)
                    .any(|t| naive_is_minimal(&t).map(|n| n.minimal) != Ok(is_minimal(&t).minimal))
            };
            report.violations.push(PropertyFinding {
                property: PropertyId::MinimalityOracleAgreement,
                seed: None,
                subject: triple.to_string(),
                detail: format!(
                    "probing says minimal={}, enumeration says minimal={}",
                    fast.minimal, naive.minimal
                ),
                theory: Some(unparse_theory(theory)),
                minimized_theory: Some(unparse_theory(&shrink_theory(theory, violates))),
            });
        }
    }
    report
}

/// Greedily removes rules and knowledge-base formulas while the predicate
/// keeps holding, ending at a local minimum.
pub fn shrink_theory(
    theory: &ArgumentationTheory,
    violates: impl Fn(&ArgumentationTheory) -> bool,
) -> ArgumentationTheory {
    let mut current = theory.clone();
    loop {
        let mut improved = false;
        let description = current.description();

        for index in 0..description.strict.len() {
            let mut candidate = description.clone();
            candidate.strict.remove(index);
            let candidate = candidate.build().expect("removal keeps the theory valid");
            if violates(&candidate) {
                current = candidate;
                improved = true;
                break;
            }
        }
        if improved {
            continue;
        }
        for index in 0..description.defeasible.len() {
            let mut candidate = description.clone();
            candidate.defeasible.remove(index);
            let candidate = candidate.build().expect("removal keeps the theory valid");
            if violates(&candidate) {
                current = candidate;
                improved = true;
                break;
            }
        }
        if improved {
            continue;
        }
        let kb: Vec<Formula> = current.kb().iter().cloned().collect();
        for formula in kb {
            let mut candidate = description.clone();
            candidate.axioms.remove(&formula);
            candidate.premises.remove(&formula);
            let candidate = candidate.build().expect("removal keeps the theory valid");
            if violates(&candidate) {
                current = candidate;
                improved = true;
                break;
            }
        }
        if !improved {
            return current;
        }
    }
}

/// Deterministic random-theory generation: identical configurations produce
/// identical theories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub num_atoms: usize,
    pub num_rules: usize,
    pub max_premises: usize,
    pub kb_size: usize,
    pub allow_cycles: bool,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            num_atoms: 8,
            num_rules: 6,
            max_premises: 3,
            kb_size: 4,
            allow_cycles: false,
        }
    }
}

/// Generates a theory over atoms `a1..aN` with auto-paired contradictories.
/// Each rule draws distinct premises and a conclusion; without cycles the
/// conclusions respect a shuffled topological order. Rule kinds and the
/// axiom/premise split are coin flips from the seeded generator.
pub fn random_theory(config: &GeneratorConfig) -> ArgumentationTheory {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.num_atoms.max(1);
    let atoms: Vec<Formula> = (1..=n)
        .map(|i| Formula::atom(format!("a{i}")).expect("generated identifier"))
        .collect();

    let mut language: BTreeSet<Formula> = atoms.iter().cloned().collect();
    let mut contrariness = Vec::new();
    for atom in &atoms {
        let neg = atom.negation();
        language.insert(neg.clone());
        contrariness.push((atom.clone(), neg.clone()));
        contrariness.push((neg, atom.clone()));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut shapes: BTreeSet<(Vec<Formula>, Formula)> = BTreeSet::new();
    let mut strict = Vec::new();
    let mut defeasible = Vec::new();
    let mut attempts = 0;
    let max_attempts = config.num_rules.saturating_mul(40);
    while strict.len() + defeasible.len() < config.num_rules && attempts < max_attempts {
        attempts += 1;
        let drawn = if config.allow_cycles {
            let m = rng.random_range(1..=config.max_premises.clamp(1, n));
            let picks = rand::seq::index::sample(&mut rng, n, m);
            let premises: Vec<Formula> = picks.iter().map(|i| atoms[i].clone()).collect();
            let conclusion = atoms[rng.random_range(0..n)].clone();
            (premises, conclusion)
        } else {
            if n < 2 {
                break;
            }
            let conclusion_pos = rng.random_range(1..n);
            let m = rng.random_range(1..=config.max_premises.clamp(1, conclusion_pos));
            let picks = rand::seq::index::sample(&mut rng, conclusion_pos, m);
            let premises: Vec<Formula> = picks.iter().map(|i| atoms[order[i]].clone()).collect();
            (premises, atoms[order[conclusion_pos]].clone())
        };
        if !shapes.insert(drawn.clone()) {
            continue;
        }
        let decl = RuleDecl::new(drawn.0, drawn.1);
        if rng.random_bool(0.5) {
            strict.push(decl);
        } else {
            defeasible.push(decl);
        }
    }

    let mut axioms = BTreeSet::new();
    let mut premises = BTreeSet::new();
    for i in rand::seq::index::sample(&mut rng, n, config.kb_size.min(n)) {
        if rng.random_bool(0.5) {
            axioms.insert(atoms[i].clone());
        } else {
            premises.insert(atoms[i].clone());
        }
    }

    TheoryDescription {
        language,
        contrariness,
        strict,
        defeasible,
        axioms,
        premises,
    }
    .build()
    .expect("generated theories satisfy every invariant")
}

/// Size guard used for the oracle cross-check inside campaigns.
pub const CAMPAIGN_ORACLE_LIMIT: usize = 12;

/// Runs every check over `count` theories generated from consecutive seeds,
/// stamping findings with the seed and aggregating a single report.
pub fn run_property_campaign(config: &GeneratorConfig, count: u64, budget: u64) -> PropertyReport {
    let mut report = PropertyReport::default();
    for offset in 0..count {
        let seed = config.seed.wrapping_add(offset);
        let theory = random_theory(&GeneratorConfig { seed, ..*config });
        report.merge(check_theory(&theory, Some(seed), budget));
    }
    report
}

/// All four checks over one theory; findings are stamped with `seed` and
/// carry the serialized theory.
pub fn check_theory(
    theory: &ArgumentationTheory,
    seed: Option<u64>,
    budget: u64,
) -> PropertyReport {
    let mut report = PropertyReport::default();
    let text = unparse_theory(theory);

    let mut relevance = PropertyReport::default();
    for arg in enumerate_bounded(theory, budget) {
        relevance.merge(check_relevance(&arg));
    }
    for finding in &mut relevance.violations {
        finding.theory = Some(text.clone());
        let violates = |candidate: &ArgumentationTheory| {
            enumerate_bounded(candidate, budget)
                .iter()
                .any(|a| !check_relevance(a).passed())
        };
        finding.minimized_theory = Some(unparse_theory(&shrink_theory(theory, violates)));
    }
    report.merge(relevance);

    report.merge(check_regular_minimal_equivalence(theory, budget));
    report.merge(check_unique_description(theory, budget));
    report.merge(check_oracle_agreement(
        theory,
        budget,
        CAMPAIGN_ORACLE_LIMIT,
    ));

    for finding in report.violations.iter_mut().chain(report.info.iter_mut()) {
        finding.seed = seed;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{enumerate_all, enumerate_bounded};
    use crate::testutil::{all_fixtures, example_one, fm, fms, loop_theory, minimality_theory};
    use crate::theory::Rule;

    fn rules_named(theory: &ArgumentationTheory, names: &[&str]) -> BTreeSet<Rule> {
        names
            .iter()
            .map(|n| theory.rule_named(n).unwrap().clone())
            .collect()
    }

    #[test]
    fn naive_rejects_the_padded_grounds() {
        let theory = minimality_theory();
        let triple = ArgumentDescription::new(
            fms(&["b", "d"]),
            rules_named(&theory, &["r1", "r2", "r3"]),
            fm("a"),
        );
        let verdict = naive_is_minimal(&triple).unwrap();
        assert!(!verdict.minimal);
        assert!(verdict.ground_witness.is_some());
    }

    #[test]
    fn naive_accepts_bare_facts() {
        let triple = ArgumentDescription::new(fms(&["p"]), BTreeSet::new(), fm("p"));
        assert!(naive_is_minimal(&triple).unwrap().minimal);
    }

    #[test]
    fn naive_guards_against_large_triples() {
        let grounds: BTreeSet<Formula> = (0..21)
            .map(|i| Formula::atom(format!("x{i}")).unwrap())
            .collect();
        let triple = ArgumentDescription::new(grounds, BTreeSet::new(), fm("x0"));
        assert_eq!(
            naive_is_minimal(&triple),
            Err(TooLarge {
                size: 21,
                limit: NAIVE_SIZE_LIMIT
            })
        );
    }

    #[test]
    fn the_two_minimality_tests_agree_on_every_fixture_triple() {
        for (name, theory) in all_fixtures() {
            for arg in enumerate_bounded(&theory, 10) {
                let triple = arg.description();
                let fast = is_minimal(&triple);
                let naive = naive_is_minimal(&triple).unwrap();
                assert_eq!(fast.minimal, naive.minimal, "{name}: {arg}");
            }
        }
    }

    #[test]
    fn naive_witnesses_are_sound() {
        let theory = minimality_theory();
        for arg in enumerate_all(&theory).unwrap() {
            let triple = arg.description();
            let verdict = naive_is_minimal(&triple).unwrap();
            if let Some(witness) = &verdict.ground_witness {
                assert!(witness.is_subset(triple.grounds()) && witness != triple.grounds());
                assert!(entails(witness, triple.rules(), triple.conclusion()));
            }
            if let Some(witness) = &verdict.rule_witness {
                assert!(witness.is_subset(triple.rules()) && witness != triple.rules());
                assert!(entails(triple.grounds(), witness, triple.conclusion()));
            }
        }
    }

    #[test]
    fn wellformedness_accepts_enumerated_arguments() {
        for (name, theory) in all_fixtures() {
            for arg in enumerate_bounded(&theory, 8) {
                assert_eq!(check_wellformed(&theory, &arg), Ok(()), "{name}: {arg}");
            }
        }
    }

    #[test]
    fn wellformedness_rejects_foreign_leaves() {
        let theory = example_one();
        let stray = Argument::leaf_unchecked(fm("r"));
        assert!(check_wellformed(&theory, &stray).is_err());
    }

    #[test]
    fn relevance_holds_across_the_fixtures() {
        for (name, theory) in all_fixtures() {
            for arg in enumerate_bounded(&theory, 10) {
                let report = check_relevance(&arg);
                assert!(report.passed(), "{name}: {arg}: {:?}", report.violations);
            }
        }
    }

    #[test]
    fn relevance_holds_for_the_loop_argument() {
        let theory = loop_theory();
        let arg = Argument::parse(&theory, "[[[a => c] => b] => a]").unwrap();
        assert!(check_relevance(&arg).passed());
    }

    #[test]
    fn equivalence_has_no_violations_on_the_fixtures() {
        for (name, theory) in all_fixtures() {
            let report = check_regular_minimal_equivalence(&theory, 10);
            assert!(report.passed(), "{name}: {:?}", report.violations);
            assert!(report.checked[&PropertyId::RegularMinimalEquivalence] > 0);
        }
    }

    #[test]
    fn a_crippled_minimality_test_is_caught_on_the_loop_fixture() {
        let ground_probes_only = |triple: &ArgumentDescription| {
            let mut ground_witness = None;
            for dropped in triple.grounds() {
                let mut reduced = triple.grounds().clone();
                reduced.remove(dropped);
                if entails(&reduced, triple.rules(), triple.conclusion()) {
                    ground_witness = Some(reduced);
                    break;
                }
            }
            MinimalityVerdict {
                minimal: ground_witness.is_none(),
                ground_witness,
                rule_witness: None,
            }
        };
        let report = check_regular_minimal_equivalence_with(&loop_theory(), 7, ground_probes_only);
        assert!(!report.passed());
        let finding = &report.violations[0];
        assert!(finding.theory.is_some());
        let minimized = finding.minimized_theory.as_ref().unwrap();
        assert!(minimized.len() <= finding.theory.as_ref().unwrap().len());
    }

    #[test]
    fn description_collisions_among_non_minimal_arguments_are_informational() {
        let report = check_unique_description(&loop_theory(), 7);
        assert!(report.passed());
        assert_eq!(report.info.len(), 1);
        assert!(report.info[0].detail.contains("[[[a => c] => b] => a]"));
    }

    #[test]
    fn example_triples_are_all_singletons() {
        let report = check_unique_description(&example_one(), 10);
        assert!(report.passed());
        assert!(report.info.is_empty());
        assert_eq!(report.checked[&PropertyId::UniqueDescription], 9);
    }

    #[test]
    fn a_bare_fact_forms_a_single_group() {
        let theory = TheoryDescription {
            language: fms(&["p"]),
            premises: fms(&["p"]),
            ..Default::default()
        }
        .build()
        .unwrap();
        let report = check_unique_description(&theory, 4);
        assert!(report.passed());
        assert_eq!(report.checked[&PropertyId::UniqueDescription], 1);
    }

    #[test]
    fn oracle_agreement_runs_over_the_fixtures() {
        for (name, theory) in all_fixtures() {
            let report = check_oracle_agreement(&theory, 10, CAMPAIGN_ORACLE_LIMIT);
            assert!(report.passed(), "{name}: {:?}", report.violations);
        }
    }

    #[test]
    fn generation_is_a_pure_function_of_the_config() {
        let config = GeneratorConfig::default();
        assert_eq!(random_theory(&config), random_theory(&config));
        let other = GeneratorConfig { seed: 1, ..config };
        assert_ne!(random_theory(&config), random_theory(&other));
    }

    #[test]
    fn acyclic_configurations_generate_acyclic_theories() {
        for seed in 0..50 {
            let theory = random_theory(&GeneratorConfig {
                seed,
                ..Default::default()
            });
            assert!(crate::construction::is_acyclic(&theory), "seed {seed}");
        }
    }

    #[test]
    fn generated_theories_validate() {
        for seed in 0..100 {
            for allow_cycles in [false, true] {
                let theory = random_theory(&GeneratorConfig {
                    seed,
                    allow_cycles,
                    ..Default::default()
                });
                assert!(theory.validate(true).is_clean(), "seed {seed}");
            }
        }
    }

    #[test]
    fn an_empty_campaign_reports_nothing() {
        let report = run_property_campaign(&GeneratorConfig::default(), 0, 16);
        assert_eq!(report, PropertyReport::default());
    }

    #[test]
    fn campaigns_are_deterministic() {
        let config = GeneratorConfig {
            seed: 7,
            allow_cycles: true,
            ..Default::default()
        };
        let first = run_property_campaign(&config, 20, 16);
        let second = run_property_campaign(&config, 20, 16);
        assert_eq!(first, second);
        assert!(first.passed());
    }

    #[test]
    fn campaign_findings_would_carry_seeds() {
        let theory = loop_theory();
        let report = check_theory(&theory, Some(42), 7);
        assert!(report.passed());
        assert!(report.info.iter().all(|f| f.seed == Some(42)));
    }

    #[test]
    fn duplicate_premise_rules_keep_the_equivalence() {
        use crate::theory::{RuleDecl, TheoryDescription};
        let theory = TheoryDescription {
            language: fms(&["b", "c", "d"]),
            defeasible: vec![
                RuleDecl::new(vec![fm("b"), fm("b")], fm("c")),
                RuleDecl::new(vec![fm("c"), fm("b")], fm("d")),
            ],
            premises: fms(&["b"]),
            ..Default::default()
        }
        .build()
        .unwrap();
        let report = check_theory(&theory, None, 12);
        assert!(report.passed(), "{:?}", report.violations);
    }
}
