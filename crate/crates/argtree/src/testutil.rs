//! Fixture theories shared across the unit tests.

use std::collections::BTreeSet;

use crate::formula::Formula;
use crate::theory::{ArgumentationTheory, RuleDecl, TheoryDescription};

pub(crate) fn fm(s: &str) -> Formula {
    Formula::parse(s).unwrap()
}

pub(crate) fn fms(items: &[&str]) -> BTreeSet<Formula> {
    items.iter().map(|s| fm(s)).collect()
}

fn closed_language(atoms: &[&str]) -> (BTreeSet<Formula>, Vec<(Formula, Formula)>) {
    let mut language = BTreeSet::new();
    let mut pairs = Vec::new();
    for a in atoms {
        let pos = fm(a);
        let neg = pos.negation();
        pairs.push((pos.clone(), neg.clone()));
        pairs.push((neg.clone(), pos.clone()));
        language.insert(pos);
        language.insert(neg);
    }
    (language, pairs)
}

fn theory(
    atoms: &[&str],
    rules: &[(&str, &[&str], &str)],
    premises: &[&str],
) -> ArgumentationTheory {
    let (language, contrariness) = closed_language(atoms);
    TheoryDescription {
        language,
        contrariness,
        strict: vec![],
        defeasible: rules
            .iter()
            .map(|(name, body, head)| {
                RuleDecl::named(*name, body.iter().map(|s| fm(s)).collect(), fm(head))
            })
            .collect(),
        axioms: BTreeSet::new(),
        premises: fms(premises),
    }
    .build()
    .unwrap()
}

/// Rules p,q=>r; t,u=>r; r=>s; u=>v over K={p,q,t,u}.
pub(crate) fn example_one() -> ArgumentationTheory {
    theory(
        &["p", "q", "r", "s", "t", "u", "v"],
        &[
            ("r1", &["p", "q"], "r"),
            ("r2", &["t", "u"], "r"),
            ("r3", &["r"], "s"),
            ("r4", &["u"], "v"),
        ],
        &["p", "q", "t", "u"],
    )
}

/// Rules a=>c; c=>b; b=>a over K={a}: every composite conclusion loops.
pub(crate) fn loop_theory() -> ArgumentationTheory {
    theory(
        &["a", "b", "c"],
        &[
            ("r1", &["a"], "c"),
            ("r2", &["c"], "b"),
            ("r3", &["b"], "a"),
        ],
        &["a"],
    )
}

/// Rules p,q=>s; s=>q; q,r=>t over K={p,q,r}: premise-style circularity.
pub(crate) fn circular_premise_theory() -> ArgumentationTheory {
    theory(
        &["p", "q", "r", "s", "t"],
        &[
            ("r1", &["p", "q"], "s"),
            ("r2", &["s"], "q"),
            ("r3", &["q", "r"], "t"),
        ],
        &["p", "q", "r"],
    )
}

/// Rules p,q=>r; r=>s; s=>t; t=>r over K={p,q}: rule-style circularity.
pub(crate) fn circular_rule_theory() -> ArgumentationTheory {
    theory(
        &["p", "q", "r", "s", "t"],
        &[
            ("r1", &["p", "q"], "r"),
            ("r2", &["r"], "s"),
            ("r3", &["s"], "t"),
            ("r4", &["t"], "r"),
        ],
        &["p", "q"],
    )
}

/// Rules p=>r; r=>s; q=>r; r,s=>t over K={p,q}: two routes to r.
pub(crate) fn redundant_theory() -> ArgumentationTheory {
    theory(
        &["p", "q", "r", "s", "t"],
        &[
            ("r1", &["p"], "r"),
            ("r2", &["r"], "s"),
            ("r3", &["q"], "r"),
            ("r4", &["r", "s"], "t"),
        ],
        &["p", "q"],
    )
}

/// Rules d=>b; b=>c; b,c=>a over K={b,d}.
pub(crate) fn minimality_theory() -> ArgumentationTheory {
    theory(
        &["a", "b", "c", "d"],
        &[
            ("r1", &["d"], "b"),
            ("r2", &["b"], "c"),
            ("r3", &["b", "c"], "a"),
        ],
        &["b", "d"],
    )
}

/// Rules p=>q; q=>r over K={p,q}: two nested derivations of r.
pub(crate) fn chain_theory() -> ArgumentationTheory {
    theory(
        &["p", "q", "r"],
        &[("r1", &["p"], "q"), ("r2", &["q"], "r")],
        &["p", "q"],
    )
}

/// Every fixture theory paired with a short name, for corpus-wide checks.
pub(crate) fn all_fixtures() -> Vec<(&'static str, ArgumentationTheory)> {
    vec![
        ("example-one", example_one()),
        ("loop", loop_theory()),
        ("circular-premise", circular_premise_theory()),
        ("circular-rule", circular_rule_theory()),
        ("redundant", redundant_theory()),
        ("minimality", minimality_theory()),
        ("chain", chain_theory()),
    ]
}
