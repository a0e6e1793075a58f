//! A structured-argumentation engine over strict and defeasible rules.
//!
//! The crate builds validated argumentation theories, constructs the
//! arguments they support, describes each argument by its (grounds, rules,
//! conclusion) triple, classifies arguments as circular, redundant, or
//! regular, and decides minimality through a fixpoint closure. Brute-force
//! oracles and randomized campaigns cross-check the engine's central
//! equivalences.

pub mod argument;
pub mod classify;
pub mod construction;
pub mod dot;
pub mod dsl;
pub mod formula;
pub mod inference;
pub mod json;
pub mod oracle;
pub mod theory;

#[cfg(test)]
pub(crate) mod testutil;

pub use argument::{Argument, ArgumentDescription, ArgumentError, Inspection};
pub use classify::{classify, is_regular, ClassificationReport};
pub use construction::{
    enumerate_all, enumerate_bounded, enumerate_regular, is_acyclic, triple_realizable,
    ConditionViolation, CyclicTheory, Realizability, RealizabilityResult, DEFAULT_BUDGET,
};
pub use dsl::{parse_theory, unparse_theory, ParseError};
pub use formula::{Formula, InvalidFormula};
pub use inference::{
    closure, entails, is_minimal, minimal_arguments_for, ClosureResult, Firing, MinimalityVerdict,
    PropertyViolation,
};
pub use oracle::{
    check_oracle_agreement, check_regular_minimal_equivalence, check_relevance, check_theory,
    check_unique_description, check_wellformed, naive_is_minimal, random_theory,
    run_property_campaign, GeneratorConfig, PropertyFinding, PropertyId, PropertyReport,
};
pub use theory::{
    ArgumentationTheory, ContrarinessMap, KnowledgeBase, Rule, RuleDecl, RuleKind,
    TheoryDescription, TheoryError, ValidationIssue, ValidationReport,
};
