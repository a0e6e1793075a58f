//! JSON views of arguments and property reports.
//!
//! An argument exports as a nested tree `{"conc", "rule", "subs"}` where
//! `rule` is the applied rule's name (null at leaves), wrapped with a flat
//! triple, classification flags, and the node count:
//!
//! ```json
//! {
//!   "conc": "s", "rule": "r3", "subs": [...],
//!   "triple": {"grounds": ["p","q"], "rules": ["r1","r3"], "conclusion": "s"},
//!   "flags": {"regular": true, "circular": false, "redundant": false, "minimal": true},
//!   "nodes": 4
//! }
//! ```
//!
//! Key order is fixed; all lists are sorted, so equal inputs export to
//! identical bytes.

use std::fmt;

use serde::Serialize;

use crate::argument::{Argument, ArgumentError};
use crate::classify::classify;
use crate::formula::Formula;
use crate::inference::is_minimal;
use crate::oracle::PropertyReport;
use crate::theory::{ArgumentationTheory, Rule};

#[derive(Serialize)]
struct ArgumentView {
    conc: String,
    rule: Option<String>,
    subs: Vec<NodeView>,
    triple: TripleView,
    flags: FlagsView,
    nodes: u64,
}

#[derive(Serialize)]
struct NodeView {
    conc: String,
    rule: Option<String>,
    subs: Vec<NodeView>,
}

#[derive(Serialize)]
struct TripleView {
    grounds: Vec<String>,
    rules: Vec<String>,
    conclusion: String,
}

#[derive(Serialize)]
struct FlagsView {
    regular: bool,
    circular: bool,
    redundant: bool,
    minimal: bool,
}

fn rule_ref(rule: &Rule) -> String {
    rule.name()
        .map(str::to_string)
        .unwrap_or_else(|| rule.text())
}

fn node_view(arg: &Argument) -> NodeView {
    NodeView {
        conc: arg.conclusion().to_string(),
        rule: arg.top_rule().map(rule_ref),
        subs: arg.children().iter().map(node_view).collect(),
    }
}

fn argument_view(arg: &Argument) -> ArgumentView {
    let description = arg.description();
    let report = classify(arg);
    let mut rules: Vec<String> = description.rules().iter().map(rule_ref).collect();
    rules.sort();
    ArgumentView {
        conc: arg.conclusion().to_string(),
        rule: arg.top_rule().map(rule_ref),
        subs: arg.children().iter().map(node_view).collect(),
        triple: TripleView {
            grounds: description
                .grounds()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            rules,
            conclusion: description.conclusion().to_string(),
        },
        flags: FlagsView {
            regular: report.regular,
            circular: report.circular,
            redundant: report.redundant,
            minimal: is_minimal(&description).minimal,
        },
        nodes: arg.node_count(),
    }
}

/// Pretty-printed JSON array of argument objects.
pub fn export_arguments_json(args: &[Argument]) -> String {
    let views: Vec<ArgumentView> = args.iter().map(argument_view).collect();
    serde_json::to_string_pretty(&views).expect("argument views serialize")
}

/// Pretty-printed JSON of a property report.
pub fn export_report_json(report: &PropertyReport) -> String {
    serde_json::to_string_pretty(report).expect("property reports serialize")
}

/// Rejected argument JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JsonImportError {
    Malformed(String),
    UnknownRule(String),
    Argument(ArgumentError),
}

impl fmt::Display for JsonImportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonImportError::Malformed(message) => write!(f, "malformed argument JSON: {message}"),
            JsonImportError::UnknownRule(name) => write!(f, "unknown rule name {name:?}"),
            JsonImportError::Argument(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for JsonImportError {}

/// Rebuilds an argument of `theory` from its exported JSON object, using
/// the nested `conc`/`rule`/`subs` fields.
pub fn argument_from_json(
    theory: &ArgumentationTheory,
    text: &str,
) -> Result<Argument, JsonImportError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| JsonImportError::Malformed(e.to_string()))?;
    value_to_argument(theory, &value)
}

fn value_to_argument(
    theory: &ArgumentationTheory,
    value: &serde_json::Value,
) -> Result<Argument, JsonImportError> {
    let object = value
        .as_object()
        .ok_or_else(|| JsonImportError::Malformed("expected an object".into()))?;
    let conc = object
        .get("conc")
        .and_then(|v| v.as_str())
        .ok_or_else(|| JsonImportError::Malformed("missing string field \"conc\"".into()))?;
    match object.get("rule") {
        None | Some(serde_json::Value::Null) => {
            let formula =
                Formula::parse(conc).map_err(|e| JsonImportError::Malformed(e.to_string()))?;
            Argument::leaf(theory, formula).map_err(JsonImportError::Argument)
        }
        Some(serde_json::Value::String(name)) => {
            let rule = theory
                .rule_named(name)
                .ok_or_else(|| JsonImportError::UnknownRule(name.clone()))?
                .clone();
            let subs = object
                .get("subs")
                .and_then(|v| v.as_array())
                .ok_or_else(|| JsonImportError::Malformed("missing array field \"subs\"".into()))?;
            let children = subs
                .iter()
                .map(|sub| value_to_argument(theory, sub))
                .collect::<Result<Vec<_>, _>>()?;
            Argument::apply(theory, &rule, children).map_err(JsonImportError::Argument)
        }
        Some(other) => Err(JsonImportError::Malformed(format!(
            "field \"rule\" must be a string or null, found {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::enumerate_all;
    use crate::testutil::example_one;

    #[test]
    fn the_example_argument_exports_its_triple() {
        let theory = example_one();
        let arg = Argument::parse(&theory, "[[p,q => r] => s]").unwrap();
        let json = export_arguments_json(&[arg]);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let entry = &value[0];
        assert_eq!(entry["conc"], "s");
        assert_eq!(entry["rule"], "r3");
        assert_eq!(entry["triple"]["grounds"], serde_json::json!(["p", "q"]));
        assert_eq!(entry["triple"]["rules"], serde_json::json!(["r1", "r3"]));
        assert_eq!(entry["triple"]["conclusion"], "s");
        assert_eq!(entry["flags"]["regular"], true);
        assert_eq!(entry["flags"]["minimal"], true);
        assert_eq!(entry["nodes"], 4);
        assert_eq!(entry["subs"][0]["rule"], "r1");
        assert_eq!(
            entry["subs"][0]["subs"][0],
            serde_json::json!({
                "conc": "p", "rule": null, "subs": []
            })
        );
    }

    #[test]
    fn an_empty_set_exports_as_an_empty_array() {
        assert_eq!(export_arguments_json(&[]), "[]");
    }

    #[test]
    fn exported_arguments_parse_back_to_equal_trees() {
        let theory = example_one();
        for arg in enumerate_all(&theory).unwrap() {
            let json = export_arguments_json(std::slice::from_ref(&arg));
            let value: serde_json::Value = serde_json::from_str(&json).unwrap();
            let rebuilt = argument_from_json(&theory, &value[0].to_string()).unwrap();
            assert_eq!(rebuilt, arg);
        }
    }

    #[test]
    fn import_rejects_unknown_rules_and_garbage() {
        let theory = example_one();
        assert!(matches!(
            argument_from_json(&theory, r#"{"conc":"s","rule":"r9","subs":[]}"#),
            Err(JsonImportError::UnknownRule(_))
        ));
        assert!(matches!(
            argument_from_json(&theory, "[1,2]"),
            Err(JsonImportError::Malformed(_))
        ));
        assert!(matches!(
            argument_from_json(&theory, r#"{"conc":"r","rule":null,"subs":[]}"#),
            Err(JsonImportError::Argument(_))
        ));
    }

    #[test]
    fn export_is_deterministic() {
        let theory = example_one();
        let args = enumerate_all(&theory).unwrap();
        assert_eq!(export_arguments_json(&args), export_arguments_json(&args));
    }
}
