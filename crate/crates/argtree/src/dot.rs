//! DOT rendering of argument trees.
//!
//! Each tree node becomes a graph node labeled with its conclusion; each
//! rule application becomes a box labeled with the rule's name and kind.
//! Edges run upward, child conclusion into the rule box and the box into
//! the derived conclusion. Node identifiers come from a preorder walk, so
//! structurally equal arguments render to identical bytes.

use crate::argument::Argument;

/// Renders one argument as a `digraph`.
pub fn export_dot(arg: &Argument) -> String {
    let mut out = String::from("digraph argument {\n  rankdir=BT;\n");
    let mut counter = 0;
    write_nodes(arg, "n", &mut counter, &mut out);
    out.push_str("}\n");
    out
}

/// Renders several arguments as one `digraph` with a cluster per argument.
pub fn export_dot_many(args: &[Argument]) -> String {
    let mut out = String::from("digraph arguments {\n  rankdir=BT;\n");
    for (i, arg) in args.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{i} {{\n"));
        out.push_str(&format!(
            "    label=\"{}\";\n",
            escape(&arg.canonical_form())
        ));
        let mut counter = 0;
        write_nodes(arg, &format!("a{i}_n"), &mut counter, &mut out);
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// Emits the node, its rule box when present, and its subtree; returns the
/// node's identifier.
fn write_nodes(arg: &Argument, prefix: &str, counter: &mut usize, out: &mut String) -> String {
    let id = format!("{prefix}{counter}");
    *counter += 1;
    out.push_str(&format!(
        "  {id} [label=\"{}\"];\n",
        escape(&arg.conclusion().to_string())
    ));
    if let Some(rule) = arg.top_rule() {
        let box_id = format!("{id}_r");
        out.push_str(&format!(
            "  {box_id} [shape=box, label=\"{} ({})\"];\n",
            escape(&rule.label()),
            rule.kind()
        ));
        for child in arg.children() {
            let child_id = write_nodes(child, prefix, counter, out);
            out.push_str(&format!("  {child_id} -> {box_id};\n"));
        }
        out.push_str(&format!("  {box_id} -> {id};\n"));
    }
    id
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example_one, fm};

    #[test]
    fn a_leaf_renders_as_a_single_node() {
        let theory = example_one();
        let leaf = Argument::leaf(&theory, fm("p")).unwrap();
        let dot = export_dot(&leaf);
        assert_eq!(dot.matches("label=").count(), 1);
        assert!(!dot.contains("shape=box"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn the_example_argument_has_four_nodes_and_two_boxes() {
        let theory = example_one();
        let arg = Argument::parse(&theory, "[[p,q => r] => s]").unwrap();
        let dot = export_dot(&arg);
        assert_eq!(dot.matches("shape=box").count(), 2);
        // Formula nodes: total labels minus the rule boxes.
        assert_eq!(dot.matches("label=").count() - 2, 4);
        assert!(dot.contains("(defeasible)"));
    }

    #[test]
    fn structurally_equal_arguments_render_identically() {
        let theory = example_one();
        let one = Argument::parse(&theory, "[[p,q => r] => s]").unwrap();
        let two = Argument::parse(&theory, "[ [ p , q => r ] => s ]").unwrap();
        assert_eq!(one, two);
        assert_eq!(export_dot(&one), export_dot(&two));
    }

    #[test]
    fn clusters_carry_their_canonical_labels() {
        let theory = example_one();
        let a = Argument::parse(&theory, "[[p,q => r] => s]").unwrap();
        let b = Argument::parse(&theory, "[[t,u => r] => s]").unwrap();
        let dot = export_dot_many(&[a, b]);
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert!(dot.contains("[[p,q => r] => s]"));
        assert!(dot.contains("a1_n0"));
    }
}
