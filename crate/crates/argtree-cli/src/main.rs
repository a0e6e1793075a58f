//! Command-line front end: parse theory files, enumerate and classify
//! arguments, query closure and minimality, check properties, and export
//! DOT renderings.
//!
//! Exit codes: 0 on success, 1 on violations or errors, 2 on parse errors.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use argtree::{
    check_theory, classify, dot, enumerate_all, enumerate_bounded, enumerate_regular, is_minimal,
    json, minimal_arguments_for, run_property_campaign, triple_realizable, Argument,
    ArgumentDescription, ArgumentationTheory, Formula, GeneratorConfig, PropertyReport,
    Realizability, Rule, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "argtree", version, about = "Structured-argumentation engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check contrariness coverage and echo the disjointness invariants.
    Validate {
        file: PathBuf,
        /// Treat missing contradictories as errors instead of warnings.
        #[arg(long)]
        strict: bool,
    },
    /// List the arguments of the theory.
    Enumerate {
        file: PathBuf,
        /// Only arguments with at most this many nodes. Defaults to the
        /// full set for acyclic theories and to 64 for cyclic ones.
        #[arg(long)]
        budget: Option<u64>,
        /// Only regular arguments (terminates even on cyclic theories).
        #[arg(long)]
        regular_only: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Classify every argument as regular, circular, or redundant.
    Classify {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the minimal arguments for a conclusion.
    Minimal {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        conclusion: String,
        /// Drop minimal arguments above this node count.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Close a formula set under (a subset of) the rules.
    Closure {
        file: PathBuf,
        /// Comma-separated starting formulas.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        from: Vec<String>,
        /// Comma-separated rule names; all rules when absent.
        #[arg(long, value_delimiter = ',')]
        rules: Option<Vec<String>>,
    },
    /// Decide whether the goal is inferred from the formulas and rules.
    Entails {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        from: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        goal: String,
        #[arg(long, value_delimiter = ',')]
        rules: Option<Vec<String>>,
    },
    /// Decide whether some argument is described by the given triple.
    Realizable {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        grounds: Vec<String>,
        /// Comma-separated rule names making up the triple's rule set.
        #[arg(long, value_delimiter = ',')]
        rules: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        conclusion: String,
        /// Search budget for cyclic theories.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Machine-check relevance, regular-iff-minimal, unique descriptions,
    /// and minimality-oracle agreement on one theory.
    CheckProps {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the property checks over randomly generated theories.
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 8)]
        atoms: usize,
        #[arg(long, default_value_t = 6)]
        rules: usize,
        #[arg(long, default_value_t = 3)]
        max_premises: usize,
        #[arg(long, default_value_t = 4)]
        kb: usize,
        /// Allow cyclic rule graphs.
        #[arg(long)]
        cycles: bool,
        #[arg(long, default_value_t = 32)]
        budget: u64,
        /// Write the full JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Render the arguments for a conclusion as a DOT graph.
    ExportDot {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        conclusion: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn error(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn load_theory(path: &Path) -> Result<ArgumentationTheory, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::error(format!("cannot read {}: {e}", path.display())))?;
    argtree::parse_theory(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn resolve_formula(theory: &ArgumentationTheory, text: &str) -> Result<Formula, Failure> {
    let formula = Formula::parse(text).map_err(|e| Failure::error(e.to_string()))?;
    if !theory.language().contains(&formula) {
        return Err(Failure::error(format!(
            "formula {formula} is not in the theory's language"
        )));
    }
    Ok(formula)
}

fn resolve_formulas(
    theory: &ArgumentationTheory,
    texts: &[String],
) -> Result<BTreeSet<Formula>, Failure> {
    texts
        .iter()
        .filter(|t| !t.is_empty())
        .map(|t| resolve_formula(theory, t))
        .collect()
}

fn resolve_rules(
    theory: &ArgumentationTheory,
    names: &[String],
) -> Result<BTreeSet<Rule>, Failure> {
    names
        .iter()
        .filter(|n| !n.is_empty())
        .map(|name| {
            theory
                .rule_named(name)
                .cloned()
                .ok_or_else(|| Failure::error(format!("no rule named {name:?} in the theory")))
        })
        .collect()
}

/// The arguments a listing command operates on: exhaustive for acyclic
/// theories, budget-bounded otherwise.
fn select_arguments(
    theory: &ArgumentationTheory,
    budget: Option<u64>,
    regular_only: bool,
) -> Vec<Argument> {
    if regular_only {
        let mut args = enumerate_regular(theory);
        if let Some(budget) = budget {
            args.retain(|a| a.node_count() <= budget);
        }
        return args;
    }
    match budget {
        Some(budget) => enumerate_bounded(theory, budget),
        None => match enumerate_all(theory) {
            Ok(args) => args,
            Err(_) => enumerate_bounded(theory, DEFAULT_BUDGET),
        },
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { file, strict } => {
            let theory = load_theory(&file)?;
            let report = theory.validate(strict);
            for (formula, present) in &report.contradictories {
                let status = if *present { "present" } else { "missing" };
                println!("formula {formula}: contradictory {status}");
            }
            println!("kb-disjoint: {}", report.kb_disjoint);
            println!("rule-kinds-disjoint: {}", report.rule_kinds_disjoint);
            for warning in &report.warnings {
                println!("warning: {warning}");
            }
            for error in &report.errors {
                println!("error: {error}");
            }
            if report.is_clean() {
                println!("result: ok");
                Ok(0)
            } else {
                println!("result: invalid");
                Ok(1)
            }
        }
        Command::Enumerate {
            file,
            budget,
            regular_only,
            format,
        } => {
            let theory = load_theory(&file)?;
            let args = select_arguments(&theory, budget, regular_only);
            match format {
                Format::Json => println!("{}", json::export_arguments_json(&args)),
                Format::Text => {
                    for arg in &args {
                        println!("{arg}");
                    }
                }
            }
            Ok(0)
        }
        Command::Classify {
            file,
            budget,
            format,
        } => {
            let theory = load_theory(&file)?;
            let args = select_arguments(&theory, budget, false);
            match format {
                Format::Json => println!("{}", json::export_arguments_json(&args)),
                Format::Text => {
                    for arg in &args {
                        let report = classify(arg);
                        let mut flags: Vec<&str> = Vec::new();
                        if report.regular {
                            flags.push("regular");
                        }
                        if report.circular {
                            flags.push("circular");
                        }
                        if report.redundant {
                            flags.push("redundant");
                        }
                        if is_minimal(&arg.description()).minimal {
                            flags.push("minimal");
                        } else {
                            flags.push("non-minimal");
                        }
                        println!("{arg} :: {}", flags.join(" "));
                    }
                }
            }
            Ok(0)
        }
        Command::Minimal {
            file,
            conclusion,
            budget,
        } => {
            let theory = load_theory(&file)?;
            let conclusion = resolve_formula(&theory, &conclusion)?;
            let mut args = minimal_arguments_for(&theory, &conclusion)
                .map_err(|violation| Failure::error(violation.to_string()))?;
            if let Some(budget) = budget {
                args.retain(|a| a.node_count() <= budget);
            }
            for arg in &args {
                println!("{arg}");
            }
            Ok(0)
        }
        Command::Closure { file, from, rules } => {
            let theory = load_theory(&file)?;
            let base = resolve_formulas(&theory, &from)?;
            let rules = match rules {
                Some(names) => resolve_rules(&theory, &names)?,
                None => theory.rule_set(),
            };
            let result = argtree::closure(&base, &rules);
            let closed: Vec<String> = result.closed.iter().map(|f| f.to_string()).collect();
            println!("closed: {}", closed.join(", "));
            let trace: Vec<String> = result
                .trace
                .iter()
                .map(|f| format!("{}@{}", f.rule.label(), f.round))
                .collect();
            println!("trace: {}", trace.join(" "));
            Ok(0)
        }
        Command::Entails {
            file,
            from,
            goal,
            rules,
        } => {
            let theory = load_theory(&file)?;
            let base = resolve_formulas(&theory, &from)?;
            let goal = resolve_formula(&theory, &goal)?;
            let rules = match rules {
                Some(names) => resolve_rules(&theory, &names)?,
                None => theory.rule_set(),
            };
            println!("{}", argtree::entails(&base, &rules, &goal));
            Ok(0)
        }
        Command::Realizable {
            file,
            grounds,
            rules,
            conclusion,
            budget,
        } => {
            let theory = load_theory(&file)?;
            let triple = ArgumentDescription::new(
                resolve_formulas(&theory, &grounds)?,
                resolve_rules(&theory, &rules)?,
                resolve_formula(&theory, &conclusion)?,
            );
            let budget = budget.unwrap_or(DEFAULT_BUDGET);
            let result = triple_realizable(&theory, &triple, budget);
            match &result.verdict {
                Realizability::Realizable { witnesses } => {
                    println!("realizable: yes");
                    for witness in witnesses {
                        println!("witness: {witness}");
                    }
                }
                Realizability::NotRealizable { exact } => {
                    println!("realizable: no");
                    println!("exact: {exact}");
                    for violation in &result.refutation {
                        println!("refuted-by: {violation}");
                    }
                    if result.refutation.is_empty() {
                        println!("note: exhaustive search found no witness");
                    }
                }
                Realizability::Unknown => {
                    println!("realizable: unknown");
                    println!("note: no witness within budget {budget}; the theory is cyclic");
                }
            }
            Ok(0)
        }
        Command::CheckProps { file, budget } => {
            let theory = load_theory(&file)?;
            let budget = budget.unwrap_or(DEFAULT_BUDGET);
            let report = check_theory(&theory, None, budget);
            print_report(&report);
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Fuzz {
            seed,
            count,
            atoms,
            rules,
            max_premises,
            kb,
            cycles,
            budget,
            report,
        } => {
            let config = GeneratorConfig {
                seed,
                num_atoms: atoms,
                num_rules: rules,
                max_premises,
                kb_size: kb,
                allow_cycles: cycles,
            };
            let outcome = run_property_campaign(&config, count, budget);
            println!(
                "theories: {count} (seeds {seed}..{})",
                seed.wrapping_add(count)
            );
            print_report(&outcome);
            if let Some(path) = report {
                std::fs::write(&path, json::export_report_json(&outcome))
                    .map_err(|e| Failure::error(format!("cannot write {}: {e}", path.display())))?;
                println!("report: {}", path.display());
            }
            Ok(if outcome.passed() { 0 } else { 1 })
        }
        Command::ExportDot {
            file,
            conclusion,
            budget,
            output,
        } => {
            let theory = load_theory(&file)?;
            let conclusion = resolve_formula(&theory, &conclusion)?;
            let args: Vec<Argument> = select_arguments(&theory, budget, false)
                .into_iter()
                .filter(|a| a.conclusion() == &conclusion)
                .collect();
            if args.is_empty() {
                return Err(Failure::error(format!(
                    "no argument with conclusion {conclusion} was found"
                )));
            }
            let rendered = if args.len() == 1 {
                dot::export_dot(&args[0])
            } else {
                dot::export_dot_many(&args)
            };
            std::fs::write(&output, rendered)
                .map_err(|e| Failure::error(format!("cannot write {}: {e}", output.display())))?;
            Ok(0)
        }
    }
}

fn print_report(report: &PropertyReport) {
    for (property, checked) in &report.checked {
        let violations = report
            .violations
            .iter()
            .filter(|v| v.property == *property)
            .count();
        println!("{property}: checked {checked}, violations {violations}");
    }
    for finding in &report.info {
        println!(
            "info: {}: {}: {}",
            finding.property, finding.subject, finding.detail
        );
    }
    for finding in &report.violations {
        println!(
            "violation: {}: {}: {}",
            finding.property, finding.subject, finding.detail
        );
        if let Some(theory) = &finding.minimized_theory {
            for line in theory.lines() {
                println!("    {line}");
            }
        }
    }
    println!("result: {}", if report.passed() { "pass" } else { "fail" });
}
