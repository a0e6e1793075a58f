//! The theory text format.
//!
//! Line-oriented surface syntax with `#` comments and `.`-terminated
//! statements:
//!
//! ```text
//! @autoneg                       # pair every atom with its negation
//! axiom <formula> .
//! premise <formula> .
//! strict  [<name> :] <formula> ("," <formula>)* "->" <formula> .
//! defeasible [<name> :] <formula> ("," <formula>)* "=>" <formula> .
//! contrary <formula> of <formula> .
//! contradictory <formula> ~ <formula> .
//! ```
//!
//! The language is the set of all mentioned formulas, plus the negation of
//! every mentioned formula when `@autoneg` is present. Formulas are `atom`
//! or `-atom`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::formula::Formula;
use crate::theory::{ArgumentationTheory, RuleDecl, TheoryDescription};

/// A positioned syntax or consistency error. Positions are 1-based and
/// point into the input; `snippet` is the offending line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub snippet: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        write!(f, "  | {}", self.snippet)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Pragma(String),
    Comma,
    Dot,
    Colon,
    Minus,
    Tilde,
    Arrow,       // ->
    DoubleArrow, // =>
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::Pragma(s) => format!("pragma @{s}"),
            Token::Comma => "','".into(),
            Token::Dot => "'.'".into(),
            Token::Colon => "':'".into(),
            Token::Minus => "'-'".into(),
            Token::Tilde => "'~'".into(),
            Token::Arrow => "'->'".into(),
            Token::DoubleArrow => "'=>'".into(),
        }
    }
}

struct Lexer<'a> {
    lines: Vec<&'a str>,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            lines: src.lines().collect(),
            chars: src.char_indices().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn error(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        let line = pos.line.min(self.lines.len().max(1));
        ParseError {
            line,
            column: pos.column,
            message: message.into(),
            snippet: self
                .lines
                .get(line - 1)
                .map(|l| l.trim_end().to_string())
                .unwrap_or_default(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|(_, c)| *c)
    }

    fn tokenize(mut self) -> Result<Vec<(Token, Pos)>, ParseError> {
        let mut out = Vec::new();
        loop {
            while let Some(c) = self.peek() {
                if c == '#' {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else if c.is_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let pos = Pos {
                line: self.line,
                column: self.column,
            };
            let Some(c) = self.peek() else {
                return Ok(out);
            };
            let token = match c {
                ',' => {
                    self.bump();
                    Token::Comma
                }
                '.' => {
                    self.bump();
                    Token::Dot
                }
                ':' => {
                    self.bump();
                    Token::Colon
                }
                '~' => {
                    self.bump();
                    Token::Tilde
                }
                '-' => {
                    self.bump();
                    if self.peek() == Some('>') {
                        self.bump();
                        Token::Arrow
                    } else {
                        Token::Minus
                    }
                }
                '=' => {
                    self.bump();
                    if self.peek() == Some('>') {
                        self.bump();
                        Token::DoubleArrow
                    } else {
                        return Err(self.error(pos, "expected '=>'"));
                    }
                }
                '@' => {
                    self.bump();
                    let name = self.lex_ident();
                    if name.is_empty() {
                        return Err(self.error(pos, "expected a pragma name after '@'"));
                    }
                    Token::Pragma(name)
                }
                c if c.is_ascii_alphabetic() || c == '_' => Token::Ident(self.lex_ident()),
                other => {
                    return Err(self.error(pos, format!("unexpected character {other:?}")));
                }
            };
            out.push((token, pos));
        }
    }

    fn lex_ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, Pos)>,
    index: usize,
    lines: Vec<&'a str>,
    src_len: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        let line = pos.line.min(self.lines.len().max(1));
        ParseError {
            line,
            column: pos.column,
            message: message.into(),
            snippet: self
                .lines
                .get(line - 1)
                .map(|l| l.trim_end().to_string())
                .unwrap_or_default(),
        }
    }

    fn end_pos(&self) -> Pos {
        let line = self.lines.len().max(1);
        let column = self.lines.last().map(|l| l.len()).unwrap_or(0).max(1);
        if self.src_len == 0 {
            Pos { line: 1, column: 1 }
        } else {
            Pos { line, column }
        }
    }

    fn peek(&self) -> Option<&(Token, Pos)> {
        self.tokens.get(self.index)
    }

    fn next(&mut self) -> Option<(Token, Pos)> {
        let t = self.tokens.get(self.index).cloned();
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, context: &str) -> Result<Pos, ParseError> {
        match self.next() {
            Some((token, pos)) if token == *want => Ok(pos),
            Some((token, pos)) => Err(self.error(
                pos,
                format!(
                    "expected {} {context}, found {}",
                    want.describe(),
                    token.describe()
                ),
            )),
            None => Err(self.error(
                self.end_pos(),
                format!("expected {} {context}, found end of input", want.describe()),
            )),
        }
    }

    fn parse_formula(&mut self, context: &str) -> Result<(Formula, Pos), ParseError> {
        match self.next() {
            Some((Token::Minus, pos)) => match self.next() {
                Some((Token::Ident(name), _)) => {
                    let formula =
                        Formula::new(name, true).map_err(|e| self.error(pos, e.to_string()))?;
                    Ok((formula, pos))
                }
                Some((token, p)) => Err(self.error(
                    p,
                    format!(
                        "expected an atom after '-' {context}, found {}",
                        token.describe()
                    ),
                )),
                None => Err(self.error(self.end_pos(), format!("expected an atom {context}"))),
            },
            Some((Token::Ident(name), pos)) => {
                let formula =
                    Formula::new(name, false).map_err(|e| self.error(pos, e.to_string()))?;
                Ok((formula, pos))
            }
            Some((token, pos)) => Err(self.error(
                pos,
                format!("expected a formula {context}, found {}", token.describe()),
            )),
            None => Err(self.error(self.end_pos(), format!("expected a formula {context}"))),
        }
    }
}

/// Parses theory text and builds the theory, reporting syntax and
/// consistency problems with source positions. Empty input is a valid empty
/// theory.
pub fn parse_theory(text: &str) -> Result<ArgumentationTheory, ParseError> {
    let lexer = Lexer::new(text);
    let lines = lexer.lines.clone();
    let tokens = lexer.tokenize()?;
    let mut parser = Parser {
        tokens,
        index: 0,
        lines,
        src_len: text.len(),
    };

    let mut autoneg = false;
    let mut axioms: BTreeMap<Formula, Pos> = BTreeMap::new();
    let mut premises: BTreeMap<Formula, Pos> = BTreeMap::new();
    // Shapes seen per kind, and name assignments, for positioned conflicts.
    let mut shapes: BTreeMap<(Vec<Formula>, Formula), (bool, Option<String>)> = BTreeMap::new();
    let mut names: BTreeMap<String, (Vec<Formula>, Formula)> = BTreeMap::new();
    let mut description = TheoryDescription::default();
    let mut mentioned: BTreeSet<Formula> = BTreeSet::new();

    while let Some((token, pos)) = parser.next() {
        match token {
            Token::Pragma(name) if name == "autoneg" => {
                autoneg = true;
            }
            Token::Pragma(name) => {
                return Err(parser.error(pos, format!("unknown pragma @{name}")));
            }
            Token::Ident(keyword) => match keyword.as_str() {
                "axiom" | "premise" => {
                    let (formula, fpos) = parser.parse_formula("after the keyword")?;
                    parser.expect(&Token::Dot, "to end the statement")?;
                    mentioned.insert(formula.clone());
                    let clashes = if keyword == "axiom" {
                        premises.contains_key(&formula)
                    } else {
                        axioms.contains_key(&formula)
                    };
                    if clashes {
                        return Err(parser.error(
                            fpos,
                            format!("formula {formula} is both an axiom and an ordinary premise"),
                        ));
                    }
                    if keyword == "axiom" {
                        axioms.insert(formula, fpos);
                    } else {
                        premises.insert(formula, fpos);
                    }
                }
                "strict" | "defeasible" => {
                    let strict = keyword == "strict";
                    let name = match (parser.peek(), parser.tokens.get(parser.index + 1)) {
                        (Some((Token::Ident(n), _)), Some((Token::Colon, _))) => {
                            let n = n.clone();
                            parser.next();
                            parser.next();
                            Some(n)
                        }
                        _ => None,
                    };
                    let mut rule_premises = vec![parser.parse_formula("as a rule premise")?.0];
                    let arrow = loop {
                        match parser.next() {
                            Some((Token::Comma, _)) => {
                                rule_premises.push(parser.parse_formula("as a rule premise")?.0);
                            }
                            Some((Token::Arrow, apos)) => break (Token::Arrow, apos),
                            Some((Token::DoubleArrow, apos)) => break (Token::DoubleArrow, apos),
                            Some((token, p)) => {
                                return Err(parser.error(
                                    p,
                                    format!(
                                        "expected ',', '->' or '=>' in the rule, found {}",
                                        token.describe()
                                    ),
                                ))
                            }
                            None => {
                                return Err(
                                    parser.error(parser.end_pos(), "unterminated rule statement")
                                )
                            }
                        }
                    };
                    match (strict, &arrow.0) {
                        (true, Token::Arrow) | (false, Token::DoubleArrow) => {}
                        (true, _) => {
                            return Err(parser.error(arrow.1, "strict rules use '->'"));
                        }
                        (false, _) => {
                            return Err(parser.error(arrow.1, "defeasible rules use '=>'"));
                        }
                    }
                    let (conclusion, _) = parser.parse_formula("as the rule conclusion")?;
                    parser.expect(&Token::Dot, "to end the statement")?;

                    mentioned.extend(rule_premises.iter().cloned());
                    mentioned.insert(conclusion.clone());
                    let shape = (rule_premises.clone(), conclusion.clone());
                    if let Some(n) = &name {
                        if names.get(n).is_some_and(|existing| *existing != shape) {
                            return Err(
                                parser.error(pos, format!("rule name {n} is already in use"))
                            );
                        }
                    }
                    match shapes.get(&shape) {
                        Some((was_strict, _)) if *was_strict != strict => {
                            return Err(parser.error(
                                pos,
                                "the same rule is declared both strict and defeasible",
                            ));
                        }
                        Some((_, existing_name)) => {
                            if *existing_name != name {
                                return Err(parser.error(
                                    pos,
                                    "the same rule is declared twice with different names",
                                ));
                            }
                            continue;
                        }
                        None => {}
                    }
                    if let Some(n) = &name {
                        names.insert(n.clone(), shape.clone());
                    }
                    shapes.insert(shape, (strict, name.clone()));
                    let decl = RuleDecl {
                        name,
                        premises: rule_premises,
                        conclusion,
                    };
                    if strict {
                        description.strict.push(decl);
                    } else {
                        description.defeasible.push(decl);
                    }
                }
                "contrary" => {
                    let (of, _) = parser.parse_formula("as the contrary")?;
                    match parser.next() {
                        Some((Token::Ident(kw), _)) if kw == "of" => {}
                        Some((token, p)) => {
                            return Err(parser
                                .error(p, format!("expected 'of', found {}", token.describe())))
                        }
                        None => return Err(parser.error(parser.end_pos(), "expected 'of'")),
                    }
                    let (target, _) = parser.parse_formula("after 'of'")?;
                    parser.expect(&Token::Dot, "to end the statement")?;
                    mentioned.insert(of.clone());
                    mentioned.insert(target.clone());
                    description.contrariness.push((of, target));
                }
                "contradictory" => {
                    let (left, _) = parser.parse_formula("on the left of '~'")?;
                    parser.expect(&Token::Tilde, "between the formulas")?;
                    let (right, _) = parser.parse_formula("on the right of '~'")?;
                    parser.expect(&Token::Dot, "to end the statement")?;
                    mentioned.insert(left.clone());
                    mentioned.insert(right.clone());
                    description.contrariness.push((left.clone(), right.clone()));
                    description.contrariness.push((right, left));
                }
                other => {
                    return Err(parser.error(
                        pos,
                        format!(
                            "expected a statement keyword (axiom, premise, strict, defeasible, \
                             contrary, contradictory), found {other:?}"
                        ),
                    ));
                }
            },
            token => {
                return Err(parser.error(
                    pos,
                    format!("expected a statement, found {}", token.describe()),
                ));
            }
        }
    }

    description.language = mentioned.clone();
    if autoneg {
        for formula in &mentioned {
            let neg = formula.negation();
            description.language.insert(neg.clone());
            description
                .contrariness
                .push((formula.clone(), neg.clone()));
            description.contrariness.push((neg, formula.clone()));
        }
    }
    description.axioms = axioms.into_keys().collect();
    description.premises = premises.into_keys().collect();

    // The checks above make construction infallible; keep the mapping for
    // API-level descriptions that bypass the parser.
    description.build().map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
        snippet: String::new(),
    })
}

/// Renders a theory back into statement syntax. Reparsing the output yields
/// an equal theory whenever every language formula is mentioned by some
/// statement, which holds for all parsed theories.
pub fn unparse_theory(theory: &ArgumentationTheory) -> String {
    let mut out = String::new();
    for formula in theory.kb().axioms() {
        out.push_str(&format!("axiom {formula} .\n"));
    }
    for formula in theory.kb().ordinary_premises() {
        out.push_str(&format!("premise {formula} .\n"));
    }
    for rule in theory.strict_rules() {
        out.push_str(&render_rule("strict", rule));
    }
    for rule in theory.defeasible_rules() {
        out.push_str(&render_rule("defeasible", rule));
    }
    let mut seen_mutual: BTreeSet<(Formula, Formula)> = BTreeSet::new();
    for (of, target) in theory.contrariness().pairs() {
        if theory.contrariness().is_contradictory(of, target) {
            let key = if of <= target {
                (of.clone(), target.clone())
            } else {
                (target.clone(), of.clone())
            };
            if seen_mutual.insert(key.clone()) {
                out.push_str(&format!("contradictory {} ~ {} .\n", key.0, key.1));
            }
        } else {
            out.push_str(&format!("contrary {of} of {target} .\n"));
        }
    }
    out
}

fn render_rule(keyword: &str, rule: &crate::theory::Rule) -> String {
    let premises: Vec<String> = rule.premises().iter().map(|p| p.to_string()).collect();
    match rule.name() {
        Some(name) => format!(
            "{keyword} {name}: {} {} {} .\n",
            premises.join(", "),
            rule.kind().arrow(),
            rule.conclusion()
        ),
        None => format!(
            "{keyword} {} {} {} .\n",
            premises.join(", "),
            rule.kind().arrow(),
            rule.conclusion()
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{self, fm};

    pub(crate) const EXAMPLE_ONE: &str = "\
@autoneg
premise p . premise q . premise t . premise u .
defeasible r1: p, q => r .
defeasible r2: t, u => r .
defeasible r3: r => s .
defeasible r4: u => v .
";

    #[test]
    fn parses_the_example_fixture() {
        let theory = parse_theory(EXAMPLE_ONE).unwrap();
        assert_eq!(theory, testutil::example_one());
    }

    #[test]
    fn empty_input_is_an_empty_theory() {
        let theory = parse_theory("").unwrap();
        assert!(theory.language().is_empty());
        assert!(theory.kb().is_empty());
        assert!(theory.rules().next().is_none());

        let commented = parse_theory("# nothing here\n").unwrap();
        assert_eq!(commented, theory);
    }

    #[test]
    fn rejects_an_empty_premise_list() {
        let err = parse_theory("strict r1: -> x .").unwrap_err();
        assert_eq!((err.line, err.column), (1, 12));
        assert!(
            err.message.contains("expected a formula"),
            "{}",
            err.message
        );
        assert_eq!(err.snippet, "strict r1: -> x .");
    }

    #[test]
    fn rejects_wrong_arrows() {
        let err = parse_theory("strict a => b .").unwrap_err();
        assert!(err.message.contains("strict rules use '->'"));
        let err = parse_theory("defeasible a -> b .").unwrap_err();
        assert!(err.message.contains("defeasible rules use '=>'"));
    }

    #[test]
    fn positions_point_at_the_problem() {
        let err = parse_theory("premise p .\npremise q\npremise r .").unwrap_err();
        assert_eq!((err.line, err.column), (3, 1));
        assert_eq!(err.snippet, "premise r .");

        let err = parse_theory("axiom p .\npremise p .").unwrap_err();
        assert_eq!((err.line, err.column), (2, 9));
        assert!(err.message.contains("both an axiom"));
    }

    #[test]
    fn reports_kind_conflicts_with_positions() {
        let err = parse_theory("strict a -> b .\ndefeasible a => b .").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("both strict and defeasible"));
    }

    #[test]
    fn reports_name_conflicts() {
        let err = parse_theory("defeasible r1: a => b .\ndefeasible r1: b => c .").unwrap_err();
        assert!(err.message.contains("already in use"));
        let err = parse_theory("defeasible r1: a => b .\ndefeasible r2: a => b .").unwrap_err();
        assert!(err.message.contains("different names"));
    }

    #[test]
    fn negated_atoms_parse_everywhere() {
        let theory =
            parse_theory("premise -p .\ndefeasible -p => q .\ncontrary q of -p .").unwrap();
        assert!(theory.kb().contains(&fm("-p")));
        assert!(theory.language().contains(&fm("-p")));
        assert_eq!(theory.defeasible_rules()[0].premises(), &[fm("-p")]);
        assert!(theory.contrariness().is_contrary(&fm("q"), &fm("-p")));
    }

    #[test]
    fn autoneg_closes_the_language() {
        let theory = parse_theory("@autoneg\npremise p .").unwrap();
        assert!(theory.language().contains(&fm("-p")));
        assert!(theory.contrariness().is_contradictory(&fm("p"), &fm("-p")));
        assert!(theory.validate(true).is_clean());
    }

    #[test]
    fn contradictory_statements_are_mutual() {
        let theory = parse_theory("premise p .\ncontradictory p ~ -p .").unwrap();
        assert!(theory.contrariness().is_contradictory(&fm("p"), &fm("-p")));
        assert!(theory.contrariness().is_contradictory(&fm("-p"), &fm("p")));
    }

    #[test]
    fn unknown_pragmas_and_characters_are_rejected() {
        assert!(parse_theory("@nonsense\n")
            .unwrap_err()
            .message
            .contains("pragma"));
        assert!(parse_theory("premise p ?").is_err());
        assert!(parse_theory("? p .").is_err());
    }

    #[test]
    fn unparse_round_trips_the_fixtures() {
        for (name, theory) in testutil::all_fixtures() {
            let text = unparse_theory(&theory);
            let reparsed = parse_theory(&text).unwrap();
            assert_eq!(reparsed, theory, "{name}:\n{text}");
        }
        let parsed = parse_theory(EXAMPLE_ONE).unwrap();
        let reparsed = parse_theory(&unparse_theory(&parsed)).unwrap();
        assert_eq!(reparsed, parsed);
    }

    #[test]
    fn statements_may_share_a_line_or_span_lines() {
        let theory =
            parse_theory("premise p . premise q .\ndefeasible r1:\n  p, q => r .").unwrap();
        assert_eq!(theory.kb().len(), 2);
        assert_eq!(theory.defeasible_rules().len(), 1);
    }
}
