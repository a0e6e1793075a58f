//! Atomic formulas of the logical language.

use std::fmt;

/// An atomic sentence: an identifier token with an optional negation prefix.
///
/// The surface syntax is `token` for a plain atom and `-token` for its
/// negation. Equality, ordering and hashing are by the `(token, negated)`
/// pair; there are no structural formulas.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Formula {
    token: String,
    negated: bool,
}

impl Formula {
    /// Builds a formula from a token and a negation flag.
    ///
    /// The token must be a valid identifier: a letter or underscore followed
    /// by letters, digits or underscores.
    pub fn new(token: impl Into<String>, negated: bool) -> Result<Self, InvalidFormula> {
        let token = token.into();
        if !is_identifier(&token) {
            return Err(InvalidFormula { text: token });
        }
        Ok(Formula { token, negated })
    }

    /// Builds a plain (non-negated) atom.
    pub fn atom(token: impl Into<String>) -> Result<Self, InvalidFormula> {
        Formula::new(token, false)
    }

    /// Parses the surface syntax `token` or `-token`.
    pub fn parse(text: &str) -> Result<Self, InvalidFormula> {
        match text.strip_prefix('-') {
            Some(rest) => Formula::new(rest, true),
            None => Formula::new(text, false),
        }
    }

    pub fn token(&self) -> &str {
        &self.token
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    /// The formula with the negation prefix flipped: `p` ↔ `-p`.
    pub fn negation(&self) -> Formula {
        Formula {
            token: self.token.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-{}", self.token)
        } else {
            write!(f, "{}", self.token)
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Rejected formula text: empty or not identifier-shaped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidFormula {
    pub text: String,
}

impl fmt::Display for InvalidFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid formula token {:?}", self.text)
    }
}

impl std::error::Error for InvalidFormula {}

#[cfg(test)]
mod tests {
    use super::*;

    fn fm(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn parses_plain_and_negated_atoms() {
        assert_eq!(fm("p").to_string(), "p");
        assert_eq!(fm("-p").to_string(), "-p");
        assert_eq!(fm("_x1").token(), "_x1");
        assert!(fm("-p").is_negated());
    }

    #[test]
    fn rejects_non_identifiers() {
        for bad in ["", "-", "1p", "p q", "p-q", "a!", "-"] {
            assert!(Formula::parse(bad).is_err(), "accepted {:?}", bad);
        }
    }

    #[test]
    fn equality_is_by_token_and_negation() {
        assert_eq!(fm("p"), fm("p"));
        assert_ne!(fm("p"), fm("-p"));
        assert_ne!(fm("p"), fm("q"));
        assert_eq!(fm("p").negation(), fm("-p"));
        assert_eq!(fm("-p").negation(), fm("p"));
    }

    #[test]
    fn ordering_groups_atoms_with_their_negations() {
        let mut v = [fm("-q"), fm("q"), fm("-p"), fm("p")];
        v.sort();
        let shown: Vec<String> = v.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["p", "-p", "q", "-q"]);
    }
}
