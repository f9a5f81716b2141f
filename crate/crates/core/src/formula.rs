//! Textual formulas over the atoms of a world space.
//!
//! Grammar (ASCII): atoms are identifiers, `~` negation, `&` conjunction,
//! `|` disjunction, `->` the material conditional, with `true`/`false`
//! constants and parentheses. `~` binds tightest, then `&`, then `|`,
//! then `->`; `->` is right-associative.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::space::{Proposition, WorldSpace};

/// A parsed formula. Atom nodes keep their source position so unknown
/// atoms can be reported against the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    True,
    False,
    Atom(String, usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Parse a formula without resolving atoms against a space.
    pub fn parse(text: &str) -> Result<Formula> {
        Parser::new(text).parse()
    }

    /// The world set of this formula in `space`, computed by set algebra.
    pub fn proposition(&self, space: &Arc<WorldSpace>) -> Result<Proposition> {
        match self {
            Formula::True => Ok(Proposition::top(space)),
            Formula::False => Ok(Proposition::bottom(space)),
            Formula::Atom(name, position) => {
                Proposition::atom(space, name).map_err(|_| Error::UnknownAtom {
                    name: name.clone(),
                    position: *position,
                })
            }
            Formula::Not(f) => Ok(f.proposition(space)?.complement()),
            Formula::And(l, r) => Ok(&l.proposition(space)? & &r.proposition(space)?),
            Formula::Or(l, r) => Ok(&l.proposition(space)? | &r.proposition(space)?),
            Formula::Implies(l, r) => {
                // `->` is the material conditional: the same world set as `~l | r`.
                Ok(l.proposition(space)?.implies(&r.proposition(space)?))
            }
        }
    }

    /// Truth value of this formula in a single world, evaluated directly.
    /// Independent of [`Formula::proposition`]; used as a cross-check.
    pub fn holds_in_world(&self, space: &Arc<WorldSpace>, world: u32) -> Result<bool> {
        match self {
            Formula::True => Ok(true),
            Formula::False => Ok(false),
            Formula::Atom(name, position) => {
                let index = space.atom_index(name).ok_or_else(|| Error::UnknownAtom {
                    name: name.clone(),
                    position: *position,
                })?;
                Ok(space.world_satisfies(world, index))
            }
            Formula::Not(f) => Ok(!f.holds_in_world(space, world)?),
            Formula::And(l, r) => {
                Ok(l.holds_in_world(space, world)? && r.holds_in_world(space, world)?)
            }
            Formula::Or(l, r) => {
                Ok(l.holds_in_world(space, world)? || r.holds_in_world(space, world)?)
            }
            Formula::Implies(l, r) => {
                Ok(!l.holds_in_world(space, world)? || r.holds_in_world(space, world)?)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Fully parenthesised; parse(to_string) round-trips.
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Atom(name, _) => write!(f, "{name}"),
            Formula::Not(inner) => write!(f, "~({inner})"),
            Formula::And(l, r) => write!(f, "({l} & {r})"),
            Formula::Or(l, r) => write!(f, "({l} | {r})"),
            Formula::Implies(l, r) => write!(f, "({l} -> {r})"),
        }
    }
}

/// Parse `text` and return its world set over `space`.
pub fn parse_formula(text: &str, space: &Arc<WorldSpace>) -> Result<Proposition> {
    Formula::parse(text)?.proposition(space)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Tilde,
    Amp,
    Pipe,
    Arrow,
    LParen,
    RParen,
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        Parser {
            tokens: Vec::new(),
            cursor: 0,
            end: text.len(),
        }
        .tokenize(text)
    }

    fn tokenize(mut self, text: &str) -> Parser {
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\r' | '\n' => i += 1,
                '~' => {
                    self.tokens.push((Token::Tilde, i));
                    i += 1;
                }
                '&' => {
                    self.tokens.push((Token::Amp, i));
                    i += 1;
                }
                '|' => {
                    self.tokens.push((Token::Pipe, i));
                    i += 1;
                }
                '(' => {
                    self.tokens.push((Token::LParen, i));
                    i += 1;
                }
                ')' => {
                    self.tokens.push((Token::RParen, i));
                    i += 1;
                }
                '-' => {
                    if bytes.get(i + 1) == Some(&b'>') {
                        self.tokens.push((Token::Arrow, i));
                        i += 2;
                    } else {
                        // Report at the dash; parse() surfaces it as unexpected.
                        self.tokens.push((Token::Ident("-".into()), i));
                        i += 1;
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len() {
                        let c = bytes[i] as char;
                        if c.is_ascii_alphanumeric() || c == '_' {
                            i += 1;
                        } else {
                            break;
                        }
                    }
                    self.tokens.push((Token::Ident(text[start..i].into()), start));
                }
                other => {
                    self.tokens.push((Token::Ident(other.to_string()), i));
                    i += 1;
                }
            }
        }
        self
    }

    fn parse(mut self) -> Result<Formula> {
        if self.tokens.is_empty() {
            return Err(Error::Syntax {
                position: 0,
                message: "empty formula".into(),
            });
        }
        let formula = self.implication()?;
        if let Some((token, position)) = self.peek() {
            return Err(Error::Syntax {
                position,
                message: format!("unexpected {}", describe(&token)),
            });
        }
        Ok(formula)
    }

    fn implication(&mut self) -> Result<Formula> {
        let left = self.disjunction()?;
        if self.eat(&Token::Arrow) {
            let right = self.implication()?;
            return Ok(Formula::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut left = self.conjunction()?;
        while self.eat(&Token::Pipe) {
            let right = self.conjunction()?;
            left = Formula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut left = self.negation()?;
        while self.eat(&Token::Amp) {
            let right = self.negation()?;
            left = Formula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn negation(&mut self) -> Result<Formula> {
        if self.eat(&Token::Tilde) {
            return Ok(Formula::Not(Box::new(self.negation()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        match self.next() {
            Some((Token::Ident(name), position)) => match name.as_str() {
                "true" => Ok(Formula::True),
                "false" => Ok(Formula::False),
                _ => {
                    crate::space::validate_atom_name(&name).map_err(|_| Error::Syntax {
                        position,
                        message: format!("unexpected `{name}`"),
                    })?;
                    Ok(Formula::Atom(name, position))
                }
            },
            Some((Token::LParen, position)) => {
                let inner = self.implication()?;
                if !self.eat(&Token::RParen) {
                    return Err(Error::Syntax {
                        position,
                        message: "unclosed parenthesis".into(),
                    });
                }
                Ok(inner)
            }
            Some((token, position)) => Err(Error::Syntax {
                position,
                message: format!("unexpected {}", describe(&token)),
            }),
            None => Err(Error::Syntax {
                position: self.end,
                message: "unexpected end of formula".into(),
            }),
        }
    }

    fn peek(&self) -> Option<(Token, usize)> {
        self.tokens.get(self.cursor).cloned()
    }

    fn next(&mut self) -> Option<(Token, usize)> {
        let item = self.tokens.get(self.cursor).cloned();
        if item.is_some() {
            self.cursor += 1;
        }
        item
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.tokens.get(self.cursor).map(|(t, _)| t) == Some(token) {
            self.cursor += 1;
            true
        } else {
            false
        }
    }
}

fn describe(token: &Token) -> String {
    match token {
        Token::Ident(name) => format!("`{name}`"),
        Token::Tilde => "`~`".into(),
        Token::Amp => "`&`".into(),
        Token::Pipe => "`|`".into(),
        Token::Arrow => "`->`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space2() -> Arc<WorldSpace> {
        WorldSpace::new(&["a", "b"]).unwrap()
    }

    #[test]
    fn conjunction_with_negation() {
        let s = space2();
        let p = parse_formula("a & ~b", &s).unwrap();
        assert_eq!(p.worlds().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn disjunction_with_negation() {
        let s = space2();
        let p = parse_formula("b | ~a", &s).unwrap();
        assert_eq!(p.world_count(), 3);
        assert!(!p.contains(1));
    }

    #[test]
    fn arrow_is_material_conditional() {
        let s = space2();
        assert_eq!(
            parse_formula("a -> b", &s).unwrap(),
            parse_formula("~a | b", &s).unwrap()
        );
    }

    #[test]
    fn arrow_is_right_associative() {
        let s = WorldSpace::new(&["a", "b", "c"]).unwrap();
        assert_eq!(
            parse_formula("a -> b -> c", &s).unwrap(),
            parse_formula("a -> (b -> c)", &s).unwrap()
        );
        assert_ne!(
            parse_formula("a -> b -> c", &s).unwrap(),
            parse_formula("(a -> b) -> c", &s).unwrap()
        );
    }

    #[test]
    fn precedence_tilde_amp_pipe_arrow() {
        let s = WorldSpace::new(&["a", "b", "c"]).unwrap();
        assert_eq!(
            parse_formula("~a & b | c -> a", &s).unwrap(),
            parse_formula("(((~a) & b) | c) -> a", &s).unwrap()
        );
    }

    #[test]
    fn constants() {
        let s = space2();
        assert_eq!(parse_formula("true", &s).unwrap().world_count(), 4);
        assert!(parse_formula("false", &s).unwrap().is_empty());
        assert_eq!(
            parse_formula("a & false", &s).unwrap(),
            Proposition::bottom(&s)
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match Formula::parse("a & (b | ").unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 9),
            other => panic!("unexpected error {other:?}"),
        }
        match Formula::parse("a &@ b").unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 3),
            other => panic!("unexpected error {other:?}"),
        }
        match Formula::parse("(a | b").unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_atoms_are_reported_with_position() {
        let s = space2();
        match parse_formula("a & nope", &s).unwrap_err() {
            Error::UnknownAtom { name, position } => {
                assert_eq!(name, "nope");
                assert_eq!(position, 4);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn set_algebra_matches_per_world_evaluation() {
        let s = WorldSpace::new(&["a", "b", "c"]).unwrap();
        for text in [
            "a",
            "~a",
            "a & b | c",
            "a -> b -> c",
            "~(a | b) & (c -> a)",
            "true -> a",
            "false | ~c",
        ] {
            let formula = Formula::parse(text).unwrap();
            let prop = formula.proposition(&s).unwrap();
            for world in 0..s.world_count() {
                assert_eq!(
                    prop.contains(world),
                    formula.holds_in_world(&s, world).unwrap(),
                    "world {world} of `{text}`"
                );
            }
        }
    }
}
