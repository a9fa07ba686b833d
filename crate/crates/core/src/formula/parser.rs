//! Recursive-descent parser for both formula strata.
//!
//! Radical grammar, loosest first:
//!
//! ```text
//! radical := iff
//! iff     := imp ("<->" imp)*
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | atom | "(" radical ")"
//! ```
//!
//! Assertive grammar:
//!
//! ```text
//! assertive := e
//! e  := c ("E" c)*
//! c  := aq ("C" c)?
//! aq := k (("AQ" | "A") k)*
//! k  := n ("K" n)*
//! n  := "N" n | "|-" (atom | "(" radical ")") | "(" assertive ")"
//! ```
//!
//! Error offsets are 1-based character columns; end of input sits one column
//! past the last character.

use std::fmt;

use super::{Atom, AssertiveFormula, Connective, RadicalFormula};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty formula")]
    Empty,
    #[error("unknown token `{token}` at offset {offset}")]
    UnknownToken { token: String, offset: usize },
    #[error("syntax error at offset {offset}: found {found}, expected {}", .expected.join(", "))]
    Syntax {
        offset: usize,
        found: String,
        expected: Vec<&'static str>,
    },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::UnknownToken { offset, .. } | ParseError::Syntax { offset, .. } => {
                Some(*offset)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Turnstile,
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    Keyword(Connective),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Atom(a) => write!(f, "atom `{a}`"),
            Tok::Turnstile => f.write_str("`|-`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::DoubleArrow => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Keyword(c) => write!(f, "`{}`", c.keyword()),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    /// 1-based column.
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let offset = i + 1;
        let next = chars.get(i + 1).copied();
        let (tok, len) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '~' => (Tok::Tilde, 1),
            '&' => (Tok::Amp, 1),
            '|' if next == Some('-') => (Tok::Turnstile, 2),
            '|' => (Tok::Bar, 1),
            '-' if next == Some('>') => (Tok::Arrow, 2),
            '<' if next == Some('-') && chars.get(i + 2) == Some(&'>') => (Tok::DoubleArrow, 3),
            c if c.is_ascii_lowercase() => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || **c == '_')
                    .count();
                let name: String = chars[i..i + len].iter().collect();
                (Tok::Atom(name), len)
            }
            c if c.is_ascii_uppercase() => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                let word: String = chars[i..i + len].iter().collect();
                let kw = match word.as_str() {
                    "N" => Connective::Not,
                    "K" => Connective::And,
                    "A" => Connective::Or,
                    "C" => Connective::Implies,
                    "E" => Connective::Iff,
                    "AQ" => Connective::QuantumOr,
                    _ => {
                        return Err(ParseError::UnknownToken {
                            token: word,
                            offset,
                        })
                    }
                };
                (Tok::Keyword(kw), len)
            }
            _ => {
                // an unknown run ends at whitespace or a known delimiter
                let len = chars[i..]
                    .iter()
                    .take_while(|c| !c.is_whitespace() && !"()~&|".contains(**c))
                    .count()
                    .max(1);
                return Err(ParseError::UnknownToken {
                    token: chars[i..i + len].iter().collect(),
                    offset,
                });
            }
        };
        out.push(Spanned { tok, offset });
        i += len;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        offset: chars.len() + 1,
    });
    Ok(out)
}

const ASSERTIVE_START: &[&str] = &["N", "|-", "("];
const RADICAL_START: &[&str] = &["~", "atom", "("];
const RADICAL_FOLLOW: &[&str] = &["&", "|", "->", "<->"];
const ASSERTIVE_FOLLOW: &[&str] = &["K", "AQ", "A", "C", "E"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        if text.trim().is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let here = &self.toks[self.pos];
        ParseError::Syntax {
            offset: here.offset,
            found: here.tok.to_string(),
            expected: expected.to_vec(),
        }
    }

    fn expect_close(&mut self, follow: &[&'static str]) -> Result<(), ParseError> {
        if self.eat(&Tok::RParen) {
            Ok(())
        } else {
            let mut expected = follow.to_vec();
            expected.push(")");
            Err(self.error(&expected))
        }
    }

    fn expect_eof(&self, follow: &[&'static str]) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            let mut expected = follow.to_vec();
            expected.push("end of input");
            Err(self.error(&expected))
        }
    }

    fn radical(&mut self) -> Result<RadicalFormula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = RadicalFormula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<RadicalFormula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(RadicalFormula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<RadicalFormula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conjunction()?;
            lhs = RadicalFormula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<RadicalFormula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = RadicalFormula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<RadicalFormula, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(RadicalFormula::not(self.unary()?))
            }
            Tok::Atom(name) => {
                self.bump();
                Ok(RadicalFormula::Atom(atom(name)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.radical()?;
                self.expect_close(RADICAL_FOLLOW)?;
                Ok(inner)
            }
            _ => Err(self.error(RADICAL_START)),
        }
    }

    fn assertive(&mut self) -> Result<AssertiveFormula, ParseError> {
        let mut lhs = self.pragmatic_implication()?;
        while self.eat(&Tok::Keyword(Connective::Iff)) {
            let rhs = self.pragmatic_implication()?;
            lhs = AssertiveFormula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn pragmatic_implication(&mut self) -> Result<AssertiveFormula, ParseError> {
        let lhs = self.pragmatic_disjunction()?;
        if self.eat(&Tok::Keyword(Connective::Implies)) {
            let rhs = self.pragmatic_implication()?;
            return Ok(AssertiveFormula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn pragmatic_disjunction(&mut self) -> Result<AssertiveFormula, ParseError> {
        let mut lhs = self.pragmatic_conjunction()?;
        while let Tok::Keyword(conn @ (Connective::Or | Connective::QuantumOr)) = *self.peek() {
            self.bump();
            let rhs = self.pragmatic_conjunction()?;
            lhs = AssertiveFormula::binary(conn, lhs, rhs);
        }
        Ok(lhs)
    }

    fn pragmatic_conjunction(&mut self) -> Result<AssertiveFormula, ParseError> {
        let mut lhs = self.pragmatic_unary()?;
        while self.eat(&Tok::Keyword(Connective::And)) {
            let rhs = self.pragmatic_unary()?;
            lhs = AssertiveFormula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn pragmatic_unary(&mut self) -> Result<AssertiveFormula, ParseError> {
        match self.peek() {
            Tok::Keyword(Connective::Not) => {
                self.bump();
                Ok(AssertiveFormula::not(self.pragmatic_unary()?))
            }
            Tok::Turnstile => {
                self.bump();
                match self.peek().clone() {
                    Tok::Atom(name) => {
                        self.bump();
                        Ok(AssertiveFormula::Assert(RadicalFormula::Atom(atom(name))))
                    }
                    Tok::LParen => {
                        self.bump();
                        let r = self.radical()?;
                        self.expect_close(RADICAL_FOLLOW)?;
                        Ok(AssertiveFormula::Assert(r))
                    }
                    _ => Err(self.error(&["atom", "("])),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.assertive()?;
                self.expect_close(ASSERTIVE_FOLLOW)?;
                Ok(inner)
            }
            _ => Err(self.error(ASSERTIVE_START)),
        }
    }
}

fn atom(name: String) -> Atom {
    // the lexer only produces names matching the atom pattern
    Atom::new(name).expect("lexer produced an invalid atom")
}

/// Parses an assertive formula.
pub fn parse_assertive(text: &str) -> Result<AssertiveFormula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.assertive()?;
    p.expect_eof(ASSERTIVE_FOLLOW)?;
    Ok(f)
}

/// Parses a radical formula.
pub fn parse_radical(text: &str) -> Result<RadicalFormula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.radical()?;
    p.expect_eof(RADICAL_FOLLOW)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use AssertiveFormula as F;
    use RadicalFormula as R;

    fn p() -> F {
        F::assert_atom("p")
    }

    fn q() -> F {
        F::assert_atom("q")
    }

    #[test]
    fn smallest_assertive() {
        assert_eq!(parse_assertive("|- p").unwrap(), p());
    }

    #[test]
    fn n_binds_tighter_than_k() {
        let expected = F::and(F::not(p()), q());
        assert_eq!(parse_assertive("N(|- p) K (|- q)").unwrap(), expected);
        assert_eq!(parse_assertive("N |- p K |- q").unwrap(), expected);
    }

    #[test]
    fn quantum_or_constructor() {
        assert_eq!(
            parse_assertive("(|- p) AQ (|- q)").unwrap(),
            F::quantum_or(p(), q())
        );
    }

    #[test]
    fn dangling_operator() {
        let err = parse_assertive("|- p K").unwrap_err();
        assert_eq!(err.offset(), Some(7));
        match err {
            ParseError::Syntax {
                found, expected, ..
            } => {
                assert_eq!(found, "end of input");
                assert_eq!(expected, ASSERTIVE_START);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn radical_precedence() {
        assert_eq!(parse_radical("p").unwrap(), R::atom("p"));
        assert_eq!(
            parse_radical("p & (q | ~r)").unwrap(),
            R::and(R::atom("p"), R::or(R::atom("q"), R::not(R::atom("r"))))
        );
        assert_eq!(
            parse_radical("p & q | r").unwrap(),
            R::or(R::and(R::atom("p"), R::atom("q")), R::atom("r"))
        );
        assert_eq!(
            parse_radical("~p | q <-> r -> s").unwrap(),
            R::iff(
                R::or(R::not(R::atom("p")), R::atom("q")),
                R::implies(R::atom("r"), R::atom("s"))
            )
        );
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse_radical("p -> q -> r").unwrap(),
            R::implies(R::atom("p"), R::implies(R::atom("q"), R::atom("r")))
        );
        let r = F::assert_atom("r");
        assert_eq!(
            parse_assertive("|- p C |- q C |- r").unwrap(),
            F::implies(p(), F::implies(q(), r))
        );
    }

    #[test]
    fn binary_ops_left_associative() {
        let r = F::assert_atom("r");
        assert_eq!(
            parse_assertive("|- p K |- q K |- r").unwrap(),
            F::and(F::and(p(), q()), r.clone())
        );
        assert_eq!(
            parse_assertive("|- p AQ |- q A |- r").unwrap(),
            F::or(F::quantum_or(p(), q()), r)
        );
        assert_eq!(
            parse_radical("p <-> q <-> r").unwrap(),
            R::iff(R::iff(R::atom("p"), R::atom("q")), R::atom("r"))
        );
    }

    #[test]
    fn assertive_precedence_table() {
        // N > K > AQ/A > C > E
        let f = parse_assertive("|- p E |- q C |- p AQ |- q K N |- p").unwrap();
        let expected = F::iff(
            p(),
            F::implies(q(), F::quantum_or(p(), F::and(q(), F::not(p())))),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn turnstile_takes_shortest_radical() {
        assert!(parse_assertive("|- p & q").is_err());
        assert_eq!(
            parse_assertive("|- (p & q)").unwrap(),
            F::assert(R::and(R::atom("p"), R::atom("q")))
        );
    }

    #[test]
    fn radical_errors() {
        let err = parse_radical("p ->").unwrap_err();
        assert_eq!(err.offset(), Some(5));
        assert!(matches!(err, ParseError::Syntax { .. }));
        assert!(parse_radical("(p").is_err());
        assert!(parse_radical("p q").is_err());
    }

    #[test]
    fn unknown_tokens() {
        assert_eq!(
            parse_assertive("|- p X |- q").unwrap_err(),
            ParseError::UnknownToken {
                token: "X".into(),
                offset: 6
            }
        );
        assert_eq!(
            parse_radical("p # q").unwrap_err(),
            ParseError::UnknownToken {
                token: "#".into(),
                offset: 3
            }
        );
        assert!(matches!(
            parse_radical("p - q"),
            Err(ParseError::UnknownToken { .. })
        ));
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_assertive("").unwrap_err(), ParseError::Empty);
        assert_eq!(parse_radical("   ").unwrap_err(), ParseError::Empty);
    }

    #[test]
    fn radical_in_assertive_position_fails() {
        assert!(parse_assertive("p").is_err());
        assert!(parse_radical("|- p").is_err());
    }

    #[test]
    fn printed_forms_parse_back() {
        for text in ["(|- p)", "N((|- p))", "((|- p) AQ (|- q))", "(|- ((~p) -> q))"] {
            let f = parse_assertive(text).unwrap();
            assert_eq!(f.to_string(), text);
        }
    }
}
