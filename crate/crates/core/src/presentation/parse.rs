//! Recursive-descent parser for `< a, b | a^4 = b^2 = 1, a b a = b >`.
//!
//! ```text
//! presentation := "<" genlist "|" [relation ("," relation)*] ">"
//! genlist      := name ("," name)*
//! relation     := word ("=" word)*
//! word         := term+
//! term         := ("1" | "e" | name | "(" word ")") ["^" integer]
//! ```
//!
//! `⟨` and `⟩` are accepted in place of `<` and `>`.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Presentation, Word};

/// Longest word (in letters) the parser will build.
pub const MAX_WORD_LENGTH: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    /// `position` is a byte offset into the input.
    #[error("syntax error at {position}: expected {expected}, found {found}")]
    Syntax { position: usize, expected: &'static str, found: String },
    #[error("unknown generator {name:?} at {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("presentation has no generators")]
    EmptyGeneratorList,
    #[error("generator {0:?} declared twice")]
    DuplicateGenerator(String),
    #[error("{0:?} is reserved for the identity and cannot be a generator")]
    ReservedGenerator(String),
    #[error("exponent or word length out of range at {0}")]
    ExponentOverflow(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Bar,
    Comma,
    Equals,
    Caret,
    Minus,
    Plus,
    LParen,
    RParen,
    Name(String),
    Int(String),
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Open => f.write_str("'<'"),
            Token::Close => f.write_str("'>'"),
            Token::Bar => f.write_str("'|'"),
            Token::Comma => f.write_str("','"),
            Token::Equals => f.write_str("'='"),
            Token::Caret => f.write_str("'^'"),
            Token::Minus => f.write_str("'-'"),
            Token::Plus => f.write_str("'+'"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
            Token::Name(n) => write!(f, "name {n:?}"),
            Token::Int(n) => write!(f, "integer {n}"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let single = match c {
            '<' | '⟨' => Some(Token::Open),
            '>' | '⟩' => Some(Token::Close),
            '|' => Some(Token::Bar),
            ',' => Some(Token::Comma),
            '=' => Some(Token::Equals),
            '^' => Some(Token::Caret),
            '-' => Some(Token::Minus),
            '+' => Some(Token::Plus),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, pos));
            chars.next();
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !c.is_ascii_alphanumeric() {
                    break;
                }
                name.push(c);
                chars.next();
            }
            out.push((Token::Name(name), pos));
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                digits.push(c);
                chars.next();
            }
            out.push((Token::Int(digits), pos));
        } else {
            return Err(ParseError::Syntax {
                position: pos,
                expected: "a token",
                found: alloc::format!("character {c:?}"),
            });
        }
    }
    out.push((Token::End, text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    at: usize,
    generators: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].0
    }

    fn position(&self) -> usize {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.at].clone();
        if t.0 != Token::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax { position: self.position(), expected, found: alloc::format!("{}", self.peek()) }
    }

    fn expect(&mut self, tok: Token, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn presentation(&mut self) -> Result<Presentation, ParseError> {
        self.expect(Token::Open, "'<'")?;
        if matches!(self.peek(), Token::Bar) {
            return Err(ParseError::EmptyGeneratorList);
        }
        loop {
            match self.peek().clone() {
                Token::Name(name) => {
                    self.bump();
                    if name == "e" {
                        return Err(ParseError::ReservedGenerator(name));
                    }
                    if self.generators.contains(&name) {
                        return Err(ParseError::DuplicateGenerator(name));
                    }
                    self.generators.push(name);
                }
                Token::Int(n) if n == "1" => return Err(ParseError::ReservedGenerator(n)),
                _ => return Err(self.unexpected("generator name")),
            }
            match self.peek() {
                Token::Comma => {
                    self.bump();
                }
                Token::Bar => break,
                _ => return Err(self.unexpected("',' or '|'")),
            }
        }
        self.expect(Token::Bar, "'|'")?;

        let mut relators = Vec::new();
        if !matches!(self.peek(), Token::Close) {
            loop {
                self.relation(&mut relators)?;
                match self.peek() {
                    Token::Comma => {
                        self.bump();
                    }
                    Token::Close => break,
                    _ => return Err(self.unexpected("',' or '>'")),
                }
            }
        }
        self.expect(Token::Close, "'>'")?;
        self.expect(Token::End, "end of input")?;
        Ok(Presentation { generators: core::mem::take(&mut self.generators), relators })
    }

    /// `u = v = w` contributes `u v^-1` and `v w^-1`; a bare word is a relator.
    fn relation(&mut self, relators: &mut Vec<Word>) -> Result<(), ParseError> {
        let mut prev = self.word()?;
        if !matches!(self.peek(), Token::Equals) {
            relators.push(prev);
            return Ok(());
        }
        while matches!(self.peek(), Token::Equals) {
            self.bump();
            let next = self.word()?;
            relators.push(prev.concat(&next.inverse()));
            prev = next;
        }
        Ok(())
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut word = Word::identity();
        let mut any = false;
        loop {
            let atom = match self.peek().clone() {
                Token::Name(name) => {
                    let position = self.position();
                    self.bump();
                    if name == "e" {
                        Word::identity()
                    } else {
                        let index = self
                            .generators
                            .iter()
                            .position(|g| *g == name)
                            .ok_or(ParseError::UnknownGenerator { name, position })?;
                        Word::generator(index)
                    }
                }
                Token::Int(n) if n == "1" => {
                    self.bump();
                    Word::identity()
                }
                Token::LParen => {
                    self.bump();
                    let inner = self.word()?;
                    self.expect(Token::RParen, "')'")?;
                    inner
                }
                _ if any => break,
                _ => return Err(self.unexpected("a word")),
            };
            any = true;
            let atom = if matches!(self.peek(), Token::Caret) {
                self.bump();
                let position = self.position();
                let k = self.exponent()?;
                if atom.length().saturating_mul(k.unsigned_abs()) > MAX_WORD_LENGTH {
                    return Err(ParseError::ExponentOverflow(position));
                }
                atom.pow(k)
            } else {
                atom
            };
            word = word.concat(&atom);
            if word.length() > MAX_WORD_LENGTH {
                return Err(ParseError::ExponentOverflow(self.position()));
            }
        }
        Ok(word)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = match self.peek() {
            Token::Minus => {
                self.bump();
                true
            }
            Token::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let position = self.position();
        match self.peek().clone() {
            Token::Int(digits) => {
                self.bump();
                let value: i64 = digits.parse().map_err(|_| ParseError::ExponentOverflow(position))?;
                Ok(if negative { -value } else { value })
            }
            _ => Err(self.unexpected("integer exponent")),
        }
    }
}

pub(super) fn parse(text: &str) -> Result<Presentation, ParseError> {
    let tokens = tokenize(text)?;
    Parser { tokens, at: 0, generators: Vec::new() }.presentation()
}

pub(super) fn check_name(name: &str) -> Result<(), ParseError> {
    let mut chars = name.chars();
    let valid = chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric());
    if !valid {
        return Err(ParseError::Syntax { position: 0, expected: "generator name", found: name.to_owned() });
    }
    if name == "e" {
        return Err(ParseError::ReservedGenerator(name.to_owned()));
    }
    Ok(())
}
