//! Group presentations: parsing, free reduction and coset enumeration.

mod parse;
mod todd_coxeter;
mod word;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use parse::{ParseError, MAX_WORD_LENGTH};
pub use todd_coxeter::{todd_coxeter, EnumerationError, Realization, DEFAULT_MAX_COSETS};
pub use word::Word;

/// Generators plus relators; a relation `u = v` is stored as `u v^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, ParseError> {
        if generators.is_empty() {
            return Err(ParseError::EmptyGeneratorList);
        }
        for (i, g) in generators.iter().enumerate() {
            parse::check_name(g)?;
            if generators[..i].contains(g) {
                return Err(ParseError::DuplicateGenerator(g.clone()));
            }
        }
        if let Some(bad) = relators.iter().filter_map(Word::max_generator).find(|&g| g >= generators.len()) {
            return Err(ParseError::UnknownGenerator { name: alloc::format!("#{bad}"), position: 0 });
        }
        Ok(Presentation { generators, relators })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse::parse(text)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

/// Canonical ASCII form, e.g. `< a, b | a^4, b^2, a b a b^-1 >`.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("< ")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(g)?;
        }
        f.write_str(" |")?;
        for (i, r) in self.relators.iter().enumerate() {
            f.write_str(if i > 0 { ", " } else { " " })?;
            write!(f, "{}", r.display(&self.generators))?;
        }
        f.write_str(" >")
    }
}

impl core::str::FromStr for Presentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Presentation::parse(s)
    }
}
