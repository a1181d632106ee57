use alloc::vec::Vec;
use core::fmt;

use crate::group::{CayleyGroup, ElementId};

/// A freely reduced word: `(generator index, nonzero exponent)` syllables
/// with no two adjacent syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(index: usize) -> Self {
        Word { syllables: alloc::vec![(index, 1)] }
    }

    /// Builds a word from arbitrary syllables, reducing freely.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(syllables: I) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in syllables {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut out = self.syllables.clone();
        for &(g, e) in &other.syllables {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    /// `w^k`, reduced.
    pub fn pow(&self, k: i64) -> Self {
        if let [(g, e)] = self.syllables[..] {
            return Word::from_syllables([(g, e * k)]);
        }
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut out = Word::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                out = out.concat(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.concat(&base);
            }
        }
        out
    }

    /// Expands into single letters `(generator, inverted)`.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| core::iter::repeat_n((g, e < 0), e.unsigned_abs() as usize))
    }

    /// Formats with the given generator names, e.g. `a b^-2 a^3`; the
    /// identity prints as `1`.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }

    /// Left-to-right product of `assignment[g]^e` in `group`.
    pub fn evaluate(&self, group: &CayleyGroup, assignment: &[ElementId]) -> ElementId {
        self.syllables.iter().fold(group.identity(), |acc, &(g, e)| group.mul(acc, group.pow(assignment[g], e)))
    }
}

fn push_syllable(out: &mut Vec<(usize, i64)>, g: usize, e: i64) {
    if e == 0 {
        return;
    }
    match out.last_mut() {
        Some((last, exp)) if *last == g => {
            *exp += e;
            if *exp == 0 {
                out.pop();
            }
        }
        _ => out.push((g, e)),
    }
}

struct WordDisplay<'a, S> {
    word: &'a Word,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for WordDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.word.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.names[g].as_ref())?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
