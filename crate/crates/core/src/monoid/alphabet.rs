use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A variable of the alphabet.
///
/// The derived ordering is the base order used everywhere in the crate:
/// every commuting variable precedes every noncommuting one, and within each
/// kind variables are ordered by declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Commuting(u16),
    Free(u16),
}

impl Letter {
    pub fn is_commuting(self) -> bool {
        matches!(self, Letter::Commuting(_))
    }

    pub fn index(self) -> usize {
        match self {
            Letter::Commuting(i) | Letter::Free(i) => i as usize,
        }
    }
}

/// The finite variable sets: commuting variables `Y` and noncommuting `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    commuting: Vec<String>,
    noncommuting: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        commuting: impl IntoIterator<Item = S>,
        noncommuting: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let commuting: Vec<String> = commuting.into_iter().map(Into::into).collect();
        let noncommuting: Vec<String> = noncommuting.into_iter().map(Into::into).collect();
        if commuting.len() > u16::MAX as usize || noncommuting.len() > u16::MAX as usize {
            return Err(Error::Config("too many variables".into()));
        }
        let mut seen = HashSet::new();
        for name in commuting.iter().chain(&noncommuting) {
            if !valid_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Alphabet {
            commuting,
            noncommuting,
        })
    }

    /// Noncommuting variables `x1..x{nx}` and commuting variables `y1..y{ny}`.
    pub fn standard(nx: usize, ny: usize) -> Self {
        Alphabet::new(
            (1..=ny).map(|i| format!("y{i}")),
            (1..=nx).map(|i| format!("x{i}")),
        )
        .expect("standard names are distinct")
    }

    pub fn num_commuting(&self) -> usize {
        self.commuting.len()
    }

    pub fn num_noncommuting(&self) -> usize {
        self.noncommuting.len()
    }

    pub fn num_letters(&self) -> usize {
        self.commuting.len() + self.noncommuting.len()
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        if let Some(i) = self.commuting.iter().position(|n| n == name) {
            return Some(Letter::Commuting(i as u16));
        }
        self.noncommuting
            .iter()
            .position(|n| n == name)
            .map(|i| Letter::Free(i as u16))
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::Commuting(i) => (i as usize) < self.commuting.len(),
            Letter::Free(i) => (i as usize) < self.noncommuting.len(),
        }
    }

    /// Name of a letter. Panics if the letter is not in this alphabet.
    pub fn name(&self, letter: Letter) -> &str {
        match letter {
            Letter::Commuting(i) => &self.commuting[i as usize],
            Letter::Free(i) => &self.noncommuting[i as usize],
        }
    }

    /// All letters in base order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.commuting.len())
            .map(|i| Letter::Commuting(i as u16))
            .chain((0..self.noncommuting.len()).map(|i| Letter::Free(i as u16)))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X = {{{}}}, Y = {{{}}}",
            self.noncommuting.join(", "),
            self.commuting.join(", ")
        )
    }
}
