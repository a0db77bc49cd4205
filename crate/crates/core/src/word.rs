//! Words over the three-letter alphabet `{a, b, c}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `letter` repeated `count` times.
    pub fn repeat(letter: Letter, count: usize) -> Self {
        Self {
            letters: vec![letter; count],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            letters: self.letters[range].to_vec(),
        }
    }

    /// True iff `factor` occurs as a contiguous block of `self`.
    pub fn contains_factor(&self, factor: &Word) -> Result<bool> {
        if factor.is_empty() {
            return Err(Error::InvalidInput("factor must be nonempty".into()));
        }
        Ok(self
            .letters
            .windows(factor.len())
            .any(|w| w == factor.letters.as_slice()))
    }

    pub fn avoids_factor(&self, factor: &Word) -> Result<bool> {
        self.contains_factor(factor).map(|c| !c)
    }

    /// Whether `self` has the shape `a^i c u a c^j`.
    pub fn has_acuac_form(&self) -> bool {
        let first_non_a = self.letters.iter().position(|&l| l != Letter::A);
        let last_non_c = self.letters.iter().rposition(|&l| l != Letter::C);
        match (first_non_a, last_non_c) {
            (Some(p), Some(q)) => {
                self.letters[p] == Letter::C && self.letters[q] == Letter::A && p < q
            }
            _ => false,
        }
    }
}

/// All `3^n` words of length `n`, in lexicographic order (`a < b < c`).
pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut letters = vec![Letter::A; n];
        for slot in letters.iter_mut().rev() {
            *slot = Letter::ALL[idx % 3];
            idx /= 3;
        }
        Word { letters }
    })
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::InvalidInput(format!("letter {c:?} not in {{a,b,c}}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}
