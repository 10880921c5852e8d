//! Finite alphabets and words over them.

use std::fmt;

use crate::error::{Error, Result};

/// A letter, stored as its position in the owning [`Alphabet`].
pub type Letter = usize;

/// An ordered, nonempty set of distinct single-character letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let mut out = Vec::new();
        for c in letters {
            if c.is_whitespace() || c.is_control() || c == '#' {
                return Err(Error::InvalidLetter(c));
            }
            if out.contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet { letters: out })
    }

    /// Builds an alphabet from the characters of `s`, in order.
    pub fn from_chars(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.letters[letter]
    }

    pub fn index_of(&self, c: char) -> Result<Letter> {
        self.letters
            .iter()
            .position(|&x| x == c)
            .ok_or(Error::UnknownLetter(c))
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    /// Parses `s` as a word over this alphabet.
    pub fn word(&self, s: &str) -> Result<Word> {
        s.chars()
            .map(|c| self.index_of(c))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Maps a set of characters to a membership mask over this alphabet.
    pub fn subset_mask(&self, chars: &str) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for c in chars.chars() {
            mask[self.index_of(c)?] = true;
        }
        Ok(mask)
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for letter in 0..self.len() {
                    let mut v = w.clone();
                    v.0.push(letter);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn render(&self, word: &Word) -> String {
        word.0.iter().map(|&l| self.letters[l]).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite word, as a sequence of letter positions. The empty word is `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}
