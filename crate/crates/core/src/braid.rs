//! Braid words, their text form, and the moves that preserve the closure.
//!
//! A word `w = s_1 s_2 ... s_L` is drawn up the page reading right to left:
//! the last letter is the bottom crossing. Everything that walks a diagram
//! (permutations, states, module actions) therefore processes letters from
//! last to first.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn value(self) -> i64 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }
}

/// `sigma_index` or its inverse. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: CrossingSign,
}

impl BraidLetter {
    pub fn new(index: usize, sign: CrossingSign) -> Self {
        Self { index, sign }
    }

    pub fn positive(index: usize) -> Self {
        Self::new(index, CrossingSign::Positive)
    }

    pub fn negative(index: usize) -> Self {
        Self::new(index, CrossingSign::Negative)
    }

    pub fn inverse(self) -> Self {
        Self::new(self.index, self.sign.flip())
    }

    /// Signed integer form: `k` for `sigma_k`, `-k` for its inverse.
    pub fn to_signed(self) -> i64 {
        self.sign.value() * self.index as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word from signed generator indices, inferring the strand count.
    pub fn from_signed(letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&k| letter_from_signed(k).ok_or_else(|| Error::InvalidToken(k.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let strands = 1 + letters.iter().map(|l| l.index).max().unwrap_or(0);
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters on a larger strand count.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }

    /// Concatenation `self * other` (other sits below self in the diagram).
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(strands, letters)
    }

    /// Every letter inverted; the closure is the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }
}

fn letter_from_signed(k: i64) -> Option<BraidLetter> {
    match k {
        0 => None,
        k if k > 0 => Some(BraidLetter::positive(k as usize)),
        k => Some(BraidLetter::negative(k.unsigned_abs() as usize)),
    }
}

/// Parses whitespace- or comma-separated nonzero integers; `k` means
/// `sigma_|k|` with the sign of `k`.
///
/// Without an explicit strand count the word lives on `1 + max |k|` strands
/// (one strand for the empty word).
pub fn parse_braid_word(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let letters = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .ok()
                .and_then(letter_from_signed)
                .ok_or_else(|| Error::InvalidToken(tok.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let strands = strands.unwrap_or_else(|| 1 + letters.iter().map(|l| l.index).max().unwrap_or(0));
    BraidWord::new(strands, letters)
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid_word(s, None)
    }
}

/// Canonical text form: signed integers separated by single spaces.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.to_signed())?;
        }
        Ok(())
    }
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters.iter().map(|l| l.sign.value()).sum()
}

/// A permutation of strand positions, stored 0-based.
///
/// `images[p]` is the top position of the strand that enters the diagram at
/// bottom position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Permutation) -> Permutation {
        Permutation {
            images: first.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
            }
        }
        cycles
    }
}

/// One-line notation, 1-based: `(2,1)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str(")")
    }
}

/// Permutation traced bottom to top, ignoring crossing signs.
///
/// With this convention `underlying_permutation(w * w')` equals
/// `underlying_permutation(w).compose(&underlying_permutation(w'))`.
pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    // position -> strand id, walking upward
    let mut strand_at: Vec<usize> = (0..w.strands).collect();
    for l in w.letters.iter().rev() {
        strand_at.swap(l.index - 1, l.index);
    }
    let mut images = vec![0; w.strands];
    for (pos, &strand) in strand_at.iter().enumerate() {
        images[strand] = pos;
    }
    Permutation { images }
}

/// Number of components of the closure.
pub fn component_count(w: &BraidWord) -> usize {
    underlying_permutation(w).cycle_count()
}

/// `g w g^-1`.
pub fn conjugate(w: &BraidWord, g: BraidLetter) -> Result<BraidWord> {
    let mut letters = Vec::with_capacity(w.len() + 2);
    letters.push(g);
    letters.extend_from_slice(&w.letters);
    letters.push(g.inverse());
    BraidWord::new(w.strands, letters)
}

/// `w sigma_n^{±1}` on `n + 1` strands.
pub fn markov_stabilize(w: &BraidWord, sign: CrossingSign) -> BraidWord {
    let mut letters = w.letters.clone();
    letters.push(BraidLetter::new(w.strands, sign));
    BraidWord {
        strands: w.strands + 1,
        letters,
    }
}

/// A local rewrite that preserves the braid (not just the closure).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rewrite {
    /// `s_r s_t -> s_t s_r` for `|r - t| > 1`, at letters `at, at+1`.
    FarCommute { at: usize },
    /// `s_r s_{r±1} s_r -> s_{r±1} s_r s_{r±1}` (all letters of one sign).
    BraidMove { at: usize },
    /// `s s^-1 -> ()`.
    Cancel { at: usize },
    /// `() -> l l^-1` inserted before letter `at`.
    Insert { at: usize, letter: BraidLetter },
}

/// All far-commutation, braid-move, and cancellation sites of `w`.
/// Insertions are always possible and are not listed.
pub fn rewrite_sites(w: &BraidWord) -> Vec<Rewrite> {
    let l = &w.letters;
    let mut out = Vec::new();
    for at in 0..l.len().saturating_sub(1) {
        let (a, b) = (l[at], l[at + 1]);
        if a.index.abs_diff(b.index) > 1 {
            out.push(Rewrite::FarCommute { at });
        }
        if a == b.inverse() {
            out.push(Rewrite::Cancel { at });
        }
        if at + 2 < l.len() {
            let c = l[at + 2];
            if a == c && a.sign == b.sign && a.index.abs_diff(b.index) == 1 {
                out.push(Rewrite::BraidMove { at });
            }
        }
    }
    out
}

pub fn apply_rewrite(w: &BraidWord, rewrite: Rewrite) -> Result<BraidWord> {
    let mut letters = w.letters.clone();
    let invalid = || Error::InvalidToken(format!("rewrite {rewrite:?} does not apply to `{w}`"));
    match rewrite {
        Rewrite::FarCommute { at } => {
            if at + 1 >= letters.len() || letters[at].index.abs_diff(letters[at + 1].index) <= 1 {
                return Err(invalid());
            }
            letters.swap(at, at + 1);
        }
        Rewrite::BraidMove { at } => {
            if !rewrite_sites(w).contains(&rewrite) {
                return Err(invalid());
            }
            let (a, b) = (letters[at], letters[at + 1]);
            letters[at] = b;
            letters[at + 1] = a;
            letters[at + 2] = b;
        }
        Rewrite::Cancel { at } => {
            if at + 1 >= letters.len() || letters[at] != letters[at + 1].inverse() {
                return Err(invalid());
            }
            letters.drain(at..at + 2);
        }
        Rewrite::Insert { at, letter } => {
            if at > letters.len() {
                return Err(invalid());
            }
            letters.splice(at..at, [letter, letter.inverse()]);
        }
    }
    BraidWord::new(w.strands, letters)
}
