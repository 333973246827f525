//! Compiled patterns: the KMP failure table and the border structure
//! derived from it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::Word;

/// A non-empty word together with its border structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    word: Word,
    failure: Vec<usize>,
    border_lengths: BTreeSet<usize>,
    proper_borders: BTreeSet<Word>,
}

/// `failure[i]` is the length of the longest proper border of `w[..=i]`.
pub fn failure_table(w: &[u8]) -> Vec<usize> {
    let mut failure = vec![0; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = failure[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        failure[i] = k;
    }
    failure
}

/// Border lengths of `w` as a bitmask (bit `i` set iff `i ∈ b(w)`), for `|w| < 64`.
pub fn border_mask(w: &[u8], failure: &[usize]) -> u64 {
    let mut mask = 0u64;
    let mut len = w.len();
    while len > 0 {
        mask |= 1 << len;
        len = failure[len - 1];
    }
    mask
}

impl Pattern {
    pub fn compile(word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let failure = failure_table(word.symbols());
        let mut border_lengths = BTreeSet::new();
        let mut len = word.len();
        while len > 0 {
            border_lengths.insert(len);
            len = failure[len - 1];
        }
        let proper_borders = border_lengths
            .iter()
            .filter(|&&i| i != word.len())
            .map(|&i| word.prefix(i))
            .collect();
        Ok(Pattern {
            word,
            failure,
            border_lengths,
            proper_borders,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn failure(&self) -> &[usize] {
        &self.failure
    }

    /// `b(p)`; always contains `|p|`.
    pub fn border_lengths(&self) -> &BTreeSet<usize> {
        &self.border_lengths
    }

    pub fn proper_borders(&self) -> &BTreeSet<Word> {
        &self.proper_borders
    }

    pub fn is_borderless(&self) -> bool {
        self.proper_borders.is_empty()
    }

    /// KMP transition from match state `state` (symbols matched so far) on `symbol`.
    /// Returns a value in `0..=len`; `len` means a full match.
    pub fn step(&self, state: usize, symbol: u8) -> usize {
        let p = self.word.symbols();
        let mut k = state;
        if k == p.len() {
            k = self.failure[k - 1];
        }
        loop {
            if p[k] == symbol {
                return k + 1;
            }
            if k == 0 {
                return 0;
            }
            k = self.failure[k - 1];
        }
    }

    /// All start indices of (possibly overlapping) occurrences in `w`, ascending.
    pub fn find_in(&self, w: &Word) -> Vec<usize> {
        let mut out = Vec::new();
        let mut state = 0;
        for (i, &s) in w.symbols().iter().enumerate() {
            state = self.step(state, s);
            if state == self.len() {
                out.push(i + 1 - self.len());
            }
        }
        out
    }

    pub fn occurs_in(&self, w: &Word) -> bool {
        self.first_in(w).is_some()
    }

    pub fn first_in(&self, w: &Word) -> Option<usize> {
        let mut state = 0;
        for (i, &s) in w.symbols().iter().enumerate() {
            state = self.step(state, s);
            if state == self.len() {
                return Some(i + 1 - self.len());
            }
        }
        None
    }

    pub fn last_in(&self, w: &Word) -> Option<usize> {
        self.find_in(w).last().copied()
    }
}

pub fn compile_pattern(w: Word) -> Result<Pattern> {
    Pattern::compile(w)
}

pub fn proper_borders(p: &Pattern) -> &BTreeSet<Word> {
    p.proper_borders()
}

pub fn find_occurrences(w: &Word, p: &Pattern) -> Vec<usize> {
    p.find_in(w)
}
