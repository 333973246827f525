//! Words over the ordered alphabet `{0, 1, ..., k-1}`.

use std::fmt;

use crate::error::{Error, Result};

/// Alphabet of `k` symbols `0..k`, ordered by integer value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { size: 2 };

    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > 256 {
            return Err(Error::InvalidAlphabet(size));
        }
        Ok(Alphabet { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, word: &Word) -> bool {
        word.symbols().iter().all(|&s| (s as usize) < self.size)
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        match word.symbols().iter().find(|&&s| s as usize >= self.size) {
            Some(&s) => Err(Error::SymbolOutOfRange {
                symbol: s as usize,
                size: self.size,
            }),
            None => Ok(()),
        }
    }

    /// Parses the textual word format: a digit string when `k <= 10`,
    /// comma-separated integers otherwise. The empty string is `ε`.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let bad = || Error::BadWordSyntax(text.to_string());
        let symbols: Vec<usize> = if self.size <= 10 {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        let mut out = Vec::with_capacity(symbols.len());
        for s in symbols {
            if s >= self.size {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    size: self.size,
                });
            }
            out.push(s as u8);
        }
        Ok(Word::from(out))
    }

    pub fn format(&self, word: &Word) -> String {
        if self.size <= 10 {
            word.symbols()
                .iter()
                .map(|&s| char::from(b'0' + s))
                .collect()
        } else {
            let parts: Vec<String> = word.symbols().iter().map(|s| s.to_string()).collect();
            parts.join(",")
        }
    }

    /// `k^n`, or `None` on overflow.
    pub fn count_words(&self, n: usize) -> Option<u64> {
        (self.size as u64).checked_pow(u32::try_from(n).ok()?)
    }

    /// All words of length `n` in lexicographic order.
    pub fn words(&self, n: usize) -> WordsOfLength {
        WordsOfLength {
            size: self.size as u8,
            current: Some(vec![0; n]),
        }
    }

    /// The word whose base-`k` digits (most significant first) spell `index`.
    pub fn word_at(&self, n: usize, mut index: u64) -> Word {
        let mut symbols = vec![0u8; n];
        for slot in symbols.iter_mut().rev() {
            *slot = (index % self.size as u64) as u8;
            index /= self.size as u64;
        }
        Word::from(symbols)
    }

    /// Inverse of [`Alphabet::word_at`].
    pub fn index_of(&self, word: &Word) -> u64 {
        word.symbols()
            .iter()
            .fold(0u64, |acc, &s| acc * self.size as u64 + s as u64)
    }
}

/// Lexicographic odometer over `Σ^n`.
pub struct WordsOfLength {
    size: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.current.as_mut()?;
        let out = Word::from(current.clone());
        let mut i = current.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < self.size {
                break;
            }
            current[i] = 0;
        }
        Some(out)
    }
}

/// A finite word; the derived ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn permute(&self, sigma: &LetterPermutation) -> Word {
        Word(self.0.iter().map(|&s| sigma.apply(s)).collect())
    }

    /// Overwrites `self[start..start + with.len()]` with `with`.
    pub fn splice(&self, start: usize, with: &Word) -> Word {
        let mut symbols = self.0.clone();
        symbols[start..start + with.len()].copy_from_slice(with.symbols());
        Word(symbols)
    }
}

impl From<Vec<u8>> for Word {
    fn from(symbols: Vec<u8>) -> Self {
        Word(symbols)
    }
}

impl From<&[u8]> for Word {
    fn from(symbols: &[u8]) -> Self {
        Word(symbols.to_vec())
    }
}

impl fmt::Display for Word {
    /// Digits when every symbol is below 10, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s < 10) {
            for &s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Reversal of `w`.
pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

/// `σ(w)`, symbol by symbol.
pub fn permute_letters(w: &Word, sigma: &LetterPermutation) -> Word {
    w.permute(sigma)
}

/// A bijection on the symbols of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterPermutation {
    mapping: Vec<u8>,
}

impl LetterPermutation {
    pub fn new(mapping: Vec<u8>) -> Result<Self> {
        let size = mapping.len();
        if size == 0 || size > 256 {
            return Err(Error::InvalidPermutation(size));
        }
        let mut seen = vec![false; size];
        for &m in &mapping {
            let m = m as usize;
            if m >= size || seen[m] {
                return Err(Error::InvalidPermutation(size));
            }
            seen[m] = true;
        }
        Ok(LetterPermutation { mapping })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        LetterPermutation {
            mapping: (0..alphabet.size()).map(|s| s as u8).collect(),
        }
    }

    /// Exchanges symbols `a` and `b`.
    pub fn transposition(alphabet: Alphabet, a: u8, b: u8) -> Result<Self> {
        let mut mapping: Vec<u8> = (0..alphabet.size()).map(|s| s as u8).collect();
        if a as usize >= mapping.len() || b as usize >= mapping.len() {
            return Err(Error::InvalidPermutation(mapping.len()));
        }
        mapping.swap(a as usize, b as usize);
        Ok(LetterPermutation { mapping })
    }

    /// Adjacent transpositions `(i i+1)`; they generate the full symmetric group.
    pub fn generators(alphabet: Alphabet) -> Vec<Self> {
        (1..alphabet.size())
            .map(|i| Self::transposition(alphabet, (i - 1) as u8, i as u8).unwrap())
            .collect()
    }

    /// Every permutation of the alphabet, identity first.
    pub fn all(alphabet: Alphabet) -> Vec<Self> {
        fn extend(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<LetterPermutation>) {
            if prefix.len() == used.len() {
                out.push(LetterPermutation {
                    mapping: prefix.clone(),
                });
                return;
            }
            for s in 0..used.len() {
                if !used[s] {
                    used[s] = true;
                    prefix.push(s as u8);
                    extend(prefix, used, out);
                    prefix.pop();
                    used[s] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), &mut vec![false; alphabet.size()], &mut out);
        out
    }

    pub fn apply(&self, symbol: u8) -> u8 {
        self.mapping[symbol as usize]
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0u8; self.mapping.len()];
        for (from, &to) in self.mapping.iter().enumerate() {
            mapping[to as usize] = from as u8;
        }
        LetterPermutation { mapping }
    }

    pub fn mapping(&self) -> &[u8] {
        &self.mapping
    }
}
