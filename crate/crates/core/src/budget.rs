use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::word::{Alphabet, Word};

/// Upper bound on the number of words an exhaustive enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 24);

    /// Environment variable the CLI reads to override [`Budget::DEFAULT`].
    pub const ENV_VAR: &'static str = "AVOIDANCE_BUDGET";

    /// Fails unless `k^n` words fit; returns `k^n`.
    pub fn admit(&self, alphabet: Alphabet, n: usize) -> Result<u64> {
        match alphabet.count_words(n) {
            Some(c) if c <= self.0 => Ok(c),
            Some(c) => Err(Error::BudgetExceeded {
                required: c.to_string(),
                budget: self.0,
            }),
            None => Err(Error::BudgetExceeded {
                required: format!("{}^{}", alphabet.size(), n),
                budget: self.0,
            }),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// `A_n(p)` in lexicographic order.
pub fn avoiders(p: &Pattern, alphabet: Alphabet, n: usize, budget: Budget) -> Result<Vec<Word>> {
    let total = budget.admit(alphabet, n)?;
    Ok((0..total)
        .into_par_iter()
        .map(|i| alphabet.word_at(n, i))
        .filter(|w| !p.occurs_in(w))
        .collect())
}

/// `|A_n(p)|` by scanning every word of length `n`.
pub fn count_avoiders(p: &Pattern, alphabet: Alphabet, n: usize, budget: Budget) -> Result<u64> {
    let total = budget.admit(alphabet, n)?;
    Ok((0..total)
        .into_par_iter()
        .filter(|&i| !p.occurs_in(&alphabet.word_at(n, i)))
        .count() as u64)
}
