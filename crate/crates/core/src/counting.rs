//! `|A_n(p)|` by four independent routes, and the avoidant-equivalence test.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::budget::{count_avoiders, Budget};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::poly::{IntPolynomial, RationalGF};
use crate::word::Alphabet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Gf,
    Recurrence,
    Automaton,
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Gf,
        Method::Recurrence,
        Method::Automaton,
        Method::Brute,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Gf => "gf",
            Method::Recurrence => "recurrence",
            Method::Automaton => "automaton",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown counting method {s:?}"))
    }
}

/// `s(0), s(1), ..., s(N)` together with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub counts: Vec<BigUint>,
    pub method: Method,
}

impl CountSeries {
    fn from_signed(values: Vec<BigInt>, method: Method) -> Result<Self> {
        let counts = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.to_biguint().ok_or(Error::NegativeCount(i)))
            .collect::<Result<_>>()?;
        Ok(CountSeries { counts, method })
    }

    /// True when both series have the same values (method tags ignored).
    pub fn same_counts(&self, other: &CountSeries) -> bool {
        self.counts == other.counts
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_string()).collect()
    }
}

/// `B(x) / ((1 − kx)·B(x) + x^l)` with `B(x) = Σ_{i ∈ b(p)} x^{l−i}`.
pub fn avoidance_gf(p: &Pattern, alphabet: Alphabet) -> RationalGF {
    let l = p.len();
    let correlation = p
        .border_lengths()
        .iter()
        .fold(IntPolynomial::zero(), |acc, &i| {
            &acc + &IntPolynomial::monomial(BigInt::one(), l - i)
        });
    let one_minus_kx = IntPolynomial::new(vec![BigInt::one(), -BigInt::from(alphabet.size())]);
    let denominator = &(&one_minus_kx * &correlation) + &IntPolynomial::monomial(BigInt::one(), l);
    RationalGF::new(correlation, denominator).expect("denominator constant term is 1")
}

pub fn gf_series(g: &RationalGF, n: usize) -> Result<CountSeries> {
    CountSeries::from_signed(g.expand(n)?, Method::Gf)
}

/// Applies
/// `s(n) = k·s(n−1) − s(n−l) + Σ_{i ∈ b(p), i ≠ l} (k·s(n+i−l−1) − s(n+i−l))`
/// for `n ≥ 2l`, seeding `s(0..2l)` from the generating function. The window
/// `l..2l` is recomputed by the recurrence and must agree with the seeds.
pub fn recurrence_counts(p: &Pattern, alphabet: Alphabet, n: usize) -> Result<CountSeries> {
    let l = p.len();
    let k = BigInt::from(alphabet.size());
    let seed_len = 2 * l;
    let mut s = avoidance_gf(p, alphabet).expand(seed_len.max(n + 1) - 1)?;
    s.truncate(seed_len.max(n + 1));
    let proper: Vec<usize> = p
        .border_lengths()
        .iter()
        .copied()
        .filter(|&i| i != l)
        .collect();
    let apply = |s: &[BigInt], m: usize| -> BigInt {
        let mut v = &k * &s[m - 1] - &s[m - l];
        for &i in &proper {
            v += &k * &s[m + i - l - 1] - &s[m + i - l];
        }
        v
    };
    for m in l..seed_len {
        if apply(&s, m) != s[m] {
            return Err(Error::RecurrenceMismatch(m));
        }
    }
    for m in seed_len..=n {
        s[m] = apply(&s, m);
    }
    s.truncate(n + 1);
    CountSeries::from_signed(s, Method::Recurrence)
}

/// Counts walks of length `n` from the start state of the KMP automaton with
/// the full-match state deleted; states are the match lengths `0..l`.
pub fn automaton_counts(p: &Pattern, alphabet: Alphabet, n: usize) -> CountSeries {
    let l = p.len();
    let transitions: Vec<Vec<usize>> = (0..l)
        .map(|state| {
            (0..alphabet.size())
                .map(|c| p.step(state, c as u8))
                .collect()
        })
        .collect();
    let mut current = vec![BigUint::zero(); l];
    current[0] = BigUint::one();
    let mut counts = Vec::with_capacity(n + 1);
    for step in 0..=n {
        counts.push(current.iter().sum());
        if step == n {
            break;
        }
        let mut next = vec![BigUint::zero(); l];
        for (state, ways) in current.iter().enumerate() {
            if ways.is_zero() {
                continue;
            }
            for &to in &transitions[state] {
                if to < l {
                    next[to] += ways;
                }
            }
        }
        current = next;
    }
    CountSeries {
        counts,
        method: Method::Automaton,
    }
}

pub fn brute_force_counts(
    p: &Pattern,
    alphabet: Alphabet,
    n: usize,
    budget: Budget,
) -> Result<CountSeries> {
    budget.admit(alphabet, n)?;
    let counts = (0..=n)
        .map(|m| count_avoiders(p, alphabet, m, budget).map(BigUint::from))
        .collect::<Result<_>>()?;
    Ok(CountSeries {
        counts,
        method: Method::Brute,
    })
}

pub fn count(
    p: &Pattern,
    alphabet: Alphabet,
    n: usize,
    method: Method,
    budget: Budget,
) -> Result<CountSeries> {
    match method {
        Method::Gf => gf_series(&avoidance_gf(p, alphabet), n),
        Method::Recurrence => recurrence_counts(p, alphabet, n),
        Method::Automaton => Ok(automaton_counts(p, alphabet, n)),
        Method::Brute => brute_force_counts(p, alphabet, n, budget),
    }
}

/// Smallest `n` with `|A_n(p)| ≠ |A_n(q)|`, or `None` when `b(p) = b(q)`.
pub fn first_difference_index(p: &Pattern, q: &Pattern) -> Option<usize> {
    if p.len() != q.len() {
        return Some(p.len().min(q.len()));
    }
    let symmetric: BTreeSet<usize> = p
        .border_lengths()
        .symmetric_difference(q.border_lengths())
        .copied()
        .collect();
    symmetric.last().map(|&m| 2 * p.len() - m)
}

pub fn are_avoidant_equivalent(p: &Pattern, q: &Pattern) -> bool {
    p.border_lengths() == q.border_lengths()
}
