//! Replacement maps `φ_L` / `φ_R`, their reversed conjugates, and exhaustive
//! checks of the properties they are expected to satisfy.
//!
//! `L` overwrites the leftmost `q` with `p`; `R` overwrites the rightmost `p`
//! with `q`. The reversed scans `L̄` (leftmost `p̄` → `q̄`) and `R̄`
//! (rightmost `q̄` → `p̄`) are the same machinery applied to the pair `(q̄, p̄)`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::budget::{avoiders, count_avoiders, Budget};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::word::{Alphabet, Word};

/// Two distinct, equal-length patterns over a common alphabet.
#[derive(Debug, Clone)]
pub struct PatternPair {
    p: Pattern,
    q: Pattern,
    p_rev: Pattern,
    q_rev: Pattern,
    alphabet: Alphabet,
    same_proper_borders: bool,
}

impl PatternPair {
    pub fn new(p: Pattern, q: Pattern, alphabet: Alphabet) -> Result<Self> {
        alphabet.check(p.word())?;
        alphabet.check(q.word())?;
        if p.len() != q.len() {
            return Err(Error::LengthMismatch(p.len(), q.len()));
        }
        if p.word() == q.word() {
            return Err(Error::IdenticalPatterns);
        }
        let p_rev = Pattern::compile(p.word().reverse())?;
        let q_rev = Pattern::compile(q.word().reverse())?;
        let same_proper_borders = p.proper_borders() == q.proper_borders();
        Ok(PatternPair {
            p,
            q,
            p_rev,
            q_rev,
            alphabet,
            same_proper_borders,
        })
    }

    pub fn from_words(p: Word, q: Word, alphabet: Alphabet) -> Result<Self> {
        Self::new(Pattern::compile(p)?, Pattern::compile(q)?, alphabet)
    }

    pub fn p(&self) -> &Pattern {
        &self.p
    }

    pub fn q(&self) -> &Pattern {
        &self.q
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Whether the proper-border word sets coincide (the hypothesis under
    /// which `φ_L : A_n(p) → A_n(q)` is a bijection).
    pub fn same_proper_borders(&self) -> bool {
        self.same_proper_borders
    }

    /// `(q, p)`.
    pub fn swapped(&self) -> PatternPair {
        PatternPair {
            p: self.q.clone(),
            q: self.p.clone(),
            p_rev: self.q_rev.clone(),
            q_rev: self.p_rev.clone(),
            alphabet: self.alphabet,
            same_proper_borders: self.same_proper_borders,
        }
    }

    /// `(q̄, p̄)`: its `L` is `L̄` and its `R` is `R̄`.
    fn reversed(&self) -> PatternPair {
        PatternPair {
            p: self.q_rev.clone(),
            q: self.p_rev.clone(),
            p_rev: self.q.clone(),
            q_rev: self.p.clone(),
            alphabet: self.alphabet,
            same_proper_borders: self.same_proper_borders,
        }
    }

    /// The lexicographic bound `k^n` on the number of steps, saturating.
    pub fn default_max_steps(&self, n: usize) -> u64 {
        self.alphabet.count_words(n).unwrap_or(u64::MAX)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    L,
    R,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::L => "L",
            Direction::R => "R",
        })
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "L" | "l" => Ok(Direction::L),
            "R" | "r" => Ok(Direction::R),
            _ => Err(format!("direction must be L or R, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub direction: Direction,
    pub start: usize,
    pub before: Word,
    pub after: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReplacementTrace {
    /// Pattern length: each step rewrites `start..start + window`.
    pub window: usize,
    pub steps: Vec<Step>,
}

impl ReplacementTrace {
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Re-applies every recorded window overwrite to `w`, in order.
    pub fn replay(&self, w: &Word) -> Word {
        self.steps.iter().fold(w.clone(), |acc, s| {
            let window = &s.after.symbols()[s.start..s.start + self.window];
            acc.splice(s.start, &Word::from(window))
        })
    }
}

fn scan_once(w: &Word, find: &Pattern, with: &Word, leftmost: bool) -> Option<(usize, Word)> {
    let at = if leftmost {
        find.first_in(w)
    } else {
        find.last_in(w)
    }?;
    Some((at, w.splice(at, with)))
}

fn fixpoint(
    w: &Word,
    find: &Pattern,
    with: &Word,
    leftmost: bool,
    max_steps: u64,
) -> Result<(Word, ReplacementTrace)> {
    let direction = if leftmost { Direction::L } else { Direction::R };
    let mut current = w.clone();
    let mut trace = ReplacementTrace {
        window: with.len(),
        steps: Vec::new(),
    };
    while let Some((start, next)) = scan_once(&current, find, with, leftmost) {
        if trace.steps.len() as u64 >= max_steps {
            return Err(Error::StepLimitExceeded(max_steps));
        }
        trace.steps.push(Step {
            direction,
            start,
            before: std::mem::replace(&mut current, next.clone()),
            after: next,
        });
    }
    Ok((current, trace))
}

/// `L(w)`: the leftmost `q` in `w` becomes `p`; identity when `w` avoids `q`.
pub fn single_scan_l(w: &Word, pair: &PatternPair) -> Word {
    scan_once(w, &pair.q, pair.p.word(), true).map_or_else(|| w.clone(), |(_, v)| v)
}

/// `R(w)`: the rightmost `p` in `w` becomes `q`; identity when `w` avoids `p`.
pub fn single_scan_r(w: &Word, pair: &PatternPair) -> Word {
    scan_once(w, &pair.p, pair.q.word(), false).map_or_else(|| w.clone(), |(_, v)| v)
}

/// Iterates `L` until no `q` remains. The scan restarts from the left after
/// every replacement. `max_steps` defaults to `k^|w|`.
pub fn phi_l(
    w: &Word,
    pair: &PatternPair,
    max_steps: Option<u64>,
) -> Result<(Word, ReplacementTrace)> {
    let limit = max_steps.unwrap_or_else(|| pair.default_max_steps(w.len()));
    fixpoint(w, &pair.q, pair.p.word(), true, limit)
}

/// Iterates `R` until no `p` remains.
pub fn phi_r(
    w: &Word,
    pair: &PatternPair,
    max_steps: Option<u64>,
) -> Result<(Word, ReplacementTrace)> {
    let limit = max_steps.unwrap_or_else(|| pair.default_max_steps(w.len()));
    fixpoint(w, &pair.p, pair.q.word(), false, limit)
}

/// Iterates `L̄` (leftmost `p̄` → `q̄`) until no `p̄` remains.
pub fn phi_l_bar(w: &Word, pair: &PatternPair, max_steps: Option<u64>) -> Result<Word> {
    phi_l(w, &pair.reversed(), max_steps).map(|(v, _)| v)
}

/// Iterates `R̄` (rightmost `q̄` → `p̄`) until no `q̄` remains.
pub fn phi_r_bar(w: &Word, pair: &PatternPair, max_steps: Option<u64>) -> Result<Word> {
    phi_r(w, &pair.reversed(), max_steps).map(|(v, _)| v)
}

/// Number of `q` occurrences in `w` and of `p` occurrences in `φ_L(w)`,
/// overlaps included.
pub fn occurrence_balance(w: &Word, pair: &PatternPair) -> Result<(usize, usize)> {
    let (image, _) = phi_l(w, pair, None)?;
    Ok((pair.q.find_in(w).len(), pair.p.find_in(&image).len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `φ_R(v) = rev(φ̄_L(rev v))` for `v ∈ A_n(q)`.
    PhiR,
    /// `φ_L(w) = rev(φ̄_R(rev w))` for `w ∈ A_n(p)`.
    PhiL,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationViolation {
    pub identity: Identity,
    pub input: Word,
    pub direct: Word,
    pub conjugated: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConjugationReport {
    pub checked: usize,
    pub violations: Vec<ConjugationViolation>,
}

impl ConjugationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_conjugation(
    pair: &PatternPair,
    n: usize,
    budget: Budget,
) -> Result<ConjugationReport> {
    let a = pair.alphabet;
    let from_q = avoiders(&pair.q, a, n, budget)?;
    let from_p = avoiders(&pair.p, a, n, budget)?;
    let check = |identity: Identity, input: &Word| -> Result<Option<ConjugationViolation>> {
        let (direct, conjugated) = match identity {
            Identity::PhiR => (
                phi_r(input, pair, None)?.0,
                phi_l_bar(&input.reverse(), pair, None)?.reverse(),
            ),
            Identity::PhiL => (
                phi_l(input, pair, None)?.0,
                phi_r_bar(&input.reverse(), pair, None)?.reverse(),
            ),
        };
        Ok((direct != conjugated).then(|| ConjugationViolation {
            identity,
            input: input.clone(),
            direct,
            conjugated,
        }))
    };
    let mut violations = Vec::new();
    for v in from_q
        .par_iter()
        .map(|v| check(Identity::PhiR, v))
        .collect::<Result<Vec<_>>>()?
    {
        violations.extend(v);
    }
    for v in from_p
        .par_iter()
        .map(|w| check(Identity::PhiL, w))
        .collect::<Result<Vec<_>>>()?
    {
        violations.extend(v);
    }
    Ok(ConjugationReport {
        checked: from_q.len() + from_p.len(),
        violations,
    })
}

/// Several words of `A_n(p)` sharing one image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub image: Word,
    pub preimages: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripFailure {
    pub input: Word,
    pub image: Word,
    pub back: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    /// `φ_L` maps `A_n(p)` onto `A_n(q)` without collisions.
    pub bijection: bool,
    pub collisions: Vec<Collision>,
    /// Images that still contain `q`.
    pub escaped: Vec<Word>,
    /// `w ∈ A_n(p)` with `φ_R(φ_L(w)) ≠ w`.
    pub roundtrip_failures: Vec<RoundtripFailure>,
    /// `v ∈ A_n(q)` with `φ_L(φ_R(v)) ≠ v`.
    pub inverse_failures: Vec<RoundtripFailure>,
}

impl BijectionReport {
    pub fn inverse_ok(&self) -> bool {
        self.roundtrip_failures.is_empty() && self.inverse_failures.is_empty()
    }
}

fn roundtrips(
    domain: &[Word],
    forward: impl Fn(&Word) -> Result<Word> + Sync,
    backward: impl Fn(&Word) -> Result<Word> + Sync,
) -> Result<Vec<(Word, Option<RoundtripFailure>)>> {
    domain
        .par_iter()
        .map(|w| {
            let image = forward(w)?;
            let back = backward(&image)?;
            let failure = (back != *w).then(|| RoundtripFailure {
                input: w.clone(),
                image: image.clone(),
                back,
            });
            Ok((image, failure))
        })
        .collect()
}

pub fn verify_bijection(pair: &PatternPair, n: usize, budget: Budget) -> Result<BijectionReport> {
    let a = pair.alphabet;
    let domain = avoiders(&pair.p, a, n, budget)?;
    let codomain_size = count_avoiders(&pair.q, a, n, budget)? as usize;
    let forward = roundtrips(
        &domain,
        |w| phi_l(w, pair, None).map(|r| r.0),
        |v| phi_r(v, pair, None).map(|r| r.0),
    )?;

    let mut by_image: HashMap<&Word, Vec<&Word>> = HashMap::new();
    for (w, (image, _)) in domain.iter().zip(&forward) {
        by_image.entry(image).or_default().push(w);
    }
    let mut collisions: Vec<Collision> = by_image
        .into_iter()
        .filter(|(_, pre)| pre.len() > 1)
        .map(|(image, pre)| Collision {
            image: image.clone(),
            preimages: pre.into_iter().cloned().collect(),
        })
        .collect();
    collisions.sort_by(|x, y| x.image.cmp(&y.image));

    let escaped: Vec<Word> = forward
        .iter()
        .map(|(image, _)| image)
        .filter(|image| pair.q.occurs_in(image))
        .cloned()
        .collect();
    let roundtrip_failures: Vec<RoundtripFailure> =
        forward.into_iter().filter_map(|(_, f)| f).collect();

    let codomain = avoiders(&pair.q, a, n, budget)?;
    let inverse_failures = roundtrips(
        &codomain,
        |v| phi_r(v, pair, None).map(|r| r.0),
        |w| phi_l(w, pair, None).map(|r| r.0),
    )?
    .into_iter()
    .filter_map(|(_, f)| f)
    .collect();

    let bijection = collisions.is_empty() && escaped.is_empty() && domain.len() == codomain_size;
    Ok(BijectionReport {
        n,
        domain_size: domain.len(),
        codomain_size,
        bijection,
        collisions,
        escaped,
        roundtrip_failures,
        inverse_failures,
    })
}
