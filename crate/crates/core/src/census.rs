//! Census of avoidant-equivalent pattern pairs of a fixed length, split by
//! which bijection explains them.
//!
//! Three relations on the patterns of length `l`:
//! * equivalent: `b(p) = b(q)`;
//! * φ_L-bijective: equal proper-border word sets;
//! * composition-bijective: connected in the [`ClosureGraph`], whose edges
//!   are the φ_L-bijective pairs, reversal, and letter permutations.
//!
//! Pairs are unordered and made of distinct patterns.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::bijection::{phi_l, PatternPair};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::pattern::{border_mask, failure_table, Pattern};
use crate::union_find::DisjointSets;
use crate::word::{Alphabet, LetterPermutation, Word};

/// Reference binary counts `(length, φ_L pairs, composition pairs, equivalent pairs)`.
pub const BINARY_TABLE: [(usize, u64, u64, u64); 12] = [
    (1, 1, 1, 1),
    (2, 1, 2, 2),
    (3, 6, 8, 8),
    (4, 21, 32, 32),
    (5, 88, 120, 120),
    (6, 312, 460, 460),
    (7, 1212, 1708, 1716),
    (8, 4649, 6764, 6780),
    (9, 18264, 26072, 26168),
    (10, 71058, 103460, 103764),
    (11, 279946, 403836, 405404),
    (12, 1107836, 1613132, 1618556),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClassification {
    pub equivalent: bool,
    pub phi_l_bijective: bool,
    pub composition_bijective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub pattern_length: usize,
    pub alphabet_size: usize,
    pub phi_l_pairs: u64,
    pub composition_pairs: u64,
    pub equivalent_pairs: u64,
    /// Equivalent pairs not connected in the closure graph, `(p, q)` with `p < q`, sorted.
    pub unexplained_pairs: Vec<(Word, Word)>,
    /// Fraction of patterns with `b(p) = {l}`.
    pub borderless_fraction: Ratio<u64>,
    /// Fraction of patterns with `b(p) = {1, l}`.
    pub profile_one_l_fraction: Ratio<u64>,
}

/// Six-place decimal rendering of a fraction, rounded half up.
pub fn decimal6(r: &Ratio<u64>) -> String {
    let num = *r.numer() as u128;
    let den = *r.denom() as u128;
    let scaled = (num * 2_000_000 + den) / (2 * den);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeKind {
    ProperBorders,
    Reversal,
    Permutation(LetterPermutation),
}

#[derive(Debug, Clone)]
struct Edge {
    a: u32,
    b: u32,
    kind: EdgeKind,
}

/// Per-pattern data computed during enumeration.
#[derive(Debug, Clone, Copy)]
struct Profile {
    mask: u64,
    longest_proper: usize,
}

fn profile_of(symbols: &[u8]) -> Profile {
    let failure = failure_table(symbols);
    Profile {
        mask: border_mask(symbols, &failure),
        longest_proper: failure[symbols.len() - 1],
    }
}

fn check_length(l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::EmptyPattern);
    }
    if l > 63 {
        return Err(Error::BudgetExceeded {
            required: format!("patterns of length {l}"),
            budget: 63,
        });
    }
    Ok(())
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Graph on the patterns of one length (optionally one border profile).
pub struct ClosureGraph {
    alphabet: Alphabet,
    length: usize,
    /// Base-`k` indices of the vertices, ascending.
    vertices: Vec<u64>,
    full: bool,
    profiles: Vec<Profile>,
    edges: Vec<Edge>,
    components: DisjointSets,
}

impl ClosureGraph {
    /// All `k^l` patterns of length `l`.
    pub fn build(alphabet: Alphabet, length: usize, budget: Budget) -> Result<Self> {
        Self::build_filtered(alphabet, length, None, budget)
    }

    /// Only the patterns whose border length set equals `profile`.
    pub fn for_profile(alphabet: Alphabet, p: &Pattern, budget: Budget) -> Result<Self> {
        let mask = p.border_lengths().iter().fold(0u64, |m, &i| m | 1 << i);
        Self::build_filtered(alphabet, p.len(), Some(mask), budget)
    }

    fn build_filtered(
        alphabet: Alphabet,
        length: usize,
        only: Option<u64>,
        budget: Budget,
    ) -> Result<Self> {
        check_length(length)?;
        let total = budget.admit(alphabet, length)?;
        let (vertices, profiles): (Vec<u64>, Vec<Profile>) = (0..total)
            .into_par_iter()
            .filter_map(|i| {
                let prof = profile_of(alphabet.word_at(length, i).symbols());
                match only {
                    Some(m) if m != prof.mask => None,
                    _ => Some((i, prof)),
                }
            })
            .unzip();
        let mut graph = ClosureGraph {
            alphabet,
            length,
            full: only.is_none(),
            components: DisjointSets::new(vertices.len()),
            vertices,
            profiles,
            edges: Vec::new(),
        };
        graph.add_edges();
        Ok(graph)
    }

    fn add_edges(&mut self) {
        let k = self.alphabet.size() as u64;
        let l = self.length;

        // Equal proper-border word sets means equal longest proper border
        // word; that word is the length-f prefix, so it is `index / k^(l-f)`.
        let mut by_border: HashMap<(usize, u64), u32> = HashMap::new();
        let mut edges = Vec::new();
        for (v, (&index, prof)) in self.vertices.iter().zip(&self.profiles).enumerate() {
            let f = prof.longest_proper;
            let key = (f, index / k.pow((l - f) as u32));
            if let Some(&prev) = by_border.get(&key) {
                edges.push(Edge {
                    a: prev,
                    b: v as u32,
                    kind: EdgeKind::ProperBorders,
                });
            }
            by_border.insert(key, v as u32);
        }

        let generators = LetterPermutation::generators(self.alphabet);
        for v in 0..self.vertices.len() {
            let word = self.word(v);
            let reversed = self
                .position(&word.reverse())
                .expect("reversal preserves profile");
            if reversed > v {
                edges.push(Edge {
                    a: v as u32,
                    b: reversed as u32,
                    kind: EdgeKind::Reversal,
                });
            }
            for sigma in &generators {
                let image = self
                    .position(&word.permute(sigma))
                    .expect("permutation preserves profile");
                if image != v {
                    edges.push(Edge {
                        a: v as u32,
                        b: image as u32,
                        kind: EdgeKind::Permutation(sigma.clone()),
                    });
                }
            }
        }

        for e in &edges {
            assert_eq!(
                self.profiles[e.a as usize].mask, self.profiles[e.b as usize].mask,
                "closure edge joins patterns with different border lengths"
            );
            self.components.union(e.a as usize, e.b as usize);
        }
        self.edges = edges;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn word(&self, v: usize) -> Word {
        self.alphabet.word_at(self.length, self.vertices[v])
    }

    fn position(&self, w: &Word) -> Option<usize> {
        if w.len() != self.length || !self.alphabet.contains(w) {
            return None;
        }
        let index = self.alphabet.index_of(w);
        if self.full {
            Some(index as usize)
        } else {
            self.vertices.binary_search(&index).ok()
        }
    }

    pub fn connected(&mut self, p: &Word, q: &Word) -> bool {
        match (self.position(p), self.position(q)) {
            (Some(a), Some(b)) => self.components.same(a, b),
            _ => false,
        }
    }

    /// Shortest chain of closure edges leading from `p` to `q`.
    pub fn witness_chain(&self, p: &Word, q: &Word) -> Option<Vec<ChainStep>> {
        let (start, goal) = (self.position(p)?, self.position(q)?);
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adjacency[e.a as usize].push(i);
            adjacency[e.b as usize].push(i);
        }
        let mut came_from: Vec<Option<(usize, usize)>> = vec![None; self.vertices.len()];
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            if v == goal {
                break;
            }
            for &ei in &adjacency[v] {
                let e = &self.edges[ei];
                let u = if e.a as usize == v { e.b } else { e.a } as usize;
                if !seen[u] {
                    seen[u] = true;
                    came_from[u] = Some((v, ei));
                    queue.push_back(u);
                }
            }
        }
        if !seen[goal] {
            return None;
        }
        let mut chain = Vec::new();
        let mut v = goal;
        while let Some((prev, ei)) = came_from[v] {
            let from = self.word(prev);
            let to = self.word(v);
            let map = match &self.edges[ei].kind {
                EdgeKind::ProperBorders => ChainMap::PhiL,
                EdgeKind::Reversal => ChainMap::Reverse,
                EdgeKind::Permutation(sigma) => {
                    if from.permute(sigma) == to {
                        ChainMap::Permute(sigma.clone())
                    } else {
                        ChainMap::Permute(sigma.inverse())
                    }
                }
            };
            chain.push(ChainStep { from, to, map });
            v = prev;
        }
        chain.reverse();
        Some(chain)
    }
}

/// How one link of a composition chain carries `A_n(from)` to `A_n(to)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainMap {
    /// `φ_L` for the pair `(from, to)`.
    PhiL,
    Reverse,
    Permute(LetterPermutation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub from: Word,
    pub to: Word,
    pub map: ChainMap,
}

/// Pushes `w ∈ A_n(chain[0].from)` through every link of the chain.
pub fn apply_chain(w: &Word, chain: &[ChainStep], alphabet: Alphabet) -> Result<Word> {
    let mut current = w.clone();
    for step in chain {
        current = match &step.map {
            ChainMap::PhiL => {
                let pair = PatternPair::from_words(step.from.clone(), step.to.clone(), alphabet)?;
                phi_l(&current, &pair, None)?.0
            }
            ChainMap::Reverse => current.reverse(),
            ChainMap::Permute(sigma) => current.permute(sigma),
        };
    }
    Ok(current)
}

pub fn census(l: usize, alphabet: Alphabet, budget: Budget) -> Result<CensusReport> {
    let mut graph = ClosureGraph::build(alphabet, l, budget)?;
    let k = alphabet.size() as u64;

    let mut by_mask: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut by_border: HashMap<(usize, u64), u64> = HashMap::new();
    for (v, prof) in graph.profiles.iter().enumerate() {
        by_mask.entry(prof.mask).or_default().push(v);
        let f = prof.longest_proper;
        *by_border
            .entry((f, graph.vertices[v] / k.pow((l - f) as u32)))
            .or_default() += 1;
    }

    let equivalent_pairs = by_mask.values().map(|g| pairs(g.len() as u64)).sum();
    let phi_l_pairs = by_border.values().map(|&n| pairs(n)).sum();
    let composition_pairs = graph
        .components
        .component_sizes()
        .into_iter()
        .map(|n| pairs(n as u64))
        .sum();

    let mut unexplained_pairs = Vec::new();
    for group in by_mask.values() {
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &v in group {
            comps.entry(graph.components.find(v)).or_default().push(v);
        }
        let comps: Vec<&Vec<usize>> = comps.values().collect();
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                for &x in a.iter() {
                    for &y in b.iter() {
                        let (x, y) = (x.min(y), x.max(y));
                        unexplained_pairs.push((graph.word(x), graph.word(y)));
                    }
                }
            }
        }
    }
    unexplained_pairs.sort();

    let total = graph.vertex_count() as u64;
    let full = 1u64 << l;
    let count_mask = |m: u64| graph.profiles.iter().filter(|p| p.mask == m).count() as u64;
    Ok(CensusReport {
        pattern_length: l,
        alphabet_size: alphabet.size(),
        phi_l_pairs,
        composition_pairs,
        equivalent_pairs,
        unexplained_pairs,
        borderless_fraction: Ratio::new(count_mask(full), total),
        profile_one_l_fraction: Ratio::new(count_mask(full | 2), total),
    })
}

pub fn census_sweep(
    lengths: impl IntoIterator<Item = usize>,
    alphabet: Alphabet,
    budget: Budget,
) -> Result<Vec<CensusReport>> {
    lengths
        .into_iter()
        .map(|l| census(l, alphabet, budget))
        .collect()
}

pub fn unexplained_pairs(
    l: usize,
    alphabet: Alphabet,
    budget: Budget,
) -> Result<Vec<(Word, Word)>> {
    census(l, alphabet, budget).map(|r| r.unexplained_pairs)
}

/// `(borderless fraction, {1, l} fraction)` without building the closure graph.
pub fn borderless_stats(
    l: usize,
    alphabet: Alphabet,
    budget: Budget,
) -> Result<(Ratio<u64>, Ratio<u64>)> {
    check_length(l)?;
    let total = budget.admit(alphabet, l)?;
    let full = 1u64 << l;
    let (borderless, one_l) = (0..total)
        .into_par_iter()
        .map(|i| {
            let mask = profile_of(alphabet.word_at(l, i).symbols()).mask;
            ((mask == full) as u64, (mask == full | 2) as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok((Ratio::new(borderless, total), Ratio::new(one_l, total)))
}

pub fn classify_pair(
    p: &Pattern,
    q: &Pattern,
    alphabet: Alphabet,
    budget: Budget,
) -> Result<PairClassification> {
    alphabet.check(p.word())?;
    alphabet.check(q.word())?;
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    if p.word() == q.word() {
        return Err(Error::IdenticalPatterns);
    }
    let equivalent = p.border_lengths() == q.border_lengths();
    let phi_l_bijective = p.proper_borders() == q.proper_borders();
    let composition_bijective = if !equivalent {
        false
    } else if phi_l_bijective {
        true
    } else {
        ClosureGraph::for_profile(alphabet, p, budget)?.connected(p.word(), q.word())
    };
    Ok(PairClassification {
        equivalent,
        phi_l_bijective,
        composition_bijective,
    })
}

/// Composition chain witnessing that `p` and `q` are composition-bijective.
pub fn witness_chain(
    p: &Pattern,
    q: &Pattern,
    alphabet: Alphabet,
    budget: Budget,
) -> Result<Option<Vec<ChainStep>>> {
    if p.border_lengths() != q.border_lengths() {
        return Ok(None);
    }
    Ok(ClosureGraph::for_profile(alphabet, p, budget)?.witness_chain(p.word(), q.word()))
}
