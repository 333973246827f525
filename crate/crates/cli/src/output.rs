//! JSON shapes printed by the CLI. Words are rendered in the alphabet's
//! textual format; big counts are decimal strings.

use avoidance::bijection::{
    BijectionReport, ConjugationReport, Identity, ReplacementTrace, RoundtripFailure,
};
use avoidance::census::{decimal6, CensusReport, PairClassification};
use avoidance::counting::CountSeries;
use avoidance::poly::RationalGF;
use avoidance::{Alphabet, Pattern, Word};
use num_traits::ToPrimitive;
use serde::Serialize;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Borders {
    pub word: String,
    pub lengths: Vec<usize>,
    pub proper: Vec<String>,
    pub borderless: bool,
    pub failure: Vec<usize>,
}

impl Borders {
    pub fn new(a: Alphabet, p: &Pattern) -> Self {
        Borders {
            word: a.format(p.word()),
            lengths: p.border_lengths().iter().copied().collect(),
            proper: p.proper_borders().iter().map(|w| a.format(w)).collect(),
            borderless: p.is_borderless(),
            failure: p.failure().to_vec(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Count {
    pub pattern: String,
    pub k: usize,
    pub method: String,
    pub counts: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub by_method: Vec<MethodCounts>,
}

#[derive(Serialize)]
pub struct MethodCounts {
    pub method: String,
    pub counts: Vec<String>,
}

impl MethodCounts {
    pub fn new(s: &CountSeries) -> Self {
        MethodCounts {
            method: s.method.to_string(),
            counts: s.to_strings(),
        }
    }
}

#[derive(Serialize)]
pub struct Gf {
    pub pattern: String,
    pub k: usize,
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
}

impl Gf {
    pub fn new(a: Alphabet, p: &Pattern, g: &RationalGF) -> Self {
        let ints = |c: &[num_bigint::BigInt]| {
            c.iter()
                .map(|x| x.to_i64().expect("small coefficient"))
                .collect()
        };
        Gf {
            pattern: a.format(p.word()),
            k: a.size(),
            numerator: ints(g.numerator().coefficients()),
            denominator: ints(g.denominator().coefficients()),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Equivalence {
    pub p: String,
    pub q: String,
    pub equivalent: bool,
    pub first_difference: Option<usize>,
}

#[derive(Serialize)]
pub struct TraceStep {
    pub dir: String,
    pub index: usize,
    pub before: String,
    pub after: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Apply {
    pub input: String,
    pub output: String,
    pub step_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<TraceStep>>,
}

impl Apply {
    pub fn new(
        a: Alphabet,
        input: &Word,
        output: &Word,
        trace: &ReplacementTrace,
        with_steps: bool,
    ) -> Self {
        Apply {
            input: a.format(input),
            output: a.format(output),
            step_count: trace.step_count(),
            steps: with_steps.then(|| {
                trace
                    .steps
                    .iter()
                    .map(|s| TraceStep {
                        dir: s.direction.to_string(),
                        index: s.start,
                        before: a.format(&s.before),
                        after: a.format(&s.after),
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Serialize)]
pub struct Collision {
    pub image: String,
    pub preimages: Vec<String>,
}

#[derive(Serialize)]
pub struct Roundtrip {
    pub input: String,
    pub image: String,
    pub back: String,
}

fn roundtrips(a: Alphabet, fs: &[RoundtripFailure]) -> Vec<Roundtrip> {
    fs.iter()
        .map(|f| Roundtrip {
            input: a.format(&f.input),
            image: a.format(&f.image),
            back: a.format(&f.back),
        })
        .collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verify {
    pub p: String,
    pub q: String,
    pub n: usize,
    pub bijection: bool,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub collisions: Vec<Collision>,
    pub roundtrip_failures: Vec<Roundtrip>,
    pub inverse_failures: Vec<Roundtrip>,
}

impl Verify {
    pub fn new(a: Alphabet, p: &Word, q: &Word, r: &BijectionReport) -> Self {
        Verify {
            p: a.format(p),
            q: a.format(q),
            n: r.n,
            bijection: r.bijection,
            domain_size: r.domain_size,
            codomain_size: r.codomain_size,
            collisions: r
                .collisions
                .iter()
                .map(|c| Collision {
                    image: a.format(&c.image),
                    preimages: c.preimages.iter().map(|w| a.format(w)).collect(),
                })
                .collect(),
            roundtrip_failures: roundtrips(a, &r.roundtrip_failures),
            inverse_failures: roundtrips(a, &r.inverse_failures),
        }
    }
}

#[derive(Serialize)]
pub struct Violation {
    pub identity: &'static str,
    pub input: String,
    pub direct: String,
    pub conjugated: String,
}

#[derive(Serialize)]
pub struct Conjugation {
    pub n: usize,
    pub checked: usize,
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl Conjugation {
    pub fn new(a: Alphabet, n: usize, r: &ConjugationReport) -> Self {
        Conjugation {
            n,
            checked: r.checked,
            holds: r.holds(),
            violations: r
                .violations
                .iter()
                .map(|v| Violation {
                    identity: match v.identity {
                        Identity::PhiR => "phiR",
                        Identity::PhiL => "phiL",
                    },
                    input: a.format(&v.input),
                    direct: a.format(&v.direct),
                    conjugated: a.format(&v.conjugated),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Balance {
    pub word: String,
    pub count_q_in_word: usize,
    pub count_p_in_image: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub length: usize,
    pub alphabet: usize,
    pub phi_l_pairs: u64,
    pub composition_pairs: u64,
    pub equivalent_pairs: u64,
    pub unexplained_pairs: Vec<[String; 2]>,
    pub borderless_fraction: String,
    pub borderless_decimal: String,
    pub profile_one_l_fraction: String,
    pub profile_one_l_decimal: String,
}

impl Census {
    pub fn new(a: Alphabet, r: &CensusReport) -> Self {
        Census {
            length: r.pattern_length,
            alphabet: r.alphabet_size,
            phi_l_pairs: r.phi_l_pairs,
            composition_pairs: r.composition_pairs,
            equivalent_pairs: r.equivalent_pairs,
            unexplained_pairs: r
                .unexplained_pairs
                .iter()
                .map(|(p, q)| [a.format(p), a.format(q)])
                .collect(),
            borderless_fraction: r.borderless_fraction.to_string(),
            borderless_decimal: decimal6(&r.borderless_fraction),
            profile_one_l_fraction: r.profile_one_l_fraction.to_string(),
            profile_one_l_decimal: decimal6(&r.profile_one_l_fraction),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Borderless {
    pub length: usize,
    pub alphabet: usize,
    pub borderless_fraction: String,
    pub borderless_decimal: String,
    pub profile_one_l_fraction: String,
    pub profile_one_l_decimal: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classify {
    pub p: String,
    pub q: String,
    pub equivalent: bool,
    pub phi_l_bijective: bool,
    pub composition_bijective: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verify>,
}

impl Classify {
    pub fn new(
        a: Alphabet,
        p: &Word,
        q: &Word,
        c: PairClassification,
        verification: Option<Verify>,
    ) -> Self {
        Classify {
            p: a.format(p),
            q: a.format(q),
            equivalent: c.equivalent,
            phi_l_bijective: c.phi_l_bijective,
            composition_bijective: c.composition_bijective,
            verification,
        }
    }
}

#[derive(Serialize)]
pub struct ReproCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}
