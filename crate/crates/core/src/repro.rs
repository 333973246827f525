//! Reference examples and binary census rows, as executable checks.

use crate::bijection::{
    occurrence_balance, phi_l, phi_r, phi_r_bar, verify_bijection, PatternPair,
};
use crate::budget::Budget;
use crate::census::{census, classify_pair, BINARY_TABLE};
use crate::counting::{are_avoidant_equivalent, avoidance_gf, gf_series, Method};
use crate::error::Result;
use crate::pattern::Pattern;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

const A: Alphabet = Alphabet::BINARY;

fn w(s: &str) -> Word {
    A.parse(s).expect("fixture words are binary")
}

fn pat(s: &str) -> Pattern {
    Pattern::compile(w(s)).expect("fixture patterns are non-empty")
}

fn pair(p: &str, q: &str) -> Result<PatternPair> {
    PatternPair::from_words(w(p), w(q), A)
}

fn check(name: impl Into<String>, outcome: Result<(bool, String)>) -> Check {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn expect_word(got: &Word, want: &str) -> (bool, String) {
    (
        *got == w(want),
        format!("got {}, expected {want}", A.format(got)),
    )
}

/// Runs every fixture; census rows up to `max_table_length`.
pub fn run(max_table_length: usize, budget: Budget) -> Vec<Check> {
    let mut out = vec![
        check(
            "borders of 0110 are {1,4}",
            Ok({
                let b: Vec<usize> = pat("0110").border_lengths().iter().copied().collect();
                (b == [1, 4], format!("{b:?}"))
            }),
        ),
        check(
            "0110 and 1011 are avoidant-equivalent",
            Ok({
                let eq = are_avoidant_equivalent(&pat("0110"), &pat("1011"));
                (eq, format!("{eq}"))
            }),
        ),
        check(
            "gf of 0110 expands to 1,2,4,8,15,28",
            (|| {
                let s = gf_series(&avoidance_gf(&pat("0110"), A), 5)?;
                let got = s.to_strings().join(",");
                Ok((got == "1,2,4,8,15,28", got))
            })(),
        ),
        check(
            "all counting methods agree for 0110 and 1011",
            (|| {
                let mut series = Vec::new();
                for p in ["0110", "1011"] {
                    for m in Method::ALL {
                        series.push(crate::counting::count(&pat(p), A, 12, m, budget)?);
                    }
                }
                let ok = series.windows(2).all(|s| s[0].same_counts(&s[1]));
                Ok((ok, series[0].to_strings().join(",")))
            })(),
        ),
        check(
            "phi_L(0001001) = 0111011 for p=011 q=001",
            (|| {
                Ok(expect_word(
                    &phi_l(&w("0001001"), &pair("011", "001")?, None)?.0,
                    "0111011",
                ))
            })(),
        ),
        check(
            "phi_R(0111011) = 0001001 for p=011 q=001",
            (|| {
                Ok(expect_word(
                    &phi_r(&w("0111011"), &pair("011", "001")?, None)?.0,
                    "0001001",
                ))
            })(),
        ),
        check(
            "reversed phi_R(1001000) = 1101110 for p=011 q=001",
            (|| {
                Ok(expect_word(
                    &phi_r_bar(&w("1001000"), &pair("011", "001")?, None)?,
                    "1101110",
                ))
            })(),
        ),
        check(
            "phi_L(1001001011) = 1011011011 for p=0110 q=0010",
            (|| {
                Ok(expect_word(
                    &phi_l(&w("1001001011"), &pair("0110", "0010")?, None)?.0,
                    "1011011011",
                ))
            })(),
        ),
        check(
            "phi_R(1011011011) = 1001001011 for p=0110 q=0010",
            (|| {
                Ok(expect_word(
                    &phi_r(&w("1011011011"), &pair("0110", "0010")?, None)?.0,
                    "1001001011",
                ))
            })(),
        ),
        check(
            "phi_L collides on 0101011 and 1011100 replacing 1011 by 0100",
            (|| {
                let pr = pair("0100", "1011")?;
                let a = phi_l(&w("0101011"), &pr, None)?.0;
                let b = phi_l(&w("1011100"), &pr, None)?.0;
                let ok = a == w("0100100") && b == w("0100100");
                Ok((ok, format!("{} and {}", A.format(&a), A.format(&b))))
            })(),
        ),
        check(
            "p=1011 q=0100 is not a bijection at n=7",
            (|| {
                let r = verify_bijection(&pair("1011", "0100")?, 7, budget)?;
                Ok((
                    !r.bijection && !r.collisions.is_empty(),
                    format!("{} collisions", r.collisions.len()),
                ))
            })(),
        ),
        check(
            "p=1001 q=1101 is a bijection at n=6",
            (|| {
                let r = verify_bijection(&pair("1001", "1101")?, 6, budget)?;
                Ok((
                    r.bijection && r.inverse_ok(),
                    format!("{} words", r.domain_size),
                ))
            })(),
        ),
        check(
            "occurrence balance of 1101110 is (2,1) in 3 steps for p=001 q=110",
            (|| {
                let pr = pair("001", "110")?;
                let balance = occurrence_balance(&w("1101110"), &pr)?;
                let (image, trace) = phi_l(&w("1101110"), &pr, None)?;
                let ok = balance == (2, 1) && trace.step_count() == 3 && image == w("0000101");
                Ok((
                    ok,
                    format!(
                        "{balance:?}, {} steps, image {}",
                        trace.step_count(),
                        A.format(&image)
                    ),
                ))
            })(),
        ),
        check(
            "0110 and 1101 are composition-bijective only",
            (|| {
                let c = classify_pair(&pat("0110"), &pat("1101"), A, budget)?;
                let ok = c.equivalent && !c.phi_l_bijective && c.composition_bijective;
                Ok((ok, format!("{c:?}")))
            })(),
        ),
        check(
            "0010010 and 0110110 are unexplained",
            (|| {
                let c = classify_pair(&pat("0010010"), &pat("0110110"), A, budget)?;
                let ok = c.equivalent && !c.composition_bijective;
                Ok((ok, format!("{c:?}")))
            })(),
        ),
    ];
    for &(l, phi, comp, eq) in BINARY_TABLE.iter().filter(|r| r.0 <= max_table_length) {
        out.push(check(
            format!("census row {l}: {phi}/{comp}/{eq}"),
            (|| {
                let r = census(l, A, budget)?;
                let got = (r.phi_l_pairs, r.composition_pairs, r.equivalent_pairs);
                Ok((
                    got == (phi, comp, eq),
                    format!("{}/{}/{}", got.0, got.1, got.2),
                ))
            })(),
        ));
    }
    out
}
