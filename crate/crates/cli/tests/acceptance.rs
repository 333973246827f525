//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use avoidance::bijection::{
    occurrence_balance, phi_l, phi_r, phi_r_bar, verify_bijection, verify_conjugation, PatternPair,
};
use avoidance::census::{borderless_stats, census};
use avoidance::counting::{count, first_difference_index, Method};
use avoidance::{Alphabet, Budget, Pattern, Word};

const A: Alphabet = Alphabet::BINARY;

/// Reference rows: length, φ_L pairs, composition pairs, equivalent pairs.
const TABLE: [Row; 12] = [
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

fn w(s: &str) -> Word {
    A.parse(s).unwrap()
}

fn pat(s: &str) -> Pattern {
    Pattern::compile(w(s)).unwrap()
}

fn binary_patterns(lengths: std::ops::RangeInclusive<usize>) -> Vec<Pattern> {
    lengths
        .flat_map(|l| A.words(l).map(|w| Pattern::compile(w).unwrap()))
        .collect()
}

/// `A_n(p)` by direct window comparison, independent of the KMP scanner.
fn naive_avoiders(p: &[u8], n: usize) -> BTreeSet<Word> {
    A.words(n)
        .filter(|w| !w.symbols().windows(p.len()).any(|win| win == p))
        .collect()
}

/// Power-series coefficients of num/den by long division (den[0] = 1).
fn long_division(num: &[i64], den: &[i64], terms: usize) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    rem.resize(terms + den.len(), 0);
    let mut out = Vec::new();
    for i in 0..terms {
        let c = rem[i];
        out.push(c);
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    out
}

type Verdict = Result<String, String>;
type Row = (usize, u64, u64, u64);
type Criterion = (&'static str, fn() -> Verdict);

fn criterion_table() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_avoidance");
    let run = |sweep: &str| -> Result<(Vec<Row>, Duration), String> {
        let start = Instant::now();
        let out = Command::new(bin)
            .args(["census", "--sweep", sweep, "--alphabet", "2"])
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if !out.status.success() {
            return Err(format!("census exited with {}", out.status));
        }
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        let mut lines = text.lines();
        if lines.next() != Some("length,phiL_pairs,composition_pairs,equivalent_pairs") {
            return Err("unexpected CSV header".into());
        }
        let rows = lines
            .map(|line| {
                let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
                (f[0] as usize, f[1], f[2], f[3])
            })
            .collect();
        Ok((rows, elapsed))
    };
    let (rows, t10) = run("1..10")?;
    if rows[..] != TABLE[..10] {
        return Err(format!("rows 1..10 differ: {rows:?}"));
    }
    if t10 > Duration::from_secs(120) {
        return Err(format!("lengths <= 10 took {t10:?}"));
    }
    let (rows, t12) = run("11..12")?;
    if rows[..] != TABLE[10..] {
        return Err(format!("rows 11..12 differ: {rows:?}"));
    }
    if t12 > Duration::from_secs(30 * 60) {
        return Err(format!("lengths 11-12 took {t12:?}"));
    }
    Ok(format!(
        "12 rows exact; 1..10 in {t10:.2?}, 11..12 in {t12:.2?}"
    ))
}

fn criterion_counting() -> Verdict {
    let ternary = Alphabet::new(3).unwrap();
    let binary = binary_patterns(1..=5);
    if binary.len() != 62 {
        return Err(format!("expected 62 binary patterns, got {}", binary.len()));
    }
    let ternary_patterns: Vec<Pattern> = (1..=3)
        .flat_map(|l| ternary.words(l).map(|w| Pattern::compile(w).unwrap()))
        .collect();
    let mut checked = 0;
    for (a, ps) in [(A, &binary), (ternary, &ternary_patterns)] {
        for p in ps {
            let series: Vec<_> = Method::ALL
                .iter()
                .map(|&m| count(p, a, 12, m, Budget::DEFAULT))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            if series.windows(2).any(|s| !s[0].same_counts(&s[1])) {
                return Err(format!("methods disagree on {}", p.word()));
            }
            checked += 1;
        }
    }
    let expected = long_division(&[1, 0, 0, 1], &[1, -2, 0, 1, -1], 6);
    let got: Vec<i64> = count(&pat("0110"), A, 5, Method::Gf, Budget::DEFAULT)
        .map_err(|e| e.to_string())?
        .to_strings()
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    if expected != [1, 2, 4, 8, 15, 28] || got != expected {
        return Err(format!("0110 series {got:?}, long division {expected:?}"));
    }
    Ok(format!(
        "{checked} patterns agree across 4 methods; 0110 -> {got:?}"
    ))
}

/// Unordered binary pairs of length <= 4 with equal proper-border word sets.
fn equal_proper_border_pairs() -> Vec<(Pattern, Pattern)> {
    let mut out = Vec::new();
    for l in 1..=4 {
        let ps = binary_patterns(l..=l);
        for (i, p) in ps.iter().enumerate() {
            for q in &ps[i + 1..] {
                if p.proper_borders() == q.proper_borders() {
                    out.push((p.clone(), q.clone()));
                }
            }
        }
    }
    out
}

fn criterion_phi_l_bijection() -> Verdict {
    let start = Instant::now();
    let mut checks = 0;
    for (p, q) in equal_proper_border_pairs() {
        for (x, y) in [(&p, &q), (&q, &p)] {
            let pair = PatternPair::new(x.clone(), y.clone(), A).map_err(|e| e.to_string())?;
            for n in 0..=10 {
                let r = verify_bijection(&pair, n, Budget::DEFAULT).map_err(|e| e.to_string())?;
                if !r.bijection || !r.roundtrip_failures.is_empty() {
                    return Err(format!("{} -> {} fails at n={n}", x.word(), y.word()));
                }
                // Independent image check against naive A_n(q).
                let domain = naive_avoiders(x.word().symbols(), n);
                let image: BTreeSet<Word> = domain
                    .iter()
                    .map(|w| phi_l(w, &pair, None).unwrap().0)
                    .collect();
                if image.len() != domain.len() || image != naive_avoiders(y.word().symbols(), n) {
                    return Err(format!(
                        "{} -> {} image mismatch at n={n}",
                        x.word(),
                        y.word()
                    ));
                }
                checks += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{checks} (pair, n) cases, zero violations, {elapsed:.2?}"
    ))
}

fn criterion_conjugation() -> Verdict {
    let mut words = 0;
    for (p, q) in equal_proper_border_pairs() {
        for (x, y) in [(&p, &q), (&q, &p)] {
            let pair = PatternPair::new(x.clone(), y.clone(), A).map_err(|e| e.to_string())?;
            for n in 0..=10 {
                let r = verify_conjugation(&pair, n, Budget::DEFAULT).map_err(|e| e.to_string())?;
                if let Some(v) = r.violations.first() {
                    return Err(format!("{} {} n={n}: {v:?}", x.word(), y.word()));
                }
                words += r.checked;
            }
        }
    }
    Ok(format!("{words} words checked, zero violations"))
}

fn criterion_first_difference() -> Verdict {
    let ps = binary_patterns(1..=4);
    let mut pairs = 0;
    for (i, p) in ps.iter().enumerate() {
        for q in &ps[i + 1..] {
            if p.border_lengths() == q.border_lengths() {
                continue;
            }
            let at = first_difference_index(p, q)
                .ok_or("formula returned none for inequivalent pair")?;
            for n in 0..=at {
                let x = naive_avoiders(p.word().symbols(), n).len();
                let y = naive_avoiders(q.word().symbols(), n).len();
                if (x == y) != (n < at) {
                    return Err(format!(
                        "{} vs {}: predicted {at}, n={n} gives {x} vs {y}",
                        p.word(),
                        q.word()
                    ));
                }
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} inequivalent pairs diverge exactly where predicted"
    ))
}

fn criterion_fixtures() -> Verdict {
    let pair = |p: &str, q: &str| PatternPair::from_words(w(p), w(q), A).unwrap();
    let mut failures = Vec::new();
    let mut expect = |label: &str, got: Word, want: &str| {
        if got != w(want) {
            failures.push(format!("{label}: got {got}, want {want}"));
        }
    };
    let p1 = pair("011", "001");
    expect(
        "phi_L(0001001)",
        phi_l(&w("0001001"), &p1, None).unwrap().0,
        "0111011",
    );
    expect(
        "phi_R(0111011)",
        phi_r(&w("0111011"), &p1, None).unwrap().0,
        "0001001",
    );
    expect(
        "reversed phi_R(1001000)",
        phi_r_bar(&w("1001000"), &p1, None).unwrap(),
        "1101110",
    );
    let p2 = pair("0110", "0010");
    expect(
        "phi_L(1001001011)",
        phi_l(&w("1001001011"), &p2, None).unwrap().0,
        "1011011011",
    );
    expect(
        "phi_R(1011011011)",
        phi_r(&w("1011011011"), &p2, None).unwrap().0,
        "1001001011",
    );
    // Both words avoid 0100 and contain 1011; replacing 1011 by 0100 collides.
    let p3 = pair("0100", "1011");
    expect(
        "collision w1",
        phi_l(&w("0101011"), &p3, None).unwrap().0,
        "0100100",
    );
    expect(
        "collision w2",
        phi_l(&w("1011100"), &p3, None).unwrap().0,
        "0100100",
    );
    let stated = verify_bijection(&pair("1011", "0100"), 7, Budget::DEFAULT).unwrap();
    if stated.bijection || stated.collisions.is_empty() {
        failures.push("p=1011 q=0100 should not be a bijection at n=7".into());
    }
    let p4 = pair("001", "110");
    let balance = occurrence_balance(&w("1101110"), &p4).unwrap();
    let steps = phi_l(&w("1101110"), &p4, None).unwrap().1.step_count();
    if balance != (2, 1) || steps != 3 {
        failures.push(format!("balance {balance:?} in {steps} steps"));
    }
    if failures.is_empty() {
        Ok("all fixtures reproduce".into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_borderless() -> Verdict {
    let start = Instant::now();
    let (b, o) = borderless_stats(20, A, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let (b, o) = (
        *b.numer() as f64 / *b.denom() as f64,
        *o.numer() as f64 / *o.denom() as f64,
    );
    if !(0.25..=0.29).contains(&b)
        || !(0.28..=0.32).contains(&o)
        || elapsed > Duration::from_secs(60)
    {
        return Err(format!("borderless {b:.6}, {{1,l}} {o:.6}, {elapsed:?}"));
    }
    Ok(format!("borderless {b:.6}, {{1,l}} {o:.6}, {elapsed:.2?}"))
}

fn criterion_unexplained() -> Verdict {
    for l in 1..=6 {
        let r = census(l, A, Budget::DEFAULT).map_err(|e| e.to_string())?;
        if !r.unexplained_pairs.is_empty() {
            return Err(format!(
                "l={l} has {} unexplained pairs",
                r.unexplained_pairs.len()
            ));
        }
    }
    let r = census(7, A, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let key = (w("0010010"), w("0110110"));
    if r.unexplained_pairs.len() != 1716 - 1708 || !r.unexplained_pairs.contains(&key) {
        return Err(format!("l=7 unexplained: {:?}", r.unexplained_pairs));
    }
    Ok("none for l <= 6; 8 at l = 7 including {0010010, 0110110}".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("census table, lengths 1..12", criterion_table),
        ("counting cross-validation", criterion_counting),
        ("phi_L bijection sweep", criterion_phi_l_bijection),
        ("conjugation identity sweep", criterion_conjugation),
        ("first-difference formula", criterion_first_difference),
        ("worked-example fixtures", criterion_fixtures),
        ("borderless statistics at l = 20", criterion_borderless),
        ("unexplained pairs", criterion_unexplained),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
