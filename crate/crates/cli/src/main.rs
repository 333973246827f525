mod output;

use std::fmt;
use std::process::ExitCode;

use avoidance::bijection::{
    occurrence_balance, phi_l, phi_l_bar, phi_r, phi_r_bar, verify_bijection, verify_conjugation,
    Direction, PatternPair, ReplacementTrace,
};
use avoidance::census::{borderless_stats, census_sweep, classify_pair, decimal6};
use avoidance::counting::{
    are_avoidant_equivalent, avoidance_gf, count, first_difference_index, Method,
};
use avoidance::{repro, Alphabet, Budget, Error, Pattern, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Border structure, avoidance counts and replacement bijections for word patterns.
#[derive(Parser)]
#[command(name = "avoidance", version)]
struct Cli {
    /// Alphabet size k; symbols are 0..k.
    #[arg(long, short = 'k', global = true, default_value_t = 2)]
    alphabet: usize,

    /// Largest number of words an exhaustive enumeration may visit.
    #[arg(long, global = true, env = Budget::ENV_VAR, default_value_t = Budget::DEFAULT.0)]
    budget: u64,

    /// Step limit for replacement fixpoints (default k^n).
    #[arg(long, global = true)]
    max_steps: Option<u64>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Border lengths, proper borders and failure table of a pattern.
    Borders { word: String },
    /// |A_n(p)| for n = 0..=N.
    Count {
        pattern: String,
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value = "gf")]
        method: MethodArg,
    },
    /// Generating function coefficients, lowest degree first.
    Gf { pattern: String },
    /// Avoidant-equivalence and the first index where the counts differ.
    Equivalent {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    #[command(subcommand)]
    Bijection(BijectionCommand),
    /// Table of φ_L, composition and equivalent pair counts.
    Census(CensusArgs),
    /// Classify one pair of equal-length patterns.
    Classify {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        /// Also verify φ_L exhaustively on words of this length.
        #[arg(long)]
        verify_n: Option<usize>,
    },
    /// Fractions of patterns that are borderless or have border lengths {1, l}.
    Borderless {
        #[arg(long, short)]
        length: usize,
    },
    /// Run every reference example and the census rows; exit 3 on any failure.
    Repro {
        #[arg(long, default_value_t = 10)]
        max_length: usize,
    },
}

#[derive(Clone, Copy)]
enum MethodArg {
    One(Method),
    All,
}

impl std::str::FromStr for MethodArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(MethodArg::All)
        } else {
            s.parse().map(MethodArg::One)
        }
    }
}

#[derive(Subcommand)]
enum BijectionCommand {
    /// Run φ_L (or φ_R) on one word.
    Apply {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "L")]
        direction: Direction,
        /// Use the reversed scans φ̄_L / φ̄_R instead.
        #[arg(long)]
        reversed: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Check that φ_L is a bijection A_n(p) → A_n(q) inverted by φ_R.
    Verify {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long, short)]
        n: usize,
    },
    /// Check both reversal-conjugation identities on A_n(q) and A_n(p).
    Conjugation {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long, short)]
        n: usize,
    },
    /// Occurrences of q in the word and of p in its φ_L image.
    Balance {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        word: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CensusArgs {
    #[arg(long, short)]
    length: Option<usize>,
    /// Inclusive range such as 1..12.
    #[arg(long)]
    sweep: Option<String>,
}

/// Failures, each tied to one exit code.
enum Failure {
    Usage(String),
    Budget(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Verification(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::RecurrenceMismatch(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Context {
    alphabet: Alphabet,
    budget: Budget,
    max_steps: Option<u64>,
    format: Option<Format>,
}

impl Context {
    fn word(&self, s: &str) -> Result<Word, Failure> {
        Ok(self.alphabet.parse(s)?)
    }

    fn pattern(&self, s: &str) -> Result<Pattern, Failure> {
        Ok(Pattern::compile(self.word(s)?)?)
    }

    fn pair(&self, p: &str, q: &str) -> Result<PatternPair, Failure> {
        Ok(PatternPair::new(
            self.pattern(p)?,
            self.pattern(q)?,
            self.alphabet,
        )?)
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(Failure::Usage(
                "output format not supported by this command".into(),
            ))
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

fn parse_sweep(s: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("sweep must look like 1..12, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn run(cli: Cli) -> Outcome {
    let ctx = Context {
        alphabet: Alphabet::new(cli.alphabet)?,
        budget: Budget(cli.budget),
        max_steps: cli.max_steps,
        format: cli.format,
    };
    if ctx.budget.0 == 0 {
        return Err(Failure::Usage("budget must be positive".into()));
    }
    let a = ctx.alphabet;
    match cli.command {
        Command::Borders { word } => {
            let p = ctx.pattern(&word)?;
            let out = output::Borders::new(a, &p);
            match ctx.format(Format::Json, &[Format::Json, Format::Plain])? {
                Format::Plain => {
                    println!("lengths: {:?}", out.lengths);
                    println!("proper: {:?}", out.proper);
                    println!("borderless: {}", out.borderless);
                }
                _ => print_json(&out),
            }
        }
        Command::Count { pattern, n, method } => {
            let p = ctx.pattern(&pattern)?;
            let (series, agree) = match method {
                MethodArg::One(m) => (vec![count(&p, a, n, m, ctx.budget)?], None),
                MethodArg::All => {
                    let all = Method::ALL
                        .iter()
                        .map(|&m| count(&p, a, n, m, ctx.budget))
                        .collect::<Result<Vec<_>, _>>()?;
                    let agree = all.windows(2).all(|s| s[0].same_counts(&s[1]));
                    (all, Some(agree))
                }
            };
            let out = output::Count {
                pattern: a.format(p.word()),
                k: a.size(),
                method: match method {
                    MethodArg::One(m) => m.to_string(),
                    MethodArg::All => "all".into(),
                },
                counts: series[0].to_strings(),
                agree,
                by_method: if agree.is_some() {
                    series.iter().map(output::MethodCounts::new).collect()
                } else {
                    Vec::new()
                },
            };
            match ctx.format(Format::Json, &[Format::Json, Format::Plain, Format::Csv])? {
                Format::Plain => println!("{}", out.counts.join(",")),
                Format::Csv => {
                    println!("n,count");
                    for (i, c) in out.counts.iter().enumerate() {
                        println!("{i},{c}");
                    }
                }
                Format::Json => print_json(&out),
            }
            if agree == Some(false) {
                return Err(Failure::Verification("counting methods disagree".into()));
            }
        }
        Command::Gf { pattern } => {
            ctx.format(Format::Json, &[Format::Json])?;
            let p = ctx.pattern(&pattern)?;
            print_json(&output::Gf::new(a, &p, &avoidance_gf(&p, a)));
        }
        Command::Equivalent { p, q } => {
            ctx.format(Format::Json, &[Format::Json])?;
            let (pp, qq) = (ctx.pattern(&p)?, ctx.pattern(&q)?);
            print_json(&output::Equivalence {
                p: a.format(pp.word()),
                q: a.format(qq.word()),
                equivalent: are_avoidant_equivalent(&pp, &qq),
                first_difference: first_difference_index(&pp, &qq),
            });
        }
        Command::Bijection(cmd) => {
            ctx.format(Format::Json, &[Format::Json])?;
            run_bijection(&ctx, cmd)?;
        }
        Command::Census(args) => {
            let lengths = match (args.length, args.sweep) {
                (Some(l), _) => l..=l,
                (None, Some(s)) => parse_sweep(&s)?,
                (None, None) => unreachable!("clap enforces the group"),
            };
            let reports = census_sweep(lengths, a, ctx.budget)?;
            match ctx.format(Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Csv => {
                    println!("length,phiL_pairs,composition_pairs,equivalent_pairs");
                    for r in &reports {
                        println!(
                            "{},{},{},{}",
                            r.pattern_length,
                            r.phi_l_pairs,
                            r.composition_pairs,
                            r.equivalent_pairs
                        );
                    }
                }
                _ => {
                    let out: Vec<_> = reports.iter().map(|r| output::Census::new(a, r)).collect();
                    if out.len() == 1 {
                        print_json(&out[0]);
                    } else {
                        print_json(&out);
                    }
                }
            }
        }
        Command::Classify { p, q, verify_n } => {
            ctx.format(Format::Json, &[Format::Json])?;
            let (pp, qq) = (ctx.pattern(&p)?, ctx.pattern(&q)?);
            let c = classify_pair(&pp, &qq, a, ctx.budget)?;
            let verification = match verify_n {
                Some(n) => {
                    let pair = PatternPair::new(pp.clone(), qq.clone(), a)?;
                    let r = verify_bijection(&pair, n, ctx.budget)?;
                    Some(output::Verify::new(a, pp.word(), qq.word(), &r))
                }
                None => None,
            };
            print_json(&output::Classify::new(
                a,
                pp.word(),
                qq.word(),
                c,
                verification,
            ));
        }
        Command::Borderless { length } => {
            ctx.format(Format::Json, &[Format::Json])?;
            let (b, o) = borderless_stats(length, a, ctx.budget)?;
            print_json(&output::Borderless {
                length,
                alphabet: a.size(),
                borderless_fraction: b.to_string(),
                borderless_decimal: decimal6(&b),
                profile_one_l_fraction: o.to_string(),
                profile_one_l_decimal: decimal6(&o),
            });
        }
        Command::Repro { max_length } => {
            if a.size() != 2 {
                return Err(Failure::Usage("repro fixtures are binary".into()));
            }
            let checks = repro::run(max_length, ctx.budget);
            let failed = checks.iter().filter(|c| !c.passed).count();
            match ctx.format(Format::Plain, &[Format::Plain, Format::Json])? {
                Format::Json => print_json(
                    &checks
                        .iter()
                        .map(|c| output::ReproCheck {
                            name: c.name.clone(),
                            passed: c.passed,
                            detail: c.detail.clone(),
                        })
                        .collect::<Vec<_>>(),
                ),
                _ => {
                    for c in &checks {
                        println!(
                            "{} {} ({})",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                    println!(
                        "{} of {} checks passed",
                        checks.len() - failed,
                        checks.len()
                    );
                }
            }
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} checks failed")));
            }
        }
    }
    Ok(())
}

fn run_bijection(ctx: &Context, cmd: BijectionCommand) -> Outcome {
    let a = ctx.alphabet;
    match cmd {
        BijectionCommand::Apply {
            p,
            q,
            word,
            direction,
            reversed,
            trace,
        } => {
            let pair = ctx.pair(&p, &q)?;
            let w = ctx.word(&word)?;
            let (out, steps) = match (direction, reversed) {
                (Direction::L, false) => phi_l(&w, &pair, ctx.max_steps)?,
                (Direction::R, false) => phi_r(&w, &pair, ctx.max_steps)?,
                (Direction::L, true) => (
                    phi_l_bar(&w, &pair, ctx.max_steps)?,
                    ReplacementTrace::default(),
                ),
                (Direction::R, true) => (
                    phi_r_bar(&w, &pair, ctx.max_steps)?,
                    ReplacementTrace::default(),
                ),
            };
            print_json(&output::Apply::new(a, &w, &out, &steps, trace && !reversed));
        }
        BijectionCommand::Verify { p, q, n } => {
            let pair = ctx.pair(&p, &q)?;
            let r = verify_bijection(&pair, n, ctx.budget)?;
            print_json(&output::Verify::new(
                a,
                pair.p().word(),
                pair.q().word(),
                &r,
            ));
            if !r.bijection || !r.inverse_ok() {
                return Err(Failure::Verification(
                    "phi_L is not a bijection inverted by phi_R".into(),
                ));
            }
        }
        BijectionCommand::Conjugation { p, q, n } => {
            let pair = ctx.pair(&p, &q)?;
            let r = verify_conjugation(&pair, n, ctx.budget)?;
            print_json(&output::Conjugation::new(a, n, &r));
            if !r.holds() {
                return Err(Failure::Verification(
                    "conjugation identity violated".into(),
                ));
            }
        }
        BijectionCommand::Balance { p, q, word } => {
            let pair = ctx.pair(&p, &q)?;
            let w = ctx.word(&word)?;
            let (count_q_in_word, count_p_in_image) = occurrence_balance(&w, &pair)?;
            print_json(&output::Balance {
                word: a.format(&w),
                count_q_in_word,
                count_p_in_image,
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
