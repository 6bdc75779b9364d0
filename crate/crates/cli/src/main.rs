//! Command-line front end for the Amoroso / log-gamma distribution library.
//!
//! Subcommands: `eval`, `describe`, `sample`, `curve`, `catalog`, `check`.
//! Exit codes: 0 success, 1 check-suite failure, 2 argument error,
//! 3 unknown distribution or constraint violation.
//!
//! Sampling is reproducible by construction: draws come from a ChaCha8
//! stream seeded with `--seed` (default 0), so equal invocations print
//! byte-identical output.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use amoroso_core::catalog::{self, CatalogEntry, Params};
use amoroso_core::verify::{self, CheckReport};
use amoroso_core::{Dist, Support};

mod format;
use format::g17;

#[derive(Parser)]
#[command(
    name = "amoroso",
    version,
    about = "The Amoroso and log-gamma distribution families: evaluate, describe, sample, tabulate, browse the catalog, and run verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate pdf, logpdf, cdf, sf, or quantile at one or more points
    Eval {
        /// Distribution name or synonym (case and separators ignored)
        #[arg(long)]
        dist: String,
        /// Named parameters, e.g. --param sigma=1 k=4
        #[arg(long = "param", value_name = "NAME=VALUE", num_args = 1..)]
        param: Vec<String>,
        /// Evaluation points (probabilities in (0,1) for --what quantile)
        #[arg(long = "x", num_args = 1.., required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
        #[arg(long, value_enum)]
        what: EvalWhat,
    },
    /// Print support, mode, moments, entropy, and matching catalog names
    Describe {
        #[arg(long)]
        dist: String,
        #[arg(long = "param", value_name = "NAME=VALUE", num_args = 1..)]
        param: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Draw reproducible samples, one per line
    Sample {
        #[arg(long)]
        dist: String,
        #[arg(long = "param", value_name = "NAME=VALUE", num_args = 1..)]
        param: Vec<String>,
        /// Number of draws
        #[arg(short = 'n', long = "count")]
        n: usize,
        /// PRNG seed (ChaCha8)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tabulate curves over a grid as CSV
    Curve {
        #[arg(long)]
        dist: String,
        #[arg(long = "param", value_name = "NAME=VALUE", num_args = 1..)]
        param: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        /// Number of grid points (at least 2)
        #[arg(long)]
        points: usize,
        /// Columns, e.g. --what pdf,cdf
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = vec![CurveCol::Pdf, CurveCol::Cdf])]
        what: Vec<CurveCol>,
    },
    /// List the catalog, or resolve one name with --find
    Catalog {
        /// Name or synonym to resolve
        #[arg(long)]
        find: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suites; exit 0 iff every check passes
    Check {
        #[arg(long, value_enum, default_value_t = SuiteSel::All)]
        suite: SuiteSel,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalWhat {
    Pdf,
    Logpdf,
    Cdf,
    Sf,
    Quantile,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum CurveCol {
    Pdf,
    Logpdf,
    Cdf,
    Sf,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteSel {
    Identities,
    Limits,
    All,
}

/// Errors with their process exit codes: 2 for argument problems,
/// 3 for name or constraint problems.
enum CliError {
    Args(String),
    Dist(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Args(_) => 2,
            CliError::Dist(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Args(m) | CliError::Dist(m) => m,
        }
    }
}

impl From<catalog::CatalogError> for CliError {
    fn from(e: catalog::CatalogError) -> Self {
        CliError::Dist(e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`amoroso curve ... | head`), like any
    // other line-oriented tool; Rust's default turns EPIPE into a panic.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Eval {
            dist,
            param,
            x,
            what,
        } => {
            let d = build(&dist, &param)?;
            for &xi in &x {
                let value = match what {
                    EvalWhat::Pdf => d.pdf(xi),
                    EvalWhat::Logpdf => d.log_pdf(xi),
                    EvalWhat::Cdf => d.cdf(xi),
                    EvalWhat::Sf => d.survival(xi),
                    EvalWhat::Quantile => d
                        .quantile(xi)
                        .map_err(|e| CliError::Args(e.to_string()))?,
                };
                println!("{}", g17(value));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Describe {
            dist,
            param,
            format,
        } => {
            let params = parse_params(&param)?;
            let d = catalog::construct(&dist, &params)?;
            let entry = catalog::lookup(&dist)?;
            describe(entry, &params, &d, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample {
            dist,
            param,
            n,
            seed,
        } => {
            let d = build(&dist, &param)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for x in d.sample(&mut rng, n) {
                println!("{}", g17(x));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Curve {
            dist,
            param,
            from,
            to,
            points,
            what,
        } => {
            if points < 2 {
                return Err(CliError::Args(format!(
                    "--points must be at least 2, got {points}"
                )));
            }
            if from.is_nan() || to.is_nan() || from >= to {
                return Err(CliError::Args(format!(
                    "--from {from} must be below --to {to}"
                )));
            }
            let d = build(&dist, &param)?;
            let header: Vec<&str> = what
                .iter()
                .map(|c| match c {
                    CurveCol::Pdf => "pdf",
                    CurveCol::Logpdf => "logpdf",
                    CurveCol::Cdf => "cdf",
                    CurveCol::Sf => "sf",
                })
                .collect();
            println!("x,{}", header.join(","));
            let step = (to - from) / (points - 1) as f64;
            for i in 0..points {
                let x = if i == points - 1 {
                    to
                } else {
                    from + step * i as f64
                };
                let mut row = vec![g17(x)];
                for c in &what {
                    let v = match c {
                        CurveCol::Pdf => d.pdf(x),
                        CurveCol::Logpdf => d.log_pdf(x),
                        CurveCol::Cdf => d.cdf(x),
                        CurveCol::Sf => d.survival(x),
                    };
                    row.push(g17(v));
                }
                println!("{}", row.join(","));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { find, format } => {
            match find {
                Some(name) => {
                    let entry = catalog::lookup(&name)?;
                    print_entry(entry, format);
                }
                None => print_catalog(format),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            suite,
            seed,
            format,
        } => {
            let reports = match suite {
                SuiteSel::Identities => verify::identity_suite::<ChaCha8Rng>(seed),
                SuiteSel::Limits => verify::limit_suite(),
                SuiteSel::All => verify::all_suites::<ChaCha8Rng>(seed),
            };
            let all_passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Json => {
                    let doc = CheckDoc {
                        suite: match suite {
                            SuiteSel::Identities => "identities",
                            SuiteSel::Limits => "limits",
                            SuiteSel::All => "all",
                        },
                        seed,
                        all_passed,
                        checks: reports.iter().map(CheckOut::from).collect(),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
                }
                _ => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Parse `NAME=VALUE` pairs and construct the named distribution.
fn build(dist: &str, raw_params: &[String]) -> Result<Dist, CliError> {
    let params = parse_params(raw_params)?;
    Ok(catalog::construct(dist, &params)?)
}

fn parse_params(raw: &[String]) -> Result<Params, CliError> {
    let mut params = Params::new();
    for item in raw {
        let Some((name, value)) = item.split_once('=') else {
            return Err(CliError::Args(format!(
                "malformed --param \"{item}\": expected NAME=VALUE"
            )));
        };
        let value: f64 = value
            .parse()
            .map_err(|_| CliError::Args(format!("malformed --param value in \"{item}\"")))?;
        params.set(name.trim(), value);
    }
    Ok(params)
}

// -- describe -------------------------------------------------------------

#[derive(Serialize)]
struct SupportOut {
    lower: Option<f64>,
    upper: Option<f64>,
    lower_closed: bool,
    upper_closed: bool,
}

impl From<Support> for SupportOut {
    fn from(s: Support) -> Self {
        SupportOut {
            lower: s.lower.is_finite().then_some(s.lower),
            upper: s.upper.is_finite().then_some(s.upper),
            lower_closed: s.lower_closed,
            upper_closed: s.upper_closed,
        }
    }
}

#[derive(Serialize)]
struct SideConditionOut {
    quantity: &'static str,
    satisfied: bool,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CanonicalOut {
    Amoroso {
        a: f64,
        theta: f64,
        alpha: f64,
        beta: f64,
    },
    LogGamma {
        nu: f64,
        lambda: f64,
        alpha: f64,
    },
}

#[derive(Serialize)]
struct DescribeOut {
    name: &'static str,
    family: String,
    params: BTreeMap<String, f64>,
    canonical: CanonicalOut,
    support: SupportOut,
    mode: f64,
    mean: Option<f64>,
    variance: Option<f64>,
    entropy: f64,
    side_conditions: Vec<SideConditionOut>,
    matches: Vec<&'static str>,
}

fn describe(entry: &CatalogEntry, params: &Params, d: &Dist, format: Format) {
    let summary = d.summary();
    let (canonical, matches) = match d {
        Dist::Amoroso(a) => (
            CanonicalOut::Amoroso {
                a: a.a(),
                theta: a.theta(),
                alpha: a.alpha(),
                beta: a.beta(),
            },
            catalog::classify(a, 1e-9),
        ),
        Dist::LogGamma(g) => (
            CanonicalOut::LogGamma {
                nu: g.nu(),
                lambda: g.lambda(),
                alpha: g.alpha(),
            },
            catalog::classify_log_gamma(g, 1e-9),
        ),
    };
    let out = DescribeOut {
        name: entry.name,
        family: entry.family.to_string(),
        params: params
            .keys()
            .map(|k| (k.to_string(), params.get(k).expect("own key")))
            .collect(),
        canonical,
        support: summary.support.into(),
        mode: summary.mode,
        mean: summary.mean,
        variance: summary.variance,
        entropy: summary.entropy,
        side_conditions: summary
            .side_conditions
            .iter()
            .map(|c| SideConditionOut {
                quantity: c.quantity,
                satisfied: c.satisfied,
            })
            .collect(),
        matches,
    };
    match format {
        Format::Text => {
            println!("name:      {}", out.name);
            println!("family:    {}", out.family);
            println!("support:   {}", summary.support);
            println!("mode:      {}", g17(out.mode));
            println!("mean:      {}", out.mean.map_or("undefined".into(), g17));
            println!(
                "variance:  {}",
                out.variance.map_or("undefined".into(), g17)
            );
            println!("entropy:   {}", g17(out.entropy));
            println!("matches:   {}", out.matches.join(", "));
        }
        _ => println!("{}", serde_json::to_string_pretty(&out).expect("serialize")),
    }
}

// -- catalog ----------------------------------------------------------------

#[derive(Serialize)]
struct ParamSpecOut {
    name: &'static str,
    constraint: &'static str,
}

#[derive(Serialize)]
struct EntryOut {
    name: &'static str,
    synonyms: &'static [&'static str],
    family: String,
    params: Vec<ParamSpecOut>,
    mapping: &'static str,
    anchor: &'static str,
    note: &'static str,
    limit: Option<&'static str>,
    constructible: bool,
}

impl From<&'static CatalogEntry> for EntryOut {
    fn from(e: &'static CatalogEntry) -> Self {
        EntryOut {
            name: e.name,
            synonyms: e.synonyms,
            family: e.family.to_string(),
            params: e
                .params
                .iter()
                .map(|p| ParamSpecOut {
                    name: p.name,
                    constraint: p.constraint.describe(),
                })
                .collect(),
            mapping: e.mapping,
            anchor: e.anchor,
            note: e.note,
            limit: e.limit,
            constructible: e.is_constructible(),
        }
    }
}

fn print_catalog(format: Format) {
    match format {
        Format::Json => {
            let out: Vec<EntryOut> = catalog::entries().iter().map(EntryOut::from).collect();
            println!("{}", serde_json::to_string_pretty(&out).expect("serialize"));
        }
        _ => {
            for e in catalog::entries() {
                let params: Vec<&str> = e.params.iter().map(|p| p.name).collect();
                println!(
                    "{:<28} {:<9} ({:<26}) -> {}",
                    e.name,
                    e.family.to_string(),
                    params.join(", "),
                    e.mapping
                );
            }
        }
    }
}

fn print_entry(entry: &'static CatalogEntry, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&EntryOut::from(entry)).expect("serialize")
            );
        }
        _ => {
            println!("name:      {}", entry.name);
            println!("family:    {}", entry.family);
            if !entry.synonyms.is_empty() {
                println!("synonyms:  {}", entry.synonyms.join(", "));
            }
            for p in entry.params {
                println!("param:     {} ({})", p.name, p.constraint.describe());
            }
            println!("mapping:   {}", entry.mapping);
            println!("anchor:    {}", entry.anchor);
            println!("note:      {}", entry.note);
            if let Some(limit) = entry.limit {
                println!("limit:     {limit}");
            }
        }
    }
}

// -- check ------------------------------------------------------------------

#[derive(Serialize)]
struct CheckOut<'a> {
    name: &'a str,
    statistic: f64,
    threshold: f64,
    passed: bool,
    detail: &'a str,
}

impl<'a> From<&'a CheckReport> for CheckOut<'a> {
    fn from(r: &'a CheckReport) -> Self {
        CheckOut {
            name: &r.name,
            statistic: r.statistic,
            threshold: r.threshold,
            passed: r.passed,
            detail: &r.detail,
        }
    }
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    suite: &'static str,
    seed: u64,
    all_passed: bool,
    checks: Vec<CheckOut<'a>>,
}
