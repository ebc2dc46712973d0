//! Command-line front end.
//!
//! Settings come from flags, then an optional `key = value` config file,
//! then the `COPROD_SEED` environment variable (seed only), then defaults.
//! Exit codes: 0 success, 1 check failure, 2 usage or parse error.

mod config;
mod syntax;

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::AlgebraElement;
use crate::centralizer::{centralizer_basis, check_pairwise_commutes};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monoid::Alphabet;
use crate::order::compare;
use crate::verify::commutativity::commutativity_on;
use crate::verify::{negative_control, run as run_campaign, CheckReport, Lemma, Outcome, TrialConfig};

pub use config::{FileConfig, SEED_ENV};
pub use syntax::{format_element, parse_element, parse_word};

/// Version tag of the structured output.
pub const SCHEMA: &str = "coprod-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "coprod", version, about = "Exact arithmetic and centralizers in k<X> * k[Y]")]
pub struct Cli {
    /// Number of noncommuting variables x1..xN.
    #[arg(long, global = true)]
    pub nx: Option<usize>,
    /// Number of commuting variables y1..yN.
    #[arg(long, global = true)]
    pub ny: Option<usize>,
    /// Coefficient field: `q` or `gf:P`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// File of `key = value` lines supplying defaults for these flags.
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of an element.
    Normalize { element: String },
    /// Multiply two elements.
    Mul { a: String, b: String },
    /// Compare two words: LT, EQ or GT.
    Compare { u: String, v: String },
    /// Decide whether two elements commute.
    Commute { a: String, b: String },
    /// Truncated centralizer of an element with graded dimensions.
    Centralizer {
        #[arg(long)]
        u: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run verification campaigns.
    Verify {
        /// A lemma name or `all`.
        #[arg(long)]
        lemma: Option<String>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Run the corrupted-evidence controls instead; they must fail.
        #[arg(long)]
        negative_control: bool,
    },
}

/// Fully resolved settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub nx: usize,
    pub ny: usize,
    pub field: FieldSpec,
    pub seed: u64,
    pub format: Format,
    pub max_degree: Option<usize>,
    pub trials: Option<usize>,
    pub lemma: Option<String>,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    command: String,
    inputs: Value,
    results: Value,
    checks: Vec<CheckReport>,
    seed: u64,
}

struct Output {
    command: &'static str,
    inputs: Value,
    results: Value,
    checks: Vec<CheckReport>,
    text: String,
}

impl Settings {
    fn resolve(cli: &Cli, file: &FileConfig, env_seed: Option<&str>) -> Result<Settings> {
        let field_text = cli.field.clone().or_else(|| file.field.clone());
        let field = match field_text {
            Some(t) => t.parse()?,
            None => FieldSpec::Rationals,
        };
        let env_seed = env_seed
            .map(|s| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Config(format!("{SEED_ENV} must be an integer, got `{s}`")))
            })
            .transpose()?;
        let format = match cli.format {
            Some(f) => f,
            None => match file.format.as_deref() {
                None | Some("text") => Format::Text,
                Some("structured") => Format::Structured,
                Some(other) => return Err(Error::Config(format!("unknown format `{other}`"))),
            },
        };
        let (max_degree, trials, lemma) = match &cli.command {
            Command::Centralizer { max_degree, .. } => (*max_degree, None, None),
            Command::Verify {
                lemma,
                trials,
                max_degree,
                ..
            } => (*max_degree, *trials, lemma.clone()),
            _ => (None, None, None),
        };
        Ok(Settings {
            nx: cli.nx.or(file.nx).unwrap_or(2),
            ny: cli.ny.or(file.ny).unwrap_or(2),
            field,
            seed: cli.seed.or(file.seed).or(env_seed).unwrap_or(0),
            format,
            max_degree: max_degree.or(file.max_degree),
            trials: trials.or(file.trials),
            lemma: lemma.or_else(|| file.lemma.clone()),
        })
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code and everything to print on standard output.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let env_seed = std::env::var(SEED_ENV).ok();
    run_with_env(args, env_seed.as_deref())
}

/// [`run`] with an explicit value for the seed environment variable.
pub fn run_with_env<I, S>(args: I, env_seed: Option<&str>) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let settings = match cli
        .config
        .as_deref()
        .map(FileConfig::load)
        .unwrap_or_else(|| Ok(FileConfig::default()))
        .and_then(|file| Settings::resolve(&cli, &file, env_seed))
    {
        Ok(s) => s,
        Err(e) => return (2, format!("error: {e}\n")),
    };
    match execute(&cli.command, &settings) {
        Ok(out) => {
            let failed = out.checks.iter().any(|c| !c.passed());
            let code = i32::from(failed);
            let body = match settings.format {
                Format::Text => out.text,
                Format::Structured => {
                    let report = Report {
                        schema: SCHEMA,
                        command: out.command.to_string(),
                        inputs: out.inputs,
                        results: out.results,
                        checks: out.checks,
                        seed: settings.seed,
                    };
                    serde_json::to_string_pretty(&report).expect("serializable") + "\n"
                }
            };
            (code, body)
        }
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn check_lines(checks: &[CheckReport]) -> String {
    let mut text = String::new();
    for c in checks {
        text.push_str(&c.summary());
        text.push('\n');
        for w in &c.failures {
            text.push_str(&format!("  trial {}: {}\n", w.trial, w.detail));
            for (k, v) in &w.inputs {
                text.push_str(&format!("    {k} = {v}\n"));
            }
        }
    }
    text
}

fn execute(command: &Command, s: &Settings) -> Result<Output> {
    if s.nx > crate::verify::config::MAX_LETTERS || s.ny > crate::verify::config::MAX_LETTERS {
        return Err(Error::Config("--nx and --ny must be at most 4".into()));
    }
    let alphabet = Arc::new(Alphabet::standard(s.nx, s.ny));
    let parse = |t: &str| parse_element(&alphabet, s.field, t);
    let ring = json!({"nx": s.nx, "ny": s.ny, "field": s.field.to_string()});
    let with_ring = |extra: Value| {
        let mut v = ring.clone();
        if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
            m.extend(e);
        }
        v
    };
    Ok(match command {
        Command::Normalize { element } => {
            let e = parse(element)?;
            Output {
                command: "normalize",
                inputs: with_ring(json!({"element": element})),
                results: json!({"element": e.to_string(), "degree": e.total_degree().to_string(), "terms": e.num_terms()}),
                checks: Vec::new(),
                text: format!("{e}\n"),
            }
        }
        Command::Mul { a, b } => {
            let p = parse(a)?.multiply(&parse(b)?)?;
            Output {
                command: "mul",
                inputs: with_ring(json!({"a": a, "b": b})),
                results: json!({"product": p.to_string()}),
                checks: Vec::new(),
                text: format!("{p}\n"),
            }
        }
        Command::Compare { u, v } => {
            let (wu, wv) = (parse_word(&alphabet, u)?, parse_word(&alphabet, v)?);
            let order = match compare(&wu, &wv) {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            };
            Output {
                command: "compare",
                inputs: with_ring(json!({"u": u, "v": v})),
                results: json!({"order": order}),
                checks: Vec::new(),
                text: format!("{order}\n"),
            }
        }
        Command::Commute { a, b } => {
            let c = parse(a)?.commutator(&parse(b)?)?;
            Output {
                command: "commute",
                inputs: with_ring(json!({"a": a, "b": b})),
                results: json!({"commutes": c.is_zero(), "commutator": c.to_string()}),
                checks: Vec::new(),
                text: format!("{}\ncommutator: {c}\n", c.is_zero()),
            }
        }
        Command::Centralizer { u, .. } => {
            let ue = parse(u)?;
            let n = s.max_degree.unwrap_or(4);
            let gb = centralizer_basis(&ue, n)?;
            let pairwise = check_pairwise_commutes(&gb);
            let mut pair_report = CheckReport::new("pairwise-commutes");
            pair_report.record(
                0,
                match pairwise.witness {
                    None => Outcome::Pass,
                    Some((i, j)) => Outcome::Fail(format!("{} and {} do not commute", gb.cumulative[i], gb.cumulative[j])),
                },
                || vec![("u".into(), ue.to_string())],
            );
            let mut commutativity_report = CheckReport::new("commutativity");
            commutativity_report.record(0, commutativity_on(&gb)?, || {
                vec![("u".into(), ue.to_string()), ("max_degree".into(), n.to_string())]
            });
            let checks = vec![pair_report, commutativity_report];
            let basis: Vec<Value> = gb
                .per_degree
                .iter()
                .map(|d| json!({"degree": d.degree, "dim_gr": d.dim_gr, "elements": d.new_basis.iter().map(|e| e.to_string()).collect::<Vec<_>>()}))
                .collect();
            let mut text = format!("dims: {:?}\n", gb.dims());
            for d in &gb.per_degree {
                for e in &d.new_basis {
                    text.push_str(&format!("  [{}] {e}\n", d.degree));
                }
            }
            text.push_str(&check_lines(&checks));
            Output {
                command: "centralizer",
                inputs: with_ring(json!({"u": u, "max_degree": n})),
                results: json!({"dims": gb.dims(), "u_is_pure": ue.is_pure(), "basis": basis}),
                checks,
                text,
            }
        }
        Command::Verify { negative_control: neg, .. } => {
            let lemmas: Vec<Lemma> = match s.lemma.as_deref() {
                None | Some("all") => Lemma::ALL.to_vec(),
                Some(name) => vec![name.parse()?],
            };
            let cfg = TrialConfig {
                nx: s.nx,
                ny: s.ny,
                field: s.field,
                max_degree: s.max_degree.unwrap_or(TrialConfig::default().max_degree),
                trials: s.trials.unwrap_or(TrialConfig::default().trials),
                seed: s.seed,
                ..TrialConfig::default()
            };
            let checks = lemmas
                .iter()
                .map(|&l| if *neg { negative_control(l) } else { run_campaign(l, &cfg) })
                .collect::<Result<Vec<_>>>()?;
            Output {
                command: "verify",
                inputs: with_ring(json!({
                    "lemma": s.lemma.clone().unwrap_or_else(|| "all".into()),
                    "trials": cfg.trials,
                    "max_degree": cfg.max_degree,
                    "negative_control": neg,
                })),
                results: json!({"passed": checks.iter().all(CheckReport::passed)}),
                text: check_lines(&checks),
                checks,
            }
        }
    })
}

/// Parses, formats and re-parses `a`'s text; `true` when the round trip is
/// the identity.
pub fn round_trips(a: &AlgebraElement) -> bool {
    parse_element(a.alphabet(), a.field(), &format_element(a)).as_ref() == Ok(a)
}
