//! Command-line front end: argument parsing, configuration, caching and
//! output for the `springergreen` library.

pub mod cache;
pub mod config;
pub mod render;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use springergreen::partitions::{enumerate_partitions, LieType, Partition, Sign};
use springergreen::springer::{
    conjecture_scan, euler_characteristic, partition_label, total_character, verify_difference_pairing,
    verify_induction, verify_main_consistency, verify_orthogonality, verify_positivity, verify_restriction,
    verify_symfunc_identities, verify_triangularity, NilpotentLabel, Report, SpringerLabel,
};
use springergreen::symfunc::{green, kostka_foulkes};
use springergreen::weylchar::{ClassLabel, Group, IrrLabel, WeylType};

use config::{Config, OutputFormat, Overrides, Parallelism};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io(_) => EXIT_IO,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Io(m) => m,
        }
    }
}

impl From<springergreen::Error> for CliError {
    fn from(e: springergreen::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "springergreen", version, about = "Total Springer characters, Green and Kostka-Foulkes polynomials")]
pub struct Cli {
    /// TOML file with cache_dir, max_rank, output_format and parallelism.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Character table cache directory; overrides SPRINGERGREEN_CACHE.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Disable the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true)]
    pub max_rank: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kostka-Foulkes polynomial K_{μ,λ}(t).
    Kostka {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Green polynomial gr^λ_ρ(t).
    Green {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        rho: String,
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Total Springer character of a nilpotent orbit.
    Springer {
        #[command(flatten)]
        orbit: Orbit,
        /// A class "ρ;σ" or "ρ;σ;±"; prints the single value there.
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// Euler characteristic of the Springer fiber.
    Euler {
        #[command(flatten)]
        orbit: Orbit,
    },
    /// Character table of W(A_{n-1}), W(BC_n) or W(D_n).
    Chartable {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        n: usize,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<Parallelism>,
    },
    /// Compare type D multiplicities on partitions with swapped 2-quotients.
    ConjectureScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<Parallelism>,
    },
}

#[derive(Debug, Args)]
pub struct Orbit {
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub split: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Restriction,
    Induction,
    MainConsistency,
    Difference,
    Triangularity,
    SymfuncIdentities,
    Orthogonality,
    Positivity,
    All,
}

/// What a command produced: text for standard output and an exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
    pub elapsed: Option<std::time::Duration>,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: EXIT_OK, elapsed: None }
    }
}

fn partition(text: &str) -> Result<Partition, CliError> {
    Ok(text.parse::<Partition>()?)
}

fn lie_type(text: &str) -> Result<LieType, CliError> {
    Ok(text.parse::<LieType>()?)
}

fn sign(text: &str) -> Result<Sign, CliError> {
    Ok(text.parse::<Sign>()?)
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let cfg = Config::load(&Overrides {
        config_file: cli.config,
        cache_dir: cli.cache_dir,
        no_cache: cli.no_cache,
        max_rank: cli.max_rank,
        output_format: cli.format,
    })?;
    let format = cfg.output_format;
    match cli.command {
        Command::Kostka { mu, lambda, at } => {
            let (mu, lambda) = (partition(&mu)?, partition(&lambda)?);
            let k = kostka_foulkes(&mu, &lambda)?;
            Ok(Output::ok(polynomial(&k, at, format, json!({"mu": mu.to_text(), "lambda": lambda.to_text()}))))
        }
        Command::Green { lambda, rho, at } => {
            let (lambda, rho) = (partition(&lambda)?, partition(&rho)?);
            let g = green(&lambda, &rho)?;
            Ok(Output::ok(polynomial(&g, at, format, json!({"lambda": lambda.to_text(), "rho": rho.to_text()}))))
        }
        Command::Springer { orbit, class } => springer(&cfg, &orbit, class.as_deref()),
        Command::Euler { orbit } => {
            let nl = nilpotent(&cfg, &orbit)?;
            let e = euler_characteristic(&nl)?;
            let text = match format {
                OutputFormat::Json => render::json_text(&json!({
                    "type": nl.ty.to_string(), "n": nl.n, "lambda": nl.text(), "euler": e.to_string(),
                })),
                _ => format!("{e}\n"),
            };
            Ok(Output::ok(text))
        }
        Command::Chartable { ty, n, out } => {
            let ty: WeylType = ty.parse()?;
            cfg.check_rank(n)?;
            let g = Group::new(ty, n)?;
            let table = cache::table(cfg.usable_cache_dir(), g);
            let format = if out.is_some() && cfg.output_format == OutputFormat::Plain {
                out.as_ref()
                    .and_then(|p| p.extension())
                    .and_then(|e| e.to_str())
                    .and_then(|e| OutputFormat::from_str(e, true).ok())
                    .unwrap_or(OutputFormat::Csv)
            } else {
                cfg.output_format
            };
            let text = render::table(&table, format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Verify { suite, ty, n, jobs } => {
            cfg.check_rank(n)?;
            with_threads(jobs.unwrap_or(cfg.parallelism), || verify(suite, &ty, n, format))
        }
        Command::ConjectureScan { n, jobs } => {
            cfg.check_rank(n)?;
            with_threads(jobs.unwrap_or(cfg.parallelism), || {
                let r = conjecture_scan(n)?;
                let elapsed = r.elapsed;
                Ok(Output { text: render::reports(&[r], format), code: EXIT_OK, elapsed: Some(elapsed) })
            })
        }
    }
}

fn with_threads<F>(p: Parallelism, f: F) -> Result<Output, CliError>
where
    F: FnOnce() -> Result<Output, CliError> + Send,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Parallelism::Threads(k) = p {
        builder = builder.num_threads(k);
    }
    let pool = builder.build().map_err(|e| CliError::Io(format!("cannot start worker threads: {e}")))?;
    pool.install(f)
}

fn polynomial(p: &springergreen::poly::IntPoly, at: Option<i64>, format: OutputFormat, mut meta: serde_json::Value) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    match (at, format) {
        (Some(v), OutputFormat::Json) => {
            meta["at"] = json!(v);
            meta["value"] = json!(p.eval_i64(v).to_string());
            render::json_text(&meta)
        }
        (Some(v), _) => format!("{}\n", p.eval_i64(v)),
        (None, OutputFormat::Json) => {
            meta["coeffs"] = json!(coeffs);
            meta["polynomial"] = json!(p.to_string());
            render::json_text(&meta)
        }
        (None, OutputFormat::Csv) => render::csv_lines([if coeffs.is_empty() { vec!["0".to_string()] } else { coeffs }]),
        (None, OutputFormat::Plain) => format!("{p}\n"),
    }
}

fn nilpotent(cfg: &Config, o: &Orbit) -> Result<NilpotentLabel, CliError> {
    let ty = lie_type(&o.ty)?;
    cfg.check_rank(o.n)?;
    let split = o.split.as_deref().map(sign).transpose()?;
    Ok(NilpotentLabel::new(ty, o.n, partition(&o.lambda)?, split)?)
}

/// Partition names for the irreducibles of `W(B_n)` and `W(C_n)`.
fn symbol_names(ty: LieType, n: usize) -> BTreeMap<IrrLabel, Partition> {
    let mut out = BTreeMap::new();
    if matches!(ty, LieType::B | LieType::C) {
        for mu in enumerate_partitions(ty.jordan_size(n)) {
            if let Ok(SpringerLabel::Irreducible(l)) = partition_label(ty, &mu, None) {
                out.insert(l, mu);
            }
        }
    }
    out
}

fn springer(cfg: &Config, o: &Orbit, class: Option<&str>) -> Result<Output, CliError> {
    let nl = nilpotent(cfg, o)?;
    let ch = total_character(&nl)?;
    let g = ch.group();
    let format = cfg.output_format;
    if let Some(text) = class {
        let label = ClassLabel::parse(g.ty, text)?;
        let v = ch.value(&label)?;
        let text = match format {
            OutputFormat::Json => render::json_text(&json!({
                "type": nl.ty.to_string(), "n": nl.n, "lambda": nl.text(), "class": label.to_string(), "value": v.to_string(),
            })),
            _ => format!("{v}\n"),
        };
        return Ok(Output::ok(text));
    }
    let names = symbol_names(nl.ty, nl.n);
    let name = |l: &IrrLabel| names.get(l).map_or_else(|| l.to_string(), |p| p.to_string());
    let mults = ch.multiplicities()?;
    let mut values = Vec::new();
    for c in g.classes().iter() {
        values.push((c.label.to_string(), ch.value(&c.label)?));
    }
    let text = match format {
        OutputFormat::Json => render::json_text(&json!({
            "type": nl.ty.to_string(),
            "n": nl.n,
            "lambda": nl.text(),
            "dimension": ch.dimension().to_string(),
            "decomposition": mults.iter().map(|(l, m)| json!({
                "irrep": l.to_string(), "name": name(l), "multiplicity": m.to_string(),
            })).collect::<Vec<_>>(),
            "values": values.iter().map(|(c, v)| json!({"class": c, "value": v.to_string()})).collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => {
            let mut rows = vec![vec!["kind".to_string(), "label".into(), "value".into()]];
            rows.extend(mults.iter().map(|(l, m)| vec!["multiplicity".into(), name(l), m.to_string()]));
            rows.extend(values.iter().map(|(c, v)| vec!["value".into(), c.clone(), v.to_string()]));
            render::csv_lines(&rows)
        }
        OutputFormat::Plain => {
            let terms: Vec<(String, BigInt)> = mults.iter().map(|(l, m)| (name(l), m.clone())).collect();
            let mut rows = vec![vec!["class".to_string(), "value".to_string()]];
            rows.extend(values.iter().map(|(c, v)| vec![c.clone(), v.to_string()]));
            format!(
                "{}{} {}\n{}\ndimension {}\n{}",
                nl.ty,
                nl.n,
                nl.text(),
                render::character_sum(&terms),
                ch.dimension(),
                render::aligned(&rows)
            )
        }
    };
    Ok(Output::ok(text))
}

fn verify(suite: Suite, ty: &str, n: usize, format: OutputFormat) -> Result<Output, CliError> {
    let start = Instant::now();
    let reports: Vec<Report> = if suite == Suite::Orthogonality {
        vec![verify_orthogonality(ty.parse::<WeylType>()?, n)?]
    } else {
        let lt = lie_type(ty)?;
        let one = |s: Suite| -> Result<Report, CliError> {
            Ok(match s {
                Suite::Restriction => verify_restriction(lt, n)?,
                Suite::Induction => verify_induction(lt, n)?,
                Suite::MainConsistency => verify_main_consistency(lt, n)?,
                Suite::Difference => {
                    if lt != LieType::D {
                        return Err(CliError::Input("the difference suite is for type D".into()));
                    }
                    verify_difference_pairing(n)?
                }
                Suite::Triangularity => verify_triangularity(lt, n)?,
                Suite::SymfuncIdentities => verify_symfunc_identities(lt, n)?,
                Suite::Positivity => verify_positivity(lt, n)?,
                Suite::Orthogonality => verify_orthogonality(lt.into(), n)?,
                Suite::All => unreachable!(),
            })
        };
        if suite == Suite::All {
            all_suites(lt, n, &one)?
        } else {
            vec![one(suite)?]
        }
    };
    let code = if reports.iter().all(Report::passed) { EXIT_OK } else { EXIT_FAILED };
    Ok(Output { text: render::reports(&reports, format), code, elapsed: Some(start.elapsed()) })
}

/// Every suite that applies to `(ty, n)`. For type D the character table
/// checks run first and the rest is skipped if they fail.
fn all_suites(ty: LieType, n: usize, one: &dyn Fn(Suite) -> Result<Report, CliError>) -> Result<Vec<Report>, CliError> {
    let mut out = Vec::new();
    if ty != LieType::A {
        out.push(one(Suite::Orthogonality)?);
        if ty == LieType::D && !out[0].passed() {
            return Ok(out);
        }
    }
    let mut suites = vec![Suite::MainConsistency];
    if ty != LieType::A {
        suites.extend([Suite::Restriction, Suite::Induction, Suite::Triangularity, Suite::Positivity, Suite::SymfuncIdentities]);
    }
    if ty == LieType::D && n.is_multiple_of(2) {
        suites.push(Suite::Difference);
    }
    for s in suites {
        out.push(one(s)?);
    }
    Ok(out)
}
