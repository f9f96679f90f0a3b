//! Command-line front end.
//!
//! Every command writes one JSON document (or CSV for `export --format csv`)
//! to stdout or `--out`. Failures go to stderr as a single JSON object
//! `{"error": kind, "message": text}` with exit status 2 for usage and input
//! errors, 3 for enumeration-limit refusals and 1 for verification mismatches.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::Field;
use crate::hypergraph::{
    complete_graph, cycle_graph, five_vertex_catalog, interval_hypergraph, parse_hypergraph,
    partite_path_clutter, path_graph, serialize_hypergraph, star, Hypergraph,
};
use crate::metrics::{minimum_distance, weight_distribution};
use crate::theorems::{run_suite_with, CaseRecord, Suite, VerificationReport};
use crate::torus::EdgeCode;
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "edgecode", version, about = "Hypergraph edge-monomial codes on the torus over F_q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length and dimension of the code.
    Params(CodeArgs),
    /// Exact minimum distance with a witness message.
    Mindist(CodeArgs),
    /// Full weight distribution.
    Weights(CodeArgs),
    /// Gram matrix and self-orthogonality.
    Gram(CodeArgs),
    /// Generator matrix.
    Export(CodeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print a family's hypergraph as JSON.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Interval,
    /// Partite path clutter on `--n` vertices with `--d` parts, labels 1..=2d.
    Partite,
    /// Row `--n` of the five-vertex catalog.
    Table3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Hypergraph JSON file: {"vertices": s, "edges": [[1,2], ...]}.
    #[arg(long, required_unless_present = "family", conflicts_with = "family")]
    pub hypergraph: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub d1: Option<usize>,
    #[arg(long)]
    pub d2: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long, default_value_t = Limits::default().max_points,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_points: u64,
    #[arg(long, env = "EDGECODE_MAX_MESSAGES", default_value_t = Limits::default().max_messages,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_messages: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Visit every message instead of one per scalar class.
    #[arg(long)]
    pub full_enumeration: bool,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_points: self.max_points,
            max_messages: self.max_messages,
            full_enumeration: self.full_enumeration,
        }
    }
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub q: u64,
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub q: u64,
    /// One suite; all suites when omitted.
    #[arg(long, value_parser = parse_suite)]
    pub suite: Option<Suite>,
    /// JSON-lines file of finished cases; existing records are reused.
    #[arg(long)]
    pub progress: Option<PathBuf>,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::TooLarge { .. } | Error::SearchTooLarge { .. } => (EXIT_LIMIT, "resource_limit"),
            Error::Parse { .. } | Error::InvalidVertex { .. } => (EXIT_USAGE, "parse"),
            _ => (EXIT_USAGE, "invalid_input"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        kind: "io",
        message: format!("{}: {e}", path.display()),
    }
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    value.ok_or_else(|| {
        Error::BadParams(format!("family {family:?} needs --{flag}").to_lowercase()).into()
    })
}

pub fn load_hypergraph(source: &SourceArgs) -> Result<Hypergraph, Failure> {
    if let Some(path) = &source.hypergraph {
        let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
        return Ok(parse_hypergraph(&text)?);
    }
    let family = source.family.expect("clap enforces one source");
    let n = need(source.n, "n", family)?;
    let h = match family {
        Family::Path => path_graph(n)?,
        Family::Cycle => cycle_graph(n)?,
        Family::Complete => complete_graph(n)?,
        Family::Star => star(n)?,
        Family::Interval => interval_hypergraph(
            n,
            need(source.d1, "d1", family)?,
            need(source.d2, "d2", family)?,
        )?,
        Family::Partite => {
            let d = need(source.d, "d", family)?;
            partite_path_clutter(n, &(1..=2 * d).collect::<Vec<_>>())?
        }
        Family::Table3 => five_vertex_catalog()
            .into_iter()
            .find(|e| e.row == n)
            .map(|e| e.graph)
            .ok_or_else(|| Error::BadParams(format!("no catalog row {n}")))?,
    };
    Ok(h)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|e| io_failure(path, e))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

fn with_workers<T: Send>(
    workers: Option<u64>,
    job: impl FnOnce() -> Result<T, Failure> + Send,
) -> Result<T, Failure> {
    match workers {
        None => job(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build()
            .map_err(|e| Failure {
                code: EXIT_USAGE,
                kind: "invalid_input",
                message: format!("cannot start {k} workers: {e}"),
            })?
            .install(job),
    }
}

#[derive(Serialize)]
struct ParamsOutput {
    length: usize,
    dimension: usize,
}

#[derive(Serialize)]
struct DistanceOutput {
    distance: usize,
    witness: Vec<usize>,
    search_space: u64,
    /// Wall time; not deterministic.
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct GramOutput {
    self_orthogonal: bool,
    gram: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ErrorOutput<'a> {
    error: &'a str,
    message: &'a str,
}

fn code_command(cmd: &Command, args: &CodeArgs) -> Result<i32, Failure> {
    if args.format == Format::Csv && !matches!(cmd, Command::Export(_)) {
        return Err(Error::BadParams("--format csv applies to export only".into()).into());
    }
    let h = load_hypergraph(&args.source)?;
    let field = Field::new(args.q)?;
    let limits = args.limits.limits();
    with_workers(args.limits.workers, || {
        let code = EdgeCode::new(&h, &field, &limits)?;
        let text = match cmd {
            Command::Params(_) => to_json(&ParamsOutput {
                length: code.length(),
                dimension: code.dimension(),
            }),
            Command::Mindist(_) => {
                let r = minimum_distance(&code, &limits)?;
                to_json(&DistanceOutput {
                    distance: r.distance,
                    witness: r.witness.iter().map(|x| x.code()).collect(),
                    search_space: r.search_space,
                    elapsed_ms: r.elapsed.as_millis() as u64,
                })
            }
            Command::Weights(_) => to_json(&weight_distribution(&code, &limits)?),
            Command::Gram(_) => {
                let gram: Vec<Vec<usize>> = code
                    .gram_matrix()
                    .iter()
                    .map(|r| r.iter().map(|x| x.code()).collect())
                    .collect();
                let zero = gram.iter().flatten().all(|&x| x == 0);
                to_json(&GramOutput { self_orthogonal: zero, gram })
            }
            Command::Export(_) => match args.format {
                Format::Json => code.to_json(),
                Format::Csv => code.to_csv().trim_end().to_string(),
            },
            Command::Verify(_) | Command::Gen(_) => unreachable!("not a code command"),
        };
        emit(&args.out, &text)?;
        Ok(EXIT_OK)
    })
}

#[derive(Serialize, Deserialize)]
struct ProgressLine {
    suite: String,
    q: u64,
    record: CaseRecord,
}

/// Finished records for `(suite, q)`; unreadable lines, such as a line cut
/// short by an interrupted run, are skipped.
fn read_progress(path: &Path, suite: Suite, q: u64) -> Result<HashMap<String, CaseRecord>, Failure> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(HashMap::new()),
        Err(e) => return Err(io_failure(path, e)),
    };
    let mut done = HashMap::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| io_failure(path, e))?;
        if let Ok(p) = serde_json::from_str::<ProgressLine>(&line) {
            if p.suite == suite.name() && p.q == q {
                done.insert(p.record.id.clone(), p.record);
            }
        }
    }
    Ok(done)
}

fn verify_command(args: &VerifyArgs) -> Result<i32, Failure> {
    let suites: Vec<Suite> = match args.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let limits = args.limits.limits();
    let reports = with_workers(args.limits.workers, || {
        let mut reports = Vec::new();
        for &suite in &suites {
            let report = match &args.progress {
                None => run_suite_with(suite, args.q, &limits, &HashMap::new(), &|_| {})?,
                Some(path) => {
                    let resume = read_progress(path, suite, args.q)?;
                    let file = OpenOptions::new()
                        .create(true)
                        .append(true)
                        .open(path)
                        .map_err(|e| io_failure(path, e))?;
                    let file = Mutex::new(file);
                    let sink = |record: &CaseRecord| {
                        let line = to_json(&ProgressLine {
                            suite: suite.name().to_string(),
                            q: args.q,
                            record: record.clone(),
                        });
                        let mut f = file.lock().expect("progress file");
                        // progress is advisory; a failed write only costs a recompute
                        let _ = writeln!(f, "{line}").and_then(|_| f.flush());
                    };
                    run_suite_with(suite, args.q, &limits, &resume, &sink)?
                }
            };
            reports.push(report);
        }
        Ok(reports)
    })?;
    let ok = reports.iter().all(VerificationReport::all_passed);
    let text = match args.suite {
        Some(_) => to_json(&reports[0]),
        None => to_json(&reports),
    };
    emit(&args.out, &text)?;
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Verify(args) => verify_command(args),
        Command::Gen(args) => {
            let h = load_hypergraph(&args.source)?;
            emit(&args.out, &serialize_hypergraph(&h))?;
            Ok(EXIT_OK)
        }
        cmd @ (Command::Params(a)
        | Command::Mindist(a)
        | Command::Weights(a)
        | Command::Gram(a)
        | Command::Export(a)) => code_command(cmd, a),
    }
}

fn report_failure(f: &Failure) {
    let line = to_json(&ErrorOutput { error: f.kind, message: &f.message });
    eprintln!("{line}");
}

/// Parses `argv` and runs the command, returning the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return EXIT_OK;
        }
        Err(e) => {
            report_failure(&Failure {
                code: EXIT_USAGE,
                kind: "usage",
                message: e.render().to_string(),
            });
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(f) => {
            report_failure(&f);
            f.code
        }
    }
}
