//! The `fraccover` command line. Every subcommand is a thin adapter that
//! serializes the corresponding library call: JSON on standard output,
//! human-readable summaries on standard error.

use std::io::{BufRead, Read, Write};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::covered::{is_covered_criterion, is_covered_direct, sufficient_2m, SufficientOutcome, Verdict};
use crate::error::{Error, Result};
use crate::factor::{gf_factor_criterion, gf_factor_flow, Bounds, FlowOutcome};
use crate::graph::Graph;
use crate::harness::{self, CampaignOptions, ExitStatus, GeneratorSpec, GraphSource, Theorem};
use crate::spectral::{hong_bound, spectral_radius, spectral_radius_jacobi, DEFAULT_TOL, JACOBI_MAX_N};

pub const SEED_ENV: &str = "FRACCOVER_SEED";

#[derive(Debug, Parser)]
#[command(name = "fraccover", version, about = "Exact checks for fractional (a,b,m)-covered graphs")]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct GraphInput {
    /// graph6 records.
    graphs: Vec<String>,
    /// Read graph6 records from a file, one per line ("-" for standard input).
    #[arg(long)]
    input: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius, its Jacobi cross-check and the Hong-type bound.
    Spectral {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Fractional (g,f)-factor feasibility.
    Factor {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated lower bounds, one per vertex.
        #[arg(long, value_delimiter = ',', requires = "f", conflicts_with_all = ["a", "b"])]
        g: Option<Vec<usize>>,
        /// Comma-separated upper bounds, one per vertex.
        #[arg(long, value_delimiter = ',', requires = "g")]
        f: Option<Vec<usize>>,
        #[arg(long, requires = "b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = FactorMethod::Flow)]
        method: FactorMethod,
    },
    /// Fractional (a,b,m)-coveredness.
    Covered {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = CoveredMethod::Direct)]
        method: CoveredMethod,
    },
    /// Check a theorem's conclusion on every graph meeting its hypotheses.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        m: usize,
        /// graph6 file ("-" for standard input).
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        input: Option<String>,
        /// Number of random dense graphs to generate.
        #[arg(long, requires_all = ["n", "remove"])]
        random: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Edges to remove from K_n: `R` or a range `LO..HI` cycled over graphs.
        #[arg(long)]
        remove: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = harness::DEFAULT_RHO_TOL)]
        rho_tol: f64,
        /// Write 0 for elapsed_ms so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Exhaustive agreement check of the two coveredness deciders.
    CrossValidate {
        #[arg(long)]
        max_n: usize,
        /// Parameter triples `a,b,m`; repeatable.
        #[arg(long = "params", value_parser = parse_triple)]
        params: Vec<(usize, usize, usize)>,
    },
    /// Print a graph6 record for a named family.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FactorMethod {
    Flow,
    Criterion,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoveredMethod {
    Direct,
    Criterion,
    Sufficient,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    Spectral,
    Size,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    Path,
    Empty,
    #[value(name = "h_na")]
    HNa,
    #[value(name = "k_join")]
    KJoin,
}

fn parse_triple(s: &str) -> std::result::Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected a,b,m, got '{s}'"));
    }
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("'{x}': {e}"));
    Ok((p(parts[0])?, p(parts[1])?, p(parts[2])?))
}

fn parse_remove(s: &str) -> Result<(usize, usize)> {
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::param(format!("bad removal count '{x}'")));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => parse(s).map(|r| (r, r)),
    }
}

const DEFAULT_PARAMS: [(usize, usize, usize); 11] = [
    (1, 1, 0), (1, 1, 1),
    (1, 2, 0), (1, 2, 1), (1, 2, 2),
    (2, 2, 0), (2, 2, 1), (2, 2, 2),
    (2, 3, 0), (2, 3, 1), (2, 3, 2),
];

/// Process handles for [`run_with`].
pub struct Io<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    /// Overrides `--seed` when set.
    pub seed_override: Option<u64>,
}

/// Entry point used by the binary: real process streams and environment.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let mut stdin = stdin.lock();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let seed_override = std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok());
    let mut io = Io { stdin: &mut stdin, stdout: &mut stdout, stderr: &mut stderr, seed_override };
    run_with(argv, &mut io)
}

pub fn run_with<I, T>(argv: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(io.stderr, "{}", e.render());
            return if e.use_stderr() { ExitStatus::InputError.code() } else { 0 };
        }
    };
    let outcome = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => dispatch(cli.command, io, Some(&pool)),
            Err(e) => Err(Error::param(format!("cannot start {jobs} workers: {e}"))),
        },
        None => dispatch(cli.command, io, None),
    };
    match outcome {
        Ok(status) => status.code(),
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            if matches!(e, Error::Consistency(_)) {
                return ExitStatus::Inconsistent.code();
            }
            if matches!(e, Error::InvalidParameter(_)) {
                let _ = writeln!(io.stderr, "{}", Cli::command().render_usage());
            }
            ExitStatus::InputError.code()
        }
    }
}

fn read_lines(path: &str, io: &mut Io<'_>) -> Result<Vec<String>> {
    let mut text = String::new();
    if path == "-" {
        io.stdin.read_to_string(&mut text)?;
    } else {
        std::fs::File::open(path)?.read_to_string(&mut text)?;
    }
    Ok(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect())
}

fn load_graphs(input: &GraphInput, io: &mut Io<'_>) -> Result<Vec<(String, Graph)>> {
    let mut records = input.graphs.clone();
    if let Some(path) = &input.input {
        records.extend(read_lines(path, io)?);
    }
    if records.is_empty() {
        return Err(Error::param("no graphs given (positional graph6 or --input)"));
    }
    records
        .into_iter()
        .map(|r| Graph::from_graph6(&r).map(|g| (r, g)))
        .collect()
}

fn emit(io: &mut Io<'_>, value: &impl Serialize) -> Result<()> {
    let line = serde_json::to_string(value).map_err(|e| Error::Consistency(e.to_string()))?;
    writeln!(io.stdout, "{line}")?;
    Ok(())
}

/// Runs `work` on the `--jobs` pool when one was requested.
fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, work: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(pool) => pool.install(work),
        None => work(),
    }
}

fn dispatch(command: Command, io: &mut Io<'_>, pool: Option<&rayon::ThreadPool>) -> Result<ExitStatus> {
    match command {
        Command::Spectral { input, tol } => {
            for (g6, graph) in load_graphs(&input, io)? {
                let r = spectral_radius(&graph, tol)?;
                let hong = hong_bound(&graph).ok();
                let jacobi = if graph.n() <= JACOBI_MAX_N { Some(spectral_radius_jacobi(&graph)?) } else { None };
                emit(io, &json!({
                    "graph6": g6,
                    "n": graph.n(),
                    "e": graph.edge_count(),
                    "rho": r.rho,
                    "residual": r.residual,
                    "iterations": r.iterations,
                    "jacobi": jacobi,
                    "hong_bound": hong,
                }))?;
                writeln!(io.stderr, "{g6}: rho={} hong_bound={}", r.rho, hong.map_or("n/a".into(), |h| h.to_string()))?;
            }
            Ok(ExitStatus::Ok)
        }
        Command::Factor { input, g, f, a, b, method } => {
            for (g6, graph) in load_graphs(&input, io)? {
                let bounds = match (&g, &f, a, b) {
                    (Some(g), Some(f), _, _) => Bounds::new(g.clone(), f.clone())?,
                    (_, _, Some(a), Some(b)) => Bounds::constant(graph.n(), a, b)?,
                    _ => return Err(Error::param("give either --g/--f or --a/--b")),
                };
                let mut out = serde_json::Map::new();
                out.insert("graph6".into(), json!(g6));
                let mut verdicts = Vec::new();
                if matches!(method, FactorMethod::Flow | FactorMethod::Both) {
                    let flow = gf_factor_flow(&graph, &bounds)?;
                    verdicts.push(flow.is_feasible());
                    out.insert("flow".into(), match flow {
                        FlowOutcome::Feasible(w) => json!({
                            "feasible": true,
                            "h": (0..graph.edge_count()).map(|e| w.value(e)).collect::<Vec<_>>(),
                        }),
                        FlowOutcome::Infeasible(cut) => json!({ "feasible": false, "cut": cut }),
                    });
                }
                if matches!(method, FactorMethod::Criterion | FactorMethod::Both) {
                    let c = in_pool(pool, || gf_factor_criterion(&graph, &bounds))?;
                    verdicts.push(c.is_feasible());
                    out.insert("criterion".into(), json!(c));
                }
                if verdicts.windows(2).any(|w| w[0] != w[1]) {
                    emit(io, &out)?;
                    return Err(Error::Consistency(format!("flow and criterion disagree on {g6}")));
                }
                out.insert("feasible".into(), json!(verdicts[0]));
                emit(io, &out)?;
                writeln!(io.stderr, "{g6}: feasible={}", verdicts[0])?;
            }
            Ok(ExitStatus::Ok)
        }
        Command::Covered { input, a, b, m, method } => {
            for (g6, graph) in load_graphs(&input, io)? {
                covered_one(io, pool, &g6, &graph, (a, b, m), method)?;
            }
            Ok(ExitStatus::Ok)
        }
        Command::Verify { theorem, a, b, m, input, random, n, remove, seed, rho_tol, no_timing } => {
            let theorem = match theorem {
                TheoremArg::Spectral => Theorem::Spectral,
                TheoremArg::Size => Theorem::Size,
            };
            let source = match (input, random) {
                (Some(path), _) => GraphSource::Lines(read_lines(&path, io)?),
                (None, Some(count)) => GraphSource::Random(GeneratorSpec {
                    count,
                    n: n.ok_or_else(|| Error::param("--random needs --n"))?,
                    remove: parse_remove(remove.as_deref().unwrap_or("0"))?,
                    seed: io.seed_override.unwrap_or(seed),
                }),
                (None, None) => return Err(Error::param("give --input or --random")),
            };
            let options = CampaignOptions { rho_tol, timing: !no_timing };
            let campaign = in_pool(pool, || harness::verify_campaign(&source, theorem, a, b, m, &options))?;
            write!(io.stdout, "{}", campaign.to_json_lines())?;
            let records: Vec<_> = campaign.records().collect();
            let met = records.iter().filter(|r| r.hypotheses_met).count();
            let covered = records.iter().filter(|r| r.covered == Some(true)).count();
            writeln!(
                io.stderr,
                "{} graphs, {} records, {met} met the hypotheses, {covered} covered; exit {}",
                campaign.lines.len(),
                records.len(),
                campaign.status.code()
            )?;
            Ok(campaign.status)
        }
        Command::CrossValidate { max_n, params } => {
            let params = if params.is_empty() { DEFAULT_PARAMS.to_vec() } else { params };
            let summary = in_pool(pool, || harness::cross_validate(max_n, &params))?;
            emit(io, &summary)?;
            writeln!(
                io.stderr,
                "{} graphs x {} parameter sets: all agree",
                summary.graphs,
                summary.params.len()
            )?;
            Ok(ExitStatus::Ok)
        }
        Command::Construct { family, n, a } => {
            let need_a = || a.ok_or_else(|| Error::param("this family needs --a"));
            let graph = match family {
                Family::Complete => Graph::complete(n)?,
                Family::Cycle => Graph::cycle(n)?,
                Family::Path => Graph::path(n)?,
                Family::Empty => Graph::empty(n)?,
                Family::HNa => Graph::h_na(n, need_a()?)?,
                Family::KJoin => Graph::k_join_family(n, need_a()?)?,
            };
            writeln!(io.stdout, "{}", graph.to_graph6())?;
            writeln!(io.stderr, "n={} e={}", graph.n(), graph.edge_count())?;
            Ok(ExitStatus::Ok)
        }
    }
}

fn verdict_json(v: &Verdict) -> serde_json::Value {
    json!(v)
}

fn covered_one(
    io: &mut Io<'_>,
    pool: Option<&rayon::ThreadPool>,
    g6: &str,
    graph: &Graph,
    (a, b, m): (usize, usize, usize),
    method: CoveredMethod,
) -> Result<()> {
    let head = json!({ "graph6": g6, "a": a, "b": b, "m": m });
    let mut out = head.as_object().cloned().expect("object");
    match method {
        CoveredMethod::Direct | CoveredMethod::Criterion => {
            let v = in_pool(pool, || {
                if method == CoveredMethod::Direct {
                    is_covered_direct(graph, a, b, m)
                } else {
                    is_covered_criterion(graph, a, b, m)
                }
            })?;
            out.extend(verdict_json(&v).as_object().cloned().expect("object"));
            writeln!(io.stderr, "{g6}: covered={} ({})", v.covered, v.method.as_str())?;
        }
        CoveredMethod::Sufficient => {
            let s = sufficient_2m(graph, a, b, m)?;
            out.insert("method".into(), json!("sufficient"));
            out.insert("holds".into(), json!(s.holds()));
            if let SufficientOutcome::Inconclusive { s, lhs } = &s {
                out.insert("s_set".into(), json!(s));
                out.insert("lhs".into(), json!(lhs));
            }
            writeln!(io.stderr, "{g6}: 2m condition {}", if s.holds() { "holds" } else { "inconclusive" })?;
        }
        CoveredMethod::Both => {
            let (c, d) = in_pool(pool, || (is_covered_criterion(graph, a, b, m), is_covered_direct(graph, a, b, m)));
            let (c, d) = (c?, d?);
            let agree = c.covered == d.covered;
            out.insert("covered".into(), json!(d.covered));
            out.insert("agree".into(), json!(agree));
            out.insert("criterion".into(), verdict_json(&c));
            out.insert("direct".into(), verdict_json(&d));
            emit(io, &out)?;
            if !agree {
                return Err(Error::Consistency(format!("criterion and direct disagree on {g6}")));
            }
            writeln!(io.stderr, "{g6}: covered={} (methods agree)", d.covered)?;
            return Ok(());
        }
    }
    emit(io, &out)
}
