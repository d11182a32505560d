//! `tradeoff` command line. [`run`] returns the process exit code:
//! 0 success, 1 failed verification, 2 infeasible, 3 oracle cap exceeded,
//! 64 usage error, 65 malformed input, 66 unreadable file.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use tradeoff_core::graph::{is_feasible, ProblemKind};
use tradeoff_core::reductions::{
    add_pendants, add_universal_vertex, csp_to_mids, induced_path_witness, mids_witness,
    sat_to_induced_path, GadgetGraph,
};
use tradeoff_core::{Error, OracleCaps, VertexSet};

use crate::formats::{self, ParseError};
use crate::generate::{generate, BadSpec, Instance, InstanceSpec};
use crate::problem::{self, Format, Param, Problem};
use crate::report::{self, Row};

#[derive(Debug, Parser)]
#[command(
    name = "tradeoff",
    version,
    about = "Time-approximation trade-off schemes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one scheme on one instance.
    Solve(SolveArgs),
    /// Run a scheme and its exact oracle, and check the certified ratio.
    Verify(SolveArgs),
    /// Run a scheme over several instances and ratios.
    Sweep(SweepArgs),
    /// Build a hardness gadget.
    Reduce(ReduceArgs),
    /// Write a seeded random instance.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("param").required(true).args(["ratio", "delta"]))]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub problem: Problem,
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Exponent for the m^δ set cover scheme.
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub input: PathBuf,
    /// Defaults to the problem's natural format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Apply shortest-path closure to a metric before solving.
    #[arg(long)]
    pub closure: bool,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub problem: Problem,
    /// Instance files; may be repeated.
    #[arg(long, required = true, num_args = 1..)]
    pub input: Vec<PathBuf>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub ratios: Vec<f64>,
    /// Attach exact optima and achieved ratios.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub closure: bool,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Cnf,
    Csp,
    Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Ipath,
    Mids,
    Mmvc,
    Itree,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub from: Source,
    #[arg(long, value_enum)]
    pub to: Target,
    #[arg(long = "r", default_value_t = 1)]
    pub r: usize,
    #[arg(long)]
    pub input: PathBuf,
    /// Writes PREFIX.dimacs, PREFIX.roles and PREFIX.witness instead of
    /// printing the graph with roles as comments.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Satisfying assignment whose gadget witness is built and verified.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Graph,
    Metric,
    Cnf,
    Sets,
    Csp,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Vertices, cities, elements or CSP variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of sets.
    #[arg(long)]
    pub m: Option<usize>,
    /// Edge, membership or constraint probability.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Probability that a CSP symbol pair is allowed.
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    /// CSP alphabet size.
    #[arg(long, default_value_t = 2)]
    pub s: usize,
    #[arg(long)]
    pub vars: Option<usize>,
    #[arg(long)]
    pub clauses: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub max_weight: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] BadSpec),
    #[error("ratio certification failed")]
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed => 1,
            CliError::Core(Error::Infeasible(_) | Error::NoFeasible) => 2,
            CliError::Core(Error::CapExceeded { .. }) => 3,
            CliError::Core(Error::InvalidRatio(_) | Error::InvalidParameter(_)) => 64,
            CliError::Usage(_) | CliError::Spec(_) => 64,
            CliError::Core(_) | CliError::Parse { .. } => 65,
            CliError::Io { .. } => 66,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult {
    let caps = OracleCaps::default();
    match command {
        Command::Solve(a) => {
            let instance = load(&a.input, a.problem, a.format, a.closure)?;
            let outcome = problem::solve(a.problem, &instance, param(&a)?, &caps)?;
            if a.csv {
                let row = Row::from_outcome(
                    &stem(&a.input),
                    a.ratio.or(a.delta).unwrap(),
                    &outcome,
                    None,
                );
                write_out(out, &report::to_csv(&[row]))
            } else {
                write_out(
                    out,
                    &(serde_json::to_string_pretty(&outcome).expect("serializable") + "\n"),
                )
            }
        }
        Command::Verify(a) => {
            let instance = load(&a.input, a.problem, a.format, a.closure)?;
            let v = report::verify(a.problem, &instance, param(&a)?, &caps)?;
            if a.json {
                write_out(
                    out,
                    &(serde_json::to_string_pretty(&v).expect("serializable") + "\n"),
                )?;
            } else {
                write_out(
                    out,
                    &format!(
                        "{} value {} opt {} ratio {:.4} guarantee {} {}\n",
                        a.problem.name(),
                        v.outcome.value,
                        v.opt,
                        v.ratio,
                        v.outcome.guarantee,
                        if v.pass { "PASS" } else { "FAIL" }
                    ),
                )?;
            }
            if v.pass {
                Ok(())
            } else {
                Err(CliError::VerifyFailed)
            }
        }
        Command::Sweep(a) => {
            let instances = a
                .input
                .iter()
                .map(|p| Ok((stem(p), load(p, a.problem, a.format, a.closure)?)))
                .collect::<CliResult<Vec<_>>>()?;
            let rows = report::sweep(a.problem, &instances, &a.ratios, a.oracle, &caps)?;
            if a.json {
                write_out(out, &(report::to_json(&rows) + "\n"))
            } else {
                write_out(out, &report::to_csv(&rows))
            }
        }
        Command::Reduce(a) => reduce(&a, out),
        Command::Generate(a) => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
            };
            let spec = match a.kind {
                Kind::Graph => InstanceSpec::Graph {
                    n: need(a.n, "n")?,
                    p: a.p,
                },
                Kind::Metric => InstanceSpec::Metric {
                    n: need(a.n, "n")?,
                    max_weight: a.max_weight,
                },
                Kind::Cnf => InstanceSpec::Cnf {
                    vars: need(a.vars, "vars")?,
                    clauses: need(a.clauses, "clauses")?,
                },
                Kind::Sets => InstanceSpec::SetSystem {
                    n: need(a.n, "n")?,
                    m: need(a.m, "m")?,
                    p: a.p,
                },
                Kind::Csp => InstanceSpec::Csp {
                    n: need(a.n, "n")?,
                    s: a.s,
                    p: a.p,
                    q: a.q,
                },
            };
            let text = emit(&generate(&spec, a.seed)?);
            match &a.output {
                Some(path) => write_file(path, &text),
                None => write_out(out, &text),
            }
        }
    }
}

fn param(a: &SolveArgs) -> CliResult<Param> {
    match (a.ratio, a.delta) {
        (Some(r), None) => Ok(Param::Ratio(r)),
        (None, Some(d)) => Ok(Param::Delta(d)),
        _ => Err(CliError::Usage(
            "give exactly one of --ratio and --delta".into(),
        )),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_out(out: &mut dyn Write, text: &str) -> CliResult {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

fn parse_as(path: &Path, format: Format) -> CliResult<Instance> {
    let text = read(path)?;
    let wrap = |source| CliError::Parse {
        path: path.display().to_string(),
        source,
    };
    Ok(match format {
        Format::Dimacs => Instance::Graph(formats::parse_graph(&text).map_err(wrap)?),
        Format::Cnf => Instance::Cnf(formats::parse_cnf(&text).map_err(wrap)?),
        Format::Matrix => Instance::Metric(formats::parse_metric(&text).map_err(wrap)?),
        Format::Sets => Instance::SetSystem(formats::parse_sets(&text).map_err(wrap)?),
        Format::Csp => Instance::Csp(formats::parse_csp(&text).map_err(wrap)?),
    })
}

fn load(
    path: &Path,
    problem: Problem,
    format: Option<Format>,
    closure: bool,
) -> CliResult<Instance> {
    let expected = problem.input_format();
    if let Some(f) = format.filter(|&f| f != expected) {
        return Err(CliError::Usage(format!(
            "{} reads {expected:?} input, not {f:?}",
            problem.name()
        )));
    }
    match parse_as(path, expected)? {
        Instance::Metric(m) if closure => Ok(Instance::Metric(m.shortest_path_closure())),
        instance => Ok(instance),
    }
}

pub fn emit(instance: &Instance) -> String {
    match instance {
        Instance::Graph(g) => formats::emit_graph(g),
        Instance::Metric(m) => formats::emit_metric(m),
        Instance::Cnf(phi) => formats::emit_cnf(phi),
        Instance::SetSystem(s) => formats::emit_sets(s),
        Instance::Csp(c) => formats::emit_csp(c),
    }
}

fn reduce(a: &ReduceArgs, out: &mut dyn Write) -> CliResult {
    let (gadget, witness): (GadgetGraph, Option<(VertexSet, ProblemKind)>) = match (a.from, a.to) {
        (Source::Cnf, Target::Ipath) => {
            let Instance::Cnf(phi) = parse_as(&a.input, Format::Cnf)? else {
                unreachable!()
            };
            let gadget = sat_to_induced_path(&phi, a.r)?;
            let witness = match &a.witness {
                Some(p) => {
                    let tau = formats::parse_bool_assignment(&read(p)?, phi.num_vars()).map_err(
                        |source| CliError::Parse {
                            path: p.display().to_string(),
                            source,
                        },
                    )?;
                    Some((
                        induced_path_witness(&phi, &tau, a.r)?,
                        ProblemKind::InducedPath,
                    ))
                }
                None => None,
            };
            (gadget, witness)
        }
        (Source::Csp, Target::Mids) => {
            let Instance::Csp(csp) = parse_as(&a.input, Format::Csp)? else {
                unreachable!()
            };
            let gadget = csp_to_mids(&csp, a.r)?;
            let witness = match &a.witness {
                Some(p) => {
                    let assign = formats::parse_symbol_assignment(
                        &read(p)?,
                        csp.num_vars(),
                        csp.alphabet_size(),
                    )
                    .map_err(|source| CliError::Parse {
                        path: p.display().to_string(),
                        source,
                    })?;
                    Some((
                        mids_witness(&csp, &assign, &gadget)?,
                        ProblemKind::IndependentDominatingSet,
                    ))
                }
                None => None,
            };
            (gadget, witness)
        }
        (Source::Graph, Target::Mmvc | Target::Itree) => {
            if a.witness.is_some() {
                return Err(CliError::Usage(
                    "--witness applies to cnf and csp sources only".into(),
                ));
            }
            let Instance::Graph(g) = parse_as(&a.input, Format::Dimacs)? else {
                unreachable!()
            };
            let gadget = if a.to == Target::Mmvc {
                add_pendants(&g, a.r)?
            } else {
                add_universal_vertex(&g)
            };
            (gadget, None)
        }
        (from, to) => {
            return Err(CliError::Usage(format!(
                "no reduction from {from:?} to {to:?}"
            )));
        }
    };
    if let Some((set, kind)) = &witness {
        if !is_feasible(&gadget.graph, set, *kind) {
            return Err(
                Error::NotSatisfying("witness failed verification on the gadget".into()).into(),
            );
        }
    }
    let graph = formats::emit_graph(&gadget.graph);
    let roles = formats::emit_roles(&gadget);
    let summary = format!(
        "c gadget with {} vertices and {} edges{}\n",
        gadget.n(),
        gadget.graph.edge_count(),
        witness
            .as_ref()
            .map(|(s, _)| format!(", verified witness of {} vertices", s.len()))
            .unwrap_or_default()
    );
    match &a.output {
        Some(prefix) => {
            let with = |ext: &str| PathBuf::from(format!("{}.{ext}", prefix.display()));
            write_file(&with("dimacs"), &graph)?;
            write_file(&with("roles"), &roles)?;
            if let Some((set, _)) = &witness {
                write_file(&with("witness"), &formats::emit_vertex_set(set))?;
            }
            write_out(out, &summary)
        }
        None => {
            let mut text = summary + &graph;
            for line in roles.lines().filter(|l| !l.starts_with('c')) {
                text.push_str(&format!("c role {line}\n"));
            }
            if let Some((set, _)) = &witness {
                text.push_str(&format!("c witness {}", formats::emit_vertex_set(set)));
            }
            write_out(out, &text)
        }
    }
}
