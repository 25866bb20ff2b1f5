//! The `reskit` command line.
//!
//! Exit codes: 0 success, 1 verification disagreement, 2 input error,
//! 3 limit exceeded. Diagnostics go to stderr.

use crate::cube::{daisy_diagnosis, DaisyVerdict};
use crate::generators::{
    benzenoid_chain, bridged_anthracene_hexagon, bridged_hexagons, coronene_like,
    cycle_with_interior_paths, even_cycle, fibonaccene, figure5_analogue, k2, polyacene,
    search_non_weakly_elementary, ChainCode, GeneratorError, MAX_SEARCH_VERTICES,
};
use crate::io::{read_graph, resonance_to_dot, write_graph, DotOptions, IoError};
use crate::matching::{fries_number, Limit, MatchingError};
use crate::plane_graph::{HandleDecomposition, PlaneBipartiteGraph, PlaneGraphError};
use crate::resonance::build_resonance_graph;
use crate::theorems::{run_corpus, CorpusSpec, TheoremError};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const LIMIT_ENV: &str = "RESKIT_LIMIT";

#[derive(Parser, Debug)]
#[command(name = "reskit", version, about = "Resonance graphs of plane bipartite graphs")]
struct Cli {
    /// Cap on the number of perfect matchings enumerated; overrides RESKIT_LIMIT.
    #[arg(long, global = true)]
    limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Faces, classification, handles, adjacent triples and peripheral coloring.
    Analyze { file: PathBuf },
    /// Builds the resonance graph.
    Resonance {
        file: PathBuf,
        /// Write the resonance graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Fries number and a witness matching.
    Fries { file: PathBuf },
    /// Daisy-cube recognition of the resonance graph.
    Daisy { file: PathBuf },
    /// Runs every verifier over a corpus.
    Verify {
        /// empty, chains:N, special, products[:SEED] or all.
        #[arg(long, default_value = "chains:6")]
        corpus: String,
        /// Print every report, not only disagreements.
        #[arg(long)]
        full: bool,
    },
    /// Writes a generated graph.
    Generate {
        /// even-cycle K | chain CODE | fibonaccene N | polyacene N | k2 |
        /// bridged-hexagons | bridged-anthracene-hexagon | coronene |
        /// figure5 | theta LEN A:B:L... | non-weakly-elementary [MAX]
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Limit(String),
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disagreement(_) => 1,
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Limit(m) | CliError::Disagreement(m) => m,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for CliError {}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Graph(g) => g.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<MatchingError> for CliError {
    fn from(e: MatchingError) -> Self {
        match e {
            MatchingError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<PlaneGraphError> for CliError {
    fn from(e: PlaneGraphError) -> Self {
        match e {
            PlaneGraphError::Matching(m) => m.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Graph(g) => g.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        if e.is_limit_exceeded() {
            CliError::Limit(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Input(e.to_string())
}

/// `--limit`, else `RESKIT_LIMIT`, else the default.
fn resolve_limit(flag: Option<usize>, env: Option<String>) -> Result<Limit, CliError> {
    if let Some(n) = flag {
        return Ok(Limit(n));
    }
    match env {
        Some(s) => s
            .trim()
            .parse()
            .map(Limit)
            .map_err(|_| CliError::Input(format!("{LIMIT_ENV}={s:?} is not a non-negative integer"))),
        None => Ok(Limit::default()),
    }
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).unwrap()).map_err(io_err)
}

/// The `analyze` report as JSON.
pub fn analyze(g: &PlaneBipartiteGraph) -> Result<Value, CliError> {
    let faces: Vec<Value> = g
        .faces()
        .iter()
        .map(|f| {
            json!({
                "id": f.id,
                "finite": f.is_finite(),
                "length": f.len(),
                "vertices": f.vertices(),
                "edges": f.edge_set.to_vec(),
            })
        })
        .collect();
    let class = g.classify()?;
    let handles = match g.handles()? {
        HandleDecomposition::Handles(h) => json!(h),
        HandleDecomposition::Whole(h) => json!({ "whole": h }),
    };
    let triples = match g.adjacent_triples() {
        Ok(t) => json!(t),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let coloring = match g.peripheral_coloring(true) {
        Ok(c) => json!({ "colorable": c.colorable, "failure": c.failure }),
        Err(e @ (PlaneGraphError::IsK2 | PlaneGraphError::NotElementary)) => {
            json!({ "colorable": Value::Null, "failure": e.to_string() })
        }
        Err(e) => return Err(e.into()),
    };
    Ok(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "finite_faces": g.finite_face_count(),
        "components": g.component_count(),
        "two_connected": g.is_two_connected(),
        "outerplane": class.is_outerplane(),
        "faces": faces,
        "classification": class,
        "handles": handles,
        "adjacent_triples": triples,
        "peripheral_coloring": coloring,
    }))
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, CliError> {
    let raw = params
        .get(i)
        .ok_or_else(|| CliError::Input(format!("missing parameter {what}")))?;
    raw.parse()
        .map_err(|_| CliError::Input(format!("bad parameter {what}: {raw:?}")))
}

/// A graph of the named family, as for `reskit generate`.
pub fn generate(family: &str, params: &[String]) -> Result<PlaneBipartiteGraph, CliError> {
    Ok(match family {
        "even-cycle" => even_cycle(param(params, 0, "K")?)?,
        "chain" => {
            let code: ChainCode = param::<String>(params, 0, "CODE")?.parse()?;
            benzenoid_chain(&code)?
        }
        "fibonaccene" => fibonaccene(param(params, 0, "N")?)?,
        "polyacene" => polyacene(param(params, 0, "N")?)?,
        "k2" => k2(),
        "bridged-hexagons" => bridged_hexagons(),
        "bridged-anthracene-hexagon" => bridged_anthracene_hexagon(),
        "coronene" => coronene_like(),
        "figure5" => figure5_analogue(),
        "theta" => {
            let len: usize = param(params, 0, "LEN")?;
            let paths = params[1..]
                .iter()
                .map(|p| {
                    let parts: Vec<usize> = p
                        .split(':')
                        .map(str::parse)
                        .collect::<Result<_, _>>()
                        .map_err(|_| CliError::Input(format!("bad path {p:?}")))?;
                    match parts[..] {
                        [a, b, l] => Ok((a, b, l)),
                        _ => Err(CliError::Input(format!("path {p:?} is not A:B:L"))),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycle_with_interior_paths(len, &paths)?
        }
        "non-weakly-elementary" => {
            let max = if params.is_empty() {
                MAX_SEARCH_VERTICES
            } else {
                param(params, 0, "MAX")?
            };
            search_non_weakly_elementary(max)?.graph
        }
        other => return Err(CliError::Input(format!("unknown family {other:?}"))),
    })
}

fn execute(cli: Cli, limit: Limit, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { file } => {
            let g = read_graph(&file)?;
            print_json(out, &analyze(&g)?)
        }
        Command::Resonance { file, dot } => {
            let g = read_graph(&file)?;
            let r = build_resonance_graph(&g, limit)?;
            print_json(
                out,
                &json!({
                    "vertices": r.vertex_count(),
                    "edges": r.edge_count(),
                    "components": r.component_count(),
                    "face_labels": r.face_labels(),
                }),
            )?;
            if let Some(path) = dot {
                let verdict = daisy_diagnosis(&r.to_simple_graph());
                let options = match &verdict {
                    DaisyVerdict::Daisy(cert) => DotOptions::with_certificate(cert),
                    DaisyVerdict::NotDaisy(_) => DotOptions {
                        edge_labels: true,
                        ..DotOptions::default()
                    },
                };
                std::fs::write(&path, resonance_to_dot(&r, &options))
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(())
        }
        Command::Fries { file } => {
            let g = read_graph(&file)?;
            let f = fries_number(&g, limit)?;
            writeln!(out, "{}", f.value).map_err(io_err)?;
            writeln!(out, "witness: {:?}", f.witness.edge_ids()).map_err(io_err)
        }
        Command::Daisy { file } => {
            let g = read_graph(&file)?;
            let r = build_resonance_graph(&g, limit)?.to_simple_graph();
            match daisy_diagnosis(&r) {
                DaisyVerdict::Daisy(cert) => {
                    writeln!(out, "daisy cube: idim {}, base vertex {}", cert.idim(), cert.base())
                        .map_err(io_err)?;
                    writeln!(out, "maximal vertices: {}", cert.maximal_codes().join(" "))
                        .map_err(io_err)?;
                    for (v, code) in cert.embedding.code_strings().iter().enumerate() {
                        writeln!(out, "{v} {code}").map_err(io_err)?;
                    }
                    Ok(())
                }
                DaisyVerdict::NotDaisy(reason) => {
                    writeln!(out, "not a daisy cube: {reason}").map_err(io_err)
                }
            }
        }
        Command::Verify { corpus, full } => {
            let spec: CorpusSpec = corpus.parse()?;
            let report = run_corpus(&spec, limit)?;
            let mut value = serde_json::to_value(&report).unwrap();
            if !full {
                let disagreeing: Vec<_> = report.disagreeing().cloned().collect();
                value["reports"] = json!(disagreeing);
                value.as_object_mut().unwrap().remove("skipped");
            }
            print_json(out, &value)?;
            for r in report.disagreeing() {
                writeln!(err, "disagreement: {} on {}", r.theorem, r.graph).map_err(io_err)?;
            }
            for f in &report.errors {
                writeln!(err, "error: {} on {}: {}", f.theorem, f.graph, f.error).map_err(io_err)?;
            }
            if report.disagreements > 0 {
                Err(CliError::Disagreement(format!(
                    "{} disagreement(s) over {} graph(s)",
                    report.disagreements, report.graphs
                )))
            } else if report.limit_exceeded() {
                Err(CliError::Limit("a limit was exceeded during verification".into()))
            } else if !report.errors.is_empty() {
                Err(CliError::Disagreement(format!(
                    "{} verifier error(s)",
                    report.errors.len()
                )))
            } else {
                Ok(())
            }
        }
        Command::Generate {
            family,
            params,
            output,
        } => {
            let g = generate(&family, &params)?;
            write_graph(&output, &g)?;
            writeln!(
                err,
                "wrote {} vertices, {} edges to {}",
                g.vertex_count(),
                g.edge_count(),
                output.display()
            )
            .map_err(io_err)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = resolve_limit(cli.limit, std::env::var(LIMIT_ENV).ok())
        .and_then(|limit| execute(cli, limit, out, err));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "reskit: {}", e.message());
            e.exit_code()
        }
    }
}
