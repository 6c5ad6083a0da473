//! The `dimer-spectral` command line: argument parsing, the commands, and
//! the JSON documents they print. Every document carries
//! `"schema": "dimer-spectral/1"`.

mod commands;

pub use commands::{
    cmd_forward, cmd_inverse, cmd_kasteleyn, cmd_newton, cmd_roundtrip, cmd_zigzag, EdgeJson, KasteleynJson,
    MatrixEntryJson, NewtonJson, QuantityError, RoundTripReport, ZigZagJson, ZigZagListJson,
};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "dimer-spectral", version, about = "Spectral transform of dimer models on the torus, and its inverse")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zig-zag paths, their homology classes and the minimality check.
    Zigzag(GraphArgs),
    /// The Newton polygon spanned by the zig-zag classes.
    Newton(GraphArgs),
    /// Kasteleyn signs, matrix, determinant and Casimirs (default mode: exact).
    Kasteleyn(WeightedArgs),
    /// Spectral curve, divisor and points at infinity (default mode: exact).
    Forward(WeightedArgs),
    /// Edge-weight class from spectral data (default mode: numeric).
    Inverse(InverseArgs),
    /// Forward then inverse, with per-coordinate errors (default mode: exact).
    Roundtrip(RoundTripArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the JSON document here instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct WeightedArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub weights: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Relative tolerance for the checks at the points at infinity.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct InverseArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub spectral: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Worker threads for the per-vertex linear systems.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct RoundTripArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub weights: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Where to write the report; same as `-o`.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("unsupported schema {0:?}")]
    Schema(String),
    #[error("jobs must be at least 1")]
    Jobs,
    #[error(transparent)]
    Graph(#[from] torus_graph::GraphError),
    #[error(transparent)]
    Kasteleyn(#[from] kasteleyn::KasteleynError),
    #[error(transparent)]
    Forward(#[from] spectral_forward::ForwardError),
    #[error(transparent)]
    Inverse(#[from] spectral_inverse::InverseError),
}

/// Variants that only wrap another crate's error; the kind reported is
/// the wrapped one.
const WRAPPERS: [&str; 6] = ["Graph", "Kasteleyn", "Forward", "Inverse", "Algebra", "Lattice"];

impl CliError {
    /// Name of the innermost error variant, e.g. `CasimirCollision`.
    pub fn kind(&self) -> String {
        let debug = format!("{self:?}");
        let mut s = debug.as_str();
        loop {
            let end = s.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(s.len());
            let (name, rest) = s.split_at(end);
            match rest.strip_prefix('(') {
                Some(inner) if WRAPPERS.contains(&name) => s = inner,
                _ => return name.to_string(),
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "error": { "kind": self.kind(), "detail": self.to_string() } })
    }
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.display().to_string(), source })
}

/// Runs a parsed command line. Returns the document and where it goes.
pub fn run(cli: &Cli) -> Result<(serde_json::Value, Option<PathBuf>), CliError> {
    Ok(match &cli.command {
        Command::Zigzag(a) => (cmd_zigzag(&a.graph)?, a.out.output.clone()),
        Command::Newton(a) => (cmd_newton(&a.graph)?, a.out.output.clone()),
        Command::Kasteleyn(a) => {
            (cmd_kasteleyn(&a.graph, &a.weights, a.mode.unwrap_or(Mode::Exact))?, a.out.output.clone())
        }
        Command::Forward(a) => {
            (cmd_forward(&a.graph, &a.weights, a.mode.unwrap_or(Mode::Exact), a.tol)?, a.out.output.clone())
        }
        Command::Inverse(a) => {
            (cmd_inverse(&a.graph, &a.spectral, a.mode.unwrap_or(Mode::Numeric), a.jobs)?, a.out.output.clone())
        }
        Command::Roundtrip(a) => {
            let doc = cmd_roundtrip(&a.graph, &a.weights, a.mode.unwrap_or(Mode::Exact), a.tol, a.jobs)?;
            (doc, a.report.clone().or_else(|| a.out.output.clone()))
        }
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(doc: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    s.push('\n');
    s
}
