//! Command implementations shared by the binary and the tests.

use std::io::Read as _;
use std::path::Path;
use std::time::Instant;

use bicross_core::{BipartiteGraph, Drawing, Solver, SolverConfig};

use crate::format::{parse, InputFormat, ParseError};
use crate::report::ReportDocument;

/// Exit statuses. The yes/no answer never affects the status.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Solver(#[from] bicross_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Solver(e) if e.is_resource_limit() => EXIT_RESOURCE,
            _ => EXIT_FAILURE,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub format: InputFormat,
    pub threads: Option<usize>,
    pub limit_candidates: Option<usize>,
    /// Answer with the exhaustive oracle instead of the enumeration solver.
    pub oracle: bool,
}

impl Options {
    fn solver(&self) -> Result<Solver, CliError> {
        let mut config = SolverConfig::default();
        if let Some(t) = self.threads {
            config.threads = t;
        }
        if let Some(c) = self.limit_candidates {
            config.max_candidates_per_side = c;
        }
        Ok(Solver::new(config)?)
    }
}

/// Result of a command: the report and the drawing to render, if any.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: ReportDocument,
    pub drawing: Option<Drawing>,
}

/// Reads and parses `path`; `-` reads standard input.
pub fn load_graph(path: &str, format: InputFormat) -> Result<BipartiteGraph, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(io_err)?
    };
    parse(&text, format).map_err(|source| CliError::Parse {
        path: path.to_string(),
        source,
    })
}

fn timed(
    start: Instant,
    report: ReportDocument,
    drawing: Option<Drawing>,
) -> Result<Outcome, CliError> {
    let mut report = report;
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(Outcome { report, drawing })
}

pub fn cmd_decide(path: &str, k: u64, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let g = load_graph(path, opts.format)?;
    let solver = opts.solver()?;
    let r = if opts.oracle {
        solver.decide_with_oracle(&g, k)?
    } else {
        solver.decide(&g, k)?
    };
    timed(start, ReportDocument::from_decide(path, &g, &r), r.witness)
}

pub fn cmd_exact(path: &str, k_max: u64, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let g = load_graph(path, opts.format)?;
    let solver = opts.solver()?;
    let r = if opts.oracle {
        solver.exact_with_oracle(&g, k_max)?
    } else {
        solver.exact(&g, k_max)?
    };
    timed(
        start,
        ReportDocument::from_exact(path, &g, k_max, &r),
        r.witness,
    )
}

pub fn cmd_census(path: &str, k: u64, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let g = load_graph(path, opts.format)?;
    let c = opts.solver()?.census(&g, k)?;
    timed(start, ReportDocument::from_census(path, &g, &c), None)
}
