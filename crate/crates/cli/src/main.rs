use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use bicross_cli::commands::{EXIT_FAILURE, EXIT_OK};
use bicross_cli::{cmd_census, cmd_decide, cmd_exact, write_svg, InputFormat, Options, Outcome};
use bicross_core::DEFAULT_K_MAX;
use clap::{Args, Parser, Subcommand};

/// Exact two-layer crossing numbers of bipartite graphs.
///
/// Exit status: 0 when the command ran to completion (the yes/no answer is
/// in the report), 1 on other errors, 2 on a malformed graph file, 3 when a
/// resource limit was hit.
#[derive(Parser)]
#[command(name = "bicross", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a drawing with at most K crossings exists.
    Decide {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the crossing number, trying budgets up to KMAX.
    Exact {
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: u64,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Count all drawings with at most K crossings by exhaustive scan.
    Census {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Graph file, or `-` for standard input.
    file: String,
    /// Write the JSON report here (`-` for standard output).
    #[arg(long, value_name = "OUT")]
    json: Option<String>,
    /// Write an SVG of the witness drawing here.
    #[arg(long, value_name = "OUT")]
    svg: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    /// Maximum number of candidate layouts per side.
    #[arg(long, value_name = "N")]
    limit_candidates: Option<usize>,
    #[arg(long, value_enum, default_value_t = InputFormat::Native)]
    format: InputFormat,
}

impl Common {
    fn options(&self, oracle: bool) -> Options {
        Options {
            format: self.format,
            threads: self.threads,
            limit_candidates: self.limit_candidates,
            oracle,
        }
    }
}

fn emit(outcome: &Outcome, common: &Common) -> Result<(), String> {
    let json = outcome.report.to_json();
    match common.json.as_deref() {
        Some("-") => print!("{json}"),
        Some(path) => {
            std::fs::write(path, json).map_err(|e| format!("cannot write {path}: {e}"))?;
            print!("{}", outcome.report.to_table());
        }
        None => print!("{}", outcome.report.to_table()),
    }
    if let Some(path) = &common.svg {
        match &outcome.drawing {
            Some(d) => {
                write_svg(d, path).map_err(|e| format!("cannot write {}: {e}", path.display()))?
            }
            None => eprintln!(
                "bicross: no witness drawing, {} not written",
                path.display()
            ),
        }
    }
    std::io::stdout().flush().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, common) = match &cli.command {
        Command::Decide { k, oracle, common } => (
            cmd_decide(&common.file, *k, &common.options(*oracle)),
            common,
        ),
        Command::Exact {
            kmax,
            oracle,
            common,
        } => (
            cmd_exact(&common.file, *kmax, &common.options(*oracle)),
            common,
        ),
        Command::Census { k, common } => {
            (cmd_census(&common.file, *k, &common.options(false)), common)
        }
    };
    let code = match result {
        Ok(outcome) => match emit(&outcome, common) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("bicross: {e}");
                EXIT_FAILURE
            }
        },
        Err(e) => {
            eprintln!("bicross: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
