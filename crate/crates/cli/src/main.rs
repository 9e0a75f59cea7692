use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use concordance_cli::batch::{render_rows, run_batch};
use concordance_cli::twist::{render_twist, twist_report};
use concordance_cli::{parse_knot, render, run_knot, Cache, CliError, Format, Options, Query, Result};
use concordance_core::pipeline::ORACLE_LIMIT;
use concordance_core::Engine;

/// Heegaard Floer invariants of lifted 2-bridge knots and obstructions to
/// finite concordance order.
#[derive(Debug, Parser)]
#[command(name = "concordance", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Compute differentials with the exhaustive solver (2pq <= 200 only).
    #[arg(long, global = true)]
    oracle: bool,

    /// Directory of cached per-knot results; CONCORDANCE_CACHE overrides it.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    /// Worker threads.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// τ per spin^c label.
    Tau { knot: Vec<String> },
    /// Correction terms per spin^c label.
    D { knot: Vec<String> },
    /// Knot Floer homology of the lift.
    Hfk { knot: Vec<String> },
    /// All obstruction tests and the verdict.
    Obstruct { knot: Vec<String> },
    /// Linear independence of the twist knots K_{p,2}.
    Twist {
        #[arg(required = true)]
        ps: Vec<u64>,
    },
    /// Every knot of a `name,p,q` CSV file.
    Batch {
        input: PathBuf,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(CliError::Input("--jobs must be at least 1".into()));
        }
    }
    let opts = Options {
        engine: if cli.oracle { Engine::Oracle } else { Engine::Rectangles },
        cache: Cache::resolve(cli.cache),
    };
    let single = |words: &[String], query| {
        if let Some(n) = cli.jobs {
            // Only fails if the pool already exists.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        let spec = parse_knot(&words.join(" "))?;
        if cli.oracle && 2 * spec.p * spec.q > ORACLE_LIMIT as i64 {
            return Err(CliError::Input(format!("--oracle needs 2pq <= {ORACLE_LIMIT}")));
        }
        render(&run_knot(&spec, query, &opts)?, query, cli.format)
    };
    match &cli.command {
        Command::Tau { knot } => single(knot, Query::Tau),
        Command::D { knot } => single(knot, Query::D),
        Command::Hfk { knot } => single(knot, Query::Hfk),
        Command::Obstruct { knot } => single(knot, Query::Obstruct),
        Command::Twist { ps } => Ok(render_twist(&twist_report(ps)?, cli.format)),
        Command::Batch { input, output } => {
            let format = if cli.format == Format::Table && output.is_some() { Format::Csv } else { cli.format };
            let text = render_rows(&run_batch(input, &opts, cli.jobs)?, format)?;
            match output {
                Some(path) => {
                    std::fs::write(path, text).map_err(|e| CliError::Io {
                        context: format!("writing {}", path.display()),
                        source: e,
                    })?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
