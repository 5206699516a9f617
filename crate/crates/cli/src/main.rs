use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use primsft_cli::commands::failure;
use primsft_cli::config::{parse_bounds, parse_mode, DEFAULT_ANGLES, DEFAULT_BOUNDS, DEFAULT_TOL};
use primsft_cli::{
    cmd_analyze, cmd_cycles, cmd_gamma, cmd_poset, cmd_verify, write_atomic, AngleSpec, CliError,
    Outcome, RunConfig, EXIT_VALIDATION,
};

#[derive(Parser)]
#[command(
    name = "primsft",
    version,
    about = "Primitive ideal spaces of topological graph algebras over shifts of finite type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate quasi-orbits, Prim points and specialization as JSON.
    Analyze(Common),
    /// Apply γ^z to a point literal.
    Gamma {
        #[command(flatten)]
        common: Common,
        literal: String,
        #[arg(allow_hyphen_values = true)]
        z: i64,
    },
    /// Specialization preorder as a DOT digraph.
    Poset(Common),
    /// Primitive cycles and periodic-point counts.
    Cycles(Common),
    /// Analyze and run every verification oracle.
    Verify(Common),
}

#[derive(Args)]
struct Common {
    /// System config (TOML).
    #[arg(long)]
    system: PathBuf,
    /// Maximal cycle length and bridge length, `L,B`.
    #[arg(long, default_value = DEFAULT_BOUNDS)]
    bounds: String,
    /// `roots:d` or `file:<path>`.
    #[arg(long, default_value = DEFAULT_ANGLES)]
    angles: String,
    /// `exact` or `float`.
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Float-mode residual tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run the verification oracles during `analyze`.
    #[arg(long)]
    verify: bool,
}

impl Common {
    fn config(&self) -> Result<RunConfig, CliError> {
        let cfg = RunConfig {
            system: self.system.clone(),
            bounds: parse_bounds(&self.bounds)?,
            angles: self.angles.parse::<AngleSpec>()?,
            mode: parse_mode(&self.mode)?,
            tol: self.tol,
            out: self.out.clone(),
            verify: self.verify,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn emit(outcome: &Outcome, out: Option<&PathBuf>) -> ExitCode {
    let written = match out {
        Some(path) => write_atomic(path, &outcome.output),
        None => {
            print!("{}", outcome.output);
            Ok(())
        }
    };
    match written {
        Ok(()) => ExitCode::from(outcome.code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION as u8)
        }
    }
}

fn run(common: &Common, f: impl FnOnce(&RunConfig) -> Result<Outcome, CliError>) -> ExitCode {
    match common.config().and_then(|cfg| f(&cfg)) {
        Ok(outcome) => emit(&outcome, common.out.as_ref()),
        Err(e) => {
            eprint!("{}", failure(&e).output);
            ExitCode::from(EXIT_VALIDATION as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Analyze(c) => run(c, |cfg| Ok(cmd_analyze(cfg))),
        Command::Verify(c) => run(c, |cfg| Ok(cmd_verify(cfg))),
        Command::Gamma { common, literal, z } => run(common, |cfg| cmd_gamma(cfg, literal, *z)),
        Command::Poset(c) => run(c, cmd_poset),
        Command::Cycles(c) => run(c, cmd_cycles),
    }
}
