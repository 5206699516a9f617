use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use primsft::inverse_limit::gamma_pow;
use primsft::prim_space::{prim_points, specialization};
use primsft::report::{point_label, prim_report, ArithmeticMode, VerifyOptions};
use primsft::{EvpPoint, PrimReport, SystemKind};

use crate::config::RunConfig;
use crate::{CliError, EXIT_MISMATCH, EXIT_OK, EXIT_VALIDATION};

/// Exit code plus the text destined for `--out` or stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            code: EXIT_OK,
            output,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Mismatch,
    Error,
}

#[derive(Debug, Serialize)]
struct ConfigEcho {
    system: String,
    bounds: String,
    max_points: usize,
    angles: String,
    verify: bool,
    mode: ArithmeticMode,
    tol: Option<f64>,
}

#[derive(Debug, Serialize)]
struct ErrorField {
    message: String,
}

#[derive(Debug, Serialize)]
struct AnalyzeDocument {
    command: &'static str,
    status: Status,
    exit_code: i32,
    config: ConfigEcho,
    report: Option<PrimReport>,
    error: Option<ErrorField>,
}

fn echo(cfg: &RunConfig, verify: bool) -> ConfigEcho {
    ConfigEcho {
        system: cfg.system.display().to_string(),
        bounds: format!("{},{}", cfg.bounds.max_cycle_len, cfg.bounds.max_bridge_len),
        max_points: cfg.bounds.max_points,
        angles: cfg.angles.to_string(),
        verify,
        mode: cfg.mode,
        tol: (verify && cfg.mode == ArithmeticMode::Float).then_some(cfg.tol),
    }
}

fn run_report(cfg: &RunConfig, verify: bool) -> Result<PrimReport, CliError> {
    cfg.validate()?;
    let sys = cfg.load_system()?;
    let samples = cfg.angles.samples()?;
    let opts = verify.then_some(VerifyOptions {
        mode: cfg.mode,
        tol: cfg.tol,
    });
    Ok(prim_report(
        &sys,
        cfg.bounds,
        &cfg.angles.to_string(),
        &samples,
        opts,
    )?)
}

fn document(command: &'static str, cfg: &RunConfig, verify: bool) -> Outcome {
    let (status, code, report, error) = match run_report(cfg, verify) {
        Ok(r) => {
            let passed = r.verification.as_ref().is_none_or(|v| v.passed());
            if passed {
                (Status::Ok, EXIT_OK, Some(r), None)
            } else {
                (Status::Mismatch, EXIT_MISMATCH, Some(r), None)
            }
        }
        Err(e) => (
            Status::Error,
            EXIT_VALIDATION,
            None,
            Some(ErrorField {
                message: e.to_string(),
            }),
        ),
    };
    let doc = AnalyzeDocument {
        command,
        status,
        exit_code: code,
        config: echo(cfg, verify),
        report,
        error,
    };
    let mut output = serde_json::to_string_pretty(&doc).expect("report serializes");
    output.push('\n');
    Outcome { code, output }
}

/// Enumerates quasi-orbits, Prim points and specialization, optionally
/// running the verification oracles when `cfg.verify` is set.
pub fn cmd_analyze(cfg: &RunConfig) -> Outcome {
    document("analyze", cfg, cfg.verify)
}

/// As [`cmd_analyze`] with verification always on.
pub fn cmd_verify(cfg: &RunConfig) -> Outcome {
    document("verify", cfg, true)
}

/// `γ^z` of a point literal, printed as a canonical literal.
pub fn cmd_gamma(cfg: &RunConfig, literal: &str, z: i64) -> Result<Outcome, CliError> {
    let sys = cfg.load_system()?;
    let x = EvpPoint::parse_literal(&sys, literal)?;
    Ok(Outcome::ok(format!(
        "{}\n",
        gamma_pow(&sys, &x, z).literal(&sys)
    )))
}

/// DOT digraph of the specialization relation, diagonal omitted.
pub fn cmd_poset(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let sys = cfg.load_system()?;
    let samples = cfg.angles.samples()?;
    let space = prim_points(&sys, cfg.bounds, &samples)?;
    let pairs = specialization(&space.points)?;
    let mut dot = String::new();
    dot.push_str("digraph prim {\n");
    writeln!(
        dot,
        "  graph [label={}];",
        quote(&format!(
            "bounds {},{} angles {}",
            cfg.bounds.max_cycle_len, cfg.bounds.max_bridge_len, cfg.angles
        ))
    )
    .unwrap();
    for (i, p) in space.points.iter().enumerate() {
        writeln!(dot, "  p{i} [label={}];", quote(&point_label(&sys, p))).unwrap();
    }
    for (i, j) in pairs.into_iter().filter(|(i, j)| i != j) {
        writeln!(dot, "  p{i} -> p{j};").unwrap();
    }
    dot.push_str("}\n");
    Ok(Outcome::ok(dot))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Debug, Serialize)]
struct CycleRow {
    word: String,
    length: usize,
}

#[derive(Debug, Serialize)]
struct CountRow {
    n: usize,
    trace: u128,
    from_cycles: u128,
}

#[derive(Debug, Serialize)]
struct CyclesDocument {
    kind: SystemKind,
    max_len: usize,
    cycles: Vec<CycleRow>,
    counts: Vec<CountRow>,
}

/// Primitive cycles up to `max_cycle_len` together with `trace(Aⁿ)` and
/// the count `Σ_{d|n} d·#cycles(d)` it should match.
pub fn cmd_cycles(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let sys = cfg.load_system()?;
    let max_len = cfg.bounds.max_cycle_len;
    let cycles = sys.enumerate_cycles(max_len);
    let counts = (1..=max_len)
        .map(|n| {
            let from_cycles = cycles
                .iter()
                .filter(|c| n % c.len() == 0)
                .map(|c| c.len() as u128)
                .sum();
            Ok(CountRow {
                n,
                trace: sys.count_periodic_points(n)?,
                from_cycles,
            })
        })
        .collect::<Result<Vec<_>, primsft::Error>>()?;
    let doc = CyclesDocument {
        kind: sys.kind(),
        max_len,
        cycles: cycles
            .iter()
            .map(|c| CycleRow {
                word: c.display(&sys),
                length: c.len(),
            })
            .collect(),
        counts,
    };
    let mut output = serde_json::to_string_pretty(&doc).expect("cycles serialize");
    output.push('\n');
    Ok(Outcome::ok(output))
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Error reports for the non-JSON commands.
pub fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: EXIT_VALIDATION,
        output: format!("error: {e}\n"),
    }
}
