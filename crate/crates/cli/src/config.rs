//! Run configuration shared by every subcommand.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use primsft::quasi_orbit::Bounds;
use primsft::report::{ArithmeticMode, VerifyOptions};
use primsft::{Angle, SftSystem};

use crate::CliError;

pub const DEFAULT_BOUNDS: &str = "3,1";
pub const DEFAULT_ANGLES: &str = "roots:4";
pub const DEFAULT_TOL: f64 = 1e-9;

/// `L,B`: maximal cycle length (at least 1) and maximal bridge length.
pub fn parse_bounds(text: &str) -> Result<Bounds, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "bounds must look like L,B with L >= 1, got {text:?}"
        ))
    };
    let (l, b) = text.split_once(',').ok_or_else(bad)?;
    let l: usize = l.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if l == 0 {
        return Err(bad());
    }
    Ok(Bounds::new(l, b))
}

/// Angle sample grid: `roots:d` or `file:<path>` with one `num/den` per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AngleSpec {
    Roots(u64),
    File(PathBuf),
}

impl AngleSpec {
    pub fn samples(&self) -> Result<Vec<Angle>, CliError> {
        match self {
            AngleSpec::Roots(d) => Ok(Angle::roots(*d)?),
            AngleSpec::File(path) => {
                let text = read(path)?;
                let mut out = Vec::new();
                for line in text.lines() {
                    let line = line.split('#').next().unwrap_or("").trim();
                    if !line.is_empty() {
                        out.push(line.parse::<Angle>()?);
                    }
                }
                if out.is_empty() {
                    return Err(CliError::Usage(format!(
                        "{} lists no angles",
                        path.display()
                    )));
                }
                Ok(out)
            }
        }
    }
}

impl FromStr for AngleSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if let Some(d) = s.strip_prefix("roots:") {
            match d.trim().parse::<u64>() {
                Ok(d) if d >= 1 => Ok(AngleSpec::Roots(d)),
                _ => Err(CliError::Usage(format!(
                    "roots:d needs an integer d >= 1, got {s:?}"
                ))),
            }
        } else if let Some(p) = s.strip_prefix("file:") {
            Ok(AngleSpec::File(PathBuf::from(p)))
        } else {
            Err(CliError::Usage(format!(
                "angle spec must be roots:d or file:<path>, got {s:?}"
            )))
        }
    }
}

impl fmt::Display for AngleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleSpec::Roots(d) => write!(f, "roots:{d}"),
            AngleSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system: PathBuf,
    pub bounds: Bounds,
    pub angles: AngleSpec,
    pub mode: ArithmeticMode,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub verify: bool,
}

impl RunConfig {
    pub fn new(system: impl Into<PathBuf>) -> Self {
        RunConfig {
            system: system.into(),
            bounds: parse_bounds(DEFAULT_BOUNDS).expect("default bounds"),
            angles: DEFAULT_ANGLES.parse().expect("default angles"),
            mode: ArithmeticMode::Exact,
            tol: DEFAULT_TOL,
            out: None,
            verify: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.bounds.max_cycle_len == 0 {
            return Err(CliError::Usage("max_cycle_len must be at least 1".into()));
        }
        if !(self.tol.is_finite() && self.tol >= 0.0) {
            return Err(CliError::Usage(format!(
                "tolerance must be finite and >= 0, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    pub fn load_system(&self) -> Result<SftSystem, CliError> {
        Ok(SftSystem::parse(&read(&self.system)?)?)
    }

    pub fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            mode: self.mode,
            tol: self.tol,
        }
    }
}

pub fn parse_mode(text: &str) -> Result<ArithmeticMode, CliError> {
    match text {
        "exact" => Ok(ArithmeticMode::Exact),
        "float" => Ok(ArithmeticMode::Float),
        other => Err(CliError::Usage(format!(
            "mode must be exact or float, got {other:?}"
        ))),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
