//! Library side of the `slimbasis` command-line tool.

pub mod formats;
pub mod verify;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use slimbasis::leopoldt::CoordValue;
use slimbasis::{adft, fadft, slim, Program};

use crate::formats::{MatrixFile, VectorFile};

/// Largest modulus accepted by `gen-matrix --mode oracle`.
pub const ORACLE_BOUND: u64 = 256;
/// Largest modulus accepted by `gen-matrix --mode slim`.
pub const SLIM_BOUND: u64 = 4096;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Math(#[from] slimbasis::Error),
    #[error("{0} verification checks failed")]
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) | CliError::Math(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Closed-form entries.
    Slim,
    /// Traces of the dual generator.
    Oracle,
}

pub fn gen_matrix(n: u64, mode: Mode) -> Result<MatrixFile, CliError> {
    let bound = match mode {
        Mode::Slim => SLIM_BOUND,
        Mode::Oracle => ORACLE_BOUND,
    };
    if n == 0 || n > bound {
        return Err(CliError::Usage(format!(
            "n must be in [1, {bound}] for this mode"
        )));
    }
    let m = match mode {
        Mode::Slim => adft::adft_matrix_slim(n)?,
        Mode::Oracle => adft::adft_matrix_oracle(slim::slim_nbg(n)?.theta(), n)?,
    };
    Ok(MatrixFile::from_adft(&m))
}

/// Output vector and, when `count` is set, the number of additions executed.
pub fn transform(
    t: u32,
    input: &VectorFile,
    count: bool,
) -> Result<(VectorFile, Option<u64>), CliError> {
    let plan = fadft::plan(t)?;
    if input.n() != plan.n() {
        return Err(CliError::Usage(format!(
            "input has {} values, t = {t} needs {}",
            input.n(),
            plan.n()
        )));
    }
    let (values, ops) = fadft::execute_counted(&plan, &input.values)?;
    Ok((VectorFile { values }, count.then_some(ops)))
}

pub fn export_plan(t: u32) -> Result<String, CliError> {
    Ok(Program::from_plan(&fadft::plan(t)?).to_text())
}

/// Human-readable description of the slim generator of `Q(zeta_n)`.
pub fn basis(n: u64, show_coords: bool) -> Result<String, CliError> {
    if n == 0 || n > SLIM_BOUND {
        return Err(CliError::Usage(format!("n must be in [1, {SLIM_BOUND}]")));
    }
    let spec = slim::slim_nbg(n)?;
    let mut s = String::new();
    writeln!(s, "n = {n}").unwrap();
    writeln!(s, "theta = {}", spec.theta()).unwrap();
    for part in spec.parts() {
        writeln!(s, "factor {}: theta = {}", part.modulus(), part.theta).unwrap();
    }
    if show_coords {
        for part in spec.parts() {
            writeln!(s, "coordinates modulo {}:", part.modulus()).unwrap();
            let frame = part.coords.frame();
            for (chi, v) in frame.characters().iter().zip(part.coords.values()) {
                let value = match v {
                    CoordValue::One => "1".to_string(),
                    CoordValue::MinusOne => "-1".to_string(),
                    CoordValue::Half => "1/2".to_string(),
                    CoordValue::QuadSum { p, s } => format!("quadratic sum (p = {p}, s = {s})"),
                    CoordValue::Explicit(e) => e.to_string(),
                };
                writeln!(
                    s,
                    "  chi {:?} (conductor {}, order {}): {value}",
                    chi.exponents(),
                    chi.conductor(),
                    chi.order()
                )
                .unwrap();
            }
        }
    }
    Ok(s)
}
