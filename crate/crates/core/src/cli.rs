// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! JSON-configured runs and their CSV/JSON serialization.
//!
//! A config selects one of four modes:
//!
//! | mode        | output                                                        |
//! |-------------|---------------------------------------------------------------|
//! | `steady`    | one row: measures, stability, Lyapunov residual, occupation   |
//! | `evolve`    | time series of measures and diagnostics                       |
//! | `sweep`     | one row per grid point in row-major order                     |
//! | `couplings` | effective couplings and squeezing parameters                  |
//!
//! Exit codes: 0 success, 2 unreadable, malformed or invalid configuration
//! (and unwritable output), 3 unstable dynamics, 4 numerical failure.
//! Failures print a single JSON error record on stdout.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    diffusion, evolve_covariance_sampled, evolve_rotating_frame, lyapunov_residual, stability,
    steady_state, CovarianceMatrix, CovarianceTrajectory, DriftModel,
};
use crate::error::Error;
use crate::mean_field::{effective_couplings, Derived, EffectiveCouplings};
use crate::measures::{bogoliubov_occupation_phased, photon_phonon_measures, quadrature_variances, Mode};
use crate::params::{Complex64, DriveConfig, DriveMode, SystemParams, ValidatedParams};
use crate::sweep::{
    default_gamma_values, default_nbar_values, run_sweep, run_sweep_with_threads, SweepGrid, SweepVariant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunMode {
    Steady,
    Evolve,
    Sweep,
    Couplings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Drift model used by `evolve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvolveVariant {
    #[default]
    Rwa,
    Asymptotic,
    /// Rotating frame with the integrated mean field; needs drive amplitudes.
    Full,
}

/// A complex number written either as a real or as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexValue {
    Real(f64),
    Pair([f64; 2]),
}

impl Default for ComplexValue {
    fn default() -> Self {
        ComplexValue::Real(0.0)
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(v: ComplexValue) -> Self {
        match v {
            ComplexValue::Real(re) => Complex64::new(re, 0.0),
            ComplexValue::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DriveSpec {
    pub mode: DriveMode,
    #[serde(default)]
    pub e1: f64,
    #[serde(default)]
    pub e2: f64,
    #[serde(default)]
    pub g1: ComplexValue,
    #[serde(default)]
    pub g2: ComplexValue,
}

impl From<&DriveSpec> for DriveConfig {
    fn from(d: &DriveSpec) -> Self {
        match d.mode {
            DriveMode::Amplitudes => DriveConfig::amplitudes(d.e1, d.e2),
            DriveMode::Couplings => DriveConfig::couplings(d.g1.into(), d.g2.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(default = "default_gamma_values")]
    pub gamma_values: Vec<f64>,
    #[serde(default = "default_nbar_values")]
    pub nbar_values: Vec<f64>,
    #[serde(default = "default_sweep_variant")]
    pub model_variant: SweepVariant,
}

fn default_sweep_variant() -> SweepVariant {
    SweepVariant::Rwa
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            gamma_values: default_gamma_values(),
            nbar_values: default_nbar_values(),
            model_variant: default_sweep_variant(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: RunMode,
    pub params: SystemParams,
    pub drive: DriveSpec,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub t_end: Option<f64>,
    /// Covariance step, or the mean-field step for the full variant.
    #[serde(default)]
    pub dt: Option<f64>,
    #[serde(default)]
    pub model_variant: EvolveVariant,
    #[serde(default = "one")]
    pub sample_every: u64,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub output_format: OutputFormat,
}

fn one() -> u64 {
    1
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::new(ErrorKind::Parse, e.to_string()))
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new(ErrorKind::Io, format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Io,
    Parse,
    Validation,
    Instability,
    Solver,
}

impl ErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ErrorKind::Io => "io",
            ErrorKind::Parse => "parse",
            ErrorKind::Validation => "validation",
            ErrorKind::Instability => "instability",
            ErrorKind::Solver => "solver",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Io | ErrorKind::Parse | ErrorKind::Validation => 2,
            ErrorKind::Instability => 3,
            ErrorKind::Solver => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }

    /// `{"error":{"kind":...,"message":...}}`
    pub fn record(&self) -> String {
        serde_json::json!({
            "error": { "kind": self.kind.name(), "message": self.message }
        })
        .to_string()
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} error: {}", self.kind.name(), self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::NonPositiveRate { .. }
            | Error::NegativeOccupation { .. }
            | Error::InvalidParameter { .. }
            | Error::NonPositiveRatio(_)
            | Error::WrongDriveMode { .. }
            | Error::ZeroEta { .. }
            | Error::StepTooLarge { .. }
            | Error::FrameMismatch { .. }
            | Error::WrongVariant { .. }
            | Error::InvalidGrid(_) => ErrorKind::Validation,
            Error::UnstableDrift { .. } => ErrorKind::Instability,
            _ => ErrorKind::Solver,
        };
        CliError::new(kind, e.to_string())
    }
}

fn invalid(field: &str, reason: impl std::fmt::Display) -> CliError {
    CliError::new(ErrorKind::Validation, format!("`{field}` {reason}"))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Empty,
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Real)
    }
}

/// Column-ordered result table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// Reals with 17 significant digits.
pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            for (i, c) in row.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                match c {
                    Cell::Real(v) => s.push_str(&format_real(*v)),
                    Cell::Int(v) => {
                        let _ = write!(s, "{v}");
                    }
                    Cell::Bool(v) => s.push_str(if *v { "true" } else { "false" }),
                    Cell::Text(t) if t.contains([',', '"', '\n']) => {
                        let _ = write!(s, "\"{}\"", t.replace('"', "\"\""));
                    }
                    Cell::Text(t) => s.push_str(t),
                    Cell::Empty => {}
                }
            }
            s.push('\n');
        }
        s
    }

    /// `{"columns": [...], "rows": [[...], ...]}` with nulls for empty cells.
    pub fn to_json(&self) -> String {
        use serde_json::Value;
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|c| match c {
                            Cell::Real(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
                            Cell::Int(v) => Value::from(*v),
                            Cell::Bool(v) => Value::Bool(*v),
                            Cell::Text(t) => Value::String(t.clone()),
                            Cell::Empty => Value::Null,
                        })
                        .collect(),
                )
            })
            .collect();
        let mut s = serde_json::json!({ "columns": self.columns, "rows": rows }).to_string();
        s.push('\n');
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

pub const STEADY_COLUMNS: [&str; 7] = [
    "e_n",
    "g_a",
    "g_b",
    "stable",
    "max_real_part",
    "lyapunov_residual",
    "bogoliubov_occupation",
];
pub const EVOLVE_COLUMNS: [&str; 6] = ["t", "e_n", "g_a", "g_b", "min_symplectic_eig", "mech_min_rotated_var"];
pub const SWEEP_COLUMNS: [&str; 9] = [
    "gamma",
    "nbar",
    "peak_e_n",
    "peak_g_a",
    "peak_g_b",
    "stable",
    "regime",
    "max_growth_rate",
    "error",
];
pub const COUPLINGS_COLUMNS: [&str; 9] = ["g1_re", "g1_im", "g2_re", "g2_im", "r1", "r2", "gt1", "gt2", "reason"];

/// Runs a config. `threads` only sets the sweep worker count.
pub fn execute(config: &RunConfig, threads: Option<usize>) -> Result<Table, CliError> {
    let params = config.params.validate()?;
    let drive = DriveConfig::from(&config.drive);
    drive.validate()?;
    if config.sample_every == 0 {
        return Err(invalid("sample_every", "must be at least 1"));
    }
    match config.mode {
        RunMode::Couplings => Ok(couplings_table(&effective_couplings(&params, &drive))),
        RunMode::Steady => steady_table(&params, &drive),
        RunMode::Evolve => evolve_table(config, &params, &drive),
        RunMode::Sweep => sweep_table(config, &params, &drive, threads),
    }
}

fn couplings_table(c: &EffectiveCouplings) -> Table {
    let mut reasons = Vec::new();
    let mut derived = |d: Derived| match d {
        Derived::Defined(v) => Cell::Real(v),
        Derived::Undefined { condition } => {
            reasons.push(condition);
            Cell::Empty
        }
    };
    let mut row = vec![
        Cell::Real(c.g1.re),
        Cell::Real(c.g1.im),
        Cell::Real(c.g2.re),
        Cell::Real(c.g2.im),
    ];
    row.extend([derived(c.r1), derived(c.r2), derived(c.gt1), derived(c.gt2)]);
    let reason = if reasons.is_empty() {
        Cell::Empty
    } else {
        Cell::Text(format!("requires {}", reasons.join("; ")))
    };
    row.push(reason);
    Table {
        columns: COUPLINGS_COLUMNS.to_vec(),
        rows: vec![row],
    }
}

fn steady_table(params: &ValidatedParams, drive: &DriveConfig) -> Result<Table, CliError> {
    let c = effective_couplings(params, drive);
    let m = DriftModel::rwa(*params, &c)?.drift_rwa()?;
    let s = stability(&m);
    if !s.stable {
        return Err(Error::UnstableDrift {
            growth_rate: s.max_real_part,
        }
        .into());
    }
    let d = diffusion(params);
    let sigma = steady_state(&m, &d)?;
    let r = photon_phonon_measures(&sigma)?;
    let occupation = c
        .r2
        .value()
        .map(|r2| bogoliubov_occupation_phased(&sigma, r2, c.g1.arg()));
    let row = vec![
        Cell::Real(r.e_n),
        Cell::Real(r.g_a),
        Cell::Real(r.g_b),
        Cell::Bool(true),
        Cell::Real(s.max_real_part),
        Cell::Real(lyapunov_residual(&m, sigma.matrix(), d.matrix())),
        occupation.into(),
    ];
    Ok(Table {
        columns: STEADY_COLUMNS.to_vec(),
        rows: vec![row],
    })
}

fn evolve_table(config: &RunConfig, params: &ValidatedParams, drive: &DriveConfig) -> Result<Table, CliError> {
    let t_end = config.t_end.ok_or_else(|| invalid("t_end", "is required in evolve mode"))?;
    let dt = config.dt.ok_or_else(|| invalid("dt", "is required in evolve mode"))?;
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(invalid("t_end", format!("must be positive, got {t_end}")));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(invalid("dt", format!("must be positive, got {dt}")));
    }
    let sigma0 = CovarianceMatrix::thermal(params.nbar_b);
    let c = effective_couplings(params, drive);
    let trajectory: CovarianceTrajectory = match config.model_variant {
        EvolveVariant::Rwa => {
            let model = DriftModel::rwa(*params, &c)?;
            evolve_covariance_sampled(&model, &diffusion(params), &sigma0, t_end, dt, config.sample_every)?
        }
        EvolveVariant::Asymptotic => {
            let model = DriftModel::asymptotic(*params, &c)?;
            evolve_covariance_sampled(&model, &diffusion(params), &sigma0, t_end, dt, config.sample_every)?
        }
        EvolveVariant::Full => {
            if drive.mode != DriveMode::Amplitudes {
                return Err(Error::WrongDriveMode { expected: "amplitudes" }.into());
            }
            evolve_rotating_frame(params, drive, &sigma0, t_end, dt, config.sample_every)?
        }
    };
    log::info!("evolved {} samples to t = {t_end}", trajectory.len());
    let mut rows = Vec::with_capacity(trajectory.len());
    for ((t, sigma), nu) in trajectory
        .times
        .iter()
        .zip(&trajectory.states)
        .zip(&trajectory.min_symplectic)
    {
        let r = photon_phonon_measures(sigma)?;
        let mech = quadrature_variances(sigma, Mode::Phonon);
        rows.push(vec![
            Cell::Real(*t),
            Cell::Real(r.e_n),
            Cell::Real(r.g_a),
            Cell::Real(r.g_b),
            Cell::Real(*nu),
            Cell::Real(mech.min_rotated),
        ]);
    }
    Ok(Table {
        columns: EVOLVE_COLUMNS.to_vec(),
        rows,
    })
}

fn sweep_table(
    config: &RunConfig,
    params: &ValidatedParams,
    drive: &DriveConfig,
    threads: Option<usize>,
) -> Result<Table, CliError> {
    let spec = config.grid.clone().unwrap_or_default();
    let grid = SweepGrid::new(
        spec.gamma_values,
        spec.nbar_values,
        *params,
        effective_couplings(params, drive),
        spec.model_variant,
    )?;
    log::info!("sweeping {} grid points", grid.len());
    let results = match threads {
        Some(n) => run_sweep_with_threads(&grid, n)?,
        None => run_sweep(&grid),
    };
    let rows = results
        .into_iter()
        .map(|r| {
            vec![
                Cell::Real(r.gamma),
                Cell::Real(r.nbar),
                r.peak_e_n().into(),
                r.peak_g_a().into(),
                r.peak_g_b().into(),
                Cell::Bool(r.stable),
                r.regime.map_or(Cell::Empty, |g| Cell::Text(g.name().into())),
                r.max_growth_rate.into(),
                r.error.map_or(Cell::Empty, Cell::Text),
            ]
        })
        .collect();
    Ok(Table {
        columns: SWEEP_COLUMNS.to_vec(),
        rows,
    })
}

#[derive(Debug, Parser)]
#[command(name = "magnomech", version, about = "Gaussian cavity magnomechanics simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a JSON config.
    Run(RunArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides `output_path`; stdout when neither is set.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Overrides `output_format`.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Sweep workers. Does not change the output.
    #[arg(long)]
    pub threads: Option<usize>,
}

/// Loads, executes, and writes. Returns the rendered output when it went
/// to stdout.
pub fn run(args: &RunArgs) -> Result<Option<String>, CliError> {
    let config = RunConfig::from_path(&args.config)?;
    if args.threads == Some(0) {
        return Err(invalid("threads", "must be at least 1"));
    }
    let table = execute(&config, args.threads)?;
    let format = args.format.unwrap_or(config.output_format);
    let text = table.render(format);
    match args.output.as_ref().or(config.output_path.as_ref()) {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| CliError::new(ErrorKind::Io, format!("{}: {e}", path.display())))?;
            log::info!("wrote {}", path.display());
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

/// Parsed CLI to exit code.
pub fn main_with(cli: Cli) -> i32 {
    match cli.command {
        Command::Run(args) => match run(&args) {
            Ok(Some(text)) => {
                print!("{text}");
                0
            }
            Ok(None) => 0,
            Err(e) => {
                log::error!("{e}");
                println!("{}", e.record());
                e.exit_code()
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_json(mode: &str, extra: &str) -> String {
        format!(
            r#"{{"mode":"{mode}","params":{{"delta_a":1000,"delta_m":1000,"g":0.28,"eta":2e-8,
            "kappa_a":0.02,"kappa_m":0.3,"gamma":0.02,"nbar_b":0}},
            "drive":{{"mode":"couplings","g1":0.21,"g2":0}}{extra}}}"#
        )
    }

    #[test]
    fn parse_reference() {
        let c = RunConfig::from_json(&reference_json("steady", "")).unwrap();
        assert_eq!(c.mode, RunMode::Steady);
        assert_eq!(c.params, SystemParams::reference());
        assert_eq!(DriveConfig::from(&c.drive), DriveConfig::reference());
        assert_eq!(c.output_format, OutputFormat::Csv);
    }

    #[test]
    fn complex_coupling_pair() {
        let c = RunConfig::from_json(&reference_json("couplings", "").replace("\"g1\":0.21", "\"g1\":[0.1,-0.2]"))
            .unwrap();
        assert_eq!(DriveConfig::from(&c.drive).g1, Complex64::new(0.1, -0.2));
    }

    #[test]
    fn unknown_field_is_parse_error() {
        let e = RunConfig::from_json(&reference_json("steady", r#","bogus":1"#)).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn steady_row() {
        let t = execute(&RunConfig::from_json(&reference_json("steady", "")).unwrap(), None).unwrap();
        assert_eq!(t.columns, STEADY_COLUMNS);
        assert_eq!(t.rows.len(), 1);
        assert!(matches!(t.rows[0][0], Cell::Real(v) if v > 0.0));
        assert_eq!(t.rows[0][3], Cell::Bool(true));
    }

    #[test]
    fn couplings_reason_column() {
        let t = execute(&RunConfig::from_json(&reference_json("couplings", "")).unwrap(), None).unwrap();
        let row = &t.rows[0];
        assert_eq!(row[4], Cell::Empty);
        assert!(matches!(row[5], Cell::Real(_)));
        assert_eq!(row[8], Cell::Text("requires |G1| < |G2|; |G1| <= |G2|".into()));
    }

    #[test]
    fn evolve_requires_times() {
        let e = execute(&RunConfig::from_json(&reference_json("evolve", "")).unwrap(), None).unwrap_err();
        assert_eq!(e.kind, ErrorKind::Validation);
    }

    #[test]
    fn csv_dialect() {
        let t = Table {
            columns: vec!["x", "ok", "note"],
            rows: vec![vec![Cell::Real(0.1), Cell::Bool(false), Cell::Empty]],
        };
        assert_eq!(t.to_csv(), "x,ok,note\n1.0000000000000001e-1,false,\n");
    }

    #[test]
    fn error_record_is_json() {
        let e = CliError::from(Error::InvalidGrid("empty".into()));
        let v: serde_json::Value = serde_json::from_str(&e.record()).unwrap();
        assert_eq!(v["error"]["kind"], "validation");
        assert_eq!(e.exit_code(), 2);
        assert_eq!(CliError::from(Error::UnstableDrift { growth_rate: 0.1 }).exit_code(), 3);
        assert_eq!(CliError::from(Error::SingularSystem).exit_code(), 4);
    }
}
