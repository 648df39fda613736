// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rate `{field}` must be strictly positive, got {value}")]
    NonPositiveRate { field: &'static str, value: f64 },

    #[error("occupation `{field}` must be non-negative, got {value}")]
    NegativeOccupation { field: &'static str, value: f64 },

    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("energy ratio must be strictly positive, got {0}")]
    NonPositiveRatio(f64),

    #[error("operation requires drive mode {expected}")]
    WrongDriveMode { expected: &'static str },

    #[error("magnetostrictive coupling is zero, cannot reach target coupling {target}")]
    ZeroEta { target: f64 },

    #[error("time step {dt} exceeds the limit {max} ({reason})")]
    StepTooLarge { dt: f64, max: f64, reason: &'static str },

    #[error("non-finite value encountered at t = {t}")]
    NonFinite { t: f64 },

    #[error("frame mismatch: delta_a = {delta_a} but delta_m = {delta_m}")]
    FrameMismatch { delta_a: f64, delta_m: f64 },

    #[error("time {t} outside mean-field trajectory [{start}, {end}]")]
    OutOfTrajectoryRange { t: f64, start: f64, end: f64 },

    #[error("drift model is {actual}, operation needs {expected}")]
    WrongVariant { expected: &'static str, actual: &'static str },

    #[error("unphysical covariance at t = {t}: min symplectic eigenvalue {min_symplectic_eig}")]
    UnphysicalState { t: f64, min_symplectic_eig: f64 },

    #[error("drift is not stable (growth rate {growth_rate})")]
    UnstableDrift { growth_rate: f64 },

    #[error("singular linear system")]
    SingularSystem,

    #[error("negative discriminant in symplectic eigenvalue: {0}")]
    DegenerateDiscriminant(f64),

    #[error("reduced covariance determinant too small: {0}")]
    SingularState(f64),

    #[error("per-period peaks not converged: {previous} vs {last}")]
    NotConverged { previous: f64, last: f64 },

    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}
