// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Rotating-frame covariance evolution driven by the integrated mean field.
//!
//! The mean field oscillates at the drive frequency, so long runs are
//! recorded window by window and each window backs a temporary
//! [`DriftModel::full`].

use super::covariance::{
    diffusion, max_covariance_step, CovarianceIntegrator, CovarianceMatrix, CovarianceTrajectory,
};
use super::drift::DriftModel;
use crate::error::{Error, Result};
use crate::mean_field::MeanFieldIntegrator;
use crate::params::{DriveConfig, ValidatedParams};

/// Covariance steps per recorded mean-field window.
const WINDOW_STEPS: u64 = 1 << 15;

/// Evolves mean field and covariance together from `t = 0`.
///
/// The covariance step is twice `mean_dt`, so RK4 midpoints land on
/// mean-field samples. Samples are kept every `sample_every` covariance
/// steps, starting with the initial state.
pub fn evolve_rotating_frame(
    params: &ValidatedParams,
    drive: &DriveConfig,
    sigma0: &CovarianceMatrix,
    t_end: f64,
    mean_dt: f64,
    sample_every: u64,
) -> Result<CovarianceTrajectory> {
    if !(t_end > 0.0) {
        return Err(Error::InvalidParameter {
            field: "t_end",
            reason: format!("must be positive, got {t_end}"),
        });
    }
    let every = sample_every.max(1);
    let cov_dt = 2.0 * mean_dt;
    let mut mean = MeanFieldIntegrator::new(*params, *drive, mean_dt)?;
    let d = diffusion(params);
    let total = (t_end / cov_dt).round().max(1.0) as u64;
    let window = WINDOW_STEPS.div_ceil(every) * every;

    let mut out = CovarianceTrajectory::default();
    let mut sigma = *sigma0;
    let mut done = 0u64;
    while done < total {
        let n = window.min(total - done);
        let trajectory = mean.record(2 * n as usize)?;
        let model = DriftModel::full(*params, trajectory);
        if cov_dt > max_covariance_step(&model) {
            return Err(Error::StepTooLarge {
                dt: cov_dt,
                max: max_covariance_step(&model),
                reason: "twice the mean-field step must resolve the detuning",
            });
        }
        let t0 = done as f64 * cov_dt;
        let mut integ = CovarianceIntegrator::new(&model, &d, &sigma, t0, cov_dt)?;
        if done == 0 {
            integ.sample_into(&mut out)?;
        }
        integ.run(n, every, &mut out)?;
        sigma = integ.sigma();
        done += n;
    }
    Ok(out)
}
