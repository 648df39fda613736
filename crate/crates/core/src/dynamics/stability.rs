// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Stability of constant and periodic drifts, and the transient cutoff.

use nalgebra::Matrix6;

use super::drift::DriftModel;
use crate::error::{Error, Result};
use crate::mean_field::EffectiveCouplings;
use crate::params::ValidatedParams;

/// Eigenvalues with real part above this are treated as non-decaying.
pub const STABILITY_MARGIN: f64 = 1e-12;
/// Floquet multipliers must lie inside `|mu| < 1 - FLOQUET_MARGIN`.
pub const FLOQUET_MARGIN: f64 = 1e-9;
/// RK4 steps per period for the monodromy matrix.
pub const MONODROMY_STEPS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityReport {
    pub stable: bool,
    /// Largest eigenvalue real part (constant drift) or largest Floquet
    /// exponent `ln|mu| / period` (periodic drift).
    pub max_real_part: f64,
}

/// Eigenvalue criterion for a constant drift.
pub fn stability(m: &Matrix6<f64>) -> StabilityReport {
    let max_real_part = m
        .complex_eigenvalues()
        .iter()
        .map(|z| z.re)
        .fold(f64::NEG_INFINITY, f64::max);
    StabilityReport {
        stable: max_real_part < -STABILITY_MARGIN,
        max_real_part,
    }
}

/// Fundamental matrix over `[0, period]`, integrated with RK4.
pub fn monodromy(model: &DriftModel, period: f64, steps: usize) -> Result<Matrix6<f64>> {
    let h = period / steps as f64;
    let mut phi = Matrix6::<f64>::identity();
    for k in 0..steps {
        let t = k as f64 * h;
        let m0 = model.drift_at(t)?;
        let mh = model.drift_at(t + h / 2.0)?;
        let m1 = model.drift_at(t + h)?;
        let k1 = m0 * phi;
        let k2 = mh * (phi + k1 * (h / 2.0));
        let k3 = mh * (phi + k2 * (h / 2.0));
        let k4 = m1 * (phi + k3 * h);
        phi += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    Ok(phi)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloquetReport {
    pub stable: bool,
    pub max_multiplier: f64,
    /// `ln(max_multiplier) / period`.
    pub exponent: f64,
}

pub fn floquet_stability(model: &DriftModel, period: f64) -> Result<FloquetReport> {
    let phi = monodromy(model, period, MONODROMY_STEPS)?;
    let max_multiplier = phi
        .complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    Ok(FloquetReport {
        stable: max_multiplier < 1.0 - FLOQUET_MARGIN,
        max_multiplier,
        exponent: max_multiplier.ln() / period,
    })
}

/// Floquet criterion for periodic models, eigenvalue criterion otherwise.
pub fn assess(model: &DriftModel) -> Result<StabilityReport> {
    match model.period() {
        Some(period) => {
            let f = floquet_stability(model, period)?;
            Ok(StabilityReport {
                stable: f.stable,
                max_real_part: f.exponent,
            })
        }
        None => Ok(stability(&model.drift_at(0.0)?)),
    }
}

/// Late-time cutoff `8 / gap`, where `gap` is the smallest decay rate of
/// the RWA drift.
pub fn transient_cutoff(params: &ValidatedParams, couplings: &EffectiveCouplings) -> Result<f64> {
    let rwa = DriftModel::rwa(*params, couplings)?.drift_rwa()?;
    let report = stability(&rwa);
    if !report.stable {
        return Err(Error::UnstableDrift {
            growth_rate: report.max_real_part,
        });
    }
    Ok(8.0 / report.max_real_part.abs())
}
