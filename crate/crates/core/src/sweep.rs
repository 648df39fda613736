// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Entanglement and steering over a grid of phonon damping rates and bath
//! occupations.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    diffusion, floquet_stability, stability, steady_state, transient_cutoff, CovarianceIntegrator,
    CovarianceMatrix, DriftModel,
};
use crate::error::{Error, Result};
use crate::mean_field::{effective_couplings, EffectiveCouplings};
use crate::measures::{photon_phonon_measures, physicality_check, SteeringRegime};
use crate::params::{DriveConfig, SystemParams, ValidatedParams};

/// Relative agreement required between consecutive per-period peaks.
pub const PEAK_CONVERGENCE: f64 = 1e-3;
pub const MIN_PERIODS: usize = 3;
pub const MIN_SAMPLES_PER_PERIOD: usize = 64;
/// Step of the periodic-model evolution, 128 samples per period.
pub const ASYMPTOTIC_DT: f64 = PI / 128.0;
/// Periods recorded after the transient cutoff.
pub const PEAK_WINDOW_PERIODS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariant {
    /// Per-period peaks of the time-periodic model.
    Asymptotic,
    /// Steady state of the rotating-wave model.
    Rwa,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    gamma_values: Vec<f64>,
    nbar_values: Vec<f64>,
    base: ValidatedParams,
    couplings: EffectiveCouplings,
    variant: SweepVariant,
}

fn check_axis(name: &str, values: &[f64], positive: bool) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidGrid(format!("{name} is empty")));
    }
    for v in values {
        let ok = v.is_finite() && if positive { *v > 0.0 } else { *v >= 0.0 };
        if !ok {
            return Err(Error::InvalidGrid(format!("{name} contains {v}")));
        }
    }
    if let Some(w) = values.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!(
            "{name} must be strictly increasing, found {} then {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

impl SweepGrid {
    pub fn new(
        gamma_values: Vec<f64>,
        nbar_values: Vec<f64>,
        base: ValidatedParams,
        couplings: EffectiveCouplings,
        variant: SweepVariant,
    ) -> Result<Self> {
        check_axis("gamma_values", &gamma_values, true)?;
        check_axis("nbar_values", &nbar_values, false)?;
        Ok(Self {
            gamma_values,
            nbar_values,
            base,
            couplings,
            variant,
        })
    }

    pub fn gamma_values(&self) -> &[f64] {
        &self.gamma_values
    }

    pub fn nbar_values(&self) -> &[f64] {
        &self.nbar_values
    }

    pub fn base(&self) -> &ValidatedParams {
        &self.base
    }

    pub fn couplings(&self) -> &EffectiveCouplings {
        &self.couplings
    }

    pub fn variant(&self) -> SweepVariant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.gamma_values.len() * self.nbar_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in row-major order: gamma outer, nbar inner.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.gamma_values
            .iter()
            .flat_map(|&g| self.nbar_values.iter().map(move |&n| (g, n)))
            .collect()
    }
}

/// `gamma in {0.005, 0.010, ..., 0.100}`, `nbar in {0, 0.5, ..., 10}` around
/// the reference operating point.
pub fn default_gamma_values() -> Vec<f64> {
    (1..=20).map(|k| k as f64 * 0.005).collect()
}

pub fn default_nbar_values() -> Vec<f64> {
    (0..=20).map(|k| k as f64 * 0.5).collect()
}

pub fn default_fig1_grid(variant: SweepVariant) -> SweepGrid {
    let base = SystemParams::reference()
        .validate()
        .expect("reference parameters are valid");
    let couplings = effective_couplings(&base, &DriveConfig::reference());
    SweepGrid::new(default_gamma_values(), default_nbar_values(), base, couplings, variant)
        .expect("default grid is valid")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peaks {
    pub e_n: f64,
    pub g_a: f64,
    pub g_b: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub gamma: f64,
    pub nbar: f64,
    /// `None` when unstable or failed.
    pub peaks: Option<Peaks>,
    pub stable: bool,
    pub regime: Option<SteeringRegime>,
    /// Largest drift eigenvalue real part, or the Floquet exponent.
    pub max_growth_rate: Option<f64>,
    pub error: Option<String>,
}

impl SweepResult {
    pub fn peak_e_n(&self) -> Option<f64> {
        self.peaks.map(|p| p.e_n)
    }

    pub fn peak_g_a(&self) -> Option<f64> {
        self.peaks.map(|p| p.g_a)
    }

    pub fn peak_g_b(&self) -> Option<f64> {
        self.peaks.map(|p| p.g_b)
    }
}

/// Maximum of `values` over the last complete period that starts at or
/// after `t_start`. Consecutive-period maxima must agree to
/// [`PEAK_CONVERGENCE`].
pub fn peak_per_period(times: &[f64], values: &[f64], period: f64, t_start: f64) -> Result<f64> {
    if times.len() != values.len() {
        return Err(Error::InsufficientSamples(format!(
            "{} times but {} values",
            times.len(),
            values.len()
        )));
    }
    if !(period > 0.0) {
        return Err(Error::InvalidParameter {
            field: "period",
            reason: format!("must be positive, got {period}"),
        });
    }
    let eps = 1e-9 * period;
    let first = times
        .iter()
        .position(|&t| t >= t_start - eps)
        .ok_or_else(|| Error::InsufficientSamples(format!("no samples after t = {t_start}")))?;
    let t0 = times[first];
    let span = times[times.len() - 1] - t0;
    let periods = ((span + eps) / period).floor() as usize;
    if periods < MIN_PERIODS {
        return Err(Error::InsufficientSamples(format!(
            "{periods} complete periods after t = {t_start}, need {MIN_PERIODS}"
        )));
    }
    let window = |k: usize| {
        let lo = t0 + k as f64 * period - eps;
        let hi = t0 + (k + 1) as f64 * period + eps;
        times[first..]
            .iter()
            .zip(&values[first..])
            .filter(move |(t, _)| **t >= lo && **t <= hi)
            .map(|(_, v)| *v)
    };
    let per_period = window(0).count().saturating_sub(1);
    if per_period < MIN_SAMPLES_PER_PERIOD {
        return Err(Error::InsufficientSamples(format!(
            "{per_period} samples per period, need {MIN_SAMPLES_PER_PERIOD}"
        )));
    }
    let last = window(periods - 1).fold(f64::NEG_INFINITY, f64::max);
    let previous = window(periods - 2).fold(f64::NEG_INFINITY, f64::max);
    let scale = last.abs().max(previous.abs());
    if (last - previous).abs() > PEAK_CONVERGENCE * scale + 1e-12 {
        return Err(Error::NotConverged { previous, last });
    }
    Ok(last)
}

/// Per-period peaks of the periodic model together with its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticPeaks {
    pub peaks: Peaks,
    pub floquet_exponent: f64,
    pub t_start: f64,
}

/// Evolves the periodic model from the thermal product state past the
/// transient cutoff and extracts per-period peaks.
pub fn asymptotic_peaks(params: &ValidatedParams, couplings: &EffectiveCouplings) -> Result<AsymptoticPeaks> {
    let model = DriftModel::asymptotic(*params, couplings)?;
    let period = PI / params.omega_b;
    let floquet = floquet_stability(&model, period)?;
    if !floquet.stable {
        return Err(Error::UnstableDrift {
            growth_rate: floquet.exponent,
        });
    }
    let t_start = transient_cutoff(params, couplings)?;
    let d = diffusion(params);
    let sigma0 = CovarianceMatrix::thermal(params.nbar_b);
    let mut integ = CovarianceIntegrator::new(&model, &d, &sigma0, 0.0, ASYMPTOTIC_DT)?;
    let pre = (t_start / ASYMPTOTIC_DT).ceil() as u64;
    for _ in 0..pre {
        integ.step()?;
    }
    let steps_per_period = (period / ASYMPTOTIC_DT).round() as usize;
    let n = PEAK_WINDOW_PERIODS * steps_per_period;
    let mut times = Vec::with_capacity(n + 1);
    let mut series = [
        Vec::with_capacity(n + 1),
        Vec::with_capacity(n + 1),
        Vec::with_capacity(n + 1),
    ];
    for k in 0..=n {
        if k > 0 {
            integ.step()?;
        }
        let sigma = integ.sigma();
        let check = physicality_check(&sigma);
        if !check.physical {
            return Err(Error::UnphysicalState {
                t: integ.time(),
                min_symplectic_eig: check.min_symplectic_eig,
            });
        }
        let m = photon_phonon_measures(&sigma)?;
        times.push(integ.time());
        series[0].push(m.e_n);
        series[1].push(m.g_a);
        series[2].push(m.g_b);
    }
    let t0 = times[0];
    Ok(AsymptoticPeaks {
        peaks: Peaks {
            e_n: peak_per_period(&times, &series[0], period, t0)?,
            g_a: peak_per_period(&times, &series[1], period, t0)?,
            g_b: peak_per_period(&times, &series[2], period, t0)?,
        },
        floquet_exponent: floquet.exponent,
        t_start,
    })
}

fn unstable(gamma: f64, nbar: f64, growth: f64) -> SweepResult {
    SweepResult {
        gamma,
        nbar,
        peaks: None,
        stable: false,
        regime: None,
        max_growth_rate: Some(growth),
        error: None,
    }
}

fn failed(gamma: f64, nbar: f64, stable: bool, growth: Option<f64>, e: Error) -> SweepResult {
    SweepResult {
        gamma,
        nbar,
        peaks: None,
        stable,
        regime: None,
        max_growth_rate: growth,
        error: Some(e.to_string()),
    }
}

fn done(gamma: f64, nbar: f64, peaks: Peaks, growth: f64) -> SweepResult {
    SweepResult {
        gamma,
        nbar,
        peaks: Some(peaks),
        stable: true,
        regime: Some(SteeringRegime::classify(peaks.g_a, peaks.g_b)),
        max_growth_rate: Some(growth),
        error: None,
    }
}

fn evaluate_rwa(params: ValidatedParams, couplings: &EffectiveCouplings) -> SweepResult {
    let (gamma, nbar) = (params.gamma, params.nbar_b);
    let m = match DriftModel::rwa(params, couplings).and_then(|m| m.drift_rwa()) {
        Ok(m) => m,
        Err(e) => return failed(gamma, nbar, false, None, e),
    };
    let s = stability(&m);
    if !s.stable {
        return unstable(gamma, nbar, s.max_real_part);
    }
    match steady_state(&m, &diffusion(&params)).and_then(|sigma| photon_phonon_measures(&sigma)) {
        Ok(r) => done(
            gamma,
            nbar,
            Peaks {
                e_n: r.e_n,
                g_a: r.g_a,
                g_b: r.g_b,
            },
            s.max_real_part,
        ),
        Err(e) => failed(gamma, nbar, true, Some(s.max_real_part), e),
    }
}

fn evaluate_asymptotic(params: ValidatedParams, couplings: &EffectiveCouplings) -> SweepResult {
    let (gamma, nbar) = (params.gamma, params.nbar_b);
    match asymptotic_peaks(&params, couplings) {
        Ok(a) => done(gamma, nbar, a.peaks, a.floquet_exponent),
        Err(Error::UnstableDrift { growth_rate }) => unstable(gamma, nbar, growth_rate),
        Err(e) => failed(gamma, nbar, true, None, e),
    }
}

fn evaluate(grid: &SweepGrid, gamma: f64, nbar: f64) -> SweepResult {
    let params = match grid.base.with_bath(gamma, nbar) {
        Ok(p) => p,
        Err(e) => return failed(gamma, nbar, false, None, e),
    };
    match grid.variant {
        SweepVariant::Rwa => evaluate_rwa(params, &grid.couplings),
        SweepVariant::Asymptotic => evaluate_asymptotic(params, &grid.couplings),
    }
}

/// Evaluates every grid point on the current rayon pool. The output is in
/// row-major grid order and does not depend on the number of workers.
pub fn run_sweep(grid: &SweepGrid) -> Vec<SweepResult> {
    grid.points()
        .into_par_iter()
        .map(|(g, n)| evaluate(grid, g, n))
        .collect()
}

/// [`run_sweep`] on a dedicated pool of `threads` workers.
pub fn run_sweep_with_threads(grid: &SweepGrid, threads: usize) -> Result<Vec<SweepResult>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter {
            field: "threads",
            reason: e.to_string(),
        })?;
    Ok(pool.install(|| run_sweep(grid)))
}
