// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Covariance matrices, diffusion, and RK4 evolution of
//! `d(sigma)/dt = M sigma + sigma M^T + D`.

use std::f64::consts::PI;

use nalgebra::{Matrix6, Vector6};

use super::drift::{DriftModel, DriftVariant};
use crate::error::{Error, Result};
use crate::measures::{min_symplectic_eigenvalue, PHYSICALITY_TOL};
use crate::params::ValidatedParams;

/// Symmetric 6x6 matrix of symmetrized quadrature second moments, with
/// vacuum variance 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix(Matrix6<f64>);

impl CovarianceMatrix {
    /// Wraps `m` after symmetrizing it.
    pub fn from_matrix(m: Matrix6<f64>) -> Self {
        Self(symmetrize(&m))
    }

    pub fn vacuum() -> Self {
        Self(Matrix6::identity() * 0.5)
    }

    /// Vacuum photon and magnon, thermal phonon with occupation `nbar_b`.
    pub fn thermal(nbar_b: f64) -> Self {
        Self(Matrix6::from_diagonal(&Vector6::new(
            0.5,
            0.5,
            nbar_b + 0.5,
            nbar_b + 0.5,
            0.5,
            0.5,
        )))
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix6<f64> {
        self.0
    }
}

pub(crate) fn symmetrize(m: &Matrix6<f64>) -> Matrix6<f64> {
    (m + m.transpose()) * 0.5
}

/// Diagonal diffusion matrix of the vacuum and thermal input noises.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffusionMatrix(Matrix6<f64>);

impl DiffusionMatrix {
    /// Arbitrary diagonal diffusion; entries must be non-negative.
    pub fn from_diagonal(entries: [f64; 6]) -> Result<Self> {
        if let Some(v) = entries.iter().find(|v| !(**v >= 0.0 && v.is_finite())) {
            return Err(Error::InvalidParameter {
                field: "diffusion",
                reason: format!("entries must be finite and >= 0, got {v}"),
            });
        }
        Ok(Self(Matrix6::from_diagonal(&Vector6::from_column_slice(&entries))))
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.0
    }

    pub fn diagonal(&self) -> Vector6<f64> {
        self.0.diagonal()
    }
}

/// `diag(kappa_a/2, kappa_a/2, gamma(2n+1)/2, gamma(2n+1)/2, kappa_m/2, kappa_m/2)`
pub fn diffusion(params: &ValidatedParams) -> DiffusionMatrix {
    let phonon = params.gamma * (2.0 * params.nbar_b + 1.0) / 2.0;
    DiffusionMatrix(Matrix6::from_diagonal(&Vector6::new(
        params.kappa_a / 2.0,
        params.kappa_a / 2.0,
        phonon,
        phonon,
        params.kappa_m / 2.0,
        params.kappa_m / 2.0,
    )))
}

/// Largest step accepted by [`evolve_covariance`] for a model: 50 steps per
/// `pi/omega_b` for the periodic model, 50 steps per fastest rotation for
/// the full model.
pub fn max_covariance_step(model: &DriftModel) -> f64 {
    match (model.variant(), model.params()) {
        (DriftVariant::Asymptotic, Some(p)) => PI / (50.0 * p.omega_b),
        (DriftVariant::Full, Some(p)) => {
            let w = p.delta_a.abs().max(p.delta_m.abs()).max(p.omega_b);
            2.0 * PI / (50.0 * w)
        }
        _ => f64::INFINITY,
    }
}

/// Sampled covariance evolution.
#[derive(Debug, Clone, Default)]
pub struct CovarianceTrajectory {
    pub times: Vec<f64>,
    pub states: Vec<CovarianceMatrix>,
    /// Minimum symplectic eigenvalue of each sample.
    pub min_symplectic: Vec<f64>,
}

impl CovarianceTrajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> Option<&CovarianceMatrix> {
        self.states.last()
    }

    fn push(&mut self, t: f64, sigma: &Matrix6<f64>) -> Result<()> {
        let nu = min_symplectic_eigenvalue(sigma);
        if !(nu >= 0.5 - PHYSICALITY_TOL) {
            return Err(Error::UnphysicalState {
                t,
                min_symplectic_eig: nu,
            });
        }
        self.times.push(t);
        self.states.push(CovarianceMatrix(*sigma));
        self.min_symplectic.push(nu);
        Ok(())
    }
}

/// Stepper for the covariance equation. Keeps time as `t0 + n*dt`.
#[derive(Debug, Clone)]
pub struct CovarianceIntegrator<'a> {
    model: &'a DriftModel,
    diffusion: Matrix6<f64>,
    sigma: Matrix6<f64>,
    t0: f64,
    dt: f64,
    steps: u64,
}

impl<'a> CovarianceIntegrator<'a> {
    pub fn new(
        model: &'a DriftModel,
        diffusion: &DiffusionMatrix,
        sigma0: &CovarianceMatrix,
        t0: f64,
        dt: f64,
    ) -> Result<Self> {
        let max = max_covariance_step(model);
        if !(dt > 0.0) || dt > max {
            return Err(Error::StepTooLarge {
                dt,
                max,
                reason: "covariance step must resolve the coefficient oscillation",
            });
        }
        // RK4 is stable on the negative real axis up to |z| ~ 2.78
        let radius = spectral_radius(&model.drift_at(t0)?);
        if dt * 2.0 * radius > 2.5 {
            return Err(Error::StepTooLarge {
                dt,
                max: 1.25 / radius,
                reason: "RK4 stability on the drift spectrum",
            });
        }
        Ok(Self {
            model,
            diffusion: *diffusion.matrix(),
            sigma: *sigma0.matrix(),
            t0,
            dt,
            steps: 0,
        })
    }

    pub fn time(&self) -> f64 {
        self.t0 + self.steps as f64 * self.dt
    }

    pub fn sigma(&self) -> CovarianceMatrix {
        CovarianceMatrix(self.sigma)
    }

    fn rhs(&self, t: f64, s: &Matrix6<f64>) -> Result<Matrix6<f64>> {
        let m = self.model.drift_at(t)?;
        Ok(m * s + s * m.transpose() + self.diffusion)
    }

    pub fn step(&mut self) -> Result<()> {
        let t = self.time();
        let h = self.dt;
        let s = self.sigma;
        let k1 = self.rhs(t, &s)?;
        let k2 = self.rhs(t + h / 2.0, &(s + k1 * (h / 2.0)))?;
        let k3 = self.rhs(t + h / 2.0, &(s + k2 * (h / 2.0)))?;
        let k4 = self.rhs(t + h, &(s + k3 * h))?;
        let next = symmetrize(&(s + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0)));
        self.steps += 1;
        if next.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { t: self.time() });
        }
        self.sigma = next;
        Ok(())
    }

    /// Advances `n` steps, pushing a physicality-checked sample every
    /// `sample_every` steps.
    pub fn run(&mut self, n: u64, sample_every: u64, out: &mut CovarianceTrajectory) -> Result<()> {
        let every = sample_every.max(1);
        for k in 1..=n {
            self.step()?;
            if k % every == 0 {
                out.push(self.time(), &self.sigma)?;
            }
        }
        Ok(())
    }

    pub fn sample_into(&self, out: &mut CovarianceTrajectory) -> Result<()> {
        out.push(self.time(), &self.sigma)
    }
}

/// Integrates the covariance equation from `t = 0` to `t_end`, sampling
/// every step (the initial state included).
pub fn evolve_covariance(
    model: &DriftModel,
    diffusion: &DiffusionMatrix,
    sigma0: &CovarianceMatrix,
    t_end: f64,
    dt: f64,
) -> Result<CovarianceTrajectory> {
    evolve_covariance_sampled(model, diffusion, sigma0, t_end, dt, 1)
}

/// [`evolve_covariance`] keeping one sample in `sample_every`.
pub fn evolve_covariance_sampled(
    model: &DriftModel,
    diffusion: &DiffusionMatrix,
    sigma0: &CovarianceMatrix,
    t_end: f64,
    dt: f64,
    sample_every: u64,
) -> Result<CovarianceTrajectory> {
    if !(t_end > 0.0) {
        return Err(Error::InvalidParameter {
            field: "t_end",
            reason: format!("must be positive, got {t_end}"),
        });
    }
    let mut integ = CovarianceIntegrator::new(model, diffusion, sigma0, 0.0, dt)?;
    let n = (t_end / dt).round().max(1.0) as u64;
    let mut out = CovarianceTrajectory::default();
    integ.sample_into(&mut out)?;
    integ.run(n, sample_every, &mut out)?;
    Ok(out)
}

pub(crate) fn spectral_radius(m: &Matrix6<f64>) -> f64 {
    m.complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mean_field::effective_couplings;
    use crate::params::{DriveConfig, SystemParams};

    #[test]
    fn reference_diffusion() {
        let p = SystemParams::reference().validate().unwrap();
        let d = diffusion(&p).diagonal();
        let expected = [0.01, 0.01, 0.01, 0.01, 0.15, 0.15];
        for (a, b) in d.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn unit_rates_give_half_identity() {
        let mut sp = SystemParams::reference();
        sp.kappa_a = 1.0;
        sp.kappa_m = 1.0;
        sp.gamma = 1.0;
        let d = diffusion(&sp.validate().unwrap());
        assert_eq!(*d.matrix(), Matrix6::identity() * 0.5);
    }

    #[test]
    fn hot_phonon_diffusion() {
        let p = SystemParams::reference().with_nbar(10.0).validate().unwrap();
        let d = diffusion(&p).diagonal();
        assert!((d[2] - 0.21).abs() < 1e-15 && (d[3] - 0.21).abs() < 1e-15);
    }

    #[test]
    fn negative_diffusion_rejected() {
        assert!(DiffusionMatrix::from_diagonal([0.1, 0.1, -0.1, 0.1, 0.1, 0.1]).is_err());
    }

    #[test]
    fn thermal_initial_state() {
        let s = CovarianceMatrix::thermal(3.0);
        assert_eq!(s.matrix()[(2, 2)], 3.5);
        assert_eq!(s.matrix()[(0, 0)], 0.5);
    }

    #[test]
    fn step_limits() {
        let p = SystemParams::reference().validate().unwrap();
        let c = effective_couplings(&p, &DriveConfig::reference());
        let m = DriftModel::asymptotic(p, &c).unwrap();
        let d = diffusion(&p);
        let s = CovarianceMatrix::thermal(0.0);
        assert!(CovarianceIntegrator::new(&m, &d, &s, 0.0, PI / 49.0).is_err());
        assert!(CovarianceIntegrator::new(&m, &d, &s, 0.0, PI / 50.0).is_ok());
    }
}
