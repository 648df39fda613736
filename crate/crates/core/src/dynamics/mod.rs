// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Covariance dynamics: drift and diffusion matrices, time evolution,
//! steady state, and stability.

mod covariance;
mod drift;
mod full;
mod lyapunov;
mod stability;

pub use covariance::{
    diffusion, evolve_covariance, evolve_covariance_sampled, max_covariance_step,
    CovarianceIntegrator, CovarianceMatrix, CovarianceTrajectory, DiffusionMatrix,
};
pub use drift::{add_conjugate, add_linear, interaction_rotation, DriftModel, DriftVariant};
pub use full::evolve_rotating_frame;
pub use lyapunov::{lyapunov_residual, solve_lyapunov, steady_state};
pub use stability::{
    assess, floquet_stability, monodromy, stability, transient_cutoff, FloquetReport,
    StabilityReport, FLOQUET_MARGIN, MONODROMY_STEPS, STABILITY_MARGIN,
};
