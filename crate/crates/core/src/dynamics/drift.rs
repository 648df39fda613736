// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Drift matrices of the linearized fluctuation dynamics.
//!
//! Quadratures are ordered `(q_a, p_a, q_b, p_b, q_m, p_m)` with
//! `q = (o + o^+)/sqrt(2)` and `p = (o - o^+)/(i sqrt(2))`. Each variant is
//! written first as complex Heisenberg–Langevin equations for `a, b, m` and
//! then mapped to quadratures by [`add_linear`] and [`add_conjugate`].
//!
//! Interaction picture, frame-matched (`delta_a = delta_m`):
//!
//! ```text
//! da/dt = -kappa_a/2 a - i g m
//! db/dt = -gamma/2 b   - i f1* m - i f2 m^+
//! dm/dt = -kappa_m/2 m - i g a - i f1 b - i f2 b^+
//! f1(t) = G2 + G1 exp(-2 i omega_b t),  f2(t) = G1 + G2 exp(2 i omega_b t)
//! ```
//!
//! The RWA variant keeps only the time averages `f1 = G2`, `f2 = G1`. The
//! full variant stays in the drive-rotating frame with detunings on the
//! diagonal and the instantaneous coupling `G(t) = eta <m(t)>`.

use std::f64::consts::PI;

use nalgebra::Matrix6;

use crate::error::{Error, Result};
use crate::mean_field::{EffectiveCouplings, MeanTrajectory};
use crate::params::{Complex64, ValidatedParams};

pub(crate) const MODE_A: usize = 0;
pub(crate) const MODE_B: usize = 1;
pub(crate) const MODE_M: usize = 2;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Adds the quadrature form of `d(o)/dt += k x` to `drift`.
pub fn add_linear(drift: &mut Matrix6<f64>, o: usize, x: usize, k: Complex64) {
    let (qo, po, qx, px) = (2 * o, 2 * o + 1, 2 * x, 2 * x + 1);
    drift[(qo, qx)] += k.re;
    drift[(qo, px)] -= k.im;
    drift[(po, qx)] += k.im;
    drift[(po, px)] += k.re;
}

/// Adds the quadrature form of `d(o)/dt += k x^+` to `drift`.
pub fn add_conjugate(drift: &mut Matrix6<f64>, o: usize, x: usize, k: Complex64) {
    let (qo, po, qx, px) = (2 * o, 2 * o + 1, 2 * x, 2 * x + 1);
    drift[(qo, qx)] += k.re;
    drift[(qo, px)] += k.im;
    drift[(po, qx)] += k.im;
    drift[(po, px)] -= k.re;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DriftVariant {
    Full,
    Asymptotic,
    Rwa,
}

impl DriftVariant {
    pub fn name(self) -> &'static str {
        match self {
            DriftVariant::Full => "full",
            DriftVariant::Asymptotic => "asymptotic",
            DriftVariant::Rwa => "rwa",
        }
    }
}

#[derive(Debug, Clone)]
enum Source {
    Couplings {
        params: ValidatedParams,
        g1: Complex64,
        g2: Complex64,
    },
    Trajectory {
        params: ValidatedParams,
        trajectory: MeanTrajectory,
    },
    Fixed(Matrix6<f64>),
}

/// Time-parameterized provider of the 6x6 drift matrix.
#[derive(Debug, Clone)]
pub struct DriftModel {
    variant: DriftVariant,
    source: Source,
}

impl DriftModel {
    /// Interaction-picture model keeping the `exp(+-2 i omega_b t)` terms.
    pub fn asymptotic(params: ValidatedParams, couplings: &EffectiveCouplings) -> Result<Self> {
        Self::interaction_picture(DriftVariant::Asymptotic, params, couplings)
    }

    /// Time-independent rotating-wave model.
    pub fn rwa(params: ValidatedParams, couplings: &EffectiveCouplings) -> Result<Self> {
        Self::interaction_picture(DriftVariant::Rwa, params, couplings)
    }

    fn interaction_picture(
        variant: DriftVariant,
        params: ValidatedParams,
        couplings: &EffectiveCouplings,
    ) -> Result<Self> {
        if !params.frame_matched() {
            return Err(Error::FrameMismatch {
                delta_a: params.delta_a,
                delta_m: params.delta_m,
            });
        }
        Ok(Self {
            variant,
            source: Source::Couplings {
                params,
                g1: couplings.g1,
                g2: couplings.g2,
            },
        })
    }

    /// Rotating-frame model driven by a mean-field trajectory.
    pub fn full(params: ValidatedParams, trajectory: MeanTrajectory) -> Self {
        Self {
            variant: DriftVariant::Full,
            source: Source::Trajectory { params, trajectory },
        }
    }

    /// Time-independent model with an explicit drift matrix. Reports itself
    /// as [`DriftVariant::Rwa`].
    pub fn constant(drift: Matrix6<f64>) -> Self {
        Self {
            variant: DriftVariant::Rwa,
            source: Source::Fixed(drift),
        }
    }

    pub fn variant(&self) -> DriftVariant {
        self.variant
    }

    /// Physical parameters, absent for an explicit constant matrix.
    pub fn params(&self) -> Option<&ValidatedParams> {
        match &self.source {
            Source::Couplings { params, .. } | Source::Trajectory { params, .. } => Some(params),
            Source::Fixed(_) => None,
        }
    }

    /// Same model with a different parameter set (for example another bath).
    pub fn with_params(&self, new: ValidatedParams) -> Result<Self> {
        let source = match &self.source {
            Source::Couplings { g1, g2, .. } => {
                if !new.frame_matched() {
                    return Err(Error::FrameMismatch {
                        delta_a: new.delta_a,
                        delta_m: new.delta_m,
                    });
                }
                Source::Couplings {
                    params: new,
                    g1: *g1,
                    g2: *g2,
                }
            }
            Source::Trajectory { trajectory, .. } => Source::Trajectory {
                params: new,
                trajectory: trajectory.clone(),
            },
            Source::Fixed(m) => Source::Fixed(*m),
        };
        Ok(Self {
            variant: self.variant,
            source,
        })
    }

    pub fn trajectory(&self) -> Option<&MeanTrajectory> {
        match &self.source {
            Source::Trajectory { trajectory, .. } => Some(trajectory),
            _ => None,
        }
    }

    /// Period of the coefficients: `pi/omega_b` for the asymptotic model
    /// with a non-zero coupling, `None` otherwise.
    pub fn period(&self) -> Option<f64> {
        match (&self.source, self.variant) {
            (Source::Couplings { params, g1, g2 }, DriftVariant::Asymptotic)
                if g1.norm() > 0.0 || g2.norm() > 0.0 =>
            {
                Some(PI / params.omega_b)
            }
            _ => None,
        }
    }

    /// Drift at time `t` for whichever variant this is.
    pub fn drift_at(&self, t: f64) -> Result<Matrix6<f64>> {
        match self.variant {
            DriftVariant::Asymptotic => self.drift_asymptotic(t),
            DriftVariant::Rwa => self.drift_rwa(),
            DriftVariant::Full => self.drift_full(t),
        }
    }

    pub fn drift_asymptotic(&self, t: f64) -> Result<Matrix6<f64>> {
        let (params, g1, g2) = self.couplings(DriftVariant::Asymptotic)?;
        let phase = (-2.0 * I * params.omega_b * t).exp();
        let f1 = g2 + g1 * phase;
        let f2 = g1 + g2 * phase.conj();
        Ok(interaction_drift(params, f1, f2))
    }

    pub fn drift_rwa(&self) -> Result<Matrix6<f64>> {
        if let (Source::Fixed(m), DriftVariant::Rwa) = (&self.source, self.variant) {
            return Ok(*m);
        }
        let (params, g1, g2) = self.couplings(DriftVariant::Rwa)?;
        Ok(interaction_drift(params, g2, g1))
    }

    pub fn drift_full(&self, t: f64) -> Result<Matrix6<f64>> {
        let (p, traj) = match (&self.source, self.variant) {
            (Source::Trajectory { params, trajectory }, DriftVariant::Full) => (params, trajectory),
            _ => {
                return Err(Error::WrongVariant {
                    expected: "full",
                    actual: self.variant.name(),
                })
            }
        };
        let mean = traj.at(t)?;
        let coupling = traj.eta * mean.m;
        let delta_m = traj.bare_delta_m + traj.eta * 2.0 * mean.b.re;

        let mut drift = damping(p);
        add_linear(&mut drift, MODE_A, MODE_A, -I * p.delta_a);
        add_linear(&mut drift, MODE_B, MODE_B, -I * p.omega_b);
        add_linear(&mut drift, MODE_M, MODE_M, -I * delta_m);
        add_linear(&mut drift, MODE_A, MODE_M, -I * p.g);
        add_linear(&mut drift, MODE_M, MODE_A, -I * p.g);
        add_linear(&mut drift, MODE_B, MODE_M, -I * coupling.conj());
        add_conjugate(&mut drift, MODE_B, MODE_M, -I * coupling);
        add_linear(&mut drift, MODE_M, MODE_B, -I * coupling);
        add_conjugate(&mut drift, MODE_M, MODE_B, -I * coupling);
        Ok(drift)
    }

    fn couplings(
        &self,
        expected: DriftVariant,
    ) -> Result<(&ValidatedParams, Complex64, Complex64)> {
        match (&self.source, self.variant == expected) {
            (Source::Couplings { params, g1, g2 }, true) => Ok((params, *g1, *g2)),
            _ => Err(Error::WrongVariant {
                expected: expected.name(),
                actual: self.variant.name(),
            }),
        }
    }
}

fn interaction_drift(params: &ValidatedParams, f1: Complex64, f2: Complex64) -> Matrix6<f64> {
    let g = params.g;
    let mut drift = damping(params);
    add_linear(&mut drift, MODE_A, MODE_M, -I * g);
    add_linear(&mut drift, MODE_M, MODE_A, -I * g);
    add_linear(&mut drift, MODE_B, MODE_M, -I * f1.conj());
    add_conjugate(&mut drift, MODE_B, MODE_M, -I * f2);
    add_linear(&mut drift, MODE_M, MODE_B, -I * f1);
    add_conjugate(&mut drift, MODE_M, MODE_B, -I * f2);
    drift
}

fn damping(p: &ValidatedParams) -> Matrix6<f64> {
    Matrix6::from_diagonal(&nalgebra::Vector6::new(
        -p.kappa_a / 2.0,
        -p.kappa_a / 2.0,
        -p.gamma / 2.0,
        -p.gamma / 2.0,
        -p.kappa_m / 2.0,
        -p.kappa_m / 2.0,
    ))
}

/// Block-diagonal rotation taking rotating-frame quadratures to the
/// interaction picture: each mode rotates by `frequency * t`.
pub fn interaction_rotation(frequencies: [f64; 3], t: f64) -> Matrix6<f64> {
    let mut r = Matrix6::zeros();
    for (k, w) in frequencies.iter().enumerate() {
        let (s, c) = (w * t).sin_cos();
        // o_int = o_rot exp(+i w t)
        r[(2 * k, 2 * k)] = c;
        r[(2 * k, 2 * k + 1)] = -s;
        r[(2 * k + 1, 2 * k)] = s;
        r[(2 * k + 1, 2 * k + 1)] = c;
    }
    r
}
