// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Classical mean amplitudes of the driven modes and the effective
//! couplings they induce.
//!
//! The mean-value equations in the frame rotating at the drive reference
//! frequency are
//!
//! ```text
//! d<a>/dt = -(kappa_a/2 + i delta_a) <a> - i g <m>
//! d<b>/dt = -(gamma/2 + i omega_b) <b> - i eta |<m>|^2
//! d<m>/dt = -(kappa_m/2 + i delta_m0) <m> - i g <a> - i eta <m> (<b> + <b>*) + E(t)
//! E(t)    = E1 exp(-i w1 t) + E2 exp(-i w2 t),  w1,2 = delta_m +- omega_b
//! ```
//!
//! where `delta_m0` is the bare magnon detuning. [`SystemParams::delta_m`]
//! holds the effective detuning `delta_m0 + eta (<b> + <b>*)` at which the
//! tones are placed; [`bare_magnon_detuning`] recovers `delta_m0` from the
//! static phonon displacement.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::{Complex64, DriveConfig, DriveMode, ValidatedParams};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Complex response of the magnon to a tone at `omega`, with the cavity
/// adiabatically eliminated:
/// `kappa_m/2 + i(delta_m - omega) + g^2 / (kappa_a/2 + i(delta_a - omega))`.
pub fn tone_denominator(params: &ValidatedParams, omega: f64) -> Complex64 {
    let cavity = Complex64::new(params.kappa_a / 2.0, params.delta_a - omega);
    Complex64::new(params.kappa_m / 2.0, params.delta_m - omega) + params.g * params.g / cavity
}

/// Steady-state magnon amplitude under the two-tone drive:
/// `sum_j E_j exp(-i w_j t) / tone_denominator(w_j)`.
pub fn asymptotic_magnon_amplitude(
    params: &ValidatedParams,
    drive: &DriveConfig,
    t: f64,
) -> Result<Complex64> {
    require_amplitudes(drive)?;
    let (w1, w2) = (params.blue_tone(), params.red_tone());
    let blue = drive.e1 * (-I * w1 * t).exp() / tone_denominator(params, w1);
    let red = drive.e2 * (-I * w2 * t).exp() / tone_denominator(params, w2);
    Ok(blue + red)
}

/// Bare magnon detuning that places the effective detuning at
/// `params.delta_m` once the static magnetostrictive displacement has built
/// up. Only the time-independent part of `|<m>|^2` is used.
pub fn bare_magnon_detuning(params: &ValidatedParams, drive: &DriveConfig) -> Result<f64> {
    require_amplitudes(drive)?;
    let m1 = drive.e1 / tone_denominator(params, params.blue_tone()).norm();
    let m2 = drive.e2 / tone_denominator(params, params.red_tone()).norm();
    let static_power = m1 * m1 + m2 * m2;
    let b_static =
        -I * params.eta * static_power / Complex64::new(params.gamma / 2.0, params.omega_b);
    Ok(params.delta_m - 2.0 * params.eta * b_static.re)
}

/// A derived quantity that only exists inside a domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Derived {
    Defined(f64),
    Undefined { condition: &'static str },
}

impl Derived {
    pub fn value(&self) -> Option<f64> {
        match *self {
            Derived::Defined(v) => Some(v),
            Derived::Undefined { .. } => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Derived::Defined(_))
    }
}

/// Effective couplings, squeezing parameters, and beam-splitter rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCouplings {
    /// Coupling to `dm^+ db^+` (two-mode squeezing, blue tone).
    pub g1: Complex64,
    /// Coupling to `dm^+ db` (beam splitter, red tone).
    pub g2: Complex64,
    /// `atanh(|G1|/|G2|)`, needs `|G1| < |G2|`.
    pub r1: Derived,
    /// `atanh(|G1|/g)`, needs `|G1| < g`.
    pub r2: Derived,
    /// `sqrt(|G2|^2 - |G1|^2)`.
    pub gt1: Derived,
    /// `sqrt(g^2 - |G1|^2)`.
    pub gt2: Derived,
}

pub const R1_CONDITION: &str = "|G1| < |G2|";
pub const R2_CONDITION: &str = "|G1| < g";
pub const GT1_CONDITION: &str = "|G1| <= |G2|";
pub const GT2_CONDITION: &str = "|G1| <= g";

impl EffectiveCouplings {
    pub fn from_couplings(g: f64, g1: Complex64, g2: Complex64) -> Self {
        let (n1, n2) = (g1.norm(), g2.norm());
        let r1 = if n1 < n2 {
            Derived::Defined((n1 / n2).atanh())
        } else {
            Derived::Undefined { condition: R1_CONDITION }
        };
        let r2 = if n1 < g {
            Derived::Defined((n1 / g).atanh())
        } else {
            Derived::Undefined { condition: R2_CONDITION }
        };
        let gt1 = if n1 <= n2 {
            Derived::Defined((n2 * n2 - n1 * n1).sqrt())
        } else {
            Derived::Undefined { condition: GT1_CONDITION }
        };
        let gt2 = if n1 <= g {
            Derived::Defined((g * g - n1 * n1).sqrt())
        } else {
            Derived::Undefined { condition: GT2_CONDITION }
        };
        Self { g1, g2, r1, r2, gt1, gt2 }
    }
}

/// Effective couplings `G_j = eta E_j / tone_denominator(w_j)`, or the
/// prescribed couplings in [`DriveMode::Couplings`], together with the
/// derived squeezing parameters.
pub fn effective_couplings(params: &ValidatedParams, drive: &DriveConfig) -> EffectiveCouplings {
    let (g1, g2) = match drive.mode {
        DriveMode::Couplings => (drive.g1, drive.g2),
        DriveMode::Amplitudes => (
            params.eta * drive.e1 / tone_denominator(params, params.blue_tone()),
            params.eta * drive.e2 / tone_denominator(params, params.red_tone()),
        ),
    };
    EffectiveCouplings::from_couplings(params.g, g1, g2)
}

/// Blue-tone amplitude `E1` giving `|G1| = target_g1`.
pub fn drive_amplitude_for_target_coupling(params: &ValidatedParams, target_g1: f64) -> Result<f64> {
    if !(target_g1 >= 0.0 && target_g1.is_finite()) {
        return Err(Error::InvalidParameter {
            field: "target_g1",
            reason: format!("must be finite and >= 0, got {target_g1}"),
        });
    }
    if target_g1 == 0.0 {
        return Ok(0.0);
    }
    if params.eta == 0.0 {
        return Err(Error::ZeroEta { target: target_g1 });
    }
    Ok(target_g1 * tone_denominator(params, params.blue_tone()).norm() / params.eta)
}

/// Largest step accepted by the mean-field integrator: `pi / (50 w)` where
/// `w` is the largest of `|delta_a +- w_j|` and `omega_b`.
pub fn max_mean_field_step(params: &ValidatedParams) -> f64 {
    let w = [params.blue_tone(), params.red_tone()]
        .iter()
        .flat_map(|w| [(params.delta_a - w).abs(), (params.delta_a + w).abs()])
        .fold(params.omega_b, f64::max);
    PI / (50.0 * w)
}

/// Sampled mean amplitudes `<a(t)>`, `<b(t)>`, `<m(t)>` on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanTrajectory {
    pub times: Vec<f64>,
    pub a_mean: Vec<Complex64>,
    pub b_mean: Vec<Complex64>,
    pub m_mean: Vec<Complex64>,
    /// Bare magnon detuning used during integration.
    pub bare_delta_m: f64,
    pub eta: f64,
    start: f64,
    step: f64,
}

/// Mean amplitudes interpolated at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanState {
    pub a: Complex64,
    pub b: Complex64,
    pub m: Complex64,
}

impl MeanTrajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        *self.times.last().unwrap_or(&self.start)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Linear interpolation between neighbouring samples.
    pub fn at(&self, t: f64) -> Result<MeanState> {
        let (start, end) = (self.start, self.end());
        let slack = 1e-6 * self.step;
        if self.is_empty() || t < start - slack || t > end + slack {
            return Err(Error::OutOfTrajectoryRange { t, start, end });
        }
        let last = self.len() - 1;
        if last == 0 {
            return Ok(self.sample(0));
        }
        let pos = ((t - start) / self.step).clamp(0.0, last as f64);
        let mut k = (pos.floor() as usize).min(last - 1);
        // the grid is built as start + k*step, so the guess is off by at most one
        while k > 0 && self.times[k] > t {
            k -= 1;
        }
        while k + 1 < last && self.times[k + 1] <= t {
            k += 1;
        }
        let w = ((t - self.times[k]) / (self.times[k + 1] - self.times[k])).clamp(0.0, 1.0);
        let lerp = |v: &[Complex64]| v[k] * (1.0 - w) + v[k + 1] * w;
        Ok(MeanState {
            a: lerp(&self.a_mean),
            b: lerp(&self.b_mean),
            m: lerp(&self.m_mean),
        })
    }

    fn sample(&self, k: usize) -> MeanState {
        MeanState {
            a: self.a_mean[k],
            b: self.b_mean[k],
            m: self.m_mean[k],
        }
    }
}

/// Fixed-step RK4 integrator of the mean-value equations.
///
/// Holding the integrator lets long runs be recorded window by window.
#[derive(Debug, Clone)]
pub struct MeanFieldIntegrator {
    params: ValidatedParams,
    drive: DriveConfig,
    bare_delta_m: f64,
    dt: f64,
    steps: u64,
    state: MeanState,
}

impl MeanFieldIntegrator {
    /// Starts from zero amplitudes at `t = 0`.
    pub fn new(params: ValidatedParams, drive: DriveConfig, dt: f64) -> Result<Self> {
        require_amplitudes(&drive)?;
        drive.validate()?;
        let max = max_mean_field_step(&params);
        if !(dt > 0.0) || dt > max {
            return Err(Error::StepTooLarge {
                dt,
                max,
                reason: "mean-field step must resolve the fastest rotating-frame frequency",
            });
        }
        let zero = Complex64::new(0.0, 0.0);
        Ok(Self {
            bare_delta_m: bare_magnon_detuning(&params, &drive)?,
            params,
            drive,
            dt,
            steps: 0,
            state: MeanState { a: zero, b: zero, m: zero },
        })
    }

    pub fn time(&self) -> f64 {
        self.steps as f64 * self.dt
    }

    pub fn state(&self) -> MeanState {
        self.state
    }

    pub fn bare_delta_m(&self) -> f64 {
        self.bare_delta_m
    }

    fn rhs(&self, t: f64, s: &MeanState) -> MeanState {
        let p = &self.params;
        let w1 = p.blue_tone();
        let w2 = p.red_tone();
        let drive = self.drive.e1 * (-I * w1 * t).exp() + self.drive.e2 * (-I * w2 * t).exp();
        let a = -Complex64::new(p.kappa_a / 2.0, p.delta_a) * s.a - I * p.g * s.m;
        let b = -Complex64::new(p.gamma / 2.0, p.omega_b) * s.b - I * p.eta * s.m.norm_sqr();
        let m = -Complex64::new(p.kappa_m / 2.0, self.bare_delta_m) * s.m
            - I * p.g * s.a
            - I * p.eta * s.m * (2.0 * s.b.re)
            + drive;
        MeanState { a, b, m }
    }

    pub fn step(&mut self) -> Result<()> {
        let t = self.time();
        let h = self.dt;
        let s = self.state;
        let add = |x: &MeanState, k: &MeanState, f: f64| MeanState {
            a: x.a + k.a * f,
            b: x.b + k.b * f,
            m: x.m + k.m * f,
        };
        let k1 = self.rhs(t, &s);
        let k2 = self.rhs(t + h / 2.0, &add(&s, &k1, h / 2.0));
        let k3 = self.rhs(t + h / 2.0, &add(&s, &k2, h / 2.0));
        let k4 = self.rhs(t + h, &add(&s, &k3, h));
        let next = MeanState {
            a: s.a + (k1.a + k2.a * 2.0 + k3.a * 2.0 + k4.a) * (h / 6.0),
            b: s.b + (k1.b + k2.b * 2.0 + k3.b * 2.0 + k4.b) * (h / 6.0),
            m: s.m + (k1.m + k2.m * 2.0 + k3.m * 2.0 + k4.m) * (h / 6.0),
        };
        self.steps += 1;
        let finite = [next.a, next.b, next.m]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite {
            return Err(Error::NonFinite { t: self.time() });
        }
        self.state = next;
        Ok(())
    }

    pub fn advance(&mut self, n: u64) -> Result<()> {
        for _ in 0..n {
            self.step()?;
        }
        Ok(())
    }

    /// Records the current state and the next `n` steps.
    pub fn record(&mut self, n: usize) -> Result<MeanTrajectory> {
        let start = self.time();
        let mut traj = MeanTrajectory {
            times: Vec::with_capacity(n + 1),
            a_mean: Vec::with_capacity(n + 1),
            b_mean: Vec::with_capacity(n + 1),
            m_mean: Vec::with_capacity(n + 1),
            bare_delta_m: self.bare_delta_m,
            eta: self.params.eta,
            start,
            step: self.dt,
        };
        for k in 0..=n {
            if k > 0 {
                self.step()?;
            }
            traj.times.push(self.time());
            traj.a_mean.push(self.state.a);
            traj.b_mean.push(self.state.b);
            traj.m_mean.push(self.state.m);
        }
        Ok(traj)
    }
}

/// Integrates the mean-value equations from zero amplitudes over
/// `[0, t_end]`, recording every step.
pub fn integrate_mean_field(
    params: &ValidatedParams,
    drive: &DriveConfig,
    t_end: f64,
    dt: f64,
) -> Result<MeanTrajectory> {
    if !(t_end > 0.0) {
        return Err(Error::InvalidParameter {
            field: "t_end",
            reason: format!("must be positive, got {t_end}"),
        });
    }
    let mut integrator = MeanFieldIntegrator::new(*params, *drive, dt)?;
    integrator.record((t_end / dt).ceil() as usize)
}

fn require_amplitudes(drive: &DriveConfig) -> Result<()> {
    if drive.mode != DriveMode::Amplitudes {
        return Err(Error::WrongDriveMode { expected: "amplitudes" });
    }
    Ok(())
}
