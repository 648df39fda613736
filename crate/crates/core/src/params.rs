// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! System parameters and drive configuration.
//!
//! Every frequency and rate is dimensionless, measured in units of the
//! mechanical frequency `omega_b`, which is pinned to 1. Times are in units
//! of `1/omega_b`.

use std::ops::Deref;

use nalgebra::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex64 = Complex<f64>;

/// Physical parameters of the cavity–magnon–phonon system.
///
/// `delta_m` is the effective magnon detuning (the bare detuning shifted by
/// the static magnetostrictive displacement). The two drive tones are
/// positioned relative to it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    pub delta_a: f64,
    pub delta_m: f64,
    #[serde(default = "unit")]
    pub omega_b: f64,
    pub g: f64,
    pub eta: f64,
    pub kappa_a: f64,
    pub kappa_m: f64,
    pub gamma: f64,
    pub nbar_b: f64,
}

fn unit() -> f64 {
    1.0
}

impl SystemParams {
    /// Operating point of the reference figure: `delta_a = delta_m = 1000`,
    /// `kappa_a = 0.02`, `kappa_m = 0.3`, `g = 0.28`, `eta = 2e-8`, with
    /// `gamma = 0.02` and a zero-temperature phonon bath.
    pub fn reference() -> Self {
        Self {
            delta_a: 1000.0,
            delta_m: 1000.0,
            omega_b: 1.0,
            g: 0.28,
            eta: 2e-8,
            kappa_a: 0.02,
            kappa_m: 0.3,
            gamma: 0.02,
            nbar_b: 0.0,
        }
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn with_nbar(mut self, nbar_b: f64) -> Self {
        self.nbar_b = nbar_b;
        self
    }

    pub fn validate(self) -> Result<ValidatedParams> {
        let finite = [
            ("delta_a", self.delta_a),
            ("delta_m", self.delta_m),
            ("omega_b", self.omega_b),
            ("g", self.g),
            ("eta", self.eta),
            ("kappa_a", self.kappa_a),
            ("kappa_m", self.kappa_m),
            ("gamma", self.gamma),
            ("nbar_b", self.nbar_b),
        ];
        for (field, value) in finite {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    field,
                    reason: format!("must be finite, got {value}"),
                });
            }
        }
        if self.omega_b != 1.0 {
            return Err(Error::InvalidParameter {
                field: "omega_b",
                reason: format!("is the unit of frequency and must equal 1, got {}", self.omega_b),
            });
        }
        for (field, value) in [
            ("kappa_a", self.kappa_a),
            ("kappa_m", self.kappa_m),
            ("gamma", self.gamma),
        ] {
            if value <= 0.0 {
                return Err(Error::NonPositiveRate { field, value });
            }
        }
        for (field, value) in [("g", self.g), ("eta", self.eta)] {
            if value < 0.0 {
                return Err(Error::InvalidParameter {
                    field,
                    reason: format!("coupling must be non-negative, got {value}"),
                });
            }
        }
        if self.nbar_b < 0.0 {
            return Err(Error::NegativeOccupation {
                field: "nbar_b",
                value: self.nbar_b,
            });
        }
        Ok(ValidatedParams(self))
    }
}

/// Parameters that passed [`SystemParams::validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidatedParams(SystemParams);

impl ValidatedParams {
    pub fn into_inner(self) -> SystemParams {
        self.0
    }

    /// Replaces the bath-dependent fields, re-checking their invariants.
    pub fn with_bath(self, gamma: f64, nbar_b: f64) -> Result<Self> {
        self.0.with_gamma(gamma).with_nbar(nbar_b).validate()
    }

    /// True when the cavity and effective magnon detunings coincide, which
    /// the interaction-picture drift models rely on.
    pub fn frame_matched(&self) -> bool {
        let scale = self.0.delta_a.abs().max(self.0.delta_m.abs()).max(1.0);
        (self.0.delta_a - self.0.delta_m).abs() <= 1e-12 * scale
    }

    /// Frequency of the blue tone, one mechanical quantum above the magnon.
    pub fn blue_tone(&self) -> f64 {
        self.0.delta_m + self.0.omega_b
    }

    /// Frequency of the red tone, one mechanical quantum below the magnon.
    pub fn red_tone(&self) -> f64 {
        self.0.delta_m - self.0.omega_b
    }
}

impl Deref for ValidatedParams {
    type Target = SystemParams;

    fn deref(&self) -> &SystemParams {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DriveMode {
    /// Drive amplitudes `e1`, `e2` are authoritative.
    Amplitudes,
    /// Effective couplings `g1`, `g2` are given directly.
    Couplings,
}

/// Two-tone magnon drive.
///
/// Tone 1 is blue-detuned (at `delta_m + omega_b`), tone 2 red-detuned (at
/// `delta_m - omega_b`). Blue-only operation is `e2 = 0` or `g2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveConfig {
    pub mode: DriveMode,
    pub e1: f64,
    pub e2: f64,
    pub g1: Complex64,
    pub g2: Complex64,
}

impl DriveConfig {
    pub fn amplitudes(e1: f64, e2: f64) -> Self {
        Self {
            mode: DriveMode::Amplitudes,
            e1,
            e2,
            g1: Complex64::new(0.0, 0.0),
            g2: Complex64::new(0.0, 0.0),
        }
    }

    pub fn couplings(g1: Complex64, g2: Complex64) -> Self {
        Self {
            mode: DriveMode::Couplings,
            e1: 0.0,
            e2: 0.0,
            g1,
            g2,
        }
    }

    /// Real couplings, as quoted for the reference figure.
    pub fn real_couplings(g1: f64, g2: f64) -> Self {
        Self::couplings(Complex64::new(g1, 0.0), Complex64::new(g2, 0.0))
    }

    /// Blue-detuned drive only, `G1 = 0.21`, `G2 = 0`.
    pub fn reference() -> Self {
        Self::real_couplings(0.21, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            DriveMode::Amplitudes => {
                for (field, value) in [("e1", self.e1), ("e2", self.e2)] {
                    if !(value.is_finite() && value >= 0.0) {
                        return Err(Error::InvalidParameter {
                            field,
                            reason: format!("drive amplitude must be finite and >= 0, got {value}"),
                        });
                    }
                }
            }
            DriveMode::Couplings => {
                for (field, value) in [("g1", self.g1), ("g2", self.g2)] {
                    if !(value.re.is_finite() && value.im.is_finite()) {
                        return Err(Error::InvalidParameter {
                            field,
                            reason: "coupling must be finite".into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Mean thermal occupation `1/(exp(x) - 1)` for the energy ratio
/// `x = hbar*omega_b/(k_B*T)`.
pub fn thermal_occupation(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::NonPositiveRatio(x));
    }
    Ok(1.0 / x.exp_m1())
}
