// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Gaussian simulation of a two-tone driven cavity magnomechanical system.
//!
//! A microwave cavity mode `a` couples to a magnon mode `m` (beam splitter,
//! rate `g`), which couples to a mechanical mode `b` through the
//! magnetostrictive interaction (rate `eta`). Two magnon drive tones, one
//! mechanical frequency above and below the magnon resonance, produce the
//! effective couplings `G1` (two-mode squeezing) and `G2` (beam splitter).
//!
//! The crate linearizes around the classical mean field, evolves the 6x6
//! quadrature covariance matrix and evaluates photon–phonon logarithmic
//! negativity and Gaussian steering.
//!
//! ```
//! use magnomech::{dynamics, measures, mean_field, params};
//!
//! let p = params::SystemParams::reference().validate().unwrap();
//! let c = mean_field::effective_couplings(&p, &params::DriveConfig::reference());
//! let model = dynamics::DriftModel::rwa(p, &c).unwrap();
//! let sigma = dynamics::steady_state(&model.drift_rwa().unwrap(), &dynamics::diffusion(&p)).unwrap();
//! let m = measures::photon_phonon_measures(&sigma).unwrap();
//! assert!(m.e_n > 1.2 && m.g_b > m.g_a);
//! ```

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod mean_field;
pub mod measures;
pub mod params;
pub mod sweep;

pub use error::{Error, Result};
pub use params::{Complex64, DriveConfig, DriveMode, SystemParams, ValidatedParams};
