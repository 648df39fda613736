// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Rotating-frame evolution driven by the integrated mean field, checked
//! against the periodic interaction-picture model at the same times.
//!
//! `cargo run --release --example full_frame -- [t_end]`

use std::error::Error;

use magnomech::dynamics::{diffusion, evolve_covariance_sampled, evolve_rotating_frame, CovarianceMatrix, DriftModel};
use magnomech::mean_field::{drive_amplitude_for_target_coupling, effective_couplings};
use magnomech::measures::photon_phonon_measures;
use magnomech::{DriveConfig, SystemParams};

fn main() -> Result<(), Box<dyn Error>> {
    let t_end: f64 = std::env::args().nth(1).map_or(Ok(40.0), |s| s.parse())?;
    let p = SystemParams::reference().validate()?;
    let drive = DriveConfig::amplitudes(drive_amplitude_for_target_coupling(&p, 0.21)?, 0.0);
    let c = effective_couplings(&p, &drive);
    let sigma0 = CovarianceMatrix::thermal(p.nbar_b);

    // 256 full-frame steps of 6.25e-5 per sample line up with a 0.016 grid
    let mean_dt = 3.125e-5;
    let full = evolve_rotating_frame(&p, &drive, &sigma0, t_end, mean_dt, 256)?;
    let asy = DriftModel::asymptotic(p, &c)?;
    let reference = evolve_covariance_sampled(&asy, &diffusion(&p), &sigma0, t_end, 0.016, 1)?;

    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "t", "E_N full", "E_N asy", "G_B full", "G_B asy");
    let stride = full.len() / 20;
    for k in (0..full.len().min(reference.len())).step_by(stride.max(1)) {
        let a = photon_phonon_measures(&full.states[k])?;
        let b = photon_phonon_measures(&reference.states[k])?;
        println!(
            "{:8.3} {:10.6} {:10.6} {:10.6} {:10.6}",
            full.times[k], a.e_n, b.e_n, a.g_b, b.g_b
        );
    }
    Ok(())
}
