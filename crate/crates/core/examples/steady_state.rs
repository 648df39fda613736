// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Rotating-wave steady state at the reference operating point.

use std::error::Error;

use magnomech::dynamics::{diffusion, lyapunov_residual, stability, steady_state, DriftModel};
use magnomech::mean_field::effective_couplings;
use magnomech::measures::{bogoliubov_occupation_phased, photon_phonon_measures, physicality_check};
use magnomech::{DriveConfig, SystemParams};

fn main() -> Result<(), Box<dyn Error>> {
    let p = SystemParams::reference().validate()?;
    let c = effective_couplings(&p, &DriveConfig::reference());
    let m = DriftModel::rwa(p, &c)?.drift_rwa()?;
    let s = stability(&m);
    println!("stable: {} (max Re lambda = {:.6})", s.stable, s.max_real_part);

    let d = diffusion(&p);
    let sigma = steady_state(&m, &d)?;
    println!("Lyapunov residual: {:.3e}", lyapunov_residual(&m, sigma.matrix(), d.matrix()));
    println!("min symplectic eigenvalue: {:.6}", physicality_check(&sigma).min_symplectic_eig);

    let r = photon_phonon_measures(&sigma)?;
    println!("E_N = {:.6}", r.e_n);
    println!("G_A = {:.6}  (photon steers phonon)", r.g_a);
    println!("G_B = {:.6}  (phonon steers photon)", r.g_b);
    println!("regime: {}", r.regime().name());

    if let Some(r2) = c.r2.value() {
        let n = bogoliubov_occupation_phased(&sigma, r2, c.g1.arg());
        println!("cooled Bogoliubov mode occupation: {n:.6} (r2 = {r2:.6})");
    }
    Ok(())
}
