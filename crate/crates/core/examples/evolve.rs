// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Time evolution of the periodic interaction-picture model from a thermal
//! product state, with per-period peaks after the transient.

use std::error::Error;
use std::f64::consts::PI;

use magnomech::dynamics::{diffusion, evolve_covariance_sampled, transient_cutoff, CovarianceMatrix, DriftModel};
use magnomech::mean_field::effective_couplings;
use magnomech::measures::photon_phonon_measures;
use magnomech::sweep::peak_per_period;
use magnomech::{DriveConfig, SystemParams};

fn main() -> Result<(), Box<dyn Error>> {
    let p = SystemParams::reference().validate()?;
    let c = effective_couplings(&p, &DriveConfig::reference());
    let model = DriftModel::asymptotic(p, &c)?;
    let t_start = transient_cutoff(&p, &c)?;
    let dt = PI / 128.0;
    let traj = evolve_covariance_sampled(
        &model,
        &diffusion(&p),
        &CovarianceMatrix::thermal(p.nbar_b),
        t_start + 4.0 * PI,
        dt,
        1,
    )?;

    let mut e_n = Vec::with_capacity(traj.len());
    for (k, sigma) in traj.states.iter().enumerate() {
        let r = photon_phonon_measures(sigma)?;
        e_n.push(r.e_n);
        if k % 2048 == 0 {
            println!("t = {:7.2}  E_N = {:.6}  G_A = {:.6}  G_B = {:.6}", traj.times[k], r.e_n, r.g_a, r.g_b);
        }
    }
    let peak = peak_per_period(&traj.times, &e_n, PI, t_start)?;
    println!("transient cutoff {t_start:.1}, per-period peak E_N = {peak:.6}");
    Ok(())
}
