// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Integrates the classical mean-value equations and compares the late-time
//! magnon amplitude with the two-tone asymptotic formula.

use std::error::Error;

use magnomech::mean_field::{
    asymptotic_magnon_amplitude, bare_magnon_detuning, drive_amplitude_for_target_coupling,
    MeanFieldIntegrator,
};
use magnomech::{DriveConfig, SystemParams};

fn main() -> Result<(), Box<dyn Error>> {
    let p = SystemParams::reference().validate()?;
    let e1 = drive_amplitude_for_target_coupling(&p, 0.21)?;
    let drive = DriveConfig::amplitudes(e1, 0.0);
    println!("bare magnon detuning: {:.9}", bare_magnon_detuning(&p, &drive)?);

    let dt = 3.125e-5;
    let mut mf = MeanFieldIntegrator::new(p, drive, dt)?;
    let every = (10.0 / dt) as u64;
    println!("{:>8} {:>14} {:>14} {:>10}", "t", "|m| numeric", "|m| formula", "rel err");
    for _ in 0..100 {
        mf.advance(every)?;
        let t = mf.time();
        if (t.round() as u64) % 100 != 0 {
            continue;
        }
        let numeric = mf.state().m.norm();
        let formula = asymptotic_magnon_amplitude(&p, &drive, t)?.norm();
        println!(
            "{t:8.1} {numeric:14.6e} {formula:14.6e} {:10.2e}",
            (numeric - formula).abs() / formula
        );
    }
    Ok(())
}
