// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Stability of the rotating-wave and periodic models as the squeezing
//! coupling approaches the cavity–magnon coupling.

use std::error::Error;

use magnomech::dynamics::{floquet_stability, stability, DriftModel};
use magnomech::mean_field::EffectiveCouplings;
use magnomech::{Complex64, SystemParams};

fn main() -> Result<(), Box<dyn Error>> {
    let p = SystemParams::reference().validate()?;
    println!("{:>6} {:>14} {:>14} {:>10}", "G1", "RWA max Re", "Floquet |mu|", "stable");
    for k in 0..=12 {
        let g1 = 0.05 + 0.02 * k as f64;
        let c = EffectiveCouplings::from_couplings(p.g, Complex64::new(g1, 0.0), Complex64::new(0.0, 0.0));
        let rwa = stability(&DriftModel::rwa(p, &c)?.drift_rwa()?);
        let asy = DriftModel::asymptotic(p, &c)?;
        let f = floquet_stability(&asy, asy.period().unwrap_or(std::f64::consts::PI))?;
        println!(
            "{g1:6.2} {:14.6e} {:14.9} {:>10}",
            rwa.max_real_part,
            f.max_multiplier,
            rwa.stable && f.stable
        );
    }
    Ok(())
}
