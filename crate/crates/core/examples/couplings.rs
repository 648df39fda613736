// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Effective couplings and squeezing parameters for a few drive settings.

use std::error::Error;

use magnomech::mean_field::{drive_amplitude_for_target_coupling, effective_couplings, Derived};
use magnomech::{DriveConfig, SystemParams};

fn show(label: &str, d: Derived) -> String {
    match d {
        Derived::Defined(v) => format!("{label} = {v:.6}"),
        Derived::Undefined { condition } => format!("{label} undefined ({condition})"),
    }
}

fn main() -> Result<(), Box<dyn Error>> {
    let p = SystemParams::reference().validate()?;
    let e1 = drive_amplitude_for_target_coupling(&p, 0.21)?;
    println!("blue-tone amplitude for |G1| = 0.21: E1 = {e1:.6e}");

    for (e1, e2) in [(e1, 0.0), (e1, 2.0 * e1), (0.5 * e1, 3.0 * e1)] {
        let c = effective_couplings(&p, &DriveConfig::amplitudes(e1, e2));
        println!(
            "E1 = {e1:.3e}, E2 = {e2:.3e}: G1 = {:.4}, G2 = {:.4}",
            c.g1, c.g2
        );
        for line in [
            show("r1", c.r1),
            show("r2", c.r2),
            show("G~1", c.gt1),
            show("G~2", c.gt2),
        ] {
            println!("    {line}");
        }
    }
    Ok(())
}
