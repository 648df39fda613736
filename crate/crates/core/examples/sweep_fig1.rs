// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Sweeps the default damping/temperature grid and writes the peaks as CSV.
//!
//! `cargo run --release --example sweep_fig1 -- [out.csv] [asymptotic]`

use std::collections::BTreeMap;
use std::error::Error;

use magnomech::cli::{Cell, Table, SWEEP_COLUMNS};
use magnomech::sweep::{default_fig1_grid, run_sweep, SweepVariant};

fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "sweep_fig1.csv".into());
    let variant = match args.next().as_deref() {
        Some("asymptotic") => SweepVariant::Asymptotic,
        _ => SweepVariant::Rwa,
    };
    let grid = default_fig1_grid(variant);
    let start = std::time::Instant::now();
    let results = run_sweep(&grid);
    println!("{} points in {:.2?}", results.len(), start.elapsed());

    let mut regimes = BTreeMap::new();
    for r in &results {
        let name = r.regime.map_or("unstable", |g| g.name());
        *regimes.entry(name).or_insert(0) += 1;
    }
    for (name, count) in regimes {
        println!("{name:>16}: {count}");
    }

    let rows = results
        .iter()
        .map(|r| {
            vec![
                Cell::Real(r.gamma),
                Cell::Real(r.nbar),
                r.peak_e_n().into(),
                r.peak_g_a().into(),
                r.peak_g_b().into(),
                Cell::Bool(r.stable),
                r.regime.map_or(Cell::Empty, |g| Cell::Text(g.name().into())),
                r.max_growth_rate.into(),
                r.error.clone().map_or(Cell::Empty, Cell::Text),
            ]
        })
        .collect();
    let table = Table {
        columns: SWEEP_COLUMNS.to_vec(),
        rows,
    };
    std::fs::write(&path, table.to_csv())?;
    println!("wrote {path}");
    Ok(())
}
