// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

use magnomech::mean_field::effective_couplings;
use magnomech::measures::SteeringRegime;
use magnomech::sweep::*;
use magnomech::{DriveConfig, SystemParams};

fn grid(gammas: Vec<f64>, nbars: Vec<f64>, variant: SweepVariant) -> SweepGrid {
    let base = SystemParams::reference().validate().unwrap();
    let c = effective_couplings(&base, &DriveConfig::reference());
    SweepGrid::new(gammas, nbars, base, c, variant).unwrap()
}

#[test]
fn reference_point_two_way_asymmetric() {
    for variant in [SweepVariant::Rwa, SweepVariant::Asymptotic] {
        let r = &run_sweep(&grid(vec![0.02], vec![0.0], variant))[0];
        assert!(r.stable, "{variant:?}");
        assert_eq!(r.regime, Some(SteeringRegime::TwoWay));
        assert!(r.peak_g_a().unwrap() != r.peak_g_b().unwrap());
    }
}

#[test]
fn strong_damping_favours_photon_steering() {
    let r = &run_sweep(&grid(vec![0.07], vec![0.0], SweepVariant::Rwa))[0];
    // independent Lyapunov solve at gamma = 0.07
    assert!((r.peak_e_n().unwrap() - 0.976_726_123_068_147_5).abs() < 1e-9);
    assert!((r.peak_g_a().unwrap() - 0.346_160_453_001_328_1).abs() < 1e-9);
    assert!((r.peak_g_b().unwrap() - 0.307_699_791_402_800_2).abs() < 1e-9);
    assert!(r.peak_g_a() > r.peak_g_b());
}

#[test]
fn asymptotic_peak_matches_independent_solution() {
    let p = SystemParams::reference().validate().unwrap();
    let c = effective_couplings(&p, &DriveConfig::reference());
    let a = asymptotic_peaks(&p, &c).unwrap();
    // periodic steady state from an independent monodromy/fixed-point solve
    assert!((a.peaks.e_n - 1.100_685_473_933_808_6).abs() < 1e-6 * 1.1);
    assert!((a.peaks.g_a - 0.216_493_045_329_753).abs() < 1e-5 * 0.22);
    assert!((a.peaks.g_b - 0.595_834_558_989_047_8).abs() < 1e-6 * 0.6);
    assert!((a.floquet_exponent + 0.007_978_958_886).abs() < 1e-9);
}

#[test]
fn columns_are_non_increasing_in_nbar() {
    let g = default_fig1_grid(SweepVariant::Rwa);
    let results = run_sweep(&g);
    let n = g.nbar_values().len();
    for column in results.chunks(n) {
        let stable: Vec<_> = column.iter().filter(|r| r.stable).collect();
        for w in stable.windows(2) {
            let (a, b) = (w[0].peaks.unwrap(), w[1].peaks.unwrap());
            assert!(b.e_n <= a.e_n && b.g_a <= a.g_a && b.g_b <= a.g_b);
        }
    }
}

#[test]
fn photon_steering_vanishes_first() {
    let g = default_fig1_grid(SweepVariant::Rwa);
    let results = run_sweep(&g);
    let first_zero = |col: &[SweepResult], f: fn(&Peaks) -> f64| {
        col.iter().position(|r| r.peaks.as_ref().is_some_and(|p| f(p) == 0.0))
    };
    for column in results.chunks(g.nbar_values().len()) {
        if !column[0].stable {
            continue;
        }
        let a = first_zero(column, |p| p.g_a).unwrap_or(usize::MAX);
        let b = first_zero(column, |p| p.g_b).unwrap_or(usize::MAX);
        assert!(a <= b, "gamma = {}", column[0].gamma);
    }
}

#[test]
fn row_major_order() {
    let r = run_sweep(&grid(vec![0.02, 0.03], vec![0.0, 1.0, 2.0], SweepVariant::Rwa));
    let order: Vec<_> = r.iter().map(|x| (x.gamma, x.nbar)).collect();
    assert_eq!(
        order,
        vec![(0.02, 0.0), (0.02, 1.0), (0.02, 2.0), (0.03, 0.0), (0.03, 1.0), (0.03, 2.0)]
    );
}

#[test]
fn thread_count_does_not_change_results() {
    let g = grid(vec![0.02, 0.05], vec![0.0, 1.5], SweepVariant::Asymptotic);
    let one = run_sweep_with_threads(&g, 1).unwrap();
    let three = run_sweep_with_threads(&g, 3).unwrap();
    assert_eq!(one, three);
}
