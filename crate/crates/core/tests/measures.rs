// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

mod common;

use magnomech::dynamics::{diffusion, steady_state, CovarianceMatrix, DriftModel};
use magnomech::mean_field::effective_couplings;
use magnomech::measures::*;
use magnomech::{DriveConfig, SystemParams};
use nalgebra::{Matrix2, Matrix4};
use proptest::prelude::*;

fn reference_steady() -> (CovarianceMatrix, f64) {
    let p = SystemParams::reference().validate().unwrap();
    let c = effective_couplings(&p, &DriveConfig::reference());
    let m = DriftModel::rwa(p, &c).unwrap().drift_rwa().unwrap();
    (steady_state(&m, &diffusion(&p)).unwrap(), c.r2.value().unwrap())
}

#[test]
fn reference_state_is_correlated_and_entangled() {
    let (sigma, _) = reference_steady();
    let r = reduce_photon_phonon(&sigma);
    assert!(r.sigma3.norm() > 0.1);
    let m = gaussian_measures(&r).unwrap();
    // independent Lyapunov solve of the same drift in double precision
    assert!((m.e_n - 1.219_085_241_204_485).abs() < 1e-9);
    assert!((m.g_a - 0.381_324_298_780_915_9).abs() < 1e-9);
    assert!((m.g_b - 0.686_482_651_847_661_3).abs() < 1e-9);
    assert!(m.g_a > 0.0 && m.g_b > 0.0 && (m.g_a - m.g_b).abs() > 1e-3);
}

#[test]
fn reference_bogoliubov_mode_is_cooled() {
    let (sigma, r2) = reference_steady();
    assert!((r2 - 0.972_955_074_527_656_6).abs() < 1e-12);
    let n = bogoliubov_occupation_phased(&sigma, r2, 0.0);
    assert!(n < r2.sinh().powi(2));
    assert!((n - 0.130_860_933_758_976_1).abs() < 1e-9, "{n}");
}

#[test]
fn two_tone_steady_state_squeezes_the_phonon() {
    let p = SystemParams::reference().validate().unwrap();
    let c = effective_couplings(&p, &DriveConfig::real_couplings(0.1, 0.2));
    let m = DriftModel::rwa(p, &c).unwrap().drift_rwa().unwrap();
    let sigma = steady_state(&m, &diffusion(&p)).unwrap();
    let v = quadrature_variances(&sigma, Mode::Phonon);
    assert!(v.min_rotated < 0.5, "{}", v.min_rotated);
    assert!(physicality_check(&sigma).physical);
}

#[test]
fn product_states_carry_nothing() {
    for n in [0.0, 0.5, 4.0] {
        let m = photon_phonon_measures(&CovarianceMatrix::thermal(n)).unwrap();
        assert_eq!((m.e_n, m.g_a, m.g_b), (0.0, 0.0, 0.0));
    }
}

#[test]
fn measures_agree_with_separate_calls() {
    let mut rng = common::rng(11);
    for _ in 0..20 {
        let r = common::random_two_mode_state(&mut rng);
        let m = gaussian_measures(&r).unwrap();
        assert_eq!(m.e_n, log_negativity(&r).unwrap());
        assert_eq!(m.g_a, steering_a_to_b(&r).unwrap());
        assert_eq!(m.g_b, steering_b_to_a(&r).unwrap());
    }
}

#[test]
fn partial_transpose_eigenvalue_matches_direct_solve() {
    // nu~ from the eigenvalues of Omega P sigma P with P = diag(1,1,1,-1)
    let mut rng = common::rng(5);
    for _ in 0..20 {
        let r = common::random_two_mode_state(&mut rng);
        let p = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, 1.0, -1.0));
        let pt = p * r.matrix() * p;
        let nu = symplectic_eigenvalues(&nalgebra::DMatrix::from_column_slice(4, 4, pt.as_slice()))[0];
        let m = gaussian_measures(&r).unwrap();
        assert!((m.theta - nu).abs() < 1e-9 * nu.max(1.0), "{} vs {nu}", m.theta);
    }
}

proptest! {
    #[test]
    fn tmsv_family(r in 0.0f64..2.0) {
        let s = ReducedCM::two_mode_squeezed(r);
        let m = gaussian_measures(&s).unwrap();
        prop_assert!((m.e_n - 2.0 * r).abs() < 1e-9);
        let g = (2.0 * r).cosh().ln();
        prop_assert!((m.g_a - g).abs() < 1e-9);
        prop_assert!((m.g_b - g).abs() < 1e-9);
    }

    #[test]
    fn local_rotation_invariance(seed in any::<u64>(), th1 in -3.2f64..3.2, th2 in -3.2f64..3.2) {
        let r = common::random_two_mode_state(&mut common::rng(seed));
        let a = r.invariants();
        let b = common::rotate_locally(&r, th1, th2).invariants();
        let scale = r.matrix().norm().powi(4).max(1.0);
        for (x, y) in [(a.i1, b.i1), (a.i2, b.i2), (a.i3, b.i3), (a.i4, b.i4)] {
            prop_assert!((x - y).abs() < 1e-12 * scale, "{} vs {}", x, y);
        }
    }

    #[test]
    fn added_noise_never_helps(seed in any::<u64>()) {
        let r = common::random_two_mode_state(&mut common::rng(seed));
        let mut prev = gaussian_measures(&r).unwrap();
        for eps in [0.01, 0.05, 0.1, 0.3, 1.0, 3.0] {
            let noisy = ReducedCM {
                sigma1: r.sigma1 + Matrix2::identity() * eps,
                sigma2: r.sigma2 + Matrix2::identity() * eps,
                sigma3: r.sigma3,
            };
            let m = gaussian_measures(&noisy).unwrap();
            prop_assert!(m.e_n <= prev.e_n + 1e-12);
            prop_assert!(m.g_a <= prev.g_a + 1e-12);
            prop_assert!(m.g_b <= prev.g_b + 1e-12);
            prev = m;
        }
    }

    #[test]
    fn steering_implies_entanglement(seed in any::<u64>()) {
        let r = common::random_two_mode_state(&mut common::rng(seed));
        prop_assert!(physicality_check_reduced(&r).physical);
        let m = gaussian_measures(&r).unwrap();
        if m.g_a > 0.0 || m.g_b > 0.0 {
            prop_assert!(m.e_n > 0.0);
        }
    }
}
