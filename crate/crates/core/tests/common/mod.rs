// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use magnomech::dynamics::{stability, DiffusionMatrix};
use magnomech::measures::ReducedCM;
use nalgebra::{Matrix4, Matrix6, SMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn symplectic_form<const N: usize>() -> SMatrix<f64, N, N> {
    let mut j = SMatrix::<f64, N, N>::zeros();
    for k in 0..N / 2 {
        j[(2 * k, 2 * k + 1)] = 1.0;
        j[(2 * k + 1, 2 * k)] = -1.0;
    }
    j
}

/// Quadratic Hamiltonian plus independent thermal damping of each mode.
/// Such a drift/diffusion pair always has a physical steady state.
pub fn random_open_system(rng: &mut ChaCha8Rng, min_gap: f64) -> (Matrix6<f64>, DiffusionMatrix) {
    loop {
        let mut h = Matrix6::<f64>::zeros();
        for i in 0..6 {
            for j in i..6 {
                let v = rng.random_range(-0.5..0.5);
                h[(i, j)] = v;
                h[(j, i)] = v;
            }
        }
        let mut m = symplectic_form::<6>() * h;
        let mut d = [0.0; 6];
        for k in 0..3 {
            let rate: f64 = rng.random_range(0.1..1.0);
            let nbar: f64 = rng.random_range(0.0..3.0);
            for q in [2 * k, 2 * k + 1] {
                m[(q, q)] -= rate / 2.0;
                d[q] = rate * (nbar + 0.5);
            }
        }
        let s = stability(&m);
        if s.stable && s.max_real_part < -min_gap {
            return (m, DiffusionMatrix::from_diagonal(d).unwrap());
        }
    }
}

/// `S diag(nu) S^T` with a random symplectic `S` and thermal `nu >= 1/2`.
pub fn random_two_mode_state(rng: &mut ChaCha8Rng) -> ReducedCM {
    let mut h = Matrix4::<f64>::zeros();
    for i in 0..4 {
        for j in i..4 {
            let v = rng.random_range(-0.6..0.6);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    let s = (symplectic_form::<4>() * h).exp();
    let n1: f64 = rng.random_range(0.0..1.5);
    let n2: f64 = rng.random_range(0.0..1.5);
    let nu = Matrix4::from_diagonal(&nalgebra::Vector4::new(n1 + 0.5, n1 + 0.5, n2 + 0.5, n2 + 0.5));
    let sigma = s * nu * s.transpose();
    ReducedCM::from_matrix(&((sigma + sigma.transpose()) * 0.5))
}

/// Independent local rotations of the two modes.
pub fn rotate_locally(r: &ReducedCM, th1: f64, th2: f64) -> ReducedCM {
    let mut rot = Matrix4::zeros();
    for (k, th) in [th1, th2].into_iter().enumerate() {
        let (s, c) = th.sin_cos();
        rot[(2 * k, 2 * k)] = c;
        rot[(2 * k, 2 * k + 1)] = -s;
        rot[(2 * k + 1, 2 * k)] = s;
        rot[(2 * k + 1, 2 * k + 1)] = c;
    }
    ReducedCM::from_matrix(&(rot * r.matrix() * rot.transpose()))
}
