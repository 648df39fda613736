// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Stationary solution of `M sigma + sigma M^T + D = 0`.
//!
//! The equation is vectorized column-major into the 36x36 Kronecker-sum
//! system `(I (x) M + M (x) I) vec(sigma) = -vec(D)` and solved by LU.

use nalgebra::{DMatrix, DVector, Matrix6};

use super::covariance::{symmetrize, CovarianceMatrix, DiffusionMatrix};
use super::stability::stability;
use crate::error::{Error, Result};
use crate::measures::{min_symplectic_eigenvalue, PHYSICALITY_TOL};

const N: usize = 6;

/// Solves the continuous Lyapunov equation `M X + X M^T + Q = 0` without
/// any stability or physicality checks.
pub fn solve_lyapunov(m: &Matrix6<f64>, q: &Matrix6<f64>) -> Result<Matrix6<f64>> {
    let mut k = DMatrix::<f64>::zeros(N * N, N * N);
    for j in 0..N {
        for i in 0..N {
            let row = i + N * j;
            for l in 0..N {
                // (I (x) M): block (j, j) holds M
                k[(row, l + N * j)] += m[(i, l)];
                // (M (x) I): block (j, l) holds M[j, l] * I
                k[(row, i + N * l)] += m[(j, l)];
            }
        }
    }
    let rhs = DVector::from_iterator(N * N, q.iter().map(|v| -v));
    let x = k.lu().solve(&rhs).ok_or(Error::SingularSystem)?;
    Ok(Matrix6::from_column_slice(x.as_slice()))
}

/// Frobenius norm of `M sigma + sigma M^T + D`.
pub fn lyapunov_residual(m: &Matrix6<f64>, sigma: &Matrix6<f64>, d: &Matrix6<f64>) -> f64 {
    (m * sigma + sigma * m.transpose() + d).norm()
}

/// Steady-state covariance of a strictly stable drift.
pub fn steady_state(m: &Matrix6<f64>, d: &DiffusionMatrix) -> Result<CovarianceMatrix> {
    let report = stability(m);
    if !report.stable {
        return Err(Error::UnstableDrift {
            growth_rate: report.max_real_part,
        });
    }
    let sigma = symmetrize(&solve_lyapunov(m, d.matrix())?);
    if sigma.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite { t: f64::INFINITY });
    }
    let nu = min_symplectic_eigenvalue(&sigma);
    if !(nu >= 0.5 - PHYSICALITY_TOL) {
        return Err(Error::UnphysicalState {
            t: f64::INFINITY,
            min_symplectic_eig: nu,
        });
    }
    Ok(CovarianceMatrix::from_matrix(sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Vector6;

    #[test]
    fn scalar_relaxation_fixed_point() {
        let m = Matrix6::identity() * -0.5;
        let d = DiffusionMatrix::from_diagonal([0.5, 0.7, 1.5, 1.5, 0.6, 2.0]).unwrap();
        let s = steady_state(&m, &d).unwrap();
        assert!((s.matrix() - d.matrix()).abs().max() < 1e-14);
    }

    #[test]
    fn uncoupled_thermal_fixed_point() {
        let m = -Matrix6::from_diagonal(&Vector6::new(0.02, 0.02, 0.02, 0.02, 0.3, 0.3)) / 2.0;
        let n = 3.0;
        let d = DiffusionMatrix::from_diagonal([0.01, 0.01, 0.02 * 7.0 / 2.0, 0.02 * 7.0 / 2.0, 0.15, 0.15]).unwrap();
        let s = steady_state(&m, &d).unwrap();
        let expected = Matrix6::from_diagonal(&Vector6::new(0.5, 0.5, n + 0.5, n + 0.5, 0.5, 0.5));
        assert!((s.matrix() - expected).abs().max() < 1e-12);
    }

    #[test]
    fn unstable_drift_rejected() {
        let d = DiffusionMatrix::from_diagonal([0.5; 6]).unwrap();
        assert!(matches!(
            steady_state(&Matrix6::identity(), &d),
            Err(Error::UnstableDrift { .. })
        ));
    }

    #[test]
    fn general_solve_has_small_residual() {
        let m = Matrix6::from_fn(|i, j| ((i * 7 + j * 3) % 5) as f64 * 0.1 - 0.2) - Matrix6::identity() * 2.0;
        let q = Matrix6::from_fn(|i, j| if i == j { 1.0 + i as f64 } else { 0.0 });
        let x = solve_lyapunov(&m, &q).unwrap();
        assert!(lyapunov_residual(&m, &x, &q) < 1e-12);
    }
}
