// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

//! Photon–phonon entanglement and steering from the covariance matrix.
//!
//! With `sigma_R = [[s1, s3], [s3^T, s2]]` the photon–phonon block and the
//! local symplectic invariants `I1 = det s1`, `I2 = det s2`, `I3 = det s3`,
//! `I4 = det sigma_R`:
//!
//! ```text
//! S    = I1 + I2 - 2 I3
//! nu   = sqrt((S - sqrt(S^2 - 4 I4)) / 2)
//! E_N  = max(0, -ln(2 nu))
//! G_AB = max(0, ln(I1 / (4 I4)) / 2)    photon steers phonon
//! G_BA = max(0, ln(I2 / (4 I4)) / 2)    phonon steers photon
//! ```

use nalgebra::{DMatrix, Matrix2, Matrix4, Matrix6};

use crate::dynamics::CovarianceMatrix;
use crate::error::{Error, Result};

/// Allowed undershoot of symplectic eigenvalues below 1/2.
pub const PHYSICALITY_TOL: f64 = 1e-9;
/// Measures below this are reported as exactly zero.
pub const ZERO_CLAMP: f64 = 1e-12;
/// A side counts as steering when its measure exceeds this.
pub const STEERING_THRESHOLD: f64 = 1e-6;
/// Negative discriminants down to this are treated as zero.
pub const DISCRIMINANT_TOL: f64 = 1e-12;
/// Smallest `I4` accepted by the steering measures.
pub const SINGULAR_I4: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCM {
    /// Photon block.
    pub sigma1: Matrix2<f64>,
    /// Phonon block.
    pub sigma2: Matrix2<f64>,
    /// Photon–phonon correlations.
    pub sigma3: Matrix2<f64>,
}

impl ReducedCM {
    pub fn from_matrix(m: &Matrix4<f64>) -> Self {
        Self {
            sigma1: m.fixed_view::<2, 2>(0, 0).into_owned(),
            sigma2: m.fixed_view::<2, 2>(2, 2).into_owned(),
            sigma3: m.fixed_view::<2, 2>(0, 2).into_owned(),
        }
    }

    pub fn matrix(&self) -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.sigma1);
        m.fixed_view_mut::<2, 2>(2, 2).copy_from(&self.sigma2);
        m.fixed_view_mut::<2, 2>(0, 2).copy_from(&self.sigma3);
        m.fixed_view_mut::<2, 2>(2, 0).copy_from(&self.sigma3.transpose());
        m
    }

    /// Two-mode squeezed vacuum with squeezing `r`.
    pub fn two_mode_squeezed(r: f64) -> Self {
        let c = (2.0 * r).cosh() / 2.0;
        let s = (2.0 * r).sinh() / 2.0;
        Self {
            sigma1: Matrix2::identity() * c,
            sigma2: Matrix2::identity() * c,
            sigma3: Matrix2::new(s, 0.0, 0.0, -s),
        }
    }

    pub fn invariants(&self) -> SymplecticInvariants {
        SymplecticInvariants {
            i1: det2(&self.sigma1),
            i2: det2(&self.sigma2),
            i3: det2(&self.sigma3),
            i4: det4(&self.matrix()),
        }
    }
}

/// Rows and columns 0..4 of the 6x6 covariance: photon then phonon.
pub fn reduce_photon_phonon(sigma: &CovarianceMatrix) -> ReducedCM {
    ReducedCM::from_matrix(&sigma.matrix().fixed_view::<4, 4>(0, 0).into_owned())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticInvariants {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasuresResult {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
    pub sigma_minus: f64,
    /// Smallest symplectic eigenvalue of the partial transpose.
    pub theta: f64,
    pub e_n: f64,
    /// Photon steers phonon.
    pub g_a: f64,
    /// Phonon steers photon.
    pub g_b: f64,
}

impl MeasuresResult {
    pub fn regime(&self) -> SteeringRegime {
        SteeringRegime::classify(self.g_a, self.g_b)
    }
}

fn det2(m: &Matrix2<f64>) -> f64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Laplace expansion over the first two rows.
fn det4(m: &Matrix4<f64>) -> f64 {
    let minor_top = |c0: usize, c1: usize| m[(0, c0)] * m[(1, c1)] - m[(0, c1)] * m[(1, c0)];
    let minor_bot = |c0: usize, c1: usize| m[(2, c0)] * m[(3, c1)] - m[(2, c1)] * m[(3, c0)];
    minor_top(0, 1) * minor_bot(2, 3) - minor_top(0, 2) * minor_bot(1, 3)
        + minor_top(0, 3) * minor_bot(1, 2)
        + minor_top(1, 2) * minor_bot(0, 3)
        - minor_top(1, 3) * minor_bot(0, 2)
        + minor_top(2, 3) * minor_bot(0, 1)
}

fn clamp_zero(v: f64) -> f64 {
    if v < ZERO_CLAMP {
        0.0
    } else {
        v
    }
}

/// Smallest partially-transposed symplectic eigenvalue and `Sigma_-`.
fn partial_transpose_eigenvalue(inv: &SymplecticInvariants) -> Result<(f64, f64)> {
    let sigma_minus = inv.i1 + inv.i2 - 2.0 * inv.i3;
    let mut disc = sigma_minus * sigma_minus - 4.0 * inv.i4;
    if disc < 0.0 {
        if disc < -DISCRIMINANT_TOL {
            return Err(Error::DegenerateDiscriminant(disc));
        }
        disc = 0.0;
    }
    // S - sqrt(S^2 - 4 I4) rewritten as 4 I4 / (S + sqrt(...)) to avoid cancellation
    let denom = sigma_minus + disc.sqrt();
    let theta_sq = if denom > 0.0 { 2.0 * inv.i4 / denom } else { 0.0 };
    Ok((theta_sq.max(0.0).sqrt(), sigma_minus))
}

pub fn log_negativity(r: &ReducedCM) -> Result<f64> {
    let (theta, _) = partial_transpose_eigenvalue(&r.invariants())?;
    Ok(clamp_zero((-(2.0 * theta).ln()).max(0.0)))
}

fn steering(local: f64, i4: f64) -> Result<f64> {
    if i4 <= SINGULAR_I4 {
        return Err(Error::SingularState(i4));
    }
    Ok(clamp_zero((0.5 * (local / (4.0 * i4)).ln()).max(0.0)))
}

/// Gaussian steerability of the phonon by the photon.
pub fn steering_a_to_b(r: &ReducedCM) -> Result<f64> {
    let inv = r.invariants();
    steering(inv.i1, inv.i4)
}

/// Gaussian steerability of the photon by the phonon.
pub fn steering_b_to_a(r: &ReducedCM) -> Result<f64> {
    let inv = r.invariants();
    steering(inv.i2, inv.i4)
}

/// All measures at once.
pub fn gaussian_measures(r: &ReducedCM) -> Result<MeasuresResult> {
    let inv = r.invariants();
    let (theta, sigma_minus) = partial_transpose_eigenvalue(&inv)?;
    Ok(MeasuresResult {
        i1: inv.i1,
        i2: inv.i2,
        i3: inv.i3,
        i4: inv.i4,
        sigma_minus,
        theta,
        e_n: clamp_zero((-(2.0 * theta).ln()).max(0.0)),
        g_a: steering(inv.i1, inv.i4)?,
        g_b: steering(inv.i2, inv.i4)?,
    })
}

/// Measures of the photon–phonon pair of a full covariance matrix.
pub fn photon_phonon_measures(sigma: &CovarianceMatrix) -> Result<MeasuresResult> {
    gaussian_measures(&reduce_photon_phonon(sigma))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SteeringRegime {
    NoSteering,
    OneWayAtoB,
    OneWayBtoA,
    TwoWay,
}

impl SteeringRegime {
    /// A side steers when its measure exceeds [`STEERING_THRESHOLD`]; one-way
    /// additionally needs the other side at or below [`ZERO_CLAMP`]. Both
    /// strictly positive with one steering counts as two-way.
    pub fn classify(g_a: f64, g_b: f64) -> Self {
        let a = g_a > STEERING_THRESHOLD;
        let b = g_b > STEERING_THRESHOLD;
        match (a, b) {
            (false, false) => SteeringRegime::NoSteering,
            (true, true) => SteeringRegime::TwoWay,
            (true, false) if g_b <= ZERO_CLAMP => SteeringRegime::OneWayAtoB,
            (false, true) if g_a <= ZERO_CLAMP => SteeringRegime::OneWayBtoA,
            _ => SteeringRegime::TwoWay,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SteeringRegime::NoSteering => "no_steering",
            SteeringRegime::OneWayAtoB => "one_way_a_to_b",
            SteeringRegime::OneWayBtoA => "one_way_b_to_a",
            SteeringRegime::TwoWay => "two_way",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            SteeringRegime::NoSteering,
            SteeringRegime::OneWayAtoB,
            SteeringRegime::OneWayBtoA,
            SteeringRegime::TwoWay,
        ]
        .into_iter()
        .find(|r| r.name() == name)
    }
}

/// Symplectic eigenvalues of a `2n x 2n` covariance in `(q1, p1, q2, p2, ...)`
/// ordering, ascending. They are the moduli of the eigenvalues of `Omega sigma`.
pub fn symplectic_eigenvalues(sigma: &DMatrix<f64>) -> Vec<f64> {
    let n = sigma.nrows();
    let mut omega_sigma = sigma.clone();
    for k in 0..n / 2 {
        let (q, p) = (2 * k, 2 * k + 1);
        for c in 0..n {
            // (Omega sigma)[q] = sigma[p], (Omega sigma)[p] = -sigma[q]
            omega_sigma[(q, c)] = sigma[(p, c)];
            omega_sigma[(p, c)] = -sigma[(q, c)];
        }
    }
    let mut nu: Vec<f64> = omega_sigma
        .complex_eigenvalues()
        .iter()
        .map(|z| z.im.abs())
        .collect();
    nu.sort_by(f64::total_cmp);
    nu.into_iter().step_by(2).collect()
}

pub fn min_symplectic_eigenvalue(sigma: &Matrix6<f64>) -> f64 {
    let d = DMatrix::from_column_slice(6, 6, sigma.as_slice());
    symplectic_eigenvalues(&d)[0]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalityReport {
    pub physical: bool,
    pub min_symplectic_eig: f64,
}

pub fn physicality_check(sigma: &CovarianceMatrix) -> PhysicalityReport {
    let nu = min_symplectic_eigenvalue(sigma.matrix());
    PhysicalityReport {
        physical: nu >= 0.5 - PHYSICALITY_TOL,
        min_symplectic_eig: nu,
    }
}

/// Physicality of a reduced two-mode covariance.
pub fn physicality_check_reduced(r: &ReducedCM) -> PhysicalityReport {
    let m = r.matrix();
    let nu = symplectic_eigenvalues(&DMatrix::from_column_slice(4, 4, m.as_slice()))[0];
    PhysicalityReport {
        physical: nu >= 0.5 - PHYSICALITY_TOL,
        min_symplectic_eig: nu,
    }
}

/// Occupation of `beta = a cosh r + b^+ sinh r`.
pub fn bogoliubov_occupation(sigma: &CovarianceMatrix, r2: f64) -> f64 {
    bogoliubov_occupation_phased(sigma, r2, 0.0)
}

/// Occupation of `beta = a cosh r + exp(i phase) b^+ sinh r`, the mode that
/// a coupling `G1 = |G1| exp(i phase)` cools.
pub fn bogoliubov_occupation_phased(sigma: &CovarianceMatrix, r2: f64, phase: f64) -> f64 {
    let s = sigma.matrix();
    let (c, sh) = (r2.cosh(), r2.sinh());
    let photon = (s[(0, 0)] + s[(1, 1)] - 1.0) / 2.0;
    let phonon_anti = (s[(2, 2)] + s[(3, 3)] + 1.0) / 2.0;
    // 2 Re(exp(-i phase) <a b>)
    let cross = (s[(0, 2)] - s[(1, 3)]) * phase.cos() + (s[(0, 3)] + s[(1, 2)]) * phase.sin();
    (c * c * photon + sh * sh * phonon_anti + c * sh * cross).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Photon,
    Phonon,
    Magnon,
}

impl Mode {
    fn offset(self) -> usize {
        match self {
            Mode::Photon => 0,
            Mode::Phonon => 2,
            Mode::Magnon => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureVariances {
    pub var_q: f64,
    pub var_p: f64,
    /// Minimum over rotation angle, the smaller eigenvalue of the block.
    pub min_rotated: f64,
}

pub fn quadrature_variances(sigma: &CovarianceMatrix, mode: Mode) -> QuadratureVariances {
    let k = mode.offset();
    let s = sigma.matrix();
    let (vq, vp, c) = (s[(k, k)], s[(k + 1, k + 1)], s[(k, k + 1)]);
    let mean = (vq + vp) / 2.0;
    let half_gap = (((vq - vp) / 2.0).powi(2) + c * c).sqrt();
    QuadratureVariances {
        var_q: vq,
        var_p: vp,
        min_rotated: mean - half_gap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Vector6;

    #[test]
    fn vacuum_reduction() {
        let r = reduce_photon_phonon(&CovarianceMatrix::vacuum());
        assert_eq!(r.sigma1, Matrix2::identity() * 0.5);
        assert_eq!(r.sigma2, Matrix2::identity() * 0.5);
        assert_eq!(r.sigma3, Matrix2::zeros());
    }

    #[test]
    fn thermal_phonon_block() {
        let r = reduce_photon_phonon(&CovarianceMatrix::thermal(3.0));
        assert_eq!(r.sigma2, Matrix2::identity() * 3.5);
    }

    #[test]
    fn det4_matches_lu() {
        let m = Matrix4::from_fn(|i, j| ((i * 5 + j * 3 + 1) % 7) as f64 - 2.5 + if i == j { 4.0 } else { 0.0 });
        assert!((det4(&m) - m.determinant()).abs() < 1e-10 * m.determinant().abs());
    }

    #[test]
    fn tmsv_half() {
        let r = ReducedCM::two_mode_squeezed(0.5);
        assert!((log_negativity(&r).unwrap() - 1.0).abs() < 1e-12);
        let expected = 1f64.cosh().ln();
        assert!((steering_a_to_b(&r).unwrap() - expected).abs() < 1e-12);
        assert!((steering_b_to_a(&r).unwrap() - 0.43378).abs() < 1e-5);
    }

    #[test]
    fn product_vacuum_has_nothing() {
        let r = reduce_photon_phonon(&CovarianceMatrix::vacuum());
        let m = gaussian_measures(&r).unwrap();
        assert_eq!((m.e_n, m.g_a, m.g_b), (0.0, 0.0, 0.0));
        assert_eq!(m.regime(), SteeringRegime::NoSteering);
    }

    #[test]
    fn singular_state_rejected() {
        let r = ReducedCM {
            sigma1: Matrix2::zeros(),
            sigma2: Matrix2::identity(),
            sigma3: Matrix2::zeros(),
        };
        assert!(matches!(steering_a_to_b(&r), Err(Error::SingularState(_))));
    }

    #[test]
    fn negative_discriminant_rejected() {
        // indefinite blocks: S = 2 - 2c^2, I4 = (1 + c^2)^2, so S^2 - 4 I4 = -16 c^2
        let r = ReducedCM {
            sigma1: Matrix2::identity(),
            sigma2: -Matrix2::identity(),
            sigma3: Matrix2::identity() * 0.5,
        };
        assert!(matches!(log_negativity(&r), Err(Error::DegenerateDiscriminant(d)) if (d + 4.0).abs() < 1e-12));
    }

    #[test]
    fn symplectic_eigenvalues_of_simple_states() {
        let p = physicality_check(&CovarianceMatrix::vacuum());
        assert!(p.physical);
        assert!((p.min_symplectic_eig - 0.5).abs() < 1e-14);
        let quarter = CovarianceMatrix::from_matrix(Matrix6::identity() * 0.25);
        assert!(!physicality_check(&quarter).physical);
        let thermal = CovarianceMatrix::thermal(3.0);
        let nu = symplectic_eigenvalues(&DMatrix::from_column_slice(6, 6, thermal.matrix().as_slice()));
        assert_eq!(nu.len(), 3);
        assert!((nu[2] - 3.5).abs() < 1e-12);
        // a squeezed vacuum is pure: nu = 1/2 although variances differ
        let sq = CovarianceMatrix::from_matrix(Matrix6::from_diagonal(&Vector6::new(2.0, 0.125, 0.5, 0.5, 0.5, 0.5)));
        assert!((physicality_check(&sq).min_symplectic_eig - 0.5).abs() < 1e-12);
    }

    #[test]
    fn tmsv_reduced_is_pure() {
        let p = physicality_check_reduced(&ReducedCM::two_mode_squeezed(1.3));
        assert!((p.min_symplectic_eig - 0.5).abs() < 1e-9);
    }

    #[test]
    fn bogoliubov_vacuum_values() {
        let v = CovarianceMatrix::vacuum();
        assert_eq!(bogoliubov_occupation(&v, 0.0), 0.0);
        let n = bogoliubov_occupation(&v, 0.973);
        assert!((n - 0.973f64.sinh().powi(2)).abs() < 1e-12);
        assert!((n - 1.2855).abs() < 1e-3);
    }

    #[test]
    fn bogoliubov_mode_of_tmsv_is_empty() {
        // TMSV built with the same sign convention: a cosh r - b^+ sinh r annihilates it
        let r = 0.7;
        let red = ReducedCM::two_mode_squeezed(r).matrix();
        let mut s = Matrix6::identity() * 0.5;
        s.fixed_view_mut::<4, 4>(0, 0).copy_from(&red);
        let sigma = CovarianceMatrix::from_matrix(s);
        assert!(bogoliubov_occupation_phased(&sigma, r, std::f64::consts::PI) < 1e-12);
        assert!(bogoliubov_occupation(&sigma, r) > 1.0);
    }

    #[test]
    fn variances() {
        let v = quadrature_variances(&CovarianceMatrix::vacuum(), Mode::Photon);
        assert_eq!((v.var_q, v.var_p, v.min_rotated), (0.5, 0.5, 0.5));
        let t = quadrature_variances(&CovarianceMatrix::thermal(3.0), Mode::Phonon);
        assert_eq!((t.var_q, t.var_p, t.min_rotated), (3.5, 3.5, 3.5));
        let mut s = Matrix6::identity() * 0.5;
        s[(4, 4)] = 1.0;
        s[(5, 5)] = 1.0;
        s[(4, 5)] = 0.6;
        s[(5, 4)] = 0.6;
        let m = quadrature_variances(&CovarianceMatrix::from_matrix(s), Mode::Magnon);
        assert!((m.min_rotated - 0.4).abs() < 1e-15);
    }

    #[test]
    fn regime_classification() {
        assert_eq!(SteeringRegime::classify(0.3, 0.0), SteeringRegime::OneWayAtoB);
        assert_eq!(SteeringRegime::classify(0.0, 0.3), SteeringRegime::OneWayBtoA);
        assert_eq!(SteeringRegime::classify(0.3, 0.2), SteeringRegime::TwoWay);
        assert_eq!(SteeringRegime::classify(5e-7, 0.0), SteeringRegime::NoSteering);
        assert_eq!(SteeringRegime::classify(0.3, 1e-9), SteeringRegime::TwoWay);
        for r in [SteeringRegime::TwoWay, SteeringRegime::OneWayBtoA] {
            assert_eq!(SteeringRegime::from_name(r.name()), Some(r));
        }
    }
}
