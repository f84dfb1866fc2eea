//! Cyclic Jacobi eigensolver for dense symmetric matrices, plus the
//! covariance and PSD-projection helpers built on top of it.

use super::{Mat, SymMatrix};
use crate::error::{Error, Result};

const OFF_DIAG_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Full spectrum of a symmetric matrix.
///
/// Eigenvalues are sorted descending; `eigenvectors` holds the matching
/// orthonormal eigenvectors as columns. Each eigenvector is sign-fixed so its
/// largest-magnitude component is positive (ties broken by lowest index).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Mat,
}

impl EigenDecomposition {
    /// Reconstructs V diag(λ) Vᵀ.
    pub fn reconstruct(&self) -> SymMatrix {
        let n = self.eigenvalues.len();
        SymMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.eigenvalues[k] * self.eigenvectors[(i, k)] * self.eigenvectors[(j, k)])
                .sum()
        })
    }
}

/// Eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls below
/// `1e-12 * max(1, ||A||_F)`, with a hard cap of 100 sweeps.
pub fn eig_sym(m: &SymMatrix) -> Result<EigenDecomposition> {
    if !m.is_finite() {
        return Err(Error::NonFinite { context: "eig_sym" });
    }
    let n = m.order();
    let mut a = m.to_dense();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frob = m.frob_norm();
    let tol = OFF_DIAG_TOL * frob.max(1.0);

    for _sweep in 0..MAX_SWEEPS {
        let mut off_sq = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off_sq.sqrt() <= tol {
            break;
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                // tan of the rotation angle, smaller root for stability
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[k * n + p];
                        let akq = a[k * n + q];
                        let new_kp = akp - s * (akq + tau * akp);
                        let new_kq = akq + s * (akp - tau * akq);
                        a[k * n + p] = new_kp;
                        a[p * n + k] = new_kp;
                        a[k * n + q] = new_kq;
                        a[q * n + k] = new_kq;
                    }
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp - s * (vkq + tau * vkp);
                    v[k * n + q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    // Sort descending; ties keep original column order for determinism.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .partial_cmp(&a[i * n + i])
            .expect("eigenvalues are finite")
            .then(i.cmp(&j))
    });

    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let mut vectors = Mat::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        // sign convention: largest-magnitude component positive, ties to lowest index
        let mut best = 0usize;
        let mut best_abs = -1.0;
        for i in 0..n {
            let abs = v[i * n + k].abs();
            if abs > best_abs {
                best_abs = abs;
                best = i;
            }
        }
        let flip = if v[best * n + k] < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            vectors[(i, col)] = flip * v[i * n + k];
        }
    }

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors: vectors,
    })
}

/// Sample mean and population covariance (divisor M) of the rows of `data`.
pub fn covariance(data: &Mat) -> Result<(Vec<f64>, SymMatrix)> {
    let m = data.rows();
    if m < 2 {
        return Err(Error::TooFewSamples {
            context: "covariance",
            needed: 2,
            got: m,
        });
    }
    if !data.is_finite() {
        return Err(Error::NonFinite {
            context: "covariance",
        });
    }
    let n = data.cols();
    let mut mean = vec![0.0; n];
    for row in data.iter_rows() {
        for (acc, v) in mean.iter_mut().zip(row) {
            *acc += v;
        }
    }
    for v in &mut mean {
        *v /= m as f64;
    }

    let mut cov = SymMatrix::zeros(n);
    for row in data.iter_rows() {
        for i in 0..n {
            let di = row[i] - mean[i];
            for j in 0..=i {
                let dj = row[j] - mean[j];
                cov.set(i, j, cov.get(i, j) + di * dj);
            }
        }
    }
    let inv_m = 1.0 / m as f64;
    for i in 0..n {
        for j in 0..=i {
            cov.set(i, j, cov.get(i, j) * inv_m);
        }
    }
    Ok((mean, cov))
}

/// Nearest-PSD projection: eigendecompose, clamp negative eigenvalues to
/// zero, reconstruct.
pub fn psd_project(m: &SymMatrix) -> Result<SymMatrix> {
    let eig = eig_sym(m)?;
    let n = m.order();
    let clamped: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0)).collect();
    // skip zero eigenvalues when reconstructing
    let active: Vec<usize> = (0..n).filter(|&k| clamped[k] > 0.0).collect();
    Ok(SymMatrix::from_fn(n, |i, j| {
        active
            .iter()
            .map(|&k| clamped[k] * eig.eigenvectors[(i, k)] * eig.eigenvectors[(j, k)])
            .sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha20Rng;

    fn max_abs_diff(a: &SymMatrix, b: &SymMatrix) -> f64 {
        let n = a.order();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..=i {
                m = m.max((a.get(i, j) - b.get(i, j)).abs());
            }
        }
        m
    }

    #[test]
    fn identity_spectrum() {
        let eig = eig_sym(&SymMatrix::identity(3)).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0, 1.0, 1.0]);
        // eigenvectors form a permutation of the standard basis
        for col in 0..3 {
            let v: Vec<f64> = (0..3).map(|i| eig.eigenvectors[(i, col)]).collect();
            let ones = v.iter().filter(|x| (x.abs() - 1.0).abs() < 1e-12).count();
            let zeros = v.iter().filter(|x| x.abs() < 1e-12).count();
            assert_eq!((ones, zeros), (1, 2));
        }
    }

    #[test]
    fn two_by_two_analytic() {
        let m = SymMatrix::from_fn(2, |i, j| if i == j { 2.0 } else { 1.0 });
        let eig = eig_sym(&m).unwrap();
        assert!((eig.eigenvalues[0] - 3.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        let v0: Vec<f64> = (0..2).map(|i| eig.eigenvectors[(i, 0)]).collect();
        let v1: Vec<f64> = (0..2).map(|i| eig.eigenvectors[(i, 1)]).collect();
        assert!((v0[0] - inv_sqrt2).abs() < 1e-12 && (v0[1] - inv_sqrt2).abs() < 1e-12);
        assert!((v1[0].abs() - inv_sqrt2).abs() < 1e-12 && (v1[1].abs() - inv_sqrt2).abs() < 1e-12);
        assert!((v1[0] * v1[1]).signum() < 0.0);
    }

    #[test]
    fn random_reconstruction() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let m = SymMatrix::from_fn(8, |_, _| rng.random_range(-1.0..1.0));
        let eig = eig_sym(&m).unwrap();
        let rec = eig.reconstruct();
        assert!(max_abs_diff(&m, &rec) <= 1e-8 * m.max_abs().max(1.0));
        // eigenvalue sum equals trace
        let sum: f64 = eig.eigenvalues.iter().sum();
        assert!((sum - m.trace()).abs() <= 1e-8 * m.trace().abs().max(1.0));
    }

    #[test]
    fn rejects_non_finite() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, f64::NAN);
        assert!(matches!(eig_sym(&m), Err(Error::NonFinite { .. })));
    }

    #[test]
    fn covariance_two_point_symmetry() {
        let data = Mat::from_rows(&[&[1.0, 1.0], &[-1.0, -1.0]]);
        let (mean, cov) = covariance(&data).unwrap();
        assert_eq!(mean, vec![0.0, 0.0]);
        for i in 0..2 {
            for j in 0..2 {
                assert!((cov.get(i, j) - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn covariance_zero_variance() {
        let data = Mat::from_rows(&[&[3.0, 3.0], &[3.0, 3.0]]);
        let (_, cov) = covariance(&data).unwrap();
        assert_eq!(cov.max_abs(), 0.0);
    }

    #[test]
    fn covariance_divisor_m() {
        let data = Mat::from_rows(&[&[0.0, 0.0], &[2.0, 0.0], &[0.0, 2.0], &[2.0, 2.0]]);
        let (mean, cov) = covariance(&data).unwrap();
        assert_eq!(mean, vec![1.0, 1.0]);
        assert!((cov.get(0, 0) - 1.0).abs() < 1e-15);
        assert!((cov.get(1, 1) - 1.0).abs() < 1e-15);
        assert!(cov.get(0, 1).abs() < 1e-15);
    }

    #[test]
    fn covariance_rejects_single_sample() {
        let data = Mat::from_rows(&[&[1.0, 2.0]]);
        assert!(matches!(
            covariance(&data),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn psd_project_fixed_point() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let b = Mat::from_fn(4, 4, |_, _| rng.random_range(-1.0..1.0));
        // b bᵀ is PSD
        let psd = SymMatrix::from_fn(4, |i, j| super::super::dot(b.row(i), b.row(j)));
        let projected = psd_project(&psd).unwrap();
        assert!(max_abs_diff(&psd, &projected) <= 1e-10);
        // idempotent
        let twice = psd_project(&projected).unwrap();
        assert!(max_abs_diff(&projected, &twice) <= 1e-10);
    }

    #[test]
    fn psd_project_clamps_diagonal() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 0, 1.0);
        m.set(1, 1, -2.0);
        let p = psd_project(&m).unwrap();
        assert!((p.get(0, 0) - 1.0).abs() < 1e-12);
        assert!(p.get(1, 1).abs() < 1e-12);
        assert!(p.get(0, 1).abs() < 1e-12);
    }

    #[test]
    fn psd_project_off_diagonal() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, 1.0);
        let p = psd_project(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((p.get(i, j) - 0.5).abs() < 1e-12);
            }
        }
    }
}
