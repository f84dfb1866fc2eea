//! Linear dimensionality reduction: fit on training rows, project train and
//! test with the training mean.

use crate::error::{Error, Result};
use crate::linalg::{covariance, dot, eig_sym, Mat};

/// A fitted PCA model: training mean, leading eigenvectors, full spectrum.
#[derive(Debug, Clone)]
pub struct PcaModel {
    mean: Vec<f64>,
    /// First `k_dim` eigenvectors as columns.
    basis: Mat,
    /// All eigenvalues, descending.
    spectrum: Vec<f64>,
    k_dim: usize,
}

impl PcaModel {
    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    pub fn k_dim(&self) -> usize {
        self.k_dim
    }
}

/// Fits PCA on the rows of `train`, retaining the top `k_dim` eigenvectors
/// of the covariance matrix. The full spectrum is kept for reporting.
pub fn pca_fit(train: &Mat, k_dim: usize) -> Result<PcaModel> {
    let n = train.cols();
    if k_dim < 1 || k_dim > n {
        return Err(Error::InvalidParameter(format!(
            "pca k_dim={k_dim} outside [1, {n}]"
        )));
    }
    let (mean, cov) = covariance(train)?;
    let eig = eig_sym(&cov)?;
    let basis = Mat::from_fn(n, k_dim, |i, j| eig.eigenvectors[(i, j)]);
    Ok(PcaModel {
        mean,
        basis,
        spectrum: eig.eigenvalues,
        k_dim,
    })
}

/// Projects rows onto the fitted basis: y_ij = (x_i - u) · v_j.
pub fn pca_transform(model: &PcaModel, rows: &Mat) -> Result<Mat> {
    let n = model.mean.len();
    if rows.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "pca_transform",
            expected: n,
            found: rows.cols(),
        });
    }
    let mut out = Mat::zeros(rows.rows(), model.k_dim);
    let mut centered = vec![0.0; n];
    for i in 0..rows.rows() {
        for (c, (x, u)) in centered.iter_mut().zip(rows.row(i).iter().zip(&model.mean)) {
            *c = x - u;
        }
        for j in 0..model.k_dim {
            let col: Vec<f64> = (0..n).map(|r| model.basis[(r, j)]).collect();
            out[(i, j)] = dot(&centered, &col);
        }
    }
    Ok(out)
}

/// Smallest K whose leading eigenvalues carry strictly more than `threshold`
/// of the total spectrum mass. A zero spectrum yields K = 1.
pub fn pca_choose_k(spectrum: &[f64], threshold: f64) -> Result<usize> {
    if spectrum.is_empty() {
        return Err(Error::InvalidParameter("empty spectrum".into()));
    }
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "threshold must lie in (0, 1], got {threshold}"
        )));
    }
    if let Some(bad) = spectrum.iter().find(|l| **l < -1e-10) {
        return Err(Error::InvalidParameter(format!(
            "spectrum entries must be non-negative, got {bad}"
        )));
    }
    let total: f64 = spectrum.iter().map(|l| l.max(0.0)).sum();
    if total == 0.0 {
        return Ok(1);
    }
    let mut acc = 0.0;
    for (k, l) in spectrum.iter().enumerate() {
        acc += l.max(0.0);
        if acc / total > threshold {
            return Ok(k + 1);
        }
    }
    Ok(spectrum.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sq_dist;
    use rand::prelude::*;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn two_point_line() {
        let train = Mat::from_rows(&[&[1.0, 1.0], &[-1.0, -1.0]]);
        let model = pca_fit(&train, 1).unwrap();
        assert!((model.spectrum()[0] - 2.0).abs() < 1e-12);
        assert!(model.spectrum()[1].abs() < 1e-12);
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        let v: Vec<f64> = model.basis().col(0);
        assert!((v[0].abs() - inv_sqrt2).abs() < 1e-12);
        assert!((v[0] - v[1]).abs() < 1e-12, "basis must be ±(1,1)/√2");

        let y = pca_transform(&model, &Mat::from_rows(&[&[1.0, 1.0]])).unwrap();
        assert!((y[(0, 0)].abs() - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn isotropic_data_has_flat_spectrum() {
        let mut rng = ChaCha20Rng::seed_from_u64(31);
        let train = Mat::from_fn(4000, 2, |_, _| rng.random_range(-1.0..1.0));
        let model = pca_fit(&train, 2).unwrap();
        let s = model.spectrum();
        let ratio = s[0] / s[1];
        assert!((0.85..1.18).contains(&ratio), "spectrum ratio {ratio}");
    }

    #[test]
    fn full_basis_preserves_distances() {
        let mut rng = ChaCha20Rng::seed_from_u64(32);
        let train = Mat::from_fn(20, 5, |_, _| rng.random_range(-2.0..2.0));
        let model = pca_fit(&train, 5).unwrap();
        let y = pca_transform(&model, &train).unwrap();
        for i in 0..20 {
            for j in (i + 1)..20 {
                let orig = sq_dist(train.row(i), train.row(j));
                let red = sq_dist(y.row(i), y.row(j));
                assert!((orig - red).abs() <= 1e-8 * orig.max(1.0));
            }
        }
    }

    #[test]
    fn transform_centers_training_mean() {
        let mut rng = ChaCha20Rng::seed_from_u64(33);
        let train = Mat::from_fn(50, 4, |_, _| rng.random_range(0.0..10.0));
        let model = pca_fit(&train, 3).unwrap();
        let y = pca_transform(&model, &train).unwrap();
        for j in 0..3 {
            let mean: f64 = (0..50).map(|i| y[(i, j)]).sum::<f64>() / 50.0;
            assert!(mean.abs() < 1e-10, "component {j} mean {mean}");
        }
        // x = u maps to the origin
        let at_mean = pca_transform(&model, &Mat::from_rows(&[model.mean()])).unwrap();
        for j in 0..3 {
            assert!(at_mean[(0, j)].abs() < 1e-12);
        }
    }

    #[test]
    fn variance_capture_matches_spectrum() {
        let mut rng = ChaCha20Rng::seed_from_u64(34);
        let train = Mat::from_fn(60, 6, |_, j| rng.random_range(-1.0..1.0) * (j + 1) as f64);
        let k = 4;
        let model = pca_fit(&train, k).unwrap();
        let y = pca_transform(&model, &train).unwrap();
        let mut var_sum = 0.0;
        for j in 0..k {
            let mean: f64 = (0..60).map(|i| y[(i, j)]).sum::<f64>() / 60.0;
            var_sum += (0..60).map(|i| (y[(i, j)] - mean).powi(2)).sum::<f64>() / 60.0;
        }
        let lead: f64 = model.spectrum()[..k].iter().sum();
        assert!((var_sum - lead).abs() <= 1e-8 * lead.max(1.0));
    }

    #[test]
    fn choose_k_examples() {
        assert_eq!(pca_choose_k(&[2.0, 0.0], 0.95).unwrap(), 1);
        assert_eq!(pca_choose_k(&[1.0, 1.0, 1.0, 1.0], 0.70).unwrap(), 3);
        let mut spectrum = vec![0.84];
        spectrum.extend(std::iter::repeat_n(0.16 / 12.0, 12));
        assert_eq!(pca_choose_k(&spectrum, 0.80).unwrap(), 1);
        // strict inequality: exactly at threshold does not qualify
        assert_eq!(pca_choose_k(&[1.0, 1.0], 0.5).unwrap(), 2);
        assert_eq!(pca_choose_k(&[0.0, 0.0], 0.9).unwrap(), 1);
    }

    #[test]
    fn zero_variance_input_is_well_defined() {
        let train = Mat::from_rows(&[&[2.0, 2.0], &[2.0, 2.0], &[2.0, 2.0]]);
        let model = pca_fit(&train, 2).unwrap();
        let y = pca_transform(&model, &train).unwrap();
        assert!(y.data().iter().all(|v| v.abs() < 1e-12));
    }
}
