//! Kernel PCA: centered kernel matrix, eigenvector normalization in feature
//! space, and out-of-sample projection with stored centering statistics.

use crate::error::{Error, Result};
use crate::kernels::{center_kernel, kernel_eval, kernel_matrix, row_means, KernelSpec};
use crate::linalg::{eig_sym, Mat};

/// Components with eigenvalue below `1e-10 * λ_1` are dropped.
const DROP_RATIO: f64 = 1e-10;

/// A fitted KPCA model.
///
/// Holds the training rows (projections need kernel evaluations against
/// them), the normalized coefficient vectors α_j, the retained spectrum, and
/// the centering statistics of the training kernel matrix.
#[derive(Debug, Clone)]
pub struct KpcaModel {
    kernel: KernelSpec,
    train_rows: Mat,
    /// Coefficient vectors as columns (T × k_dim), scaled so that
    /// λ_j (α_j · α_j) = 1.
    alphas: Mat,
    /// Retained eigenvalues of the centered kernel matrix, descending.
    spectrum: Vec<f64>,
    /// Full spectrum of the centered kernel matrix, for reporting.
    full_spectrum: Vec<f64>,
    /// Column means of the training kernel matrix.
    column_means: Vec<f64>,
    /// Grand mean of the training kernel matrix.
    grand_mean: f64,
    k_dim: usize,
}

impl KpcaModel {
    pub fn k_dim(&self) -> usize {
        self.k_dim
    }

    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    pub fn full_spectrum(&self) -> &[f64] {
        &self.full_spectrum
    }

    pub fn kernel(&self) -> &KernelSpec {
        &self.kernel
    }

    pub fn alphas(&self) -> &Mat {
        &self.alphas
    }
}

/// Fits KPCA on the rows of `train`.
///
/// Asking for more components than the centered kernel matrix supports
/// truncates to the retained count with a warning.
pub fn kpca_fit(train: &Mat, kernel: &KernelSpec, k_dim: usize) -> Result<KpcaModel> {
    kernel.validate()?;
    let t = train.rows();
    if t < 2 {
        return Err(Error::TooFewSamples {
            context: "kpca_fit",
            needed: 2,
            got: t,
        });
    }
    if k_dim < 1 || k_dim > t {
        return Err(Error::InvalidParameter(format!(
            "kpca k_dim={k_dim} outside [1, {t}]"
        )));
    }
    let k = kernel_matrix(kernel, train)?;
    let column_means = row_means(&k);
    let grand_mean = column_means.iter().sum::<f64>() / t as f64;
    let centered = center_kernel(&k);
    let eig = eig_sym(&centered)?;

    let lead = eig.eigenvalues[0];
    if lead <= 0.0 {
        return Err(Error::DegenerateSpectrum);
    }
    let cutoff = DROP_RATIO * lead;
    let retained = eig.eigenvalues.iter().take_while(|l| **l > cutoff).count();
    let k_dim = if k_dim > retained {
        log::warn!(
            "kpca: requested {k_dim} components but only {retained} carry variance; truncating"
        );
        retained
    } else {
        k_dim
    };

    // normalization 1 = λ_j (α_j · α_j): unit eigenvectors scale by 1/√λ_j
    let alphas = Mat::from_fn(t, k_dim, |i, j| {
        eig.eigenvectors[(i, j)] / eig.eigenvalues[j].sqrt()
    });
    Ok(KpcaModel {
        kernel: kernel.clone(),
        train_rows: train.clone(),
        alphas,
        spectrum: eig.eigenvalues[..k_dim].to_vec(),
        full_spectrum: eig.eigenvalues.clone(),
        column_means,
        grand_mean,
        k_dim,
    })
}

/// Projects rows: y_j(x) = Σ_n α_jn k̃(x_n, x), where k̃ double-centers the
/// kernel column against the stored training statistics.
pub fn kpca_transform(model: &KpcaModel, rows: &Mat) -> Result<Mat> {
    if rows.cols() != model.train_rows.cols() {
        return Err(Error::DimensionMismatch {
            context: "kpca_transform",
            expected: model.train_rows.cols(),
            found: rows.cols(),
        });
    }
    let t = model.train_rows.rows();
    let mut out = Mat::zeros(rows.rows(), model.k_dim);
    let mut column = vec![0.0; t];
    for r in 0..rows.rows() {
        for (n, slot) in column.iter_mut().enumerate() {
            *slot = kernel_eval(&model.kernel, model.train_rows.row(n), rows.row(r))?;
        }
        let col_mean = column.iter().sum::<f64>() / t as f64;
        for j in 0..model.k_dim {
            let mut acc = 0.0;
            for n in 0..t {
                let centered = column[n] - model.column_means[n] - col_mean + model.grand_mean;
                acc += model.alphas[(n, j)] * centered;
            }
            out[(r, j)] = acc;
        }
    }
    Ok(out)
}
