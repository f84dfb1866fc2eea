//! Spectral-occupancy slot classification.
//!
//! Dimensionality reduction (PCA, kernel PCA, Landmark Maximum Variance
//! Unfolding) as pre-processing for a kernel SVM that classifies busy/idle
//! spectrum slots, together with a synthetic Wi-Fi-like slot generator, a
//! repeated-experiment harness, and a CLI front end.

pub mod dataset;
mod error;
pub mod kernels;
pub mod kpca;
pub mod linalg;
pub mod pca;
pub mod svm;

pub use error::{Error, Result};
