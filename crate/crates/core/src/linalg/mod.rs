//! Dense symmetric linear algebra used by every other module:
//! eigendecomposition, covariance, Gram assembly helpers, PSD projection.

mod eigen;
mod mat;
mod sym;

pub use eigen::{covariance, eig_sym, psd_project, EigenDecomposition};
pub use mat::{dot, sq_dist, Mat};
pub use sym::SymMatrix;
