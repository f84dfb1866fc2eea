//! Kernel function zoo, kernel matrix assembly, and Gram centering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{dot, sq_dist, Mat, SymMatrix};

/// A kernel family together with its parameters.
///
/// The config-string form is `family:key=val{,key=val}`, e.g.
/// `heavy_tailed_rbf:gamma=1,a=1,b=1` or `gaussian_rbf:sigma=3.889`.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelSpec {
    /// (x·z + 1)^d
    Polynomial { degree: u32 },
    /// exp(-γ ||x - z||²)
    Rbf { gamma: f64 },
    /// tanh(x·z + b)
    Neural { b: f64 },
    /// exp(-γ ||x^a - z^a||^b), powers taken componentwise
    HeavyTailedRbf { gamma: f64, a: f64, b: f64 },
    /// exp(-||x - z||² / (2σ²))
    GaussianRbf { sigma: f64 },
}

impl KernelSpec {
    /// The SVM default used throughout the experiments: heavy-tailed RBF with
    /// γ = 1, a = 1, b = 1.
    pub fn default_svm() -> Self {
        KernelSpec::HeavyTailedRbf {
            gamma: 1.0,
            a: 1.0,
            b: 1.0,
        }
    }

    /// The KPCA default: Gaussian RBF with 2σ² = 5.5².
    pub fn default_kpca() -> Self {
        KernelSpec::GaussianRbf {
            sigma: 5.5 / 2.0f64.sqrt(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            KernelSpec::Polynomial { degree } => {
                if degree < 1 {
                    return bad("polynomial kernel requires d >= 1".into());
                }
            }
            KernelSpec::Rbf { gamma } => {
                if !(gamma > 0.0) || !gamma.is_finite() {
                    return bad(format!("rbf kernel requires gamma > 0, got {gamma}"));
                }
            }
            KernelSpec::Neural { b } => {
                if !b.is_finite() {
                    return bad("neural kernel offset b must be finite".into());
                }
            }
            KernelSpec::HeavyTailedRbf { gamma, a, b } => {
                if !(gamma > 0.0) || !(a > 0.0) || !(b > 0.0) {
                    return bad(format!(
                        "heavy_tailed_rbf requires gamma, a, b > 0, got gamma={gamma}, a={a}, b={b}"
                    ));
                }
            }
            KernelSpec::GaussianRbf { sigma } => {
                if !(sigma > 0.0) || !sigma.is_finite() {
                    return bad(format!("gaussian_rbf requires sigma > 0, got {sigma}"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelSpec::Polynomial { degree } => write!(f, "polynomial:d={degree}"),
            KernelSpec::Rbf { gamma } => write!(f, "rbf:gamma={gamma}"),
            KernelSpec::Neural { b } => write!(f, "neural:b={b}"),
            KernelSpec::HeavyTailedRbf { gamma, a, b } => {
                write!(f, "heavy_tailed_rbf:gamma={gamma},a={a},b={b}")
            }
            KernelSpec::GaussianRbf { sigma } => write!(f, "gaussian_rbf:sigma={sigma}"),
        }
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParameter(msg);
        let (family, rest) = match s.split_once(':') {
            Some((f, r)) => (f.trim(), r.trim()),
            None => (s.trim(), ""),
        };
        let mut params: Vec<(String, String)> = Vec::new();
        if !rest.is_empty() {
            for piece in rest.split(',') {
                let (k, v) = piece
                    .split_once('=')
                    .ok_or_else(|| bad(format!("kernel parameter `{piece}` is not key=val")))?;
                params.push((k.trim().to_string(), v.trim().to_string()));
            }
        }
        let mut take = |key: &str| -> Result<f64> {
            let pos = params
                .iter()
                .position(|(k, _)| k == key)
                .ok_or_else(|| bad(format!("kernel `{family}` is missing parameter `{key}`")))?;
            let (_, v) = params.remove(pos);
            v.parse::<f64>()
                .map_err(|_| bad(format!("kernel parameter {key}={v} is not a number")))
        };

        let spec = match family {
            "polynomial" => {
                let d = take("d")?;
                if d.fract() != 0.0 || d < 1.0 {
                    return Err(bad(format!("polynomial degree d={d} must be a positive integer")));
                }
                KernelSpec::Polynomial { degree: d as u32 }
            }
            "rbf" => KernelSpec::Rbf { gamma: take("gamma")? },
            "neural" => KernelSpec::Neural { b: take("b")? },
            "heavy_tailed_rbf" => KernelSpec::HeavyTailedRbf {
                gamma: take("gamma")?,
                a: take("a")?,
                b: take("b")?,
            },
            "gaussian_rbf" => KernelSpec::GaussianRbf { sigma: take("sigma")? },
            other => return Err(bad(format!("unknown kernel family `{other}`"))),
        };
        if let Some((k, _)) = params.first() {
            return Err(bad(format!("kernel `{family}` does not take parameter `{k}`")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Evaluates k(x, z) for the given spec.
pub fn kernel_eval(spec: &KernelSpec, x: &[f64], z: &[f64]) -> Result<f64> {
    if x.len() != z.len() {
        return Err(Error::DimensionMismatch {
            context: "kernel_eval",
            expected: x.len(),
            found: z.len(),
        });
    }
    let v = match *spec {
        KernelSpec::Polynomial { degree } => (dot(x, z) + 1.0).powi(degree as i32),
        KernelSpec::Rbf { gamma } => (-gamma * sq_dist(x, z)).exp(),
        KernelSpec::Neural { b } => (dot(x, z) + b).tanh(),
        KernelSpec::HeavyTailedRbf { gamma, a, b } => {
            if a.fract() != 0.0 {
                if let Some(bad) = x.iter().chain(z).find(|v| **v < 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "heavy_tailed_rbf with fractional a={a} needs non-negative inputs, got {bad}"
                    )));
                }
            }
            let d_sq = if a == 1.0 {
                sq_dist(x, z)
            } else {
                let xa: Vec<f64> = x.iter().map(|v| v.powf(a)).collect();
                let za: Vec<f64> = z.iter().map(|v| v.powf(a)).collect();
                sq_dist(&xa, &za)
            };
            (-gamma * d_sq.sqrt().powf(b)).exp()
        }
        KernelSpec::GaussianRbf { sigma } => (-sq_dist(x, z) / (2.0 * sigma * sigma)).exp(),
    };
    Ok(v)
}

/// Assembles the kernel (Gram) matrix K_ij = k(x_i, x_j) over the rows of
/// `samples`.
pub fn kernel_matrix(spec: &KernelSpec, samples: &Mat) -> Result<SymMatrix> {
    let m = samples.rows();
    if m == 0 {
        return Err(Error::TooFewSamples {
            context: "kernel_matrix",
            needed: 1,
            got: 0,
        });
    }
    let mut out = SymMatrix::zeros(m);
    for i in 0..m {
        for j in 0..=i {
            out.set(i, j, kernel_eval(spec, samples.row(i), samples.row(j))?);
        }
    }
    Ok(out)
}

/// Double-centering: K̃ = K - 1_M K - K 1_M + 1_M K 1_M with (1_M)_ij = 1/M.
///
/// Row and column sums of the result vanish.
pub fn center_kernel(k: &SymMatrix) -> SymMatrix {
    let m = k.order();
    let means = row_means(k);
    let grand = means.iter().sum::<f64>() / m as f64;
    SymMatrix::from_fn(m, |i, j| k.get(i, j) - means[i] - means[j] + grand)
}

/// Per-row means of a symmetric matrix (equal to its column means).
pub fn row_means(k: &SymMatrix) -> Vec<f64> {
    let m = k.order();
    (0..m)
        .map(|i| (0..m).map(|j| k.get(i, j)).sum::<f64>() / m as f64)
        .collect()
}
