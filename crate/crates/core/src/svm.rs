//! Kernel support vector machine: dual training via SMO-style pairwise
//! coordinate ascent, decision function, classification, and a text model
//! format for reproducible reload.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernels::{kernel_eval, KernelSpec};
use crate::linalg::Mat;

/// Stopping tolerance on the maximal KKT violation.
pub const KKT_TOL: f64 = 1e-3;
/// Hard cap on pairwise updates before giving up.
const MAX_PAIR_UPDATES: usize = 10_000_000;
/// Full kernel matrix is precomputed up to this many training rows; above it
/// rows are computed on demand and cached.
const FULL_CACHE_LIMIT: usize = 4000;

/// Labeled training features. Labels are -1.0 or +1.0 with at least one of
/// each.
#[derive(Debug, Clone)]
pub struct TrainingSet {
    features: Mat,
    labels: Vec<f64>,
}

impl TrainingSet {
    pub fn new(features: Mat, labels: Vec<f64>) -> Result<Self> {
        if features.rows() != labels.len() {
            return Err(Error::DimensionMismatch {
                context: "TrainingSet",
                expected: features.rows(),
                found: labels.len(),
            });
        }
        if !features.is_finite() {
            return Err(Error::NonFinite {
                context: "TrainingSet",
            });
        }
        if labels.iter().any(|l| *l != 1.0 && *l != -1.0) {
            return Err(Error::InvalidParameter(
                "labels must be -1 or +1".into(),
            ));
        }
        let pos = labels.iter().any(|l| *l > 0.0);
        let neg = labels.iter().any(|l| *l < 0.0);
        if !pos || !neg {
            return Err(Error::SingleClass);
        }
        Ok(TrainingSet { features, labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn features(&self) -> &Mat {
        &self.features
    }

    pub fn labels(&self) -> &[f64] {
        &self.labels
    }
}

/// A trained soft-margin kernel SVM. Only vectors with α > 0 are stored.
#[derive(Debug, Clone)]
pub struct SvmModel {
    pub kernel: KernelSpec,
    pub support_vectors: Mat,
    pub alphas: Vec<f64>,
    pub sv_labels: Vec<f64>,
    pub bias: f64,
    pub c_param: f64,
}

enum KernelCache {
    Full(Vec<f64>),
    Rows(Vec<Option<Box<[f64]>>>),
}

struct Solver<'a> {
    data: &'a TrainingSet,
    kernel: &'a KernelSpec,
    c: f64,
    alphas: Vec<f64>,
    // gradient of 1/2 a'Qa - sum(a): grad_i = sum_j Q_ij a_j - 1
    grad: Vec<f64>,
    cache: KernelCache,
    #[cfg(debug_assertions)]
    last_objective: f64,
}

impl<'a> Solver<'a> {
    fn new(data: &'a TrainingSet, kernel: &'a KernelSpec, c: f64) -> Result<Self> {
        let t = data.len();
        let cache = if t <= FULL_CACHE_LIMIT {
            let mut full = vec![0.0; t * t];
            for i in 0..t {
                for j in 0..=i {
                    let v = kernel_eval(kernel, data.features.row(i), data.features.row(j))?;
                    full[i * t + j] = v;
                    full[j * t + i] = v;
                }
            }
            KernelCache::Full(full)
        } else {
            KernelCache::Rows(vec![None; t])
        };
        Ok(Solver {
            data,
            kernel,
            c,
            alphas: vec![0.0; t],
            grad: vec![-1.0; t],
            cache,
            #[cfg(debug_assertions)]
            last_objective: 0.0,
        })
    }

    fn kernel_row(&mut self, i: usize) -> Result<&[f64]> {
        let t = self.data.len();
        match &mut self.cache {
            KernelCache::Full(full) => Ok(&full[i * t..(i + 1) * t]),
            KernelCache::Rows(rows) => {
                if rows[i].is_none() {
                    let mut row = vec![0.0; t];
                    for (j, slot) in row.iter_mut().enumerate() {
                        *slot = kernel_eval(
                            self.kernel,
                            self.data.features.row(i),
                            self.data.features.row(j),
                        )?;
                    }
                    rows[i] = Some(row.into_boxed_slice());
                }
                Ok(rows[i].as_deref().expect("just filled"))
            }
        }
    }

    /// Maximal violating pair and the current violation m(α) - M(α).
    fn select_pair(&self) -> (usize, usize, f64) {
        let labels = self.data.labels();
        let mut up_idx = usize::MAX;
        let mut up_val = f64::NEG_INFINITY;
        let mut low_idx = usize::MAX;
        let mut low_val = f64::INFINITY;
        for i in 0..self.alphas.len() {
            let a = self.alphas[i];
            let l = labels[i];
            let v = -l * self.grad[i];
            let in_up = (l > 0.0 && a < self.c) || (l < 0.0 && a > 0.0);
            let in_low = (l < 0.0 && a < self.c) || (l > 0.0 && a > 0.0);
            if in_up && v > up_val {
                up_val = v;
                up_idx = i;
            }
            if in_low && v < low_val {
                low_val = v;
                low_idx = i;
            }
        }
        (up_idx, low_idx, up_val - low_val)
    }

    fn dual_objective(&self) -> f64 {
        // W = sum(a) - 1/2 a'Qa, with grad = Qa - 1
        let dot: f64 = self
            .alphas
            .iter()
            .zip(&self.grad)
            .map(|(a, g)| a * (g + 1.0))
            .sum();
        self.alphas.iter().sum::<f64>() - 0.5 * dot
    }

    fn optimize_pair(&mut self, i: usize, j: usize) -> Result<()> {
        let c = self.c;
        let li = self.data.labels()[i];
        let lj = self.data.labels()[j];
        let kii = self.kernel_row(i)?[i];
        let kjj = self.kernel_row(j)?[j];
        let kij = self.kernel_row(i)?[j];

        let ai_old = self.alphas[i];
        let aj_old = self.alphas[j];
        let mut ai = ai_old;
        let mut aj = aj_old;

        // Exact two-variable subproblem; bound hits assign both variables
        // from the conserved quantity so the equality constraint never
        // accumulates clipping error.
        if li != lj {
            let quad = (kii + kjj - 2.0 * kij).max(1e-12);
            let delta = (-self.grad[i] - self.grad[j]) / quad;
            let diff = ai - aj;
            ai += delta;
            aj += delta;
            if diff > 0.0 {
                if aj < 0.0 {
                    aj = 0.0;
                    ai = diff;
                }
            } else if ai < 0.0 {
                ai = 0.0;
                aj = -diff;
            }
            if diff > 0.0 {
                if ai > c {
                    ai = c;
                    aj = c - diff;
                }
            } else if aj > c {
                aj = c;
                ai = c + diff;
            }
        } else {
            let quad = (kii + kjj - 2.0 * kij).max(1e-12);
            let delta = (self.grad[i] - self.grad[j]) / quad;
            let sum = ai + aj;
            ai -= delta;
            aj += delta;
            if sum > c {
                if ai > c {
                    ai = c;
                    aj = sum - c;
                }
            } else if aj < 0.0 {
                aj = 0.0;
                ai = sum;
            }
            if sum > c {
                if aj > c {
                    aj = c;
                    ai = sum - c;
                }
            } else if ai < 0.0 {
                ai = 0.0;
                aj = sum;
            }
        }

        let di = ai - ai_old;
        let dj = aj - aj_old;
        if di == 0.0 && dj == 0.0 {
            return Ok(());
        }
        self.alphas[i] = ai;
        self.alphas[j] = aj;

        let t = self.data.len();
        // grad_k += Q_ki di + Q_kj dj, Q_kl = y_k y_l K_kl
        let row_i: Vec<f64> = self.kernel_row(i)?.to_vec();
        let row_j: Vec<f64> = self.kernel_row(j)?.to_vec();
        let labels = self.data.labels();
        for k in 0..t {
            self.grad[k] += labels[k] * (li * row_i[k] * di + lj * row_j[k] * dj);
        }

        #[cfg(debug_assertions)]
        {
            let obj = self.dual_objective();
            debug_assert!(
                obj >= self.last_objective - 1e-7 * self.last_objective.abs().max(1.0),
                "dual objective decreased: {} -> {obj}",
                self.last_objective
            );
            self.last_objective = obj;
        }
        Ok(())
    }

    fn run(&mut self) -> Result<f64> {
        let mut violation = f64::INFINITY;
        for _ in 0..MAX_PAIR_UPDATES {
            let (i, j, v) = self.select_pair();
            violation = v;
            if i == usize::MAX || j == usize::MAX || v < KKT_TOL {
                return Ok(v.max(0.0));
            }
            self.optimize_pair(i, j)?;
        }
        Err(Error::NoConvergence {
            what: "svm dual solver",
            residual: violation,
        })
    }

    /// Bias as the mean over free support vectors of l_i - f̂(x_i); falls back
    /// to the midpoint of the violation interval when no vector is free.
    fn bias(&self) -> f64 {
        let labels = self.data.labels();
        let mut sum = 0.0;
        let mut count = 0usize;
        for i in 0..self.alphas.len() {
            let a = self.alphas[i];
            if a > 0.0 && a < self.c {
                // l_i - f̂_i = -l_i * grad_i
                sum += -labels[i] * self.grad[i];
                count += 1;
            }
        }
        if count > 0 {
            return sum / count as f64;
        }
        let mut up_val = f64::NEG_INFINITY;
        let mut low_val = f64::INFINITY;
        for i in 0..self.alphas.len() {
            let a = self.alphas[i];
            let l = labels[i];
            let v = -l * self.grad[i];
            if (l > 0.0 && a < self.c) || (l < 0.0 && a > 0.0) {
                up_val = up_val.max(v);
            }
            if (l < 0.0 && a < self.c) || (l > 0.0 && a > 0.0) {
                low_val = low_val.min(v);
            }
        }
        0.5 * (up_val + low_val)
    }
}

/// Trains a soft-margin SVM on `data` with box constraint `c_param`.
pub fn train(data: &TrainingSet, kernel: &KernelSpec, c_param: f64) -> Result<SvmModel> {
    kernel.validate()?;
    if !(c_param > 0.0) || !c_param.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "svm C must be positive, got {c_param}"
        )));
    }
    let mut solver = Solver::new(data, kernel, c_param)?;
    solver.run()?;
    let bias = solver.bias();

    let mut sv_rows = Vec::new();
    let mut alphas = Vec::new();
    let mut sv_labels = Vec::new();
    for i in 0..data.len() {
        if solver.alphas[i] > 0.0 {
            sv_rows.push(i);
            alphas.push(solver.alphas[i]);
            sv_labels.push(data.labels()[i]);
        }
    }
    Ok(SvmModel {
        kernel: kernel.clone(),
        support_vectors: data.features().select_rows(&sv_rows),
        alphas,
        sv_labels,
        bias,
        c_param,
    })
}

/// Decision value f(x) = Σ α_i l_i k(x_i, x) + b.
pub fn decision(model: &SvmModel, x: &[f64]) -> Result<f64> {
    if x.len() != model.support_vectors.cols() {
        return Err(Error::DimensionMismatch {
            context: "svm decision",
            expected: model.support_vectors.cols(),
            found: x.len(),
        });
    }
    let mut f = model.bias;
    for i in 0..model.alphas.len() {
        f += model.alphas[i]
            * model.sv_labels[i]
            * kernel_eval(&model.kernel, model.support_vectors.row(i), x)?;
    }
    Ok(f)
}

/// Sign of the decision value; an exact zero maps to +1.
pub fn classify(model: &SvmModel, x: &[f64]) -> Result<f64> {
    Ok(if decision(model, x)? >= 0.0 { 1.0 } else { -1.0 })
}

const MODEL_MAGIC: &str = "specsense-svm v1";

/// Serializes a model to the versioned text format.
pub fn model_to_string(model: &SvmModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MODEL_MAGIC}");
    let _ = writeln!(out, "kernel: {}", model.kernel);
    let _ = writeln!(out, "c: {}", model.c_param);
    let _ = writeln!(out, "bias: {}", model.bias);
    let _ = writeln!(out, "dim: {}", model.support_vectors.cols());
    let _ = writeln!(out, "support_vectors: {}", model.alphas.len());
    for i in 0..model.alphas.len() {
        let _ = write!(out, "{} {}", model.alphas[i], model.sv_labels[i]);
        for v in model.support_vectors.row(i) {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// Parses a model from the text format produced by [`model_to_string`].
pub fn model_from_str(text: &str) -> Result<SvmModel> {
    let mut lines = text.lines().enumerate();
    let parse_err = |line: usize, message: String| Error::Parse { line: line + 1, message };

    let (ln, magic) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty model file".into()))?;
    if magic.trim() != MODEL_MAGIC {
        return Err(parse_err(ln, format!("expected header `{MODEL_MAGIC}`")));
    }

    let mut field = |name: &str| -> Result<String> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(usize::MAX - 1, format!("missing field `{name}`")))?;
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| parse_err(ln, format!("expected `{name}: ...`")))?;
        if key.trim() != name {
            return Err(parse_err(ln, format!("expected field `{name}`, found `{key}`")));
        }
        Ok(value.trim().to_string())
    };

    let kernel = KernelSpec::from_str(&field("kernel")?)?;
    let c_param: f64 = field("c")?
        .parse()
        .map_err(|_| Error::InvalidParameter("model c is not a number".into()))?;
    let bias: f64 = field("bias")?
        .parse()
        .map_err(|_| Error::InvalidParameter("model bias is not a number".into()))?;
    let dim: usize = field("dim")?
        .parse()
        .map_err(|_| Error::InvalidParameter("model dim is not an integer".into()))?;
    let nsv: usize = field("support_vectors")?
        .parse()
        .map_err(|_| Error::InvalidParameter("model sv count is not an integer".into()))?;

    let mut alphas = Vec::with_capacity(nsv);
    let mut sv_labels = Vec::with_capacity(nsv);
    let mut sv = Mat::zeros(nsv, dim);
    for r in 0..nsv {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(6 + r, "missing support vector line".into()))?;
        let mut parts = line.split_whitespace();
        let alpha: f64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad alpha".into()))?;
        let label: f64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad label".into()))?;
        if label != 1.0 && label != -1.0 {
            return Err(parse_err(ln, format!("label must be -1 or 1, got {label}")));
        }
        let feats: Vec<f64> = parts
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(ln, "bad feature value".into()))?;
        if feats.len() != dim {
            return Err(parse_err(
                ln,
                format!("expected {dim} features, found {}", feats.len()),
            ));
        }
        alphas.push(alpha);
        sv_labels.push(label);
        sv.row_mut(r).copy_from_slice(&feats);
    }
    Ok(SvmModel {
        kernel,
        support_vectors: sv,
        alphas,
        sv_labels,
        bias,
        c_param,
    })
}

pub fn save_model<P: AsRef<std::path::Path>>(model: &SvmModel, path: P) -> Result<()> {
    std::fs::write(path, model_to_string(model))?;
    Ok(())
}

pub fn load_model<P: AsRef<std::path::Path>>(path: P) -> Result<SvmModel> {
    model_from_str(&std::fs::read_to_string(path)?)
}

/// Maximal KKT violation of a trained model over its own training set, for
/// verification: max(0, ...) over the usual three cases.
pub fn kkt_violation(model: &SvmModel, data: &TrainingSet) -> Result<f64> {
    let mut worst = 0.0f64;
    // recover alpha per training row by matching stored support vectors
    for i in 0..data.len() {
        let f = decision(model, data.features().row(i))?;
        let l = data.labels()[i];
        let margin = l * f;
        let alpha = alpha_for_row(model, data.features().row(i));
        if alpha <= 0.0 {
            worst = worst.max(1.0 - margin);
        } else if alpha >= model.c_param {
            worst = worst.max(margin - 1.0);
        } else {
            worst = worst.max((margin - 1.0).abs());
        }
    }
    Ok(worst)
}

fn alpha_for_row(model: &SvmModel, row: &[f64]) -> f64 {
    for i in 0..model.alphas.len() {
        if model.support_vectors.row(i) == row {
            return model.alphas[i];
        }
    }
    0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha20Rng;

    fn two_point_model() -> SvmModel {
        let data = TrainingSet::new(
            Mat::from_rows(&[&[-1.0], &[1.0]]),
            vec![-1.0, 1.0],
        )
        .unwrap();
        train(&data, &KernelSpec::Polynomial { degree: 1 }, 1e6).unwrap()
    }

    #[test]
    fn two_point_maximal_margin() {
        let model = two_point_model();
        assert_eq!(model.alphas.len(), 2, "both points are support vectors");
        let f_neg = decision(&model, &[-1.0]).unwrap();
        let f_pos = decision(&model, &[1.0]).unwrap();
        assert!((f_neg + 1.0).abs() <= KKT_TOL, "f(-1) = {f_neg}");
        assert!((f_pos - 1.0).abs() <= KKT_TOL, "f(+1) = {f_pos}");
        let f_zero = decision(&model, &[0.0]).unwrap();
        assert!(f_zero.abs() <= KKT_TOL, "f(0) = {f_zero}");
    }

    #[test]
    fn separable_blobs_zero_training_error() {
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for _ in 0..30 {
            rows.push(vec![
                rng.random_range(-0.5..0.5) - 3.0,
                rng.random_range(-0.5..0.5),
            ]);
            labels.push(-1.0);
            rows.push(vec![
                rng.random_range(-0.5..0.5) + 3.0,
                rng.random_range(-0.5..0.5),
            ]);
            labels.push(1.0);
        }
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let data = TrainingSet::new(Mat::from_rows(&refs), labels.clone()).unwrap();
        let model = train(&data, &KernelSpec::Polynomial { degree: 1 }, 1e6).unwrap();
        for (row, label) in rows.iter().zip(&labels) {
            assert_eq!(classify(&model, row).unwrap(), *label);
        }
    }

    #[test]
    fn xor_with_gaussian_kernel() {
        let data = TrainingSet::new(
            Mat::from_rows(&[&[0.0, 0.0], &[1.0, 1.0], &[0.0, 1.0], &[1.0, 0.0]]),
            vec![-1.0, -1.0, 1.0, 1.0],
        )
        .unwrap();
        let model = train(&data, &KernelSpec::GaussianRbf { sigma: 1.0 }, 10.0).unwrap();
        for (x, want) in [
            ([0.0, 0.0], -1.0),
            ([1.0, 1.0], -1.0),
            ([0.0, 1.0], 1.0),
            ([1.0, 0.0], 1.0),
        ] {
            assert_eq!(classify(&model, &x).unwrap(), want);
        }
    }

    #[test]
    fn dual_constraint_holds() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let rows: Vec<Vec<f64>> = (0..40)
            .map(|_| (0..3).map(|_| rng.random_range(-2.0..2.0)).collect())
            .collect();
        let labels: Vec<f64> = rows
            .iter()
            .map(|r| if r[0] + 0.3 * r[1] > 0.0 { 1.0 } else { -1.0 })
            .collect();
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let data = TrainingSet::new(Mat::from_rows(&refs), labels).unwrap();
        let model = train(&data, &KernelSpec::Rbf { gamma: 0.5 }, 10.0).unwrap();
        let sum: f64 = model
            .alphas
            .iter()
            .zip(&model.sv_labels)
            .map(|(a, l)| a * l)
            .sum();
        assert!(sum.abs() <= 1e-8, "sum alpha*l = {sum}");
        assert!(model
            .alphas
            .iter()
            .all(|a| *a > 0.0 && *a <= model.c_param));
        let worst = kkt_violation(&model, &data).unwrap();
        assert!(worst <= KKT_TOL, "kkt violation {worst}");
    }

    #[test]
    fn decision_free_sv_hits_label() {
        let model = two_point_model();
        for i in 0..model.alphas.len() {
            if model.alphas[i] < model.c_param {
                let f = decision(&model, model.support_vectors.row(i)).unwrap();
                assert!((f - model.sv_labels[i]).abs() <= KKT_TOL);
            }
        }
    }

    #[test]
    fn decision_affine_in_bias() {
        let mut model = two_point_model();
        let base = decision(&model, &[0.3]).unwrap();
        model.bias += 2.5;
        let shifted = decision(&model, &[0.3]).unwrap();
        assert!((shifted - base - 2.5).abs() < 1e-12);
    }

    #[test]
    fn classify_tie_break() {
        let mut model = two_point_model();
        assert_eq!(classify(&model, &[0.7]).unwrap(), 1.0);
        assert_eq!(classify(&model, &[-0.7]).unwrap(), -1.0);
        // force an exact zero decision value
        model.alphas.clear();
        model.sv_labels.clear();
        model.support_vectors = Mat::zeros(0, 1);
        model.bias = 0.0;
        assert_eq!(classify(&model, &[123.0]).unwrap(), 1.0);
    }

    #[test]
    fn permutation_invariance_on_probe_grid() {
        let mut rng = ChaCha20Rng::seed_from_u64(13);
        let rows: Vec<Vec<f64>> = (0..24)
            .map(|_| (0..2).map(|_| rng.random_range(-2.0..2.0)).collect())
            .collect();
        let labels: Vec<f64> = rows
            .iter()
            .map(|r| if r[0] > 0.1 * r[1] { 1.0 } else { -1.0 })
            .collect();
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let data = TrainingSet::new(Mat::from_rows(&refs), labels.clone()).unwrap();
        let model_a = train(&data, &KernelSpec::GaussianRbf { sigma: 1.0 }, 100.0).unwrap();

        let mut perm: Vec<usize> = (0..rows.len()).collect();
        perm.shuffle(&mut rng);
        let prows: Vec<&[f64]> = perm.iter().map(|&i| rows[i].as_slice()).collect();
        let plabels: Vec<f64> = perm.iter().map(|&i| labels[i]).collect();
        let pdata = TrainingSet::new(Mat::from_rows(&prows), plabels).unwrap();
        let model_b = train(&pdata, &KernelSpec::GaussianRbf { sigma: 1.0 }, 100.0).unwrap();

        for gx in -4..=4 {
            for gy in -4..=4 {
                let x = [gx as f64 * 0.5, gy as f64 * 0.5];
                let fa = decision(&model_a, &x).unwrap();
                let fb = decision(&model_b, &x).unwrap();
                assert!((fa - fb).abs() < 1e-6, "grid ({gx},{gy}): {fa} vs {fb}");
            }
        }
    }

    #[test]
    fn rejects_single_class() {
        let res = TrainingSet::new(Mat::from_rows(&[&[0.0], &[1.0]]), vec![1.0, 1.0]);
        assert!(matches!(res, Err(Error::SingleClass)));
    }

    #[test]
    fn rejects_dimension_mismatch_in_decision() {
        let model = two_point_model();
        assert!(decision(&model, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn model_text_round_trip() {
        let model = two_point_model();
        let text = model_to_string(&model);
        let back = model_from_str(&text).unwrap();
        assert_eq!(back.alphas, model.alphas);
        assert_eq!(back.sv_labels, model.sv_labels);
        assert_eq!(back.bias, model.bias);
        assert_eq!(back.c_param, model.c_param);
        assert_eq!(back.kernel, model.kernel);
        assert_eq!(
            back.support_vectors.data(),
            model.support_vectors.data()
        );
        assert!(model_from_str("not a model").is_err());
    }
}
