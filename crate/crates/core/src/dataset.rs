//! Slot spectra and labels: synthetic Wi-Fi-like generation, CSV ingest and
//! export, windowed feature matrices, and randomized train/test splits.
//!
//! Each slot carries one amplitude per 1-MHz bin over the 2.411-2.433 GHz
//! band (23 bins) plus a busy/idle label. Frequency bins are 1-based in all
//! user-facing parameters and converted internally.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Number of frequency bins per slot.
pub const NUM_BINS: usize = 23;
/// Center bin of the band, 1-based.
pub const CENTER_BIN: usize = 12;
/// Widest supported window dimension.
pub const MAX_WINDOW_DIM: usize = 13;

/// Noise amplitude scale of the synthetic generator. Chosen so that
/// within-class spreads sit well inside the fixed KPCA kernel width while
/// SNR controls the class separation.
const NOISE_SIGMA: f64 = 0.5;

const CSV_HEADER: &str = "slot,label,f01,f02,f03,f04,f05,f06,f07,f08,f09,f10,f11,f12,f13,f14,f15,f16,f17,f18,f19,f20,f21,f22,f23";
const CSV_COLUMNS: usize = 2 + NUM_BINS;

/// Busy/idle state of a slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Idle,
    Busy,
}

impl Label {
    pub fn as_u8(self) -> u8 {
        match self {
            Label::Idle => 0,
            Label::Busy => 1,
        }
    }

    pub fn from_u8(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Label::Idle),
            1 => Ok(Label::Busy),
            other => Err(Error::InvalidParameter(format!(
                "label must be 0 or 1, got {other}"
            ))),
        }
    }

    /// SVM target: idle -> -1, busy -> +1.
    pub fn as_svm(self) -> f64 {
        match self {
            Label::Idle => -1.0,
            Label::Busy => 1.0,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// One time slot: frequency-domain amplitudes plus its occupancy label.
#[derive(Debug, Clone, PartialEq)]
pub struct SlotSpectrum {
    pub slot_index: u64,
    pub amplitudes: [f64; NUM_BINS],
    pub label: Label,
}

impl SlotSpectrum {
    pub fn new(slot_index: u64, amplitudes: [f64; NUM_BINS], label: Label) -> Result<Self> {
        if let Some(v) = amplitudes.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "slot {slot_index}: amplitudes must be finite and >= 0, got {v}"
            )));
        }
        Ok(SlotSpectrum {
            slot_index,
            amplitudes,
            label,
        })
    }
}

/// An ordered collection of slots with strictly increasing slot indexes.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SpectraMatrix {
    slots: Vec<SlotSpectrum>,
}

impl SpectraMatrix {
    pub fn new() -> Self {
        SpectraMatrix { slots: Vec::new() }
    }

    pub fn push(&mut self, slot: SlotSpectrum) -> Result<()> {
        if let Some(last) = self.slots.last() {
            if slot.slot_index <= last.slot_index {
                return Err(Error::InvalidParameter(format!(
                    "slot indexes must be strictly increasing ({} after {})",
                    slot.slot_index, last.slot_index
                )));
            }
        }
        self.slots.push(slot);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[SlotSpectrum] {
        &self.slots
    }

    pub fn labels(&self) -> Vec<Label> {
        self.slots.iter().map(|s| s.label).collect()
    }

    pub fn busy_count(&self) -> usize {
        self.slots.iter().filter(|s| s.label == Label::Busy).count()
    }
}

/// A contiguous frequency window around the center bin.
///
/// Covers 1-based bins `12-m ..= 12+n` with `N = n + m + 1` and
/// `0 <= n - m <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    dim: usize,
    m: usize,
    n: usize,
}

impl WindowSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let dim = n + m + 1;
        if !(1..=MAX_WINDOW_DIM).contains(&dim) {
            return Err(Error::InvalidParameter(format!(
                "window dimension N={dim} outside [1, {MAX_WINDOW_DIM}]"
            )));
        }
        if n < m || n - m > 1 {
            return Err(Error::InvalidParameter(format!(
                "window requires 0 <= n - m <= 1, got m={m}, n={n}"
            )));
        }
        if m + 1 > CENTER_BIN || CENTER_BIN + n > NUM_BINS {
            return Err(Error::InvalidParameter(format!(
                "window bins {}..{} leave the band [1, {NUM_BINS}]",
                CENTER_BIN as i64 - m as i64,
                CENTER_BIN + n
            )));
        }
        Ok(WindowSpec { dim, m, n })
    }

    /// The canonical window of dimension `dim`: m = floor((N-1)/2), n = N-1-m.
    pub fn for_dim(dim: usize) -> Result<Self> {
        if !(1..=MAX_WINDOW_DIM).contains(&dim) {
            return Err(Error::InvalidParameter(format!(
                "window dimension N={dim} outside [1, {MAX_WINDOW_DIM}]"
            )));
        }
        let m = (dim - 1) / 2;
        WindowSpec::new(m, dim - 1 - m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based inclusive bin range.
    pub fn bins(&self) -> (usize, usize) {
        (CENTER_BIN - self.m, CENTER_BIN + self.n)
    }
}

/// Seeded train/test split sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitSpec {
    pub train_count: usize,
    pub test_count: usize,
    pub seed: u64,
}

/// Disjoint train/test slot indexes produced by [`split`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

fn occupancy_mask() -> [f64; NUM_BINS] {
    let mut mask = [0.0; NUM_BINS];
    for (idx, slot) in mask.iter_mut().enumerate() {
        let bin = idx + 1; // 1-based
        if (4..=20).contains(&bin) {
            let phase = std::f64::consts::PI * (bin as f64 - CENTER_BIN as f64) / 9.0;
            *slot = 0.5 * (1.0 + phase.cos());
        }
    }
    mask
}

/// Generates a synthetic Wi-Fi-like dataset.
///
/// Idle slots are per-bin folded-Gaussian noise; busy slots add a fixed
/// raised-cosine occupancy bump spanning bins 4-20 (peak at bin 12), scaled
/// so that mean busy-bin signal power over noise power is `10^(snr_db/10)`.
/// Deterministic for a fixed seed.
pub fn synth_generate(
    num_slots: usize,
    snr_db: f64,
    duty_cycle: f64,
    seed: u64,
) -> Result<SpectraMatrix> {
    if num_slots == 0 {
        return Err(Error::InvalidParameter("num_slots must be >= 1".into()));
    }
    if !(duty_cycle > 0.0 && duty_cycle < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "duty_cycle must lie in (0, 1), got {duty_cycle}"
        )));
    }
    if !snr_db.is_finite() {
        return Err(Error::InvalidParameter("snr_db must be finite".into()));
    }

    let mask = occupancy_mask();
    let busy_bins = (4..=20).count();
    let mean_mask_sq =
        mask.iter().map(|v| v * v).sum::<f64>() / busy_bins as f64;
    let snr_lin = 10f64.powf(snr_db / 10.0);
    let amp = NOISE_SIGMA * (snr_lin / mean_mask_sq).sqrt();

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, NOISE_SIGMA).expect("valid sigma");

    let mut out = SpectraMatrix::new();
    for i in 0..num_slots {
        let busy = rng.random_bool(duty_cycle);
        let mut amps = [0.0; NUM_BINS];
        for (b, slot) in amps.iter_mut().enumerate() {
            let n: f64 = noise.sample(&mut rng);
            *slot = n.abs() + if busy { amp * mask[b] } else { 0.0 };
        }
        out.push(SlotSpectrum::new(
            i as u64,
            amps,
            if busy { Label::Busy } else { Label::Idle },
        )?)?;
    }
    Ok(out)
}

/// Writes the dataset as CSV (`slot,label,f01..f23`, LF line endings).
pub fn save_csv<P: AsRef<Path>>(matrix: &SpectraMatrix, path: P) -> Result<()> {
    let mut buf = String::with_capacity(64 * (matrix.len() + 1));
    buf.push_str(CSV_HEADER);
    buf.push('\n');
    for slot in matrix.slots() {
        buf.push_str(&slot.slot_index.to_string());
        buf.push(',');
        buf.push_str(&slot.label.to_string());
        for a in &slot.amplitudes {
            buf.push(',');
            buf.push_str(&format!("{a}"));
        }
        buf.push('\n');
    }
    let mut file = fs::File::create(path)?;
    file.write_all(buf.as_bytes())?;
    Ok(())
}

/// Loads a dataset from CSV. An empty file yields an empty matrix.
pub fn load_csv<P: AsRef<Path>>(path: P) -> Result<SpectraMatrix> {
    let text = fs::read_to_string(path)?;
    parse_csv(&text)
}

fn parse_csv(text: &str) -> Result<SpectraMatrix> {
    let mut out = SpectraMatrix::new();
    let mut lines = text.lines().enumerate();
    match lines.next() {
        None => return Ok(out), // empty file
        Some((_, header)) => {
            if header.trim_end() != CSV_HEADER {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected header `{CSV_HEADER}`"),
                });
            }
        }
    }
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != CSV_COLUMNS {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {CSV_COLUMNS} columns, found {}", fields.len()),
            });
        }
        let slot_index = u64::from_str(fields[0].trim()).map_err(|_| Error::Parse {
            line: line_no,
            message: format!("slot index `{}` is not a non-negative integer", fields[0]),
        })?;
        let label_raw = u8::from_str(fields[1].trim()).map_err(|_| Error::Parse {
            line: line_no,
            message: format!("label `{}` is not 0 or 1", fields[1]),
        })?;
        let label = Label::from_u8(label_raw).map_err(|_| Error::Parse {
            line: line_no,
            message: format!("label `{label_raw}` is not 0 or 1"),
        })?;
        let mut amps = [0.0; NUM_BINS];
        for (k, cell) in fields[2..].iter().enumerate() {
            amps[k] = f64::from_str(cell.trim()).map_err(|_| Error::Parse {
                line: line_no,
                message: format!("cell `{cell}` is not a number"),
            })?;
        }
        let slot = SlotSpectrum::new(slot_index, amps, label).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        out.push(slot).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
    }
    Ok(out)
}

/// Builds the windowed feature matrix: row i holds the amplitudes of slot i
/// at bins `12-m ..= 12+n`.
pub fn window(matrix: &SpectraMatrix, spec: WindowSpec) -> Mat {
    let (lo, hi) = spec.bins();
    debug_assert!(lo >= 1 && hi <= NUM_BINS);
    Mat::from_fn(matrix.len(), spec.dim(), |i, j| {
        matrix.slots()[i].amplitudes[lo - 1 + j] // 1-based bins
    })
}

/// Draws disjoint train/test index sets of the requested sizes, uniformly
/// without replacement. Resamples (up to 100 attempts) until both sets hold
/// at least one slot of each label.
pub fn split(matrix: &SpectraMatrix, spec: SplitSpec) -> Result<Split> {
    let total = spec.train_count + spec.test_count;
    if spec.train_count == 0 || spec.test_count == 0 {
        return Err(Error::InvalidParameter(
            "train and test counts must be positive".into(),
        ));
    }
    if total > matrix.len() {
        return Err(Error::SplitFailed(format!(
            "need {total} slots (train {} + test {}), dataset has {}",
            spec.train_count,
            spec.test_count,
            matrix.len()
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let labels = matrix.labels();
    for _ in 0..100 {
        let chosen = rand::seq::index::sample(&mut rng, matrix.len(), total).into_vec();
        let train = chosen[..spec.train_count].to_vec();
        let test = chosen[spec.train_count..].to_vec();
        let both = |idx: &[usize]| {
            idx.iter().any(|&i| labels[i] == Label::Busy)
                && idx.iter().any(|&i| labels[i] == Label::Idle)
        };
        if both(&train) && both(&test) {
            return Ok(Split { train, test });
        }
    }
    Err(Error::SplitFailed(
        "could not draw a split with both labels in both sets after 100 attempts".into(),
    ))
}
