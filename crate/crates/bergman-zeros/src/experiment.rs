//! Monte Carlo experiments over sampled polynomials, with deterministic
//! aggregation and CSV/JSON reporting.
//!
//! Samples are drawn from per-index RNG streams and reduced in index order,
//! so a run's output is bit-identical no matter how many threads execute it.

use crate::basis::BasisSpec;
use crate::counts::{
    default_contour_nodes, expected_count_contour, expected_count_limit, CountEstimate,
    CountMethod,
};
use crate::error::{Error, Result};
use crate::sampler::{find_roots, sample_polynomial};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::io::Write;

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub basis: BasisSpec,
    pub degree: usize,
    pub radii: Vec<f64>,
    pub samples: usize,
    pub master_seed: u64,
    pub keep_roots: bool,
}

impl ExperimentConfig {
    pub fn new(basis: BasisSpec, degree: usize, radii: Vec<f64>, samples: usize) -> Self {
        ExperimentConfig {
            basis,
            degree,
            radii,
            samples,
            master_seed: 0,
            keep_roots: false,
        }
    }

    /// Parse a flat `key=value` config (whitespace- or line-separated; `#`
    /// starts a comment). Keys: `basis`, `n`, `radii` (comma list),
    /// `samples`, `seed`, `keep-roots`. `n` is required.
    pub fn from_key_values(text: &str) -> Result<Self> {
        let mut basis = BasisSpec::ScaledMonomial;
        let mut degree: Option<usize> = None;
        let mut radii = vec![1.0];
        let mut samples = 1000usize;
        let mut seed = 0u64;
        let mut keep_roots = false;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for token in line.split_whitespace() {
                let (key, value) = token.split_once('=').ok_or_else(|| {
                    Error::Config(format!("expected key=value, got {token:?}"))
                })?;
                let bad = |what: &str| {
                    Error::Config(format!("invalid {what} value {value:?} for key {key}"))
                };
                match key {
                    "basis" => basis = BasisSpec::from_cli(value)?,
                    "n" => degree = Some(value.parse().map_err(|_| bad("degree"))?),
                    "radii" => {
                        radii = value
                            .split(',')
                            .map(|r| r.parse::<f64>().map_err(|_| bad("radius")))
                            .collect::<Result<_>>()?;
                    }
                    "samples" => samples = value.parse().map_err(|_| bad("samples"))?,
                    "seed" => seed = value.parse().map_err(|_| bad("seed"))?,
                    "keep-roots" => keep_roots = value.parse().map_err(|_| bad("boolean"))?,
                    other => {
                        return Err(Error::Config(format!("unknown config key {other:?}")))
                    }
                }
            }
        }
        let degree = degree.ok_or_else(|| Error::Config("missing required key n".into()))?;
        let cfg = ExperimentConfig {
            basis,
            degree,
            radii,
            samples,
            master_seed: seed,
            keep_roots,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.radii.is_empty() {
            return Err(Error::Config("at least one radius is required".into()));
        }
        for &r in &self.radii {
            if !(r > 0.0 && r <= 1.0) {
                return Err(Error::Config(format!("radius {r} outside (0, 1]")));
            }
        }
        self.basis.check_degree(self.degree)?;
        Ok(())
    }

    fn to_json(&self) -> serde_json::Value {
        json!({
            "basis": self.basis.to_string(),
            "n": self.degree,
            "radii": self.radii,
            "samples": self.samples,
            "seed": self.master_seed,
            "keep_roots": self.keep_roots,
        })
    }
}

pub const HISTOGRAM_BINS: usize = 60;
pub const HISTOGRAM_MAX: f64 = 1.5;

/// Histogram of root moduli over `[0, 1.5)` plus one overflow bin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModulusHistogram {
    pub counts: Vec<u64>,
    pub total: u64,
}

impl ModulusHistogram {
    fn new() -> Self {
        ModulusHistogram {
            counts: vec![0; HISTOGRAM_BINS + 1],
            total: 0,
        }
    }

    fn record(&mut self, modulus: f64) {
        let idx = (modulus / HISTOGRAM_MAX * HISTOGRAM_BINS as f64) as usize;
        self.counts[idx.min(HISTOGRAM_BINS)] += 1;
        self.total += 1;
    }

    pub fn bin_width(&self) -> f64 {
        HISTOGRAM_MAX / HISTOGRAM_BINS as f64
    }

    /// Fraction of all recorded moduli in `[lo, hi)`, counting the bins that
    /// lie fully inside; pass edges aligned to multiples of the bin width.
    pub fn mass_between(&self, lo: f64, hi: f64) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        let w = self.bin_width();
        let mass: u64 = (0..HISTOGRAM_BINS)
            .filter(|&i| i as f64 * w >= lo - 1e-12 && (i + 1) as f64 * w <= hi + 1e-12)
            .map(|i| self.counts[i])
            .sum();
        mass as f64 / self.total as f64
    }

    pub fn overflow(&self) -> u64 {
        self.counts[HISTOGRAM_BINS]
    }
}

/// Per-radius Monte Carlo mean count with its standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadiusStat {
    pub radius: f64,
    pub mean: f64,
    pub stderr: f64,
}

/// Aggregated output of [`run_mc`].
#[derive(Debug, Clone)]
pub struct MCResult {
    pub degree: usize,
    pub kept: usize,
    pub discarded: usize,
    /// Samples in which at least one leading coefficient was trimmed.
    pub trim_events: usize,
    pub max_residual: f64,
    pub per_radius: Vec<RadiusStat>,
    pub histogram: ModulusHistogram,
    pub roots_total: u64,
    pub roots_inside_unit: u64,
    /// `(sample_index, root)` pairs, present when `keep_roots` was set.
    pub roots: Option<Vec<(u64, Complex64)>>,
}

impl MCResult {
    /// Fraction of all roots strictly inside the unit disk; `None` when no
    /// roots were produced at all (the degenerate degree-0 case).
    pub fn fraction_inside(&self) -> Option<f64> {
        if self.roots_total == 0 {
            None
        } else {
            Some(self.roots_inside_unit as f64 / self.roots_total as f64)
        }
    }

    pub fn count_estimates(&self) -> Vec<CountEstimate> {
        self.per_radius
            .iter()
            .map(|s| CountEstimate {
                value: s.mean,
                method: CountMethod::MonteCarlo,
                n: self.degree,
                radius: s.radius,
                stderr: Some(s.stderr),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "per_radius": self.per_radius,
            "fraction_inside": self.fraction_inside(),
            "histogram": {
                "bin_width": self.histogram.bin_width(),
                "counts": self.histogram.counts,
                "total": self.histogram.total,
                "overflow": self.histogram.overflow(),
            },
        })
    }
}

struct SampleOutcome {
    moduli: Vec<f64>,
    trimmed: bool,
    roots: Option<Vec<Complex64>>,
    residual: f64,
}

/// Run the Monte Carlo experiment described by `config`.
///
/// Samples whose root certification fails are discarded and counted; more
/// than 1% discards aborts the run with a numerical diagnostic. Aggregation
/// order is fixed by sample index, so results do not depend on the rayon
/// thread count.
pub fn run_mc(config: &ExperimentConfig) -> Result<MCResult> {
    config.validate()?;
    let outcomes: Vec<Option<SampleOutcome>> = (0..config.samples as u64)
        .into_par_iter()
        .map(|idx| {
            let sample = sample_polynomial(&config.basis, config.degree, config.master_seed, idx)?;
            match find_roots(&sample.coeffs) {
                Ok(rs) => Ok(Some(SampleOutcome {
                    moduli: rs.roots.iter().map(|z| z.norm()).collect(),
                    trimmed: rs.trimmed > 0,
                    roots: config.keep_roots.then_some(rs.roots),
                    residual: rs.max_residual,
                })),
                Err(e) if e.is_numerical() => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;

    let mut histogram = ModulusHistogram::new();
    let mut trim_events = 0usize;
    let mut discarded = 0usize;
    let mut max_residual = 0.0f64;
    let mut roots_total = 0u64;
    let mut roots_inside_unit = 0u64;
    let mut kept_roots: Vec<(u64, Complex64)> = Vec::new();
    let mut counts_per_radius: Vec<Vec<f64>> = vec![Vec::new(); config.radii.len()];
    for (idx, outcome) in outcomes.iter().enumerate() {
        let Some(o) = outcome else {
            discarded += 1;
            continue;
        };
        if o.trimmed {
            trim_events += 1;
        }
        max_residual = max_residual.max(o.residual);
        for &m in &o.moduli {
            histogram.record(m);
            roots_total += 1;
            if m < 1.0 {
                roots_inside_unit += 1;
            }
        }
        for (ri, &r) in config.radii.iter().enumerate() {
            counts_per_radius[ri].push(o.moduli.iter().filter(|&&m| m < r).count() as f64);
        }
        if let Some(roots) = &o.roots {
            kept_roots.extend(roots.iter().map(|&z| (idx as u64, z)));
        }
    }

    let kept = config.samples - discarded;
    if discarded * 100 > config.samples {
        return Err(Error::MonteCarlo(format!(
            "{discarded} of {} samples discarded (over the 1% budget)",
            config.samples
        )));
    }
    let per_radius = config
        .radii
        .iter()
        .zip(&counts_per_radius)
        .map(|(&radius, counts)| {
            let m = counts.len() as f64;
            let mean = counts.iter().sum::<f64>() / m;
            let stderr = if counts.len() > 1 {
                let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (m - 1.0);
                (var / m).sqrt()
            } else {
                0.0
            };
            RadiusStat { radius, mean, stderr }
        })
        .collect();

    Ok(MCResult {
        degree: config.degree,
        kept,
        discarded,
        trim_events,
        max_residual,
        per_radius,
        histogram,
        roots_total,
        roots_inside_unit,
        roots: config.keep_roots.then_some(kept_roots),
    })
}

/// Full run summary as `{config, results, diagnostics}`.
pub fn summary_json(config: &ExperimentConfig, result: &MCResult) -> serde_json::Value {
    json!({
        "config": config.to_json(),
        "results": result.to_json(),
        "diagnostics": {
            "kept": result.kept,
            "discarded": result.discarded,
            "trim_events": result.trim_events,
            "max_residual": result.max_residual,
        },
    })
}

/// CSV rows `sample_index,re,im`, one per kept root; requires the run to
/// have set `keep_roots`.
pub fn write_roots_csv<W: Write>(mut w: W, result: &MCResult) -> Result<()> {
    let roots = result.roots.as_ref().ok_or_else(|| {
        Error::Config("roots were not retained; rerun with keep-roots".into())
    })?;
    writeln!(w, "sample_index,re,im")?;
    for (idx, z) in roots {
        writeln!(w, "{},{},{}", idx, z.re, z.im)?;
    }
    Ok(())
}

/// One degree's entry in a convergence table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub count: f64,
    pub reference: f64,
    /// `|count/n - 2/3|` at r = 1, `|count - reference|` otherwise.
    pub gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub radius: f64,
    pub rows: Vec<ConvergenceRow>,
}

/// Expected counts along increasing degrees via the contour route, tabulated
/// against the scaled-monomial limit law (`2r^2/(1-r^2)` inside, `2n/3` at
/// the boundary). For bases obeying that law the gap column shrinks; for
/// others it exposes the different limit.
pub fn convergence_report(
    spec: &BasisSpec,
    degrees: &[usize],
    r: f64,
) -> Result<ConvergenceReport> {
    if degrees.is_empty() {
        return Err(Error::Config("at least one degree is required".into()));
    }
    let mut rows = Vec::with_capacity(degrees.len());
    for &n in degrees {
        if n == 0 {
            return Err(Error::Config("convergence table needs degrees >= 1".into()));
        }
        let c = expected_count_contour(spec, n, r, default_contour_nodes(n))?;
        let count = c.estimate.value;
        let (reference, gap) = if r == 1.0 {
            (2.0 * n as f64 / 3.0, (count / n as f64 - 2.0 / 3.0).abs())
        } else {
            let l = expected_count_limit(r)?;
            (l, (count - l).abs())
        };
        rows.push(ConvergenceRow { n, count, reference, gap });
    }
    Ok(ConvergenceReport { radius: r, rows })
}
