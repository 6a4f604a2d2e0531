//! Distribution summaries of per-node coefficients: histograms and Pearson
//! correlations against the proposed coefficient.

use std::io::{self, Write};

use serde::Serialize;

use crate::coefficients::{CCReport, Definition};
use crate::error::{Error, Result};

/// Product-moment correlation of two equally long samples.
///
/// Returns `Ok(None)` when either sample has zero variance. Uses a one-pass
/// co-moment update; the result is clamped to `[-1, 1]`.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<Option<f64>> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: xs.len(),
        });
    }
    let (mut mean_x, mut mean_y) = (0.0, 0.0);
    let (mut m2x, mut m2y, mut cxy) = (0.0, 0.0, 0.0);
    for (k, (&x, &y)) in xs.iter().zip(ys).enumerate() {
        let n = (k + 1) as f64;
        let dx = x - mean_x;
        let dy = y - mean_y;
        mean_x += dx / n;
        mean_y += dy / n;
        m2x += dx * (x - mean_x);
        m2y += dy * (y - mean_y);
        cxy += dx * (y - mean_y);
    }
    if m2x <= 0.0 || m2y <= 0.0 {
        return Ok(None);
    }
    Ok(Some((cxy / (m2x.sqrt() * m2y.sqrt())).clamp(-1.0, 1.0)))
}

/// Equal-width bins over `[0, 1]`; the last bin includes 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn compute(values: &[f64], bins: usize) -> Result<Histogram> {
        if bins == 0 {
            return Err(Error::ZeroBins);
        }
        let mut counts = vec![0u64; bins];
        for &x in values {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::OutOfUnitRange(x));
            }
            let k = ((x * bins as f64) as usize).min(bins - 1);
            counts[k] += 1;
        }
        let edges = (0..=bins).map(|i| i as f64 / bins as f64).collect();
        Ok(Histogram { edges, counts })
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Histograms of every selected definition, written as one long-format CSV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramSet {
    pub bins: usize,
    pub histograms: Vec<(Definition, Histogram)>,
}

impl HistogramSet {
    pub fn from_report(report: &CCReport, bins: usize) -> Result<HistogramSet> {
        let histograms = report
            .selection
            .iter()
            .map(|d| Ok((d, Histogram::compute(&report.column(d).unwrap(), bins)?)))
            .collect::<Result<_>>()?;
        Ok(HistogramSet { bins, histograms })
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "definition,bin,lower,upper,count")?;
        for (d, h) in &self.histograms {
            for (k, c) in h.counts.iter().enumerate() {
                writeln!(out, "{},{},{},{},{}", d, k, h.edges[k], h.edges[k + 1], c)?;
            }
        }
        Ok(())
    }
}

/// Correlation of each existing definition with the proposed coefficient.
/// `None` marks an undefined correlation (a constant column).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub nodes: usize,
    pub rho_op: Option<f64>,
    pub rho_zp: Option<f64>,
    pub rho_sp: Option<f64>,
}

impl CorrelationReport {
    /// Needs a report holding all four definitions.
    pub fn from_report(report: &CCReport) -> Result<CorrelationReport> {
        let col = |d: Definition| report.column(d).unwrap_or_default();
        let proposed = col(Definition::Proposed);
        Ok(CorrelationReport {
            nodes: proposed.len(),
            rho_op: pearson(&col(Definition::Opsahl), &proposed)?,
            rho_zp: pearson(&col(Definition::Zhou), &proposed)?,
            rho_sp: pearson(&col(Definition::Baseline), &proposed)?,
        })
    }
}
