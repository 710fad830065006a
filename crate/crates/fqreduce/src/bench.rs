//! Benchmark records and the log-log exponent fit.
//!
//! Records are append-only CSV rows; the fit is an ordinary least-squares
//! slope of log(median nanos) against log(n), one line per field size.
//! Slopes are reports, never assertions.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub const CSV_HEADER: &str = "problem,q,n,seed,rep,nanos,oracle_calls,success";

#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub problem: String,
    pub q: u64,
    pub n: usize,
    pub seed: u64,
    pub rep: u32,
    pub nanos: u128,
    pub oracle_calls: u64,
    pub success: bool,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.problem,
            self.q,
            self.n,
            self.seed,
            self.rep,
            self.nanos,
            self.oracle_calls,
            if self.success { 1 } else { 0 }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitResult {
    pub q: u64,
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points: usize,
}

/// Per-q OLS fit of log median-time against log n. Requires at least four
/// distinct n values and three reps per (q, n) cell.
pub fn fit_loglog(records: &[BenchRecord]) -> Result<Vec<FitResult>> {
    let mut cells: BTreeMap<(u64, usize), Vec<u128>> = BTreeMap::new();
    for r in records {
        cells.entry((r.q, r.n)).or_default().push(r.nanos);
    }
    let mut by_q: BTreeMap<u64, Vec<(usize, u128)>> = BTreeMap::new();
    for ((q, n), mut times) in cells {
        if times.len() < 3 {
            return Err(Error::InsufficientData(format!(
                "need >= 3 reps per cell, got {} for q={q}, n={n}",
                times.len()
            )));
        }
        times.sort_unstable();
        let median = times[times.len() / 2];
        by_q.entry(q).or_default().push((n, median));
    }

    let mut out = Vec::new();
    for (q, pts) in by_q {
        if pts.len() < 4 {
            return Err(Error::InsufficientData(format!(
                "need >= 4 distinct n values for q={q}, got {}",
                pts.len()
            )));
        }
        let xy: Vec<(f64, f64)> = pts
            .iter()
            .map(|&(n, t)| ((n as f64).ln(), (t.max(1) as f64).ln()))
            .collect();
        let k = xy.len() as f64;
        let sx: f64 = xy.iter().map(|p| p.0).sum();
        let sy: f64 = xy.iter().map(|p| p.1).sum();
        let sxx: f64 = xy.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = xy.iter().map(|p| p.0 * p.1).sum();
        let denom = k * sxx - sx * sx;
        if denom == 0.0 {
            return Err(Error::InsufficientData("degenerate n values".into()));
        }
        let slope = (k * sxy - sx * sy) / denom;
        let intercept = (sy - slope * sx) / k;
        let mean_y = sy / k;
        let ss_tot: f64 = xy.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
        let ss_res: f64 = xy
            .iter()
            .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
            .sum();
        let r2 = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
        out.push(FitResult {
            q,
            slope,
            intercept,
            r2,
            points: xy.len(),
        });
    }
    Ok(out)
}
