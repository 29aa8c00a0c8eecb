//! Werner-state sweeps over `(N, r)`.

use std::io::Write;

use qudit_pt::witness::{werner_verdict, WernerVerdict};
use qudit_pt::LatticeDim;
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub r: f64,
    /// Empty for N = 2.
    pub f: Option<f64>,
    pub r0: Option<f64>,
    pub ur_verdict: &'static str,
    pub negativity: f64,
    pub ppt_entangled: bool,
}

impl From<&WernerVerdict> for SweepRow {
    fn from(v: &WernerVerdict) -> Self {
        Self {
            n: v.n.get(),
            r: v.r,
            f: v.f,
            r0: v.r0,
            ur_verdict: v.ur.verdict.as_str(),
            negativity: v.negativity,
            ppt_entangled: v.ppt_entangled,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub ns: Vec<usize>,
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    pub tol: f64,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
}

impl ScanConfig {
    /// `r_i = r_min + (r_max − r_min)·i/(steps − 1)`.
    pub fn grid(&self) -> Vec<f64> {
        let span = self.r_max - self.r_min;
        let last = (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.r_min + span * (i as f64 / last)).collect()
    }

    fn validate(&self) -> Result<Vec<LatticeDim>, CliError> {
        if self.ns.is_empty() {
            return Err(CliError::InvalidArgs("at least one N is required".into()));
        }
        if self.steps < 2 {
            return Err(CliError::InvalidArgs(format!("steps must be at least 2, got {}", self.steps)));
        }
        if !(self.r_min.is_finite() && self.r_max.is_finite() && self.r_min <= self.r_max) {
            return Err(CliError::InvalidArgs(format!("bad r range [{}, {}]", self.r_min, self.r_max)));
        }
        self.ns
            .iter()
            .map(|&n| LatticeDim::new(n).map_err(|e| CliError::InvalidArgs(e.to_string())))
            .collect()
    }
}

/// One row per grid point, ordered by N (as given) then ascending r.
pub fn werner_scan(config: &ScanConfig) -> Result<Vec<SweepRow>, CliError> {
    let dims = config.validate()?;
    let grid = config.grid();
    let points: Vec<(LatticeDim, f64)> =
        dims.iter().flat_map(|&n| grid.iter().map(move |&r| (n, r))).collect();
    let run = || {
        points
            .par_iter()
            .map(|&(n, r)| werner_verdict(n, r, config.tol).map(|v| SweepRow::from(&v)))
            .collect::<Result<Vec<_>, _>>()
    };
    let rows = if config.threads == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| CliError::InvalidArgs(e.to_string()))?
            .install(run)
    };
    Ok(rows?)
}

/// Header `N,r,f,r0,ur_verdict,negativity,ppt_entangled`.
pub fn write_sweep<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut wtr = csv::Writer::from_writer(out);
    for row in rows {
        wtr.serialize(row)?;
    }
    if rows.is_empty() {
        wtr.write_record(["N", "r", "f", "r0", "ur_verdict", "negativity", "ppt_entangled"])?;
    }
    wtr.flush().map_err(CliError::Output)
}
