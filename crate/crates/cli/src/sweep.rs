//! Angle sweeps producing the optimal fidelity and shrinking-factor curves.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;

use twopair_core::{numeric_optimize, OptimalSolution};

use crate::error::CliError;
use crate::format::sig;

/// CSV columns, in order. `numeric_fidelity` is present only with the oracle.
pub const HEADER: [&str; 8] = [
    "phi",
    "fidelity_opt",
    "eta_x",
    "eta_z",
    "a",
    "b",
    "c",
    "numeric_fidelity",
];

/// Significant digits written for every CSV value.
pub const CSV_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub phi_min: f64,
    pub phi_max: f64,
    pub steps: usize,
    pub with_oracle: bool,
    pub oracle_grid: usize,
    /// Refinement tolerance handed to the oracle.
    pub tolerance: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            phi_min: 0.0,
            phi_max: FRAC_PI_2,
            steps: 91,
            with_oracle: false,
            oracle_grid: 256,
            tolerance: 1e-12,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(0.0 <= self.phi_min && self.phi_min < self.phi_max && self.phi_max <= FRAC_PI_2) {
            return Err(CliError::Usage(format!(
                "need 0 <= phi-min < phi-max <= pi/2, got [{}, {}]",
                self.phi_min, self.phi_max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Usage(format!("steps must be at least 2, got {}", self.steps)));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(CliError::Usage(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Sweep angles; both endpoints are hit exactly.
    pub fn angles(&self) -> Vec<f64> {
        let span = self.phi_max - self.phi_min;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.phi_max
                } else {
                    self.phi_min + span * i as f64 / last as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub phi: f64,
    pub fidelity_opt: f64,
    pub eta_x: f64,
    pub eta_z: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub numeric_fidelity: Option<f64>,
}

impl SweepRow {
    fn fields(&self) -> Vec<String> {
        let mut out: Vec<String> = [
            self.phi,
            self.fidelity_opt,
            self.eta_x,
            self.eta_z,
            self.a,
            self.b,
            self.c,
        ]
        .iter()
        .map(|&v| sig(v, CSV_DIGITS))
        .collect();
        if let Some(n) = self.numeric_fidelity {
            out.push(sig(n, CSV_DIGITS));
        }
        out
    }
}

pub fn run_sweep(config: &RunConfig) -> Result<Vec<SweepRow>, CliError> {
    config.validate()?;
    config
        .angles()
        .into_iter()
        .map(|phi| {
            let sol = OptimalSolution::at(phi)?;
            let numeric_fidelity = if config.with_oracle {
                Some(numeric_optimize(phi, config.oracle_grid, config.tolerance)?.best_fidelity)
            } else {
                None
            };
            Ok(SweepRow {
                phi,
                fidelity_opt: sol.fidelity,
                eta_x: sol.eta_x,
                eta_z: sol.eta_z,
                a: sol.coeffs.a(),
                b: sol.coeffs.b(),
                c: sol.coeffs.c(),
                numeric_fidelity,
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], with_oracle: bool, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let columns = if with_oracle { &HEADER[..] } else { &HEADER[..7] };
    w.write_record(columns)?;
    for row in rows {
        w.write_record(row.fields())?;
    }
    w.flush()?;
    Ok(())
}

/// One-line description of a finished sweep.
pub fn summary(rows: &[SweepRow]) -> String {
    let worst = rows
        .iter()
        .min_by(|x, y| x.fidelity_opt.total_cmp(&y.fidelity_opt))
        .expect("sweeps have at least two rows");
    let mut line = format!(
        "{} rows; minimum optimal fidelity {} at phi = {}",
        rows.len(),
        sig(worst.fidelity_opt, CSV_DIGITS),
        sig(worst.phi, CSV_DIGITS)
    );
    let gap = rows
        .iter()
        .filter_map(|r| r.numeric_fidelity.map(|n| (n - r.fidelity_opt).abs()))
        .fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d))));
    if let Some(gap) = gap {
        line.push_str(&format!("; max |numeric - closed form| = {gap:.3e}"));
    }
    line
}
