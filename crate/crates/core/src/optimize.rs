//! Amplitude optimization of `J(A) = alpha * eps_inter + (1 - alpha) * D_loco`.
//!
//! A uniform scan over `[0, 1]` keeps every grid value for plotting; the best
//! feasible grid point is then refined by golden-section search within one
//! grid step on either side. Infeasible amplitudes score `+inf`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{amplitude_grid, check_alpha, objective, Evaluator, MetricsOptions};
use crate::numeric::golden_section;
use crate::solids::SolidKind;

pub const DEFAULT_RESOLUTION: f64 = 0.005;
/// Edge length used when none is given, in millimetres.
pub const DEFAULT_EDGE_LENGTH: f64 = 110.0;
const REFINE_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub amplitude: f64,
    pub feasible: bool,
    pub j: Option<f64>,
    pub eps_inter: f64,
    pub d_loco: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub solid: SolidKind,
    pub edge_length: f64,
    pub radius: f64,
    pub alpha: f64,
    pub resolution: f64,
    pub c_slack: f64,
    pub a_star: f64,
    pub j_star: f64,
    /// Smallest and largest feasible amplitudes seen (grid points and `a_star`).
    pub feasible_range: [f64; 2],
    pub trace: Vec<TracePoint>,
}

impl OptimizationResult {
    /// Best `J` on the grid alone.
    pub fn grid_minimum(&self) -> Option<&TracePoint> {
        self.trace.iter().filter(|t| t.j.is_some()).min_by(|a, b| {
            a.j.unwrap_or(f64::INFINITY)
                .total_cmp(&b.j.unwrap_or(f64::INFINITY))
        })
    }
}

pub fn optimize_amplitude(
    solid: SolidKind,
    edge_length: f64,
    alpha: f64,
    resolution: f64,
    options: &MetricsOptions,
) -> Result<OptimizationResult> {
    check_alpha(alpha)?;
    if !(resolution > 0.0 && resolution <= 0.1) {
        return Err(Error::invalid(format!(
            "resolution must lie in (0, 0.1], got {resolution}"
        )));
    }
    let ev = Evaluator::new(solid, edge_length, *options)?;
    let grid = amplitude_grid(resolution);
    let samples = grid
        .par_iter()
        .map(|&a| ev.sample(a))
        .collect::<Result<Vec<_>>>()?;
    let trace: Vec<TracePoint> = samples
        .iter()
        .map(|s| {
            let d_loco = ev.d_loco(&s.locomotion);
            TracePoint {
                amplitude: s.amplitude,
                feasible: s.locomotion.feasible,
                j: d_loco.map(|d| objective(alpha, s.inter.eps_inter, d)),
                eps_inter: s.inter.eps_inter,
                d_loco,
            }
        })
        .collect();

    let no_feasible = || Error::NoFeasibleAmplitude {
        solid: solid.to_string(),
        c_slack: ev.c_slack,
    };
    let feasible: Vec<f64> = trace
        .iter()
        .filter(|t| t.feasible)
        .map(|t| t.amplitude)
        .collect();
    let mut feasible_range = [
        *feasible.first().ok_or_else(no_feasible)?,
        *feasible.last().ok_or_else(no_feasible)?,
    ];
    let (best_a, best_j) = trace
        .iter()
        .filter_map(|t| t.j.map(|j| (t.amplitude, j)))
        .fold((f64::NAN, f64::INFINITY), |acc, (a, j)| {
            if j < acc.1 {
                (a, j)
            } else {
                acc
            }
        });

    let cost = |a: f64| match ev.sample(a) {
        Ok(s) => ev
            .d_loco(&s.locomotion)
            .map_or(f64::INFINITY, |d| objective(alpha, s.inter.eps_inter, d)),
        Err(_) => f64::INFINITY,
    };
    let lo = (best_a - resolution).max(0.0);
    let hi = (best_a + resolution).min(1.0);
    let (ref_a, ref_j) = golden_section(&cost, lo, hi, best_a, REFINE_TOLERANCE)?;
    let (a_star, j_star) = if ref_j < best_j {
        (ref_a, ref_j)
    } else {
        (best_a, best_j)
    };
    // a refined optimum has finite J, so it is feasible even between grid points
    feasible_range[0] = feasible_range[0].min(a_star);
    feasible_range[1] = feasible_range[1].max(a_star);

    Ok(OptimizationResult {
        solid,
        edge_length,
        radius: ev.radius,
        alpha,
        resolution,
        c_slack: ev.c_slack,
        a_star,
        j_star,
        feasible_range,
        trace,
    })
}

/// Runs [`optimize_amplitude`] for every solid in catalogue order.
pub fn optimize_all(
    edge_length: f64,
    alpha: f64,
    resolution: f64,
    options: &MetricsOptions,
) -> Result<Vec<OptimizationResult>> {
    SolidKind::ALL
        .iter()
        .map(|&k| optimize_amplitude(k, edge_length, alpha, resolution, options))
        .collect()
}
