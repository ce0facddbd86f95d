//! Small numerical helpers: trapezoid rules and box-constrained wrappers
//! around argmin's derivative-free solvers.

use argmin::core::{CostFunction, Error as ArgminError, Executor, State};
use argmin::solver::goldensectionsearch::GoldenSectionSearch;
use argmin::solver::neldermead::NelderMead;

use crate::error::{Error, Result};

/// Composite trapezoid of `f` on `n` uniform panels over `[lo, hi]`.
pub fn trapezoid<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> f64 {
    assert!(n >= 1);
    let h = (hi - lo) / n as f64;
    let mut sum = 0.5 * (f(lo) + f(hi));
    for i in 1..n {
        sum += f(lo + h * i as f64);
    }
    sum * h
}

/// Trapezoid line integral `sum (y_i + y_{i+1}) / 2 * (x_{i+1} - x_i)` over a
/// parametric polyline, taking every `stride`-th sample.
pub fn polyline_y_dx(xs: &[f64], ys: &[f64], stride: usize) -> f64 {
    let idx: Vec<usize> = (0..xs.len()).step_by(stride).collect();
    idx.windows(2)
        .map(|w| 0.5 * (ys[w[0]] + ys[w[1]]) * (xs[w[1]] - xs[w[0]]))
        .sum()
}

/// Linear interpolation on a uniform grid starting at `x0` with spacing `dx`.
/// Arguments outside the grid are clamped to its ends.
pub fn interp_uniform(values: &[f64], x0: f64, dx: f64, x: f64) -> f64 {
    let last = values.len() - 1;
    let s = ((x - x0) / dx).clamp(0.0, last as f64);
    let i = (s.floor() as usize).min(last.saturating_sub(1));
    let frac = s - i as f64;
    if last == 0 {
        return values[0];
    }
    values[i] + frac * (values[i + 1] - values[i])
}

fn solver_error(e: ArgminError) -> Error {
    Error::domain(format!("optimizer failure: {e}"))
}

struct Boxed<'a, F> {
    f: &'a F,
    lo: [f64; 2],
    hi: [f64; 2],
}

impl<F: Fn(f64, f64) -> f64> CostFunction for Boxed<'_, F> {
    type Param = Vec<f64>;
    type Output = f64;

    fn cost(&self, p: &Self::Param) -> std::result::Result<f64, ArgminError> {
        let x = p[0].clamp(self.lo[0], self.hi[0]);
        let y = p[1].clamp(self.lo[1], self.hi[1]);
        let v = (self.f)(x, y);
        // keep the simplex away from points outside the box or with no value
        let penalty = (p[0] - x).abs() + (p[1] - y).abs();
        Ok(if v.is_finite() {
            v + penalty * penalty
        } else {
            f64::MAX
        })
    }
}

/// Minimizes `f` over the box `[lo, hi]` with Nelder-Mead started at `start`.
/// Parameters are projected onto the box before every evaluation; the
/// returned point is the projected best vertex.
pub fn nelder_mead_box<F: Fn(f64, f64) -> f64>(
    f: &F,
    lo: [f64; 2],
    hi: [f64; 2],
    start: [f64; 2],
    step: [f64; 2],
    max_iters: u64,
) -> Result<([f64; 2], f64)> {
    let simplex = vec![
        vec![start[0], start[1]],
        vec![start[0] + step[0], start[1]],
        vec![start[0], start[1] + step[1]],
    ];
    let solver = NelderMead::new(simplex)
        .with_sd_tolerance(1e-14)
        .map_err(solver_error)?;
    let res = Executor::new(Boxed { f, lo, hi }, solver)
        .configure(|s| s.max_iters(max_iters))
        .run()
        .map_err(solver_error)?;
    let best = res
        .state()
        .get_best_param()
        .cloned()
        .unwrap_or_else(|| start.to_vec());
    let p = [best[0].clamp(lo[0], hi[0]), best[1].clamp(lo[1], hi[1])];
    Ok((p, f(p[0], p[1])))
}

struct Scalar<'a, F> {
    f: &'a F,
}

impl<F: Fn(f64) -> f64> CostFunction for Scalar<'_, F> {
    type Param = f64;
    type Output = f64;

    fn cost(&self, x: &f64) -> std::result::Result<f64, ArgminError> {
        let v = (self.f)(*x);
        Ok(if v.is_finite() { v } else { f64::MAX })
    }
}

/// Golden-section minimization of `f` on `[lo, hi]`, started from `init`.
pub fn golden_section<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    init: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    if !(hi > lo) {
        return Ok((lo, f(lo)));
    }
    let solver = GoldenSectionSearch::new(lo, hi)
        .and_then(|s| s.with_tolerance(tol))
        .map_err(solver_error)?;
    let res = Executor::new(Scalar { f }, solver)
        .configure(|s| s.param(init.clamp(lo, hi)).max_iters(200))
        .run()
        .map_err(solver_error)?;
    let x = res
        .state()
        .get_best_param()
        .copied()
        .unwrap_or(init)
        .clamp(lo, hi);
    Ok((x, f(x)))
}
