//! Mismatch between a limb curve and the 180-degree-rotated curve of the
//! neighbouring module.

use serde::{Deserialize, Serialize};

use super::intramodular::intramodular_distortion;
use super::profile::EdgeProfile;
use crate::error::{Error, Result};
use crate::numeric::{interp_uniform, nelder_mead_box, trapezoid};
use crate::solids::PlatonicSolid;
use crate::topology::PlanarOutline;

/// Seed grid points per axis.
pub const SEED_GRID: usize = 21;
/// Search box half-width as a fraction of the limb span `b`.
pub const BOX_FRACTION: f64 = 0.25;
const NM_MAX_ITERS: u64 = 400;
/// Nelder-Mead starts per half of the search box.
pub const MULTI_START: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrand {
    /// `(y(x) + y(t1 - x) - t2)^2`.
    #[default]
    Squared,
    /// `|y(x) + y(t1 - x) - t2|`.
    Absolute,
}

impl std::str::FromStr for Integrand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "squared" => Ok(Integrand::Squared),
            "absolute" | "abs" => Ok(Integrand::Absolute),
            other => Err(Error::invalid(format!(
                "unknown integrand '{other}' (expected squared or absolute)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Intermodular {
    pub g_e: f64,
    pub t_star: [f64; 2],
    pub eps_inter: f64,
}

/// Displacement box `center +- half_width` for the neighbour placement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchBox {
    pub center: [f64; 2],
    pub half_width: [f64; 2],
}

impl SearchBox {
    pub fn lo(&self) -> [f64; 2] {
        [
            self.center[0] - self.half_width[0],
            self.center[1] - self.half_width[1],
        ]
    }

    pub fn hi(&self) -> [f64; 2] {
        [
            self.center[0] + self.half_width[0],
            self.center[1] + self.half_width[1],
        ]
    }

    /// `n x n` grid over the box, endpoints included, row-major in `t1`.
    pub fn grid(&self, n: usize) -> impl Iterator<Item = [f64; 2]> + '_ {
        let (lo, hi) = (self.lo(), self.hi());
        let step = move |k: usize, i: usize| lo[k] + (hi[k] - lo[k]) * i as f64 / (n - 1) as f64;
        (0..n).flat_map(move |i| (0..n).map(move |j| [step(0, i), step(1, j)]))
    }
}

/// Nominal placement: neighbour rotated by 180 degrees about the shared edge
/// midpoint, i.e. shifted by twice the centre-to-edge-midpoint distance.
pub fn default_search_box(outline: &PlanarOutline) -> SearchBox {
    let d = outline.radius * PlatonicSolid::get(outline.solid).face_to_edge_angle();
    let w = BOX_FRACTION * outline.b;
    SearchBox {
        center: [0.0, 2.0 * d],
        half_width: [w, w],
    }
}

/// The overlap integral as a function of the displacement `t`.
pub struct OverlapObjective {
    envelope: Vec<f64>,
    x0: f64,
    dx: f64,
    half_span: f64,
    integrand: Integrand,
}

impl OverlapObjective {
    /// Builds `y(x)` as the upper envelope of the limb profile on a uniform
    /// grid of `N + 1` points; strongly folded limbs have several branches
    /// over the same `x`, and the outermost one is the contact surface.
    pub fn new(outline: &PlanarOutline, integrand: Integrand) -> Self {
        let prof = EdgeProfile::from_outline(outline);
        let m = outline.samples_per_edge + 1;
        let hb = prof.half_span;
        let x0 = -hb;
        let dx = 2.0 * hb / (m - 1) as f64;
        let mut env = vec![f64::NEG_INFINITY; m];
        for k in 0..prof.len() - 1 {
            let (xa, ya, xb, yb) = (prof.xs[k], prof.ys[k], prof.xs[k + 1], prof.ys[k + 1]);
            let (lo, hi) = (xa.min(xb), xa.max(xb));
            let eps = 1e-12 * dx;
            let i0 = (((lo - x0) / dx) - eps).ceil().max(0.0) as usize;
            let i1 = ((((hi - x0) / dx) + eps).floor().max(0.0) as usize).min(m - 1);
            for i in i0..=i1 {
                let x = x0 + dx * i as f64;
                if x < lo - eps || x > hi + eps {
                    continue;
                }
                let y = if xb != xa {
                    ya + (x - xa) * (yb - ya) / (xb - xa)
                } else {
                    ya.max(yb)
                };
                env[i] = env[i].max(y);
            }
        }
        // samples outside every segment only occur through rounding at the ends
        for i in 0..m {
            if !env[i].is_finite() {
                env[i] = if i == 0 { prof.ys[0] } else { env[i - 1] };
            }
        }
        OverlapObjective {
            envelope: env,
            x0,
            dx,
            half_span: hb,
            integrand,
        }
    }

    pub fn y(&self, x: f64) -> f64 {
        interp_uniform(&self.envelope, self.x0, self.dx, x)
    }

    /// Overlap interval `[-b/2 + t1, b/2 + t1] /\ [-b/2, b/2]`, if non-empty.
    pub fn overlap(&self, t1: f64) -> Option<(f64, f64)> {
        let hb = self.half_span;
        let (c1, c2) = ((-hb + t1).max(-hb), (hb + t1).min(hb));
        (c2 > c1).then_some((c1, c2))
    }

    /// Integral value, or infinity when the overlap interval is empty.
    pub fn value(&self, t1: f64, t2: f64) -> f64 {
        let Some((c1, c2)) = self.overlap(t1) else {
            return f64::INFINITY;
        };
        let panels = self.envelope.len() - 1;
        let integrand = self.integrand;
        trapezoid(
            |x| {
                let r = self.y(x) + self.y(t1 - x) - t2;
                match integrand {
                    Integrand::Squared => r * r,
                    Integrand::Absolute => r.abs(),
                }
            },
            c1,
            c2,
            panels,
        )
    }
}

/// Best grid point, or `EmptyOverlap` when no grid point overlaps.
pub fn grid_minimum(obj: &OverlapObjective, bx: &SearchBox, n: usize) -> Result<([f64; 2], f64)> {
    bx.grid(n)
        .map(|t| (t, obj.value(t[0], t[1])))
        .filter(|(_, v)| v.is_finite())
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or(Error::EmptyOverlap)
}

/// Minimizes the overlap integral over `bx`.
///
/// The overlap interval switches form at `t1 = 0`, which leaves a ridge
/// between two basins, so each half of the box is searched on its own: the
/// best [`MULTI_START`] local minima of that half of a 21 x 21 seed grid
/// start box-constrained Nelder-Mead runs.
pub fn minimize_overlap(obj: &OverlapObjective, bx: &SearchBox) -> Result<([f64; 2], f64)> {
    let n = SEED_GRID;
    let mid = n / 2;
    let pts: Vec<[f64; 2]> = bx.grid(n).collect();
    let vals: Vec<f64> = pts.iter().map(|t| obj.value(t[0], t[1])).collect();
    // grid rows run along t2 (index i), columns along t1 (index j)
    let idx = |i: usize, j: usize| j * n + i;
    let step = [
        2.0 * bx.half_width[0] / (n - 1) as f64,
        2.0 * bx.half_width[1] / (n - 1) as f64,
    ];
    let f = |t1: f64, t2: f64| obj.value(t1, t2);
    let mut best: Option<([f64; 2], f64)> = None;
    let (lo, hi) = (bx.lo(), bx.hi());
    let split = pts[idx(0, mid)][0];
    for (cols, half_lo, half_hi) in [
        (0..=mid, lo, [split, hi[1]]),
        (mid..=n - 1, [split, lo[1]], hi),
    ] {
        let (j0, j1) = (*cols.start(), *cols.end());
        let mut seeds: Vec<usize> = Vec::new();
        for j in j0..=j1 {
            for i in 0..n {
                let v = vals[idx(i, j)];
                if !v.is_finite() {
                    continue;
                }
                let is_min = (j.saturating_sub(1).max(j0)..=(j + 1).min(j1))
                    .flat_map(|b| (i.saturating_sub(1)..=(i + 1).min(n - 1)).map(move |a| (a, b)))
                    .all(|(a, b)| !(vals[idx(a, b)] < v));
                if is_min {
                    seeds.push(idx(i, j));
                }
            }
        }
        seeds.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        for &k in seeds.iter().take(MULTI_START) {
            let mut cand = (pts[k], vals[k]);
            let (t, v) = nelder_mead_box(&f, half_lo, half_hi, pts[k], step, NM_MAX_ITERS)?;
            if v.is_finite() && v < cand.1 {
                cand = (t, v);
            }
            if best.map_or(true, |b| cand.1 < b.1) {
                best = Some(cand);
            }
        }
    }
    best.ok_or(Error::EmptyOverlap)
}

/// `G_E`, its minimizer, and `eps_inter = G_E / A_E`.
pub fn intermodular(outline: &PlanarOutline, integrand: Integrand) -> Result<Intermodular> {
    let a_e = intramodular_distortion(outline)?.a_e;
    intermodular_with_area(outline, integrand, a_e)
}

pub(crate) fn intermodular_with_area(
    outline: &PlanarOutline,
    integrand: Integrand,
    a_e: f64,
) -> Result<Intermodular> {
    let obj = OverlapObjective::new(outline, integrand);
    let (t_star, g_e) = minimize_overlap(&obj, &default_search_box(outline))?;
    Ok(Intermodular {
        g_e,
        t_star,
        eps_inter: g_e / a_e,
    })
}
