//! Limb reach and the inter-limb clearance constraint.

use serde::{Deserialize, Serialize};

use super::profile::EdgeProfile;
use crate::projection::PlanarPoint;
use crate::topology::PlanarOutline;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeasibilityRule {
    /// Smallest gap between a limb curve and its neighbour (its `2 pi / p`
    /// rotation), with crossing curves counting as zero gap.
    #[default]
    Clearance,
    /// `|y - sin(2 pi/p) x - cos(2 pi/p) y|` evaluated along the limb frame.
    PrintedResidual,
}

impl std::str::FromStr for FeasibilityRule {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "clearance" => Ok(FeasibilityRule::Clearance),
            "printed_residual" | "residual" => Ok(FeasibilityRule::PrintedResidual),
            other => Err(crate::Error::invalid(format!(
                "unknown feasibility rule '{other}' (expected clearance or printed_residual)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocomotionAbility {
    /// Largest squared planar radius of the outline.
    pub a_loco: f64,
    /// Constraint value compared against `c_slack`; `None` when unbounded.
    pub clearance: Option<f64>,
    pub feasible: bool,
}

/// `A_loco` together with the feasibility verdict for `c_slack`.
pub fn locomotion_ability(
    outline: &PlanarOutline,
    c_slack: f64,
    rule: FeasibilityRule,
) -> LocomotionAbility {
    let a_loco = outline
        .points
        .iter()
        .map(|p| p.x * p.x + p.y * p.y)
        .fold(0.0, f64::max);
    let value = match rule {
        FeasibilityRule::Clearance => limb_clearance(outline),
        FeasibilityRule::PrintedResidual => printed_residual(outline),
    };
    LocomotionAbility {
        a_loco,
        clearance: value.is_finite().then_some(value),
        feasible: value > c_slack,
    }
}

/// Normalized inverse limb reach, `(1 / A_loco) / max_inverse`.
pub fn locomotion_difficulty(a_loco: f64, max_inverse: f64) -> f64 {
    (1.0 / a_loco) / max_inverse
}

/// Gap between limb curves of edges 0 and 1. Distances fall to zero at the
/// shared vertex, so only interior local minima of the point-to-curve
/// distance count. Returns infinity when there is no such minimum.
pub fn limb_clearance(outline: &PlanarOutline) -> f64 {
    let c0 = outline.edge_points(0);
    let c1 = outline.edge_points(1);
    if curves_cross(&c0, &c1) {
        return 0.0;
    }
    let d0: Vec<f64> = c0.iter().map(|p| distance_to_polyline(p, &c1)).collect();
    let d1: Vec<f64> = c1.iter().map(|p| distance_to_polyline(p, &c0)).collect();
    smallest_interior_minimum(&d0).min(smallest_interior_minimum(&d1))
}

/// Residual form of the clearance test, on the limb-frame profile.
pub fn printed_residual(outline: &PlanarOutline) -> f64 {
    let prof = EdgeProfile::from_outline(outline);
    let ang = 2.0 * std::f64::consts::PI / outline.p as f64;
    let (s, c) = ang.sin_cos();
    let r: Vec<f64> = prof
        .xs
        .iter()
        .zip(&prof.ys)
        .map(|(&x, &y)| (y - s * x - c * y).abs())
        .collect();
    smallest_interior_minimum(&r)
}

pub(crate) fn smallest_interior_minimum(d: &[f64]) -> f64 {
    (1..d.len().saturating_sub(1))
        .filter(|&i| d[i] <= d[i - 1] && d[i] <= d[i + 1])
        .map(|i| d[i])
        .fold(f64::INFINITY, f64::min)
}

pub(crate) fn distance_to_polyline(p: &PlanarPoint, poly: &[PlanarPoint]) -> f64 {
    poly.windows(2)
        .map(|w| distance_to_segment(p, &w[0], &w[1]))
        .fold(f64::INFINITY, f64::min)
}

fn distance_to_segment(p: &PlanarPoint, a: &PlanarPoint, b: &PlanarPoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p.x - a.x - t * dx).hypot(p.y - a.y - t * dy)
}

fn orient(a: &PlanarPoint, b: &PlanarPoint, c: &PlanarPoint) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Proper (interior) crossing of two segments; touching endpoints do not count.
pub(crate) fn segments_cross(
    a: &PlanarPoint,
    b: &PlanarPoint,
    c: &PlanarPoint,
    d: &PlanarPoint,
) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

fn curves_cross(c0: &[PlanarPoint], c1: &[PlanarPoint]) -> bool {
    let bbox =
        |a: &PlanarPoint, b: &PlanarPoint| (a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y));
    let boxes1: Vec<_> = c1.windows(2).map(|w| bbox(&w[0], &w[1])).collect();
    c0.windows(2).any(|s| {
        let (x0, x1, y0, y1) = bbox(&s[0], &s[1]);
        c1.windows(2).zip(&boxes1).any(|(t, &(u0, u1, v0, v1))| {
            x0 <= u1
                && u0 <= x1
                && y0 <= v1
                && v0 <= y1
                && segments_cross(&s[0], &s[1], &t[0], &t[1])
        })
    })
}
