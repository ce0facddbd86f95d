//! Limb cavities: width from the desired curl and side-profile cross sections.
//!
//! The limb side profile is the rectangle `[0, L] x [0, l]`. Cavities open on
//! the top surface `y = l`, each `w` wide there, and reach down to `y = l - h`,
//! leaving an uncut spine of thickness `l - h` along the bottom. Trapezoid
//! legs meet the cavity floor at `trapezoid_angle`, so the corner they form
//! with the top surface is `180 - trapezoid_angle` degrees.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projection::PlanarPoint;

pub const DEFAULT_CAVITY_COUNT: usize = 5;
pub const DEFAULT_CAVITY_HEIGHT: f64 = 20.0;
pub const DEFAULT_LIMB_HEIGHT: f64 = 30.0;
pub const DEFAULT_TRAPEZOID_ANGLE: f64 = 70.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CavityProfile {
    /// Apex-down triangle.
    Triangle,
    Rectangle,
    /// Right trapezoid widening toward `-x` with depth.
    InwardTrapezoid,
    /// Right trapezoid widening toward `+x` with depth.
    OutwardTrapezoid,
    IsoscelesTrapezoid,
}

impl CavityProfile {
    pub const ALL: [CavityProfile; 5] = [
        CavityProfile::Triangle,
        CavityProfile::Rectangle,
        CavityProfile::InwardTrapezoid,
        CavityProfile::OutwardTrapezoid,
        CavityProfile::IsoscelesTrapezoid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CavityProfile::Triangle => "triangle",
            CavityProfile::Rectangle => "rectangle",
            CavityProfile::InwardTrapezoid => "inward_trapezoid",
            CavityProfile::OutwardTrapezoid => "outward_trapezoid",
            CavityProfile::IsoscelesTrapezoid => "isosceles_trapezoid",
        }
    }

    pub fn is_trapezoid(self) -> bool {
        matches!(
            self,
            CavityProfile::InwardTrapezoid
                | CavityProfile::OutwardTrapezoid
                | CavityProfile::IsoscelesTrapezoid
        )
    }
}

impl fmt::Display for CavityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CavityProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        CavityProfile::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::UnknownProfile(s.to_string()))
    }
}

/// Cavity width `w = (2h/m) asin(b / 2r)` that curls a limb of chord `b`
/// onto radius `r` with `m` cavities of height `h`.
pub fn cavity_width(b: f64, r: f64, h: f64, m: usize) -> Result<f64> {
    if !(b.is_finite() && b >= 0.0) {
        return Err(Error::invalid(format!(
            "limb chord must be non-negative, got {b}"
        )));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::invalid(format!(
            "curl radius must be positive, got {r}"
        )));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::invalid(format!(
            "cavity height must be positive, got {h}"
        )));
    }
    if m == 0 {
        return Err(Error::invalid("cavity count must be at least 1"));
    }
    if b > 2.0 * r {
        return Err(Error::domain(format!(
            "limb chord {b} exceeds the curl diameter {}; no circular arc fits",
            2.0 * r
        )));
    }
    Ok(2.0 * h / m as f64 * (b / (2.0 * r)).asin())
}

/// Inputs of [`cavity_cross_section`]; lengths in millimetres, angle in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityRequest {
    pub profile: CavityProfile,
    pub count: usize,
    pub height: f64,
    pub limb_height: f64,
    pub width: f64,
    pub trapezoid_angle: f64,
    pub limb_length: f64,
    /// Centre-to-centre spacing; uniform gaps when absent.
    pub pitch: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CavitySpec {
    pub profile: CavityProfile,
    pub count: usize,
    pub height: f64,
    pub limb_height: f64,
    pub limb_length: f64,
    pub width: f64,
    pub trapezoid_angle: f64,
    /// Widest extent of one cavity (at the floor for trapezoids).
    pub footprint: f64,
    pub pitch: f64,
    pub spine_thickness: f64,
    pub cavity_area: f64,
    /// Counterclockwise cavity polygons.
    pub cavities: Vec<Vec<PlanarPoint>>,
}

/// Extra floor half-run of a slanted leg, `h cot(angle)`.
fn leg_run(height: f64, angle_deg: f64) -> f64 {
    height / angle_deg.to_radians().tan()
}

/// Footprint width and polygon of one cavity whose bounding box starts at `x0`.
fn cavity_polygon(req: &CavityRequest, x0: f64) -> (f64, Vec<PlanarPoint>) {
    let (w, top) = (req.width, req.limb_height);
    let floor = top - req.height;
    let d = leg_run(req.height, req.trapezoid_angle);
    let p = PlanarPoint::new;
    match req.profile {
        CavityProfile::Triangle => (w, vec![p(x0 + w / 2.0, floor), p(x0 + w, top), p(x0, top)]),
        CavityProfile::Rectangle => (
            w,
            vec![p(x0, floor), p(x0 + w, floor), p(x0 + w, top), p(x0, top)],
        ),
        CavityProfile::InwardTrapezoid => (
            w + d,
            vec![
                p(x0, floor),
                p(x0 + w + d, floor),
                p(x0 + w + d, top),
                p(x0 + d, top),
            ],
        ),
        CavityProfile::OutwardTrapezoid => (
            w + d,
            vec![
                p(x0, floor),
                p(x0 + w + d, floor),
                p(x0 + w, top),
                p(x0, top),
            ],
        ),
        CavityProfile::IsoscelesTrapezoid => (
            w + 2.0 * d,
            vec![
                p(x0, floor),
                p(x0 + w + 2.0 * d, floor),
                p(x0 + w + d, top),
                p(x0 + d, top),
            ],
        ),
    }
}

/// Lays out `count` congruent cavities along the limb.
pub fn cavity_cross_section(req: &CavityRequest) -> Result<CavitySpec> {
    let positive = |v: f64, what: &str| {
        if v.is_finite() && v > 0.0 {
            Ok(())
        } else {
            Err(Error::invalid(format!("{what} must be positive, got {v}")))
        }
    };
    positive(req.width, "cavity width")?;
    positive(req.height, "cavity height")?;
    positive(req.limb_height, "limb height")?;
    positive(req.limb_length, "limb length")?;
    if req.count == 0 {
        return Err(Error::invalid("cavity count must be at least 1"));
    }
    if req.height >= req.limb_height {
        return Err(Error::invalid(format!(
            "cavity height {} must be below the limb height {}",
            req.height, req.limb_height
        )));
    }
    if req.profile.is_trapezoid() && !(req.trapezoid_angle > 0.0 && req.trapezoid_angle < 90.0) {
        return Err(Error::invalid(format!(
            "trapezoid angle must lie in (0, 90) degrees, got {}",
            req.trapezoid_angle
        )));
    }

    let (footprint, _) = cavity_polygon(req, 0.0);
    let (m, len) = (req.count, req.limb_length);
    let max_uniform = ((len / footprint).ceil() as usize).saturating_sub(1);
    let (first, pitch) = match req.pitch {
        None => {
            let gap = (len - m as f64 * footprint) / (m + 1) as f64;
            if gap <= 0.0 {
                return Err(Error::CavityOverlap {
                    count: m,
                    max_count: max_uniform,
                });
            }
            (gap, footprint + gap)
        }
        Some(pitch) => {
            positive(pitch, "cavity pitch")?;
            let span = (m - 1) as f64 * pitch + footprint;
            if pitch <= footprint || span > len {
                let max_count = if pitch <= footprint || len < footprint {
                    1.min(max_uniform)
                } else {
                    ((len - footprint) / pitch).floor() as usize + 1
                };
                return Err(Error::CavityOverlap {
                    count: m,
                    max_count,
                });
            }
            ((len - span) / 2.0, pitch)
        }
    };
    let cavities: Vec<Vec<PlanarPoint>> = (0..m)
        .map(|i| cavity_polygon(req, first + i as f64 * pitch).1)
        .collect();
    let cavity_area = polygon_area(&cavities[0]);
    Ok(CavitySpec {
        profile: req.profile,
        count: m,
        height: req.height,
        limb_height: req.limb_height,
        limb_length: len,
        width: req.width,
        trapezoid_angle: req.trapezoid_angle,
        footprint,
        pitch,
        spine_thickness: req.limb_height - req.height,
        cavity_area,
        cavities,
    })
}

/// Signed shoelace area (positive for counterclockwise polygons).
pub fn polygon_area(pts: &[PlanarPoint]) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum::<f64>()
        / 2.0
}

/// Interior angle at vertex `i` of a counterclockwise polygon, in radians.
pub fn interior_angle(pts: &[PlanarPoint], i: usize) -> f64 {
    let n = pts.len();
    let (prev, cur, next) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
    let (ax, ay) = (prev.x - cur.x, prev.y - cur.y);
    let (bx, by) = (next.x - cur.x, next.y - cur.y);
    let ang = (ax * by - ay * bx).atan2(ax * bx + ay * by).abs();
    let turn = (cur.x - prev.x) * (next.y - cur.y) - (cur.y - prev.y) * (next.x - cur.x);
    if turn >= 0.0 {
        ang
    } else {
        2.0 * PI - ang
    }
}

/// True when no two non-adjacent edges of the closed polygon intersect.
pub fn is_simple(pts: &[PlanarPoint]) -> bool {
    let n = pts.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if segments_intersect(&a, &b, &c, &d) {
                return false;
            }
        }
    }
    true
}

fn segments_intersect(a: &PlanarPoint, b: &PlanarPoint, c: &PlanarPoint, d: &PlanarPoint) -> bool {
    let orient = |p: &PlanarPoint, q: &PlanarPoint, r: &PlanarPoint| {
        (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    };
    let on_segment = |p: &PlanarPoint, q: &PlanarPoint, r: &PlanarPoint| {
        r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
    };
    let (o1, o2, o3, o4) = (
        orient(a, b, c),
        orient(a, b, d),
        orient(c, d, a),
        orient(c, d, b),
    );
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}
