//! Sphere/plane projections.
//!
//! `g0` is the inverse orthographic projection from an edge's curve plane onto
//! the circumscribing sphere, `g1` the azimuthal equidistant projection from
//! the sphere onto the tangent plane at a face centre, and `h = g1 . g0`.
//!
//! Both are evaluated through 3D unit vectors. The printed latitude/longitude
//! formulas assume the curve x-axis points local east; edges of a polyhedron
//! generally do not, so the curve frame is first rotated by the anchor's
//! bearing about the radial axis.

use std::f64::consts::PI;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::curves::ModuleCurve;
use crate::error::{Error, Result};
use crate::solids::{lat_lon, local_east_north, unit_from_lat_lon, SphericalAnchor};

/// Slack allowed on `rho <= R` before a point counts as off the hemisphere.
const HEMISPHERE_SLACK: f64 = 1e-12;
/// Central angles closer than this to pi are treated as antipodal.
const ANTIPODE_GUARD: f64 = 1e-9;
/// Below this central angle the scale factor uses its series expansion.
const SERIES_CUTOFF: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalPoint {
    pub phi: f64,
    pub lambda: f64,
}

impl SphericalPoint {
    pub fn new(phi: f64, lambda: f64) -> Self {
        SphericalPoint {
            phi,
            lambda: crate::solids::wrap_angle(lambda),
        }
    }

    pub fn from_unit_vector(v: &Vector3<f64>) -> Self {
        let (phi, lambda) = lat_lon(v);
        SphericalPoint { phi, lambda }
    }

    pub fn to_unit_vector(&self) -> Vector3<f64> {
        unit_from_lat_lon(self.phi, self.lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub fn new(x: f64, y: f64) -> Self {
        PlanarPoint { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(&self, o: &PlanarPoint) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }

    pub fn rotated(&self, angle: f64) -> PlanarPoint {
        let (s, c) = angle.sin_cos();
        PlanarPoint::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn scaled(&self, mu: f64) -> PlanarPoint {
        PlanarPoint::new(self.x * mu, self.y * mu)
    }
}

/// Orthonormal frame of an edge's curve plane: `radial` through the edge
/// midpoint, `tangent` along the edge, `normal = radial x tangent` (to the
/// left of the edge direction, i.e. into a counterclockwise face).
#[derive(Debug, Clone, Copy)]
pub struct EdgeFrame {
    pub radial: Vector3<f64>,
    pub tangent: Vector3<f64>,
    pub normal: Vector3<f64>,
}

impl EdgeFrame {
    pub fn from_anchor(anchor: &SphericalAnchor) -> Self {
        let radial = unit_from_lat_lon(anchor.phi, anchor.lambda);
        let (east, north) = local_east_north(anchor.phi, anchor.lambda);
        let (sb, cb) = anchor.bearing.sin_cos();
        let tangent = east * cb + north * sb;
        EdgeFrame {
            radial,
            tangent,
            normal: radial.cross(&tangent),
        }
    }

    /// Frame of the chord from `start` to `end` (unit-sphere points).
    pub fn from_chord(start: &Vector3<f64>, end: &Vector3<f64>) -> Self {
        let radial = (start + end).normalize();
        let tangent = (end - start).normalize();
        EdgeFrame {
            radial,
            tangent,
            normal: radial.cross(&tangent),
        }
    }

    /// Inverse orthographic projection of curve-plane point `(x, fx)` onto the
    /// sphere of radius `radius`, returned as a unit vector.
    pub fn lift(&self, x: f64, fx: f64, radius: f64) -> Result<Vector3<f64>> {
        let u = x / radius;
        let v = fx / radius;
        let rho2 = u * u + v * v;
        let limit = 1.0 + HEMISPHERE_SLACK;
        if !(rho2 <= limit * limit) {
            return Err(Error::domain(format!(
                "curve point ({x:.6}, {fx:.6}) lies outside the projectable disc of radius {radius:.6}"
            )));
        }
        let cos_c = (1.0 - rho2).max(0.0).sqrt();
        Ok(self.radial * cos_c + self.tangent * u + self.normal * v)
    }
}

/// `g0`: inverse orthographic projection of `(x, f(x))` about `anchor`.
pub fn inverse_orthographic(
    x: f64,
    fx: f64,
    anchor: &SphericalAnchor,
    radius: f64,
) -> Result<SphericalPoint> {
    check_radius(radius)?;
    let v = EdgeFrame::from_anchor(anchor).lift(x, fx, radius)?;
    Ok(SphericalPoint::from_unit_vector(&v))
}

/// Scale factor `k' = c / sin c` of the azimuthal equidistant projection.
pub fn scale_factor(c: f64) -> f64 {
    if c.abs() < SERIES_CUTOFF {
        1.0 + c * c / 6.0
    } else {
        c / c.sin()
    }
}

/// Azimuthal equidistant projection centred on a fixed direction.
#[derive(Debug, Clone, Copy)]
pub struct AzimuthalProjector {
    center: Vector3<f64>,
    east: Vector3<f64>,
    north: Vector3<f64>,
    radius: f64,
}

impl AzimuthalProjector {
    pub fn new(center: &SphericalAnchor, radius: f64) -> Result<Self> {
        check_radius(radius)?;
        let (east, north) = local_east_north(center.phi, center.lambda);
        Ok(AzimuthalProjector {
            center: unit_from_lat_lon(center.phi, center.lambda),
            east,
            north,
            radius,
        })
    }

    /// Projects a unit vector; `x` is local east, `y` local north.
    pub fn project(&self, u: &Vector3<f64>) -> Result<PlanarPoint> {
        let e = u.dot(&self.east);
        let n = u.dot(&self.north);
        let s = e.hypot(n);
        let c = s.atan2(u.dot(&self.center));
        if c > PI - ANTIPODE_GUARD {
            return Err(Error::domain("point is antipodal to the projection centre"));
        }
        // k' * sin(c) * (e, n)/s with sin(c) taken from the same vector
        let k = if s > 0.0 {
            scale_factor(c) * c.sin() / s
        } else {
            1.0
        };
        Ok(PlanarPoint::new(self.radius * k * e, self.radius * k * n))
    }
}

/// `g1`: azimuthal equidistant projection of `pt` about `center`.
pub fn azimuthal_equidistant(
    pt: &SphericalPoint,
    center: &SphericalAnchor,
    radius: f64,
) -> Result<PlanarPoint> {
    AzimuthalProjector::new(center, radius)?.project(&pt.to_unit_vector())
}

/// `h = g1 . g0` for one curve sample.
pub fn compose_h(
    x: f64,
    curve: &dyn ModuleCurve,
    edge: &SphericalAnchor,
    face: &SphericalAnchor,
    radius: f64,
) -> Result<PlanarPoint> {
    check_radius(radius)?;
    let v = EdgeFrame::from_anchor(edge).lift(x, curve.eval(x), radius)?;
    AzimuthalProjector::new(face, radius)?.project(&v)
}

fn check_radius(radius: f64) -> Result<()> {
    if radius.is_finite() && radius > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "sphere radius must be positive, got {radius}"
        )))
    }
}
