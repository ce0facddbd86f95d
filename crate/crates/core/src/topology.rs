//! Spherical tilings and planar module outlines.
//!
//! Every edge is sampled at `x_k = a (2k - N) / (2N)`, `k = 0..=N`, which is
//! symmetric about the midpoint. Because the curve is odd, walking an edge
//! from the neighbouring face (reversed tangent, reversed in-plane normal)
//! reproduces the same points in reverse order, so adjacent modules interlock
//! without any per-edge sign bookkeeping.

use nalgebra::Vector3;
use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{validate_curve, ModuleCurve};
use crate::error::{Error, Result};
use crate::projection::{AzimuthalProjector, EdgeFrame, PlanarPoint, SphericalPoint};
use crate::solids::{PlatonicSolid, SolidKind};

pub const DEFAULT_SAMPLES: usize = 512;
pub const MIN_SAMPLES: usize = 16;

/// Fraction of the radial range a peak must rise and fall to count as a limb.
const LIMB_PROMINENCE: f64 = 0.25;

/// Relative tolerance between the curve's edge length and `R / (R/a)`.
const RADIUS_CONSISTENCY: f64 = 1e-9;

/// Boundary of one module on the sphere.
#[derive(Debug, Clone, Serialize)]
pub struct FaceBoundary {
    pub face: usize,
    /// `p * N + 1` samples; the last repeats the first.
    pub points: Vec<SphericalPoint>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SphericalTiling {
    pub solid: SolidKind,
    pub radius: f64,
    pub samples_per_edge: usize,
    pub faces: Vec<FaceBoundary>,
}

impl SphericalTiling {
    /// Samples of edge `k` of `face`, `N + 1` points from start to end vertex.
    pub fn edge_points(&self, face: usize, k: usize) -> &[SphericalPoint] {
        let n = self.samples_per_edge;
        &self.faces[face].points[k * n..=(k + 1) * n]
    }

    /// Area enclosed by a face boundary, treating consecutive samples as joined
    /// by great-circle arcs. Computed as a signed fan of spherical triangles
    /// about the face centre.
    pub fn face_area(&self, face: usize) -> f64 {
        let solid = PlatonicSolid::get(self.solid);
        let c = solid.face_center_unchecked(face);
        let pts: Vec<Vector3<f64>> = self.faces[face]
            .points
            .iter()
            .map(|p| p.to_unit_vector())
            .collect();
        let mut omega = 0.0;
        for w in pts.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let num = c.dot(&a.cross(b));
            let den = 1.0 + c.dot(a) + c.dot(b) + a.dot(b);
            omega += 2.0 * num.atan2(den);
        }
        omega * self.radius * self.radius
    }

    pub fn total_area(&self) -> f64 {
        (0..self.faces.len()).map(|f| self.face_area(f)).sum()
    }
}

/// One module's boundary projected onto the tangent plane at face 0's centre.
#[derive(Debug, Clone, Serialize)]
pub struct PlanarOutline {
    pub solid: SolidKind,
    pub p: usize,
    pub edge_length: f64,
    pub radius: f64,
    /// Curve amplitude when the curve family has one.
    pub amplitude: Option<f64>,
    pub curve_family: String,
    pub samples_per_edge: usize,
    /// `p * N` samples, counterclockwise, starting at the first vertex of
    /// edge 0. The polygon closes back to the first point.
    pub points: Vec<PlanarPoint>,
    /// Planar span of one limb: twice the edge-aligned x-coordinate of a
    /// vertex image.
    pub b: f64,
}

impl PlanarOutline {
    /// Samples of edge `k`, `N + 1` points from its start to its end vertex.
    pub fn edge_points(&self, k: usize) -> Vec<PlanarPoint> {
        let n = self.samples_per_edge;
        let total = self.points.len();
        (0..=n).map(|i| self.points[(k * n + i) % total]).collect()
    }

    /// Shoelace area of the closed outline.
    pub fn area(&self) -> f64 {
        let pts = &self.points;
        let n = pts.len();
        let twice: f64 = (0..n)
            .map(|i| {
                let (a, b) = (pts[i], pts[(i + 1) % n]);
                a.x * b.y - b.x * a.y
            })
            .sum();
        twice / 2.0
    }

    /// Total polygon perimeter.
    pub fn perimeter(&self) -> f64 {
        let n = self.points.len();
        (0..n)
            .map(|i| self.points[i].dist(&self.points[(i + 1) % n]))
            .sum()
    }

    pub fn max_radius(&self) -> f64 {
        self.points
            .iter()
            .map(PlanarPoint::norm)
            .fold(0.0, f64::max)
    }

    /// Axis-aligned bounds `(min, max)`.
    pub fn bounds(&self) -> (PlanarPoint, PlanarPoint) {
        let mut lo = PlanarPoint::new(f64::INFINITY, f64::INFINITY);
        let mut hi = PlanarPoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    /// Number of peaks of the planar radius around the closed outline.
    ///
    /// A peak counts once the radius has risen and then fallen by a quarter
    /// of its total range, so a vertex corner next to a limb bump is one limb
    /// rather than two.
    pub fn limb_count(&self) -> usize {
        let r: Vec<f64> = self.points.iter().map(PlanarPoint::norm).collect();
        let n = r.len();
        let (start, rmin) = r
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap_or((0, 0.0));
        let rmax = r.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let delta = LIMB_PROMINENCE * (rmax - rmin);
        if !(delta > 0.0) {
            return 0;
        }
        let mut count = 0;
        let mut rising = true;
        let mut extreme = rmin;
        for i in 1..=n {
            let v = r[(start + i) % n];
            if rising {
                if v > extreme {
                    extreme = v;
                } else if extreme - v > delta {
                    count += 1;
                    rising = false;
                    extreme = v;
                }
            } else if v < extreme {
                extreme = v;
            } else if v - extreme > delta {
                rising = true;
                extreme = v;
            }
        }
        count
    }
}

fn check_inputs(
    solid: &PlatonicSolid,
    curve: &dyn ModuleCurve,
    radius: f64,
    samples: usize,
) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::invalid(format!(
            "samples per edge must be at least {MIN_SAMPLES}, got {samples}"
        )));
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::invalid(format!(
            "sphere radius must be positive, got {radius}"
        )));
    }
    let report = validate_curve(curve, 2 * samples + 1)?;
    if !report.passed {
        return Err(Error::invalid(format!(
            "curve '{}' is not a module curve: oddness violation {:.3e} at x = {}, endpoint value {:.3e} (tolerance {:.3e})",
            curve.family(),
            report.max_odd_violation,
            report.max_odd_at,
            report.endpoint_violation,
            report.tolerance
        )));
    }
    let expected = solid.radius_for_edge(curve.edge_length());
    if (expected - radius).abs() > RADIUS_CONSISTENCY * radius {
        return Err(Error::invalid(format!(
            "radius {radius} is inconsistent with edge length {} for the {} (expected {expected})",
            curve.edge_length(),
            solid.kind
        )));
    }
    Ok(())
}

/// Sample abscissae `x_k = a (2k - N) / (2N)` for `k = 0..=N`.
pub fn edge_abscissae(edge_length: f64, samples: usize) -> impl Iterator<Item = f64> {
    let n = samples as f64;
    (0..=samples).map(move |k| edge_length * (2.0 * k as f64 - n) / (2.0 * n))
}

/// Unit vectors of one face boundary, `p * N` samples without the closing
/// repeat.
fn face_boundary_vectors(
    solid: &PlatonicSolid,
    face: usize,
    curve: &dyn ModuleCurve,
    radius: f64,
    samples: usize,
) -> Result<Vec<Vector3<f64>>> {
    let p = solid.p as usize;
    let a = curve.edge_length();
    let mut out = Vec::with_capacity(p * samples);
    for k in 0..p {
        let (start, end) = solid.face_edge(face, k);
        let frame = EdgeFrame::from_chord(&start, &end);
        for x in edge_abscissae(a, samples).take(samples) {
            out.push(frame.lift(x, curve.eval(x), radius)?);
        }
    }
    Ok(out)
}

/// Projects the curve along every edge of every face onto the sphere.
pub fn spherical_tiling(
    solid: &PlatonicSolid,
    curve: &dyn ModuleCurve,
    radius: f64,
    samples: usize,
) -> Result<SphericalTiling> {
    check_inputs(solid, curve, radius, samples)?;
    let faces = (0..solid.face_count)
        .into_par_iter()
        .map(|face| {
            let vecs = face_boundary_vectors(solid, face, curve, radius, samples)?;
            let mut points: Vec<SphericalPoint> =
                vecs.iter().map(SphericalPoint::from_unit_vector).collect();
            points.push(points[0]);
            Ok(FaceBoundary { face, points })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SphericalTiling {
        solid: solid.kind,
        radius,
        samples_per_edge: samples,
        faces,
    })
}

/// Planar outline of the module on face 0, projected about its centre.
pub fn planar_outline(
    solid: &PlatonicSolid,
    curve: &dyn ModuleCurve,
    radius: f64,
    samples: usize,
) -> Result<PlanarOutline> {
    check_inputs(solid, curve, radius, samples)?;
    let projector = AzimuthalProjector::new(&solid.face_anchor(0)?, radius)?;
    let vecs = face_boundary_vectors(solid, 0, curve, radius, samples)?;
    let points = vecs
        .iter()
        .map(|v| projector.project(v))
        .collect::<Result<Vec<_>>>()?;
    let p = solid.p as usize;
    // Edge 0 runs from points[0] to points[N]; its bisector is the limb axis.
    let (v0, v1) = (points[0], points[samples % points.len()]);
    let axis = (v0.y + v1.y).atan2(v0.x + v1.x);
    let half_span = v0.rotated(std::f64::consts::FRAC_PI_2 - axis).x.abs();
    Ok(PlanarOutline {
        solid: solid.kind,
        p,
        edge_length: curve.edge_length(),
        radius,
        amplitude: curve.amplitude(),
        curve_family: curve.family().to_string(),
        samples_per_edge: samples,
        points,
        b: 2.0 * half_span,
    })
}
