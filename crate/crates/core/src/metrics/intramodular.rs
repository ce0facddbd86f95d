//! Planar versus spherical module area.

use std::f64::consts::PI;

use serde::Serialize;

use super::profile::EdgeProfile;
use crate::error::{Error, Result};
use crate::numeric::polyline_y_dx;
use crate::topology::PlanarOutline;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Intramodular {
    /// Planar module area, `p` times the limb sector area.
    pub a_e: f64,
    /// Spherical module area, `4 pi R^2 / F`.
    pub a_s: f64,
    pub eps_intra: f64,
    /// Difference between the extrapolated and plain trapezoid `A_E`.
    pub quadrature_error: f64,
}

/// Area between one limb curve and the two sector lines through its vertex
/// images, from a trapezoid on every `stride`-th sample.
fn sector_area(prof: &EdgeProfile, cot: f64, stride: usize) -> f64 {
    polyline_y_dx(&prof.xs, &prof.ys, stride) - cot * prof.half_span * prof.half_span
}

pub fn intramodular_distortion(outline: &PlanarOutline) -> Result<Intramodular> {
    let prof = EdgeProfile::from_outline(outline);
    let p = outline.p as f64;
    let cot = 1.0 / (PI / p).tan();
    let fine = sector_area(&prof, cot, 1);
    let n = outline.samples_per_edge;
    let sector = if n % 2 == 0 {
        (4.0 * fine - sector_area(&prof, cot, 2)) / 3.0
    } else {
        fine
    };
    if sector < 0.0 {
        return Err(Error::NegativeSectorArea { area: sector });
    }
    let a_e = p * sector;
    let faces = outline.solid.face_count() as f64;
    let a_s = 4.0 * PI * outline.radius * outline.radius / faces;
    Ok(Intramodular {
        a_e,
        a_s,
        eps_intra: (a_e - a_s) / a_e,
        quadrature_error: (a_e - p * fine).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::sinusoidal_curve;
    use crate::solids::{PlatonicSolid, SolidKind};
    use crate::topology::planar_outline;

    fn outline(kind: SolidKind, a: f64, amp: f64, n: usize) -> PlanarOutline {
        let s = PlatonicSolid::get(kind);
        let c = sinusoidal_curve(a, amp).unwrap();
        planar_outline(s, &c, s.radius_for_edge(a), n).unwrap()
    }

    #[test]
    fn cube_spherical_area() {
        let r = intramodular_distortion(&outline(SolidKind::Cube, 1.0, 0.5, 64)).unwrap();
        assert!((r.a_s - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn planar_area_matches_shoelace() {
        for kind in SolidKind::ALL {
            let o = outline(kind, 110.0, 0.7, 512);
            let r = intramodular_distortion(&o).unwrap();
            assert!((r.a_e - o.area()).abs() < 1e-4 * r.a_e, "{kind}");
            assert!(r.quadrature_error < 1e-4 * r.a_e);
        }
    }

    #[test]
    fn extrapolation_converges() {
        let coarse = intramodular_distortion(&outline(SolidKind::Cube, 1.0, 0.86, 128)).unwrap();
        let fine = intramodular_distortion(&outline(SolidKind::Cube, 1.0, 0.86, 1024)).unwrap();
        assert!((coarse.a_e - fine.a_e).abs() < 1e-7 * fine.a_e);
    }

    #[test]
    fn planar_area_exceeds_spherical() {
        // the equidistant projection stretches areas away from the centre
        for kind in SolidKind::ALL {
            let r = intramodular_distortion(&outline(kind, 1.0, 0.3, 128)).unwrap();
            assert!(
                r.eps_intra > 0.0 && r.eps_intra < 1.0,
                "{kind}: {}",
                r.eps_intra
            );
        }
    }

    #[test]
    fn scale_invariant() {
        let base = intramodular_distortion(&outline(SolidKind::Octahedron, 1.0, 0.6, 128)).unwrap();
        for mu in [0.5, 3.0] {
            let s = intramodular_distortion(&outline(SolidKind::Octahedron, mu, 0.6, 128)).unwrap();
            assert!((s.eps_intra - base.eps_intra).abs() < 1e-12);
            assert!((s.a_e - mu * mu * base.a_e).abs() < 1e-9 * s.a_e);
        }
    }
}
