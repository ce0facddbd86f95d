use crate::projection::PlanarPoint;
use crate::topology::PlanarOutline;

/// Edge 0 of an outline in its own limb frame: rotated so the edge-midpoint
/// image sits on +y, ordered so `x` increases from `-b/2` to `b/2`.
#[derive(Debug, Clone)]
pub struct EdgeProfile {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub half_span: f64,
}

impl EdgeProfile {
    pub fn from_outline(outline: &PlanarOutline) -> Self {
        let mut pts = outline.edge_points(0);
        let (v0, v1) = (pts[0], pts[pts.len() - 1]);
        let axis = (v0.y + v1.y).atan2(v0.x + v1.x);
        let rot = std::f64::consts::FRAC_PI_2 - axis;
        pts.reverse();
        let rotated: Vec<PlanarPoint> = pts.iter().map(|p| p.rotated(rot)).collect();
        EdgeProfile {
            xs: rotated.iter().map(|p| p.x).collect(),
            ys: rotated.iter().map(|p| p.y).collect(),
            half_span: outline.b / 2.0,
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::sinusoidal_curve;
    use crate::solids::{PlatonicSolid, SolidKind};
    use crate::topology::planar_outline;

    #[test]
    fn profile_spans_symmetric_interval() {
        for kind in SolidKind::ALL {
            let s = PlatonicSolid::get(kind);
            let c = sinusoidal_curve(110.0, 0.4).unwrap();
            let o = planar_outline(s, &c, s.radius_for_edge(110.0), 64).unwrap();
            let prof = EdgeProfile::from_outline(&o);
            let hb = prof.half_span;
            assert!((prof.xs[0] + hb).abs() < 1e-9 * o.radius, "{kind}");
            assert!((prof.xs[64] - hb).abs() < 1e-9 * o.radius, "{kind}");
            // vertex images sit on the sector lines
            let cot = 1.0 / (std::f64::consts::PI / o.p as f64).tan();
            assert!((prof.ys[0] - cot * hb).abs() < 1e-9 * o.radius);
            assert!((prof.ys[64] - cot * hb).abs() < 1e-9 * o.radius);
            assert!(prof.xs[32].abs() < 1e-9 * o.radius);
        }
    }
}
