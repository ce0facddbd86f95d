//! The five platonic solids.
//!
//! Each solid carries its Schläfli pair, the closed-form dihedral angle and
//! circumradius ratio, and a unit-sphere embedding in a canonical orientation:
//! face 0 is centred on (lat 0, lon 0) and the midpoint of its first edge lies
//! due east of that centre. Faces are listed counterclockwise as seen from
//! outside the solid.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used when classifying vertices as coplanar during face discovery.
const COPLANAR_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolidKind {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl SolidKind {
    pub const ALL: [SolidKind; 5] = [
        SolidKind::Tetrahedron,
        SolidKind::Cube,
        SolidKind::Octahedron,
        SolidKind::Dodecahedron,
        SolidKind::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "tetrahedron",
            SolidKind::Cube => "cube",
            SolidKind::Octahedron => "octahedron",
            SolidKind::Dodecahedron => "dodecahedron",
            SolidKind::Icosahedron => "icosahedron",
        }
    }

    /// Schläfli pair `(p, q)`: edges per face, faces meeting at a vertex.
    pub fn schlafli(self) -> (u32, u32) {
        match self {
            SolidKind::Tetrahedron => (3, 3),
            SolidKind::Cube => (4, 3),
            SolidKind::Octahedron => (3, 4),
            SolidKind::Dodecahedron => (5, 3),
            SolidKind::Icosahedron => (3, 5),
        }
    }

    pub fn face_count(self) -> usize {
        match self {
            SolidKind::Tetrahedron => 4,
            SolidKind::Cube => 6,
            SolidKind::Octahedron => 8,
            SolidKind::Dodecahedron => 12,
            SolidKind::Icosahedron => 20,
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolidKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        SolidKind::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .ok_or_else(|| Error::UnknownSolid(s.to_string()))
    }
}

/// A direction on the sphere together with a local heading.
///
/// `bearing` is the direction of the local curve x-axis, measured
/// counterclockwise from local east. For face anchors it is 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalAnchor {
    pub phi: f64,
    pub lambda: f64,
    pub bearing: f64,
}

impl SphericalAnchor {
    pub fn new(phi: f64, lambda: f64, bearing: f64) -> Self {
        SphericalAnchor {
            phi,
            lambda: wrap_angle(lambda),
            bearing: wrap_angle(bearing),
        }
    }
}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut w = a.rem_euclid(2.0 * PI);
    if w > PI {
        w -= 2.0 * PI;
    }
    w
}

/// Unit-sphere embedding of a solid.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub vertices: Vec<Vector3<f64>>,
    /// Vertex indices of each face, counterclockwise seen from outside.
    pub faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct PlatonicSolid {
    pub kind: SolidKind,
    pub p: u32,
    pub q: u32,
    pub face_count: usize,
    /// Dihedral angle in radians.
    pub dihedral: f64,
    /// Circumradius divided by edge length.
    pub circumradius_ratio: f64,
    pub embedding: Embedding,
}

/// Closed-form dihedral angle and circumradius ratio for a Schläfli pair.
pub fn dihedral_and_ratio(p: u32, q: u32) -> (f64, f64) {
    let (p, q) = (p as f64, q as f64);
    let theta = 2.0 * ((PI / q).cos() / (PI / p).sin()).asin();
    let ratio = (PI / q).sin() / (2.0 * (PI / p).sin()) / (theta / 2.0).cos();
    (theta, ratio)
}

/// Returns the fully populated solid for `kind`.
pub fn solid_params(kind: SolidKind) -> PlatonicSolid {
    PlatonicSolid::get(kind).clone()
}

impl PlatonicSolid {
    /// Shared, lazily built instance for `kind`.
    pub fn get(kind: SolidKind) -> &'static PlatonicSolid {
        static TABLE: OnceLock<Vec<PlatonicSolid>> = OnceLock::new();
        let table = TABLE.get_or_init(|| SolidKind::ALL.iter().map(|&k| Self::build(k)).collect());
        &table[kind as usize]
    }

    fn build(kind: SolidKind) -> PlatonicSolid {
        let (p, q) = kind.schlafli();
        let (dihedral, circumradius_ratio) = dihedral_and_ratio(p, q);
        let raw = standard_vertices(kind);
        let faces = discover_faces(&raw, p as usize);
        let embedding = canonicalize(raw, faces);
        debug_assert_eq!(embedding.faces.len(), kind.face_count());
        PlatonicSolid {
            kind,
            p,
            q,
            face_count: kind.face_count(),
            dihedral,
            circumradius_ratio,
            embedding,
        }
    }

    /// Edge length of the unit-sphere embedding (1 / circumradius ratio).
    pub fn unit_edge_length(&self) -> f64 {
        let f = &self.embedding.faces[0];
        (self.embedding.vertices[f[1]] - self.embedding.vertices[f[0]]).norm()
    }

    pub fn radius_for_edge(&self, edge_length: f64) -> f64 {
        edge_length * self.circumradius_ratio
    }

    fn check_face(&self, face: usize) -> Result<()> {
        if face >= self.face_count {
            return Err(Error::IndexOutOfRange {
                what: "face",
                index: face,
                len: self.face_count,
            });
        }
        Ok(())
    }

    /// Unit outward direction through the centre of `face`.
    pub fn face_center(&self, face: usize) -> Result<Vector3<f64>> {
        self.check_face(face)?;
        Ok(self.face_center_unchecked(face))
    }

    pub(crate) fn face_center_unchecked(&self, face: usize) -> Vector3<f64> {
        let verts = &self.embedding.vertices;
        let sum: Vector3<f64> = self.embedding.faces[face].iter().map(|&i| verts[i]).sum();
        sum.normalize()
    }

    /// Endpoints `(start, end)` of edge `k` of `face`, following the face's
    /// counterclockwise order.
    pub fn face_edge(&self, face: usize, k: usize) -> (Vector3<f64>, Vector3<f64>) {
        let f = &self.embedding.faces[face];
        let p = f.len();
        (
            self.embedding.vertices[f[k % p]],
            self.embedding.vertices[f[(k + 1) % p]],
        )
    }

    /// Central angle between a face centre and one of its edge midpoints.
    pub fn face_to_edge_angle(&self) -> f64 {
        let c = self.face_center_unchecked(0);
        let (a, b) = self.face_edge(0, 0);
        angle_between(&c, &(a + b))
    }

    /// Central angle between a face centre and one of its vertices.
    pub fn face_to_vertex_angle(&self) -> f64 {
        let c = self.face_center_unchecked(0);
        let (a, _) = self.face_edge(0, 0);
        angle_between(&c, &a)
    }

    pub fn face_anchor(&self, face: usize) -> Result<SphericalAnchor> {
        let c = self.face_center(face)?;
        let (phi, lambda) = lat_lon(&c);
        Ok(SphericalAnchor::new(phi, lambda, 0.0))
    }

    /// One anchor per edge of `face`: the radial direction through the edge
    /// midpoint, with the bearing of the edge (start to end) at that point.
    pub fn edge_anchors_of_face(&self, face: usize) -> Result<Vec<SphericalAnchor>> {
        self.check_face(face)?;
        Ok((0..self.p as usize)
            .map(|k| {
                let (a, b) = self.face_edge(face, k);
                let mid = (a + b).normalize();
                let (phi, lambda) = lat_lon(&mid);
                let (east, north) = local_east_north(phi, lambda);
                let dir = b - a;
                let bearing = dir.dot(&north).atan2(dir.dot(&east));
                SphericalAnchor::new(phi, lambda, bearing)
            })
            .collect())
    }
}

pub(crate) fn angle_between(a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// Latitude/longitude of a (not necessarily unit) direction. Longitude is 0 at
/// the poles so that the local frame stays reproducible.
pub(crate) fn lat_lon(v: &Vector3<f64>) -> (f64, f64) {
    let u = v.normalize();
    let horiz = u.x.hypot(u.y);
    let phi = u.z.atan2(horiz);
    let lambda = if horiz < 1e-12 {
        0.0
    } else {
        wrap_angle(u.y.atan2(u.x))
    };
    (phi, lambda)
}

pub(crate) fn unit_from_lat_lon(phi: f64, lambda: f64) -> Vector3<f64> {
    let (sp, cp) = phi.sin_cos();
    let (sl, cl) = lambda.sin_cos();
    Vector3::new(cp * cl, cp * sl, sp)
}

/// Local east and north unit vectors at `(phi, lambda)`.
pub(crate) fn local_east_north(phi: f64, lambda: f64) -> (Vector3<f64>, Vector3<f64>) {
    let (sp, cp) = phi.sin_cos();
    let (sl, cl) = lambda.sin_cos();
    (
        Vector3::new(-sl, cl, 0.0),
        Vector3::new(-sp * cl, -sp * sl, cp),
    )
}

fn standard_vertices(kind: SolidKind) -> Vec<Vector3<f64>> {
    let g = (1.0 + 5f64.sqrt()) / 2.0;
    let signs = [-1.0, 1.0];
    let mut v = Vec::new();
    match kind {
        SolidKind::Tetrahedron => {
            v.extend([
                Vector3::new(1.0, 1.0, 1.0),
                Vector3::new(1.0, -1.0, -1.0),
                Vector3::new(-1.0, 1.0, -1.0),
                Vector3::new(-1.0, -1.0, 1.0),
            ]);
        }
        SolidKind::Cube => {
            for x in signs {
                for y in signs {
                    for z in signs {
                        v.push(Vector3::new(x, y, z));
                    }
                }
            }
        }
        SolidKind::Octahedron => {
            for s in signs {
                v.push(Vector3::new(s, 0.0, 0.0));
                v.push(Vector3::new(0.0, s, 0.0));
                v.push(Vector3::new(0.0, 0.0, s));
            }
        }
        SolidKind::Icosahedron => {
            for a in signs {
                for b in signs {
                    v.push(Vector3::new(0.0, a, b * g));
                    v.push(Vector3::new(a, b * g, 0.0));
                    v.push(Vector3::new(b * g, 0.0, a));
                }
            }
        }
        SolidKind::Dodecahedron => {
            for x in signs {
                for y in signs {
                    for z in signs {
                        v.push(Vector3::new(x, y, z));
                    }
                }
            }
            for a in signs {
                for b in signs {
                    v.push(Vector3::new(0.0, a / g, b * g));
                    v.push(Vector3::new(a / g, b * g, 0.0));
                    v.push(Vector3::new(b * g, 0.0, a / g));
                }
            }
        }
    }
    v.into_iter().map(|p| p.normalize()).collect()
}

/// Finds the `p`-gon faces of a convex vertex set: supporting planes that
/// contain exactly `p` vertices. Faces come back sorted and wound
/// counterclockwise about their outward normal, starting at the lowest index.
fn discover_faces(verts: &[Vector3<f64>], p: usize) -> Vec<Vec<usize>> {
    let n = verts.len();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let normal = (verts[j] - verts[i]).cross(&(verts[k] - verts[i]));
                if normal.norm() < COPLANAR_EPS {
                    continue;
                }
                let mut normal = normal.normalize();
                if normal.dot(&verts[i]) < 0.0 {
                    normal = -normal;
                }
                let offset = normal.dot(&verts[i]);
                let mut on_plane = Vec::new();
                let mut supporting = true;
                for (idx, v) in verts.iter().enumerate() {
                    let d = normal.dot(v) - offset;
                    if d > COPLANAR_EPS {
                        supporting = false;
                        break;
                    }
                    if d.abs() <= COPLANAR_EPS {
                        on_plane.push(idx);
                    }
                }
                if supporting && on_plane.len() == p && !faces.contains(&on_plane) {
                    faces.push(on_plane);
                }
            }
        }
    }
    faces.sort();
    faces.into_iter().map(|f| wind_ccw(verts, f)).collect()
}

fn wind_ccw(verts: &[Vector3<f64>], face: Vec<usize>) -> Vec<usize> {
    let center: Vector3<f64> =
        face.iter().map(|&i| verts[i]).sum::<Vector3<f64>>() / face.len() as f64;
    let normal = center.normalize();
    let u = (verts[face[0]] - center).normalize();
    let w = normal.cross(&u);
    let mut ordered = face;
    ordered.sort_by(|&a, &b| {
        let ang = |i: usize| {
            let d = verts[i] - center;
            d.dot(&w).atan2(d.dot(&u)).rem_euclid(2.0 * PI)
        };
        ang(a).total_cmp(&ang(b))
    });
    ordered
}

/// Rotates the embedding so that face 0 is centred on +x and the midpoint of
/// its first edge lies in the +y half of the equator.
fn canonicalize(verts: Vec<Vector3<f64>>, faces: Vec<Vec<usize>>) -> Embedding {
    let f0 = &faces[0];
    let center: Vector3<f64> = f0
        .iter()
        .map(|&i| verts[i])
        .sum::<Vector3<f64>>()
        .normalize();
    let mid = verts[f0[0]] + verts[f0[1]];
    let e1 = center;
    let e2 = (mid - e1 * mid.dot(&e1)).normalize();
    let e3 = e1.cross(&e2);
    let rot = Matrix3::from_rows(&[e1.transpose(), e2.transpose(), e3.transpose()]);
    let vertices = verts.iter().map(|v| (rot * v).normalize()).collect();
    Embedding { vertices, faces }
}
