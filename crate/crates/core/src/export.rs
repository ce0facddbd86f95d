//! File writers for outlines, tilings, reports and optimization traces.
//!
//! Numbers are printed in fixed notation with a caller-chosen number of
//! decimals, so output never depends on locale and identical inputs give
//! byte-identical files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cavity::CavitySpec;
use crate::error::{Error, Result};
use crate::optimize::{OptimizationResult, TracePoint};
use crate::projection::{AzimuthalProjector, PlanarPoint};
use crate::solids::PlatonicSolid;
use crate::topology::{PlanarOutline, SphericalTiling};

pub const DEFAULT_PRECISION: usize = 6;
pub const MIN_PRECISION: usize = 3;
pub const MAX_PRECISION: usize = 12;
/// Margin around SVG drawings, as a fraction of the larger bounding-box side.
pub const SVG_MARGIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExportTarget {
    PlanarSvg,
    SphereObj,
    ReportJson,
    TraceCsv,
}

/// Destination and formatting of one export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportJob {
    pub target: ExportTarget,
    pub path: PathBuf,
    pub precision: usize,
}

impl ExportJob {
    pub fn new(target: ExportTarget, path: impl Into<PathBuf>, precision: usize) -> Result<Self> {
        check_precision(precision)?;
        Ok(ExportJob {
            target,
            path: path.into(),
            precision,
        })
    }
}

pub fn check_precision(precision: usize) -> Result<()> {
    if (MIN_PRECISION..=MAX_PRECISION).contains(&precision) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}] decimal places, got {precision}"
        )))
    }
}

/// Fixed-notation number; a value that rounds to zero prints without a sign.
pub fn fmt_num(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$}");
    if s.starts_with('-') && s[1..].bytes().all(|c| c == b'0' || c == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

struct ViewBox {
    x: f64,
    y: f64,
    w: f64,
    h: f64,
}

/// Bounds of the y-flipped points, grown by [`SVG_MARGIN`] on each side.
fn view_box<'a>(pts: impl Iterator<Item = &'a PlanarPoint>) -> ViewBox {
    let (mut x0, mut y0, mut x1, mut y1) = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(-p.y);
        y1 = y1.max(-p.y);
    }
    let margin = SVG_MARGIN * (x1 - x0).max(y1 - y0);
    ViewBox {
        x: x0 - margin,
        y: y0 - margin,
        w: x1 - x0 + 2.0 * margin,
        h: y1 - y0 + 2.0 * margin,
    }
}

fn svg_header(out: &mut String, comment: &str, vb: &ViewBox, precision: usize) {
    let f = |v| fmt_num(v, precision);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(out, "<!-- {comment} -->");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}mm\" height=\"{h}mm\" viewBox=\"{x} {y} {w} {h}\">",
        x = f(vb.x),
        y = f(vb.y),
        w = f(vb.w),
        h = f(vb.h),
    );
}

/// Closed absolute path through `pts`, y flipped to SVG's downward axis.
fn svg_path(out: &mut String, pts: &[PlanarPoint], style: &str, precision: usize) {
    out.push_str("  <path d=\"");
    for (i, p) in pts.iter().enumerate() {
        let cmd = if i == 0 { "M" } else { " L" };
        let _ = write!(
            out,
            "{cmd} {} {}",
            fmt_num(p.x, precision),
            fmt_num(-p.y, precision)
        );
    }
    let _ = writeln!(out, " Z\" {style}/>");
}

const STROKE: &str = "fill=\"none\" stroke=\"#000000\" stroke-width=\"0.2\"";

/// SVG document with the outline as one closed path in millimetres.
pub fn planar_svg_string(outline: &PlanarOutline, precision: usize) -> Result<String> {
    check_precision(precision)?;
    let amplitude = outline
        .amplitude
        .map_or_else(|| outline.curve_family.clone(), |a| fmt_num(a, precision));
    let comment = format!(
        "spheretopo planar module: solid={} a={} R={} A={} N={} units=mm",
        outline.solid,
        fmt_num(outline.edge_length, precision),
        fmt_num(outline.radius, precision),
        amplitude,
        outline.samples_per_edge
    );
    let mut out = String::new();
    svg_header(
        &mut out,
        &comment,
        &view_box(outline.points.iter()),
        precision,
    );
    svg_path(&mut out, &outline.points, STROKE, precision);
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn export_planar_svg(outline: &PlanarOutline, path: &Path, precision: usize) -> Result<()> {
    write_file(path, &planar_svg_string(outline, precision)?)
}

/// Side profile of a limb: the limb rectangle and every cavity polygon.
pub fn cavity_svg_string(spec: &CavitySpec, precision: usize) -> Result<String> {
    check_precision(precision)?;
    let p = PlanarPoint::new;
    let limb = [
        p(0.0, 0.0),
        p(spec.limb_length, 0.0),
        p(spec.limb_length, spec.limb_height),
        p(0.0, spec.limb_height),
    ];
    let comment = format!(
        "spheretopo limb cavities: profile={} m={} w={} h={} l={} L={} pitch={} units=mm",
        spec.profile,
        spec.count,
        fmt_num(spec.width, precision),
        fmt_num(spec.height, precision),
        fmt_num(spec.limb_height, precision),
        fmt_num(spec.limb_length, precision),
        fmt_num(spec.pitch, precision)
    );
    let mut out = String::new();
    svg_header(&mut out, &comment, &view_box(limb.iter()), precision);
    svg_path(&mut out, &limb, STROKE, precision);
    for cavity in &spec.cavities {
        svg_path(
            &mut out,
            cavity,
            "fill=\"#cccccc\" stroke=\"#000000\" stroke-width=\"0.1\"",
            precision,
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn export_cavity_svg(spec: &CavitySpec, path: &Path, precision: usize) -> Result<()> {
    write_file(path, &cavity_svg_string(spec, precision)?)
}

/// Wavefront OBJ with one group and one closed polyline per module. With
/// `patch`, each module is also triangulated from its boundary samples.
pub fn sphere_obj_string(
    tiling: &SphericalTiling,
    precision: usize,
    patch: bool,
) -> Result<String> {
    check_precision(precision)?;
    let solid = PlatonicSolid::get(tiling.solid);
    let f = |v| fmt_num(v, precision);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# spheretopo spherical tiling: solid={} R={} N={} units=mm",
        tiling.solid,
        f(tiling.radius),
        tiling.samples_per_edge
    );
    let mut base = 1usize;
    for face in &tiling.faces {
        // the stored boundary repeats its first point; emit it once
        let ring = &face.points[..face.points.len() - 1];
        let _ = writeln!(out, "g module_{}", face.face);
        for sp in ring {
            let v = sp.to_unit_vector() * tiling.radius;
            let _ = writeln!(out, "v {} {} {}", f(v.x), f(v.y), f(v.z));
        }
        out.push('l');
        for i in 0..ring.len() {
            let _ = write!(out, " {}", base + i);
        }
        let _ = writeln!(out, " {base}");
        if patch {
            let proj = AzimuthalProjector::new(&solid.face_anchor(face.face)?, tiling.radius)?;
            let flat = ring
                .iter()
                .map(|sp| proj.project(&sp.to_unit_vector()))
                .collect::<Result<Vec<_>>>()?;
            for [a, b, c] in ear_clip(&flat) {
                let _ = writeln!(out, "f {} {} {}", base + a, base + b, base + c);
            }
        }
        base += ring.len();
    }
    Ok(out)
}

pub fn export_sphere_obj(
    tiling: &SphericalTiling,
    path: &Path,
    precision: usize,
    patch: bool,
) -> Result<()> {
    write_file(path, &sphere_obj_string(tiling, precision, patch)?)
}

/// Pretty JSON with a trailing newline; keys follow struct field order.
pub fn report_json_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn export_report_json<T: Serialize + ?Sized>(value: &T, path: &Path) -> Result<()> {
    write_file(path, &report_json_string(value)?)
}

pub const TRACE_HEADER: &str = "A,J,eps_inter,D_loco";

/// One row per grid amplitude; `J` and `D_loco` are blank where infeasible.
pub fn trace_csv_string(trace: &[TracePoint], precision: usize) -> Result<String> {
    check_precision(precision)?;
    let opt = |v: Option<f64>| v.map_or_else(String::new, |v| fmt_num(v, precision));
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for t in trace {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            fmt_num(t.amplitude, precision),
            opt(t.j),
            fmt_num(t.eps_inter, precision),
            opt(t.d_loco)
        );
    }
    Ok(out)
}

pub fn export_trace_csv(result: &OptimizationResult, path: &Path, precision: usize) -> Result<()> {
    write_file(path, &trace_csv_string(&result.trace, precision)?)
}

/// Ear-clipping triangulation of a simple counterclockwise polygon. When no
/// strict ear exists (degenerate or self-touching input) the least reflex
/// vertex is clipped so the result always has `n - 2` triangles.
pub fn ear_clip(poly: &[PlanarPoint]) -> Vec<[usize; 3]> {
    let n = poly.len();
    if n < 3 {
        return Vec::new();
    }
    let cross = |a: usize, b: usize, c: usize| {
        let (pa, pb, pc) = (poly[a], poly[b], poly[c]);
        (pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x)
    };
    let inside = |p: usize, a: usize, b: usize, c: usize| {
        cross(a, b, p) >= 0.0 && cross(b, c, p) >= 0.0 && cross(c, a, p) >= 0.0
    };

    let mut prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    let mut next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut alive = vec![true; n];
    let mut reflex: Vec<usize> = (0..n)
        .filter(|&i| cross(prev[i], i, next[i]) <= 0.0)
        .collect();
    let mut tris = Vec::with_capacity(n - 2);
    let mut remaining = n;
    let mut cur = 0;
    let mut misses = 0;

    while remaining > 3 {
        let (a, b, c) = (prev[cur], cur, next[cur]);
        let is_ear = cross(a, b, c) > 0.0
            && reflex
                .iter()
                .all(|&r| !alive[r] || r == a || r == b || r == c || !inside(r, a, b, c));
        let forced = misses >= remaining;
        if is_ear || forced {
            let clip = if forced {
                let mut best = cur;
                let mut v = next[cur];
                while v != cur {
                    if cross(prev[v], v, next[v]) > cross(prev[best], best, next[best]) {
                        best = v;
                    }
                    v = next[v];
                }
                best
            } else {
                b
            };
            let (a, c) = (prev[clip], next[clip]);
            tris.push([a, clip, c]);
            alive[clip] = false;
            next[a] = c;
            prev[c] = a;
            remaining -= 1;
            misses = 0;
            reflex.retain(|&r| alive[r] && cross(prev[r], r, next[r]) <= 0.0);
            cur = a;
        } else {
            misses += 1;
            cur = next[cur];
        }
    }
    tris.push([prev[cur], cur, next[cur]]);
    tris
}
