//! C ABI over the `spheretopo` design library.
//!
//! Every function returns an [`StStatus`]. On failure a message is kept per
//! thread and can be read with [`st_last_error_message`]. Designs are opaque
//! [`StDesign`] handles created by [`st_design_new`] and released by
//! [`st_design_free`]. Panics never cross the boundary; they surface as
//! [`StStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use spheretopo::cavity::cavity_width;
use spheretopo::curves::sinusoidal_curve;
use spheretopo::export::{check_precision, export_planar_svg, export_sphere_obj};
use spheretopo::metrics::{Evaluator, MetricsOptions, SlackSpec};
use spheretopo::optimize::optimize_amplitude;
use spheretopo::solids::{PlatonicSolid, SolidKind};
use spheretopo::topology::spherical_tiling;
use spheretopo::Error;

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DomainError = 3,
    Infeasible = 4,
    Io = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StSolid {
    Tetrahedron = 0,
    Cube = 1,
    Octahedron = 2,
    Dodecahedron = 3,
    Icosahedron = 4,
}

impl From<StSolid> for SolidKind {
    fn from(s: StSolid) -> Self {
        match s {
            StSolid::Tetrahedron => SolidKind::Tetrahedron,
            StSolid::Cube => SolidKind::Cube,
            StSolid::Octahedron => SolidKind::Octahedron,
            StSolid::Dodecahedron => SolidKind::Dodecahedron,
            StSolid::Icosahedron => SolidKind::Icosahedron,
        }
    }
}

/// Metrics of one design. Quantities that are undefined for an infeasible
/// design (`d_loco`, `j`) are NaN; an unbounded clearance is `+inf`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StMetrics {
    pub amplitude: f64,
    pub radius: f64,
    pub feasible: bool,
    pub a_loco: f64,
    pub d_loco: f64,
    pub clearance: f64,
    pub c_slack: f64,
    pub a_e: f64,
    pub a_s: f64,
    pub eps_intra: f64,
    pub g_e: f64,
    pub eps_inter: f64,
    pub j: f64,
    pub t_star: [f64; 2],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StOptimum {
    pub a_star: f64,
    pub j_star: f64,
    pub feasible_min: f64,
    pub feasible_max: f64,
}

/// Opaque design handle.
pub struct StDesign {
    solid: SolidKind,
    edge_length: f64,
    amplitude: f64,
    options: MetricsOptions,
    evaluator: Option<Evaluator>,
}

impl StDesign {
    fn evaluator(&mut self) -> Result<&Evaluator, Error> {
        if self.evaluator.is_none() {
            self.evaluator = Some(Evaluator::new(self.solid, self.edge_length, self.options)?);
        }
        Ok(self.evaluator.as_ref().expect("evaluator set above"))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> StStatus {
    match e {
        Error::Io { .. } => StStatus::Io,
        Error::NoFeasibleAmplitude { .. } => StStatus::Infeasible,
        Error::Domain(_)
        | Error::NegativeSectorArea { .. }
        | Error::EmptyOverlap
        | Error::CavityOverlap { .. } => StStatus::DomainError,
        _ => StStatus::InvalidArgument,
    }
}

enum Failure {
    Null(&'static str),
    Invalid(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> StStatus {
    let (status, msg) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            return StStatus::Ok;
        }
        Ok(Err(Failure::Null(what))) => (StStatus::NullPointer, format!("{what} is null")),
        Ok(Err(Failure::Invalid(m))) => (StStatus::InvalidArgument, m),
        Ok(Err(Failure::Lib(e))) => (status_of(&e), e.to_string()),
        Err(p) => {
            let m = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            (StStatus::Panic, format!("panic: {m}"))
        }
    };
    set_last_error(msg);
    status
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn deref_mut<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Null(what))
}

unsafe fn path_arg(p: *const c_char) -> Result<PathBuf, Failure> {
    if p.is_null() {
        return Err(Failure::Null("path"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map(PathBuf::from)
        .map_err(|_| Failure::Invalid("path is not valid UTF-8".into()))
}

fn opt(v: Option<f64>) -> f64 {
    v.unwrap_or(f64::NAN)
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn st_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Creates a design with default metric options.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn st_design_new(
    solid: StSolid,
    edge_length: f64,
    amplitude: f64,
    out: *mut *mut StDesign,
) -> StStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        // validates the amplitude and edge length
        sinusoidal_curve(edge_length, amplitude)?;
        let design = StDesign {
            solid: solid.into(),
            edge_length,
            amplitude,
            options: MetricsOptions::default(),
            evaluator: None,
        };
        *out = Box::into_raw(Box::new(design));
        Ok(())
    })
}

/// Releases a design. Null is ignored.
///
/// # Safety
/// `design` must be null or a handle from [`st_design_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn st_design_free(design: *mut StDesign) {
    if !design.is_null() {
        drop(Box::from_raw(design));
    }
}

/// # Safety
/// `design` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn st_design_set_amplitude(
    design: *mut StDesign,
    amplitude: f64,
) -> StStatus {
    guard(|| {
        let d = deref_mut(design, "design")?;
        sinusoidal_curve(d.edge_length, amplitude)?;
        d.amplitude = amplitude;
        Ok(())
    })
}

/// Sets the clearance slack in millimetres; a negative value restores the
/// automatic slack.
///
/// # Safety
/// `design` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn st_design_set_c_slack(design: *mut StDesign, c_slack: f64) -> StStatus {
    guard(|| {
        let d = deref_mut(design, "design")?;
        let spec = if c_slack.is_nan() {
            return Err(Failure::Invalid("c_slack is NaN".into()));
        } else if c_slack < 0.0 {
            SlackSpec::Auto
        } else {
            SlackSpec::Absolute(c_slack)
        };
        d.options.c_slack = spec;
        d.evaluator = None;
        Ok(())
    })
}

/// Sets the number of samples per edge curve.
///
/// # Safety
/// `design` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn st_design_set_samples(design: *mut StDesign, samples: usize) -> StStatus {
    guard(|| {
        let d = deref_mut(design, "design")?;
        let mut options = d.options;
        options.samples = samples;
        let ev = Evaluator::new(d.solid, d.edge_length, options)?;
        d.options = options;
        d.evaluator = Some(ev);
        Ok(())
    })
}

/// Sphere radius for the design's solid and edge length.
///
/// # Safety
/// `design` must be null or a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn st_design_radius(design: *const StDesign, out: *mut f64) -> StStatus {
    guard(|| {
        let d = deref(design, "design")?;
        let out = deref_mut(out, "out")?;
        *out = PlatonicSolid::get(d.solid).radius_for_edge(d.edge_length);
        Ok(())
    })
}

/// Evaluates every metric at the design's amplitude.
///
/// # Safety
/// `design` must be null or a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn st_design_evaluate(
    design: *mut StDesign,
    alpha: f64,
    out: *mut StMetrics,
) -> StStatus {
    guard(|| {
        let d = deref_mut(design, "design")?;
        let out = deref_mut(out, "out")?;
        let amplitude = d.amplitude;
        let r = d.evaluator()?.evaluate(amplitude, alpha)?;
        *out = StMetrics {
            amplitude: r.amplitude,
            radius: r.radius,
            feasible: r.feasible,
            a_loco: r.a_loco,
            d_loco: opt(r.d_loco),
            clearance: r.clearance.unwrap_or(f64::INFINITY),
            c_slack: r.c_slack,
            a_e: r.a_e,
            a_s: r.a_s,
            eps_intra: r.eps_intra,
            g_e: r.g_e,
            eps_inter: r.eps_inter,
            j: opt(r.j),
            t_star: r.t_star,
        };
        Ok(())
    })
}

/// Finds the amplitude minimizing `J` and stores it as the design amplitude.
///
/// # Safety
/// `design` must be null or a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn st_design_optimize(
    design: *mut StDesign,
    alpha: f64,
    resolution: f64,
    out: *mut StOptimum,
) -> StStatus {
    guard(|| {
        let d = deref_mut(design, "design")?;
        let out = deref_mut(out, "out")?;
        let r = optimize_amplitude(d.solid, d.edge_length, alpha, resolution, &d.options)?;
        d.amplitude = r.a_star;
        *out = StOptimum {
            a_star: r.a_star,
            j_star: r.j_star,
            feasible_min: r.feasible_range[0],
            feasible_max: r.feasible_range[1],
        };
        Ok(())
    })
}

/// Writes the planar outline as SVG.
///
/// # Safety
/// `design` must be null or a live handle; `path` null or a NUL-terminated
/// UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn st_design_export_svg(
    design: *mut StDesign,
    path: *const c_char,
    precision: usize,
) -> StStatus {
    guard(|| {
        let d = deref_mut(design, "design")?;
        let path = path_arg(path)?;
        check_precision(precision)?;
        let amplitude = d.amplitude;
        let outline = d.evaluator()?.outline(amplitude)?;
        export_planar_svg(&outline, &path, precision)?;
        Ok(())
    })
}

/// Writes the spherical tiling as OBJ polylines, with triangulated module
/// patches when `patch` is set.
///
/// # Safety
/// `design` must be null or a live handle; `path` null or a NUL-terminated
/// UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn st_design_export_obj(
    design: *const StDesign,
    path: *const c_char,
    precision: usize,
    patch: bool,
) -> StStatus {
    guard(|| {
        let d = deref(design, "design")?;
        let path = path_arg(path)?;
        check_precision(precision)?;
        let solid = PlatonicSolid::get(d.solid);
        let curve = sinusoidal_curve(d.edge_length, d.amplitude)?;
        let radius = solid.radius_for_edge(d.edge_length);
        let tiling = spherical_tiling(solid, &curve, radius, d.options.samples)?;
        export_sphere_obj(&tiling, &path, precision, patch)?;
        Ok(())
    })
}

/// Width of each of `count` cavities that curls a limb of chord
/// `limb_length` to radius `curl_radius` with cavity depth `height`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn st_cavity_width(
    limb_length: f64,
    curl_radius: f64,
    height: f64,
    count: usize,
    out: *mut f64,
) -> StStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        *out = cavity_width(limb_length, curl_radius, height, count)?;
        Ok(())
    })
}
