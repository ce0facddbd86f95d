//! Command-line front end.
//!
//! Results go to standard output (as a table or JSON); progress notes and
//! errors go to standard error. Exit status is 0 on success, 2 for invalid
//! input or unwritable paths and 3 when a well-formed design has no solution.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cavity::{cavity_cross_section, cavity_width, CavityProfile, CavityRequest, CavitySpec};
use crate::config::{per_solid_path, AmplitudeSetting, DesignConfig, SolidSelection};
use crate::curves::sinusoidal_curve;
use crate::error::{Error, Result};
use crate::export::{
    check_precision, export_cavity_svg, export_planar_svg, export_report_json, export_sphere_obj,
    export_trace_csv, fmt_num, ExportTarget,
};
use crate::metrics::{
    check_alpha, DistortionReport, Evaluator, FeasibilityRule, Integrand, SlackSpec,
};
use crate::optimize::{optimize_amplitude, OptimizationResult};
use crate::solids::{PlatonicSolid, SolidKind};
use crate::topology::{planar_outline, spherical_tiling};

#[derive(Debug, Parser)]
#[command(
    name = "spheretopo",
    version,
    about = "Design sphere-reconfigurable modular robot modules"
)]
pub struct Cli {
    /// JSON design config; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Write the effective config (file plus flags) to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    pub write_config: Option<PathBuf>,
    /// Output format for results on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Directory for relative output paths (default: $SPHERETOPO_OUT_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Platonic solid catalogue.
    Solids {
        #[command(subcommand)]
        action: Option<SolidsAction>,
        /// Edge length used for the radius column, mm.
        #[arg(short = 'a', long)]
        edge_length: Option<f64>,
    },
    /// Spherical tiling and planar module outline.
    Topology {
        #[command(flatten)]
        design: DesignArgs,
        /// Planar module SVG.
        #[arg(long, value_name = "PATH")]
        planar: Option<PathBuf>,
        /// Spherical tiling OBJ.
        #[arg(long, value_name = "PATH")]
        sphere: Option<PathBuf>,
        /// Triangulate each module patch in the OBJ.
        #[arg(long)]
        patch: bool,
    },
    /// Distortion and locomotion metrics.
    Metrics {
        #[command(flatten)]
        design: DesignArgs,
        /// JSON report.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Amplitude optimization.
    Optimize {
        #[command(flatten)]
        design: DesignArgs,
        /// CSV trace of the amplitude scan.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
        /// JSON report.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Limb cavity layout.
    Cavity {
        #[command(flatten)]
        design: DesignArgs,
        #[command(flatten)]
        cavity: CavityArgs,
        /// SVG of the limb side profile.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// JSON report.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Write one artifact.
    Export {
        #[command(flatten)]
        design: DesignArgs,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(short, long, value_name = "PATH")]
        output: PathBuf,
        /// Triangulate each module patch (sphere-obj only).
        #[arg(long)]
        patch: bool,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum SolidsAction {
    /// Dihedral angle and radius ratio of every solid.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    PlanarSvg,
    SphereObj,
    ReportJson,
    TraceCsv,
}

impl From<TargetArg> for ExportTarget {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::PlanarSvg => ExportTarget::PlanarSvg,
            TargetArg::SphereObj => ExportTarget::SphereObj,
            TargetArg::ReportJson => ExportTarget::ReportJson,
            TargetArg::TraceCsv => ExportTarget::TraceCsv,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct DesignArgs {
    /// Solid name or `all`.
    #[arg(long)]
    pub solid: Option<SolidSelection>,
    /// Edge length a, mm.
    #[arg(short = 'a', long)]
    pub edge_length: Option<f64>,
    /// Curve amplitude in [0, 1], or `optimize`.
    #[arg(short = 'A', long)]
    pub amplitude: Option<AmplitudeSetting>,
    /// Weight of inter-modular distortion in the objective.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Minimum limb clearance in mm, or `auto`.
    #[arg(long)]
    pub c_slack: Option<SlackSpec>,
    /// Feasibility rule: clearance or printed_residual.
    #[arg(long)]
    pub rule: Option<FeasibilityRule>,
    /// Overlap integrand: squared or absolute.
    #[arg(long)]
    pub integrand: Option<Integrand>,
    /// Shorthand for `--integrand absolute`.
    #[arg(long, conflicts_with = "integrand")]
    pub abs_integrand: bool,
    /// Samples per edge.
    #[arg(short = 'N', long)]
    pub samples: Option<usize>,
    /// Amplitude grid step of the optimizer.
    #[arg(long)]
    pub resolution: Option<f64>,
    /// Decimal places in exported files.
    #[arg(long)]
    pub precision: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CavityArgs {
    /// Cavity shape: triangle, rectangle, inward_trapezoid, outward_trapezoid or isosceles_trapezoid.
    #[arg(long)]
    pub profile: Option<CavityProfile>,
    /// Number of cavities m.
    #[arg(short = 'm', long)]
    pub count: Option<usize>,
    /// Cavity depth h, mm.
    #[arg(long)]
    pub cavity_height: Option<f64>,
    /// Limb thickness l, mm.
    #[arg(long)]
    pub limb_height: Option<f64>,
    /// Angle between trapezoid legs and the cavity floor, degrees.
    #[arg(long)]
    pub trapezoid_angle: Option<f64>,
    /// Target curl radius r, mm (default: sphere radius).
    #[arg(long)]
    pub curl_radius: Option<f64>,
    /// Limb chord b, mm (default: edge length).
    #[arg(long)]
    pub limb_length: Option<f64>,
    /// Explicit cavity width w, mm.
    #[arg(long)]
    pub width: Option<f64>,
    /// Centre-to-centre cavity spacing, mm.
    #[arg(long)]
    pub pitch: Option<f64>,
}

impl DesignArgs {
    fn apply(&self, cfg: &mut DesignConfig) {
        macro_rules! set {
            ($($field:ident),*) => { $( if let Some(v) = self.$field.clone() { cfg.$field = v; } )* };
        }
        set!(
            solid,
            edge_length,
            amplitude,
            alpha,
            c_slack,
            rule,
            integrand,
            samples,
            resolution,
            precision
        );
        if self.abs_integrand {
            cfg.integrand = Integrand::Absolute;
        }
    }
}

impl CavityArgs {
    fn apply(&self, cfg: &mut DesignConfig) {
        let c = &mut cfg.cavity;
        if let Some(v) = self.profile {
            c.profile = v;
        }
        if let Some(v) = self.count {
            c.count = v;
        }
        if let Some(v) = self.cavity_height {
            c.height = v;
        }
        if let Some(v) = self.limb_height {
            c.limb_height = v;
        }
        if let Some(v) = self.trapezoid_angle {
            c.trapezoid_angle = v;
        }
        c.curl_radius = self.curl_radius.or(c.curl_radius);
        c.limb_length = self.limb_length.or(c.limb_length);
        c.width = self.width.or(c.width);
        c.pitch = self.pitch.or(c.pitch);
    }
}

/// Parses `std::env::args`, runs the command and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    if e.is_validation() {
        2
    } else {
        3
    }
}

/// Merges the config file and flags and executes the subcommand.
pub fn run(cli: Cli) -> Result<()> {
    let mut cfg = match &cli.config {
        Some(p) => DesignConfig::load(p)?,
        None => DesignConfig::default(),
    };
    if let Some(dir) = &cli.out_dir {
        cfg.output.dir = Some(dir.clone());
    }
    match &cli.command {
        Command::Solids { .. } => {}
        Command::Topology {
            design,
            planar,
            sphere,
            patch,
        } => {
            design.apply(&mut cfg);
            cfg.output.planar = planar.clone().or(cfg.output.planar.take());
            cfg.output.sphere = sphere.clone().or(cfg.output.sphere.take());
            cfg.output.patch |= patch;
        }
        Command::Metrics { design, report } => {
            design.apply(&mut cfg);
            cfg.output.report = report.clone().or(cfg.output.report.take());
        }
        Command::Optimize {
            design,
            trace,
            report,
        } => {
            design.apply(&mut cfg);
            cfg.output.trace = trace.clone().or(cfg.output.trace.take());
            cfg.output.report = report.clone().or(cfg.output.report.take());
        }
        Command::Cavity {
            design,
            cavity,
            svg,
            report,
        } => {
            design.apply(&mut cfg);
            cavity.apply(&mut cfg);
            cfg.output.cavity_svg = svg.clone().or(cfg.output.cavity_svg.take());
            cfg.output.report = report.clone().or(cfg.output.report.take());
        }
        Command::Export { design, patch, .. } => {
            design.apply(&mut cfg);
            cfg.output.patch |= patch;
        }
    }
    validate(&cfg)?;
    if let Some(path) = &cli.write_config {
        cfg.save(path)?;
        eprintln!("wrote config {}", path.display());
    }
    let mut runner = Runner {
        cfg,
        format: cli.format,
    };
    match cli.command {
        Command::Solids { edge_length, .. } => runner.solids(edge_length),
        Command::Topology { .. } => runner.topology(),
        Command::Metrics { .. } => runner.metrics(),
        Command::Optimize { .. } => runner.optimize(),
        Command::Cavity { .. } => runner.cavity(),
        Command::Export { target, output, .. } => runner.export(target.into(), &output),
    }
}

fn validate(cfg: &DesignConfig) -> Result<()> {
    if !(cfg.edge_length.is_finite() && cfg.edge_length > 0.0) {
        return Err(Error::InvalidInput(format!(
            "edge length must be positive, got {}",
            cfg.edge_length
        )));
    }
    if let AmplitudeSetting::Value(a) = cfg.amplitude {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidInput(format!(
                "amplitude must lie in [0, 1], got {a}"
            )));
        }
    }
    check_alpha(cfg.alpha)?;
    check_precision(cfg.precision)?;
    cfg.c_slack.resolve(1.0)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct SolidRow {
    solid: SolidKind,
    p: u32,
    q: u32,
    faces: usize,
    theta_deg: f64,
    r_over_a: f64,
    edge_length: f64,
    radius: f64,
}

#[derive(Debug, Serialize)]
struct TopologySummary {
    solid: SolidKind,
    edge_length: f64,
    radius: f64,
    amplitude: f64,
    samples: usize,
    modules: usize,
    limb_count: usize,
    planar_area: f64,
    sphere_area: f64,
    planar: Option<PathBuf>,
    sphere: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct CavityReport {
    solid: SolidKind,
    edge_length: f64,
    radius: f64,
    curl_radius: f64,
    limb_chord: f64,
    #[serde(flatten)]
    spec: CavitySpec,
}

struct Runner {
    cfg: DesignConfig,
    format: Format,
}

impl Runner {
    fn kinds(&self) -> Vec<SolidKind> {
        self.cfg.solid.kinds()
    }

    fn multiple(&self) -> bool {
        self.cfg.solid == SolidSelection::All
    }

    /// Resolves `configured` against the output directory, creating that
    /// directory when it was applied and does not exist yet.
    fn resolve(&self, configured: &Path) -> Result<PathBuf> {
        let path = self.cfg.resolve_output(configured);
        if path != configured {
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent).map_err(|source| Error::Io {
                    path: parent.to_path_buf(),
                    source,
                })?;
            }
        }
        Ok(path)
    }

    /// Output path for one solid's artifact.
    fn out_path(&self, configured: &Path, solid: SolidKind) -> Result<PathBuf> {
        self.resolve(&per_solid_path(configured, solid, self.multiple()))
    }

    fn optimize_one(&self, solid: SolidKind) -> Result<OptimizationResult> {
        optimize_amplitude(
            solid,
            self.cfg.edge_length,
            self.cfg.alpha,
            self.cfg.resolution,
            &self.cfg.metrics_options(),
        )
    }

    fn amplitude(&self, solid: SolidKind) -> Result<f64> {
        match self.cfg.amplitude {
            AmplitudeSetting::Value(a) => Ok(a),
            AmplitudeSetting::Optimize => {
                let a = self.optimize_one(solid)?.a_star;
                eprintln!("{solid}: using optimized amplitude A* = {}", fmt_num(a, 6));
                Ok(a)
            }
        }
    }

    fn emit<T: Serialize + ?Sized>(&self, value: &T, table: impl FnOnce() -> String) -> Result<()> {
        let text = match self.format {
            Format::Json => crate::export::report_json_string(value)?,
            Format::Table => table(),
        };
        let mut out = std::io::stdout().lock();
        // a closed pipe is not worth an error status
        let _ = out.write_all(text.as_bytes());
        Ok(())
    }

    fn solids(&mut self, edge_length: Option<f64>) -> Result<()> {
        let a = edge_length.unwrap_or(self.cfg.edge_length);
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidInput(format!(
                "edge length must be positive, got {a}"
            )));
        }
        let rows: Vec<SolidRow> = SolidKind::ALL
            .iter()
            .map(|&k| {
                let s = PlatonicSolid::get(k);
                SolidRow {
                    solid: k,
                    p: s.p,
                    q: s.q,
                    faces: s.face_count,
                    theta_deg: s.dihedral.to_degrees(),
                    r_over_a: s.circumradius_ratio,
                    edge_length: a,
                    radius: s.radius_for_edge(a),
                }
            })
            .collect();
        self.emit(&rows, || {
            let mut t = format!(
                "{:<13} {:>6} {:>5} {:>16} {:>14} {:>12}\n",
                "solid", "{p,q}", "F", "theta [deg]", "R/a", "R [mm]"
            );
            for r in &rows {
                t += &format!(
                    "{:<13} {:>6} {:>5} {:>16.10} {:>14.10} {:>12.4}\n",
                    r.solid.to_string(),
                    format!("{{{},{}}}", r.p, r.q),
                    r.faces,
                    r.theta_deg,
                    r.r_over_a,
                    r.radius
                );
            }
            t
        })
    }

    fn topology(&mut self) -> Result<()> {
        let mut rows = Vec::new();
        for solid in self.kinds() {
            let s = PlatonicSolid::get(solid);
            let amplitude = self.amplitude(solid)?;
            let radius = s.radius_for_edge(self.cfg.edge_length);
            let curve = sinusoidal_curve(self.cfg.edge_length, amplitude)?;
            let outline = planar_outline(s, &curve, radius, self.cfg.samples)?;
            let tiling = spherical_tiling(s, &curve, radius, self.cfg.samples)?;
            let planar = match &self.cfg.output.planar {
                Some(p) => {
                    let path = self.out_path(p, solid)?;
                    export_planar_svg(&outline, &path, self.cfg.precision)?;
                    eprintln!("wrote {}", path.display());
                    Some(path)
                }
                None => None,
            };
            let sphere = match &self.cfg.output.sphere {
                Some(p) => {
                    let path = self.out_path(p, solid)?;
                    export_sphere_obj(&tiling, &path, self.cfg.precision, self.cfg.output.patch)?;
                    eprintln!("wrote {}", path.display());
                    Some(path)
                }
                None => None,
            };
            rows.push(TopologySummary {
                solid,
                edge_length: self.cfg.edge_length,
                radius,
                amplitude,
                samples: self.cfg.samples,
                modules: s.face_count,
                limb_count: outline.limb_count(),
                planar_area: outline.area(),
                sphere_area: tiling.total_area(),
                planar,
                sphere,
            });
        }
        self.emit(&rows, || {
            let mut t = format!(
                "{:<13} {:>9} {:>11} {:>8} {:>6} {:>7} {:>6} {:>14} {:>14}\n",
                "solid", "a [mm]", "R [mm]", "A", "N", "modules", "limbs", "A_planar", "A_sphere"
            );
            for r in &rows {
                t += &format!(
                    "{:<13} {:>9.3} {:>11.2} {:>8.4} {:>6} {:>7} {:>6} {:>14.3} {:>14.3}\n",
                    r.solid.to_string(),
                    r.edge_length,
                    r.radius,
                    r.amplitude,
                    r.samples,
                    r.modules,
                    r.limb_count,
                    r.planar_area,
                    r.sphere_area
                );
            }
            t
        })
    }

    fn reports(&self) -> Result<Vec<DistortionReport>> {
        self.kinds()
            .into_iter()
            .map(|solid| {
                let ev = Evaluator::new(solid, self.cfg.edge_length, self.cfg.metrics_options())?;
                let amplitude = self.amplitude(solid)?;
                ev.evaluate(amplitude, self.cfg.alpha)
            })
            .collect()
    }

    fn metrics(&mut self) -> Result<()> {
        let reports = self.reports()?;
        if let Some(p) = &self.cfg.output.report {
            let path = self.resolve(p)?;
            export_report_json(&reports, &path)?;
            eprintln!("wrote {}", path.display());
        }
        self.emit(&reports, || {
            let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"));
            let mut t = format!(
                "{:<13} {:>9} {:>8} {:>9} {:>10} {:>10} {:>11} {:>10} {:>10}\n",
                "solid",
                "R [mm]",
                "A",
                "feasible",
                "D_loco",
                "eps_intra",
                "eps_inter",
                "J",
                "clearance"
            );
            for r in &reports {
                t += &format!(
                    "{:<13} {:>9.3} {:>8.4} {:>9} {:>10} {:>10.6} {:>11.6} {:>10} {:>10}\n",
                    r.solid.to_string(),
                    r.radius,
                    r.amplitude,
                    r.feasible,
                    opt(r.d_loco),
                    r.eps_intra,
                    r.eps_inter,
                    opt(r.j),
                    r.clearance
                        .map_or_else(|| "inf".to_string(), |v| format!("{v:.4}"))
                );
            }
            t
        })
    }

    fn optimize(&mut self) -> Result<()> {
        let results = self
            .kinds()
            .into_iter()
            .map(|k| self.optimize_one(k))
            .collect::<Result<Vec<_>>>()?;
        if let Some(p) = &self.cfg.output.trace {
            for r in &results {
                let path = self.out_path(p, r.solid)?;
                export_trace_csv(r, &path, self.cfg.precision)?;
                eprintln!("wrote {}", path.display());
            }
        }
        if let Some(p) = &self.cfg.output.report {
            let path = self.resolve(p)?;
            export_report_json(&results, &path)?;
            eprintln!("wrote {}", path.display());
        }
        self.emit(&results, || {
            let mut t = format!(
                "{:<13} {:>9} {:>6} {:>8} {:>10} {:>17}\n",
                "solid", "R [mm]", "alpha", "A*", "J*", "feasible A"
            );
            for r in &results {
                t += &format!(
                    "{:<13} {:>9.3} {:>6.3} {:>8.4} {:>10.6} {:>17}\n",
                    r.solid.to_string(),
                    r.radius,
                    r.alpha,
                    r.a_star,
                    r.j_star,
                    format!("[{:.3}, {:.3}]", r.feasible_range[0], r.feasible_range[1])
                );
            }
            t
        })
    }

    fn cavity(&mut self) -> Result<()> {
        let c = self.cfg.cavity.clone();
        let mut reports = Vec::new();
        for solid in self.kinds() {
            let radius = PlatonicSolid::get(solid).radius_for_edge(self.cfg.edge_length);
            let curl_radius = c.curl_radius.unwrap_or(radius);
            let limb_chord = c.limb_length.unwrap_or(self.cfg.edge_length);
            let width = match c.width {
                Some(w) => w,
                None => cavity_width(limb_chord, curl_radius, c.height, c.count)?,
            };
            let spec = cavity_cross_section(&CavityRequest {
                profile: c.profile,
                count: c.count,
                height: c.height,
                limb_height: c.limb_height,
                width,
                trapezoid_angle: c.trapezoid_angle,
                limb_length: limb_chord,
                pitch: c.pitch,
            })?;
            if let Some(p) = &self.cfg.output.cavity_svg {
                let path = self.out_path(p, solid)?;
                export_cavity_svg(&spec, &path, self.cfg.precision)?;
                eprintln!("wrote {}", path.display());
            }
            reports.push(CavityReport {
                solid,
                edge_length: self.cfg.edge_length,
                radius,
                curl_radius,
                limb_chord,
                spec,
            });
        }
        if let Some(p) = &self.cfg.output.report {
            let path = self.resolve(p)?;
            export_report_json(&reports, &path)?;
            eprintln!("wrote {}", path.display());
        }
        self.emit(&reports, || {
            let mut t = format!(
                "{:<13} {:<20} {:>3} {:>10} {:>10} {:>9} {:>9} {:>11}\n",
                "solid", "profile", "m", "r [mm]", "w [mm]", "h [mm]", "pitch", "area [mm2]"
            );
            for r in &reports {
                t += &format!(
                    "{:<13} {:<20} {:>3} {:>10.3} {:>10.4} {:>9.3} {:>9.3} {:>11.3}\n",
                    r.solid.to_string(),
                    r.spec.profile.to_string(),
                    r.spec.count,
                    r.curl_radius,
                    r.spec.width,
                    r.spec.height,
                    r.spec.pitch,
                    r.spec.cavity_area
                );
            }
            t
        })
    }

    fn export(&mut self, target: ExportTarget, output: &Path) -> Result<()> {
        match target {
            ExportTarget::PlanarSvg | ExportTarget::SphereObj => {
                for solid in self.kinds() {
                    let s = PlatonicSolid::get(solid);
                    let amplitude = self.amplitude(solid)?;
                    let radius = s.radius_for_edge(self.cfg.edge_length);
                    let curve = sinusoidal_curve(self.cfg.edge_length, amplitude)?;
                    let path = self.out_path(output, solid)?;
                    if target == ExportTarget::PlanarSvg {
                        let outline = planar_outline(s, &curve, radius, self.cfg.samples)?;
                        export_planar_svg(&outline, &path, self.cfg.precision)?;
                    } else {
                        let tiling = spherical_tiling(s, &curve, radius, self.cfg.samples)?;
                        export_sphere_obj(
                            &tiling,
                            &path,
                            self.cfg.precision,
                            self.cfg.output.patch,
                        )?;
                    }
                    eprintln!("wrote {}", path.display());
                }
            }
            ExportTarget::ReportJson => {
                let reports = self.reports()?;
                let path = self.resolve(output)?;
                export_report_json(&reports, &path)?;
                eprintln!("wrote {}", path.display());
            }
            ExportTarget::TraceCsv => {
                for solid in self.kinds() {
                    let r = self.optimize_one(solid)?;
                    let path = self.out_path(output, solid)?;
                    export_trace_csv(&r, &path, self.cfg.precision)?;
                    eprintln!("wrote {}", path.display());
                }
            }
        }
        Ok(())
    }
}
