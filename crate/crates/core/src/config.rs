//! Design configuration shared by the CLI and config files.
//!
//! A config file is a JSON document with the fields of [`DesignConfig`]; any
//! field may be omitted and takes its default. Command-line flags are applied
//! on top of the file.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cavity::{
    CavityProfile, DEFAULT_CAVITY_COUNT, DEFAULT_CAVITY_HEIGHT, DEFAULT_LIMB_HEIGHT,
    DEFAULT_TRAPEZOID_ANGLE,
};
use crate::error::{Error, Result};
use crate::export::DEFAULT_PRECISION;
use crate::metrics::{
    FeasibilityRule, Integrand, MetricsOptions, SlackSpec, DEFAULT_ALPHA, NORMALIZER_STEP,
};
use crate::optimize::{DEFAULT_EDGE_LENGTH, DEFAULT_RESOLUTION};
use crate::solids::SolidKind;
use crate::topology::DEFAULT_SAMPLES;

/// Environment variable naming the default directory for relative output paths.
pub const OUT_DIR_ENV: &str = "SPHERETOPO_OUT_DIR";

/// One solid or all five.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SolidSelection {
    One(SolidKind),
    All,
}

impl SolidSelection {
    pub fn kinds(self) -> Vec<SolidKind> {
        match self {
            SolidSelection::One(k) => vec![k],
            SolidSelection::All => SolidKind::ALL.to_vec(),
        }
    }
}

impl FromStr for SolidSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("all") {
            Ok(SolidSelection::All)
        } else {
            s.parse().map(SolidSelection::One)
        }
    }
}

impl TryFrom<String> for SolidSelection {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for SolidSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolidSelection::One(k) => k.fmt(f),
            SolidSelection::All => f.write_str("all"),
        }
    }
}

impl From<SolidSelection> for String {
    fn from(s: SolidSelection) -> String {
        s.to_string()
    }
}

/// A fixed curve amplitude, or `"optimize"` to use the optimizer's `A*`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "AmplitudeRepr", into = "AmplitudeRepr")]
pub enum AmplitudeSetting {
    Value(f64),
    #[default]
    Optimize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AmplitudeRepr {
    Value(f64),
    Word(String),
}

impl TryFrom<AmplitudeRepr> for AmplitudeSetting {
    type Error = Error;

    fn try_from(r: AmplitudeRepr) -> Result<Self> {
        match r {
            AmplitudeRepr::Value(v) => Ok(AmplitudeSetting::Value(v)),
            AmplitudeRepr::Word(w) => w.parse(),
        }
    }
}

impl From<AmplitudeSetting> for AmplitudeRepr {
    fn from(a: AmplitudeSetting) -> Self {
        match a {
            AmplitudeSetting::Value(v) => AmplitudeRepr::Value(v),
            AmplitudeSetting::Optimize => AmplitudeRepr::Word("optimize".into()),
        }
    }
}

impl FromStr for AmplitudeSetting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("optimize") {
            return Ok(AmplitudeSetting::Optimize);
        }
        s.trim()
            .parse::<f64>()
            .map(AmplitudeSetting::Value)
            .map_err(|_| {
                Error::invalid(format!(
                    "amplitude must be a number or 'optimize', got '{s}'"
                ))
            })
    }
}

impl fmt::Display for AmplitudeSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmplitudeSetting::Value(v) => write!(f, "{v}"),
            AmplitudeSetting::Optimize => f.write_str("optimize"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CavityConfig {
    pub profile: CavityProfile,
    pub count: usize,
    /// Cavity depth `h`, mm.
    pub height: f64,
    /// Limb thickness `l`, mm.
    pub limb_height: f64,
    /// Angle between a trapezoid leg and the cavity floor, degrees.
    pub trapezoid_angle: f64,
    /// Target curl radius `r`; the sphere radius when absent.
    pub curl_radius: Option<f64>,
    /// Limb chord `b`; the edge length when absent.
    pub limb_length: Option<f64>,
    /// Explicit cavity width, skipping the curl computation.
    pub width: Option<f64>,
    /// Centre-to-centre cavity spacing; uniform when absent.
    pub pitch: Option<f64>,
}

impl Default for CavityConfig {
    fn default() -> Self {
        CavityConfig {
            profile: CavityProfile::Rectangle,
            count: DEFAULT_CAVITY_COUNT,
            height: DEFAULT_CAVITY_HEIGHT,
            limb_height: DEFAULT_LIMB_HEIGHT,
            trapezoid_angle: DEFAULT_TRAPEZOID_ANGLE,
            curl_radius: None,
            limb_length: None,
            width: None,
            pitch: None,
        }
    }
}

/// Output paths. Relative paths resolve against `dir`, then against
/// `SPHERETOPO_OUT_DIR`, then the working directory.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: Option<PathBuf>,
    pub planar: Option<PathBuf>,
    pub sphere: Option<PathBuf>,
    pub report: Option<PathBuf>,
    pub trace: Option<PathBuf>,
    pub cavity_svg: Option<PathBuf>,
    /// Triangulate module patches in OBJ output.
    pub patch: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DesignConfig {
    pub solid: SolidSelection,
    /// Edge length `a`, mm. The sphere radius always follows from it.
    pub edge_length: f64,
    pub amplitude: AmplitudeSetting,
    pub alpha: f64,
    pub c_slack: SlackSpec,
    pub rule: FeasibilityRule,
    pub integrand: Integrand,
    pub samples: usize,
    pub resolution: f64,
    pub precision: usize,
    pub cavity: CavityConfig,
    pub output: OutputConfig,
}

impl Default for DesignConfig {
    fn default() -> Self {
        DesignConfig {
            solid: SolidSelection::One(SolidKind::Cube),
            edge_length: DEFAULT_EDGE_LENGTH,
            amplitude: AmplitudeSetting::Optimize,
            alpha: DEFAULT_ALPHA,
            c_slack: SlackSpec::Auto,
            rule: FeasibilityRule::Clearance,
            integrand: Integrand::Squared,
            samples: DEFAULT_SAMPLES,
            resolution: DEFAULT_RESOLUTION,
            precision: DEFAULT_PRECISION,
            cavity: CavityConfig::default(),
            output: OutputConfig::default(),
        }
    }
}

impl DesignConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        serde_json::from_str(&text).map_err(|e| Error::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        crate::export::export_report_json(self, path)
    }

    pub fn metrics_options(&self) -> MetricsOptions {
        MetricsOptions {
            samples: self.samples,
            c_slack: self.c_slack,
            rule: self.rule,
            integrand: self.integrand,
            normalizer_step: NORMALIZER_STEP,
        }
    }

    /// Resolves a configured output path against the output directory.
    pub fn resolve_output(&self, path: &Path) -> PathBuf {
        if path.is_absolute() {
            return path.to_path_buf();
        }
        let dir = self.output.dir.clone().or_else(|| {
            std::env::var_os(OUT_DIR_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        });
        match dir {
            Some(d) => d.join(path),
            None => path.to_path_buf(),
        }
    }
}

/// `path` for a single design, or `stem_<solid>.ext` when several solids
/// share one configured path.
pub fn per_solid_path(path: &Path, solid: SolidKind, multiple: bool) -> PathBuf {
    if !multiple {
        return path.to_path_buf();
    }
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{solid}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{solid}"),
    };
    path.with_file_name(name)
}
