//! Distortion and locomotion metrics for a module design.
//!
//! Lengths are in the units of the edge length (millimetres throughout the
//! CLI). `A_E`, `A_S` and `A_loco` are areas; `G_E` integrates a squared
//! length over a length, so `eps_inter = G_E / A_E` carries one length unit
//! and grows linearly with the design's scale. The absolute-value integrand
//! gives a dimensionless variant.

mod intermodular;
mod intramodular;
mod locomotion;
mod profile;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use intermodular::{
    default_search_box, grid_minimum, intermodular, minimize_overlap, Integrand, Intermodular,
    OverlapObjective, SearchBox, BOX_FRACTION, MULTI_START, SEED_GRID,
};
pub use intramodular::{intramodular_distortion, Intramodular};
pub use locomotion::{
    limb_clearance, locomotion_ability, locomotion_difficulty, printed_residual, FeasibilityRule,
    LocomotionAbility,
};
pub use profile::EdgeProfile;

use crate::curves::sinusoidal_curve;
use crate::error::{Error, Result};
use crate::solids::{PlatonicSolid, SolidKind};
use crate::topology::{planar_outline, PlanarOutline, DEFAULT_SAMPLES};

/// Weight of `eps_inter` in the objective.
pub const DEFAULT_ALPHA: f64 = 0.56;

/// Default inter-limb clearance as a fraction of the circumscribing radius.
/// Chosen so the icosahedron's limbs pinch between amplitudes 0.79 and 0.80;
/// see [`calibrate_slack_ratio`].
pub const DEFAULT_SLACK_RATIO: f64 = 0.0935;

/// Amplitude at which [`DEFAULT_SLACK_RATIO`] is calibrated.
pub const CALIBRATION_AMPLITUDE: f64 = 0.795;

/// Grid step of the `A_loco` normalization scan.
pub const NORMALIZER_STEP: f64 = 0.01;

/// How the clearance threshold is chosen. Serialized as `"auto"` or a number.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "SlackRepr", into = "SlackRepr")]
pub enum SlackSpec {
    /// `DEFAULT_SLACK_RATIO * R`.
    #[default]
    Auto,
    /// Absolute length in edge-length units.
    Absolute(f64),
}

impl SlackSpec {
    pub fn resolve(&self, radius: f64) -> Result<f64> {
        match *self {
            SlackSpec::Auto => Ok(DEFAULT_SLACK_RATIO * radius),
            SlackSpec::Absolute(v) if v >= 0.0 => Ok(v),
            SlackSpec::Absolute(v) => Err(Error::invalid(format!(
                "c_slack must be non-negative, got {v}"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SlackRepr {
    Length(f64),
    Word(String),
}

impl TryFrom<SlackRepr> for SlackSpec {
    type Error = Error;

    fn try_from(r: SlackRepr) -> Result<Self> {
        match r {
            SlackRepr::Length(v) => Ok(SlackSpec::Absolute(v)),
            SlackRepr::Word(w) => w.parse(),
        }
    }
}

impl From<SlackSpec> for SlackRepr {
    fn from(s: SlackSpec) -> Self {
        match s {
            SlackSpec::Auto => SlackRepr::Word("auto".into()),
            SlackSpec::Absolute(v) => SlackRepr::Length(v),
        }
    }
}

impl std::str::FromStr for SlackSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("auto") {
            return Ok(SlackSpec::Auto);
        }
        s.trim()
            .parse::<f64>()
            .map(SlackSpec::Absolute)
            .map_err(|_| Error::invalid(format!("c_slack must be a length or 'auto', got '{s}'")))
    }
}

impl std::fmt::Display for SlackSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SlackSpec::Auto => f.write_str("auto"),
            SlackSpec::Absolute(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsOptions {
    pub samples: usize,
    pub c_slack: SlackSpec,
    pub rule: FeasibilityRule,
    pub integrand: Integrand,
    pub normalizer_step: f64,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        MetricsOptions {
            samples: DEFAULT_SAMPLES,
            c_slack: SlackSpec::Auto,
            rule: FeasibilityRule::Clearance,
            integrand: Integrand::Squared,
            normalizer_step: NORMALIZER_STEP,
        }
    }
}

/// Every metric for one `(solid, a, A, alpha)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistortionReport {
    pub solid: SolidKind,
    pub edge_length: f64,
    pub radius: f64,
    pub amplitude: f64,
    pub alpha: f64,
    pub samples: usize,
    pub a_loco: f64,
    pub d_loco: Option<f64>,
    pub feasible: bool,
    pub clearance: Option<f64>,
    pub c_slack: f64,
    pub feasibility_rule: FeasibilityRule,
    pub a_e: f64,
    pub a_s: f64,
    pub eps_intra: f64,
    pub g_e: f64,
    pub integrand: Integrand,
    pub eps_inter: f64,
    pub j: Option<f64>,
    pub t_star: [f64; 2],
}

/// Raw, unnormalized metrics at one amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplitudeSample {
    pub amplitude: f64,
    pub locomotion: LocomotionAbility,
    pub intra: Intramodular,
    pub inter: Intermodular,
}

/// `alpha * eps_inter + (1 - alpha) * D_loco`.
pub fn objective(alpha: f64, eps_inter: f64, d_loco: f64) -> f64 {
    alpha * eps_inter + (1.0 - alpha) * d_loco
}

/// Evaluates designs of one solid and edge length, holding the `A_loco`
/// normalization for that configuration.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub solid: SolidKind,
    pub edge_length: f64,
    pub radius: f64,
    pub options: MetricsOptions,
    pub c_slack: f64,
    /// `max 1 / A_loco` over the feasible normalization grid.
    pub max_inverse_reach: f64,
}

impl Evaluator {
    pub fn new(solid: SolidKind, edge_length: f64, options: MetricsOptions) -> Result<Self> {
        let mut ev = Self::unnormalized(solid, edge_length, options)?;
        let step = options.normalizer_step;
        if !(step > 0.0 && step <= NORMALIZER_STEP) {
            return Err(Error::invalid(format!(
                "normalization step must lie in (0, {NORMALIZER_STEP}], got {step}"
            )));
        }
        let grid = amplitude_grid(step);
        let reach = grid
            .par_iter()
            .map(|&a| ev.locomotion(a))
            .collect::<Result<Vec<_>>>()?;
        ev.max_inverse_reach = ev.normalizer_from(reach.iter())?;
        Ok(ev)
    }

    fn unnormalized(solid: SolidKind, edge_length: f64, options: MetricsOptions) -> Result<Self> {
        if !(edge_length.is_finite() && edge_length > 0.0) {
            return Err(Error::invalid(format!(
                "edge length must be positive, got {edge_length}"
            )));
        }
        if options.samples < crate::topology::MIN_SAMPLES {
            return Err(Error::invalid(format!(
                "samples per edge must be at least {}, got {}",
                crate::topology::MIN_SAMPLES,
                options.samples
            )));
        }
        let radius = PlatonicSolid::get(solid).radius_for_edge(edge_length);
        let c_slack = options.c_slack.resolve(radius)?;
        Ok(Evaluator {
            solid,
            edge_length,
            radius,
            options,
            c_slack,
            max_inverse_reach: f64::NAN,
        })
    }

    fn normalizer_from<'a>(
        &self,
        reach: impl Iterator<Item = &'a LocomotionAbility>,
    ) -> Result<f64> {
        let best = reach
            .filter(|l| l.feasible)
            .map(|l| 1.0 / l.a_loco)
            .fold(f64::NEG_INFINITY, f64::max);
        if best.is_finite() {
            Ok(best)
        } else {
            Err(Error::NoFeasibleAmplitude {
                solid: self.solid.to_string(),
                c_slack: self.c_slack,
            })
        }
    }

    pub fn outline(&self, amplitude: f64) -> Result<PlanarOutline> {
        let curve = sinusoidal_curve(self.edge_length, amplitude)?;
        planar_outline(
            PlatonicSolid::get(self.solid),
            &curve,
            self.radius,
            self.options.samples,
        )
    }

    pub fn locomotion(&self, amplitude: f64) -> Result<LocomotionAbility> {
        Ok(locomotion_ability(
            &self.outline(amplitude)?,
            self.c_slack,
            self.options.rule,
        ))
    }

    pub fn sample(&self, amplitude: f64) -> Result<AmplitudeSample> {
        let outline = self.outline(amplitude)?;
        let locomotion = locomotion_ability(&outline, self.c_slack, self.options.rule);
        let intra = intramodular_distortion(&outline)?;
        let inter =
            intermodular::intermodular_with_area(&outline, self.options.integrand, intra.a_e)?;
        Ok(AmplitudeSample {
            amplitude,
            locomotion,
            intra,
            inter,
        })
    }

    pub fn d_loco(&self, loc: &LocomotionAbility) -> Option<f64> {
        loc.feasible
            .then(|| locomotion_difficulty(loc.a_loco, self.max_inverse_reach).min(1.0))
    }

    pub fn report(&self, s: &AmplitudeSample, alpha: f64) -> DistortionReport {
        let d_loco = self.d_loco(&s.locomotion);
        DistortionReport {
            solid: self.solid,
            edge_length: self.edge_length,
            radius: self.radius,
            amplitude: s.amplitude,
            alpha,
            samples: self.options.samples,
            a_loco: s.locomotion.a_loco,
            d_loco,
            feasible: s.locomotion.feasible,
            clearance: s.locomotion.clearance,
            c_slack: self.c_slack,
            feasibility_rule: self.options.rule,
            a_e: s.intra.a_e,
            a_s: s.intra.a_s,
            eps_intra: s.intra.eps_intra,
            g_e: s.inter.g_e,
            integrand: self.options.integrand,
            eps_inter: s.inter.eps_inter,
            j: d_loco.map(|d| objective(alpha, s.inter.eps_inter, d)),
            t_star: s.inter.t_star,
        }
    }

    pub fn evaluate(&self, amplitude: f64, alpha: f64) -> Result<DistortionReport> {
        check_alpha(alpha)?;
        Ok(self.report(&self.sample(amplitude)?, alpha))
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )))
    }
}

/// `0, step, 2 step, ..., 1`, with the last point pinned to exactly 1.
pub fn amplitude_grid(step: f64) -> Vec<f64> {
    let n = (1.0 / step).round() as usize;
    (0..=n).map(|i| (i as f64 / n as f64).min(1.0)).collect()
}

/// Clearance of the icosahedron at `amplitude`, as a fraction of `R`.
pub fn calibrate_slack_ratio(amplitude: f64, samples: usize) -> Result<f64> {
    let s = PlatonicSolid::get(SolidKind::Icosahedron);
    let curve = sinusoidal_curve(1.0, amplitude)?;
    let r = s.radius_for_edge(1.0);
    Ok(limb_clearance(&planar_outline(s, &curve, r, samples)?) / r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_slack_ratio_matches_calibration() {
        let k = calibrate_slack_ratio(CALIBRATION_AMPLITUDE, DEFAULT_SAMPLES).unwrap();
        assert!(
            (k - DEFAULT_SLACK_RATIO).abs() < 5e-4,
            "recalibrated ratio {k}"
        );
        let at79 = calibrate_slack_ratio(0.79, DEFAULT_SAMPLES).unwrap();
        let at80 = calibrate_slack_ratio(0.80, DEFAULT_SAMPLES).unwrap();
        assert!(at79 > DEFAULT_SLACK_RATIO && at80 < DEFAULT_SLACK_RATIO);
    }

    #[test]
    fn slack_serde_forms() {
        assert_eq!(serde_json::to_string(&SlackSpec::Auto).unwrap(), "\"auto\"");
        assert_eq!(
            serde_json::to_string(&SlackSpec::Absolute(4.5)).unwrap(),
            "4.5"
        );
        assert_eq!(
            serde_json::from_str::<SlackSpec>("7").unwrap(),
            SlackSpec::Absolute(7.0)
        );
        assert_eq!(
            serde_json::from_str::<SlackSpec>("\"AUTO\"").unwrap(),
            SlackSpec::Auto
        );
        assert!(serde_json::from_str::<SlackSpec>("\"wide\"").is_err());
    }

    #[test]
    fn grid_endpoints() {
        let g = amplitude_grid(0.005);
        assert_eq!(g.len(), 201);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), 1.0);
    }

    #[test]
    fn slack_parsing() {
        assert_eq!("auto".parse::<SlackSpec>().unwrap(), SlackSpec::Auto);
        assert_eq!(
            "2.5".parse::<SlackSpec>().unwrap(),
            SlackSpec::Absolute(2.5)
        );
        assert!("wide".parse::<SlackSpec>().is_err());
        assert!(SlackSpec::Absolute(-1.0).resolve(1.0).is_err());
    }

    #[test]
    fn report_is_consistent() {
        let ev = Evaluator::new(SolidKind::Cube, 110.0, MetricsOptions::default()).unwrap();
        let r = ev.evaluate(0.5, DEFAULT_ALPHA).unwrap();
        assert!(r.feasible);
        let d = r.d_loco.unwrap();
        assert!((0.0..=1.0).contains(&d));
        assert!((r.j.unwrap() - objective(DEFAULT_ALPHA, r.eps_inter, d)).abs() < 1e-15);
        assert!(
            (r.radius - 110.0 * PlatonicSolid::get(SolidKind::Cube).circumradius_ratio).abs()
                < 1e-12
        );
        assert!(r.eps_inter >= 0.0 && r.g_e >= 0.0);
        let zero = ev.evaluate(0.0, DEFAULT_ALPHA).unwrap();
        assert!((zero.d_loco.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_amplitude_has_no_difficulty() {
        let ev = Evaluator::new(SolidKind::Icosahedron, 110.0, MetricsOptions::default()).unwrap();
        let r = ev.evaluate(0.9, DEFAULT_ALPHA).unwrap();
        assert!(!r.feasible);
        assert_eq!(r.d_loco, None);
        assert_eq!(r.j, None);
    }

    #[test]
    fn bad_parameters() {
        assert!(Evaluator::new(SolidKind::Cube, -1.0, MetricsOptions::default()).is_err());
        let ev = Evaluator::new(SolidKind::Cube, 1.0, MetricsOptions::default()).unwrap();
        assert!(ev.evaluate(0.5, 1.5).is_err());
        assert!(ev.evaluate(1.5, 0.5).is_err());
        let opts = MetricsOptions {
            normalizer_step: 0.05,
            ..MetricsOptions::default()
        };
        assert!(Evaluator::new(SolidKind::Cube, 1.0, opts).is_err());
    }
}
