//! Module-topology curves: odd functions on `[-a/2, a/2]` that vanish at the
//! edge endpoints. Any such curve tiles the sphere without gaps once drawn on
//! every edge; the sinusoidal family is the one shipped here.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative tolerance (times edge length) for the oddness checks.
pub const ODDNESS_TOLERANCE: f64 = 1e-9;

/// A curve drawn along one polyhedron edge, in the edge's own plane.
pub trait ModuleCurve: Send + Sync {
    /// Edge length `a`; the curve is defined on `[-a/2, a/2]`.
    fn edge_length(&self) -> f64;
    /// Offset `f(x)` perpendicular to the edge, in the same length units.
    fn eval(&self, x: f64) -> f64;
    fn family(&self) -> &str;
    /// Amplitude parameter when the family has one.
    fn amplitude(&self) -> Option<f64> {
        None
    }
}

/// `f(x) = A (a/2) sin(2 pi x / a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SinusoidalCurve {
    edge_length: f64,
    amplitude: f64,
}

impl SinusoidalCurve {
    pub fn new(edge_length: f64, amplitude: f64) -> Result<Self> {
        if !(edge_length.is_finite() && edge_length > 0.0) {
            return Err(Error::invalid(format!(
                "edge length must be positive, got {edge_length}"
            )));
        }
        if !(-1.0..=1.0).contains(&amplitude) {
            return Err(Error::invalid(format!(
                "amplitude must lie in [-1, 1], got {amplitude}"
            )));
        }
        Ok(SinusoidalCurve {
            edge_length,
            amplitude,
        })
    }

    /// Same amplitude, edge length multiplied by `mu`.
    pub fn scaled(&self, mu: f64) -> Result<Self> {
        Self::new(self.edge_length * mu, self.amplitude)
    }
}

/// Convenience constructor for the sinusoidal family.
pub fn sinusoidal_curve(edge_length: f64, amplitude: f64) -> Result<SinusoidalCurve> {
    SinusoidalCurve::new(edge_length, amplitude)
}

impl ModuleCurve for SinusoidalCurve {
    fn edge_length(&self) -> f64 {
        self.edge_length
    }

    fn eval(&self, x: f64) -> f64 {
        let a = self.edge_length;
        self.amplitude * (a / 2.0) * (2.0 * PI * x / a).sin()
    }

    fn family(&self) -> &str {
        "sinusoidal"
    }

    fn amplitude(&self) -> Option<f64> {
        Some(self.amplitude)
    }
}

/// A user-supplied curve. Nothing is checked at construction; run
/// [`validate_curve`] before building topologies from it.
pub struct CustomCurve<F> {
    edge_length: f64,
    name: String,
    f: F,
}

impl<F> CustomCurve<F>
where
    F: Fn(f64) -> f64 + Send + Sync,
{
    pub fn new(edge_length: f64, name: impl Into<String>, f: F) -> Result<Self> {
        if !(edge_length.is_finite() && edge_length > 0.0) {
            return Err(Error::invalid(format!(
                "edge length must be positive, got {edge_length}"
            )));
        }
        Ok(CustomCurve {
            edge_length,
            name: name.into(),
            f,
        })
    }
}

impl<F> fmt::Debug for CustomCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomCurve")
            .field("edge_length", &self.edge_length)
            .field("name", &self.name)
            .finish()
    }
}

impl<F> ModuleCurve for CustomCurve<F>
where
    F: Fn(f64) -> f64 + Send + Sync,
{
    fn edge_length(&self) -> f64 {
        self.edge_length
    }

    fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    fn family(&self) -> &str {
        &self.name
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveValidation {
    pub samples: usize,
    /// `max |f(x) + f(-x)|` over the sample grid.
    pub max_odd_violation: f64,
    /// Where that maximum occurs (non-negative `x`).
    pub max_odd_at: f64,
    /// `max(|f(a/2)|, |f(-a/2)|)`.
    pub endpoint_violation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Checks oddness and the endpoint-zero constraint on a uniform grid of
/// `samples` points over `[-a/2, a/2]`. Degenerate curves (NaN, infinite
/// values) produce a failing report rather than an error.
pub fn validate_curve(curve: &dyn ModuleCurve, samples: usize) -> Result<CurveValidation> {
    if samples < 3 {
        return Err(Error::invalid(format!(
            "need at least 3 validation samples, got {samples}"
        )));
    }
    let a = curve.edge_length();
    let mut max_odd = 0.0f64;
    let mut max_at = 0.0;
    let n = samples - 1;
    for i in 0..=n {
        let x = a * (2.0 * i as f64 - n as f64) / (2.0 * n as f64);
        if x < 0.0 {
            continue;
        }
        let v = odd_violation_at(curve, x);
        if v > max_odd || v.is_nan() {
            max_odd = if v.is_nan() { f64::INFINITY } else { v };
            max_at = x;
        }
    }
    let endpoint = curve.eval(a / 2.0).abs().max(curve.eval(-a / 2.0).abs());
    let endpoint = if endpoint.is_nan() {
        f64::INFINITY
    } else {
        endpoint
    };
    let tolerance = ODDNESS_TOLERANCE * a;
    Ok(CurveValidation {
        samples,
        max_odd_violation: max_odd,
        max_odd_at: max_at,
        endpoint_violation: endpoint,
        tolerance,
        passed: max_odd <= tolerance && endpoint <= tolerance,
    })
}

/// `|f(x) + f(-x)|`.
pub fn odd_violation_at(curve: &dyn ModuleCurve, x: f64) -> f64 {
    (curve.eval(x) + curve.eval(-x)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sinusoid_peak_value() {
        let c = sinusoidal_curve(110.0, 0.86).unwrap();
        assert!((c.eval(27.5) - 47.3).abs() < 1e-9);
        assert!(c.eval(55.0).abs() < 1e-12 * 110.0);
        assert_eq!(c.eval(-27.5), -c.eval(27.5));
    }

    #[test]
    fn constructor_rejects_bad_inputs() {
        assert!(sinusoidal_curve(0.0, 0.5).is_err());
        assert!(sinusoidal_curve(-3.0, 0.5).is_err());
        assert!(sinusoidal_curve(10.0, 1.01).is_err());
        assert!(sinusoidal_curve(10.0, f64::NAN).is_err());
        assert!(sinusoidal_curve(10.0, -1.0).is_ok());
    }

    #[test]
    fn sinusoid_passes_validation() {
        let c = sinusoidal_curve(110.0, 0.86).unwrap();
        let r = validate_curve(&c, 1001).unwrap();
        assert!(r.passed);
        assert!(r.max_odd_violation <= 1e-12);
    }

    #[test]
    fn even_curve_fails() {
        let a = 110.0;
        let c = CustomCurve::new(a, "square", |x: f64| x * x).unwrap();
        let r = validate_curve(&c, 1001).unwrap();
        assert!(!r.passed);
        let quarter = odd_violation_at(&c, a / 4.0);
        assert!((quarter - 2.0 * (a / 4.0) * (a / 4.0)).abs() < 1e-9);
        assert!((r.max_odd_violation - 2.0 * (a / 2.0) * (a / 2.0)).abs() < 1e-9);
    }

    #[test]
    fn identity_curve_fails_on_endpoints() {
        let c = CustomCurve::new(10.0, "line", |x: f64| x).unwrap();
        let r = validate_curve(&c, 11).unwrap();
        assert!(r.max_odd_violation == 0.0);
        assert!((r.endpoint_violation - 5.0).abs() < 1e-12);
        assert!(!r.passed);
    }

    #[test]
    fn nan_curve_fails_without_error() {
        let c = CustomCurve::new(1.0, "nan", |_| f64::NAN).unwrap();
        let r = validate_curve(&c, 5).unwrap();
        assert!(!r.passed);
        assert!(validate_curve(&c, 2).is_err());
    }

    proptest! {
        #[test]
        fn sinusoid_scales_linearly(a in 1.0f64..500.0, amp in -1.0f64..1.0, t in -0.5f64..0.5, mu in 0.1f64..20.0) {
            let c = sinusoidal_curve(a, amp).unwrap();
            let s = c.scaled(mu).unwrap();
            let x = t * a;
            let lhs = s.eval(mu * x);
            let rhs = mu * c.eval(x);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * mu * a);
        }

        #[test]
        fn sinusoid_is_odd(a in 1.0f64..500.0, amp in -1.0f64..1.0, t in 0.0f64..0.5) {
            let c = sinusoidal_curve(a, amp).unwrap();
            prop_assert!(odd_violation_at(&c, t * a) <= 1e-12 * a);
        }
    }
}
