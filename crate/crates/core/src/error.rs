use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the design pipeline.
///
/// Variants split into two families that the CLI maps onto exit codes:
/// validation errors (bad inputs, bad paths) and domain errors (inputs that
/// are well-formed but have no geometric solution).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} index {index} out of range (0..{len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error(
        "unknown solid '{0}' (expected tetrahedron, cube, octahedron, dodecahedron or icosahedron)"
    )]
    UnknownSolid(String),

    #[error("unknown cavity profile '{0}' (expected triangle, rectangle, inward_trapezoid, outward_trapezoid or isosceles_trapezoid)")]
    UnknownProfile(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("limb sector area is negative ({area:.6e}); this amplitude/solid combination has no physical planar module")]
    NegativeSectorArea { area: f64 },

    #[error("no admissible displacement in the search box gives overlapping edge curves")]
    EmptyOverlap,

    #[error("no feasible amplitude in [0, 1] for {solid} with c_slack = {c_slack:.6} mm; lower --c-slack")]
    NoFeasibleAmplitude { solid: String, c_slack: f64 },

    #[error(
        "{count} cavities do not fit on the limb without overlapping; at most {max_count} fit"
    )]
    CavityOverlap { count: usize, max_count: usize },

    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot read config {}: {message}", path.display())]
    Config { path: PathBuf, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by malformed or out-of-range user input
    /// (as opposed to geometrically infeasible designs).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_)
                | Error::IndexOutOfRange { .. }
                | Error::UnknownSolid(_)
                | Error::UnknownProfile(_)
                | Error::Io { .. }
                | Error::Config { .. }
                | Error::Json(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
