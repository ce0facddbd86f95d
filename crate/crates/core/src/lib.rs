//! Spherical and planar topologies for sphere-reconfigurable modular robots.
//!
//! Pick a platonic solid and an odd module-topology curve; every edge of the
//! solid carries the curve, projected onto the circumscribing sphere, and the
//! resulting tiling splits the sphere into congruent modules. Each module is
//! then flattened onto the tangent plane at its centre for fabrication.
//!
//! ```
//! use spheretopo::{curves::sinusoidal_curve, solids::{PlatonicSolid, SolidKind}, topology::planar_outline};
//!
//! let cube = PlatonicSolid::get(SolidKind::Cube);
//! let curve = sinusoidal_curve(110.0, 0.86)?;
//! let outline = planar_outline(cube, &curve, cube.radius_for_edge(110.0), 512)?;
//! assert_eq!(outline.limb_count(), 4);
//! # Ok::<(), spheretopo::Error>(())
//! ```

pub mod cavity;
pub mod cli;
pub mod config;
pub mod curves;
pub mod error;
pub mod export;
pub mod metrics;
pub mod numeric;
pub mod optimize;
pub mod projection;
pub mod solids;
pub mod topology;

pub use error::{Error, Result};
