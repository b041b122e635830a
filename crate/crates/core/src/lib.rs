//! Domain complexity estimation.
//!
//! Three families of measures are provided, each kept separate:
//!
//! * **dimensionality**: log10 sizes of state spaces, game trees and feature
//!   spaces, computed in log space or with exact big integers;
//! * **sparsity**: the Gini index, zero-fraction of binary images and
//!   solution-path fractions;
//! * **diversity**: Shannon entropy normalized by the log of the event count,
//!   plus variance, attribute and distance diversity.
//!
//! The [`games`], [`descriptor`], [`cartpole`], [`datasets`] and [`metrics`]
//! modules apply these to concrete domains; [`report`] wraps results in a
//! serializable [`report::ComplexityReport`].

pub mod cartpole;
pub mod datasets;
pub mod descriptor;
mod error;
pub mod games;
pub mod measures;
pub mod metrics;
pub mod report;

pub use error::{Error, Result};
pub use measures::{
    Histogram, MeasureFamily, MeasureResult, Direction, ProbDist, Provenance, ValueArray,
};
pub use report::ComplexityReport;

/// Version string embedded in every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
