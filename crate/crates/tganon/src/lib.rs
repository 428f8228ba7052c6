//! File formats, parallel execution, experiment suites and run manifests for
//! k-degree anonymization of time-varying graphs.
//!
//! The algorithms live in [`tganon_core`]; this crate adds everything that
//! needs the standard library.

mod error;
pub mod experiments;
pub mod io;
pub mod manifest;
pub mod parallel;
pub mod pipeline;

pub use error::{Error, Result};
pub use tganon_core as core;
