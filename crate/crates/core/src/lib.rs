//! Degree-based k-anonymization of time-varying and multi-layer graphs.
//!
//! The pipeline has three stages, each in its own module:
//!
//! 1. [`anonymizer`] groups nodes into anonymity groups of size at least `k`
//!    and replaces every temporal degree vector by its group's l1 set median.
//! 2. [`realizability`] repairs slices whose anonymized degree sequence is not
//!    graphical, without touching group membership.
//! 3. [`constructor`] rebuilds each slice from its repaired degree sequence,
//!    preferring edges of the original slice.
//!
//! [`metrics`] and [`synthgen`] provide the evaluation instruments. The crate
//! is `no_std` and only needs `alloc`; file formats, the CLI and worker pools
//! live in the `tganon` companion crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod anonymizer;
pub mod constructor;
mod error;
pub mod graph;
pub mod metrics;
pub mod realizability;
pub mod synthgen;

pub use error::{Error, Result};
pub use graph::{AnonymityLevel, DegreeMatrix, Edge, TemporalGraph};
