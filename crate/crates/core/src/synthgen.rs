//! Synthetic time-varying graphs with geometric edge-state durations.
//!
//! Slice 0 is an Erdős–Rényi graph with edge probability `p0`. Every later
//! slice flips the presence of each node pair independently with probability
//! `theta`, so state durations are geometric with parameter `theta`. Small
//! `theta` gives strongly correlated slices; `theta = 1` alternates every
//! pair at each step.

use alloc::vec::Vec;

use rand::Rng;

use crate::graph::TemporalGraph;
use crate::{Error, Result};

pub const DEFAULT_P0: f64 = 0.1;

pub fn generate<R: Rng + ?Sized>(
    n: usize,
    slices: usize,
    theta: f64,
    p0: f64,
    rng: &mut R,
) -> Result<TemporalGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter("need at least two nodes"));
    }
    if slices == 0 {
        return Err(Error::NoSlices);
    }
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::InvalidParameter("theta must lie in [0, 1]"));
    }
    if !(0.0..=1.0).contains(&p0) {
        return Err(Error::InvalidParameter("p0 must lie in [0, 1]"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut present: Vec<bool> = pairs.iter().map(|_| rng.random_bool(p0)).collect();
    let mut out = Vec::with_capacity(slices);
    for t in 0..slices {
        if t > 0 {
            for state in &mut present {
                if rng.random_bool(theta) {
                    *state = !*state;
                }
            }
        }
        out.push(
            pairs
                .iter()
                .zip(&present)
                .filter(|(_, &on)| on)
                .map(|(&e, _)| e)
                .collect(),
        );
    }
    TemporalGraph::new(n, out)
}
