//! Rebuilding slices from realizable degree sequences.
//!
//! Construction follows Havel–Hakimi: the vertex with the largest residual
//! degree is saturated in one go. Its neighbors are picked in priority order
//! (original edge first, then larger residual degree, then lower index), and
//! a pick is only committed if the remaining sequence can still be completed.
//! The completion test uses the Havel–Hakimi exchange argument: a partial
//! neighbor set can be extended iff extending it with the highest-residual
//! remaining vertices leaves a graphical sequence.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DegreeMatrix, Edge, TemporalGraph};
use crate::realizability::{erdos_gallai_sorted, is_realizable};
use crate::{Error, Result};

/// Builds a simple graph with degree sequence `target`, preferring edges of
/// `original`. Fails only if `target` is not realizable.
pub fn build_slice(target: &[u32], original: &[Edge]) -> Result<Vec<Edge>> {
    let n = target.len();
    if !is_realizable(target)? {
        return Err(Error::NotRealizable);
    }
    let mut preferred: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in original {
        if u >= n || v >= n {
            return Err(Error::NodeOutOfRange { node: u.max(v), n });
        }
        preferred[u].insert(v);
        preferred[v].insert(u);
    }
    construct(target, |u, v| preferred[u].contains(&v))
}

/// Priority-free Havel–Hakimi construction.
pub fn havel_hakimi(target: &[u32]) -> Result<Vec<Edge>> {
    if !is_realizable(target)? {
        return Err(Error::NotRealizable);
    }
    construct(target, |_, _| false)
}

fn construct(target: &[u32], is_preferred: impl Fn(usize, usize) -> bool) -> Result<Vec<Edge>> {
    let n = target.len();
    let mut residual = target.to_vec();
    let mut edges = Vec::with_capacity(target.iter().map(|&d| d as usize).sum::<usize>() / 2);
    let mut scratch = Vec::with_capacity(n);
    loop {
        // largest residual, lowest index on ties
        let Some(v) = (0..n)
            .filter(|&i| residual[i] > 0)
            .max_by_key(|&i| (residual[i], core::cmp::Reverse(i)))
        else {
            break;
        };
        let need = residual[v] as usize;
        residual[v] = 0;

        let mut candidates: Vec<usize> = (0..n).filter(|&u| residual[u] > 0).collect();
        if candidates.len() < need {
            return Err(Error::NotRealizable);
        }
        // fallback fill order for the completion test
        let mut by_residual = candidates.clone();
        by_residual.sort_by_key(|&u| (core::cmp::Reverse(residual[u]), u));
        candidates.sort_by_key(|&u| {
            (
                !is_preferred(v, u),
                core::cmp::Reverse(residual[u]),
                u,
            )
        });

        let mut chosen: Vec<usize> = Vec::with_capacity(need);
        let mut in_chosen = vec![false; n];
        for &u in &candidates {
            if chosen.len() == need {
                break;
            }
            in_chosen[u] = true;
            chosen.push(u);
            if completable(&residual, &chosen, &in_chosen, &by_residual, need, &mut scratch) {
                continue;
            }
            chosen.pop();
            in_chosen[u] = false;
        }
        if chosen.len() < need {
            return Err(Error::NotRealizable);
        }
        for &u in &chosen {
            residual[u] -= 1;
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// Whether `chosen`, topped up to `need` vertices with the highest-residual
/// unchosen ones, leaves a sequence satisfying Erdős–Gallai.
fn completable(
    residual: &[u32],
    chosen: &[usize],
    in_chosen: &[bool],
    by_residual: &[usize],
    need: usize,
    scratch: &mut Vec<u32>,
) -> bool {
    scratch.clear();
    scratch.extend_from_slice(residual);
    for &u in chosen {
        scratch[u] -= 1;
    }
    let mut missing = need - chosen.len();
    for &u in by_residual {
        if missing == 0 {
            break;
        }
        if !in_chosen[u] {
            scratch[u] -= 1;
            missing -= 1;
        }
    }
    if missing > 0 {
        return false;
    }
    scratch.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai_sorted(scratch)
}

/// Builds every slice of `target` against the matching slice of `original`.
pub fn build_temporal(target: &DegreeMatrix, original: &TemporalGraph) -> Result<TemporalGraph> {
    if target.rows() != original.node_count() || target.cols() != original.slice_count() {
        return Err(Error::ShapeMismatch {
            expected: (original.node_count(), original.slice_count()),
            found: (target.rows(), target.cols()),
        });
    }
    let slices = (0..target.cols())
        .map(|t| build_slice(&target.column(t), original.slice(t)))
        .collect::<Result<Vec<_>>>()?;
    TemporalGraph::new(original.node_count(), slices)
}
