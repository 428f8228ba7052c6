//! Exhaustive optimal group-uniform repair, for small instances only.

use alloc::vec;
use alloc::vec::Vec;

use super::GroupDegreeProfile;
use crate::{Error, Result};

pub const ORACLE_MAX_NODES: usize = 16;
pub const ORACLE_MAX_GROUPS: usize = 8;

/// Cheapest realizable profile with the same groups, by branch and bound over
/// every group-degree vector in `[0, n-1]^m`. Degrees may move up or down and
/// the group order is free. Returns the profile and its node-level l1 cost.
pub fn optimal_uniform_repair(profile: &GroupDegreeProfile) -> Result<(GroupDegreeProfile, u64)> {
    let n = profile.node_count();
    let m = profile.group_count();
    if n > ORACLE_MAX_NODES || m > ORACLE_MAX_GROUPS {
        return Err(Error::InstanceTooLarge {
            arcs: n,
            limit: ORACLE_MAX_NODES,
        });
    }
    // all-zero is always realizable
    let zero = profile.with_delta(vec![0; m]);
    let mut best = (profile.distance(&zero), vec![0u32; m]);
    // larger groups first: their moves are the most expensive, so they prune best
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&g| (core::cmp::Reverse(profile.sizes()[g]), g));
    let mut cur = profile.delta().to_vec();
    search(profile, &order, 0, 0, &mut cur, &mut best);
    let (cost, delta) = best;
    Ok((profile.with_delta(delta), cost))
}

fn search(
    profile: &GroupDegreeProfile,
    order: &[usize],
    depth: usize,
    acc: u64,
    cur: &mut Vec<u32>,
    best: &mut (u64, Vec<u32>),
) {
    if acc >= best.0 {
        return;
    }
    if depth == order.len() {
        if profile.with_delta(cur.clone()).is_realizable() {
            *best = (acc, cur.clone());
        }
        return;
    }
    let g = order[depth];
    let base = profile.delta()[g];
    let size = profile.sizes()[g] as u64;
    let max = profile.node_count().saturating_sub(1) as u32;
    // values by increasing distance from the input degree
    for step in 0..=max {
        let cost = acc + size * u64::from(step);
        if cost >= best.0 {
            break;
        }
        let down = base.checked_sub(step);
        let up = if step > 0 && base + step <= max { Some(base + step) } else { None };
        if down.is_none() && up.is_none() {
            break;
        }
        for value in [down, up].into_iter().flatten() {
            cur[g] = value;
            search(profile, order, depth + 1, cost, cur, best);
        }
    }
    cur[g] = base;
}
