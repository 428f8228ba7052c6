use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{check_assignment_input, l1, AnonymityGrouping, AssignmentOutcome, MedianMatrix};
use crate::graph::{AnonymityLevel, DegreeMatrix};
use crate::Result;

/// Randomized greedy assignment.
///
/// For each of `perms` random orders of the medians, every median in turn
/// takes its `k` l1-nearest nodes that are still free; leftover nodes then
/// join their nearest median. The cheapest of the `perms` groupings (by total
/// cost, first one on ties) is returned.
///
/// Distances and the per-median nearest-node orders do not depend on the
/// permutation, so they are computed once: `O(m n log n)` for the sort plus
/// `O(perms * m * n)` for the walks.
pub fn greedy_assignment<R: Rng + ?Sized>(
    d: &DegreeMatrix,
    p: &MedianMatrix,
    k: AnonymityLevel,
    perms: usize,
    rng: &mut R,
) -> Result<AssignmentOutcome> {
    let k = k.get();
    check_assignment_input(d, p, k)?;
    let n = d.rows();
    let m = p.group_count();
    let perms = perms.max(1);

    let dist: Vec<Vec<u64>> = (0..m)
        .map(|j| (0..n).map(|i| l1(d.row(i), p.row(j))).collect())
        .collect();
    let mut nearest = vec![(0usize, u64::MAX); n];
    for (j, row) in dist.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            if c < nearest[i].1 {
                nearest[i] = (j, c);
            }
        }
    }
    let order: Vec<Vec<u32>> = dist
        .iter()
        .map(|row| {
            let mut keyed: Vec<(u64, u32)> =
                row.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
            keyed.sort_unstable();
            keyed.into_iter().map(|(_, i)| i).collect()
        })
        .collect();

    let mut medians: Vec<usize> = (0..m).collect();
    let mut assigned = vec![usize::MAX; n];
    let mut best: Option<(u64, u64, Vec<usize>)> = None;
    for _ in 0..perms {
        medians.shuffle(rng);
        assigned.fill(usize::MAX);
        let mut excess = 0;
        for &j in &medians {
            let mut taken = 0;
            for &i in &order[j] {
                if taken == k {
                    break;
                }
                let i = i as usize;
                if assigned[i] == usize::MAX {
                    assigned[i] = j;
                    excess += dist[j][i] - nearest[i].1;
                    taken += 1;
                }
            }
        }
        let mut cost = 0;
        for i in 0..n {
            if assigned[i] == usize::MAX {
                assigned[i] = nearest[i].0;
            }
            cost += dist[assigned[i]][i];
        }
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, excess, assigned.clone()));
        }
    }
    let (cost, constrained_excess, assignment) = best.expect("at least one permutation");
    Ok(AssignmentOutcome {
        grouping: AnonymityGrouping::new(assignment, m, k)?,
        cost,
        constrained_excess,
    })
}
