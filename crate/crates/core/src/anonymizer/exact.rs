use alloc::vec;
use alloc::vec::Vec;

use super::flow::MinCostFlow;
use super::{check_assignment_input, l1, AnonymityGrouping, AssignmentOutcome, MedianMatrix};
use crate::graph::{AnonymityLevel, DegreeMatrix};
use crate::{Error, Result};

/// Largest group-to-node arc count `m * n` accepted by [`exact_assignment`].
pub const EXACT_ARC_LIMIT: usize = 1_000_000;

/// Optimal assignment with group lower bound `k`.
///
/// Exactly `k` core members per group are chosen by min-cost flow
/// (source -> group, capacity `k`; group -> node, capacity 1; node -> sink,
/// capacity 1), then every remaining node joins its nearest median. Arc costs
/// are `dist(node, group) - dist(node, nearest median)`: a node left out of
/// every core pays its nearest distance anyway, so this is the cost a group
/// adds by claiming it. With these costs the two phases together minimize the
/// total cost over all groupings whose groups have at least `k` members.
pub fn exact_assignment(
    d: &DegreeMatrix,
    p: &MedianMatrix,
    k: AnonymityLevel,
) -> Result<AssignmentOutcome> {
    let k = k.get();
    check_assignment_input(d, p, k)?;
    let n = d.rows();
    let m = p.group_count();
    let arcs = m * n;
    if arcs > EXACT_ARC_LIMIT {
        return Err(Error::InstanceTooLarge {
            arcs,
            limit: EXACT_ARC_LIMIT,
        });
    }

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

    let source = 0;
    let sink = m + n + 1;
    let group_node = |j: usize| 1 + j;
    let member_node = |i: usize| 1 + m + i;
    let mut net = MinCostFlow::new(m + n + 2);
    for j in 0..m {
        net.add_arc(source, group_node(j), k as i64, 0);
    }
    let mut arc_ids = Vec::with_capacity(arcs);
    for (j, row) in dist.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            let excess = (c - nearest[i].1) as i64;
            arc_ids.push(net.add_arc(group_node(j), member_node(i), 1, excess));
        }
    }
    for i in 0..n {
        net.add_arc(member_node(i), sink, 1, 0);
    }
    let required = (m * k) as i64;
    let (flow, excess) = net.run(source, sink, required);
    debug_assert_eq!(flow, required, "m*k <= n guarantees a full flow");

    let mut assignment: Vec<Option<usize>> = vec![None; n];
    for j in 0..m {
        for i in 0..n {
            if net.flow_on(arc_ids[j * n + i]) > 0 {
                assignment[i] = Some(j);
            }
        }
    }
    let assignment: Vec<usize> = assignment
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.unwrap_or(nearest[i].0))
        .collect();
    let cost = assignment.iter().enumerate().map(|(i, &g)| dist[g][i]).sum();
    Ok(AssignmentOutcome {
        grouping: AnonymityGrouping::new(assignment, m, k)?,
        cost,
        constrained_excess: excess as u64,
    })
}
