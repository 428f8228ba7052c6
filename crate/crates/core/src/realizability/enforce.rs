use alloc::vec;
use alloc::vec::Vec;

use super::{erdos_gallai_slack, GroupDegreeProfile};

/// Lowers group degrees until the Erdős–Gallai inequalities hold.
///
/// Each round re-linearizes the constraints around the current candidate.
/// The prefix constraints taken at group boundaries are differenced, giving
/// one constraint per group: the degree its block contributes may not exceed
/// the slack it adds. A group violating its constraint by `v` is lowered by
/// `ceil(v / size)`, just enough to reverse it. Groups whose input degree is
/// strictly below another's are then capped at that group's new degree, so
/// the input order is kept. Every round with a violation lowers at least one
/// positive degree, and the all-zero profile is feasible, so the loop
/// terminates.
///
/// Degrees never increase and groups stay degree-uniform. Profiles that
/// already satisfy the inequalities are returned unchanged.
pub fn enforce_realizability(profile: &GroupDegreeProfile) -> GroupDegreeProfile {
    let initial = profile.delta();
    let sizes = profile.sizes();
    let m = profile.group_count();
    let mut delta = initial.to_vec();

    // groups by non-increasing input degree; ties keep their index order
    let mut rank: Vec<usize> = (0..m).collect();
    rank.sort_by(|&a, &b| initial[b].cmp(&initial[a]).then(a.cmp(&b)));

    let mut order: Vec<usize> = (0..m).collect();
    let mut sorted = Vec::with_capacity(profile.node_count());
    let mut magnitude = vec![0i64; m];
    loop {
        order.sort_by(|&a, &b| {
            delta[b]
                .cmp(&delta[a])
                .then(initial[b].cmp(&initial[a]))
                .then(a.cmp(&b))
        });
        sorted.clear();
        for &g in &order {
            sorted.extend(core::iter::repeat_n(delta[g], sizes[g]));
        }
        let slack = erdos_gallai_slack(&sorted);
        if slack.iter().all(|&s| s >= 0) {
            break;
        }

        // per-group differenced constraints: the slack a group's block adds
        // between the prefix ending before it and the prefix ending after it
        magnitude.fill(0);
        let (mut pos, mut before) = (0, 0i64);
        for &g in &order {
            pos += sizes[g];
            let after = slack[pos - 1];
            magnitude[g] = (before - after).max(0);
            before = after;
        }
        let mut progressed = false;
        for g in 0..m {
            if magnitude[g] > 0 && delta[g] > 0 {
                let size = sizes[g] as i64;
                let cut = ((magnitude[g] + size - 1) / size).min(i64::from(delta[g]));
                delta[g] -= cut as u32;
                progressed = true;
            }
        }
        if !progressed {
            // every block adds slack yet some prefix is short: lower the
            // highest positive group by one
            let g = (0..m)
                .filter(|&h| delta[h] > 0)
                .max_by(|&a, &b| delta[a].cmp(&delta[b]).then(b.cmp(&a)))
                .expect("a violated prefix always covers a positive degree");
            delta[g] -= 1;
        }

        // propagate: no group may end above a group that started strictly higher
        let mut cap = u32::MAX;
        let mut block_min = u32::MAX;
        for (idx, &g) in rank.iter().enumerate() {
            if idx > 0 && initial[rank[idx - 1]] != initial[g] {
                cap = cap.min(block_min);
                block_min = u32::MAX;
            }
            delta[g] = delta[g].min(cap);
            block_min = block_min.min(delta[g]);
        }
    }
    profile.with_delta(delta)
}
