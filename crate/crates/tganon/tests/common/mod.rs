//! Brute-force oracles shared by the integration tests. They are written
//! from first principles and use nothing from the library beyond plain data.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;

/// Graphicality by Havel–Hakimi reduction: repeatedly connect the largest
/// remaining degree to the next largest ones.
pub fn graphical(seq: &[u32]) -> bool {
    let mut s: Vec<u32> = seq.to_vec();
    loop {
        s.sort_unstable_by(|a, b| b.cmp(a));
        while s.last() == Some(&0) {
            s.pop();
        }
        let Some((&first, rest)) = s.split_first() else {
            return true;
        };
        let first = first as usize;
        if first > rest.len() {
            return false;
        }
        let mut next = rest.to_vec();
        for d in next.iter_mut().take(first) {
            if *d == 0 {
                return false;
            }
            *d -= 1;
        }
        s = next;
    }
}

/// True iff every row equals at least `k - 1` other rows.
pub fn k_anonymous(rows: &[Vec<u32>], k: usize) -> bool {
    let mut counts: HashMap<&[u32], usize> = HashMap::new();
    for r in rows {
        *counts.entry(r.as_slice()).or_default() += 1;
    }
    counts.values().all(|&c| c >= k)
}

pub fn l1(a: &[u32], b: &[u32]) -> u64 {
    a.iter().zip(b).map(|(&x, &y)| u64::from(x.abs_diff(y))).sum()
}

/// Cheapest assignment of every node to some median such that every median
/// receives at least `k` nodes, by exhaustive search with pruning.
pub fn brute_force_assignment(d: &[Vec<u32>], p: &[Vec<u32>], k: usize) -> u64 {
    fn go(
        i: usize,
        d: &[Vec<u32>],
        p: &[Vec<u32>],
        k: usize,
        sizes: &mut Vec<usize>,
        cost: u64,
        best: &mut u64,
    ) {
        if cost >= *best {
            return;
        }
        let deficit: usize = sizes.iter().map(|&s| k.saturating_sub(s)).sum();
        if deficit > d.len() - i {
            return;
        }
        if i == d.len() {
            *best = cost;
            return;
        }
        for j in 0..p.len() {
            sizes[j] += 1;
            go(i + 1, d, p, k, sizes, cost + l1(&d[i], &p[j]), best);
            sizes[j] -= 1;
        }
    }
    let mut best = u64::MAX;
    go(0, d, p, k, &mut vec![0; p.len()], 0, &mut best);
    best
}

/// Cheapest group-uniform change (node-level l1) making `delta` realizable,
/// searching every group-degree vector in `[0, n-1]^m`.
pub fn brute_force_uniform_repair(delta: &[u32], sizes: &[usize]) -> u64 {
    let n: usize = sizes.iter().sum();
    let max = n.saturating_sub(1) as u32;
    let mut best = u64::MAX;
    let mut cur = vec![0u32; delta.len()];
    fn go(
        g: usize,
        delta: &[u32],
        sizes: &[usize],
        max: u32,
        cur: &mut Vec<u32>,
        cost: u64,
        best: &mut u64,
    ) {
        if cost >= *best {
            return;
        }
        if g == delta.len() {
            let seq: Vec<u32> = cur
                .iter()
                .zip(sizes)
                .flat_map(|(&v, &s)| std::iter::repeat_n(v, s))
                .collect();
            if graphical(&seq) {
                *best = cost;
            }
            return;
        }
        for v in 0..=max {
            cur[g] = v;
            let c = cost + sizes[g] as u64 * u64::from(v.abs_diff(delta[g]));
            go(g + 1, delta, sizes, max, cur, c, best);
        }
    }
    go(0, delta, sizes, max, &mut cur, 0, &mut best);
    best
}

/// Random group sizes: `n / k` groups of at least `k` nodes summing to `n`.
pub fn random_sizes<R: Rng>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    let m = n / k;
    let mut sizes = vec![k; m];
    for _ in 0..n - m * k {
        sizes[rng.random_range(0..m)] += 1;
    }
    sizes
}

/// Node-to-group assignment for consecutive blocks of the given sizes.
pub fn block_assignment(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(g, &s)| std::iter::repeat_n(g, s))
        .collect()
}

/// Random simple graph slices: every pair present with probability `p`.
pub fn random_slices<R: Rng>(n: usize, t: usize, p: f64, rng: &mut R) -> Vec<Vec<(usize, usize)>> {
    (0..t)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        })
        .collect()
}

/// Per-node, per-slice degrees of edge-list slices.
pub fn degree_rows(n: usize, slices: &[Vec<(usize, usize)>]) -> Vec<Vec<u32>> {
    let mut rows = vec![vec![0u32; slices.len()]; n];
    for (t, s) in slices.iter().enumerate() {
        for &(u, v) in s {
            rows[u][t] += 1;
            rows[v][t] += 1;
        }
    }
    rows
}

#[test]
fn oracles_agree_with_hand_examples() {
    assert!(graphical(&[2, 2, 2]));
    assert!(graphical(&[2, 2, 1, 1]));
    assert!(!graphical(&[3, 3, 1, 1]));
    assert!(!graphical(&[1, 1, 1]));
    assert!(k_anonymous(&[vec![1], vec![1], vec![1], vec![2], vec![2]], 2));
    assert!(!k_anonymous(&[vec![2, 2], vec![2, 1], vec![1, 2], vec![1, 1]], 2));
    // [3,3,1,1] in groups of two: lowering the top pair to 2 costs 2
    assert_eq!(brute_force_uniform_repair(&[3, 1], &[2, 2]), 2);
    // four rows against medians [4] and [1]: pairs {4,3} and {2,1}
    let d = [vec![4], vec![3], vec![2], vec![1]];
    assert_eq!(brute_force_assignment(&d, &[vec![4], vec![1]], 2), 2);
}
