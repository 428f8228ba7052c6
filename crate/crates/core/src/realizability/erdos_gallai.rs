use alloc::vec::Vec;

use crate::{Error, Result};

/// Calls `f(j, rhs_j - lhs_j)` for every prefix length `j = 1..=n` of a
/// non-increasing sequence, where `lhs_j` is the prefix sum and
/// `rhs_j = j(j-1) + sum_{i>j} min(d_i, j)`. Runs in `O(n)`.
fn for_each_slack(sorted: &[u32], mut f: impl FnMut(usize, i64) -> bool) {
    let n = sorted.len();
    let total: i64 = sorted.iter().map(|&d| i64::from(d)).sum();
    // prefix[s] = sum of the first s entries
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0i64);
    for &d in sorted {
        prefix.push(prefix.last().unwrap() + i64::from(d));
    }
    // at_least = number of entries >= j; non-increasing in j
    let mut at_least = n;
    for j in 1..=n {
        while at_least > 0 && (sorted[at_least - 1] as usize) < j {
            at_least -= 1;
        }
        let j64 = j as i64;
        let capped = if at_least > j { j64 * (at_least - j) as i64 } else { 0 };
        let tail_start = at_least.max(j);
        let rhs = j64 * (j64 - 1) + capped + (total - prefix[tail_start]);
        if !f(j, rhs - prefix[j]) {
            return;
        }
    }
}

/// Erdős–Gallai inequalities on a non-increasing sequence (parity ignored).
pub fn erdos_gallai_sorted(sorted: &[u32]) -> bool {
    debug_assert!(sorted.windows(2).all(|w| w[0] >= w[1]));
    let mut ok = true;
    for_each_slack(sorted, |_, slack| {
        ok = slack >= 0;
        ok
    });
    ok
}

/// Erdős–Gallai inequalities on an arbitrary-order sequence (parity ignored).
pub fn erdos_gallai_holds(seq: &[u32]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai_sorted(&sorted)
}

/// `rhs_j - lhs_j` for every prefix of a non-increasing sequence; negative
/// entries are violated constraints.
pub fn erdos_gallai_slack(sorted: &[u32]) -> Vec<i64> {
    let mut out = Vec::with_capacity(sorted.len());
    for_each_slack(sorted, |_, slack| {
        out.push(slack);
        true
    });
    out
}

/// Even sum, every entry below `n`, and the Erdős–Gallai inequalities.
pub fn is_graphical(seq: &[u32]) -> bool {
    let n = seq.len();
    seq.iter().all(|&d| (d as usize) < n)
        && seq.iter().map(|&d| u64::from(d)).sum::<u64>() % 2 == 0
        && erdos_gallai_holds(seq)
}

/// Whether some simple graph has degree sequence `seq`.
pub fn is_realizable(seq: &[u32]) -> Result<bool> {
    let n = seq.len();
    if let Some(&degree) = seq.iter().find(|&&d| d as usize >= n) {
        return Err(Error::DegreeOutOfRange { degree, n });
    }
    Ok(is_graphical(seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Degree sequences of every labelled simple graph on `n` nodes.
    fn all_graph_degrees(n: usize) -> Vec<Vec<u32>> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let mut deg = vec![0u32; n];
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                deg
            })
            .collect()
    }

    /// Direct `O(n^2)` evaluation of the inequalities.
    fn naive(seq: &[u32]) -> bool {
        let mut s = seq.to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        let n = s.len();
        (1..=n).all(|j| {
            let lhs: u64 = s[..j].iter().map(|&d| u64::from(d)).sum();
            let rhs = (j * (j - 1)) as u64
                + s[j..].iter().map(|&d| u64::from(d.min(j as u32))).sum::<u64>();
            lhs <= rhs
        })
    }

    #[test]
    fn examples() {
        assert_eq!(is_realizable(&[3, 3, 3, 3]), Ok(true));
        assert_eq!(is_realizable(&[1, 1, 1, 2, 2]), Ok(false));
        assert_eq!(is_realizable(&[3, 3, 1, 1]), Ok(false));
        assert!(is_realizable(&[4, 0, 0, 0]).is_err());
        assert_eq!(is_realizable(&[]), Ok(true));
        assert_eq!(erdos_gallai_slack(&[3, 3, 1, 1]), vec![0, -2, 0, 4]);
    }

    #[test]
    fn agrees_with_graph_enumeration() {
        for n in 1..=6 {
            let mut graphical: Vec<Vec<u32>> = all_graph_degrees(n);
            graphical.sort();
            graphical.dedup();
            // every sequence with entries < n
            let mut seq = vec![0u32; n];
            loop {
                let expected = graphical.binary_search(&seq).is_ok();
                assert_eq!(is_realizable(&seq), Ok(expected), "{seq:?}");
                assert_eq!(erdos_gallai_holds(&seq), naive(&seq), "{seq:?}");
                let mut c = 0;
                while c < n && seq[c] as usize == n - 1 {
                    seq[c] = 0;
                    c += 1;
                }
                if c == n {
                    break;
                }
                seq[c] += 1;
            }
        }
    }
}
