//! Utility metrics: temporal correlation, PageRank and per-slice reports.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{column_l1_distance, degree_matrix, symmetric_difference_len, Edge, TemporalGraph};
use crate::{Error, Result};

pub const DEFAULT_DAMPING: f64 = 0.85;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const PAGERANK_MAX_ITERATIONS: usize = 10_000;

/// How node-time terms with an empty neighborhood enter the average.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IsolatedTerms {
    /// Dropped from the average.
    #[default]
    Exclude,
    /// Counted as zero overlap.
    AsZero,
}

/// Average topological overlap of neighborhoods between consecutive slices,
/// `sum_j a_ij(t) a_ij(t+1) / sqrt(k_i(t) k_i(t+1))`, over nodes and slice
/// pairs. Returns 0 when no term contributes.
pub fn temporal_correlation(g: &TemporalGraph, isolated: IsolatedTerms) -> Result<f64> {
    if g.slice_count() < 2 {
        return Err(Error::InvalidParameter("temporal correlation needs at least two slices"));
    }
    let n = g.node_count();
    let adjacency: Vec<Vec<Vec<usize>>> = g.slices().iter().map(|s| neighbors(n, s)).collect();
    let (mut sum, mut terms) = (0.0, 0usize);
    for pair in adjacency.windows(2) {
        for i in 0..n {
            let (a, b) = (&pair[0][i], &pair[1][i]);
            if a.is_empty() || b.is_empty() {
                if isolated == IsolatedTerms::AsZero {
                    terms += 1;
                }
                continue;
            }
            let shared = sorted_intersection(a, b) as f64;
            sum += shared / libm::sqrt(a.len() as f64 * b.len() as f64);
            terms += 1;
        }
    }
    Ok(if terms == 0 { 0.0 } else { sum / terms as f64 })
}

fn neighbors(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// PageRank by power iteration. Undirected edges count as two arcs and
/// degree-zero nodes teleport uniformly. Iterates until the l1 change drops
/// below `tol`.
pub fn pagerank(edges: &[Edge], n: usize, damping: f64, tol: f64) -> Result<Vec<f64>> {
    if !(damping > 0.0 && damping < 1.0) {
        return Err(Error::InvalidParameter("damping must lie in (0, 1)"));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = neighbors(n, edges);
    let uniform = 1.0 / n as f64;
    let mut rank = vec![uniform; n];
    let mut next = vec![0.0; n];
    for _ in 0..PAGERANK_MAX_ITERATIONS {
        let dangling: f64 = (0..n).filter(|&i| adj[i].is_empty()).map(|i| rank[i]).sum();
        let base = (1.0 - damping) * uniform + damping * dangling * uniform;
        next.fill(base);
        for (u, list) in adj.iter().enumerate() {
            if list.is_empty() {
                continue;
            }
            let share = damping * rank[u] / list.len() as f64;
            for &v in list {
                next[v] += share;
            }
        }
        let total: f64 = next.iter().sum();
        for x in &mut next {
            *x /= total;
        }
        let delta: f64 = rank.iter().zip(&next).map(|(a, b)| libm::fabs(a - b)).sum();
        core::mem::swap(&mut rank, &mut next);
        if delta < tol {
            return Ok(rank);
        }
    }
    Err(Error::NoConvergence {
        iterations: PAGERANK_MAX_ITERATIONS,
    })
}

pub fn cosine_similarity(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::ShapeMismatch {
            expected: (u.len(), 1),
            found: (v.len(), 1),
        });
    }
    let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let nu = libm::sqrt(u.iter().map(|a| a * a).sum());
    let nv = libm::sqrt(v.iter().map(|a| a * a).sum());
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((dot / (nu * nv)).clamp(-1.0, 1.0))
}

/// Per-slice comparison of an original graph and its anonymized version.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceUtility {
    pub slice: usize,
    /// Edges of the original slice.
    pub active_edges: usize,
    pub pr_cosine: f64,
    pub edge_edits: usize,
    pub l1_degree_dist: u64,
}

pub fn utility_report(
    original: &TemporalGraph,
    anonymized: &TemporalGraph,
    damping: f64,
) -> Result<Vec<SliceUtility>> {
    if original.node_count() != anonymized.node_count()
        || original.slice_count() != anonymized.slice_count()
    {
        return Err(Error::ShapeMismatch {
            expected: (original.node_count(), original.slice_count()),
            found: (anonymized.node_count(), anonymized.slice_count()),
        });
    }
    let (d, e) = (degree_matrix(original), degree_matrix(anonymized));
    (0..original.slice_count())
        .map(|t| slice_utility(original, anonymized, &d, &e, t, damping))
        .collect()
}

/// One row of [`utility_report`].
pub fn slice_utility(
    original: &TemporalGraph,
    anonymized: &TemporalGraph,
    d: &crate::DegreeMatrix,
    e: &crate::DegreeMatrix,
    t: usize,
    damping: f64,
) -> Result<SliceUtility> {
    let n = original.node_count();
    let a = pagerank(original.slice(t), n, damping, DEFAULT_TOLERANCE)?;
    let b = pagerank(anonymized.slice(t), n, damping, DEFAULT_TOLERANCE)?;
    Ok(SliceUtility {
        slice: t,
        active_edges: original.slice(t).len(),
        pr_cosine: cosine_similarity(&a, &b)?,
        edge_edits: symmetric_difference_len(original.slice(t), anonymized.slice(t)),
        l1_degree_dist: column_l1_distance(d, e, t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Stationary vector of the same chain, by solving the linear system
    /// `(I - d M) x = (1 - d)/n * 1` with Gaussian elimination.
    fn pagerank_direct(edges: &[Edge], n: usize, d: f64) -> Vec<f64> {
        let adj = neighbors(n, edges);
        let mut a = vec![vec![0.0; n + 1]; n];
        for v in 0..n {
            a[v][v] = 1.0;
            a[v][n] = (1.0 - d) / n as f64;
            for u in 0..n {
                let w = if adj[u].is_empty() {
                    1.0 / n as f64
                } else if adj[u].contains(&v) {
                    1.0 / adj[u].len() as f64
                } else {
                    0.0
                };
                a[v][u] -= d * w;
            }
        }
        for c in 0..n {
            let p = (c..n).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
            a.swap(c, p);
            for r in 0..n {
                if r != c {
                    let f = a[r][c] / a[c][c];
                    for k in c..=n {
                        a[r][k] -= f * a[c][k];
                    }
                }
            }
        }
        (0..n).map(|r| a[r][n] / a[r][r]).collect()
    }

    #[test]
    fn pagerank_examples() {
        let tri = [(0, 1), (1, 2), (0, 2)];
        for x in pagerank(&tri, 3, 0.85, 1e-12).unwrap() {
            assert!((x - 1.0 / 3.0).abs() < 1e-12);
        }
        for x in pagerank(&[], 4, 0.85, 1e-12).unwrap() {
            assert!((x - 0.25).abs() < 1e-12);
        }
        let path = [(0, 1), (1, 2)];
        let pr = pagerank(&path, 3, 0.85, 1e-13).unwrap();
        let exact = pagerank_direct(&path, 3, 0.85);
        for (a, b) in pr.iter().zip(&exact) {
            assert!((a - b).abs() < 1e-10);
        }
        // frozen from the direct solve: ends 0.2567..., middle 0.4864...
        assert!((exact[1] - 0.486_486_486_486_486_5).abs() < 1e-12);
        assert!(pr[1] > pr[0] && pr[1] > pr[2]);
    }

    #[test]
    fn pagerank_with_dangling_matches_direct_solve() {
        let edges = [(0, 1), (1, 2), (2, 0), (2, 3)];
        let pr = pagerank(&edges, 6, 0.85, 1e-13).unwrap();
        let exact = pagerank_direct(&edges, 6, 0.85);
        for (a, b) in pr.iter().zip(&exact) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!((pr.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pagerank_parameter_errors() {
        assert!(pagerank(&[], 3, 1.0, 1e-9).is_err());
        assert!(pagerank(&[], 3, 0.5, 0.0).is_err());
    }

    #[test]
    fn cosine_examples() {
        assert!((cosine_similarity(&[0.3, 0.7], &[0.3, 0.7]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(cosine_similarity(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
        let c = cosine_similarity(&[1.0, 0.0], &[1.0, 1.0]).unwrap();
        assert!((c - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(cosine_similarity(&[0.0], &[1.0]), Err(Error::ZeroVector));
    }

    #[test]
    fn correlation_examples() {
        let same = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2), (0, 2)]; 3]).unwrap();
        assert_eq!(temporal_correlation(&same, IsolatedTerms::Exclude).unwrap(), 1.0);

        let flip = TemporalGraph::new(4, vec![vec![(0, 1), (2, 3)], vec![(0, 2), (1, 3)]]).unwrap();
        assert_eq!(temporal_correlation(&flip, IsolatedTerms::Exclude).unwrap(), 0.0);

        let g = TemporalGraph::new(3, vec![vec![(0, 1), (0, 2)], vec![(0, 1)]]).unwrap();
        let expected = (core::f64::consts::FRAC_1_SQRT_2 + 1.0) / 2.0;
        let got = temporal_correlation(&g, IsolatedTerms::Exclude).unwrap();
        assert!((got - expected).abs() < 1e-15);
        assert!((got - 0.853_553_390_593_273_7).abs() < 1e-12);
        let with_zero = temporal_correlation(&g, IsolatedTerms::AsZero).unwrap();
        assert!((with_zero - (core::f64::consts::FRAC_1_SQRT_2 + 1.0) / 3.0).abs() < 1e-15);

        let single = TemporalGraph::empty(3, 1).unwrap();
        assert!(temporal_correlation(&single, IsolatedTerms::Exclude).is_err());
    }

    #[test]
    fn report_on_identical_graphs() {
        let g = TemporalGraph::new(4, vec![vec![(0, 1), (1, 2)], vec![]]).unwrap();
        let rows = utility_report(&g, &g, DEFAULT_DAMPING).unwrap();
        assert_eq!(rows.len(), 2);
        for r in &rows {
            assert!((r.pr_cosine - 1.0).abs() < 1e-12);
            assert_eq!(r.edge_edits, 0);
            assert_eq!(r.l1_degree_dist, 0);
        }
        assert_eq!(rows[0].active_edges, 2);
        assert_eq!(rows[1].active_edges, 0);
    }
}
