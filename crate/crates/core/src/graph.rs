//! Time-varying graphs, degree matrices and k-anonymity checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Undirected edge stored as `(min, max)`.
pub type Edge = (usize, usize);

fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Ordered sequence of simple undirected graphs over the node set `0..n`.
///
/// Slices are either time steps or layers of a multi-layer graph; the
/// algorithms do not care about their order. Edge lists are kept sorted and
/// deduplicated so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalGraph {
    n: usize,
    slices: Vec<Vec<Edge>>,
}

impl TemporalGraph {
    /// Builds a graph from raw edge lists. Edges are normalized, sorted and
    /// deduplicated; `(u, v)` and `(v, u)` denote the same edge.
    pub fn new(n: usize, slices: Vec<Vec<Edge>>) -> Result<Self> {
        if slices.is_empty() {
            return Err(Error::NoSlices);
        }
        let mut out = Vec::with_capacity(slices.len());
        for (t, slice) in slices.into_iter().enumerate() {
            let mut edges = Vec::with_capacity(slice.len());
            for (u, v) in slice {
                if u >= n {
                    return Err(Error::NodeOutOfRange { node: u, n });
                }
                if v >= n {
                    return Err(Error::NodeOutOfRange { node: v, n });
                }
                if u == v {
                    return Err(Error::SelfLoop { slice: t, node: u });
                }
                edges.push(normalize(u, v));
            }
            edges.sort_unstable();
            edges.dedup();
            out.push(edges);
        }
        Ok(TemporalGraph { n, slices: out })
    }

    /// Graph with `slice_count` empty slices.
    pub fn empty(n: usize, slice_count: usize) -> Result<Self> {
        Self::new(n, vec![Vec::new(); slice_count])
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn slice_count(&self) -> usize {
        self.slices.len()
    }

    pub fn slice(&self, t: usize) -> &[Edge] {
        &self.slices[t]
    }

    pub fn slices(&self) -> &[Vec<Edge>] {
        &self.slices
    }

    pub fn edge_count(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, t: usize, u: usize, v: usize) -> bool {
        self.slices[t].binary_search(&normalize(u, v)).is_ok()
    }

    /// Merges consecutive runs of `width` slices into one slice each (edge
    /// union). The last bucket may cover fewer slices.
    pub fn rebucket(&self, width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidParameter("bucket width must be positive"));
        }
        let slices = self
            .slices
            .chunks(width)
            .map(|chunk| chunk.iter().flatten().copied().collect())
            .collect();
        Self::new(self.n, slices)
    }

    /// Applies `perm` (old index -> new index) to every slice.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::ShapeMismatch {
                expected: (self.n, 1),
                found: (perm.len(), 1),
            });
        }
        let slices = self
            .slices
            .iter()
            .map(|s| s.iter().map(|&(u, v)| (perm[u], perm[v])).collect())
            .collect();
        Self::new(self.n, slices)
    }

    fn check_same_shape(&self, other: &TemporalGraph) -> Result<()> {
        if self.n != other.n || self.slice_count() != other.slice_count() {
            return Err(Error::ShapeMismatch {
                expected: (self.n, self.slice_count()),
                found: (other.n, other.slice_count()),
            });
        }
        Ok(())
    }
}

/// `n x T` matrix of per-node, per-slice degrees, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeMatrix {
    n: usize,
    t: usize,
    values: Vec<u32>,
}

impl DegreeMatrix {
    pub fn zeros(n: usize, t: usize) -> Self {
        DegreeMatrix {
            n,
            t,
            values: vec![0; n * t],
        }
    }

    /// Builds a matrix from rows of equal length. Entries are not bounds
    /// checked here, see [`DegreeMatrix::check_degree_bounds`].
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let t = rows.first().map_or(0, Vec::len);
        let mut values = Vec::with_capacity(n * t);
        for row in rows {
            if row.len() != t {
                return Err(Error::ShapeMismatch {
                    expected: (n, t),
                    found: (n, row.len()),
                });
            }
            values.extend_from_slice(row);
        }
        Ok(DegreeMatrix { n, t, values })
    }

    /// Checks `d[i][t] <= n - 1` for every entry.
    pub fn check_degree_bounds(&self) -> Result<()> {
        match self.values.iter().find(|&&d| d as usize >= self.n) {
            Some(&degree) => Err(Error::DegreeOutOfRange { degree, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.t
    }

    pub fn get(&self, i: usize, t: usize) -> u32 {
        self.values[i * self.t + t]
    }

    pub fn set(&mut self, i: usize, t: usize, value: u32) {
        self.values[i * self.t + t] = value;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.values[i * self.t..(i + 1) * self.t]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.values[i * self.t..(i + 1) * self.t]
    }

    pub fn column(&self, t: usize) -> Vec<u32> {
        (0..self.n).map(|i| self.get(i, t)).collect()
    }

    pub fn set_column(&mut self, t: usize, column: &[u32]) {
        for (i, &d) in column.iter().enumerate() {
            self.set(i, t, d);
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    fn check_same_shape(&self, other: &DegreeMatrix) -> Result<()> {
        if self.n != other.n || self.t != other.t {
            return Err(Error::ShapeMismatch {
                expected: (self.n, self.t),
                found: (other.n, other.t),
            });
        }
        Ok(())
    }
}

/// Anonymity level `k`, validated against the node count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnonymityLevel(usize);

impl AnonymityLevel {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidAnonymity { k, n });
        }
        Ok(AnonymityLevel(k))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

pub fn degree_matrix(g: &TemporalGraph) -> DegreeMatrix {
    let mut d = DegreeMatrix::zeros(g.node_count(), g.slice_count());
    for (t, slice) in g.slices().iter().enumerate() {
        for &(u, v) in slice {
            d.values[u * d.t + t] += 1;
            d.values[v * d.t + t] += 1;
        }
    }
    d
}

/// Size of the smallest class of identical rows.
pub fn anonymity_of(d: &DegreeMatrix) -> usize {
    if d.rows() == 0 {
        return 0;
    }
    let mut rows: Vec<&[u32]> = (0..d.rows()).map(|i| d.row(i)).collect();
    rows.sort_unstable();
    rows.chunk_by(|a, b| a == b)
        .map(<[_]>::len)
        .min()
        .unwrap_or(0)
}

/// True iff every row equals at least `k - 1` other rows.
pub fn is_k_anonymous(d: &DegreeMatrix, k: usize) -> bool {
    k <= 1 || anonymity_of(d) >= k
}

/// Nodes whose temporal degree vector is unique, i.e. re-identifiable from
/// degrees alone.
pub fn unique_rows(d: &DegreeMatrix) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..d.rows()).collect();
    idx.sort_by(|&a, &b| d.row(a).cmp(d.row(b)).then(a.cmp(&b)));
    let mut out = Vec::new();
    for run in idx.chunk_by(|&a, &b| d.row(a) == d.row(b)) {
        if run.len() == 1 {
            out.push(run[0]);
        }
    }
    out.sort_unstable();
    out
}

/// Total size of the per-slice symmetric differences of the edge sets.
pub fn edge_edit_count(g: &TemporalGraph, h: &TemporalGraph) -> Result<usize> {
    g.check_same_shape(h)?;
    Ok(g.slices()
        .iter()
        .zip(h.slices())
        .map(|(a, b)| symmetric_difference_len(a, b))
        .sum())
}

/// Number of edges present in exactly one of two sorted edge lists.
pub fn symmetric_difference_len(a: &[Edge], b: &[Edge]) -> usize {
    a.len() + b.len() - 2 * overlap(a, b)
}

/// Number of edges shared by two sorted edge lists.
pub fn overlap(a: &[Edge], b: &[Edge]) -> usize {
    let (mut i, mut j, mut shared) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                shared += 1;
                i += 1;
                j += 1;
            }
        }
    }
    shared
}

/// Entry-wise l1 distance between two degree matrices, i.e. twice the
/// edit-distance lower bound.
pub fn l1_distance(d: &DegreeMatrix, e: &DegreeMatrix) -> Result<u64> {
    d.check_same_shape(e)?;
    Ok(d.values
        .iter()
        .zip(&e.values)
        .map(|(&a, &b)| u64::from(a.abs_diff(b)))
        .sum())
}

/// Per-column l1 distance.
pub fn column_l1_distance(d: &DegreeMatrix, e: &DegreeMatrix, t: usize) -> u64 {
    (0..d.rows())
        .map(|i| u64::from(d.get(i, t).abs_diff(e.get(i, t))))
        .sum()
}
