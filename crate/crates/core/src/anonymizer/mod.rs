//! Degree-matrix anonymization: a constrained k-means in l1 space.
//!
//! Nodes are partitioned into `m = floor(n / k)` groups of at least `k`
//! members. Each group is represented by the l1 set median of its members'
//! temporal degree vectors, and every member is given that median as its
//! anonymized degree vector. The assignment step is either the randomized
//! greedy heuristic ([`greedy_assignment`]) or an exact min-cost flow
//! ([`exact_assignment`]).

mod exact;
mod flow;
mod greedy;
mod kmeans;
mod median;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{l1_distance, DegreeMatrix};
use crate::{Error, Result};

pub use exact::{exact_assignment, EXACT_ARC_LIMIT};
pub use greedy::greedy_assignment;
pub use kmeans::{
    degree_anonymization, initial_partition, restart_rng, run_restart, select_best,
    AnonymizationOutcome, AnonymizerConfig, AssignmentMode, RestartResult,
};
pub use median::{group_medians, set_median};

/// Number of anonymity groups for `n` nodes at level `k`.
pub fn group_count(n: usize, k: usize) -> usize {
    n / k
}

/// l1 distance between two degree vectors.
pub fn l1(a: &[u32], b: &[u32]) -> u64 {
    a.iter().zip(b).map(|(&x, &y)| u64::from(x.abs_diff(y))).sum()
}

/// Partition of the nodes into groups of at least `k` members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnonymityGrouping {
    k: usize,
    group_count: usize,
    assignment: Vec<usize>,
}

impl AnonymityGrouping {
    pub fn new(assignment: Vec<usize>, group_count: usize, k: usize) -> Result<Self> {
        let n = assignment.len();
        if k == 0 || k > n {
            return Err(Error::InvalidAnonymity { k, n });
        }
        if group_count == 0 || group_count * k > n {
            return Err(Error::InvalidParameter("group count must satisfy 1 <= m*k <= n"));
        }
        let mut sizes = vec![0usize; group_count];
        for &g in &assignment {
            if g >= group_count {
                return Err(Error::InvalidParameter("group index out of range"));
            }
            sizes[g] += 1;
        }
        if sizes.iter().any(|&s| s < k) {
            return Err(Error::InvalidParameter("every group needs at least k members"));
        }
        Ok(AnonymityGrouping {
            k,
            group_count,
            assignment,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn group_count(&self) -> usize {
        self.group_count
    }

    pub fn node_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn group_of(&self, node: usize) -> usize {
        self.assignment[node]
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.group_count];
        for &g in &self.assignment {
            sizes[g] += 1;
        }
        sizes
    }

    /// Members of every group, in increasing node order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.group_count];
        for (i, &g) in self.assignment.iter().enumerate() {
            out[g].push(i);
        }
        out
    }

    /// The `n x m` 0/1 indicator matrix `S`, row-major.
    pub fn indicator(&self) -> Vec<Vec<u8>> {
        self.assignment
            .iter()
            .map(|&g| {
                let mut row = vec![0u8; self.group_count];
                row[g] = 1;
                row
            })
            .collect()
    }
}

/// A grouping under construction: some nodes are not assigned yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGrouping {
    pub k: usize,
    pub group_count: usize,
    pub assignment: Vec<Option<usize>>,
}

/// `m x T` matrix whose row `j` is the set median of group `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MedianMatrix(DegreeMatrix);

impl MedianMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        DegreeMatrix::from_rows(rows).map(MedianMatrix)
    }

    pub fn group_count(&self) -> usize {
        self.0.rows()
    }

    pub fn row(&self, j: usize) -> &[u32] {
        self.0.row(j)
    }

    pub fn as_matrix(&self) -> &DegreeMatrix {
        &self.0
    }

    /// Expands the medians through a grouping: row `i` of the result is the
    /// median of node `i`'s group.
    pub fn expand(&self, grouping: &AnonymityGrouping) -> DegreeMatrix {
        let mut out = DegreeMatrix::zeros(grouping.node_count(), self.0.cols());
        for (i, &g) in grouping.assignment().iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(g));
        }
        out
    }
}

/// Result of one assignment step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentOutcome {
    pub grouping: AnonymityGrouping,
    /// Total l1 cost of every node to its group median.
    pub cost: u64,
    /// Constrained-phase cost: over the `k` core members of each group, the
    /// sum of `dist(node, group median) - dist(node, nearest median)`. Total
    /// cost is this plus the sum of every node's nearest-median distance, so
    /// minimizing one minimizes the other.
    pub constrained_excess: u64,
}

/// Total l1 cost of a grouping against a set of medians.
pub fn assignment_cost(d: &DegreeMatrix, p: &MedianMatrix, grouping: &AnonymityGrouping) -> u64 {
    grouping
        .assignment()
        .iter()
        .enumerate()
        .map(|(i, &g)| l1(d.row(i), p.row(g)))
        .sum()
}

/// Index of the l1-closest median, lowest index on ties.
pub(crate) fn nearest_median(row: &[u32], p: &MedianMatrix) -> (usize, u64) {
    let mut best = (0, u64::MAX);
    for j in 0..p.group_count() {
        let dist = l1(row, p.row(j));
        if dist < best.1 {
            best = (j, dist);
        }
    }
    best
}

/// Attaches every unassigned node to its l1-closest median (lowest group
/// index on ties).
pub fn assign_residual(
    d: &DegreeMatrix,
    p: &MedianMatrix,
    partial: &PartialGrouping,
) -> Result<AnonymityGrouping> {
    if partial.assignment.len() != d.rows() || p.group_count() != partial.group_count {
        return Err(Error::ShapeMismatch {
            expected: (d.rows(), partial.group_count),
            found: (partial.assignment.len(), p.group_count()),
        });
    }
    let assignment = partial
        .assignment
        .iter()
        .enumerate()
        .map(|(i, g)| g.unwrap_or_else(|| nearest_median(d.row(i), p).0))
        .collect();
    AnonymityGrouping::new(assignment, partial.group_count, partial.k)
}

fn check_assignment_input(d: &DegreeMatrix, p: &MedianMatrix, k: usize) -> Result<()> {
    let n = d.rows();
    if k == 0 || k > n {
        return Err(Error::InvalidAnonymity { k, n });
    }
    if p.group_count() == 0 || p.group_count() * k > n {
        return Err(Error::InvalidParameter("median count must satisfy 1 <= m*k <= n"));
    }
    if p.as_matrix().cols() != d.cols() {
        return Err(Error::ShapeMismatch {
            expected: (p.group_count(), d.cols()),
            found: (p.group_count(), p.as_matrix().cols()),
        });
    }
    Ok(())
}

/// Normalized anonymization cost `sum |d - d~| / (T n (n - 1))`.
pub fn normalized_cost(d: &DegreeMatrix, d_anon: &DegreeMatrix) -> Result<f64> {
    let raw = l1_distance(d, d_anon)?;
    let n = d.rows() as f64;
    let denom = d.cols() as f64 * n * (n - 1.0);
    if denom <= 0.0 {
        return Ok(0.0);
    }
    Ok(raw as f64 / denom)
}
