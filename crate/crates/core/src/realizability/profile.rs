use alloc::vec::Vec;

use super::{erdos_gallai_holds, is_graphical};
use crate::{Error, Result};

/// Degrees of the anonymity groups in one slice.
///
/// Group `j` has `sizes[j]` members, all with degree `delta[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDegreeProfile {
    delta: Vec<u32>,
    sizes: Vec<usize>,
    ordering: Vec<usize>,
}

impl GroupDegreeProfile {
    pub fn new(delta: Vec<u32>, sizes: Vec<usize>) -> Result<Self> {
        if delta.len() != sizes.len() {
            return Err(Error::ShapeMismatch {
                expected: (delta.len(), 1),
                found: (sizes.len(), 1),
            });
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidParameter("group sizes must be positive"));
        }
        let n: usize = sizes.iter().sum();
        if let Some(&degree) = delta.iter().find(|&&d| d as usize >= n) {
            return Err(Error::DegreeOutOfRange { degree, n });
        }
        Ok(Self::from_parts(delta, sizes))
    }

    pub(crate) fn from_parts(delta: Vec<u32>, sizes: Vec<usize>) -> Self {
        let mut ordering: Vec<usize> = (0..delta.len()).collect();
        ordering.sort_by(|&a, &b| delta[b].cmp(&delta[a]).then(a.cmp(&b)));
        GroupDegreeProfile {
            delta,
            sizes,
            ordering,
        }
    }

    pub(crate) fn with_delta(&self, delta: Vec<u32>) -> Self {
        Self::from_parts(delta, self.sizes.clone())
    }

    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Group indices by non-increasing degree, lower index first on ties.
    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn group_count(&self) -> usize {
        self.delta.len()
    }

    pub fn node_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn degree_sum(&self) -> u64 {
        self.delta
            .iter()
            .zip(&self.sizes)
            .map(|(&d, &s)| u64::from(d) * s as u64)
            .sum()
    }

    /// The node-level sequence in sorted (non-increasing) order.
    pub fn sorted_sequence(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.node_count());
        for &g in &self.ordering {
            out.extend(core::iter::repeat_n(self.delta[g], self.sizes[g]));
        }
        out
    }

    pub fn satisfies_erdos_gallai(&self) -> bool {
        erdos_gallai_holds(&self.sorted_sequence())
    }

    pub fn is_realizable(&self) -> bool {
        is_graphical(&self.sorted_sequence())
    }

    /// Node-level l1 distance `sum_j sizes[j] * |delta[j] - other[j]|`.
    pub fn distance(&self, other: &GroupDegreeProfile) -> u64 {
        self.delta
            .iter()
            .zip(&other.delta)
            .zip(&self.sizes)
            .map(|((&a, &b), &s)| u64::from(a.abs_diff(b)) * s as u64)
            .sum()
    }
}
