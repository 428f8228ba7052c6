use alloc::vec::Vec;

use super::{AnonymityGrouping, MedianMatrix};
use crate::graph::DegreeMatrix;
use crate::{Error, Result};

/// l1 set median: the component-wise median, lower median for even counts.
pub fn set_median(vectors: &[&[u32]]) -> Result<Vec<u32>> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let t = first.len();
    if vectors.iter().any(|v| v.len() != t) {
        return Err(Error::ShapeMismatch {
            expected: (vectors.len(), t),
            found: (vectors.len(), vectors.iter().map(|v| v.len()).max().unwrap_or(0)),
        });
    }
    let mut column = Vec::with_capacity(vectors.len());
    Ok((0..t)
        .map(|c| {
            column.clear();
            column.extend(vectors.iter().map(|v| v[c]));
            let mid = (column.len() - 1) / 2;
            *column.select_nth_unstable(mid).1
        })
        .collect())
}

/// Recomputes the median of every group over all of its members.
pub fn group_medians(d: &DegreeMatrix, grouping: &AnonymityGrouping) -> MedianMatrix {
    let rows: Vec<Vec<u32>> = grouping
        .members()
        .iter()
        .map(|members| {
            let vectors: Vec<&[u32]> = members.iter().map(|&i| d.row(i)).collect();
            set_median(&vectors).expect("groups are non-empty and rows share a length")
        })
        .collect();
    MedianMatrix::from_rows(&rows).expect("median rows share a length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anonymizer::l1;
    use alloc::vec;

    /// Minimum total l1 distance over the integer bounding box.
    fn brute_force_median_cost(vectors: &[&[u32]]) -> u64 {
        let t = vectors[0].len();
        let lo: Vec<u32> = (0..t).map(|c| vectors.iter().map(|v| v[c]).min().unwrap()).collect();
        let hi: Vec<u32> = (0..t).map(|c| vectors.iter().map(|v| v[c]).max().unwrap()).collect();
        let mut best = u64::MAX;
        let mut cur = lo.clone();
        loop {
            best = best.min(vectors.iter().map(|v| l1(v, &cur)).sum());
            let mut c = 0;
            loop {
                if c == t {
                    return best;
                }
                if cur[c] < hi[c] {
                    cur[c] += 1;
                    break;
                }
                cur[c] = lo[c];
                c += 1;
            }
        }
    }

    #[test]
    fn examples() {
        let v: [&[u32]; 3] = [&[1, 3], &[2, 2], &[5, 3]];
        assert_eq!(set_median(&v).unwrap(), vec![2, 3]);
        assert_eq!(
            v.iter().map(|x| l1(x, &[2, 3])).sum::<u64>(),
            brute_force_median_cost(&v)
        );
        assert_eq!(set_median(&[&[4, 4], &[4, 4]]).unwrap(), vec![4, 4]);
        assert_eq!(set_median(&[&[1], &[2]]).unwrap(), vec![1]);
        assert_eq!(set_median(&[]), Err(Error::EmptyInput));
        assert!(set_median(&[&[1, 2], &[1]]).is_err());
    }

    #[test]
    fn median_is_optimal_on_small_sets() {
        let sets: [&[&[u32]]; 3] = [
            &[&[0, 7, 1], &[3, 3, 3], &[9, 0, 2], &[4, 4, 4]],
            &[&[5], &[1], &[1], &[8], &[2]],
            &[&[2, 2], &[6, 0]],
        ];
        for set in sets {
            let m = set_median(set).unwrap();
            assert_eq!(set.iter().map(|x| l1(x, &m)).sum::<u64>(), brute_force_median_cost(set));
        }
    }
}
