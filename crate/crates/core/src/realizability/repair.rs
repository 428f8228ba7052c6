use alloc::vec;
use alloc::vec::Vec;

use super::{enforce_realizability, fix_parity_toward, is_graphical, GroupDegreeProfile};
use crate::anonymizer::AnonymityGrouping;
use crate::graph::DegreeMatrix;
use crate::{Error, Result};

/// Outcome of repairing one slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnRepair {
    pub column: Vec<u32>,
    /// Node-level l1 change.
    pub cost: u64,
    pub enforced: bool,
    pub parity_fixed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepairStats {
    pub columns_repaired: usize,
    /// Columns that violated the Erdős–Gallai inequalities.
    pub inequality_repairs: usize,
    /// Columns whose degree sum had to be made even.
    pub parity_repairs: usize,
    pub total_cost: u64,
    pub column_costs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub matrix: DegreeMatrix,
    pub stats: RepairStats,
}

/// Repairs one anonymized slice so it becomes realizable, moving whole
/// groups only. Realizable columns come back unchanged.
pub fn repair_column(
    column: &[u32],
    grouping: &AnonymityGrouping,
    slice: usize,
) -> Result<ColumnRepair> {
    let n = column.len();
    if grouping.node_count() != n {
        return Err(Error::ShapeMismatch {
            expected: (grouping.node_count(), 1),
            found: (n, 1),
        });
    }
    let mut delta: Vec<Option<u32>> = vec![None; grouping.group_count()];
    for (i, &g) in grouping.assignment().iter().enumerate() {
        match delta[g] {
            None => delta[g] = Some(column[i]),
            Some(d) if d != column[i] => return Err(Error::NotGroupUniform { group: g, slice }),
            Some(_) => {}
        }
    }
    if is_graphical(column) {
        return Ok(ColumnRepair {
            column: column.to_vec(),
            cost: 0,
            enforced: false,
            parity_fixed: false,
        });
    }
    let delta: Vec<u32> = delta.into_iter().map(|d| d.unwrap_or(0)).collect();
    let original = GroupDegreeProfile::new(delta, grouping.sizes())?;
    let enforced = !original.satisfies_erdos_gallai();
    let lowered = enforce_realizability(&original);
    let parity_fixed = lowered.degree_sum() % 2 == 1;
    let repaired = fix_parity_toward(&lowered, &original);
    debug_assert!(repaired.is_realizable());
    let column: Vec<u32> = grouping
        .assignment()
        .iter()
        .map(|&g| repaired.delta()[g])
        .collect();
    Ok(ColumnRepair {
        column,
        cost: original.distance(&repaired),
        enforced,
        parity_fixed,
    })
}

/// Makes every column of a group-uniform anonymized matrix realizable.
pub fn repair_degree_matrix(d_anon: &DegreeMatrix, grouping: &AnonymityGrouping) -> Result<Repair> {
    let columns = (0..d_anon.cols())
        .map(|t| repair_column(&d_anon.column(t), grouping, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_repair(d_anon, columns))
}

/// Folds per-column repairs (in slice order) into a matrix and statistics.
pub fn assemble_repair(d_anon: &DegreeMatrix, columns: Vec<ColumnRepair>) -> Repair {
    let mut matrix = d_anon.clone();
    let mut stats = RepairStats::default();
    for (t, c) in columns.into_iter().enumerate() {
        matrix.set_column(t, &c.column);
        if c.cost > 0 || c.enforced || c.parity_fixed {
            stats.columns_repaired += 1;
        }
        stats.inequality_repairs += usize::from(c.enforced);
        stats.parity_repairs += usize::from(c.parity_fixed);
        stats.total_cost += c.cost;
        stats.column_costs.push(c.cost);
    }
    Repair { matrix, stats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_k_anonymous;

    fn col_matrix(values: &[u32]) -> DegreeMatrix {
        DegreeMatrix::from_rows(&values.iter().map(|&v| vec![v]).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn realizable_columns_pass_through() {
        let d = DegreeMatrix::from_rows(&[vec![1, 2], vec![1, 2], vec![1, 2], vec![1, 2]]).unwrap();
        let g = AnonymityGrouping::new(vec![0, 0, 1, 1], 2, 2).unwrap();
        let r = repair_degree_matrix(&d, &g).unwrap();
        assert_eq!(r.matrix, d);
        assert_eq!(r.stats.columns_repaired, 0);
    }

    #[test]
    fn heavy_pair_is_lowered() {
        let d = col_matrix(&[3, 3, 1, 1]);
        let g = AnonymityGrouping::new(vec![0, 0, 1, 1], 2, 2).unwrap();
        let r = repair_degree_matrix(&d, &g).unwrap();
        assert_eq!(r.matrix.column(0), vec![2, 2, 1, 1]);
        assert_eq!(r.stats.total_cost, 2);
        assert_eq!(r.stats.inequality_repairs, 1);
    }

    #[test]
    fn odd_sum_gets_parity_fix() {
        let d = col_matrix(&[1, 1, 1, 2, 2]);
        let g = AnonymityGrouping::new(vec![0, 0, 0, 1, 1], 2, 2).unwrap();
        let r = repair_degree_matrix(&d, &g).unwrap();
        assert_eq!(r.stats.parity_repairs, 1);
        assert_eq!(r.stats.inequality_repairs, 0);
        let out = r.matrix.column(0);
        assert!(is_graphical(&out));
        assert!(is_k_anonymous(&r.matrix, 2));
    }

    #[test]
    fn non_uniform_group_is_rejected() {
        let d = col_matrix(&[1, 2, 1, 1]);
        let g = AnonymityGrouping::new(vec![0, 0, 1, 1], 2, 2).unwrap();
        assert_eq!(
            repair_degree_matrix(&d, &g),
            Err(Error::NotGroupUniform { group: 0, slice: 0 })
        );
    }
}
