use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    assignment_cost, exact_assignment, greedy_assignment, group_count, group_medians,
    AnonymityGrouping, MedianMatrix,
};
use crate::graph::{is_k_anonymous, AnonymityLevel, DegreeMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AssignmentMode {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnonymizerConfig {
    pub k: usize,
    /// Independent random initial partitions; the cheapest result wins.
    pub restarts: usize,
    /// Cap on assignment/update alternations per restart.
    pub inner_iters: usize,
    /// Median permutations tried by the greedy assignment.
    pub greedy_perms: usize,
    pub seed: u64,
    pub assignment: AssignmentMode,
}

impl AnonymizerConfig {
    pub fn new(k: usize) -> Self {
        AnonymizerConfig {
            k,
            restarts: 20,
            inner_iters: 50,
            greedy_perms: 10,
            seed: 0,
            assignment: AssignmentMode::Greedy,
        }
    }

    pub fn validate(&self, n: usize) -> Result<AnonymityLevel> {
        if self.restarts == 0 {
            return Err(Error::InvalidParameter("restarts must be at least 1"));
        }
        if self.inner_iters == 0 {
            return Err(Error::InvalidParameter("inner_iters must be at least 1"));
        }
        if self.greedy_perms == 0 {
            return Err(Error::InvalidParameter("greedy_perms must be at least 1"));
        }
        AnonymityLevel::new(self.k, n)
    }
}

/// Outcome of a single restart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartResult {
    pub restart: usize,
    pub grouping: AnonymityGrouping,
    pub medians: MedianMatrix,
    pub cost: u64,
    /// Assignment steps performed.
    pub iterations: usize,
    /// Cost after the initial update and after every accepted alternation.
    pub cost_trace: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnonymizationOutcome {
    pub anonymized: DegreeMatrix,
    pub grouping: AnonymityGrouping,
    pub medians: MedianMatrix,
    /// Raw l1 cost `sum_i |d_i - d~_i|_1`.
    pub cost: u64,
    pub best_restart: usize,
    pub iterations_used: Vec<usize>,
    pub restart_costs: Vec<u64>,
    pub cost_trace: Vec<u64>,
}

/// RNG stream of one restart: the ChaCha stream id is the restart index, so
/// restarts are independent of scheduling.
pub fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// Random partition with every group of size at least `k`: shuffle, deal `k`
/// nodes to each group round-robin, then spread the leftovers from group 0.
pub fn initial_partition(
    n: usize,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Result<AnonymityGrouping> {
    let m = group_count(n, k);
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.shuffle(rng);
    let mut assignment = alloc::vec![0; n];
    for (pos, &node) in nodes.iter().enumerate() {
        assignment[node] = if pos < m * k { pos % m } else { (pos - m * k) % m };
    }
    AnonymityGrouping::new(assignment, m, k)
}

/// One restart of the constrained l1 k-means.
///
/// Assignment and median updates alternate until the assignment stops
/// changing or `inner_iters` is reached. The exact solver never raises the
/// cost; the greedy one can, so the cheapest grouping seen so far is kept and
/// returned. `cost_trace` holds that incumbent cost after every alternation,
/// so it is non-increasing in both modes.
pub fn run_restart(d: &DegreeMatrix, cfg: &AnonymizerConfig, restart: usize) -> Result<RestartResult> {
    let k = cfg.validate(d.rows())?;
    let mut rng = restart_rng(cfg.seed, restart);
    let mut grouping = initial_partition(d.rows(), k.get(), &mut rng)?;
    let mut medians = group_medians(d, &grouping);
    let cost = assignment_cost(d, &medians, &grouping);
    let mut best = (cost, grouping.clone(), medians.clone());
    let mut cost_trace = alloc::vec![cost];
    let mut iterations = 0;
    while iterations < cfg.inner_iters {
        iterations += 1;
        let step = match cfg.assignment {
            AssignmentMode::Greedy => greedy_assignment(d, &medians, k, cfg.greedy_perms, &mut rng)?,
            AssignmentMode::Exact => exact_assignment(d, &medians, k)?,
        };
        if step.grouping.assignment() == grouping.assignment() {
            break;
        }
        grouping = step.grouping;
        medians = group_medians(d, &grouping);
        let cost = assignment_cost(d, &medians, &grouping);
        if cost < best.0 {
            best = (cost, grouping.clone(), medians.clone());
        }
        cost_trace.push(best.0);
    }
    let (cost, grouping, medians) = best;
    Ok(RestartResult {
        restart,
        grouping,
        medians,
        cost,
        iterations,
        cost_trace,
    })
}

/// Picks the cheapest restart, lowest restart index on ties.
pub fn select_best(d: &DegreeMatrix, mut results: Vec<RestartResult>) -> Result<AnonymizationOutcome> {
    results.sort_by_key(|r| r.restart);
    let iterations_used = results.iter().map(|r| r.iterations).collect();
    let restart_costs = results.iter().map(|r| r.cost).collect();
    let best = results
        .into_iter()
        .min_by_key(|r| (r.cost, r.restart))
        .ok_or(Error::EmptyInput)?;
    let anonymized = best.medians.expand(&best.grouping);
    debug_assert!(is_k_anonymous(&anonymized, best.grouping.k()));
    debug_assert_eq!(anonymized.rows(), d.rows());
    Ok(AnonymizationOutcome {
        anonymized,
        grouping: best.grouping,
        medians: best.medians,
        cost: best.cost,
        best_restart: best.restart,
        iterations_used,
        restart_costs,
        cost_trace: best.cost_trace,
    })
}

/// Runs every restart sequentially and keeps the cheapest.
pub fn degree_anonymization(d: &DegreeMatrix, cfg: &AnonymizerConfig) -> Result<AnonymizationOutcome> {
    cfg.validate(d.rows())?;
    let results = (0..cfg.restarts)
        .map(|r| run_restart(d, cfg, r))
        .collect::<Result<Vec<_>>>()?;
    select_best(d, results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anonymizer::{l1, set_median};
    use alloc::vec;

    fn cfg(k: usize, mode: AssignmentMode) -> AnonymizerConfig {
        AnonymizerConfig {
            restarts: 5,
            assignment: mode,
            ..AnonymizerConfig::new(k)
        }
    }

    /// Minimum over all partitions into groups of size >= k of the total l1
    /// distance to each group's optimal median.
    fn brute_force(rows: &[Vec<u32>], k: usize) -> u64 {
        fn go(i: usize, rows: &[Vec<u32>], k: usize, groups: &mut Vec<Vec<usize>>, best: &mut u64) {
            if i == rows.len() {
                if groups.iter().all(|g| g.len() >= k) {
                    let cost = groups
                        .iter()
                        .map(|g| {
                            let v: Vec<&[u32]> = g.iter().map(|&x| rows[x].as_slice()).collect();
                            let med = set_median(&v).unwrap();
                            v.iter().map(|r| l1(r, &med)).sum::<u64>()
                        })
                        .sum();
                    *best = (*best).min(cost);
                }
                return;
            }
            for j in 0..groups.len() {
                groups[j].push(i);
                go(i + 1, rows, k, groups, best);
                groups[j].pop();
            }
            groups.push(vec![i]);
            go(i + 1, rows, k, groups, best);
            groups.pop();
        }
        let mut best = u64::MAX;
        go(0, rows, k, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn toy_graph_costs_two() {
        let rows = vec![vec![2, 2], vec![2, 1], vec![1, 2], vec![1, 1]];
        assert_eq!(brute_force(&rows, 2), 2);
        let d = DegreeMatrix::from_rows(&rows).unwrap();
        for mode in [AssignmentMode::Greedy, AssignmentMode::Exact] {
            let out = degree_anonymization(&d, &cfg(2, mode)).unwrap();
            assert_eq!(out.cost, 2);
            assert!(is_k_anonymous(&out.anonymized, 2));
        }
    }

    #[test]
    fn identical_rows_cost_nothing() {
        let d = DegreeMatrix::from_rows(&vec![vec![3, 1, 2]; 7]).unwrap();
        for k in 1..=7 {
            let out = degree_anonymization(&d, &cfg(k, AssignmentMode::Greedy)).unwrap();
            assert_eq!(out.cost, 0);
            assert_eq!(out.anonymized, d);
        }
    }

    #[test]
    fn k_equals_n_is_one_group() {
        let rows = vec![vec![0, 4], vec![3, 1], vec![2, 2], vec![4, 0], vec![1, 3]];
        let d = DegreeMatrix::from_rows(&rows).unwrap();
        let out = degree_anonymization(&d, &cfg(5, AssignmentMode::Exact)).unwrap();
        let all: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
        let med = set_median(&all).unwrap();
        assert_eq!(out.grouping.group_count(), 1);
        for i in 0..5 {
            assert_eq!(out.anonymized.row(i), med.as_slice());
        }
    }

    #[test]
    fn k_one_is_free() {
        let d = DegreeMatrix::from_rows(&[vec![0, 1], vec![2, 2], vec![1, 0]]).unwrap();
        let out = degree_anonymization(&d, &cfg(1, AssignmentMode::Greedy)).unwrap();
        assert_eq!(out.cost, 0);
        assert_eq!(out.anonymized, d);
    }

    #[test]
    fn initial_partition_sizes() {
        let mut rng = restart_rng(3, 0);
        let g = initial_partition(11, 3, &mut rng).unwrap();
        let mut sizes = g.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 4, 4]);
        let g = initial_partition(5, 3, &mut rng).unwrap();
        assert_eq!(g.sizes(), vec![5]);
    }

    #[test]
    fn errors() {
        let d = DegreeMatrix::from_rows(&[vec![1], vec![1]]).unwrap();
        assert!(degree_anonymization(&d, &cfg(3, AssignmentMode::Greedy)).is_err());
        let mut bad = cfg(1, AssignmentMode::Greedy);
        bad.restarts = 0;
        assert!(degree_anonymization(&d, &bad).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let rows: Vec<Vec<u32>> = (0..30u32).map(|i| vec![i % 7, (i * 5) % 11, (i * 3) % 4]).collect();
        let d = DegreeMatrix::from_rows(&rows).unwrap();
        let c = cfg(3, AssignmentMode::Greedy);
        assert_eq!(degree_anonymization(&d, &c).unwrap(), degree_anonymization(&d, &c).unwrap());
        let a = run_restart(&d, &c, 2).unwrap();
        assert_eq!(a, run_restart(&d, &c, 2).unwrap());
        assert!(a.cost_trace.windows(2).all(|w| w[1] <= w[0]));
    }
}
