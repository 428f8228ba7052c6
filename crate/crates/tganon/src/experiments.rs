//! Desk-scale experiment suites producing plot-ready CSV tables.
//!
//! Every suite averages over `seeds` synthetic graphs; seed `s` drives both
//! the generator and the anonymizer, so a table is a pure function of its
//! configuration.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tganon_core::anonymizer::{
    degree_anonymization, initial_partition, normalized_cost, AnonymizerConfig, AssignmentMode,
};
use tganon_core::graph::degree_matrix;
use tganon_core::realizability::{
    enforce_realizability, fix_parity_toward, optimal_uniform_repair, GroupDegreeProfile,
};
use tganon_core::synthgen::generate;
use tganon_core::TemporalGraph;

use crate::parallel::Workers;
use crate::pipeline;
use crate::{Error, Result};

pub const SUITES: [&str; 6] = [
    "correlation",
    "k-sweep",
    "resolution",
    "utility",
    "realizability-cdf",
    "greedy-vs-exact",
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub seeds: u64,
    pub base_seed: u64,
    pub nodes: usize,
    pub slices: usize,
    pub p0: f64,
    pub thetas: Vec<f64>,
    pub ks: Vec<usize>,
    pub restarts: usize,
    pub inner_iters: usize,
    pub greedy_perms: usize,
    pub assignment: AssignmentMode,
    pub damping: f64,
    /// Slices merged per bucket (resolution suite).
    pub buckets: Vec<usize>,
    /// Node counts compared (greedy-vs-exact suite).
    pub sizes: Vec<usize>,
    /// Number of random sequences (realizability-cdf suite).
    pub sequences: usize,
}

fn theta_sweep() -> Vec<f64> {
    (0..=10).map(|i| f64::from(i) * 0.05).collect()
}

impl ExperimentConfig {
    /// Defaults for `suite`.
    pub fn for_suite(suite: &str) -> Result<Self> {
        let base = ExperimentConfig {
            seeds: 20,
            base_seed: 0,
            nodes: 100,
            slices: 10,
            p0: tganon_core::synthgen::DEFAULT_P0,
            thetas: theta_sweep(),
            ks: vec![2, 5, 10],
            restarts: 20,
            inner_iters: 50,
            greedy_perms: 10,
            assignment: AssignmentMode::Greedy,
            damping: tganon_core::metrics::DEFAULT_DAMPING,
            buckets: vec![1, 7, 28],
            sizes: vec![50, 100, 200],
            sequences: 1000,
        };
        Ok(match suite {
            "correlation" => base,
            "k-sweep" => ExperimentConfig {
                thetas: vec![0.1],
                ks: vec![2, 3, 4, 5, 6, 8, 10, 15, 20],
                ..base
            },
            "resolution" => ExperimentConfig {
                slices: 56,
                thetas: vec![0.1],
                ..base
            },
            "utility" => ExperimentConfig {
                thetas: vec![0.0, 0.05, 0.1, 0.2, 0.3, 0.5],
                ..base
            },
            "realizability-cdf" => ExperimentConfig {
                nodes: 10,
                ks: vec![2, 3, 4, 5],
                ..base
            },
            "greedy-vs-exact" => ExperimentConfig {
                thetas: vec![0.1],
                ks: vec![2, 5],
                ..base
            },
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    }

    fn anonymizer(&self, k: usize, seed: u64) -> AnonymizerConfig {
        AnonymizerConfig {
            k,
            restarts: self.restarts,
            inner_iters: self.inner_iters,
            greedy_perms: self.greedy_perms,
            seed,
            assignment: self.assignment,
        }
    }

    fn seed_list(&self) -> Vec<u64> {
        (0..self.seeds).map(|s| self.base_seed + s).collect()
    }

    fn graph(&self, n: usize, slices: usize, theta: f64, seed: u64) -> Result<TemporalGraph> {
        Ok(generate(n, slices, theta, self.p0, &mut ChaCha8Rng::seed_from_u64(seed))?)
    }
}

/// A CSV table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// Mean and standard error of the mean (0 for fewer than two samples).
pub fn mean_stderr(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn run_suite(suite: &str, cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    match suite {
        "correlation" => correlation(cfg, workers),
        "k-sweep" => k_sweep(cfg, workers),
        "resolution" => resolution(cfg, workers),
        "utility" => utility(cfg, workers),
        "realizability-cdf" => realizability_cdf(cfg, workers),
        "greedy-vs-exact" => greedy_vs_exact(cfg, workers),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

struct CostSample {
    cost: f64,
    iterations: f64,
    seconds: f64,
}

/// Anonymization cost for every seed, seeds in parallel.
fn cost_samples(
    cfg: &ExperimentConfig,
    workers: &Workers,
    k: usize,
    graph: impl Fn(u64) -> Result<TemporalGraph> + Sync + Send,
) -> Result<Vec<CostSample>> {
    workers
        .map(&cfg.seed_list(), |&seed| {
            let d = degree_matrix(&graph(seed)?);
            let clock = Instant::now();
            let out = degree_anonymization(&d, &cfg.anonymizer(k, seed))?;
            let seconds = clock.elapsed().as_secs_f64();
            let iterations = out.iterations_used.iter().sum::<usize>() as f64
                / out.iterations_used.len() as f64;
            Ok(CostSample {
                cost: normalized_cost(&d, &out.anonymized)?,
                iterations,
                seconds,
            })
        })
        .into_iter()
        .collect()
}

fn costs(samples: &[CostSample]) -> Vec<f64> {
    samples.iter().map(|s| s.cost).collect()
}

fn correlation(cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    let mut rows = Vec::new();
    for &theta in &cfg.thetas {
        for &k in &cfg.ks {
            let samples =
                cost_samples(cfg, workers, k, |s| cfg.graph(cfg.nodes, cfg.slices, theta, s))?;
            let (mean, se) = mean_stderr(&costs(&samples));
            rows.push(vec![theta.to_string(), k.to_string(), mean.to_string(), se.to_string()]);
        }
    }
    Ok(Table {
        header: vec!["theta", "k", "mean_cost", "stderr"],
        rows,
    })
}

fn k_sweep(cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    let mut rows = Vec::new();
    for &theta in &cfg.thetas {
        for &k in &cfg.ks {
            let samples =
                cost_samples(cfg, workers, k, |s| cfg.graph(cfg.nodes, cfg.slices, theta, s))?;
            let (mean, se) = mean_stderr(&costs(&samples));
            let iters: Vec<f64> = samples.iter().map(|s| s.iterations).collect();
            let (it_mean, _) = mean_stderr(&iters);
            rows.push(vec![
                theta.to_string(),
                k.to_string(),
                mean.to_string(),
                se.to_string(),
                it_mean.to_string(),
            ]);
        }
    }
    Ok(Table {
        header: vec!["theta", "k", "mean_cost", "stderr", "mean_iterations"],
        rows,
    })
}

fn resolution(cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    let mut rows = Vec::new();
    for &theta in &cfg.thetas {
        for &width in &cfg.buckets {
            let slices = cfg.slices.div_ceil(width);
            for &k in &cfg.ks {
                let samples = cost_samples(cfg, workers, k, |s| {
                    Ok(cfg.graph(cfg.nodes, cfg.slices, theta, s)?.rebucket(width)?)
                })?;
                let (mean, se) = mean_stderr(&costs(&samples));
                rows.push(vec![
                    width.to_string(),
                    slices.to_string(),
                    theta.to_string(),
                    k.to_string(),
                    mean.to_string(),
                    se.to_string(),
                ]);
            }
        }
    }
    Ok(Table {
        header: vec!["bucket", "slices", "theta", "k", "mean_cost", "stderr"],
        rows,
    })
}

fn utility(cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    let sequential = Workers::new(Some(1))?;
    let mut rows = Vec::new();
    for &theta in &cfg.thetas {
        for &k in &cfg.ks {
            let samples = workers
                .map(&cfg.seed_list(), |&seed| {
                    let g = cfg.graph(cfg.nodes, cfg.slices, theta, seed)?;
                    let out = pipeline::run(&g, &cfg.anonymizer(k, seed), &sequential)?;
                    let report = sequential.utility(&g, &out.graph, cfg.damping)?;
                    let cosine = report.iter().map(|r| r.pr_cosine).sum::<f64>() / report.len() as f64;
                    let edits = report.iter().map(|r| r.edge_edits).sum::<usize>() as f64;
                    Ok((cosine, edits, out.final_cost()))
                })
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            let cos: Vec<f64> = samples.iter().map(|s| s.0).collect();
            let edits: Vec<f64> = samples.iter().map(|s| s.1).collect();
            let finals: Vec<f64> = samples.iter().map(|s| s.2).collect();
            let (mean, se) = mean_stderr(&cos);
            rows.push(vec![
                theta.to_string(),
                k.to_string(),
                mean.to_string(),
                se.to_string(),
                mean_stderr(&edits).0.to_string(),
                mean_stderr(&finals).0.to_string(),
            ]);
        }
    }
    Ok(Table {
        header: vec![
            "theta",
            "k",
            "mean_pr_cosine",
            "stderr",
            "mean_edge_edits",
            "mean_final_cost",
        ],
        rows,
    })
}

/// A random group-uniform profile on `n` nodes that is not realizable,
/// with anonymity level drawn from `ks`.
pub fn random_unrealizable_profile<R: Rng>(
    n: usize,
    ks: &[usize],
    rng: &mut R,
) -> Result<(usize, GroupDegreeProfile)> {
    loop {
        let k = ks[rng.random_range(0..ks.len())];
        let grouping = initial_partition(n, k, &mut ChaCha8Rng::seed_from_u64(rng.random()))?;
        let delta: Vec<u32> = (0..grouping.group_count())
            .map(|_| rng.random_range(0..n as u32))
            .collect();
        let profile = GroupDegreeProfile::new(delta, grouping.sizes())?;
        if !profile.is_realizable() {
            return Ok((k, profile));
        }
    }
}

fn realizability_cdf(cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.base_seed);
    let instances = (0..cfg.sequences)
        .map(|_| random_unrealizable_profile(cfg.nodes, &cfg.ks, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let results = workers
        .map(&instances, |(k, p)| {
            let heuristic = fix_parity_toward(&enforce_realizability(p), p);
            let (_, optimum) = optimal_uniform_repair(p)?;
            Ok((*k, p.group_count(), p.distance(&heuristic), optimum))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let rows = results
        .iter()
        .enumerate()
        .map(|(i, &(k, m, h, o))| {
            vec![
                i.to_string(),
                k.to_string(),
                m.to_string(),
                h.to_string(),
                o.to_string(),
                (h as f64 / o as f64).to_string(),
            ]
        })
        .collect();
    Ok(Table {
        header: vec!["instance", "k", "groups", "heuristic_cost", "optimal_cost", "ratio"],
        rows,
    })
}

fn greedy_vs_exact(cfg: &ExperimentConfig, workers: &Workers) -> Result<Table> {
    let mut rows = Vec::new();
    for &theta in &cfg.thetas {
        for &n in &cfg.sizes {
            for &k in &cfg.ks {
                for mode in [AssignmentMode::Greedy, AssignmentMode::Exact] {
                    let run = ExperimentConfig {
                        assignment: mode,
                        ..cfg.clone()
                    };
                    let samples =
                        cost_samples(&run, workers, k, |s| run.graph(n, run.slices, theta, s))?;
                    let (mean, se) = mean_stderr(&costs(&samples));
                    let iters: Vec<f64> = samples.iter().map(|s| s.iterations).collect();
                    let (it_mean, it_se) = mean_stderr(&iters);
                    let secs: Vec<f64> = samples.iter().map(|s| s.seconds).collect();
                    rows.push(vec![
                        theta.to_string(),
                        n.to_string(),
                        k.to_string(),
                        match mode {
                            AssignmentMode::Greedy => "greedy",
                            AssignmentMode::Exact => "exact",
                        }
                        .to_string(),
                        mean.to_string(),
                        se.to_string(),
                        it_mean.to_string(),
                        it_se.to_string(),
                        mean_stderr(&secs).0.to_string(),
                    ]);
                }
            }
        }
    }
    Ok(Table {
        header: vec![
            "theta",
            "n",
            "k",
            "mode",
            "mean_cost",
            "stderr",
            "mean_iterations",
            "iterations_stderr",
            "mean_seconds",
        ],
        rows,
    })
}
