//! Worker pool for restarts and per-slice stages.
//!
//! Every parallel stage collects its results in input order and reduces them
//! exactly as the sequential code does, so the thread count never changes an
//! output.

use rayon::prelude::*;
use tganon_core::anonymizer::{
    run_restart, select_best, AnonymityGrouping, AnonymizationOutcome, AnonymizerConfig,
};
use tganon_core::constructor::build_slice;
use tganon_core::graph::degree_matrix;
use tganon_core::metrics::{slice_utility, SliceUtility};
use tganon_core::realizability::{assemble_repair, repair_column, Repair};
use tganon_core::{DegreeMatrix, TemporalGraph};

use crate::{Error, Result};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "TGANON_THREADS";

/// Worker count requested through [`THREADS_ENV`], if any.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Threads(raw)),
        },
    }
}

pub struct Workers {
    pool: rayon::ThreadPool,
}

impl Workers {
    /// A pool with `threads` workers, or rayon's default when `None`.
    pub fn new(threads: Option<usize>) -> Result<Self> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::Invalid(format!("cannot start worker pool: {e}")))?;
        Ok(Workers { pool })
    }

    /// A pool sized by [`THREADS_ENV`].
    pub fn from_env() -> Result<Self> {
        Self::new(threads_from_env()?)
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Ordered parallel map.
    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }

    /// All restarts of the anonymizer, run concurrently.
    pub fn anonymize(&self, d: &DegreeMatrix, cfg: &AnonymizerConfig) -> Result<AnonymizationOutcome> {
        cfg.validate(d.rows())?;
        let restarts: Vec<usize> = (0..cfg.restarts).collect();
        let results = self
            .map(&restarts, |&r| run_restart(d, cfg, r))
            .into_iter()
            .collect::<tganon_core::Result<Vec<_>>>()?;
        Ok(select_best(d, results)?)
    }

    /// Per-slice realizability repair.
    pub fn repair(&self, d_anon: &DegreeMatrix, grouping: &AnonymityGrouping) -> Result<Repair> {
        let slices: Vec<usize> = (0..d_anon.cols()).collect();
        let columns = self
            .map(&slices, |&t| repair_column(&d_anon.column(t), grouping, t))
            .into_iter()
            .collect::<tganon_core::Result<Vec<_>>>()?;
        Ok(assemble_repair(d_anon, columns))
    }

    /// Per-slice graph construction.
    pub fn construct(&self, target: &DegreeMatrix, original: &TemporalGraph) -> Result<TemporalGraph> {
        if target.rows() != original.node_count() || target.cols() != original.slice_count() {
            return Err(tganon_core::Error::ShapeMismatch {
                expected: (original.node_count(), original.slice_count()),
                found: (target.rows(), target.cols()),
            }
            .into());
        }
        let slices: Vec<usize> = (0..target.cols()).collect();
        let built = self
            .map(&slices, |&t| build_slice(&target.column(t), original.slice(t)))
            .into_iter()
            .collect::<tganon_core::Result<Vec<_>>>()?;
        Ok(TemporalGraph::new(original.node_count(), built)?)
    }

    /// Per-slice utility records.
    pub fn utility(
        &self,
        original: &TemporalGraph,
        anonymized: &TemporalGraph,
        damping: f64,
    ) -> Result<Vec<SliceUtility>> {
        if original.node_count() != anonymized.node_count()
            || original.slice_count() != anonymized.slice_count()
        {
            return Err(tganon_core::Error::ShapeMismatch {
                expected: (original.node_count(), original.slice_count()),
                found: (anonymized.node_count(), anonymized.slice_count()),
            }
            .into());
        }
        let (d, e) = (degree_matrix(original), degree_matrix(anonymized));
        let slices: Vec<usize> = (0..original.slice_count()).collect();
        Ok(self
            .map(&slices, |&t| slice_utility(original, anonymized, &d, &e, t, damping))
            .into_iter()
            .collect::<tganon_core::Result<Vec<_>>>()?)
    }
}
