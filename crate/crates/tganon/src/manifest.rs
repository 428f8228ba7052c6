//! JSON manifest written next to every anonymization run.
//!
//! The manifest records everything that determines the outputs (input path,
//! configuration, seed) plus costs and statistics. `timings` is the only
//! field that varies between identical runs; [`RunManifest::without_timings`]
//! gives the reproducible part.

use serde::{Deserialize, Serialize};
use tganon_core::anonymizer::{AnonymizerConfig, AssignmentMode};

use crate::pipeline::{PipelineOutput, Timings, VerifyReport};

pub const MANIFEST_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Assignment {
    Greedy,
    Exact,
}

impl From<AssignmentMode> for Assignment {
    fn from(mode: AssignmentMode) -> Self {
        match mode {
            AssignmentMode::Greedy => Assignment::Greedy,
            AssignmentMode::Exact => Assignment::Exact,
        }
    }
}

impl From<Assignment> for AssignmentMode {
    fn from(mode: Assignment) -> Self {
        match mode {
            Assignment::Greedy => AssignmentMode::Greedy,
            Assignment::Exact => AssignmentMode::Exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub k: usize,
    pub restarts: usize,
    pub inner_iters: usize,
    pub greedy_perms: usize,
    pub seed: u64,
    pub assignment: Assignment,
}

impl From<&AnonymizerConfig> for ConfigRecord {
    fn from(cfg: &AnonymizerConfig) -> Self {
        ConfigRecord {
            k: cfg.k,
            restarts: cfg.restarts,
            inner_iters: cfg.inner_iters,
            greedy_perms: cfg.greedy_perms,
            seed: cfg.seed,
            assignment: cfg.assignment.into(),
        }
    }
}

impl From<&ConfigRecord> for AnonymizerConfig {
    fn from(r: &ConfigRecord) -> Self {
        AnonymizerConfig {
            k: r.k,
            restarts: r.restarts,
            inner_iters: r.inner_iters,
            greedy_perms: r.greedy_perms,
            seed: r.seed,
            assignment: r.assignment.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Costs {
    /// l1 distance between the original and the anonymized degree matrix.
    pub anonymization_raw: u64,
    pub anonymization_normalized: f64,
    /// l1 change made by the realizability repair.
    pub repair_raw: u64,
    /// l1 distance between the original and the published degree matrix.
    pub final_raw: u64,
    pub final_normalized: f64,
    pub edge_edits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairRecord {
    pub columns_repaired: usize,
    pub inequality_repairs: usize,
    pub parity_repairs: usize,
    pub total_cost: u64,
    pub column_costs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestartRecord {
    pub best_restart: usize,
    pub iterations_used: Vec<usize>,
    pub restart_costs: Vec<u64>,
    pub group_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputFiles {
    pub graph: String,
    pub degrees: String,
    pub grouping: String,
    pub utility: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRecord {
    pub load: f64,
    pub anonymize: f64,
    pub repair: f64,
    pub construct: f64,
    pub verify: f64,
    pub write: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub version: u32,
    pub input: String,
    pub bucket: Option<usize>,
    pub nodes: usize,
    pub slices: usize,
    pub config: ConfigRecord,
    pub damping: f64,
    pub costs: Costs,
    pub repair: RepairRecord,
    pub restarts: RestartRecord,
    pub verified: bool,
    /// File names relative to the output directory.
    pub outputs: OutputFiles,
    pub timings: Option<TimingRecord>,
}

impl RunManifest {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        input: String,
        bucket: Option<usize>,
        cfg: &AnonymizerConfig,
        damping: f64,
        out: &PipelineOutput,
        report: &VerifyReport,
        outputs: OutputFiles,
        timings: TimingRecord,
    ) -> Self {
        let stats = &out.repair.stats;
        RunManifest {
            version: MANIFEST_VERSION,
            input,
            bucket,
            nodes: out.original_degrees.rows(),
            slices: out.original_degrees.cols(),
            config: cfg.into(),
            damping,
            costs: Costs {
                anonymization_raw: out.outcome.cost,
                anonymization_normalized: out.anonymization_cost(),
                repair_raw: stats.total_cost,
                final_raw: report.l1_distance,
                final_normalized: report.normalized_cost,
                edge_edits: report.edge_edits,
            },
            repair: RepairRecord {
                columns_repaired: stats.columns_repaired,
                inequality_repairs: stats.inequality_repairs,
                parity_repairs: stats.parity_repairs,
                total_cost: stats.total_cost,
                column_costs: stats.column_costs.clone(),
            },
            restarts: RestartRecord {
                best_restart: out.outcome.best_restart,
                iterations_used: out.outcome.iterations_used.clone(),
                restart_costs: out.outcome.restart_costs.clone(),
                group_count: out.outcome.grouping.group_count(),
            },
            verified: report.passed,
            outputs,
            timings: Some(timings),
        }
    }

    /// The manifest minus wall-clock timings: equal for equal runs.
    pub fn without_timings(&self) -> Self {
        RunManifest {
            timings: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl TimingRecord {
    pub fn from_stages(load: f64, stages: &Timings, write: f64) -> Self {
        TimingRecord {
            load,
            anonymize: stages.anonymize,
            repair: stages.repair,
            construct: stages.construct,
            verify: stages.verify,
            write,
        }
    }
}
