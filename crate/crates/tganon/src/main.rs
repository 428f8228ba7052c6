use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tganon::experiments::{run_suite, ExperimentConfig, SUITES};
use tganon::io;
use tganon::manifest::{OutputFiles, RunManifest, TimingRecord};
use tganon::parallel::Workers;
use tganon::pipeline::{self, verify};
use tganon::{Error, Result};
use tganon_core::anonymizer::{AnonymizerConfig, AssignmentMode};
use tganon_core::metrics::DEFAULT_DAMPING;
use tganon_core::synthgen::{generate, DEFAULT_P0};

#[derive(Parser)]
#[command(name = "tganon", version, about = "k-degree anonymization of time-varying graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Anonymize a temporal edge list and write the published graph.
    Anonymize(AnonymizeArgs),
    /// Check a published graph against its original.
    Verify(VerifyArgs),
    /// Generate synthetic graphs with tunable temporal correlation.
    Synth(SynthArgs),
    /// Run an experiment suite and write its CSV table.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Greedy,
    Exact,
}

impl From<Mode> for AssignmentMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Greedy => AssignmentMode::Greedy,
            Mode::Exact => AssignmentMode::Exact,
        }
    }
}

#[derive(Args)]
struct Tuning {
    /// Random initial partitions; the cheapest result wins.
    #[arg(long, default_value_t = 20)]
    restarts: usize,
    /// Cap on assignment/update alternations per restart.
    #[arg(long, default_value_t = 50)]
    inner_iters: usize,
    /// Median permutations tried by the greedy assignment.
    #[arg(long, default_value_t = 10)]
    greedy_perms: usize,
    #[arg(long, value_enum, default_value_t = Mode::Greedy)]
    assignment: Mode,
    /// PageRank damping factor for utility reports.
    #[arg(long, default_value_t = DEFAULT_DAMPING)]
    damping: f64,
}

#[derive(Args)]
struct AnonymizeArgs {
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    tuning: Tuning,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Merge this many consecutive slices into one on load.
    #[arg(long)]
    bucket: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    original: PathBuf,
    anonymized: PathBuf,
    #[arg(long)]
    k: usize,
    /// Merge this many consecutive slices of the original on load.
    #[arg(long)]
    bucket: Option<usize>,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    slices: usize,
    /// Comma-separated change probabilities.
    #[arg(long, value_delimiter = ',', default_value = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5")]
    thetas: Vec<f64>,
    #[arg(long, default_value_t = 20)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    base_seed: u64,
    #[arg(long, default_value_t = DEFAULT_P0)]
    p0: f64,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct ExperimentArgs {
    /// One of: correlation, k-sweep, resolution, utility, realizability-cdf, greedy-vs-exact.
    suite: String,
    #[arg(long)]
    seeds: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    inner_iters: Option<usize>,
    #[arg(long)]
    greedy_perms: Option<usize>,
    #[arg(long, value_enum)]
    assignment: Option<Mode>,
    #[arg(long)]
    damping: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    slices: Option<usize>,
    #[arg(long)]
    p0: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    thetas: Option<Vec<f64>>,
    #[arg(long = "k", value_delimiter = ',')]
    ks: Option<Vec<usize>>,
    /// Slice widths for the resolution suite.
    #[arg(long, value_delimiter = ',')]
    bucket: Option<Vec<usize>>,
    /// Node counts for the greedy-vs-exact suite.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Sequence count for the realizability-cdf suite.
    #[arg(long)]
    sequences: Option<usize>,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io {
        path: dir.to_path_buf(),
        source: e,
    })
}

/// Returns whether every verification passed.
fn anonymize(args: AnonymizeArgs) -> Result<bool> {
    let workers = Workers::from_env()?;
    let clock = Instant::now();
    let g = io::load_edgelist(&args.input, args.bucket)?;
    let load = clock.elapsed().as_secs_f64();

    let cfg = AnonymizerConfig {
        k: args.k,
        restarts: args.tuning.restarts,
        inner_iters: args.tuning.inner_iters,
        greedy_perms: args.tuning.greedy_perms,
        seed: args.seed,
        assignment: args.tuning.assignment.into(),
    };
    let out = pipeline::run(&g, &cfg, &workers)?;
    let report = verify(&g, &out.graph, cfg.k)?;

    let clock = Instant::now();
    create_dir(&args.out_dir)?;
    let files = OutputFiles {
        graph: "anonymized.tsv".into(),
        degrees: "degrees.csv".into(),
        grouping: "grouping.csv".into(),
        utility: "utility.csv".into(),
    };
    let path = |name: &str| args.out_dir.join(name);
    io::save_edgelist(&out.graph, &path(&files.graph))?;
    io::write_degree_matrix_csv(&out.repair.matrix, io::create(&path(&files.degrees))?)?;
    io::write_grouping_csv(&out.outcome.grouping, io::create(&path(&files.grouping))?)?;
    let utility = workers.utility(&g, &out.graph, args.tuning.damping)?;
    io::write_utility_csv(&utility, io::create(&path(&files.utility))?)?;
    let write = clock.elapsed().as_secs_f64();

    let manifest = RunManifest::new(
        args.input.display().to_string(),
        args.bucket,
        &cfg,
        args.tuning.damping,
        &out,
        &report,
        files,
        TimingRecord::from_stages(load, &out.timings, write),
    );
    let manifest_path = path("manifest.json");
    std::fs::write(&manifest_path, manifest.to_json()? + "\n")
        .map_err(|e| Error::Io {
            path: manifest_path,
            source: e,
        })?;
    println!(
        "k={} cost={} normalized={} edits={} verified={}",
        cfg.k,
        manifest.costs.final_raw,
        manifest.costs.final_normalized,
        manifest.costs.edge_edits,
        report.passed
    );
    Ok(report.passed)
}

fn verify_cmd(args: VerifyArgs) -> Result<bool> {
    let original = io::load_edgelist(&args.original, args.bucket)?;
    let anonymized = io::load_edgelist(&args.anonymized, None)?;
    let report = verify(&original, &anonymized, args.k)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(report.passed)
}

fn synth(args: SynthArgs) -> Result<bool> {
    create_dir(&args.out_dir)?;
    for &theta in &args.thetas {
        for seed in args.base_seed..args.base_seed + args.seeds {
            let g = generate(args.n, args.slices, theta, args.p0, &mut ChaCha8Rng::seed_from_u64(seed))?;
            let path = args.out_dir.join(format!("theta{theta}_seed{seed}.tsv"));
            io::save_edgelist(&g, &path)?;
        }
    }
    Ok(true)
}

fn experiment(args: ExperimentArgs) -> Result<bool> {
    let mut cfg = ExperimentConfig::for_suite(&args.suite)?;
    macro_rules! apply {
        ($($flag:ident => $field:ident),*) => {
            $(if let Some(v) = args.$flag.clone() { cfg.$field = v.into(); })*
        };
    }
    apply!(
        seeds => seeds, seed => base_seed, restarts => restarts, inner_iters => inner_iters,
        greedy_perms => greedy_perms, assignment => assignment, damping => damping, n => nodes,
        slices => slices, p0 => p0, thetas => thetas, ks => ks, bucket => buckets,
        sizes => sizes, sequences => sequences
    );
    let workers = Workers::from_env()?;
    let table = run_suite(&args.suite, &cfg, &workers)?;
    create_dir(&args.out_dir)?;
    let path = args.out_dir.join(format!("{}.csv", args.suite));
    io::write_table(&table.header, &table.rows, io::create(&path)?)?;
    println!("wrote {} ({} rows)", path.display(), table.rows.len());
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Anonymize(a) => anonymize(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Synth(a) => synth(a),
        Command::Experiment(a) => {
            if !SUITES.contains(&a.suite.as_str()) {
                Err(Error::UnknownSuite(a.suite.clone()))
            } else {
                experiment(a)
            }
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
