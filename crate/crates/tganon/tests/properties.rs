//! Property tests for file formats and the end-to-end pipeline, 1000
//! generated cases each.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tganon::io::{read_edgelist, write_edgelist};
use tganon::parallel::Workers;
use tganon::pipeline::{run, verify};
use tganon_core::anonymizer::AnonymizerConfig;
use tganon_core::graph::degree_matrix;
use tganon_core::TemporalGraph;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        ..ProptestConfig::default()
    }
}

fn graph(max_n: usize, max_t: usize) -> impl Strategy<Value = TemporalGraph> {
    (2..=max_n, 1..=max_t, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, t, p, seed)| {
        let slices = common::random_slices(n, t, p, &mut ChaCha8Rng::seed_from_u64(seed));
        TemporalGraph::new(n, slices).unwrap()
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn edgelist_round_trip(g in graph(30, 5)) {
        let mut buf = Vec::new();
        write_edgelist(&g, &mut buf).unwrap();
        prop_assert_eq!(read_edgelist(buf.as_slice()).unwrap(), g);
    }

    #[test]
    fn published_graph_verifies(g in graph(24, 4), k in 1usize..=5, seed: u64) {
        prop_assume!(k <= g.node_count());
        let cfg = AnonymizerConfig { seed, restarts: 3, inner_iters: 10, greedy_perms: 3, ..AnonymizerConfig::new(k) };
        let out = run(&g, &cfg, &Workers::new(Some(1)).unwrap()).unwrap();
        let rows = degree_matrix(&out.graph).to_rows();
        prop_assert!(common::k_anonymous(&rows, k));
        prop_assert_eq!(degree_matrix(&out.graph), out.repair.matrix.clone());
        let report = verify(&g, &out.graph, k).unwrap();
        prop_assert!(report.passed);
        prop_assert!(2 * report.edge_edits as u64 >= report.l1_distance);
    }
}
