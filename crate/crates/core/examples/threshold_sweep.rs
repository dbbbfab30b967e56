//! How the network shrinks as the interaction threshold rises.
//!
//!     cargo run --example threshold_sweep -- [PROJECT.toml]

use std::path::PathBuf;

use charnet::analysis::{apply_thresholds, compute_frequencies, compute_interactions, index_occurrences};
use charnet::project::load_project;
use charnet::AnalysisParams;

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/project.toml"));
    let project = load_project(&path).unwrap();
    let corpus = project.corpus_source(path.parent()).load().unwrap();

    // Scores do not depend on thresholds, so compute them once.
    let index = index_occurrences(&corpus, &project.registry);
    let freq = compute_frequencies(&index);
    let inter = compute_interactions(&index, &project.params.kernel());

    println!("{:>5} {:>6} {:>6}  strongest", "i_t", "nodes", "edges");
    for step in 0..=10 {
        let params = AnalysisParams {
            i_t: step as f64 / 10.0,
            ..project.params
        };
        let net = apply_thresholds(&freq, &inter, &params, &project.registry);
        let top = net
            .edges
            .iter()
            .max_by(|a, b| a.score.total_cmp(&b.score))
            .map(|e| format!("{} -- {}", net.node(e.source).unwrap().name, net.node(e.target).unwrap().name))
            .unwrap_or_default();
        println!("{:>5.1} {:>6} {:>6}  {top}", params.i_t, net.nodes.len(), net.edges.len());
    }
}
