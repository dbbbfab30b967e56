//! Proximity-weighted interaction scores, first for a four-occurrence
//! example small enough to check by hand, then for the bundled toy project.
//!
//!     cargo run --example interaction_matrix -- [exponential]

use std::path::PathBuf;

use charnet::analysis::{compute_frequencies, compute_interactions, index_occurrences};
use charnet::names::{NameRegistry, NameType};
use charnet::project::load_project;
use charnet::{Corpus, KernelKind, ProximityKernel};

fn main() {
    let kind: KernelKind = std::env::args().nth(1).as_deref().unwrap_or("linear").parse().unwrap();

    // A at 0 and 10, B at 5 and 100. With a 40-token window only the two
    // pairs at distance 5 count: 35/40 + 35/40.
    let mut words = vec!["x"; 101];
    words[0] = "A";
    words[10] = "A";
    words[5] = "B";
    words[100] = "B";
    let corpus = Corpus::from_texts([("example", words.join(" "))]);
    let mut reg = NameRegistry::new();
    reg.add_name("A", NameType::Character).unwrap();
    reg.add_name("B", NameType::Character).unwrap();
    let m = compute_interactions(&index_occurrences(&corpus, &reg), &ProximityKernel::new(kind, 40));
    print!("name_a\tname_b\traw\tscore\n{}", m.to_tsv(&reg, 2));

    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/project.toml");
    let project = load_project(&path).unwrap();
    let corpus = project.corpus_source(path.parent()).load().unwrap();
    let index = index_occurrences(&corpus, &project.registry);
    let kernel = ProximityKernel::new(kind, project.params.delta_s);

    println!("\ntoy project, {kind:?} kernel, window {}", project.params.delta_s);
    print!("{}", compute_frequencies(&index).to_tsv(&project.registry, 2));
    println!();
    print!("{}", compute_interactions(&index, &kernel).to_tsv(&project.registry, 2));
}
