//! Candidate name list for a corpus, most frequent first.
//!
//!     cargo run --example raw_words -- [FOLDER] [MIN_COUNT]

use std::path::PathBuf;

use charnet::{extract_raw_words, load_corpus, ExtractionConstraints};

fn main() {
    let mut args = std::env::args().skip(1);
    let folder = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/texts"));
    let min_count = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);

    let corpus = load_corpus(&folder, "utf-8").unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2)
    });
    let constraints = ExtractionConstraints {
        min_count,
        ..Default::default()
    };
    let table = extract_raw_words(&corpus, &constraints);
    println!("{} raw words with {constraints:?}", table.len());
    println!("{:<16} {:>6} {:>5}", "word", "count", "docs");
    for w in table.entries().iter().take(40) {
        println!("{:<16} {:>6} {:>5}", w.word, w.count, w.doc_coverage);
    }

    // Lowercase words show up once capitalization is not required.
    let loose = extract_raw_words(
        &corpus,
        &ExtractionConstraints {
            require_capitalized: false,
            ..constraints
        },
    );
    println!("\nwithout the capitalization rule: {} raw words", loose.len());
}
