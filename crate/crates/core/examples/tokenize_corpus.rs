//! Load a folder of text files and show how it is tokenized.
//!
//!     cargo run --example tokenize_corpus -- [FOLDER] [ENCODING]

use std::path::PathBuf;

use charnet::corpus::{load_corpus, tokenize};

fn main() {
    let mut args = std::env::args().skip(1);
    let folder = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/texts"));
    let encoding = args.next().unwrap_or_else(|| "utf-8".into());

    let corpus = match load_corpus(&folder, &encoding) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    println!("{} documents, {} tokens", corpus.documents().len(), corpus.total_tokens());
    for doc in corpus.documents() {
        let head: Vec<String> = doc.tokens.iter().take(12).map(|t| format!("{}:{}", t.position, t.text)).collect();
        println!("{:>3} {:<12} {:>6} tokens  {}", doc.ordinal, doc.doc_id, doc.tokens.len(), head.join(" "));
    }

    // Punctuation separates; apostrophes and hyphens inside a word do not.
    let line = "Gunther's recken riten – ze Wormez an den Rîn.";
    let words: Vec<_> = tokenize(line).into_iter().map(|t| t.text).collect();
    println!("\n{line}\n  -> {words:?}");
}
