//! Random corpora and registries for property and acceptance tests.

use charnet::corpus::{Corpus, Document, Token};
use charnet::names::{NameRegistry, NameType};
use charnet::{AnalysisParams, KernelKind};
use rand::seq::IndexedRandom;
use rand::Rng;

const FILLER: &[&str] = &["und", "der", "sprach", "daz", "vil", "helt", "wart", "dô"];

pub struct Case {
    pub corpus: Corpus,
    pub registry: NameRegistry,
    pub kind: KernelKind,
    pub delta_s: u32,
}

/// Up to `max_names` names with 1 to 3 variants each, and a corpus of at most
/// `max_tokens` tokens over at most `max_docs` documents.
pub fn case<R: Rng>(rng: &mut R, max_tokens: usize, max_names: usize, max_docs: usize) -> Case {
    let mut registry = NameRegistry::new();
    let mut vocab: Vec<String> = FILLER.iter().map(|s| s.to_string()).collect();
    let names = rng.random_range(0..=max_names);
    for k in 0..names {
        let ntype = if rng.random_bool(0.6) { NameType::Character } else { NameType::Place };
        let id = registry.add_name(&format!("N{k}a"), ntype).unwrap();
        vocab.push(format!("N{k}a"));
        for v in 1..rng.random_range(1..=3) {
            let variant = format!("N{k}{}", (b'a' + v as u8) as char);
            registry.add_variant(id, &variant).unwrap();
            vocab.push(variant);
        }
    }
    // Names are rarer than filler but common enough to interact.
    let docs = rng.random_range(1..=max_docs);
    let total = rng.random_range(0..=max_tokens);
    let mut lengths = vec![0usize; docs];
    for _ in 0..total {
        lengths[rng.random_range(0..docs)] += 1;
    }
    let documents = lengths
        .into_iter()
        .enumerate()
        .map(|(d, len)| Document {
            doc_id: format!("doc{d:02}"),
            ordinal: d,
            tokens: (0..len)
                .map(|position| Token {
                    text: if rng.random_bool(0.3) {
                        vocab.choose(rng).unwrap().clone()
                    } else {
                        FILLER.choose(rng).unwrap().to_string()
                    },
                    position,
                })
                .collect(),
        })
        .collect();
    Case {
        corpus: Corpus::from_documents(documents),
        registry,
        kind: if rng.random_bool(0.5) { KernelKind::Linear } else { KernelKind::Exponential },
        delta_s: rng.random_range(1..=60),
    }
}

pub fn params<R: Rng>(rng: &mut R) -> AnalysisParams {
    let mut t = || {
        // Land exactly on round values sometimes to exercise inclusive bounds.
        if rng.random_bool(0.2) {
            rng.random_range(0..=4) as f64 / 4.0
        } else {
            rng.random::<f64>()
        }
    };
    AnalysisParams {
        delta_s: 40,
        f_t_char: t(),
        f_t_place: t(),
        i_t: t(),
        kernel: KernelKind::Linear,
    }
}

/// A project with a random registry (including removed ids), constraints and
/// parameters.
pub fn project<R: Rng>(rng: &mut R) -> charnet::project::ProjectFile {
    use charnet::project::ProjectFile;
    use charnet::ExtractionConstraints;

    let mut p = ProjectFile::new(format!("corpus/{}", rng.random_range(0..1000)));
    p.glob = ["*.txt", "chap*.txt", "*.TXT"].choose(rng).unwrap().to_string();
    p.encoding = ["utf-8", "windows-1252", "latin1"].choose(rng).unwrap().to_string();
    p.constraints = ExtractionConstraints {
        min_length: rng.random_range(1..10),
        require_capitalized: rng.random_bool(0.5),
        min_count: rng.random_range(1..10),
    };
    p.params = AnalysisParams {
        delta_s: rng.random_range(1..=500),
        kernel: if rng.random_bool(0.5) { KernelKind::Linear } else { KernelKind::Exponential },
        ..params(rng)
    };
    let reg = &mut p.registry;
    let mut ids = Vec::new();
    for k in 0..rng.random_range(0..12) {
        let ntype = if rng.random_bool(0.5) { NameType::Character } else { NameType::Place };
        let tag = (b'a' + k as u8) as char;
        let id = reg.add_name(&format!("Nâme{tag}"), ntype).unwrap();
        for v in 0..rng.random_range(0..3) {
            reg.add_variant(id, &format!("Nâme{tag}v{}", (b'a' + v as u8) as char)).unwrap();
        }
        ids.push(id);
    }
    for id in ids {
        if rng.random_bool(0.2) {
            reg.remove_name(id).unwrap();
        }
    }
    p
}
