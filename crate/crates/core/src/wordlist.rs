//! Raw-word extraction: the candidate list a curator picks names from.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::Corpus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtractionConstraints {
    pub min_length: usize,
    pub require_capitalized: bool,
    pub min_count: usize,
}

impl Default for ExtractionConstraints {
    fn default() -> Self {
        ExtractionConstraints {
            min_length: 3,
            require_capitalized: true,
            min_count: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstraintError {
    #[error("min_length must be at least 1")]
    MinLength,
    #[error("min_count must be at least 1")]
    MinCount,
}

impl ExtractionConstraints {
    pub fn validate(&self) -> Result<(), ConstraintError> {
        if self.min_length < 1 {
            return Err(ConstraintError::MinLength);
        }
        if self.min_count < 1 {
            return Err(ConstraintError::MinCount);
        }
        Ok(())
    }

    /// Checks the per-word part of the constraints (everything but `min_count`).
    pub fn admits_word(&self, word: &str) -> bool {
        let letters = word.chars().filter(|c| c.is_alphabetic()).count();
        if letters < self.min_length {
            return false;
        }
        if self.require_capitalized {
            let first_letter = word.chars().find(|c| c.is_alphabetic());
            if !first_letter.is_some_and(char::is_uppercase) {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RawWord {
    pub word: String,
    pub count: usize,
    /// Number of documents the word occurs in.
    pub doc_coverage: usize,
}

/// Filtered word counts, ordered by count descending then by word.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawWordTable {
    constraints: ExtractionConstraints,
    entries: Vec<RawWord>,
}

impl RawWordTable {
    pub fn entries(&self) -> &[RawWord] {
        &self.entries
    }

    pub fn constraints(&self) -> &ExtractionConstraints {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&RawWord> {
        self.entries.iter().find(|e| e.word == word)
    }

    /// `word<TAB>count<TAB>doc_coverage`, one line per entry.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{}\t{}\t{}", e.word, e.count, e.doc_coverage);
        }
        out
    }
}

pub fn extract_raw_words(corpus: &Corpus, constraints: &ExtractionConstraints) -> RawWordTable {
    let mut counts: HashMap<&str, (usize, usize, usize)> = HashMap::new();
    for (doc_index, doc) in corpus.documents().iter().enumerate() {
        for token in &doc.tokens {
            let slot = counts.entry(token.text.as_str()).or_insert((0, 0, usize::MAX));
            slot.0 += 1;
            if slot.2 != doc_index {
                slot.1 += 1;
                slot.2 = doc_index;
            }
        }
    }

    let mut entries: Vec<RawWord> = counts
        .into_iter()
        .filter(|(word, (count, _, _))| {
            *count >= constraints.min_count && constraints.admits_word(word)
        })
        .map(|(word, (count, doc_coverage, _))| RawWord {
            word: word.to_string(),
            count,
            doc_coverage,
        })
        .collect();
    entries.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.word.cmp(&b.word)));

    RawWordTable {
        constraints: *constraints,
        entries,
    }
}
