use std::collections::HashMap;

use crate::corpus::Corpus;
use crate::names::{NameId, NameRegistry, NameType};

/// Where each registered name occurs, per document.
///
/// Names are kept in registry order; documents in corpus order. Position
/// lists are ascending and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceIndex {
    names: Vec<(NameId, NameType)>,
    doc_ids: Vec<String>,
    // positions[name][doc]
    positions: Vec<Vec<Vec<usize>>>,
}

impl OccurrenceIndex {
    pub fn names(&self) -> impl ExactSizeIterator<Item = NameId> + '_ {
        self.names.iter().map(|(id, _)| *id)
    }

    pub fn name_count(&self) -> usize {
        self.names.len()
    }

    pub fn name_type(&self, slot: usize) -> NameType {
        self.names[slot].1
    }

    pub fn name_id(&self, slot: usize) -> NameId {
        self.names[slot].0
    }

    pub fn doc_ids(&self) -> &[String] {
        &self.doc_ids
    }

    pub fn slot_of(&self, id: NameId) -> Option<usize> {
        self.names.iter().position(|(n, _)| *n == id)
    }

    /// Per-document position lists for the name in `slot`.
    pub fn by_slot(&self, slot: usize) -> &[Vec<usize>] {
        &self.positions[slot]
    }

    pub fn positions(&self, id: NameId, doc_id: &str) -> &[usize] {
        match (self.slot_of(id), self.doc_ids.iter().position(|d| d == doc_id)) {
            (Some(n), Some(d)) => &self.positions[n][d],
            _ => &[],
        }
    }

    pub fn count(&self, id: NameId) -> usize {
        self.slot_of(id)
            .map(|n| self.positions[n].iter().map(Vec::len).sum())
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

pub fn index_occurrences(corpus: &Corpus, registry: &NameRegistry) -> OccurrenceIndex {
    let names: Vec<(NameId, NameType)> = registry.entries().iter().map(|e| (e.id, e.ntype)).collect();
    let docs = corpus.documents();
    let slots: HashMap<NameId, usize> = names.iter().enumerate().map(|(i, (id, _))| (*id, i)).collect();
    let mut positions = vec![vec![Vec::new(); docs.len()]; names.len()];

    for (d, doc) in docs.iter().enumerate() {
        for token in &doc.tokens {
            let Some(owner) = registry.owner_of(&token.text) else {
                continue;
            };
            positions[slots[&owner]][d].push(token.position);
        }
    }

    OccurrenceIndex {
        names,
        doc_ids: docs.iter().map(|d| d.doc_id.clone()).collect(),
        positions,
    }
}
