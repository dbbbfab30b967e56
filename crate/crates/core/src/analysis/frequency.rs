use std::fmt::Write as _;

use super::format_score;
use super::occurrence::OccurrenceIndex;
use crate::names::{NameId, NameRegistry, NameType};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyRow {
    pub id: NameId,
    pub ntype: NameType,
    pub raw_count: usize,
    pub score: f64,
}

/// Occurrence counts normalized within each name type.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable {
    rows: Vec<FrequencyRow>,
}

impl FrequencyTable {
    /// Normalizes raw counts within each name type by that type's maximum.
    pub fn from_counts(counts: Vec<(NameId, NameType, usize)>) -> Self {
        let class_max = |ntype: NameType| {
            counts
                .iter()
                .filter(|(_, t, _)| *t == ntype)
                .map(|(_, _, c)| *c)
                .max()
                .unwrap_or(0)
        };
        let max_char = class_max(NameType::Character);
        let max_place = class_max(NameType::Place);

        let rows = counts
            .into_iter()
            .map(|(id, ntype, raw_count)| {
                let max = match ntype {
                    NameType::Character => max_char,
                    NameType::Place => max_place,
                };
                let score = if max == 0 { 0.0 } else { raw_count as f64 / max as f64 };
                FrequencyRow {
                    id,
                    ntype,
                    raw_count,
                    score,
                }
            })
            .collect();
        FrequencyTable { rows }
    }

    pub fn rows(&self) -> &[FrequencyRow] {
        &self.rows
    }

    pub fn get(&self, id: NameId) -> Option<&FrequencyRow> {
        self.rows.iter().find(|r| r.id == id)
    }

    pub fn score(&self, id: NameId) -> f64 {
        self.get(id).map_or(0.0, |r| r.score)
    }

    /// `name<TAB>raw_count<TAB>score`, sorted by score descending then name.
    pub fn to_tsv(&self, registry: &NameRegistry, precision: usize) -> String {
        let mut rows: Vec<(&str, &FrequencyRow)> = self
            .rows
            .iter()
            .map(|r| (display_name(registry, r.id), r))
            .collect();
        rows.sort_by(|a, b| b.1.score.total_cmp(&a.1.score).then_with(|| a.0.cmp(b.0)));
        let mut out = String::new();
        for (name, row) in rows {
            let _ = writeln!(out, "{}\t{}\t{}", name, row.raw_count, format_score(row.score, precision));
        }
        out
    }
}

pub(crate) fn display_name(registry: &NameRegistry, id: NameId) -> &str {
    registry.get(id).map_or("", |e| e.main_variant())
}

pub fn compute_frequencies(index: &OccurrenceIndex) -> FrequencyTable {
    let counts = (0..index.name_count())
        .map(|slot| {
            let count = index.by_slot(slot).iter().map(Vec::len).sum();
            (index.name_id(slot), index.name_type(slot), count)
        })
        .collect();
    FrequencyTable::from_counts(counts)
}
