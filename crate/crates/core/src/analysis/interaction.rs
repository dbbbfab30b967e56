use std::fmt::Write as _;

use rayon::prelude::*;

use super::format_score;
use super::frequency::display_name;
use super::kernel::ProximityKernel;
use super::occurrence::OccurrenceIndex;
use crate::names::{NameId, NameRegistry};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PairScore {
    pub raw_sum: f64,
    pub score: f64,
}

/// Symmetric pairwise interaction scores, normalized by the largest raw sum.
///
/// Stored as the strict upper triangle over the index's name order; the
/// diagonal does not exist.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionMatrix {
    names: Vec<NameId>,
    pairs: Vec<PairScore>,
    max_raw: f64,
}

impl InteractionMatrix {
    /// Normalizes raw sums given for the strict upper triangle in row order:
    /// `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
    ///
    /// Panics if the length does not match or a sum is negative or not finite.
    pub fn from_raw_sums(names: Vec<NameId>, raw: Vec<f64>) -> Self {
        let n = names.len();
        assert_eq!(raw.len(), n * n.saturating_sub(1) / 2, "one raw sum per unordered pair");
        assert!(raw.iter().all(|s| s.is_finite() && *s >= 0.0), "raw sums must be finite and >= 0");
        let max_raw = raw.iter().copied().fold(0.0, f64::max);
        let pairs = raw
            .into_iter()
            .map(|raw_sum| PairScore {
                raw_sum,
                // No division at all when nothing interacts.
                score: if max_raw > 0.0 { raw_sum / max_raw } else { 0.0 },
            })
            .collect();
        InteractionMatrix { names, pairs, max_raw }
    }

    fn tri(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let n = self.names.len();
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    pub fn names(&self) -> &[NameId] {
        &self.names
    }

    /// Scores for an unordered pair; `None` for self-pairs and unknown ids.
    pub fn get(&self, a: NameId, b: NameId) -> Option<PairScore> {
        let i = self.names.iter().position(|n| *n == a)?;
        let j = self.names.iter().position(|n| *n == b)?;
        (i != j).then(|| self.pairs[self.tri(i, j)])
    }

    pub fn score(&self, a: NameId, b: NameId) -> f64 {
        self.get(a, b).map_or(0.0, |p| p.score)
    }

    /// Every unordered pair `(a, b, scores)` with `a` before `b` in name order.
    pub fn pairs(&self) -> impl Iterator<Item = (NameId, NameId, PairScore)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).map(move |j| (self.names[i], self.names[j], self.pairs[self.tri(i, j)]))
        })
    }

    pub fn max_raw_sum(&self) -> f64 {
        self.max_raw
    }

    pub fn nonzero_pairs(&self) -> usize {
        self.pairs.iter().filter(|p| p.raw_sum > 0.0).count()
    }

    pub fn is_all_zero(&self) -> bool {
        self.max_raw == 0.0
    }

    /// `name1<TAB>name2<TAB>raw_sum<TAB>score` for every pair with a positive
    /// raw sum, sorted by score descending then by the two names.
    pub fn to_tsv(&self, registry: &NameRegistry, precision: usize) -> String {
        let mut rows: Vec<(&str, &str, PairScore)> = self
            .pairs()
            .filter(|(_, _, p)| p.raw_sum > 0.0)
            .map(|(a, b, p)| {
                let (x, y) = (display_name(registry, a), display_name(registry, b));
                if x <= y {
                    (x, y, p)
                } else {
                    (y, x, p)
                }
            })
            .collect();
        rows.sort_by(|a, b| {
            b.2.score
                .total_cmp(&a.2.score)
                .then_with(|| a.0.cmp(b.0))
                .then_with(|| a.1.cmp(b.1))
        });
        let mut out = String::new();
        for (x, y, p) in rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                x,
                y,
                format_score(p.raw_sum, precision),
                format_score(p.score, precision)
            );
        }
        out
    }
}

/// Sums kernel values over every same-document occurrence pair of each name
/// pair, then divides by the largest sum.
///
/// Summation runs in document order, then ascending positions of the earlier
/// name, then ascending positions of the later name. Pairs farther apart than
/// the cutoff are skipped; they would only add zero.
pub fn compute_interactions(index: &OccurrenceIndex, kernel: &ProximityKernel) -> InteractionMatrix {
    let n = index.name_count();
    let slot_pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();

    let raw: Vec<f64> = slot_pairs
        .par_iter()
        .map(|&(i, j)| pair_sum(index.by_slot(i), index.by_slot(j), kernel))
        .collect();

    InteractionMatrix::from_raw_sums(index.names().collect(), raw)
}

fn pair_sum(first: &[Vec<usize>], second: &[Vec<usize>], kernel: &ProximityKernel) -> f64 {
    let window = kernel.delta_s as usize;
    let mut sum = 0.0;
    for (ps, qs) in first.iter().zip(second) {
        if ps.is_empty() || qs.is_empty() {
            continue;
        }
        let mut lo = 0;
        for &p in ps {
            let start = p.saturating_sub(window);
            while lo < qs.len() && qs[lo] < start {
                lo += 1;
            }
            for &q in &qs[lo..] {
                if q > p + window {
                    break;
                }
                sum += kernel.eval(p.abs_diff(q) as u64);
            }
        }
    }
    sum
}
