//! Brute-force reference computations. These deliberately avoid the
//! crate's occurrence index and windowed sweep.

use charnet::names::{NameRegistry, NameType};
use charnet::{Corpus, KernelKind};

/// Kernel written out from its definition.
pub fn kernel_value(kind: KernelKind, delta_s: u32, delta: usize) -> f64 {
    let s = delta_s as usize;
    if delta > s {
        return 0.0;
    }
    match kind {
        KernelKind::Linear => (s - delta) as f64 / s as f64,
        KernelKind::Exponential => (-3.0 * delta as f64 / s as f64).exp(),
    }
}

/// Positions of a name in each document, found by comparing every token
/// against every variant.
pub fn scan_positions(corpus: &Corpus, variants: &[String]) -> Vec<Vec<usize>> {
    corpus
        .documents()
        .iter()
        .map(|doc| {
            doc.tokens
                .iter()
                .filter(|t| variants.contains(&t.text))
                .map(|t| t.position)
                .collect()
        })
        .collect()
}

/// Raw sums for every unordered pair in registry order, from a full double
/// loop over all occurrence pairs (document order, then ascending positions).
pub fn raw_sums(corpus: &Corpus, registry: &NameRegistry, kind: KernelKind, delta_s: u32) -> Vec<f64> {
    let positions: Vec<Vec<Vec<usize>>> = registry
        .entries()
        .iter()
        .map(|e| scan_positions(corpus, &e.variants))
        .collect();
    let n = positions.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut sum = 0.0;
            for (pi, pj) in positions[i].iter().zip(&positions[j]) {
                for &p in pi {
                    for &q in pj {
                        sum += kernel_value(kind, delta_s, p.abs_diff(q));
                    }
                }
            }
            out.push(sum);
        }
    }
    out
}

pub fn normalized(raw: &[f64]) -> Vec<f64> {
    let max = raw.iter().copied().fold(0.0, f64::max);
    raw.iter().map(|s| if max > 0.0 { s / max } else { 0.0 }).collect()
}

/// Occurrence counts and per-type normalized scores, registry order.
pub fn frequencies(corpus: &Corpus, registry: &NameRegistry) -> Vec<(usize, f64)> {
    let counts: Vec<(NameType, usize)> = registry
        .entries()
        .iter()
        .map(|e| {
            let c = scan_positions(corpus, &e.variants).iter().map(Vec::len).sum();
            (e.ntype, c)
        })
        .collect();
    counts
        .iter()
        .map(|(t, c)| {
            let max = counts.iter().filter(|(u, _)| u == t).map(|(_, c)| *c).max().unwrap_or(0);
            (*c, if max == 0 { 0.0 } else { *c as f64 / max as f64 })
        })
        .collect()
}
