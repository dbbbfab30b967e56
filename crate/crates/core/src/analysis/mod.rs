//! Occurrence indexing, frequency and interaction scoring, and thresholding.
//!
//! The pipeline is a chain of pure functions:
//!
//! ```text
//! Corpus + NameRegistry --index_occurrences--> OccurrenceIndex
//! OccurrenceIndex --compute_frequencies--> FrequencyTable
//! OccurrenceIndex + ProximityKernel --compute_interactions--> InteractionMatrix
//! FrequencyTable + InteractionMatrix + AnalysisParams --apply_thresholds--> NetworkModel
//! ```

mod frequency;
mod interaction;
mod kernel;
mod network;
mod occurrence;
mod params;

pub use frequency::{compute_frequencies, FrequencyRow, FrequencyTable};
pub use interaction::{compute_interactions, InteractionMatrix, PairScore};
pub use kernel::{proximity, KernelKind, ProximityKernel, EXPONENTIAL_DECAY_AT_CUTOFF};
pub use network::{apply_thresholds, network_warnings, AnalysisWarning, NetworkEdge, NetworkModel, NetworkNode};
pub use occurrence::{index_occurrences, OccurrenceIndex};
pub use params::{AnalysisParams, ParamError};

/// Rounds half away from zero to `precision` decimals and formats with exactly
/// that many digits.
pub fn format_score(value: f64, precision: usize) -> String {
    let scale = 10f64.powi(precision as i32);
    let rounded = (value * scale).round() / scale;
    format!("{rounded:.precision$}")
}
