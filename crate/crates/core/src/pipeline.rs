//! End-to-end helpers shared by the command line and the HTTP service, so both
//! produce byte-identical artifacts for the same project.

use std::path::Path;

use serde::Serialize;

use crate::analysis::{
    apply_thresholds, compute_frequencies, compute_interactions, index_occurrences, network_warnings,
    AnalysisParams, AnalysisWarning, FrequencyTable, InteractionMatrix, NetworkModel, OccurrenceIndex,
    ParamError,
};
use crate::corpus::{Corpus, CorpusError};
use crate::graphout::{emit_dot, DotStyle};
use crate::names::NameRegistry;
use crate::project::ProjectFile;

/// Everything computed from one occurrence index and one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkReport {
    pub frequencies: FrequencyTable,
    pub interactions: InteractionMatrix,
    pub network: NetworkModel,
    pub warnings: Vec<AnalysisWarning>,
}

impl NetworkReport {
    pub fn dot(&self, style: &DotStyle) -> String {
        emit_dot(&self.network, style)
    }

    pub fn summary(&self) -> Summary {
        Summary {
            names: self.frequencies.rows().len(),
            nonzero_pairs: self.interactions.nonzero_pairs(),
            max_raw_sum: self.interactions.max_raw_sum(),
            nodes: self.network.nodes.len(),
            edges: self.network.edges.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub names: usize,
    pub nonzero_pairs: usize,
    pub max_raw_sum: f64,
    pub nodes: usize,
    pub edges: usize,
}

pub fn analyze_index(
    index: &OccurrenceIndex,
    registry: &NameRegistry,
    params: &AnalysisParams,
) -> Result<NetworkReport, ParamError> {
    params.validate()?;
    let frequencies = compute_frequencies(index);
    let interactions = compute_interactions(index, &params.kernel());
    let network = apply_thresholds(&frequencies, &interactions, params, registry);
    let warnings = network_warnings(&interactions);
    Ok(NetworkReport {
        frequencies,
        interactions,
        network,
        warnings,
    })
}

pub fn analyze(corpus: &Corpus, registry: &NameRegistry, params: &AnalysisParams) -> Result<NetworkReport, ParamError> {
    analyze_index(&index_occurrences(corpus, registry), registry, params)
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Params(#[from] ParamError),
}

/// Loads the project's corpus (relative paths resolved against `base`) and
/// runs the full analysis.
pub fn analyze_project(project: &ProjectFile, base: Option<&Path>) -> Result<NetworkReport, PipelineError> {
    project.params.validate()?;
    let corpus = project.corpus_source(base).load()?;
    Ok(analyze(&corpus, &project.registry, &project.params)?)
}

/// The GV document for a project, as written by `render`.
pub fn render_project(project: &ProjectFile, base: Option<&Path>) -> Result<String, PipelineError> {
    Ok(analyze_project(project, base)?.dot(&DotStyle::default()))
}
