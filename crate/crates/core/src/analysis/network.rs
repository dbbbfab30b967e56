use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::frequency::FrequencyTable;
use super::interaction::InteractionMatrix;
use super::params::AnalysisParams;
use crate::names::{NameId, NameRegistry, NameType};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NetworkNode {
    pub id: NameId,
    pub name: String,
    #[serde(rename = "type")]
    pub ntype: NameType,
    pub f: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NetworkEdge {
    pub source: NameId,
    pub target: NameId,
    pub score: f64,
}

/// Nodes and undirected edges surviving the thresholds.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct NetworkModel {
    pub nodes: Vec<NetworkNode>,
    pub edges: Vec<NetworkEdge>,
}

impl NetworkModel {
    pub fn node(&self, id: NameId) -> Option<&NetworkNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn node_by_name(&self, name: &str) -> Option<&NetworkNode> {
        self.nodes.iter().find(|n| n.name == name)
    }

    pub fn degree(&self, id: NameId) -> usize {
        self.edges.iter().filter(|e| e.source == id || e.target == id).count()
    }

    pub fn edge_between(&self, a: NameId, b: NameId) -> Option<&NetworkEdge> {
        self.edges
            .iter()
            .find(|e| (e.source == a && e.target == b) || (e.source == b && e.target == a))
    }
}

/// Keeps names whose frequency score reaches their type's threshold, and
/// edges whose score is positive, reaches `i_t`, and joins two kept names.
///
/// All comparisons are inclusive. Nodes come out in registry order.
pub fn apply_thresholds(
    freq: &FrequencyTable,
    inter: &InteractionMatrix,
    params: &AnalysisParams,
    registry: &NameRegistry,
) -> NetworkModel {
    let nodes: Vec<NetworkNode> = registry
        .entries()
        .iter()
        .filter_map(|entry| {
            let f = freq.score(entry.id);
            (f >= params.frequency_threshold(entry.ntype)).then(|| NetworkNode {
                id: entry.id,
                name: entry.main_variant().to_string(),
                ntype: entry.ntype,
                f,
            })
        })
        .collect();

    let kept: HashSet<NameId> = nodes.iter().map(|n| n.id).collect();
    let edges = inter
        .pairs()
        .filter(|(a, b, p)| p.score > 0.0 && p.score >= params.i_t && kept.contains(a) && kept.contains(b))
        .map(|(source, target, p)| NetworkEdge {
            source,
            target,
            score: p.score,
        })
        .collect();

    NetworkModel { nodes, edges }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnalysisWarning {
    /// Fewer than two names, so no pair can interact.
    NoPairs,
    /// No two names ever occur within the cutoff distance.
    AllZeroInteractions,
}

impl fmt::Display for AnalysisWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisWarning::NoPairs => f.write_str("fewer than two names registered; no interactions computed"),
            AnalysisWarning::AllZeroInteractions => {
                f.write_str("no two names co-occur within the cutoff; the graph has no edges")
            }
        }
    }
}

pub fn network_warnings(inter: &InteractionMatrix) -> Vec<AnalysisWarning> {
    if inter.names().len() < 2 {
        vec![AnalysisWarning::NoPairs]
    } else if inter.is_all_zero() {
        vec![AnalysisWarning::AllZeroInteractions]
    } else {
        Vec::new()
    }
}
