//! DOT (Graphviz) serialization of a network.
//!
//! Output is an undirected `graph` with a fixed preamble. Node ids are the
//! quoted main variants, which are unique because variants are disjoint.
//! Ordering is fully determined by the model, so equal inputs give equal bytes.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::analysis::{format_score, NetworkModel, NetworkNode};
use crate::names::NameType;

pub const GRAPH_PREAMBLE: &str = "  graph [overlap=false, splines=true, outputorder=edgesfirst];\n  node [style=filled, fontname=\"Helvetica\"];\n  edge [fontname=\"Helvetica\", fontsize=10];\n";

#[derive(Debug, Clone, PartialEq)]
pub struct DotStyle {
    pub char_fill: String,
    pub place_fill: String,
    pub char_shape: String,
    pub place_shape: String,
    /// Decimal digits in node and edge labels.
    pub precision: usize,
    /// `penwidth = penwidth_base + penwidth_gain * score`
    pub penwidth_base: f64,
    pub penwidth_gain: f64,
}

impl Default for DotStyle {
    fn default() -> Self {
        DotStyle {
            char_fill: "lightblue".into(),
            place_fill: "palegreen".into(),
            char_shape: "ellipse".into(),
            place_shape: "box".into(),
            precision: 2,
            penwidth_base: 1.0,
            penwidth_gain: 4.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is not a usable DOT color")]
pub struct StyleError(pub String);

impl DotStyle {
    pub fn validate(&self) -> Result<(), StyleError> {
        for color in [&self.char_fill, &self.place_fill] {
            if !is_color(color) {
                return Err(StyleError(color.clone()));
            }
        }
        Ok(())
    }

    fn fill(&self, ntype: NameType) -> &str {
        match ntype {
            NameType::Character => &self.char_fill,
            NameType::Place => &self.place_fill,
        }
    }

    fn shape(&self, ntype: NameType) -> &str {
        match ntype {
            NameType::Character => &self.char_shape,
            NameType::Place => &self.place_shape,
        }
    }
}

// X11/SVG names are plain alphanumerics; RGB(A) is "#" plus 6 or 8 hex digits.
fn is_color(s: &str) -> bool {
    if let Some(hex) = s.strip_prefix('#') {
        return matches!(hex.len(), 6 | 8) && hex.chars().all(|c| c.is_ascii_hexdigit());
    }
    !s.is_empty() && s.starts_with(|c: char| c.is_ascii_alphabetic()) && s.chars().all(|c| c.is_ascii_alphanumeric())
}

/// Quotes a string as a DOT id, escaping backslashes and double quotes.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn node_order(a: &NetworkNode, b: &NetworkNode) -> Ordering {
    a.ntype
        .cmp(&b.ntype)
        .then_with(|| b.f.total_cmp(&a.f))
        .then_with(|| a.name.cmp(&b.name))
}

pub fn emit_dot(network: &NetworkModel, style: &DotStyle) -> String {
    let mut nodes: Vec<&NetworkNode> = network.nodes.iter().collect();
    nodes.sort_by(|a, b| node_order(a, b));

    let name_of = |id| network.node(id).map(|n| n.name.as_str());
    let mut edges: Vec<(&str, &str, f64)> = network
        .edges
        .iter()
        .filter_map(|e| {
            let (x, y) = (name_of(e.source)?, name_of(e.target)?);
            Some(if x <= y { (x, y, e.score) } else { (y, x, e.score) })
        })
        .collect();
    edges.sort_by(|a, b| b.2.total_cmp(&a.2).then_with(|| a.0.cmp(b.0)).then_with(|| a.1.cmp(b.1)));

    let precision = style.precision;
    let mut out = String::from("graph G {\n");
    out.push_str(GRAPH_PREAMBLE);
    for node in nodes {
        // `\n` inside a DOT label is Graphviz's centered line break.
        let label = format!("{}\\n{}", escape_inner(&node.name), format_score(node.f, precision));
        let _ = writeln!(
            out,
            "  {} [label=\"{}\", shape={}, fillcolor={}];",
            quote(&node.name),
            label,
            style.shape(node.ntype),
            quote_if_needed(style.fill(node.ntype)),
        );
    }
    for (x, y, score) in edges {
        let penwidth = style.penwidth_base + style.penwidth_gain * score;
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"{}\", penwidth={}];",
            quote(x),
            quote(y),
            format_score(score, precision),
            format_score(penwidth, 2),
        );
    }
    out.push_str("}\n");
    out
}

fn escape_inner(s: &str) -> String {
    let quoted = quote(s);
    quoted[1..quoted.len() - 1].to_string()
}

fn quote_if_needed(color: &str) -> String {
    if color.starts_with('#') {
        quote(color)
    } else {
        color.to_string()
    }
}
