mod common;

use std::collections::{BTreeMap, BTreeSet};

use charnet::analysis::{NetworkEdge, NetworkNode};
use charnet::graphout::{emit_dot, DotStyle};
use charnet::names::{NameId, NameType};
use charnet::NetworkModel;
use common::dot;
use proptest::prelude::*;

fn network_strategy() -> impl Strategy<Value = NetworkModel> {
    proptest::collection::btree_set("[A-Za-zÎîû\"\\\\' -]{1,8}", 0..8)
        .prop_flat_map(|names| {
            let n = names.len();
            (
                Just(names.into_iter().collect::<Vec<_>>()),
                proptest::collection::vec((any::<bool>(), 0.0f64..=1.0), n),
                proptest::collection::vec((0..n.max(1), 0..n.max(1), 0.0f64..=1.0), 0..12),
            )
        })
        .prop_map(|(names, attrs, raw_edges)| {
            let nodes: Vec<NetworkNode> = names
                .iter()
                .zip(attrs)
                .enumerate()
                .map(|(i, (name, (c, f)))| NetworkNode {
                    id: NameId(i as u32),
                    name: name.clone(),
                    ntype: if c { NameType::Character } else { NameType::Place },
                    f,
                })
                .collect();
            let mut seen = BTreeSet::new();
            let edges = raw_edges
                .into_iter()
                .filter(|(a, b, _)| a < b && b < &nodes.len() && seen.insert((*a, *b)))
                .map(|(a, b, score)| NetworkEdge {
                    source: NameId(a as u32),
                    target: NameId(b as u32),
                    score,
                })
                .collect();
            NetworkModel { nodes, edges }
        })
}

fn label_score(label: &str) -> &str {
    label.rsplit("\\n").next().unwrap()
}

proptest! {
    #[test]
    fn emitted_dot_parses_back_to_the_model(net in network_strategy()) {
        let style = DotStyle::default();
        let text = emit_dot(&net, &style);
        prop_assert_eq!(&text, &emit_dot(&net, &style));
        let g = dot::parse_checked(&text).map_err(TestCaseError::fail)?;
        prop_assert!(!g.directed);
        prop_assert_eq!(g.name.as_deref(), Some("G"));

        let want_nodes: BTreeMap<&str, &NetworkNode> = net.nodes.iter().map(|n| (n.name.as_str(), n)).collect();
        let got_nodes: BTreeSet<&str> = g.nodes.iter().map(|(n, _)| n.as_str()).collect();
        prop_assert_eq!(got_nodes, want_nodes.keys().copied().collect::<BTreeSet<_>>());
        for (id, attrs) in &g.nodes {
            let node = want_nodes[id.as_str()];
            let fill = if node.ntype == NameType::Character { &style.char_fill } else { &style.place_fill };
            prop_assert_eq!(&attrs["fillcolor"], fill);
            prop_assert_eq!(label_score(&attrs["label"]), charnet::analysis::format_score(node.f, 2));
        }

        let name = |id: NameId| net.node(id).unwrap().name.clone();
        let want_edges: BTreeSet<(String, String)> = net
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (name(e.source), name(e.target));
                if a <= b { (a, b) } else { (b, a) }
            })
            .collect();
        let got_edges: BTreeSet<(String, String)> = g
            .edges
            .iter()
            .map(|(a, b, _)| if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) })
            .collect();
        prop_assert_eq!(got_edges.len(), g.edges.len());
        prop_assert_eq!(got_edges, want_edges);

        if let Some(ok) = dot::graphviz_accepts(&text) {
            prop_assert!(ok, "graphviz rejected:\n{}", text);
        }
    }
}

#[test]
fn parser_self_checks() {
    let g = dot::parse("strict digraph x { a -> b -> c [w=1]; node [shape=box] \"q\\\"\" }").unwrap();
    assert!(g.directed && g.strict);
    assert_eq!(g.edges.len(), 2);
    assert_eq!(g.nodes[0].0, "q\"");
    assert!(dot::parse("graph { a -> b }").is_err());
    assert!(dot::parse("graph { a -- }").is_err());
    assert!(dot::parse("graph { \"a }").is_err());
    assert!(dot::parse("graph { 1a }").is_err());
    assert!(dot::parse("graph { a } x").is_err());
    assert!(dot::parse_checked("graph { a -- b }").is_err());
    assert!(dot::parse_checked("graph { a; b; a -- b }").is_ok());
    assert!(dot::parse_checked("graph { a; b; a -- b; c }").is_err());
}

#[test]
fn edge_operator_inside_a_name() {
    let node = |i: u32, n: &str| NetworkNode {
        id: NameId(i),
        name: n.into(),
        ntype: NameType::Place,
        f: 0.5,
    };
    let net = NetworkModel {
        nodes: vec![node(0, " -- -"), node(1, "-")],
        edges: vec![NetworkEdge {
            source: NameId(0),
            target: NameId(1),
            score: 0.5,
        }],
    };
    let g = dot::parse_checked(&emit_dot(&net, &DotStyle::default())).unwrap();
    assert_eq!(g.nodes.len(), 2);
    assert_eq!(g.edges[0].0, " -- -");
}

#[test]
fn edge_order_is_score_then_names() {
    let node = |i: u32, n: &str| NetworkNode {
        id: NameId(i),
        name: n.into(),
        ntype: NameType::Character,
        f: 1.0,
    };
    let edge = |a: u32, b: u32, s: f64| NetworkEdge {
        source: NameId(a),
        target: NameId(b),
        score: s,
    };
    let net = NetworkModel {
        nodes: vec![node(0, "C"), node(1, "B"), node(2, "A")],
        edges: vec![edge(0, 1, 0.5), edge(1, 2, 0.5), edge(0, 2, 1.0)],
    };
    let text = emit_dot(&net, &DotStyle::default());
    let edges: Vec<&str> = text.lines().filter(|l| l.contains(" -- ")).collect();
    assert_eq!(
        edges,
        [
            "  \"A\" -- \"C\" [label=\"1.00\", penwidth=5.00];",
            "  \"A\" -- \"B\" [label=\"0.50\", penwidth=3.00];",
            "  \"B\" -- \"C\" [label=\"0.50\", penwidth=3.00];",
        ]
    );
}
