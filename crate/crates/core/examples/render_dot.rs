//! Render a project to Graphviz DOT on stdout.
//!
//!     cargo run --example render_dot -- [PROJECT.toml] > network.gv
//!     dot -Tsvg network.gv > network.svg

use std::path::PathBuf;

use charnet::pipeline::analyze_project;
use charnet::project::load_project;
use charnet::DotStyle;

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/project.toml"));
    let project = load_project(&path).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(3)
    });
    let report = analyze_project(&project, path.parent()).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2)
    });
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let s = report.summary();
    eprintln!("{} nodes, {} edges", s.nodes, s.edges);

    let style = DotStyle {
        place_fill: "#f4e3b5".into(),
        ..DotStyle::default()
    };
    print!("{}", report.dot(&style));
}
