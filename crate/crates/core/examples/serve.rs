//! Run the curation service with the toy project already open.
//!
//!     cargo run --example serve -- [PORT]
//!     curl localhost:7414/projects/s1/network?i_t=0.5

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use charnet::service::{router, AppState, Session};

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let port: u16 = std::env::args().nth(1).and_then(|p| p.parse().ok()).unwrap_or(7414);
    let project = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/project.toml");

    let state = Arc::new(AppState::new());
    let session = Session::open_project(&project).expect("toy project loads");
    let id = state.insert(session);

    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    println!("listening on http://{addr}");
    println!("  GET  /projects/{id}/raw-words?min_count=1");
    println!("  GET  /projects/{id}/network");
    println!("  POST /projects/{id}/registry  {{\"op\":\"add_name\",\"main_variant\":\"Santen\",\"type\":\"place\"}}");
    println!("  GET  /projects/{id}/export.gv");
    axum::serve(listener, router(state)).await
}
