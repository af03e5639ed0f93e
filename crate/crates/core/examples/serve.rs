//! Serve the sample KB over HTTP until ctrl-c.
//!
//!     cargo run --example serve [port]
//!     curl 'http://127.0.0.1:7341/similarity?a=to-gum&b=to-rub'
//!     curl -X POST -H 'content-type: application/json' \
//!          -d '{"goal":"rub"}' http://127.0.0.1:7341/diagnose

use std::net::SocketAddr;
use std::sync::Arc;

use fuzzynet::interface::{http, DEFAULT_PORT};
use fuzzynet::kb::builtin_sample_kb;
use fuzzynet::Engine;

#[tokio::main]
async fn main() -> fuzzynet::Result<()> {
    let port = std::env::args()
        .nth(1)
        .and_then(|p| p.parse().ok())
        .unwrap_or(DEFAULT_PORT);
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    println!("listening on http://{addr}");
    http::serve(Arc::new(Engine::in_memory(builtin_sample_kb())), addr).await
}
