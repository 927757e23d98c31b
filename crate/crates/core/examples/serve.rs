// Run the analysis endpoint on a local port.
//
// cargo run --example serve -- 8080
//
// curl -s localhost:8080/analyze -d '{"text": "Amigos, el amor me perjudica"}' \
//      -H 'content-type: application/json'

use std::net::SocketAddr;

use escansion::Scanner;

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let port: u16 = std::env::args()
        .nth(1)
        .and_then(|p| p.parse().ok())
        .unwrap_or(8080);
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    println!("listening on http://{addr}");
    escansion::server::serve(Scanner::default(), addr).await
}
