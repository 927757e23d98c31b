//! Local HTTP endpoint for editors: `GET /health` and `POST /analyze`.
//!
//! ```text
//! POST /analyze
//! {"text": "...", "window": 14, "anchor": "preceding", "measures": [7, 11], "mode": "auto"}
//! ```
//!
//! Only `text` is required. The response is an
//! [`AnalysisResponse`](crate::report::AnalysisResponse).

use std::collections::BTreeSet;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::extract::State;
use axum::http::StatusCode;
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;

use crate::poem::{MeterMode, PoemOptions, WindowAnchor, DEFAULT_WINDOW};
use crate::report::AnalysisResponse;
use crate::verse::Scanner;

#[derive(Debug, Clone, Deserialize)]
pub struct AnalyzeRequest {
    pub text: String,
    pub window: Option<usize>,
    pub anchor: Option<WindowAnchor>,
    pub measures: Option<BTreeSet<usize>>,
    pub mode: Option<MeterMode>,
}

impl AnalyzeRequest {
    pub fn options(&self) -> PoemOptions {
        PoemOptions {
            window: self.window.unwrap_or(DEFAULT_WINDOW),
            anchor: self.anchor.unwrap_or_default(),
            mode: self.mode.unwrap_or_default(),
            forced_measures: self.measures.clone(),
        }
    }
}

pub fn router(scanner: Arc<Scanner>) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/analyze", post(analyze))
        .with_state(scanner)
}

async fn health() -> Json<serde_json::Value> {
    Json(serde_json::json!({ "status": "ok" }))
}

async fn analyze(
    State(scanner): State<Arc<Scanner>>,
    Json(request): Json<AnalyzeRequest>,
) -> Result<Json<AnalysisResponse>, (StatusCode, String)> {
    if request.window == Some(0) {
        return Err((
            StatusCode::UNPROCESSABLE_ENTITY,
            "window must be at least 1".into(),
        ));
    }
    let response = tokio::task::spawn_blocking(move || {
        let options = request.options();
        let analysis = scanner.analyze_text(&request.text, &options);
        AnalysisResponse::new(&analysis, &options)
    })
    .await
    .map_err(|e| (StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    Ok(Json(response))
}

/// Serves until the process is stopped.
pub async fn serve(scanner: Scanner, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(Arc::new(scanner))).await
}
