use std::net::SocketAddr;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::State;
use axum::http::StatusCode;
use axum::routing::post;
use axum::Router;
use tokio::net::TcpListener;
use tokio::task::JoinHandle;

use super::streams::{CollectError, ValueStreams};

/// Shared handle to the streams the HTTP endpoint writes into.
#[derive(Debug, Clone, Default)]
pub struct Collector {
    pub streams: Arc<Mutex<ValueStreams>>,
}

impl Collector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn router(&self) -> Router {
        Router::new()
            .route("/watch", post(watch))
            .with_state(self.streams.clone())
    }
}

async fn watch(State(streams): State<Arc<Mutex<ValueStreams>>>, body: Bytes) -> (StatusCode, String) {
    let mut s = streams.lock().unwrap_or_else(|e| e.into_inner());
    match s.collect_body(&body) {
        Ok(_) => (StatusCode::NO_CONTENT, String::new()),
        Err(CollectError::BadRequest(msg)) => (StatusCode::BAD_REQUEST, msg),
    }
}

/// A running collector endpoint.
#[derive(Debug)]
pub struct CollectorHandle {
    pub addr: SocketAddr,
    pub task: JoinHandle<()>,
}

impl CollectorHandle {
    pub fn url(&self) -> String {
        format!("http://{}/watch", self.addr)
    }
}

/// Listen on `addr` (port 0 picks a free one) and serve POST /watch.
pub async fn serve(collector: &Collector, addr: SocketAddr) -> std::io::Result<CollectorHandle> {
    let listener = TcpListener::bind(addr).await?;
    let addr = listener.local_addr()?;
    let app = collector.router();
    let task = tokio::spawn(async move {
        if let Err(e) = axum::serve(listener, app).await {
            log::error!("collector stopped: {e}");
        }
    });
    Ok(CollectorHandle { addr, task })
}
