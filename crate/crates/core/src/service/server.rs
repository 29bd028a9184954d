//! Length-prefixed transport: each frame is a 4-byte big-endian length
//! followed by that many bytes of JSON.

use std::collections::HashMap;
use std::io;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, MutexGuard};

use tokio::io::{AsyncRead, AsyncReadExt, AsyncWrite, AsyncWriteExt};
use tokio::net::TcpListener;
use tokio::sync::mpsc::{unbounded_channel, UnboundedSender};

use super::{Envelope, ErrorCode, Reply, Request, Response, Service, SessionId};
use crate::syntax::NodeId;

pub const MAX_FRAME: usize = 16 << 20;

/// Read one frame; `None` on a clean end of stream.
pub async fn read_frame<R: AsyncRead + Unpin>(r: &mut R) -> io::Result<Option<Vec<u8>>> {
    let mut len = [0u8; 4];
    match r.read_exact(&mut len).await {
        Ok(_) => {}
        Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => return Ok(None),
        Err(e) => return Err(e),
    }
    let len = u32::from_be_bytes(len) as usize;
    if len > MAX_FRAME {
        return Err(io::Error::new(io::ErrorKind::InvalidData, format!("frame of {len} bytes")));
    }
    let mut buf = vec![0u8; len];
    r.read_exact(&mut buf).await?;
    Ok(Some(buf))
}

pub async fn write_frame<W: AsyncWrite + Unpin>(w: &mut W, bytes: &[u8]) -> io::Result<()> {
    let len = u32::try_from(bytes.len()).map_err(|_| io::Error::new(io::ErrorKind::InvalidInput, "frame too large"))?;
    w.write_all(&len.to_be_bytes()).await?;
    w.write_all(bytes).await?;
    w.flush().await
}

type Outbox = UnboundedSender<Vec<u8>>;

/// A service shared by any number of connections.
pub struct Server {
    service: Mutex<Service>,
    subscribers: Mutex<HashMap<SessionId, Vec<(u64, Outbox)>>>,
    next_conn: AtomicU64,
}

fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|e| e.into_inner())
}

impl Server {
    pub fn new(service: Service) -> Arc<Server> {
        Arc::new(Server {
            service: Mutex::new(service),
            subscribers: Mutex::new(HashMap::new()),
            next_conn: AtomicU64::new(1),
        })
    }

    pub fn with_service<T>(&self, f: impl FnOnce(&mut Service) -> T) -> T {
        f(&mut lock(&self.service))
    }

    /// Handle one raw request from connection `conn` and return the reply.
    /// State changes are also pushed to the session's other subscribers.
    pub fn process(&self, conn: u64, outbox: &Outbox, raw: &[u8]) -> Vec<u8> {
        let envelope = match serde_json::from_slice::<Envelope>(raw) {
            Ok(e) => e,
            Err(_) => return lock(&self.service).handle_message(raw).to_json(),
        };
        let session = envelope.request.session();
        let subscribe = matches!(envelope.request, Request::SubscribeState { .. });
        let mutates = envelope.request.mutates();
        let reply = lock(&self.service).handle(envelope);
        if let (Some(s), Response::State { .. }) = (session, &reply.response) {
            if subscribe {
                let mut subs = lock(&self.subscribers);
                let list = subs.entry(s).or_default();
                if !list.iter().any(|(c, _)| *c == conn) {
                    list.push((conn, outbox.clone()));
                }
            } else if mutates {
                let pushed = Reply {
                    seq: None,
                    response: reply.response.clone(),
                };
                self.broadcast(s, Some(conn), &pushed);
            }
        }
        reply.to_json()
    }

    fn broadcast(&self, session: SessionId, except: Option<u64>, reply: &Reply) {
        let bytes = reply.to_json();
        let mut subs = lock(&self.subscribers);
        if let Some(list) = subs.get_mut(&session) {
            list.retain(|(c, tx)| Some(*c) == except || tx.send(bytes.clone()).is_ok());
        }
    }

    /// A runtime value arrived for `node`: push fresh state to subscribers.
    pub fn notify_value(&self, node: NodeId) {
        let session = Service::owner_of(node);
        let reply = {
            let mut service = lock(&self.service);
            if service.session(session).is_none() {
                return;
            }
            service.handle(Envelope {
                seq: None,
                request: Request::SubscribeState { session },
            })
        };
        self.broadcast(session, None, &reply);
    }

    fn disconnect(&self, conn: u64) {
        for list in lock(&self.subscribers).values_mut() {
            list.retain(|(c, _)| *c != conn);
        }
    }

    /// Serve one bidirectional stream until the peer closes it.
    pub async fn connection<R, W>(self: Arc<Self>, mut reader: R, mut writer: W) -> io::Result<()>
    where
        R: AsyncRead + Unpin,
        W: AsyncWrite + Unpin + Send + 'static,
    {
        let conn = self.next_conn.fetch_add(1, Ordering::Relaxed);
        let (tx, mut rx) = unbounded_channel::<Vec<u8>>();
        let writer_task = tokio::spawn(async move {
            while let Some(bytes) = rx.recv().await {
                write_frame(&mut writer, &bytes).await?;
            }
            Ok::<_, io::Error>(())
        });
        let result = loop {
            match read_frame(&mut reader).await {
                Ok(Some(raw)) => {
                    let reply = self.process(conn, &tx, &raw);
                    if tx.send(reply).is_err() {
                        break Ok(());
                    }
                }
                Ok(None) => break Ok(()),
                Err(e) if e.kind() == io::ErrorKind::InvalidData => {
                    let reply = Reply::error(None, ErrorCode::Malformed, e.to_string());
                    let _ = tx.send(reply.to_json());
                    break Err(e);
                }
                Err(e) => break Err(e),
            }
        };
        self.disconnect(conn);
        drop(tx);
        writer_task.await.map_err(io::Error::other)??;
        result
    }
}

/// Accept connections forever.
pub async fn serve_tcp(server: Arc<Server>, listener: TcpListener) -> io::Result<()> {
    loop {
        let (stream, peer) = listener.accept().await?;
        let server = server.clone();
        tokio::spawn(async move {
            let (r, w) = stream.into_split();
            if let Err(e) = server.connection(r, w).await {
                log::warn!("connection {peer}: {e}");
            }
        });
    }
}

/// Serve frames on stdin and answer on stdout.
pub async fn serve_stdio(server: Arc<Server>) -> io::Result<()> {
    server.connection(tokio::io::stdin(), tokio::io::stdout()).await
}
