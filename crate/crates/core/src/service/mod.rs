//! Sessions behind a message protocol.
//!
//! Every request gets exactly one reply. Replies that carry state are
//! numbered by the session version, so frontends can order them.

mod replay;
mod server;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::instrument::{default_endpoint, ValueStreams};
use crate::session::{Session, SessionError, State, StepReport};
use crate::syntax::{NodeId, TextChange};
use crate::tools::{bundled, InstanceId, Manifest};
use crate::transaction::{Intents, Outcome};

pub use replay::{replay, replay_with, ReplayError, ReplayScript, Selector, Step, Trace, TraceLine};
pub use server::{read_frame, serve_stdio, serve_tcp, write_frame, Server, MAX_FRAME};

pub type SessionId = u64;

/// Node ids of session `s` start at `s << SESSION_SHIFT`, so ids never
/// collide across sessions sharing one value collector.
pub const SESSION_SHIFT: u32 = 40;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum Request {
    Open {
        #[serde(default)]
        path: String,
        language_id: String,
        text: String,
        /// Tool ids to enable; the manifest defaults when absent.
        #[serde(default)]
        tools: Option<Vec<String>>,
    },
    Change {
        session: SessionId,
        version: u64,
        changes: Vec<TextChange>,
        #[serde(default)]
        intents: Intents,
        #[serde(default)]
        force_apply: bool,
    },
    Action {
        session: SessionId,
        version: u64,
        instance_id: InstanceId,
        action_id: String,
        #[serde(default)]
        payload: Value,
    },
    Revert {
        session: SessionId,
    },
    SubscribeState {
        session: SessionId,
    },
    /// Source of the document with watched expressions instrumented.
    Shadow {
        session: SessionId,
        #[serde(default)]
        endpoint: Option<String>,
    },
    Close {
        session: SessionId,
    },
}

impl Request {
    pub fn session(&self) -> Option<SessionId> {
        match self {
            Request::Open { .. } => None,
            Request::Change { session, .. }
            | Request::Action { session, .. }
            | Request::Revert { session }
            | Request::SubscribeState { session }
            | Request::Shadow { session, .. }
            | Request::Close { session } => Some(*session),
        }
    }

    /// Whether a successful reply changes what subscribers see.
    pub fn mutates(&self) -> bool {
        matches!(self, Request::Change { .. } | Request::Action { .. } | Request::Revert { .. })
    }
}

/// A request plus an optional client sequence number echoed in the reply.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seq: Option<u64>,
    #[serde(flatten)]
    pub request: Request,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ErrorCode {
    Malformed,
    UnknownSession,
    StaleVersion,
    UnknownLanguage,
    InvalidChange,
    Frozen,
    NothingToRevert,
    Action,
    Instrument,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum Response {
    State {
        session: SessionId,
        /// Outcome of the change, action or revert that produced this state.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        outcome: Option<Outcome>,
        /// Length of its edit script.
        #[serde(default)]
        op_count: usize,
        state: State,
        hash: String,
    },
    Shadow {
        session: SessionId,
        text: String,
    },
    Closed {
        session: SessionId,
    },
    Error {
        code: ErrorCode,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reply {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seq: Option<u64>,
    #[serde(flatten)]
    pub response: Response,
}

impl Reply {
    pub fn error(seq: Option<u64>, code: ErrorCode, message: impl Into<String>) -> Reply {
        Reply {
            seq,
            response: Response::Error {
                code,
                message: message.into(),
            },
        }
    }

    pub fn to_json(&self) -> Vec<u8> {
        serde_json::to_vec(self).expect("reply serializes")
    }

    pub fn state(&self) -> Option<&State> {
        match &self.response {
            Response::State { state, .. } => Some(state),
            _ => None,
        }
    }
}

fn code_of(e: &SessionError) -> ErrorCode {
    use crate::syntax::SyntaxError;
    use crate::transaction::TxError;
    match e {
        SessionError::Syntax(SyntaxError::UnknownLanguage(_)) => ErrorCode::UnknownLanguage,
        SessionError::Syntax(_) | SessionError::Transaction(TxError::InvalidChange(_)) => ErrorCode::InvalidChange,
        SessionError::StaleVersion { .. } => ErrorCode::StaleVersion,
        SessionError::Frozen => ErrorCode::Frozen,
        SessionError::Transaction(TxError::NothingToRevert) => ErrorCode::NothingToRevert,
        SessionError::Transaction(_) => ErrorCode::Internal,
        SessionError::Tool(_) => ErrorCode::Action,
        SessionError::Instrument(_) => ErrorCode::Instrument,
    }
}

/// All sessions of one engine process.
pub struct Service {
    manifest: Manifest,
    sessions: BTreeMap<SessionId, Session>,
    next: SessionId,
    values: Arc<Mutex<ValueStreams>>,
}

impl Default for Service {
    fn default() -> Self {
        Service::new(bundled(), Default::default())
    }
}

impl Service {
    pub fn new(manifest: Manifest, values: Arc<Mutex<ValueStreams>>) -> Service {
        Service {
            manifest,
            sessions: BTreeMap::new(),
            next: 1,
            values,
        }
    }

    pub fn values(&self) -> &Arc<Mutex<ValueStreams>> {
        &self.values
    }

    pub fn session(&self, id: SessionId) -> Option<&Session> {
        self.sessions.get(&id)
    }

    /// Session whose id range contains `node`.
    pub fn owner_of(node: NodeId) -> SessionId {
        node >> SESSION_SHIFT
    }

    /// Decode and handle one raw message.
    pub fn handle_message(&mut self, raw: &[u8]) -> Reply {
        match serde_json::from_slice::<Envelope>(raw) {
            Ok(env) => self.handle(env),
            Err(e) => {
                let seq = serde_json::from_slice::<Value>(raw)
                    .ok()
                    .and_then(|v| v.get("seq").and_then(Value::as_u64));
                Reply::error(seq, ErrorCode::Malformed, e.to_string())
            }
        }
    }

    pub fn handle(&mut self, env: Envelope) -> Reply {
        let seq = env.seq;
        let response = match self.dispatch(env.request) {
            Ok(r) => r,
            Err((code, message)) => Response::Error { code, message },
        };
        Reply { seq, response }
    }

    fn state_response(&self, id: SessionId, report: Option<&StepReport>) -> Response {
        let state = self.sessions[&id].state();
        Response::State {
            session: id,
            outcome: report.map(|r| r.outcome),
            op_count: report.map_or(0, StepReport::op_count),
            hash: state.hash(),
            state,
        }
    }

    fn live(&mut self, id: SessionId) -> Result<&mut Session, (ErrorCode, String)> {
        self.sessions
            .get_mut(&id)
            .ok_or_else(|| (ErrorCode::UnknownSession, format!("no session {id}")))
    }

    fn dispatch(&mut self, request: Request) -> Result<Response, (ErrorCode, String)> {
        let fail = |e: SessionError| (code_of(&e), e.to_string());
        match request {
            Request::Open {
                path,
                language_id,
                text,
                tools,
            } => {
                let id = self.next;
                let defs = match tools {
                    Some(ids) => self.manifest.select(&ids),
                    None => self.manifest.defaults(),
                };
                let session = Session::open(path, &language_id, &text, defs, id << SESSION_SHIFT, self.values.clone())
                    .map_err(fail)?;
                self.next += 1;
                self.sessions.insert(id, session);
                self.sync_watched();
                Ok(self.state_response(id, None))
            }
            Request::Change {
                session,
                version,
                changes,
                intents,
                force_apply,
            } => {
                let report = self
                    .live(session)?
                    .change(Some(version), &changes, intents, force_apply)
                    .map_err(fail)?;
                self.sync_watched();
                Ok(self.state_response(session, Some(&report)))
            }
            Request::Action {
                session,
                version,
                instance_id,
                action_id,
                payload,
            } => {
                let report = self
                    .live(session)?
                    .action(Some(version), instance_id, &action_id, &payload)
                    .map_err(fail)?;
                self.sync_watched();
                Ok(self.state_response(session, Some(&report)))
            }
            Request::Revert { session } => {
                let report = self.live(session)?.revert().map_err(fail)?;
                Ok(self.state_response(session, Some(&report)))
            }
            Request::SubscribeState { session } => {
                self.live(session)?;
                Ok(self.state_response(session, None))
            }
            Request::Shadow { session, endpoint } => {
                let endpoint = endpoint.unwrap_or_else(default_endpoint);
                let text = self.live(session)?.shadow(&endpoint).map_err(fail)?;
                Ok(Response::Shadow { session, text })
            }
            Request::Close { session } => {
                self.sessions
                    .remove(&session)
                    .ok_or_else(|| (ErrorCode::UnknownSession, format!("no session {session}")))?;
                self.sync_watched();
                Ok(Response::Closed { session })
            }
        }
    }

    /// Restrict the collector to nodes some live tool watches.
    fn sync_watched(&self) {
        let watched: BTreeSet<NodeId> = self.sessions.values().flat_map(|s| s.watched_nodes()).collect();
        let mut v = self.values.lock().unwrap_or_else(|e| e.into_inner());
        v.retain(&watched);
        v.set_known(Some(watched));
    }
}
