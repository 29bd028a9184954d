use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::mpsc::{channel, Receiver, Sender};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::syntax::NodeId;

/// Events kept per node.
pub const HISTORY_CAP: usize = 64;
const DEPTH_CAP: usize = 4;
const STRING_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ValueEvent {
    pub node_id: NodeId,
    pub value: Value,
    /// Arrival index over all posts.
    pub sequence: u64,
    /// Milliseconds since the epoch.
    pub timestamp: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CollectError {
    #[error("bad request: {0}")]
    BadRequest(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ack {
    Stored(u64),
    /// Nobody watches this id; counted and dropped.
    Dropped,
}

#[derive(Debug, Default)]
struct Stream {
    history: VecDeque<ValueEvent>,
    subscribers: Vec<(u64, Sender<ValueEvent>)>,
}

/// Live subscription; events arrive on `events` in arrival order.
#[derive(Debug)]
pub struct Subscription {
    pub id: u64,
    pub node_id: NodeId,
    pub events: Receiver<ValueEvent>,
}

/// Per-node value histories and their subscribers.
#[derive(Debug, Default)]
pub struct ValueStreams {
    streams: HashMap<NodeId, Stream>,
    /// Ids that may post; `None` accepts every id.
    known: Option<BTreeSet<NodeId>>,
    dropped: u64,
    sequence: u64,
    next_subscription: u64,
    /// Told the node id of every stored event.
    listener: Option<Sender<NodeId>>,
}

/// Truncate long strings and replace containers nested deeper than the cap.
pub fn cap_value(v: Value) -> Value {
    fn go(v: Value, depth: usize) -> Value {
        match v {
            Value::String(s) if s.len() > STRING_CAP => {
                let mut end = STRING_CAP;
                while !s.is_char_boundary(end) {
                    end -= 1;
                }
                Value::String(format!("{}…", &s[..end]))
            }
            Value::Array(_) | Value::Object(_) if depth >= DEPTH_CAP => Value::String(match v {
                Value::Array(_) => "[…]".into(),
                _ => "{…}".into(),
            }),
            Value::Array(items) => Value::Array(items.into_iter().map(|x| go(x, depth + 1)).collect()),
            Value::Object(map) => Value::Object(map.into_iter().map(|(k, x)| (k, go(x, depth + 1))).collect()),
            other => other,
        }
    }
    go(v, 0)
}

impl ValueStreams {
    pub fn new() -> Self {
        Self::default()
    }

    /// Restrict accepted ids; posts for other ids are dropped.
    pub fn set_known(&mut self, ids: Option<BTreeSet<NodeId>>) {
        self.known = ids;
    }

    pub fn set_listener(&mut self, listener: Sender<NodeId>) {
        self.listener = Some(listener);
    }

    pub fn dropped(&self) -> u64 {
        self.dropped
    }

    /// Parse and store a posted `{"id": integer, "e": value}` body.
    pub fn collect_body(&mut self, body: &[u8]) -> Result<Ack, CollectError> {
        let v: Value = serde_json::from_slice(body).map_err(|e| CollectError::BadRequest(e.to_string()))?;
        let id = v
            .get("id")
            .and_then(Value::as_u64)
            .ok_or_else(|| CollectError::BadRequest("missing integer `id`".into()))?;
        let value = v.get("e").cloned().unwrap_or(Value::Null);
        Ok(self.collect(id, value))
    }

    pub fn collect(&mut self, node_id: NodeId, value: Value) -> Ack {
        if self.known.as_ref().is_some_and(|k| !k.contains(&node_id)) {
            self.dropped += 1;
            return Ack::Dropped;
        }
        let sequence = self.sequence;
        self.sequence += 1;
        let event = ValueEvent {
            node_id,
            value: cap_value(value),
            sequence,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_millis() as u64)
                .unwrap_or(0),
        };
        let stream = self.streams.entry(node_id).or_default();
        stream.subscribers.retain(|(_, tx)| tx.send(event.clone()).is_ok());
        if stream.history.len() == HISTORY_CAP {
            stream.history.pop_front();
        }
        stream.history.push_back(event);
        if let Some(l) = &self.listener {
            let _ = l.send(node_id);
        }
        Ack::Stored(sequence)
    }

    pub fn history(&self, node_id: NodeId) -> Vec<ValueEvent> {
        self.streams
            .get(&node_id)
            .map(|s| s.history.iter().cloned().collect())
            .unwrap_or_default()
    }

    pub fn last(&self, node_id: NodeId) -> Option<Value> {
        self.streams
            .get(&node_id)
            .and_then(|s| s.history.back())
            .map(|e| e.value.clone())
    }

    /// Replays the history, then delivers live events.
    pub fn subscribe(&mut self, node_id: NodeId) -> Subscription {
        let (tx, rx) = channel();
        let stream = self.streams.entry(node_id).or_default();
        for e in &stream.history {
            let _ = tx.send(e.clone());
        }
        let id = self.next_subscription;
        self.next_subscription += 1;
        stream.subscribers.push((id, tx));
        Subscription {
            id,
            node_id,
            events: rx,
        }
    }

    pub fn unsubscribe(&mut self, subscription: &Subscription) {
        if let Some(s) = self.streams.get_mut(&subscription.node_id) {
            s.subscribers.retain(|(id, _)| *id != subscription.id);
        }
    }

    /// Forget streams of nodes no longer watched.
    pub fn retain(&mut self, keep: &BTreeSet<NodeId>) {
        self.streams.retain(|id, _| keep.contains(id));
    }
}
