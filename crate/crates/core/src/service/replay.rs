//! Scripted sessions. Steps run through [`Service::handle`], the same path
//! live clients take.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use super::{Envelope, Reply, Request, Response, Service, SessionId};
use crate::syntax::TextChange;
use crate::tools::{bundled, InstanceId};
use crate::transaction::Intents;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ReplayScript {
    pub language: String,
    pub text: String,
    #[serde(default)]
    pub path: String,
    /// Tool ids; the manifest defaults when absent.
    #[serde(default)]
    pub tools: Option<Vec<String>>,
    #[serde(default)]
    pub steps: Vec<Step>,
}

/// Picks a live tool instance: by id, or the `nth` instance of `tool` in
/// state order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Selector {
    Id(InstanceId),
    Nth {
        tool: String,
        #[serde(default)]
        nth: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase", rename_all_fields = "camelCase", deny_unknown_fields)]
pub enum Step {
    Change {
        changes: Vec<TextChange>,
        #[serde(default)]
        intents: Intents,
        #[serde(default)]
        force_apply: bool,
    },
    Action {
        instance: Selector,
        action_id: String,
        #[serde(default)]
        payload: Value,
    },
    Revert,
    /// Compare the current state; a mismatch is recorded, not fatal.
    Assert {
        #[serde(default)]
        frozen: Option<bool>,
        #[serde(default)]
        tool_count: Option<usize>,
        #[serde(default)]
        text: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("replay script is malformed: {0}")]
    Script(#[from] serde_json::Error),
    #[error("cannot open the document: {0}")]
    Open(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLine {
    pub index: usize,
    pub outcome: String,
    pub op_count: usize,
    pub hash: String,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t{}", self.index, self.outcome, self.op_count, self.hash)
    }
}

/// Trace lines plus the reply of every step (index 0 is the open).
#[derive(Debug, Clone)]
pub struct Trace {
    pub lines: Vec<TraceLine>,
    pub replies: Vec<Reply>,
}

impl Trace {
    /// Outcome tags of the steps, without the initial open line.
    pub fn outcomes(&self) -> Vec<&str> {
        self.lines[1..].iter().map(|l| l.outcome.as_str()).collect()
    }

    pub fn failed_asserts(&self) -> Vec<usize> {
        self.lines
            .iter()
            .filter(|l| l.outcome.starts_with("AssertFailed"))
            .map(|l| l.index)
            .collect()
    }

    pub fn final_hash(&self) -> &str {
        &self.lines.last().expect("trace has the open line").hash
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

impl ReplayScript {
    pub fn from_json(src: &str) -> Result<ReplayScript, ReplayError> {
        Ok(serde_json::from_str(src)?)
    }
}

/// Run `script` against a fresh service with the bundled tools.
pub fn replay(script: &ReplayScript) -> Result<Trace, ReplayError> {
    replay_with(&mut Service::new(bundled(), Default::default()), script)
}

/// Run `script` in a new session of `service`.
pub fn replay_with(service: &mut Service, script: &ReplayScript) -> Result<Trace, ReplayError> {
    let open = service.handle(Envelope {
        seq: Some(0),
        request: Request::Open {
            path: script.path.clone(),
            language_id: script.language.clone(),
            text: script.text.clone(),
            tools: script.tools.clone(),
        },
    });
    let Response::State { session, ref hash, .. } = open.response else {
        let Response::Error { message, .. } = open.response else {
            unreachable!("open answers with state or error")
        };
        return Err(ReplayError::Open(message));
    };
    let mut lines = vec![TraceLine {
        index: 0,
        outcome: "Open".into(),
        op_count: 0,
        hash: hash.clone(),
    }];
    let mut replies = vec![open.clone()];
    let mut last = open;

    for (i, step) in script.steps.iter().enumerate() {
        let index = i + 1;
        let current = last.state().cloned().expect("last reply carries state");
        let (line, reply) = match step {
            Step::Assert { frozen, tool_count, text } => {
                let mut failed = Vec::new();
                if frozen.is_some_and(|f| f != current.frozen) {
                    failed.push("frozen");
                }
                if tool_count.is_some_and(|n| n != current.tools.len()) {
                    failed.push("toolCount");
                }
                if text.as_ref().is_some_and(|t| *t != current.text) {
                    failed.push("text");
                }
                let outcome = if failed.is_empty() {
                    "AssertOk".to_string()
                } else {
                    format!("AssertFailed:{}", failed.join(","))
                };
                let line = TraceLine {
                    index,
                    outcome,
                    op_count: 0,
                    hash: current.hash(),
                };
                (line, last.clone())
            }
            _ => {
                let request = match to_request(step, session, &current) {
                    Ok(r) => r,
                    Err(message) => {
                        let reply = Reply::error(Some(index as u64), super::ErrorCode::Action, message);
                        lines.push(error_line(index, &reply, &current));
                        replies.push(reply);
                        continue;
                    }
                };
                let reply = service.handle(Envelope {
                    seq: Some(index as u64),
                    request,
                });
                let line = match &reply.response {
                    Response::State {
                        outcome, op_count, hash, ..
                    } => TraceLine {
                        index,
                        outcome: outcome.map_or("State".into(), |o| format!("{o:?}")),
                        op_count: *op_count,
                        hash: hash.clone(),
                    },
                    _ => error_line(index, &reply, &current),
                };
                if reply.state().is_some() {
                    last = reply.clone();
                }
                (line, reply)
            }
        };
        lines.push(line);
        replies.push(reply);
    }
    Ok(Trace { lines, replies })
}

fn error_line(index: usize, reply: &Reply, current: &crate::session::State) -> TraceLine {
    let code = match &reply.response {
        Response::Error { code, .. } => serde_json::to_value(code)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        _ => String::new(),
    };
    TraceLine {
        index,
        outcome: format!("Error:{code}"),
        op_count: 0,
        hash: current.hash(),
    }
}

fn to_request(step: &Step, session: SessionId, state: &crate::session::State) -> Result<Request, String> {
    Ok(match step {
        Step::Change {
            changes,
            intents,
            force_apply,
        } => Request::Change {
            session,
            version: state.version,
            changes: changes.clone(),
            intents: intents.clone(),
            force_apply: *force_apply,
        },
        Step::Action {
            instance,
            action_id,
            payload,
        } => {
            let instance_id = match instance {
                Selector::Id(id) => *id,
                Selector::Nth { tool, nth } => state
                    .tools
                    .iter()
                    .filter(|t| t.tool == *tool)
                    .nth(*nth)
                    .map(|t| t.instance_id)
                    .ok_or_else(|| format!("no {tool} instance #{nth}"))?,
            };
            Request::Action {
                session,
                version: state.version,
                instance_id,
                action_id: action_id.clone(),
                payload: payload.clone(),
            }
        }
        Step::Revert => Request::Revert { session },
        Step::Assert { .. } => unreachable!("asserts are evaluated locally"),
    })
}
