//! One open document: its transactions, live tools, fragments and the
//! state snapshot frontends render.

use std::collections::BTreeSet;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::diff::EditScript;
use crate::fragment::{map_range, FragmentRegistry, FragmentView};
use crate::instrument::{instrument_document, InstrumentError, ValueStreams};
use crate::syntax::{language, parse_with, NodeId, Span, SyntaxError, SyntaxTree, TextChange};
use crate::tools::{DisplayType, InstanceId, Refresh, ToolDefinition, ToolError, ToolHost, ViewSpec};
use crate::transaction::{Intents, Outcome, Transactions, TxError};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("change computed against version {found}, session is at {expected}")]
    StaleVersion { expected: u64, found: u64 },
    #[error("the document is frozen; apply or revert first")]
    Frozen,
    #[error(transparent)]
    Tool(#[from] ToolError),
    #[error(transparent)]
    Transaction(#[from] TxError),
    #[error(transparent)]
    Instrument(#[from] InstrumentError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub instance_id: InstanceId,
    pub tool: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ToolState {
    pub instance_id: InstanceId,
    pub tool: String,
    pub anchor: NodeId,
    /// Anchor range in the current text.
    pub range: Span,
    pub display_type: DisplayType,
    pub depth: u32,
    pub parent: Option<InstanceId>,
    pub view: ViewSpec,
}

/// Everything a frontend needs to draw the document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct State {
    pub version: u64,
    pub frozen: bool,
    pub pending_count: usize,
    pub violations: Vec<Violation>,
    /// The frozen text does not parse into anything usable.
    pub degenerate: bool,
    pub tools: Vec<ToolState>,
    pub fragments: Vec<FragmentView>,
    pub text: String,
    /// Caret offset the host should restore after an input-driven action.
    pub continue_input: Option<usize>,
}

impl State {
    /// Hex SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let json = serde_json::to_vec(self).expect("state serializes");
        hex::encode(Sha256::digest(json))
    }
}

/// Result of one change, action or revert.
#[derive(Debug, Clone)]
pub struct StepReport {
    pub outcome: Outcome,
    /// Empty for reverts.
    pub script: Option<EditScript>,
    pub refresh: Option<Refresh>,
}

impl StepReport {
    pub fn op_count(&self) -> usize {
        self.script.as_ref().map_or(0, EditScript::len)
    }
}

pub struct Session {
    pub path: String,
    tx: Transactions,
    host: ToolHost,
    frags: FragmentRegistry,
    version: u64,
    violations: Vec<Violation>,
    degenerate: bool,
    continue_input: Option<usize>,
    values: Arc<Mutex<ValueStreams>>,
}

impl std::fmt::Debug for Session {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Session")
            .field("path", &self.path)
            .field("version", &self.version)
            .field("frozen", &self.tx.is_frozen())
            .finish()
    }
}

impl Session {
    /// Parse `text` with node ids starting at `first_id` and instantiate `tools`.
    pub fn open(
        path: impl Into<String>,
        language_id: &str,
        text: &str,
        tools: Vec<ToolDefinition>,
        first_id: NodeId,
        values: Arc<Mutex<ValueStreams>>,
    ) -> Result<Session, SessionError> {
        let tree = parse_with(language(language_id)?, text, first_id, 0)?;
        let mut s = Session {
            path: path.into(),
            tx: Transactions::new(tree),
            host: ToolHost::new(tools),
            frags: FragmentRegistry::new(),
            version: 0,
            violations: Vec::new(),
            degenerate: false,
            continue_input: None,
            values,
        };
        s.refresh();
        Ok(s)
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn text(&self) -> &str {
        self.tx.text()
    }

    pub fn tree(&self) -> &SyntaxTree {
        self.tx.tree()
    }

    pub fn is_frozen(&self) -> bool {
        self.tx.is_frozen()
    }

    pub fn transactions(&self) -> &Transactions {
        &self.tx
    }

    pub fn host(&self) -> &ToolHost {
        &self.host
    }

    pub fn fragments(&self) -> &FragmentRegistry {
        &self.frags
    }

    fn refresh(&mut self) -> Refresh {
        let tree = self.tx.tree().clone();
        self.host.refresh(&tree, &mut self.tx, &mut self.frags)
    }

    fn check_version(&self, version: Option<u64>) -> Result<(), SessionError> {
        match version {
            Some(v) if v != self.version => Err(SessionError::StaleVersion {
                expected: self.version,
                found: v,
            }),
            _ => Ok(()),
        }
    }

    fn apply(&mut self, changes: &[TextChange], intents: Intents, force: bool) -> Result<StepReport, SessionError> {
        let report = self.tx.apply_changes(changes, intents, force)?;
        self.version += 1;
        self.continue_input = None;
        let refresh = if report.outcome == Outcome::Frozen {
            self.violations = report
                .violations
                .owners
                .iter()
                .map(|&o| Violation {
                    instance_id: o,
                    tool: self.host.instance(o).map(|i| i.definition.clone()).unwrap_or_default(),
                })
                .collect();
            self.degenerate = report.violations.degenerate;
            None
        } else {
            self.violations.clear();
            self.degenerate = false;
            Some(self.refresh())
        };
        Ok(StepReport {
            outcome: report.outcome,
            script: Some(report.script),
            refresh,
        })
    }

    /// Apply host text changes. `version`, when given, must be the current one.
    pub fn change(
        &mut self,
        version: Option<u64>,
        changes: &[TextChange],
        intents: Intents,
        force: bool,
    ) -> Result<StepReport, SessionError> {
        self.check_version(version)?;
        for c in changes {
            c.check(self.tx.text())?;
        }
        self.apply(changes, intents, force)
    }

    /// Run a tool action. Refused while frozen: the tool's view of the
    /// tree is pinned and its edits would land on stale offsets.
    pub fn action(
        &mut self,
        version: Option<u64>,
        instance: InstanceId,
        action: &str,
        payload: &Value,
    ) -> Result<StepReport, SessionError> {
        self.check_version(version)?;
        if self.is_frozen() {
            return Err(SessionError::Frozen);
        }
        let effect = self.host.dispatch(instance, action, payload, self.tx.tree())?;
        let caret = match effect.changes.as_slice() {
            [c] if effect.intents.require_continue_input => Some(c.from + c.insert.len()),
            _ => None,
        };
        let report = self.apply(&effect.changes, effect.intents, false)?;
        if report.outcome == Outcome::Accepted {
            self.continue_input = caret;
        }
        Ok(report)
    }

    pub fn revert(&mut self) -> Result<StepReport, SessionError> {
        let outcome = self.tx.revert_pending()?;
        self.version += 1;
        self.violations.clear();
        self.degenerate = false;
        self.continue_input = None;
        Ok(StepReport {
            outcome,
            script: None,
            refresh: None,
        })
    }

    /// Nodes whose runtime values live tools show.
    pub fn watched_nodes(&self) -> BTreeSet<NodeId> {
        self.host.stream_nodes()
    }

    /// The current tree with every watched node rewritten to report its value.
    pub fn shadow(&self, endpoint: &str) -> Result<String, SessionError> {
        Ok(instrument_document(self.tx.tree(), &self.watched_nodes(), endpoint)?)
    }

    pub fn state(&self) -> State {
        let tree = self.tx.tree();
        let pending = self.tx.pending();
        let values = self.values.lock().unwrap_or_else(|e| e.into_inner());
        let lookup = |n: NodeId| values.last(n);
        let tools = self
            .host
            .instances()
            .filter_map(|i| {
                let def = self.host.definition(&i.definition)?;
                let anchor = tree.node(i.anchor)?;
                Some(ToolState {
                    instance_id: i.id,
                    tool: i.definition.clone(),
                    anchor: i.anchor,
                    range: map_range(anchor.span(), pending),
                    display_type: def.display,
                    depth: i.depth,
                    parent: i.parent,
                    view: self.host.render(i.id, tree, &lookup)?,
                })
            })
            .collect();
        State {
            version: self.version,
            frozen: self.tx.is_frozen(),
            pending_count: pending.len(),
            violations: self.violations.clone(),
            degenerate: self.degenerate,
            tools,
            fragments: self.frags.views(self.tx.text(), tree, pending),
            text: self.tx.text().to_string(),
            continue_input: self.continue_input,
        }
    }
}
