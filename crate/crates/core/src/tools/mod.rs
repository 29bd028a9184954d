//! Tools: queries over the tree, the constraints they hold the text to,
//! declarative views and the actions those views reference.

mod escape;
pub mod manifest;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::edit::{self, EditError, EditOperation, StructuredEditRequest};
use crate::fragment::{FragmentId, FragmentRegistry, WhitespacePolicy};
use crate::syntax::{NodeId, SyntaxNode, SyntaxTree, TextChange};
use crate::transaction::{ConstraintInput, Intents, Predicate, Transactions};

pub use escape::{escape, unescape, Quote, Unescaped};
pub use manifest::{bundled, Manifest, ManifestError};

pub type InstanceId = u64;

pub const DEFAULT_DEPTH_LIMIT: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DisplayType {
    Replace,
    InsertBefore,
    InsertAfter,
    Markup,
}

/// What a query pulled out of a matched node.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub nodes: BTreeMap<String, NodeId>,
    #[serde(default)]
    pub scalars: BTreeMap<String, String>,
}

pub type Query = Arc<dyn Fn(SyntaxNode<'_>) -> Option<Extraction> + Send + Sync>;

/// Builds the predicate guarding one instance.
pub type ConstraintFactory = Arc<dyn Fn(&ToolInstance) -> Predicate + Send + Sync>;

#[derive(Clone)]
pub enum ConstraintKind {
    /// The query still matches at the anchor.
    QueryMatches,
    /// The anchor's text is unchanged.
    TextUnchanged,
    /// The anchor is still a direct child of the root.
    TopLevel,
    /// The anchor still exists.
    Present,
    Custom { name: String, build: ConstraintFactory },
}

impl ConstraintKind {
    pub fn name(&self) -> &str {
        match self {
            ConstraintKind::QueryMatches => "query",
            ConstraintKind::TextUnchanged => "text",
            ConstraintKind::TopLevel => "top-level",
            ConstraintKind::Present => "present",
            ConstraintKind::Custom { name, .. } => name,
        }
    }

    fn predicate(&self, def: &ToolDefinition, instance: &ToolInstance) -> Predicate {
        let anchor = instance.anchor;
        match self {
            ConstraintKind::QueryMatches => {
                let query = def.query.clone();
                Arc::new(move |i: &ConstraintInput<'_>| {
                    i.intent_delete.contains(&anchor) || i.new_tree.node(anchor).is_some_and(|n| query(n).is_some())
                })
            }
            ConstraintKind::TextUnchanged => {
                let original = instance.original_text.clone();
                Arc::new(move |i: &ConstraintInput<'_>| {
                    i.intent_delete.contains(&anchor) || i.new_tree.node(anchor).is_some_and(|n| n.text() == original)
                })
            }
            ConstraintKind::TopLevel => Arc::new(move |i: &ConstraintInput<'_>| {
                i.intent_delete.contains(&anchor)
                    || i.new_tree
                        .node(anchor)
                        .and_then(|n| n.parent())
                        .is_some_and(|p| p.is_root())
            }),
            ConstraintKind::Present => Arc::new(move |i: &ConstraintInput<'_>| {
                i.intent_delete.contains(&anchor) || i.new_tree.contains(anchor)
            }),
            ConstraintKind::Custom { build, .. } => build(instance),
        }
    }
}

/// Declarative view layout; rendered into a [`ViewSpec`] per instance.
///
/// Text fields interpolate `{text:b}` (source of binding `b`), `{plain:b}`
/// (unescaped string body), `{last:b}` (latest runtime value) and `{s}` for
/// scalar `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum ViewItem {
    Container {
        #[serde(default)]
        style: BTreeMap<String, String>,
        #[serde(default)]
        children: Vec<ViewItem>,
    },
    Label {
        text: String,
    },
    Fragment {
        binding: String,
    },
    Input {
        input: String,
        #[serde(default)]
        value: String,
        #[serde(default)]
        placeholder: String,
        #[serde(default)]
        attrs: BTreeMap<String, String>,
        action: String,
    },
    Editor {
        language: String,
        binding: String,
        action: String,
    },
    Action {
        action: String,
        label: String,
    },
    Markup {
        #[serde(default)]
        style: BTreeMap<String, String>,
        #[serde(default)]
        action: Option<String>,
    },
}

/// Renderer-agnostic widget tree sent to frontends. Holds references only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum ViewSpec {
    Container {
        style: BTreeMap<String, String>,
        children: Vec<ViewSpec>,
    },
    Label {
        text: String,
    },
    Fragment {
        fragment: FragmentId,
        nodes: Vec<NodeId>,
    },
    Input {
        input: String,
        value: String,
        placeholder: String,
        attrs: BTreeMap<String, String>,
        action: String,
    },
    Editor {
        language: String,
        text: String,
        action: String,
    },
    Action {
        action: String,
        label: String,
    },
    Markup {
        style: BTreeMap<String, String>,
        action: Option<String>,
    },
}

impl ViewSpec {
    /// Every action id referenced anywhere in the tree.
    pub fn actions(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |v| match v {
            ViewSpec::Input { action, .. } | ViewSpec::Editor { action, .. } | ViewSpec::Action { action, .. } => {
                out.push(action.as_str())
            }
            ViewSpec::Markup { action: Some(a), .. } => out.push(a.as_str()),
            _ => {}
        });
        out
    }

    pub fn fragments(&self) -> Vec<FragmentId> {
        let mut out = Vec::new();
        self.walk(&mut |v| {
            if let ViewSpec::Fragment { fragment, .. } = v {
                out.push(*fragment);
            }
        });
        out
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a ViewSpec)) {
        f(self);
        if let ViewSpec::Container { children, .. } = self {
            for c in children {
                c.walk(f);
            }
        }
    }
}

/// What an action does to the document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "effect", rename_all = "kebab-case")]
pub enum ActionSpec {
    /// Replace the anchor with the source of `binding`, deleting the anchor
    /// on purpose. Payload ignored.
    Unwrap { binding: String },
    /// Replace `binding` with `payload.text`.
    Replace {
        binding: String,
        #[serde(default)]
        continue_input: bool,
    },
    /// Replace the numeric literal `binding` with `payload.value`.
    SetNumber { binding: String },
    /// Replace three literals with `payload.r`, `.g` and `.b`.
    SetColor { r: String, g: String, b: String },
    /// Apply `payload.{from,to,insert}`, given in unescaped coordinates, to
    /// the string literal `binding`.
    EditString { binding: String },
}

#[derive(Clone)]
pub struct ToolDefinition {
    pub id: String,
    pub display: DisplayType,
    pub query: Query,
    pub constraints: Vec<ConstraintKind>,
    pub view: Vec<ViewItem>,
    pub actions: BTreeMap<String, ActionSpec>,
    /// Tools active inside this tool's fragments; `None` means all.
    pub fragment_scope: Option<Vec<String>>,
    /// Bindings whose runtime values the tool shows.
    pub streams: Vec<String>,
}

impl std::fmt::Debug for ToolDefinition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ToolDefinition")
            .field("id", &self.id)
            .field("display", &self.display)
            .finish()
    }
}

impl ToolDefinition {
    pub fn new(id: impl Into<String>, display: DisplayType, query: Query) -> Self {
        ToolDefinition {
            id: id.into(),
            display,
            query,
            constraints: vec![ConstraintKind::QueryMatches],
            view: Vec::new(),
            actions: BTreeMap::new(),
            fragment_scope: None,
            streams: Vec::new(),
        }
    }

    /// Bindings shown in fragments, in view order.
    pub fn fragment_bindings(&self) -> Vec<&str> {
        fn go<'a>(items: &'a [ViewItem], out: &mut Vec<&'a str>) {
            for item in items {
                match item {
                    ViewItem::Fragment { binding } => out.push(binding),
                    ViewItem::Container { children, .. } => go(children, out),
                    _ => {}
                }
            }
        }
        let mut out = Vec::new();
        go(&self.view, &mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ToolInstance {
    pub id: InstanceId,
    pub definition: String,
    pub anchor: NodeId,
    pub extraction: Extraction,
    pub depth: u32,
    pub parent: Option<InstanceId>,
    /// Anchor source when the instance was created.
    pub original_text: String,
    /// Fragment per fragment binding.
    pub fragments: BTreeMap<String, FragmentId>,
}

/// One query hit found by [`instantiate_tools`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    /// Index into the definition list.
    pub definition: usize,
    pub anchor: NodeId,
    pub extraction: Extraction,
    pub depth: u32,
    /// Index of the match whose fragment this one was found in.
    pub parent: Option<usize>,
}

fn run_query(def: &ToolDefinition, node: SyntaxNode<'_>, disabled: &mut BTreeSet<String>) -> Option<Extraction> {
    if disabled.contains(&def.id) {
        return None;
    }
    match catch_unwind(AssertUnwindSafe(|| (def.query)(node))) {
        Ok(m) => m,
        Err(_) => {
            log::error!("query of tool {} panicked; disabling it", def.id);
            disabled.insert(def.id.clone());
            None
        }
    }
}

/// Test every node visible in `scope` (the whole tree when empty) against
/// every definition. Nodes a `Replace` tool covers are only visible through
/// its fragments, which are searched one level deeper with the tool's
/// fragment scope. Nothing deeper than `limit` is created.
pub fn instantiate_tools(
    tree: &SyntaxTree,
    defs: &[ToolDefinition],
    scope: &[NodeId],
    limit: u32,
    disabled: &mut BTreeSet<String>,
) -> Vec<Match> {
    let roots: Vec<NodeId> = if scope.is_empty() {
        vec![tree.root().id()]
    } else {
        scope.to_vec()
    };
    let all: Vec<usize> = (0..defs.len()).collect();
    let mut out = Vec::new();
    collect(tree, defs, &roots, &all, 0, None, limit, disabled, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn collect(
    tree: &SyntaxTree,
    defs: &[ToolDefinition],
    roots: &[NodeId],
    allowed: &[usize],
    depth: u32,
    parent: Option<usize>,
    limit: u32,
    disabled: &mut BTreeSet<String>,
    out: &mut Vec<Match>,
) {
    if depth > limit {
        return;
    }
    let mut stack: Vec<SyntaxNode<'_>> = roots.iter().rev().filter_map(|&id| tree.node(id)).collect();
    while let Some(node) = stack.pop() {
        let mut hidden = false;
        for &d in allowed {
            let def = &defs[d];
            let Some(extraction) = run_query(def, node, disabled) else {
                continue;
            };
            let index = out.len();
            let nested: Vec<Vec<NodeId>> = def
                .fragment_bindings()
                .iter()
                .filter_map(|b| extraction.nodes.get(*b).map(|&n| vec![n]))
                .collect();
            out.push(Match {
                definition: d,
                anchor: node.id(),
                extraction,
                depth,
                parent,
            });
            let scope: Vec<usize> = match &def.fragment_scope {
                None => (0..defs.len()).collect(),
                Some(ids) => (0..defs.len()).filter(|&i| ids.contains(&defs[i].id)).collect(),
            };
            for frag in nested {
                collect(tree, defs, &frag, &scope, depth + 1, Some(index), limit, disabled, out);
            }
            hidden |= def.display == DisplayType::Replace;
        }
        if !hidden {
            stack.extend(node.children().rev().filter(|c| !c.is_trivia()));
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToolError {
    #[error("tool instance {0} is no longer live")]
    StaleInstance(InstanceId),
    #[error("tool {tool} declares no action `{action}`")]
    UnknownAction { tool: String, action: String },
    #[error("bad action payload: {0}")]
    BadPayload(String),
    #[error(transparent)]
    Edit(#[from] EditError),
}

/// Changes an action wants applied, with the intents to apply them under.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionEffect {
    /// Structured requests the changes were planned from, if any.
    pub requests: Vec<StructuredEditRequest>,
    /// Sequential: each relative to the text left by the previous one.
    pub changes: Vec<TextChange>,
    pub intents: Intents,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Refresh {
    pub created: Vec<InstanceId>,
    pub disposed: Vec<InstanceId>,
    pub kept: Vec<InstanceId>,
}

/// Runtime value lookup for `{last:…}` interpolation.
pub type Values<'a> = &'a dyn Fn(NodeId) -> Option<Value>;

/// Live tool instances of one session.
pub struct ToolHost {
    defs: Vec<ToolDefinition>,
    disabled: BTreeSet<String>,
    instances: BTreeMap<InstanceId, ToolInstance>,
    next: InstanceId,
    limit: u32,
}

type Key = (String, NodeId, Option<InstanceId>, u32);

impl ToolHost {
    pub fn new(defs: Vec<ToolDefinition>) -> Self {
        ToolHost {
            defs,
            disabled: BTreeSet::new(),
            instances: BTreeMap::new(),
            next: 1,
            limit: DEFAULT_DEPTH_LIMIT,
        }
    }

    pub fn with_limit(mut self, limit: u32) -> Self {
        self.limit = limit;
        self
    }

    pub fn definitions(&self) -> &[ToolDefinition] {
        &self.defs
    }

    pub fn definition(&self, id: &str) -> Option<&ToolDefinition> {
        self.defs.iter().find(|d| d.id == id)
    }

    /// Definitions switched off after a query panicked.
    pub fn disabled(&self) -> &BTreeSet<String> {
        &self.disabled
    }

    pub fn instances(&self) -> impl Iterator<Item = &ToolInstance> {
        self.instances.values()
    }

    pub fn instance(&self, id: InstanceId) -> Option<&ToolInstance> {
        self.instances.get(&id)
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    /// Re-run every query on `tree` and bring instances, their constraints
    /// and their fragments in line with the result. Instances found again
    /// at the same anchor keep their id.
    pub fn refresh(&mut self, tree: &SyntaxTree, tx: &mut Transactions, frags: &mut FragmentRegistry) -> Refresh {
        let matches = instantiate_tools(tree, &self.defs, &[], self.limit, &mut self.disabled);
        let mut old: HashMap<Key, ToolInstance> = std::mem::take(&mut self.instances)
            .into_values()
            .map(|i| ((i.definition.clone(), i.anchor, i.parent, i.depth), i))
            .collect();
        let mut report = Refresh::default();
        let mut ids: Vec<InstanceId> = Vec::with_capacity(matches.len());
        let mut live_fragments: BTreeSet<FragmentId> = BTreeSet::new();

        for m in matches {
            let def = &self.defs[m.definition];
            let parent = m.parent.map(|p| ids[p]);
            let key = (def.id.clone(), m.anchor, parent, m.depth);
            let mut instance = match old.remove(&key) {
                Some(mut kept) => {
                    kept.extraction = m.extraction;
                    report.kept.push(kept.id);
                    kept
                }
                None => {
                    let id = self.next;
                    self.next += 1;
                    let instance = ToolInstance {
                        id,
                        definition: def.id.clone(),
                        anchor: m.anchor,
                        extraction: m.extraction,
                        depth: m.depth,
                        parent,
                        original_text: tree.node(m.anchor).map(|n| n.text().to_string()).unwrap_or_default(),
                        fragments: BTreeMap::new(),
                    };
                    for c in &def.constraints {
                        tx.register(id, format!("{}:{}", def.id, c.name()), c.predicate(def, &instance));
                    }
                    report.created.push(id);
                    instance
                }
            };
            instance.fragments.clear();
            for b in def.fragment_bindings() {
                if let Some(&n) = instance.extraction.nodes.get(b) {
                    let f = frags.add(vec![n], Some(instance.id), m.depth + 1, WhitespacePolicy::default());
                    instance.fragments.insert(b.to_string(), f);
                    live_fragments.insert(f);
                }
            }
            ids.push(instance.id);
            self.instances.insert(instance.id, instance);
        }

        for gone in old.into_values() {
            tx.deregister(gone.id);
            report.disposed.push(gone.id);
        }
        report.disposed.sort_unstable();
        frags.retain(|f| f.parent_instance.is_none() || live_fragments.contains(&f.id));
        report
    }

    /// Drop every instance, deregistering constraints and fragments.
    pub fn dispose_all(&mut self, tx: &mut Transactions, frags: &mut FragmentRegistry) -> Vec<InstanceId> {
        let ids: Vec<InstanceId> = self.instances.keys().copied().collect();
        for &id in &ids {
            tx.deregister(id);
            frags.remove_instance(id);
        }
        self.instances.clear();
        ids
    }

    /// Nodes whose runtime values some live instance wants.
    pub fn stream_nodes(&self) -> BTreeSet<NodeId> {
        self.instances
            .values()
            .filter_map(|i| self.definition(&i.definition).map(|d| (i, d)))
            .flat_map(|(i, d)| d.streams.iter().filter_map(|s| i.extraction.nodes.get(s).copied()))
            .collect()
    }

    pub fn render(&self, id: InstanceId, tree: &SyntaxTree, values: Values<'_>) -> Option<ViewSpec> {
        let instance = self.instances.get(&id)?;
        let def = self.definition(&instance.definition)?;
        let ctx = RenderCtx { instance, tree, values };
        let children: Vec<ViewSpec> = def.view.iter().map(|v| ctx.render(v)).collect();
        Some(match children.len() {
            1 => children.into_iter().next().expect("one child"),
            _ => ViewSpec::Container {
                style: BTreeMap::new(),
                children,
            },
        })
    }

    /// Run `action` of instance `id`, planning edits against `tree`.
    pub fn dispatch(&self, id: InstanceId, action: &str, payload: &Value, tree: &SyntaxTree) -> Result<ActionEffect, ToolError> {
        let instance = self.instances.get(&id).ok_or(ToolError::StaleInstance(id))?;
        let def = self.definition(&instance.definition).ok_or(ToolError::StaleInstance(id))?;
        let spec = def.actions.get(action).ok_or_else(|| ToolError::UnknownAction {
            tool: def.id.clone(),
            action: action.to_string(),
        })?;
        let bound = |b: &str| -> Result<SyntaxNode<'_>, ToolError> {
            instance
                .extraction
                .nodes
                .get(b)
                .and_then(|&n| tree.node(n))
                .ok_or(ToolError::StaleInstance(id))
        };
        let structured = |operation: EditOperation, target: NodeId, intents: Intents| -> Result<ActionEffect, ToolError> {
            let request = StructuredEditRequest {
                operation,
                target,
                intents: intents.clone(),
            };
            let change = edit::plan(tree, &request)?;
            Ok(ActionEffect {
                requests: vec![request],
                changes: vec![change],
                intents,
            })
        };
        match spec {
            ActionSpec::Unwrap { binding } => {
                let text = bound(binding)?.text().to_string();
                structured(
                    EditOperation::ReplaceWith { text },
                    instance.anchor,
                    Intents::deleting([instance.anchor]),
                )
            }
            ActionSpec::Replace { binding, continue_input } => {
                let node = bound(binding)?;
                let text = payload
                    .get("text")
                    .and_then(Value::as_str)
                    .ok_or_else(|| ToolError::BadPayload("expected {\"text\": string}".into()))?;
                let mut intents = Intents::deleting([node.id()]);
                intents.require_continue_input = *continue_input;
                structured(EditOperation::ReplaceWith { text: text.to_string() }, node.id(), intents)
            }
            ActionSpec::SetNumber { binding } => {
                let node = bound(binding)?;
                let value = payload
                    .get("value")
                    .and_then(number_text)
                    .ok_or_else(|| ToolError::BadPayload("expected {\"value\": number}".into()))?;
                structured(EditOperation::ReplaceWith { text: value }, node.id(), Intents::default())
            }
            ActionSpec::SetColor { r, g, b } => {
                let mut parts = Vec::new();
                for (binding, key) in [(r, "r"), (g, "g"), (b, "b")] {
                    let node = bound(binding)?;
                    let value = payload
                        .get(key)
                        .and_then(number_text)
                        .ok_or_else(|| ToolError::BadPayload(format!("expected numeric `{key}`")))?;
                    parts.push((node.span(), value));
                }
                // back to front so earlier offsets stay valid
                parts.sort_by_key(|(s, _)| std::cmp::Reverse(s.start));
                Ok(ActionEffect {
                    requests: Vec::new(),
                    changes: parts.into_iter().map(|(s, v)| TextChange::replace(s, v)).collect(),
                    intents: Intents::default(),
                })
            }
            ActionSpec::EditString { binding } => {
                let node = bound(binding)?;
                let field = |k: &str| payload.get(k).and_then(Value::as_u64).map(|v| v as usize);
                let (Some(from), Some(to)) = (field("from"), field("to")) else {
                    return Err(ToolError::BadPayload("expected {from, to, insert}".into()));
                };
                let insert = payload.get("insert").and_then(Value::as_str).unwrap_or("");
                let (quote, body_start, body) = string_body(node).ok_or_else(|| ToolError::BadPayload("binding is not a string literal".into()))?;
                let plain = unescape(body);
                if from > to || to > plain.text.len() {
                    return Err(ToolError::BadPayload(format!("range {from}..{to} outside the string")));
                }
                let change = TextChange::new(
                    body_start + plain.to_raw(from),
                    body_start + plain.to_raw(to),
                    escape(insert, quote),
                );
                Ok(ActionEffect {
                    requests: Vec::new(),
                    changes: vec![change],
                    intents: Intents::default(),
                })
            }
        }
    }
}

fn number_text(v: &Value) -> Option<String> {
    if let Some(i) = v.as_i64() {
        return Some(i.to_string());
    }
    v.as_f64().filter(|f| f.is_finite()).map(|f| f.to_string())
}

/// Delimiter, absolute start and raw text of a string literal's body.
fn string_body(node: SyntaxNode<'_>) -> Option<(Quote, usize, &str)> {
    let text = node.text();
    let quote = Quote::from_char(text.chars().next()?)?;
    if text.len() < 2 || !text.ends_with(quote.as_char()) {
        return None;
    }
    Some((quote, node.span().start + 1, &text[1..text.len() - 1]))
}

struct RenderCtx<'a> {
    instance: &'a ToolInstance,
    tree: &'a SyntaxTree,
    values: Values<'a>,
}

impl RenderCtx<'_> {
    fn node(&self, binding: &str) -> Option<SyntaxNode<'_>> {
        self.instance
            .extraction
            .nodes
            .get(binding)
            .and_then(|&n| self.tree.node(n))
    }

    fn plain(&self, binding: &str) -> String {
        self.node(binding)
            .and_then(string_body)
            .map(|(_, _, body)| unescape(body).text)
            .unwrap_or_default()
    }

    fn interpolate(&self, template: &str) -> String {
        let mut out = String::new();
        let mut rest = template;
        while let Some(open) = rest.find('{') {
            let Some(close) = rest[open..].find('}') else {
                break;
            };
            out.push_str(&rest[..open]);
            let key = &rest[open + 1..open + close];
            let value = match key.split_once(':') {
                Some(("text", b)) => self.node(b).map(|n| n.text().to_string()).unwrap_or_default(),
                Some(("plain", b)) => self.plain(b),
                Some(("last", b)) => self
                    .instance
                    .extraction
                    .nodes
                    .get(b)
                    .and_then(|&n| (self.values)(n))
                    .map(|v| match v {
                        Value::String(s) => s,
                        other => other.to_string(),
                    })
                    .unwrap_or_default(),
                _ => match self.instance.extraction.scalars.get(key) {
                    Some(s) => s.clone(),
                    None => rest[open..=open + close].to_string(),
                },
            };
            out.push_str(&value);
            rest = &rest[open + close + 1..];
        }
        out.push_str(rest);
        out
    }

    fn render(&self, item: &ViewItem) -> ViewSpec {
        match item {
            ViewItem::Container { style, children } => ViewSpec::Container {
                style: style.clone(),
                children: children.iter().map(|c| self.render(c)).collect(),
            },
            ViewItem::Label { text } => ViewSpec::Label {
                text: self.interpolate(text),
            },
            ViewItem::Fragment { binding } => ViewSpec::Fragment {
                fragment: self.instance.fragments.get(binding).copied().unwrap_or_default(),
                nodes: self.instance.extraction.nodes.get(binding).into_iter().copied().collect(),
            },
            ViewItem::Input {
                input,
                value,
                placeholder,
                attrs,
                action,
            } => ViewSpec::Input {
                input: input.clone(),
                value: self.interpolate(value),
                placeholder: self.interpolate(placeholder),
                attrs: attrs.iter().map(|(k, v)| (k.clone(), self.interpolate(v))).collect(),
                action: action.clone(),
            },
            ViewItem::Editor {
                language,
                binding,
                action,
            } => ViewSpec::Editor {
                language: language.clone(),
                text: self.plain(binding),
                action: action.clone(),
            },
            ViewItem::Action { action, label } => ViewSpec::Action {
                action: action.clone(),
                label: self.interpolate(label),
            },
            ViewItem::Markup { style, action } => ViewSpec::Markup {
                style: style.clone(),
                action: action.clone(),
            },
        }
    }
}

#[cfg(test)]
mod tests;
