//! Runtime values for watched expressions.
//!
//! Watched expressions are rewritten, in a shadow copy of the document, into
//! a wrapper that posts `{id, e}` to a local collector and evaluates to the
//! original value. The collector appends each post to the stream of that
//! node id.

mod collector;
mod streams;

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use thiserror::Error;

use crate::syntax::{NodeId, SyntaxNode, SyntaxTree, Template};

pub use collector::{serve, Collector, CollectorHandle};
pub use streams::{cap_value, Ack, CollectError, Subscription, ValueEvent, ValueStreams, HISTORY_CAP};

pub const DEFAULT_PORT: u16 = 3000;

pub fn default_endpoint() -> String {
    format!("http://localhost:{DEFAULT_PORT}/watch")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstrumentError {
    #[error("`{0}` nodes are not expressions")]
    NotAnExpression(String),
    #[error("no rewrite template for {0}")]
    UnsupportedGrammar(String),
}

const JS_WRAPPER: &str = r#"(e => (
  fetch($url, {
    method: "POST",
    body: JSON.stringify({ id: $identifier, e }),
    headers: { "Content-Type": "application/json" },
  }), e)
)($expression)"#;

fn js_wrapper() -> &'static Template {
    static T: OnceLock<Template> = OnceLock::new();
    T.get_or_init(|| Template::new(JS_WRAPPER, "javascript").expect("wrapper template parses"))
}

fn is_expression(node: SyntaxNode<'_>) -> bool {
    static KINDS: OnceLock<BTreeSet<String>> = OnceLock::new();
    let kinds = KINDS.get_or_init(|| {
        let g = node.tree().language().grammar();
        let mut k: BTreeSet<String> = g.kinds_of("expression").into_iter().collect();
        k.extend(g.kinds_of("primary_expression"));
        k
    });
    kinds.contains(node.kind())
}

fn check(node: SyntaxNode<'_>) -> Result<(), InstrumentError> {
    let lang = node.tree().language().id;
    if lang != "javascript" {
        return Err(InstrumentError::UnsupportedGrammar(lang.to_string()));
    }
    if !is_expression(node) {
        return Err(InstrumentError::NotAnExpression(node.kind().to_string()));
    }
    Ok(())
}

fn wrap(expression: &str, id: NodeId, endpoint: &str) -> String {
    js_wrapper().instantiate(&HashMap::from([
        ("url".to_string(), serde_json::to_string(endpoint).expect("string serializes")),
        ("identifier".to_string(), id.to_string()),
        ("expression".to_string(), expression.to_string()),
    ]))
}

/// Source of `node` rewritten to report its value under `id`. An already
/// rewritten expression comes back unchanged.
pub fn rewrite_for_watch(node: SyntaxNode<'_>, id: NodeId, endpoint: &str) -> Result<String, InstrumentError> {
    check(node)?;
    if is_wrapper(node) {
        return Ok(node.text().to_string());
    }
    Ok(wrap(node.text(), id, endpoint))
}

/// Whether `node` already is an instrumentation wrapper.
pub fn is_wrapper(node: SyntaxNode<'_>) -> bool {
    let mut n = node;
    // the wrapper may sit inside redundant parentheses
    while n.kind() == "parenthesized_expression" {
        match n.syntax_children().nth(1) {
            Some(inner) => n = inner,
            None => break,
        }
    }
    js_wrapper().matches(n).is_some()
}

/// Shadow copy of the document with every node in `watched` rewritten,
/// each under its own node id. Nested watched nodes are rewritten inside
/// their enclosing rewrite.
pub fn instrument_document(tree: &SyntaxTree, watched: &BTreeSet<NodeId>, endpoint: &str) -> Result<String, InstrumentError> {
    for &id in watched {
        if let Some(n) = tree.node(id) {
            check(n)?;
        }
    }
    fn render(node: SyntaxNode<'_>, watched: &BTreeSet<NodeId>, endpoint: &str, out: &mut String) {
        let hit = watched.contains(&node.id()) && !is_wrapper(node);
        let inner = node.descendants().skip(1).any(|d| watched.contains(&d.id()));
        if !hit && !inner {
            out.push_str(node.text());
            return;
        }
        let mut body = String::new();
        if node.is_leaf() {
            body.push_str(node.text());
        } else {
            for c in node.children() {
                render(c, watched, endpoint, &mut body);
            }
        }
        if hit {
            out.push_str(&wrap(&body, node.id(), endpoint));
        } else {
            out.push_str(&body);
        }
    }
    let mut out = String::with_capacity(tree.text().len());
    render(tree.root(), watched, endpoint, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests;
