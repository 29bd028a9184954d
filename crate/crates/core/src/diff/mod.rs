//! Edit scripts between tree versions.
//!
//! A script is an ordered list of [`EditOp`]s. Applying it to the source
//! tree yields a tree structurally equal to the parse of the new text while
//! keeping the ids of every node the matcher could reuse. Every op records
//! enough old state to be inverted, so speculative application can be
//! rolled back exactly.

mod apply;
mod matching;

use std::collections::HashSet;
use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{parse_with, NodeId, SyntaxError, SyntaxTree};

pub use apply::{apply_edit_script, rollback};
pub use matching::diff_trees;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiffError {
    #[error("script targets tree version {expected}, tree is at {found}")]
    StaleScript { expected: u64, found: u64 },
    #[error("script is not the last one applied to this tree")]
    InvalidRollback,
    #[error("malformed edit script: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

/// Blueprint of a single node created by a script.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadNode {
    pub id: NodeId,
    pub kind: String,
    pub named: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    pub error: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    pub missing: bool,
    /// Source text for leaves, empty for inner nodes.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub text: String,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// A removed node and the ids of its (also removed) children.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovedNode {
    pub node: LoadNode,
    pub children: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum EditOp {
    /// Create a detached node.
    Load { node: LoadNode },
    /// Insert a detached node as the `index`-th child of `parent`.
    Attach { node: NodeId, parent: NodeId, index: usize },
    /// Take `node` out of `parent`, where it was the `index`-th child.
    Detach { node: NodeId, parent: NodeId, index: usize },
    /// Delete a detached subtree. `subtree` lists it in preorder.
    Remove { node: NodeId, subtree: Vec<RemovedNode> },
    /// Replace the text of a leaf.
    Update { node: NodeId, old: String, new: String },
}

impl EditOp {
    pub fn name(&self) -> &'static str {
        match self {
            EditOp::Load { .. } => "Load",
            EditOp::Attach { .. } => "Attach",
            EditOp::Detach { .. } => "Detach",
            EditOp::Remove { .. } => "Remove",
            EditOp::Update { .. } => "Update",
        }
    }

    /// The node this op is about.
    pub fn node(&self) -> NodeId {
        match self {
            EditOp::Load { node } => node.id,
            EditOp::Attach { node, .. }
            | EditOp::Detach { node, .. }
            | EditOp::Remove { node, .. }
            | EditOp::Update { node, .. } => *node,
        }
    }

    /// Ops undoing this one, in execution order.
    pub fn inverse(&self) -> Vec<EditOp> {
        match self {
            EditOp::Load { node } => vec![EditOp::Remove {
                node: node.id,
                subtree: vec![RemovedNode {
                    node: node.clone(),
                    children: Vec::new(),
                }],
            }],
            EditOp::Attach { node, parent, index } => vec![EditOp::Detach {
                node: *node,
                parent: *parent,
                index: *index,
            }],
            EditOp::Detach { node, parent, index } => vec![EditOp::Attach {
                node: *node,
                parent: *parent,
                index: *index,
            }],
            EditOp::Remove { subtree, .. } => {
                let mut ops: Vec<EditOp> = subtree
                    .iter()
                    .map(|r| EditOp::Load { node: r.node.clone() })
                    .collect();
                for r in subtree {
                    for (index, &child) in r.children.iter().enumerate() {
                        ops.push(EditOp::Attach {
                            node: child,
                            parent: r.node.id,
                            index,
                        });
                    }
                }
                ops
            }
            EditOp::Update { node, old, new } => vec![EditOp::Update {
                node: *node,
                old: new.clone(),
                new: old.clone(),
            }],
        }
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = |s: &str| serde_json::to_string(s).unwrap_or_default();
        match self {
            EditOp::Load { node } => {
                write!(f, "Load {} {}", node.id, q(&node.kind))?;
                if !node.named {
                    f.write_str(" anon")?;
                }
                if node.error {
                    f.write_str(" error")?;
                }
                if node.missing {
                    f.write_str(" missing")?;
                }
                if !node.text.is_empty() {
                    write!(f, " {}", q(&node.text))?;
                }
                Ok(())
            }
            EditOp::Attach { node, parent, index } => write!(f, "Attach {node} {parent} {index}"),
            EditOp::Detach { node, parent, index } => write!(f, "Detach {node} {parent} {index}"),
            EditOp::Remove { node, subtree } => write!(f, "Remove {node} {}", subtree.len()),
            EditOp::Update { node, old, new } => write!(f, "Update {node} {} {}", q(old), q(new)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditScript {
    pub ops: Vec<EditOp>,
    pub source_version: u64,
    pub target_version: u64,
    pub source_next_id: NodeId,
    pub target_next_id: NodeId,
    /// The new text did not parse into anything but one error node.
    pub degenerate: bool,
}

impl EditScript {
    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn count(&self, name: &str) -> usize {
        self.ops.iter().filter(|op| op.name() == name).count()
    }

    /// Every node id deleted by this script, including subtree members.
    pub fn removed_ids(&self) -> HashSet<NodeId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                EditOp::Remove { subtree, .. } => Some(subtree.iter().map(|r| r.node.id)),
                _ => None,
            })
            .flatten()
            .collect()
    }

    pub fn loaded_ids(&self) -> HashSet<NodeId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                EditOp::Load { node } => Some(node.id),
                _ => None,
            })
            .collect()
    }

    /// Nodes detached and attached again somewhere else.
    pub fn moved_ids(&self) -> HashSet<NodeId> {
        let attached: HashSet<_> = self
            .ops
            .iter()
            .filter_map(|op| match op {
                EditOp::Attach { node, .. } => Some(*node),
                _ => None,
            })
            .collect();
        self.ops
            .iter()
            .filter_map(|op| match op {
                EditOp::Detach { node, .. } if attached.contains(node) => Some(*node),
                _ => None,
            })
            .collect()
    }

    pub fn updated_ids(&self) -> HashSet<NodeId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                EditOp::Update { node, .. } => Some(*node),
                _ => None,
            })
            .collect()
    }

    /// Line-oriented dump, one op per line.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# script {} -> {}{}",
            self.source_version,
            self.target_version,
            if self.degenerate { " degenerate" } else { "" }
        );
        for op in &self.ops {
            let _ = writeln!(out, "{op}");
        }
        out
    }
}

/// Parse `new_text` and diff it against `tree`.
pub fn compute_edit_script(tree: &SyntaxTree, new_text: &str) -> Result<EditScript, DiffError> {
    let new = parse_with(tree.language(), new_text, tree.next_id(), tree.version())?;
    Ok(diff_trees(tree, &new))
}

#[cfg(test)]
mod tests;
