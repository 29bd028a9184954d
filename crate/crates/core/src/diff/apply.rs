use std::collections::HashMap;
use std::sync::Arc;

use super::{DiffError, EditOp, EditScript, LoadNode};
use crate::syntax::{NodeData, NodeId, Span, SyntaxTree};

struct Slot {
    kind: Arc<str>,
    named: bool,
    error: bool,
    missing: bool,
    text: String,
    parent: Option<NodeId>,
    children: Vec<NodeId>,
}

/// Mutable id-keyed copy of a tree that ops run against.
struct Arena {
    root: NodeId,
    slots: HashMap<NodeId, Slot>,
    kinds: HashMap<String, Arc<str>>,
}

fn corrupt(msg: impl Into<String>) -> DiffError {
    DiffError::Corrupt(msg.into())
}

impl Arena {
    fn new(tree: &SyntaxTree) -> Self {
        let data = tree.data();
        let mut slots = HashMap::with_capacity(data.len());
        let mut kinds = HashMap::new();
        for n in data {
            kinds
                .entry(n.kind.to_string())
                .or_insert_with(|| n.kind.clone());
            let text = if n.children.is_empty() {
                tree.text()[n.span.start..n.span.end].to_string()
            } else {
                String::new()
            };
            slots.insert(
                n.id,
                Slot {
                    kind: n.kind.clone(),
                    named: n.named,
                    error: n.error,
                    missing: n.missing,
                    text,
                    parent: n.parent.map(|p| data[p as usize].id),
                    children: n.children.iter().map(|&c| data[c as usize].id).collect(),
                },
            );
        }
        Arena {
            root: data[0].id,
            slots,
            kinds,
        }
    }

    fn slot(&mut self, id: NodeId) -> Result<&mut Slot, DiffError> {
        self.slots
            .get_mut(&id)
            .ok_or_else(|| corrupt(format!("unknown node {id}")))
    }

    fn load(&mut self, node: &LoadNode) -> Result<(), DiffError> {
        if self.slots.contains_key(&node.id) {
            return Err(corrupt(format!("node {} already exists", node.id)));
        }
        let kind = self
            .kinds
            .entry(node.kind.clone())
            .or_insert_with(|| Arc::from(node.kind.as_str()))
            .clone();
        self.slots.insert(
            node.id,
            Slot {
                kind,
                named: node.named,
                error: node.error,
                missing: node.missing,
                text: node.text.clone(),
                parent: None,
                children: Vec::new(),
            },
        );
        Ok(())
    }

    fn run(&mut self, op: &EditOp) -> Result<(), DiffError> {
        match op {
            EditOp::Load { node } => self.load(node),
            EditOp::Attach { node, parent, index } => {
                if self.slot(*node)?.parent.is_some() {
                    return Err(corrupt(format!("attach of attached node {node}")));
                }
                let p = self.slot(*parent)?;
                if *index > p.children.len() {
                    return Err(corrupt(format!("attach index {index} out of range")));
                }
                p.children.insert(*index, *node);
                self.slot(*node)?.parent = Some(*parent);
                Ok(())
            }
            EditOp::Detach { node, parent, index } => {
                let p = self.slot(*parent)?;
                if p.children.get(*index) != Some(node) {
                    return Err(corrupt(format!("node {node} is not child {index} of {parent}")));
                }
                p.children.remove(*index);
                self.slot(*node)?.parent = None;
                Ok(())
            }
            EditOp::Remove { node, subtree } => {
                if self.slot(*node)?.parent.is_some() || *node == self.root {
                    return Err(corrupt(format!("remove of attached node {node}")));
                }
                let mut stack = vec![*node];
                while let Some(id) = stack.pop() {
                    let slot = self
                        .slots
                        .remove(&id)
                        .ok_or_else(|| corrupt(format!("unknown node {id}")))?;
                    stack.extend(slot.children);
                }
                if subtree.first().map(|r| r.node.id) != Some(*node) {
                    return Err(corrupt("remove snapshot does not start at its node"));
                }
                Ok(())
            }
            EditOp::Update { node, old, new } => {
                let slot = self.slot(*node)?;
                if !slot.children.is_empty() {
                    return Err(corrupt(format!("update of inner node {node}")));
                }
                if slot.text != *old {
                    return Err(corrupt(format!("update of {node} expected {old:?}, found {:?}", slot.text)));
                }
                slot.text = new.clone();
                Ok(())
            }
        }
    }

    fn into_tree(self, base: &SyntaxTree, version: u64, next_id: NodeId) -> Result<SyntaxTree, DiffError> {
        let mut nodes: Vec<NodeData> = Vec::with_capacity(self.slots.len());
        let mut text = String::new();
        // (id, parent index); children are pushed in reverse to pop in order.
        let mut stack: Vec<(NodeId, Option<u32>)> = vec![(self.root, None)];
        let mut open: Vec<u32> = Vec::new();
        let mut ends: Vec<(u32, usize)> = Vec::new();
        while let Some((id, parent)) = stack.pop() {
            let slot = self
                .slots
                .get(&id)
                .ok_or_else(|| corrupt(format!("dangling child {id}")))?;
            let idx = nodes.len() as u32;
            // close finished ancestors
            while let Some(&top) = open.last() {
                if Some(top) == parent {
                    break;
                }
                open.pop();
                ends.push((top, text.len()));
            }
            let start = text.len();
            if slot.children.is_empty() {
                text.push_str(&slot.text);
            }
            nodes.push(NodeData {
                id,
                kind: slot.kind.clone(),
                named: slot.named,
                error: slot.error,
                missing: slot.missing,
                span: Span::new(start, text.len()),
                parent,
                children: Vec::new(),
            });
            if let Some(p) = parent {
                nodes[p as usize].children.push(idx);
            }
            if !slot.children.is_empty() {
                open.push(idx);
                for &c in slot.children.iter().rev() {
                    stack.push((c, Some(idx)));
                }
            }
        }
        for idx in open {
            ends.push((idx, text.len()));
        }
        for (idx, end) in ends {
            nodes[idx as usize].span.end = end;
        }
        if nodes.len() != self.slots.len() {
            return Err(corrupt("script leaves detached nodes behind"));
        }
        Ok(SyntaxTree::from_parts(
            base.language(),
            version,
            next_id,
            Arc::from(text),
            nodes,
        ))
    }
}

/// Apply `script` to the tree it was computed against.
pub fn apply_edit_script(tree: &SyntaxTree, script: &EditScript) -> Result<SyntaxTree, DiffError> {
    if tree.version() != script.source_version {
        return Err(DiffError::StaleScript {
            expected: script.source_version,
            found: tree.version(),
        });
    }
    if script.is_empty() {
        return Ok(tree.clone());
    }
    let mut arena = Arena::new(tree);
    for op in &script.ops {
        arena.run(op)?;
    }
    arena.into_tree(tree, script.target_version, script.target_next_id.max(tree.next_id()))
}

/// Undo `script` on the tree it produced.
pub fn rollback(tree: &SyntaxTree, script: &EditScript) -> Result<SyntaxTree, DiffError> {
    if tree.version() != script.target_version {
        return Err(DiffError::InvalidRollback);
    }
    if script.is_empty() {
        return Ok(tree.clone());
    }
    let mut arena = Arena::new(tree);
    for op in script.ops.iter().rev() {
        for inv in op.inverse() {
            arena.run(&inv).map_err(|_| DiffError::InvalidRollback)?;
        }
    }
    arena.into_tree(tree, script.source_version, script.source_next_id)
}
