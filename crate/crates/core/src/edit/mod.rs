//! Grammar-aware edits: insert into lists, delete, replace and wrap.
//!
//! Every operation plans a single [`TextChange`]; nothing touches a
//! document directly, so the change still goes through validation.

mod adapter;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grammar::ListStyle;
use crate::syntax::{parse_with, NodeId, Span, SyntaxNode, SyntaxTree, TextChange};
use crate::transaction::Intents;

pub use adapter::{GrammarAdapter, Item, ListModel, TreeSitterAdapter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EditError {
    #[error("node {0} is not in the tree")]
    UnknownNode(NodeId),
    #[error("node has no list of children")]
    NotAList,
    #[error("index {index} is out of range for a list of {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the grammar requires this node")]
    CannotDelete,
    #[error("no variant of the replacement parses at the target position")]
    ReplaceFailed,
    #[error("the inserted element does not reparse at the requested position")]
    InsertFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum EditOperation {
    Insert { text: String, index: usize },
    Delete,
    ReplaceWith { text: String },
    WrapWith { prefix: String, suffix: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredEditRequest {
    pub operation: EditOperation,
    pub target: NodeId,
    #[serde(default)]
    pub intents: Intents,
}

/// Choose among several lists under one node.
pub type ListSelector<'a> = &'a dyn Fn(&[ListModel]) -> usize;

fn node(tree: &SyntaxTree, id: NodeId) -> Result<SyntaxNode<'_>, EditError> {
    tree.node(id).ok_or(EditError::UnknownNode(id))
}

fn error_count(tree: &SyntaxTree) -> usize {
    tree.preorder().filter(|n| n.is_error()).count()
}

fn reparse(tree: &SyntaxTree, change: &TextChange) -> Option<SyntaxTree> {
    let mut text = tree.text().to_string();
    change.apply(&mut text).ok()?;
    parse_with(tree.language(), &text, 1, 0).ok()
}

/// Compile a request into the text change it stands for.
pub fn plan(tree: &SyntaxTree, request: &StructuredEditRequest) -> Result<TextChange, EditError> {
    match &request.operation {
        EditOperation::Insert { text, index } => insert(tree, request.target, text, *index),
        EditOperation::Delete => delete(tree, request.target),
        EditOperation::ReplaceWith { text } => replace_with(tree, request.target, text),
        EditOperation::WrapWith { prefix, suffix } => wrap_with(tree, request.target, prefix, suffix),
    }
}

/// Insert `text` as element `index` of the list under `target`.
pub fn insert(tree: &SyntaxTree, target: NodeId, text: &str, index: usize) -> Result<TextChange, EditError> {
    insert_with(tree, target, text, index, &|_| 0)
}

/// [`insert`] with a callback picking the list when there are several.
pub fn insert_with(
    tree: &SyntaxTree,
    target: NodeId,
    text: &str,
    index: usize,
    select: ListSelector<'_>,
) -> Result<TextChange, EditError> {
    let adapter = TreeSitterAdapter::new(tree.language());
    let list_node = node(tree, target)?;
    let lists = adapter.lists(list_node);
    if lists.is_empty() {
        return Err(EditError::NotAList);
    }
    let which = select(&lists).min(lists.len() - 1);
    let list = &lists[which];
    let k = list.elements.len();
    if index > k {
        return Err(EditError::IndexOutOfRange { index, len: k });
    }

    let before_errors = error_count(tree);
    for change in insert_candidates(tree, list, text, index) {
        let Some(after) = reparse(tree, &change) else {
            continue;
        };
        if error_count(&after) > before_errors {
            continue;
        }
        let grown = Span::new(list_node.span().start, list_node.span().end + change.delta() as usize);
        let reparsed = after
            .preorder()
            .find(|n| n.span() == grown && n.kind() == list_node.kind());
        let ok = reparsed.is_some_and(|n| {
            adapter
                .lists(n)
                .get(which)
                .and_then(|l| l.elements.get(index))
                .is_some_and(|e| e.text == text)
        });
        if ok {
            return Ok(change);
        }
    }
    Err(EditError::InsertFailed)
}

fn insert_candidates(tree: &SyntaxTree, list: &ListModel, text: &str, index: usize) -> Vec<TextChange> {
    let src = tree.text();
    let sep = list.shape.separator.as_str();
    let els = &list.elements;
    let k = els.len();

    if sep.is_empty() {
        let mut gaps: Vec<String> = Vec::new();
        if k >= 2 {
            let (a, b) = if index > 0 && index < k { (index - 1, index) } else if index == 0 { (0, 1) } else { (k - 2, k - 1) };
            gaps.push(src[els[a].span.end..els[b].span.start].to_string());
        }
        for g in ["", " ", "\n"] {
            if !gaps.iter().any(|x| x == g) {
                gaps.push(g.to_string());
            }
        }
        let mut out: Vec<TextChange> = Vec::new();
        for gap in gaps {
            let change = if k == 0 {
                TextChange::insert(list.first_insert, text)
            } else if index < k {
                TextChange::insert(els[index].span.start, format!("{text}{gap}"))
            } else {
                TextChange::insert(els[k - 1].span.end, format!("{gap}{text}"))
            };
            if !out.contains(&change) {
                out.push(change);
            }
        }
        return out;
    }

    // whitespace around the separator nearest to the insertion point
    let near = list
        .separators
        .iter()
        // separators followed by an element show the spacing best
        .min_by_key(|s| {
            let at = els.get(index).map(|e| e.span.start).unwrap_or(src.len());
            let followed = els.iter().any(|e| e.span.start >= s.span.end);
            (!followed, s.span.start.abs_diff(at))
        })
        .map(|s| {
            let prev_end = els
                .iter()
                .rev()
                .find(|e| e.span.end <= s.span.start)
                .map(|e| e.span.end)
                .unwrap_or(s.span.start);
            let next_start = els
                .iter()
                .find(|e| e.span.start >= s.span.end)
                .map(|e| e.span.start);
            let pre = &src[prev_end..s.span.start];
            let gap = match next_start {
                Some(n) => &src[s.span.end..n],
                None => "",
            };
            (
                if pre.trim().is_empty() { pre.to_string() } else { String::new() },
                if gap.trim().is_empty() { gap.to_string() } else { String::new() },
            )
        });
    let (pre, gap) = near.unwrap_or_default();

    let change = match list.shape.style {
        ListStyle::Terminated => {
            if k == 0 {
                TextChange::insert(list.first_insert, format!("{text}{sep}"))
            } else if index < k {
                TextChange::insert(els[index].span.start, format!("{text}{sep}{gap}"))
            } else {
                let last_sep = list.separator_after(k - 1).map(|s| s.span.end).unwrap_or(els[k - 1].span.end);
                TextChange::insert(last_sep, format!("{gap}{text}{sep}"))
            }
        }
        _ => {
            if k == 0 {
                TextChange::insert(list.first_insert, text)
            } else if index < k {
                TextChange::insert(els[index].span.start, format!("{text}{sep}{gap}"))
            } else if let Some(trailing) = list.separator_after(k - 1) {
                let gap = if gap.is_empty() { " ".to_string() } else { gap };
                TextChange::insert(trailing.span.end, format!("{gap}{text}{sep}"))
            } else {
                TextChange::insert(els[k - 1].span.end, format!("{pre}{sep}{gap}{text}"))
            }
        }
    };
    vec![change]
}

/// Delete `target` together with a separator that would become obsolete.
pub fn delete(tree: &SyntaxTree, target: NodeId) -> Result<TextChange, EditError> {
    let adapter = TreeSitterAdapter::new(tree.language());
    let n = node(tree, target)?;
    let parent = n.parent().ok_or(EditError::CannotDelete)?;
    let src = tree.text();

    for list in adapter.lists(parent) {
        let Some(j) = list.elements.iter().position(|e| e.id == target) else {
            continue;
        };
        let els = &list.elements;
        let k = els.len();
        let sep = list.separator_after(j);
        let singleton_keeps_separator = adapter.grammar().exceptions().singleton_trailing(parent.kind());

        let span = match list.shape.style {
            ListStyle::Adjacent => {
                if j + 1 < k {
                    Span::new(els[j].span.start, els[j + 1].span.start)
                } else if j > 0 {
                    Span::new(els[j - 1].span.end, els[j].span.end)
                } else {
                    els[j].span
                }
            }
            ListStyle::Terminated => {
                let end = sep.map(|s| s.span.end).unwrap_or(els[j].span.end);
                if j + 1 < k {
                    Span::new(els[j].span.start, els[j + 1].span.start)
                } else if j > 0 {
                    let prev = list.separator_after(j - 1).map(|s| s.span.end).unwrap_or(els[j - 1].span.end);
                    Span::new(prev, end)
                } else {
                    Span::new(els[j].span.start, end)
                }
            }
            ListStyle::Separated { .. } => {
                if singleton_keeps_separator && k == 2 {
                    let other = &els[1 - j];
                    let has_trailing = list.separator_after(1).is_some();
                    if !has_trailing {
                        return Ok(if j == 0 {
                            TextChange::replace(
                                Span::new(els[0].span.start, els[1].span.end),
                                format!("{}{}", other.text, list.shape.separator),
                            )
                        } else {
                            let first_sep = list.separator_after(0).map(|s| s.span.end).unwrap_or(els[0].span.end);
                            TextChange::delete(Span::new(first_sep, els[1].span.end))
                        });
                    }
                }
                if j + 1 < k {
                    Span::new(els[j].span.start, els[j + 1].span.start)
                } else if let Some(trailing) = sep {
                    if j > 0 {
                        let prev = list.separator_after(j - 1).map(|s| s.span.end).unwrap_or(els[j - 1].span.end);
                        Span::new(prev, trailing.span.end)
                    } else {
                        Span::new(els[j].span.start, trailing.span.end)
                    }
                } else if j > 0 {
                    Span::new(els[j - 1].span.end, els[j].span.end)
                } else {
                    els[j].span
                }
            }
        };
        return Ok(TextChange::delete(span));
    }

    // optional slot: drop the whole optional region and the space before it
    let kids = adapter.kids(parent);
    let Some(pos) = kids.iter().position(|k| k.id() == target) else {
        return Err(EditError::CannotDelete);
    };
    let analysis = adapter.analyze(parent).ok_or(EditError::CannotDelete)?;
    let region = analysis
        .optional
        .iter()
        .filter(|&&(a, b)| a <= pos && pos < b)
        .min_by_key(|&&(a, b)| b - a)
        .ok_or(EditError::CannotDelete)?;
    let start = kids[region.0].span().start;
    let end = kids[region.1 - 1].span().end;
    let before = &src[..start];
    let ws = before.len() - before.trim_end_matches([' ', '\t']).len();
    if region.0 > 0 && ws > 0 {
        Ok(TextChange::delete(Span::new(start - ws, end)))
    } else {
        let after = &src[end..];
        let ws = after.len() - after.trim_start_matches([' ', '\t']).len();
        Ok(TextChange::delete(Span::new(start, end + ws)))
    }
}

/// Does `after` have a node spanning exactly `span`?
fn node_at(after: &SyntaxTree, span: Span) -> bool {
    after
        .preorder()
        .any(|n| n.span() == span && !n.is_trivia() && !n.is_error())
}

/// Replace `target` with `text`, adding parentheses when the bare text
/// would not parse as one node at that position.
pub fn replace_with(tree: &SyntaxTree, target: NodeId, text: &str) -> Result<TextChange, EditError> {
    let n = node(tree, target)?;
    let span = n.span();
    let adapter = TreeSitterAdapter::new(tree.language());
    let errors = error_count(tree);
    let mut candidates = vec![text.to_string()];
    if adapter.parenthesizable(n) {
        candidates.push(format!("({text})"));
    }
    for candidate in candidates {
        let change = TextChange::replace(span, candidate.as_str());
        let Some(after) = reparse(tree, &change) else {
            continue;
        };
        if error_count(&after) <= errors && node_at(&after, Span::new(span.start, span.start + candidate.len())) {
            return Ok(change);
        }
    }
    Err(EditError::ReplaceFailed)
}

/// Surround `target` with `prefix` and `suffix`, parenthesizing the target
/// or the whole construct when needed.
pub fn wrap_with(tree: &SyntaxTree, target: NodeId, prefix: &str, suffix: &str) -> Result<TextChange, EditError> {
    let n = node(tree, target)?;
    let span = n.span();
    let body = n.text();
    let adapter = TreeSitterAdapter::new(tree.language());
    let parens = adapter.parenthesizable(n);
    let errors = error_count(tree);

    let mut candidates = vec![(false, false)];
    if parens {
        candidates.extend([(true, false), (false, true), (true, true)]);
    }
    for (inner, outer) in candidates {
        let wrapped_body = if inner { format!("({body})") } else { body.to_string() };
        let payload = format!("{prefix}{wrapped_body}{suffix}");
        let full = if outer { format!("({payload})") } else { payload };
        let change = TextChange::replace(span, full.as_str());
        let Some(after) = reparse(tree, &change) else {
            continue;
        };
        let body_start = span.start + outer as usize + prefix.len() + inner as usize;
        let body_span = Span::new(body_start, body_start + body.len());
        let intact = after
            .preorder()
            .any(|m| m.span() == body_span && m.kind() == n.kind());
        if error_count(&after) <= errors && intact && node_at(&after, Span::new(span.start, span.start + full.len())) {
            return Ok(change);
        }
    }
    Err(EditError::ReplaceFailed)
}

#[cfg(test)]
mod tests;
