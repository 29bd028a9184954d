//! Fragments: runs of consecutive sibling nodes shown as nested editors.
//!
//! A fragment's range comes from its nodes in the last valid tree, shifted
//! through any pending changes. Its display text pulls in surrounding
//! whitespace by a small heuristic and replaces the common indentation of
//! continuation lines with one tab, keeping enough bookkeeping to map
//! offsets back to the document exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{NodeId, Span, SyntaxTree};
use crate::transaction::PendingChange;

pub type FragmentId = u64;

/// Fragment 0 always shows the whole document.
pub const ROOT_FRAGMENT: FragmentId = 0;

/// Symbol that replaces stripped indentation.
pub const INDENT: char = '\t';

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FragmentError {
    #[error("fragment {0} lost its nodes")]
    Orphaned(FragmentId),
    #[error("no fragment {0}")]
    Unknown(FragmentId),
}

/// Per-fragment override of the whitespace heuristic. `None` keeps the
/// default rule for that side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhitespacePolicy {
    #[serde(default, rename = "includeLeft")]
    pub include_left: Option<bool>,
    #[serde(default, rename = "includeRight")]
    pub include_right: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fragment {
    pub id: FragmentId,
    /// Consecutive siblings, in order.
    pub nodes: Vec<NodeId>,
    /// Tool instance whose view embeds this fragment.
    pub parent_instance: Option<u64>,
    pub depth: u32,
    #[serde(default)]
    pub whitespace: WhitespacePolicy,
}

/// What a frontend needs to show a fragment and map carets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FragmentView {
    pub fragment: FragmentId,
    /// Displayed document range, surrounding whitespace included.
    pub range: Span,
    pub display_text: String,
    /// The common indentation each stripped line lost.
    pub indent_prefix: String,
    /// Bytes of indentation stripped from each display line (0 or the
    /// prefix length).
    pub line_strips: Vec<usize>,
    /// Whitespace bytes pulled in before the nodes.
    pub leading_skip: usize,
    /// Whitespace bytes pulled in after the nodes.
    pub trailing_take: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Start,
    End,
}

/// Where offset `p` ends up after `change`. Insertions at `p` push it right;
/// positions inside a replaced region collapse to its start (for a start)
/// or its end (for an end).
fn map_offset(p: usize, change: &crate::syntax::TextChange, side: Side) -> usize {
    let inserted = change.insert.len();
    if p < change.from {
        p
    } else if p >= change.to {
        p - (change.to - change.from) + inserted
    } else {
        match side {
            Side::Start => change.from,
            Side::End => change.from + inserted,
        }
    }
}

/// Shift and grow `span` through `pending`, applied in order.
pub fn map_range(span: Span, pending: &[PendingChange]) -> Span {
    pending.iter().fold(span, |s, p| {
        let start = map_offset(s.start, &p.change, Side::Start);
        let end = map_offset(s.end, &p.change, Side::End).max(start);
        Span::new(start, end)
    })
}

/// Covering range of the fragment's nodes in `tree`, mapped through
/// `pending`.
pub fn fragment_range(fragment: &Fragment, tree: &SyntaxTree, pending: &[PendingChange]) -> Result<Span, FragmentError> {
    if fragment.id == ROOT_FRAGMENT && fragment.nodes.is_empty() {
        return Ok(map_range(tree.root().span(), pending));
    }
    let mut spans = fragment.nodes.iter().map(|&id| tree.node(id).map(|n| n.span()));
    let first = spans
        .next()
        .flatten()
        .ok_or(FragmentError::Orphaned(fragment.id))?;
    let mut covering = first;
    for s in spans {
        covering = covering.cover(s.ok_or(FragmentError::Orphaned(fragment.id))?);
    }
    Ok(map_range(covering, pending))
}

fn is_inline_ws(c: char) -> bool {
    c == ' ' || c == '\t'
}

/// Build the view of `range` over `text`.
pub fn display_text(fragment: FragmentId, text: &str, range: Span, policy: WhitespacePolicy) -> FragmentView {
    let range = Span::new(range.start.min(text.len()), range.end.min(text.len()));

    let right = text[range.end..]
        .find(|c: char| !is_inline_ws(c))
        .unwrap_or(text.len() - range.end);
    let trailing = match policy.include_right {
        Some(false) => 0,
        _ => right,
    };

    let before = &text[..range.start];
    let left = before.len() - before.trim_end_matches(is_inline_ws).len();
    let is_indent = left == before.len() || before[..before.len() - left].ends_with('\n');
    let leading = match policy.include_left {
        Some(true) => left,
        Some(false) => 0,
        None if !is_indent && left > 1 => left,
        None => 0,
    };

    let shown = Span::new(range.start - leading, range.end + trailing);
    let raw = &text[shown.start..shown.end];
    let lines: Vec<&str> = raw.split('\n').collect();

    let mut prefix: Option<&str> = None;
    for line in lines.iter().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let ws = &line[..line.len() - line.trim_start_matches(is_inline_ws).len()];
        prefix = Some(match prefix {
            None => ws,
            Some(p) => {
                let common = p.bytes().zip(ws.bytes()).take_while(|(a, b)| a == b).count();
                &p[..common]
            }
        });
    }
    let prefix = prefix.unwrap_or("");

    let mut display = String::with_capacity(raw.len());
    let mut strips = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        if i > 0 {
            display.push('\n');
        }
        if i > 0 && !prefix.is_empty() && !line.trim().is_empty() {
            display.push(INDENT);
            display.push_str(&line[prefix.len()..]);
            strips.push(prefix.len());
        } else {
            display.push_str(line);
            strips.push(0);
        }
    }

    FragmentView {
        fragment,
        range: shown,
        display_text: display,
        indent_prefix: prefix.to_string(),
        line_strips: strips,
        leading_skip: leading,
        trailing_take: trailing,
    }
}

impl FragmentView {
    /// Undo the indentation normalization: the document text of `range`.
    pub fn reconstruct(&self) -> String {
        let mut out = String::with_capacity(self.display_text.len());
        for (i, line) in self.display_text.split('\n').enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if self.line_strips.get(i).copied().unwrap_or(0) > 0 {
                out.push_str(&self.indent_prefix);
                out.push_str(&line[INDENT.len_utf8()..]);
            } else {
                out.push_str(line);
            }
        }
        out
    }

    /// The document text of the fragment's nodes, without pulled-in
    /// whitespace.
    pub fn node_text(&self) -> String {
        let full = self.reconstruct();
        full[self.leading_skip..full.len() - self.trailing_take].to_string()
    }

    /// Map an offset in the display text to a document offset.
    pub fn to_document(&self, display_offset: usize) -> usize {
        let mut doc = self.range.start;
        let mut seen = 0;
        for (i, line) in self.display_text.split('\n').enumerate() {
            let strip = self.line_strips.get(i).copied().unwrap_or(0);
            let line_end = seen + line.len();
            if display_offset <= line_end {
                let within = display_offset - seen;
                return if strip > 0 {
                    if within == 0 {
                        doc
                    } else {
                        doc + strip + within - INDENT.len_utf8()
                    }
                } else {
                    doc + within
                };
            }
            let doc_len = if strip > 0 { line.len() - INDENT.len_utf8() + strip } else { line.len() };
            doc += doc_len + 1;
            seen = line_end + 1;
        }
        self.range.end
    }

    /// Map a document offset into the display text. Offsets inside stripped
    /// indentation land before the indent symbol.
    pub fn to_display(&self, doc_offset: usize) -> usize {
        let target = doc_offset.clamp(self.range.start, self.range.end);
        let mut doc = self.range.start;
        let mut seen = 0;
        for (i, line) in self.display_text.split('\n').enumerate() {
            let strip = self.line_strips.get(i).copied().unwrap_or(0);
            let doc_len = if strip > 0 { line.len() - INDENT.len_utf8() + strip } else { line.len() };
            if target <= doc + doc_len {
                let within = target - doc;
                return if strip > 0 {
                    if within < strip {
                        seen
                    } else {
                        seen + within - strip + INDENT.len_utf8()
                    }
                } else {
                    seen + within
                };
            }
            doc += doc_len + 1;
            seen += line.len() + 1;
        }
        self.display_text.len()
    }
}

/// Result of restoring a selection after an update.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub fragment: FragmentId,
    pub range: Span,
    /// Every fragment covering the range, smallest first, for frontends
    /// that pick by on-screen distance.
    pub candidates: Vec<FragmentId>,
}

/// Pick the fragment for `range`: the previous one if it still covers it,
/// else the smallest covering fragment, else the root.
pub fn restore_selection(ranges: &BTreeMap<FragmentId, Span>, previous: FragmentId, range: Span) -> Selection {
    let mut covering: Vec<(usize, FragmentId)> = ranges
        .iter()
        .filter(|(_, s)| s.contains(range))
        .map(|(&id, s)| (s.len(), id))
        .collect();
    covering.sort();
    let candidates: Vec<FragmentId> = covering.iter().map(|&(_, id)| id).collect();
    let fragment = if candidates.contains(&previous) {
        previous
    } else {
        candidates.first().copied().unwrap_or(ROOT_FRAGMENT)
    };
    Selection {
        fragment,
        range,
        candidates,
    }
}

/// Live fragments of one session.
#[derive(Debug, Clone, Default)]
pub struct FragmentRegistry {
    fragments: BTreeMap<FragmentId, Fragment>,
    next: FragmentId,
}

impl FragmentRegistry {
    pub fn new() -> Self {
        let mut r = FragmentRegistry {
            fragments: BTreeMap::new(),
            next: ROOT_FRAGMENT + 1,
        };
        r.fragments.insert(
            ROOT_FRAGMENT,
            Fragment {
                id: ROOT_FRAGMENT,
                nodes: Vec::new(),
                parent_instance: None,
                depth: 0,
                whitespace: WhitespacePolicy {
                    include_left: Some(false),
                    include_right: Some(false),
                },
            },
        );
        r
    }

    /// Register a fragment, reusing the id of an identical live one.
    pub fn add(&mut self, nodes: Vec<NodeId>, parent_instance: Option<u64>, depth: u32, whitespace: WhitespacePolicy) -> FragmentId {
        if let Some(f) = self
            .fragments
            .values()
            .find(|f| f.nodes == nodes && f.parent_instance == parent_instance && f.id != ROOT_FRAGMENT)
        {
            return f.id;
        }
        let id = self.next;
        self.next += 1;
        self.fragments.insert(
            id,
            Fragment {
                id,
                nodes,
                parent_instance,
                depth,
                whitespace,
            },
        );
        id
    }

    pub fn get(&self, id: FragmentId) -> Option<&Fragment> {
        self.fragments.get(&id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fragment> {
        self.fragments.values()
    }

    pub fn len(&self) -> usize {
        self.fragments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fragments.is_empty()
    }

    /// Drop every fragment embedded by `instance`.
    pub fn remove_instance(&mut self, instance: u64) {
        self.fragments.retain(|_, f| f.parent_instance != Some(instance));
    }

    /// Keep only the fragments `keep` approves of; the root always stays.
    pub fn retain(&mut self, mut keep: impl FnMut(&Fragment) -> bool) {
        self.fragments.retain(|&id, f| id == ROOT_FRAGMENT || keep(f));
    }

    /// Drop fragments whose nodes left the tree.
    pub fn prune(&mut self, tree: &SyntaxTree) -> Vec<FragmentId> {
        let dead: Vec<FragmentId> = self
            .fragments
            .values()
            .filter(|f| f.id != ROOT_FRAGMENT && f.nodes.iter().any(|&n| !tree.contains(n)))
            .map(|f| f.id)
            .collect();
        for id in &dead {
            self.fragments.remove(id);
        }
        dead
    }

    pub fn ranges(&self, tree: &SyntaxTree, pending: &[PendingChange]) -> BTreeMap<FragmentId, Span> {
        self.fragments
            .values()
            .filter_map(|f| fragment_range(f, tree, pending).ok().map(|s| (f.id, s)))
            .collect()
    }

    /// Views of every live fragment over `text`.
    pub fn views(&self, text: &str, tree: &SyntaxTree, pending: &[PendingChange]) -> Vec<FragmentView> {
        self.fragments
            .values()
            .filter_map(|f| {
                let range = fragment_range(f, tree, pending).ok()?;
                Some(display_text(f.id, text, range, f.whitespace))
            })
            .collect()
    }
}
