//! Documents, parsing with error recovery, node identities and ranges.
//!
//! A [`SyntaxTree`] is an immutable snapshot. Every byte of the document is
//! covered by exactly one leaf: grammar tokens, error leaves, and trivia
//! leaves for the whitespace between tokens. Concatenating the leaves in
//! preorder therefore reproduces the document text byte for byte.

mod convert;
mod language;
mod template;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use language::{language, languages, Language, LanguageId};
pub use template::{Bindings, Template, TemplateError};

/// Session-unique node identity.
pub type NodeId = u64;

/// Kind given to whitespace leaves inserted between grammar tokens.
pub const TRIVIA: &str = "@trivia";
/// Kind given to uncovered non-whitespace bytes inside a node.
pub const GAP: &str = "@text";
/// Kind tree-sitter uses for error-recovery nodes.
pub const ERROR: &str = "ERROR";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("unknown language `{0}`")]
    UnknownLanguage(String),
    #[error("invalid change {from}..{to} against text of length {len}")]
    InvalidChange { from: usize, to: usize, len: usize },
    #[error("parser failed to produce a tree")]
    ParserFailed,
}

/// Half-open byte interval `[start, end)` over UTF-8 text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn empty(at: usize) -> Self {
        Span { start: at, end: at }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn cover(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .or_else(|| s.split_once(':'))
            .ok_or_else(|| format!("expected START..END, got `{s}`"))?;
        let start = a.trim().parse::<usize>().map_err(|e| e.to_string())?;
        let end = b.trim().parse::<usize>().map_err(|e| e.to_string())?;
        if start > end {
            return Err(format!("range start {start} is after end {end}"));
        }
        Ok(Span { start, end })
    }
}

/// Replace the bytes `from..to` with `insert`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TextChange {
    pub from: usize,
    pub to: usize,
    #[serde(default)]
    pub insert: String,
}

impl TextChange {
    pub fn new(from: usize, to: usize, insert: impl Into<String>) -> Self {
        TextChange {
            from,
            to,
            insert: insert.into(),
        }
    }

    pub fn insert(at: usize, text: impl Into<String>) -> Self {
        Self::new(at, at, text)
    }

    pub fn delete(span: Span) -> Self {
        Self::new(span.start, span.end, "")
    }

    pub fn replace(span: Span, text: impl Into<String>) -> Self {
        Self::new(span.start, span.end, text)
    }

    pub fn check(&self, text: &str) -> Result<(), SyntaxError> {
        let ok = self.from <= self.to
            && self.to <= text.len()
            && text.is_char_boundary(self.from)
            && text.is_char_boundary(self.to);
        if ok {
            Ok(())
        } else {
            Err(SyntaxError::InvalidChange {
                from: self.from,
                to: self.to,
                len: text.len(),
            })
        }
    }

    pub fn apply(&self, text: &mut String) -> Result<(), SyntaxError> {
        self.check(text)?;
        text.replace_range(self.from..self.to, &self.insert);
        Ok(())
    }

    /// The change that undoes `self`, given the text `self` was applied to.
    pub fn inverse(&self, before: &str) -> TextChange {
        TextChange {
            from: self.from,
            to: self.from + self.insert.len(),
            insert: before[self.from..self.to].to_string(),
        }
    }

    /// Length difference this change introduces.
    pub fn delta(&self) -> isize {
        self.insert.len() as isize - (self.to - self.from) as isize
    }
}

/// Apply changes in order, each interpreted against the text produced by the
/// previous one.
pub fn apply_changes(text: &str, changes: &[TextChange]) -> Result<String, SyntaxError> {
    let mut out = text.to_string();
    for change in changes {
        change.apply(&mut out)?;
    }
    Ok(out)
}

/// Flat node record. Trees store nodes in preorder; the root is index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeData {
    pub id: NodeId,
    pub kind: Arc<str>,
    pub named: bool,
    pub error: bool,
    pub missing: bool,
    pub span: Span,
    pub parent: Option<u32>,
    pub children: Vec<u32>,
}

/// Immutable program tree snapshot.
#[derive(Debug, Clone)]
pub struct SyntaxTree {
    language: &'static Language,
    version: u64,
    next_id: NodeId,
    text: Arc<str>,
    nodes: Arc<Vec<NodeData>>,
    index: Arc<HashMap<NodeId, u32>>,
}

impl PartialEq for SyntaxTree {
    fn eq(&self, other: &Self) -> bool {
        self.language.id == other.language.id
            && self.version == other.version
            && self.next_id == other.next_id
            && self.text == other.text
            && self.nodes == other.nodes
    }
}

impl Eq for SyntaxTree {}

impl SyntaxTree {
    pub(crate) fn from_parts(
        language: &'static Language,
        version: u64,
        next_id: NodeId,
        text: Arc<str>,
        nodes: Vec<NodeData>,
    ) -> Self {
        let index = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.id, i as u32))
            .collect();
        SyntaxTree {
            language,
            version,
            next_id,
            text,
            nodes: Arc::new(nodes),
            index: Arc::new(index),
        }
    }

    pub fn language(&self) -> &'static Language {
        self.language
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    /// First id the next allocation will hand out.
    pub fn next_id(&self) -> NodeId {
        self.next_id
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn root(&self) -> SyntaxNode<'_> {
        SyntaxNode { tree: self, idx: 0 }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> Option<SyntaxNode<'_>> {
        self.index
            .get(&id)
            .map(|&idx| SyntaxNode { tree: self, idx })
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.index.contains_key(&id)
    }

    pub(crate) fn data(&self) -> &[NodeData] {
        &self.nodes
    }

    pub(crate) fn at(&self, idx: u32) -> SyntaxNode<'_> {
        SyntaxNode { tree: self, idx }
    }

    /// All nodes in preorder.
    pub fn preorder(&self) -> impl Iterator<Item = SyntaxNode<'_>> + '_ {
        (0..self.nodes.len() as u32).map(move |idx| SyntaxNode { tree: self, idx })
    }

    pub fn has_errors(&self) -> bool {
        self.nodes.iter().any(|n| n.error)
    }

    /// Kinds, flags, leaf texts and child order agree; ids are ignored.
    pub fn structurally_eq(&self, other: &SyntaxTree) -> bool {
        self.root().structurally_eq(&other.root())
    }

    /// Structural equality plus equal node ids everywhere.
    pub fn identical(&self, other: &SyntaxTree) -> bool {
        self.text == other.text && self.nodes == other.nodes
    }

    /// Deepest non-trivia node whose span contains `span`.
    ///
    /// A zero-width query on a boundary between two nodes resolves to the
    /// node that starts there, falling back to the node that ends there.
    pub fn smallest_node_containing(&self, span: Span) -> SyntaxNode<'_> {
        let mut current = self.root();
        'descend: loop {
            let children: Vec<_> = current.children().filter(|c| !c.is_trivia()).collect();
            if span.is_empty() {
                let at = span.start;
                if let Some(c) = children
                    .iter()
                    .find(|c| c.span().start <= at && at < c.span().end)
                {
                    current = *c;
                    continue 'descend;
                }
                if let Some(c) = children
                    .iter()
                    .find(|c| c.span().start == at && c.span().is_empty())
                {
                    current = *c;
                    continue 'descend;
                }
                if let Some(c) = children.iter().rev().find(|c| c.span().end == at) {
                    current = *c;
                    continue 'descend;
                }
                return current;
            }
            for c in &children {
                if c.span().contains(span) {
                    current = *c;
                    continue 'descend;
                }
            }
            return current;
        }
    }

    /// Render the tree as an indented outline; handy in failing assertions.
    pub fn outline(&self) -> String {
        let mut out = String::new();
        fn walk(n: SyntaxNode<'_>, depth: usize, out: &mut String) {
            use std::fmt::Write;
            if n.is_trivia() {
                return;
            }
            let _ = write!(out, "{:indent$}{} #{} {}", "", n.kind(), n.id(), n.span(), indent = depth * 2);
            if n.is_leaf() {
                let _ = write!(out, " {:?}", n.text());
            }
            out.push('\n');
            for c in n.children() {
                walk(c, depth + 1, out);
            }
        }
        walk(self.root(), 0, &mut out);
        out
    }
}

/// Borrowed view of one node in a [`SyntaxTree`].
#[derive(Clone, Copy)]
pub struct SyntaxNode<'t> {
    tree: &'t SyntaxTree,
    idx: u32,
}

impl fmt::Debug for SyntaxNode<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}@{} {:?}", self.kind(), self.id(), self.span(), self.text())
    }
}

impl PartialEq for SyntaxNode<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.tree, other.tree) && self.idx == other.idx
    }
}

impl Eq for SyntaxNode<'_> {}

impl<'t> SyntaxNode<'t> {
    fn data(&self) -> &'t NodeData {
        &self.tree.nodes[self.idx as usize]
    }

    pub fn tree(&self) -> &'t SyntaxTree {
        self.tree
    }

    pub fn id(&self) -> NodeId {
        self.data().id
    }

    pub fn kind(&self) -> &'t str {
        &self.data().kind
    }

    pub fn span(&self) -> Span {
        self.data().span
    }

    pub fn text(&self) -> &'t str {
        let span = self.span();
        &self.tree.text[span.start..span.end]
    }

    pub fn is_named(&self) -> bool {
        self.data().named
    }

    /// Error-recovery node: an ERROR node or a zero-width missing token.
    pub fn is_error(&self) -> bool {
        self.data().error
    }

    pub fn is_missing(&self) -> bool {
        self.data().missing
    }

    pub fn is_trivia(&self) -> bool {
        &*self.data().kind == TRIVIA
    }

    pub fn is_leaf(&self) -> bool {
        self.data().children.is_empty()
    }

    pub fn is_root(&self) -> bool {
        self.idx == 0
    }

    /// Preorder position inside the tree.
    pub fn preorder_index(&self) -> usize {
        self.idx as usize
    }

    pub fn parent(&self) -> Option<SyntaxNode<'t>> {
        self.data().parent.map(|idx| self.tree.at(idx))
    }

    pub fn children(&self) -> impl DoubleEndedIterator<Item = SyntaxNode<'t>> + 't {
        let tree = self.tree;
        self.data().children.iter().map(move |&idx| tree.at(idx))
    }

    /// Children without trivia and comments.
    pub fn syntax_children(&self) -> impl DoubleEndedIterator<Item = SyntaxNode<'t>> + 't {
        let extras = self.tree.language.comment_kinds();
        self.children()
            .filter(move |c| !c.is_trivia() && !extras.contains(&c.kind()))
    }

    pub fn child_count(&self) -> usize {
        self.data().children.len()
    }

    /// Position among all children of the parent, trivia included.
    pub fn index_in_parent(&self) -> Option<usize> {
        let parent = self.parent()?;
        parent.data().children.iter().position(|&i| i == self.idx)
    }

    pub fn prev_sibling(&self) -> Option<SyntaxNode<'t>> {
        let parent = self.parent()?;
        let pos = self.index_in_parent()?;
        pos.checked_sub(1)
            .map(|p| self.tree.at(parent.data().children[p]))
    }

    pub fn next_sibling(&self) -> Option<SyntaxNode<'t>> {
        let parent = self.parent()?;
        let pos = self.index_in_parent()?;
        parent
            .data()
            .children
            .get(pos + 1)
            .map(|&i| self.tree.at(i))
    }

    pub fn ancestors(&self) -> impl Iterator<Item = SyntaxNode<'t>> + 't {
        std::iter::successors(self.parent(), |n| n.parent())
    }

    pub fn is_descendant_of(&self, ancestor: NodeId) -> bool {
        self.id() == ancestor || self.ancestors().any(|a| a.id() == ancestor)
    }

    /// This node and all descendants, preorder.
    pub fn descendants(&self) -> impl Iterator<Item = SyntaxNode<'t>> + 't {
        let tree = self.tree;
        let start = self.idx;
        let end = self.subtree_end();
        (start..end).map(move |idx| tree.at(idx))
    }

    /// One past the last preorder index of this subtree.
    fn subtree_end(&self) -> u32 {
        let mut n = *self;
        loop {
            match n.data().children.last() {
                Some(&last) => n = self.tree.at(last),
                None => return n.idx + 1,
            }
        }
    }

    pub fn subtree_size(&self) -> usize {
        (self.subtree_end() - self.idx) as usize
    }

    /// Same shape, kinds and leaf texts; trivia is compared too.
    pub fn structurally_eq(&self, other: &SyntaxNode<'_>) -> bool {
        let (a, b) = (self.data(), other.data());
        if a.kind != b.kind
            || a.named != b.named
            || a.error != b.error
            || a.children.len() != b.children.len()
        {
            return false;
        }
        if a.children.is_empty() {
            return self.text() == other.text();
        }
        self.children()
            .zip(other.children())
            .all(|(x, y)| x.structurally_eq(&y))
    }

    /// Structural equality that skips trivia and comments.
    pub fn syntax_eq(&self, other: &SyntaxNode<'_>) -> bool {
        if self.kind() != other.kind() || self.is_error() != other.is_error() {
            return false;
        }
        if self.is_error() || (self.is_leaf() && other.is_leaf()) {
            return self.text() == other.text();
        }
        let a: Vec<_> = self.syntax_children().collect();
        let b: Vec<_> = other.syntax_children().collect();
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x.syntax_eq(y))
    }
}

/// Parse `text` with the grammar registered as `language_id`. Ids start at 1.
pub fn parse_document(text: &str, language_id: &str) -> Result<SyntaxTree, SyntaxError> {
    let language = language(language_id)?;
    parse_with(language, text, 1, 0)
}

/// Parse with an explicit first id and version.
pub fn parse_with(
    language: &'static Language,
    text: &str,
    first_id: NodeId,
    version: u64,
) -> Result<SyntaxTree, SyntaxError> {
    let nodes = convert::parse_nodes(language, text)?;
    let mut next = first_id;
    let nodes = nodes
        .into_iter()
        .map(|raw| {
            let id = next;
            next += 1;
            raw.into_node(id)
        })
        .collect();
    Ok(SyntaxTree::from_parts(
        language,
        version,
        next,
        Arc::from(text),
        nodes,
    ))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn leaves(tree: &SyntaxTree) -> String {
        tree.preorder()
            .filter(|n| n.is_leaf())
            .map(|n| n.text())
            .collect()
    }

    #[test]
    fn empty_document_has_childless_root() {
        let tree = parse_document("", "javascript").unwrap();
        assert_eq!(tree.root().child_count(), 0);
        assert_eq!(tree.root().span(), Span::new(0, 0));
    }

    #[test]
    fn two_top_level_statements() {
        let tree = parse_document("var a = 5\nb", "javascript").unwrap();
        assert_eq!(tree.root().syntax_children().count(), 2);
    }

    #[test]
    fn incomplete_binary_has_error_node() {
        let tree = parse_document("2 +", "javascript").unwrap();
        assert!(tree.has_errors());
        assert!(tree.preorder().any(|n| n.kind() == "number" && n.text() == "2"));
    }

    #[test]
    fn unknown_language_is_rejected() {
        assert_eq!(
            parse_document("x", "cobol").unwrap_err(),
            SyntaxError::UnknownLanguage("cobol".into())
        );
    }

    #[test]
    fn leaves_reproduce_text_with_surrounding_whitespace() {
        for (text, lang) in [
            ("  2  ", "javascript"),
            ("\n\nfoo(1, 2)\n// hi\n", "javascript"),
            ("def f(x):\n    return x\n\n", "python"),
            ("void main(int, char,);\n[1, 2]", "toy"),
            ("x = \"é\" + 'ü'", "python"),
        ] {
            let tree = parse_document(text, lang).unwrap();
            assert_eq!(leaves(&tree), text, "{}", tree.outline());
            assert_eq!(tree.root().span(), Span::new(0, text.len()));
        }
    }

    #[test]
    fn ids_are_unique_and_monotone() {
        let tree = parse_document("f(a, b)", "javascript").unwrap();
        let ids: Vec<_> = tree.preorder().map(|n| n.id()).collect();
        assert!(ids.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(tree.next_id(), *ids.last().unwrap() + 1);
    }

    #[test]
    fn smallest_node_examples() {
        let tree = parse_document("2 + 3", "javascript").unwrap();
        let n = tree.smallest_node_containing(Span::new(0, 1));
        assert_eq!((n.kind(), n.text()), ("number", "2"));
        let n = tree.smallest_node_containing(Span::new(0, 3));
        assert_eq!(n.kind(), "binary_expression");
        let n = tree.smallest_node_containing(Span::empty(0));
        assert_eq!((n.kind(), n.text()), ("number", "2"));
        // caret after the last token resolves to the node ending there
        let n = tree.smallest_node_containing(Span::empty(5));
        assert_eq!((n.kind(), n.text()), ("number", "3"));
    }

    #[test]
    fn change_validation() {
        let mut s = String::from("héllo");
        assert!(TextChange::insert(2, "x").apply(&mut s).is_err());
        assert!(TextChange::new(3, 9, "").apply(&mut s).is_err());
        TextChange::new(0, 1, "H").apply(&mut s).unwrap();
        assert_eq!(s, "Héllo");
        let before = "abc".to_string();
        let c = TextChange::new(1, 2, "XYZ");
        let mut after = before.clone();
        c.apply(&mut after).unwrap();
        c.inverse(&before).apply(&mut after).unwrap();
        assert_eq!(after, before);
    }

    #[test]
    fn span_parses_both_notations() {
        assert_eq!("3..7".parse::<Span>().unwrap(), Span::new(3, 7));
        assert_eq!("3:7".parse::<Span>().unwrap(), Span::new(3, 7));
        assert!("7..3".parse::<Span>().is_err());
    }
}
