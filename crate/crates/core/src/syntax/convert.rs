use std::collections::HashMap;
use std::sync::Arc;

use super::{Language, NodeData, NodeId, Span, SyntaxError, GAP, TRIVIA};

/// A parsed node before identity assignment.
#[derive(Debug, Clone)]
pub(crate) struct RawNode {
    pub kind: Arc<str>,
    pub named: bool,
    pub error: bool,
    pub missing: bool,
    pub span: Span,
    pub parent: Option<u32>,
    pub children: Vec<u32>,
}

impl RawNode {
    pub fn into_node(self, id: NodeId) -> NodeData {
        NodeData {
            id,
            kind: self.kind,
            named: self.named,
            error: self.error,
            missing: self.missing,
            span: self.span,
            parent: self.parent,
            children: self.children,
        }
    }
}

struct Builder<'a> {
    text: &'a str,
    nodes: Vec<RawNode>,
    kinds: HashMap<&'static str, Arc<str>>,
}

impl<'a> Builder<'a> {
    fn kind(&mut self, kind: &'static str) -> Arc<str> {
        self.kinds
            .entry(kind)
            .or_insert_with(|| Arc::from(kind))
            .clone()
    }

    fn push(&mut self, node: RawNode) -> u32 {
        let idx = self.nodes.len() as u32;
        if let Some(parent) = node.parent {
            self.nodes[parent as usize].children.push(idx);
        }
        self.nodes.push(node);
        idx
    }

    fn gap(&mut self, parent: u32, span: Span) {
        let text = &self.text[span.start..span.end];
        let kind = if text.chars().all(char::is_whitespace) {
            TRIVIA
        } else {
            GAP
        };
        let kind = self.kind(kind);
        self.push(RawNode {
            kind,
            named: false,
            error: false,
            missing: false,
            span,
            parent: Some(parent),
            children: Vec::new(),
        });
    }

    /// Convert `children` into child nodes of `parent`, covering `span` fully.
    fn fill(&mut self, parent: u32, children: &[tree_sitter::Node<'_>], span: Span) {
        let mut pos = span.start;
        for child in children {
            let start = child.start_byte().clamp(pos, span.end);
            let end = child.end_byte().clamp(start, span.end);
            if start > pos {
                self.gap(parent, Span::new(pos, start));
            }
            self.convert(*child, Span::new(start, end), parent);
            pos = end;
        }
        if pos < span.end {
            self.gap(parent, Span::new(pos, span.end));
        }
    }

    fn convert(&mut self, node: tree_sitter::Node<'_>, span: Span, parent: u32) {
        let kind = self.kind(node.kind());
        let missing = node.is_missing();
        let error = missing || node.is_error();
        let mut cursor = node.walk();
        let children: Vec<_> = if missing {
            Vec::new()
        } else {
            node.children(&mut cursor).collect()
        };
        let idx = self.push(RawNode {
            kind,
            named: node.is_named(),
            error,
            missing,
            span,
            parent: Some(parent),
            children: Vec::new(),
        });
        if !children.is_empty() {
            self.fill(idx, &children, span);
        }
    }
}

/// Parse `text` into preorder raw nodes whose leaves tile the whole text.
///
/// The root always has the grammar's root kind and spans the whole document;
/// a parse that fails outright shows up as one ERROR child of that root.
pub(crate) fn parse_nodes(
    language: &'static Language,
    text: &str,
) -> Result<Vec<RawNode>, SyntaxError> {
    let mut parser = tree_sitter::Parser::new();
    parser
        .set_language(language.ts_language())
        .map_err(|_| SyntaxError::ParserFailed)?;
    let tree = parser.parse(text, None).ok_or(SyntaxError::ParserFailed)?;
    let ts_root = tree.root_node();

    let mut b = Builder {
        text,
        nodes: Vec::new(),
        kinds: HashMap::new(),
    };
    let root_kind = b.kind(language.root_kind());
    let whole = Span::new(0, text.len());
    let root = b.push(RawNode {
        kind: root_kind,
        named: true,
        error: false,
        missing: false,
        span: whole,
        parent: None,
        children: Vec::new(),
    });
    if ts_root.kind() == language.root_kind() {
        let mut cursor = ts_root.walk();
        let children: Vec<_> = ts_root.children(&mut cursor).collect();
        b.fill(root, &children, whole);
    } else {
        b.fill(root, &[ts_root], whole);
    }
    Ok(b.nodes)
}
