use crate::grammar::{Analysis, Grammar, Kid, ListShape};
use crate::syntax::{Language, NodeId, Span, SyntaxNode, GAP};

/// The three grammar queries structured edits rely on.
pub trait GrammarAdapter {
    /// Separator of the list `node` is an element of, if any.
    fn list_info(&self, node: SyntaxNode<'_>) -> Option<String>;
    /// Where the first element goes when the list under `node` is empty.
    fn first_insert_position(&self, node: SyntaxNode<'_>) -> Option<usize>;
    fn parenthesizable(&self, node: SyntaxNode<'_>) -> bool;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item {
    pub id: NodeId,
    pub span: Span,
    pub text: String,
}

/// A list under some node, split into elements and separator tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListModel {
    pub shape: ListShape,
    pub elements: Vec<Item>,
    pub separators: Vec<Item>,
    pub first_insert: usize,
}

impl ListModel {
    /// The separator directly after element `i`, before any later element.
    pub fn separator_after(&self, i: usize) -> Option<&Item> {
        let end = self.elements[i].span.end;
        let limit = self.elements.get(i + 1).map(|e| e.span.start).unwrap_or(usize::MAX);
        self.separators
            .iter()
            .find(|s| s.span.start >= end && s.span.end <= limit)
    }
}

/// Adapter backed by the rule definitions bundled with a language.
pub struct TreeSitterAdapter {
    grammar: &'static Grammar,
}

impl TreeSitterAdapter {
    pub fn new(language: &'static Language) -> Self {
        TreeSitterAdapter {
            grammar: language.grammar(),
        }
    }

    pub fn grammar(&self) -> &'static Grammar {
        self.grammar
    }

    /// Children the matcher sees: no trivia, comments or unparsed gaps.
    pub fn kids<'t>(&self, node: SyntaxNode<'t>) -> Vec<SyntaxNode<'t>> {
        node.syntax_children().filter(|c| c.kind() != GAP).collect()
    }

    pub fn analyze(&self, node: SyntaxNode<'_>) -> Option<Analysis> {
        if node.is_error() {
            return None;
        }
        let kids = self.kids(node);
        let view: Vec<Kid<'_>> = kids
            .iter()
            .map(|k| Kid {
                kind: k.kind(),
                named: k.is_named(),
            })
            .collect();
        self.grammar.analyze(node.kind(), &view)
    }

    pub fn lists(&self, node: SyntaxNode<'_>) -> Vec<ListModel> {
        let Some(analysis) = self.analyze(node) else {
            return Vec::new();
        };
        let kids = self.kids(node);
        let item = |k: &SyntaxNode<'_>| Item {
            id: k.id(),
            span: k.span(),
            text: k.text().to_string(),
        };
        analysis
            .lists
            .into_iter()
            .map(|hit| {
                let sep = hit.shape.separator.as_str();
                let (mut elements, mut separators) = (Vec::new(), Vec::new());
                for k in &kids[hit.start..hit.end] {
                    if !sep.is_empty() && !k.is_named() && k.kind() == sep {
                        separators.push(item(k));
                    } else {
                        elements.push(item(k));
                    }
                }
                let first_insert = if hit.start > 0 {
                    kids[hit.start - 1].span().end
                } else if let Some(k) = kids.get(hit.start) {
                    k.span().start
                } else {
                    node.span().start
                };
                ListModel {
                    shape: hit.shape,
                    elements,
                    separators,
                    first_insert,
                }
            })
            .collect()
    }
}

impl GrammarAdapter for TreeSitterAdapter {
    fn list_info(&self, node: SyntaxNode<'_>) -> Option<String> {
        let parent = node.parent()?;
        self.lists(parent)
            .into_iter()
            .find(|l| l.elements.iter().any(|e| e.id == node.id()))
            .map(|l| l.shape.separator)
    }

    fn first_insert_position(&self, node: SyntaxNode<'_>) -> Option<usize> {
        self.lists(node).first().map(|l| l.first_insert)
    }

    fn parenthesizable(&self, node: SyntaxNode<'_>) -> bool {
        self.grammar.parenthesizable(node.kind())
    }
}
