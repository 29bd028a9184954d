use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::{language, parse_with, NodeId, Span, SyntaxError, SyntaxNode, SyntaxTree};

const PREFIX: &str = "__vi_tmpl_";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TemplateError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("template `{0}` does not parse without errors")]
    Unparseable(String),
    #[error("placeholder `${0}` does not correspond to a single node")]
    Unanchored(String),
    #[error("template is empty")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placeholder {
    pub name: String,
    /// `$_kind` placeholders only bind nodes of that kind.
    pub kind: Option<String>,
}

/// A source pattern with `$name` and `$_kind` holes.
#[derive(Debug, Clone)]
pub struct Template {
    source: String,
    placeholders: Vec<Placeholder>,
    tree: SyntaxTree,
    root: u32,
    holes: HashMap<u32, usize>,
}

/// Placeholder name to bound node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings<'t> {
    map: BTreeMap<String, SyntaxNode<'t>>,
}

impl<'t> Bindings<'t> {
    pub fn get(&self, name: &str) -> Option<SyntaxNode<'t>> {
        self.map.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, SyntaxNode<'t>)> + '_ {
        self.map.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn ids(&self) -> BTreeMap<String, NodeId> {
        self.map.iter().map(|(k, v)| (k.clone(), v.id())).collect()
    }
}

fn encode(source: &str) -> (String, Vec<Placeholder>) {
    let mut out = String::with_capacity(source.len() + 16);
    let mut placeholders: Vec<Placeholder> = Vec::new();
    let mut rest = source;
    while let Some(pos) = rest.find('$') {
        out.push_str(&rest[..pos]);
        let after = &rest[pos + 1..];
        let len = after
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(after.len());
        let raw = &after[..len];
        if raw.is_empty() || raw == "_" {
            out.push('$');
            rest = after;
            continue;
        }
        let placeholder = match raw.strip_prefix('_') {
            Some(kind) => Placeholder {
                name: kind.to_string(),
                kind: Some(kind.to_string()),
            },
            None => Placeholder {
                name: raw.to_string(),
                kind: None,
            },
        };
        if !placeholders.iter().any(|p| p.name == placeholder.name) {
            placeholders.push(placeholder);
        }
        out.push_str(PREFIX);
        out.push_str(raw);
        rest = &after[len..];
    }
    out.push_str(rest);
    (out, placeholders)
}

impl Template {
    /// Parse `source` in the grammar `language_id`. Fails if the source with
    /// its placeholders substituted does not parse cleanly.
    pub fn new(source: &str, language_id: &str) -> Result<Template, TemplateError> {
        let trimmed = source.trim();
        if trimmed.is_empty() {
            return Err(TemplateError::Empty);
        }
        let lang = language(language_id)?;
        let (encoded, placeholders) = encode(trimmed);
        let tree = parse_with(lang, &encoded, 1, 0)?;
        if tree.has_errors() {
            return Err(TemplateError::Unparseable(source.to_string()));
        }

        let mut holes = HashMap::new();
        for (i, p) in placeholders.iter().enumerate() {
            let raw = match &p.kind {
                Some(k) => format!("{PREFIX}_{k}"),
                None => format!("{PREFIX}{}", p.name),
            };
            let mut found = false;
            for leaf in tree.preorder().filter(|n| n.is_leaf() && n.text() == raw) {
                holes.insert(hoist(leaf).idx, i);
                found = true;
            }
            if !found {
                return Err(TemplateError::Unanchored(p.name.clone()));
            }
        }

        let mut root = tree.root();
        loop {
            let kids: Vec<_> = root.syntax_children().collect();
            if kids.len() != 1 || holes.contains_key(&root.idx) {
                break;
            }
            let child = kids[0];
            if child.text() != root.text().trim() || child.is_leaf() && !holes.contains_key(&child.idx) {
                break;
            }
            root = child;
        }
        if root.is_root() {
            return Err(TemplateError::Unparseable(source.to_string()));
        }
        let root = root.idx;

        Ok(Template {
            source: source.to_string(),
            placeholders,
            tree,
            root,
            holes,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn placeholders(&self) -> &[Placeholder] {
        &self.placeholders
    }

    pub fn language_id(&self) -> &'static str {
        self.tree.language().id
    }

    /// Kind of the node this template matches.
    pub fn root_kind(&self) -> &str {
        self.tree.at(self.root).kind()
    }

    /// Structural match of `node` against the template. Trivia and comments
    /// are ignored; error nodes are compared by text.
    pub fn matches<'t>(&self, node: SyntaxNode<'t>) -> Option<Bindings<'t>> {
        if node.tree().language().id != self.tree.language().id {
            return None;
        }
        let mut bindings = Bindings::default();
        self.match_node(self.tree.at(self.root), node, &mut bindings)
            .then_some(bindings)
    }

    fn match_node<'t>(&self, pattern: SyntaxNode<'_>, node: SyntaxNode<'t>, out: &mut Bindings<'t>) -> bool {
        if let Some(&i) = self.holes.get(&pattern.idx) {
            let p = &self.placeholders[i];
            if node.is_trivia() || !node.is_named() {
                return false;
            }
            if let Some(kind) = &p.kind {
                let k = node.kind();
                if k != kind && !k.ends_with(&format!("_{kind}")) {
                    return false;
                }
            }
            return match out.map.get(&p.name) {
                Some(prev) => prev.syntax_eq(&node),
                None => {
                    out.map.insert(p.name.clone(), node);
                    true
                }
            };
        }
        if pattern.kind() != node.kind() || pattern.is_error() != node.is_error() {
            return false;
        }
        if node.is_error() {
            return pattern.text() == node.text();
        }
        let a: Vec<_> = pattern.syntax_children().collect();
        let b: Vec<_> = node.syntax_children().collect();
        if a.is_empty() && b.is_empty() {
            return pattern.text() == node.text();
        }
        a.len() == b.len() && a.iter().zip(b).all(|(p, n)| self.match_node(*p, n, out))
    }

    /// Template text with each placeholder replaced by the given source.
    /// Missing entries keep the encoded placeholder.
    pub fn instantiate(&self, values: &HashMap<String, String>) -> String {
        let base = self.tree.at(self.root).span();
        let mut holes: Vec<(Span, &str)> = self
            .holes
            .iter()
            .filter_map(|(&idx, &i)| {
                values
                    .get(&self.placeholders[i].name)
                    .map(|v| (self.tree.at(idx).span(), v.as_str()))
            })
            .collect();
        holes.sort_by_key(|(s, _)| s.start);
        let text = self.tree.text();
        let mut out = String::new();
        let mut pos = base.start;
        for (span, value) in holes {
            out.push_str(&text[pos..span.start]);
            out.push_str(value);
            pos = span.end;
        }
        out.push_str(&text[pos..base.end]);
        out
    }
}

/// A placeholder written between matching delimiters (a string body) stands
/// for the whole delimited node.
fn hoist(leaf: SyntaxNode<'_>) -> SyntaxNode<'_> {
    let mut node = leaf;
    while let Some(parent) = node.parent() {
        let kids: Vec<_> = parent.syntax_children().collect();
        if kids.len() == 3
            && kids[1] == node
            && kids[0].is_leaf()
            && kids[2].is_leaf()
            && kids[0].text() == kids[2].text()
            && !parent.is_root()
        {
            node = parent;
        } else {
            break;
        }
    }
    node
}
