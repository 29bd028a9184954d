//! Tool definitions as data.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use super::{ActionSpec, ConstraintKind, DisplayType, Extraction, Query, ToolDefinition, ViewItem};
use crate::syntax::{language, Template, TemplateError};

const BUNDLED: &str = include_str!("../../tools/bundled.toml");

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("manifest is not valid: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("tool {tool}: {source}")]
    Template {
        tool: String,
        #[source]
        source: TemplateError,
    },
    #[error("tool {0}: exactly one of template, identifier_prefix and top_level is required")]
    Query(String),
    #[error("tool {tool}: unknown constraint `{constraint}`")]
    Constraint { tool: String, constraint: String },
    #[error("tool {tool}: unknown language `{language}`")]
    Language { tool: String, language: String },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ToolEntry {
    id: String,
    display: DisplayType,
    #[serde(default)]
    languages: Vec<String>,
    template: Option<String>,
    identifier_prefix: Option<String>,
    #[serde(default)]
    top_level: bool,
    #[serde(default = "default_constraints")]
    constraints: Vec<String>,
    #[serde(default)]
    streams: Vec<String>,
    fragment_tools: Option<Vec<String>>,
    #[serde(default)]
    view: Vec<ViewItem>,
    #[serde(default)]
    actions: BTreeMap<String, ActionSpec>,
    #[serde(default = "yes")]
    default_enabled: bool,
}

fn default_constraints() -> Vec<String> {
    vec!["query".into()]
}

fn yes() -> bool {
    true
}

#[derive(Debug, Deserialize)]
struct File {
    #[serde(default)]
    tool: Vec<ToolEntry>,
}

/// Parsed manifest: definitions plus which ones sessions enable by default.
#[derive(Debug, Clone)]
pub struct Manifest {
    pub definitions: Vec<ToolDefinition>,
    pub default_enabled: Vec<String>,
}

impl Manifest {
    pub fn from_toml(src: &str) -> Result<Manifest, ManifestError> {
        let file: File = toml::from_str(src)?;
        let mut definitions = Vec::new();
        let mut default_enabled = Vec::new();
        for entry in file.tool {
            if entry.default_enabled {
                default_enabled.push(entry.id.clone());
            }
            definitions.push(entry.build()?);
        }
        Ok(Manifest {
            definitions,
            default_enabled,
        })
    }

    /// Definitions with the given ids, in manifest order.
    pub fn select(&self, ids: &[String]) -> Vec<ToolDefinition> {
        self.definitions
            .iter()
            .filter(|d| ids.contains(&d.id))
            .cloned()
            .collect()
    }

    pub fn defaults(&self) -> Vec<ToolDefinition> {
        self.select(&self.default_enabled)
    }
}

/// The tools shipped with the engine.
pub fn bundled() -> Manifest {
    Manifest::from_toml(BUNDLED).expect("bundled tool manifest is valid")
}

impl ToolEntry {
    fn build(self) -> Result<ToolDefinition, ManifestError> {
        let query = self.query()?;
        let mut constraints = Vec::new();
        for c in &self.constraints {
            constraints.push(match c.as_str() {
                "query" => ConstraintKind::QueryMatches,
                "text" => ConstraintKind::TextUnchanged,
                "top-level" => ConstraintKind::TopLevel,
                "present" => ConstraintKind::Present,
                other => {
                    return Err(ManifestError::Constraint {
                        tool: self.id.clone(),
                        constraint: other.to_string(),
                    })
                }
            });
        }
        Ok(ToolDefinition {
            id: self.id,
            display: self.display,
            query,
            constraints,
            view: self.view,
            actions: self.actions,
            fragment_scope: self.fragment_tools,
            streams: self.streams,
        })
    }

    fn query(&self) -> Result<Query, ManifestError> {
        for l in &self.languages {
            if language(l).is_err() {
                return Err(ManifestError::Language {
                    tool: self.id.clone(),
                    language: l.clone(),
                });
            }
        }
        let languages = self.languages.clone();
        let in_scope = move |lang: &str| languages.is_empty() || languages.iter().any(|l| l == lang);
        match (&self.template, &self.identifier_prefix, self.top_level) {
            (Some(src), None, false) => {
                let mut templates = Vec::new();
                for l in &self.languages {
                    let t = Template::new(src, l).map_err(|source| ManifestError::Template {
                        tool: self.id.clone(),
                        source,
                    })?;
                    templates.push(Arc::new(t));
                }
                Ok(Arc::new(move |node| {
                    let lang = node.tree().language().id;
                    let t = templates.iter().find(|t| t.language_id() == lang)?;
                    let b = t.matches(node)?;
                    Some(Extraction {
                        nodes: b.ids(),
                        scalars: BTreeMap::new(),
                    })
                }))
            }
            (None, Some(prefix), false) => {
                let prefix = prefix.clone();
                Ok(Arc::new(move |node| {
                    let lang = node.tree().language();
                    if !in_scope(lang.id) || node.kind() != lang.identifier_kind() {
                        return None;
                    }
                    let suffix = node.text().strip_prefix(prefix.as_str())?;
                    Some(Extraction {
                        nodes: BTreeMap::from([("node".to_string(), node.id())]),
                        scalars: BTreeMap::from([("label".to_string(), suffix.replace('_', " "))]),
                    })
                }))
            }
            (None, None, true) => Ok(Arc::new(move |node| {
                let top = node.is_named()
                    && !node.is_trivia()
                    && node.parent().is_some_and(|p| p.is_root())
                    && !node.tree().language().comment_kinds().contains(&node.kind());
                (top && in_scope(node.tree().language().id)).then(|| Extraction {
                    nodes: BTreeMap::from([("node".to_string(), node.id())]),
                    scalars: BTreeMap::new(),
                })
            })),
            _ => Err(ManifestError::Query(self.id.clone())),
        }
    }
}
