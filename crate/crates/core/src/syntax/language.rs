use std::sync::OnceLock;

use crate::grammar::{Exceptions, Grammar};

use super::SyntaxError;

pub type LanguageId = &'static str;

extern "C" {
    fn tree_sitter_toy() -> *const ();
}

/// A registered object language: compiled parser plus its rule definitions.
pub struct Language {
    pub id: LanguageId,
    aliases: &'static [&'static str],
    ts: tree_sitter::Language,
    root_kind: &'static str,
    identifier_kind: &'static str,
    comment_kinds: &'static [&'static str],
    grammar_json: &'static str,
    exceptions_toml: &'static str,
    grammar: OnceLock<Grammar>,
}

impl std::fmt::Debug for Language {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Language").field("id", &self.id).finish()
    }
}

impl Language {
    pub(crate) fn ts_language(&self) -> &tree_sitter::Language {
        &self.ts
    }

    pub fn root_kind(&self) -> &'static str {
        self.root_kind
    }

    /// Node kind the grammar uses for plain identifiers.
    pub fn identifier_kind(&self) -> &'static str {
        self.identifier_kind
    }

    pub fn comment_kinds(&self) -> &'static [&'static str] {
        self.comment_kinds
    }

    /// Rule definitions, loaded from the grammar's machine-readable export.
    pub fn grammar(&self) -> &Grammar {
        self.grammar.get_or_init(|| {
            let exceptions = Exceptions::from_toml(self.exceptions_toml)
                .unwrap_or_else(|e| panic!("bundled exception table for {} is invalid: {e}", self.id));
            Grammar::from_json(self.grammar_json, exceptions)
                .unwrap_or_else(|e| panic!("bundled grammar for {} is invalid: {e}", self.id))
        })
    }
}

fn registry() -> &'static [Language] {
    static REGISTRY: OnceLock<Vec<Language>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        // SAFETY: tree_sitter_toy is the generated parser entry point compiled by build.rs.
        let toy = unsafe { tree_sitter_language::LanguageFn::from_raw(tree_sitter_toy) };
        vec![
            Language {
                id: "javascript",
                aliases: &["js"],
                ts: tree_sitter_javascript::LANGUAGE.into(),
                root_kind: "program",
                identifier_kind: "identifier",
                comment_kinds: &["comment", "html_comment"],
                grammar_json: include_str!("../../grammars/javascript/grammar.json"),
                exceptions_toml: include_str!("../../grammars/javascript/exceptions.toml"),
                grammar: OnceLock::new(),
            },
            Language {
                id: "python",
                aliases: &["py"],
                ts: tree_sitter_python::LANGUAGE.into(),
                root_kind: "module",
                identifier_kind: "identifier",
                comment_kinds: &["comment"],
                grammar_json: include_str!("../../grammars/python/grammar.json"),
                exceptions_toml: include_str!("../../grammars/python/exceptions.toml"),
                grammar: OnceLock::new(),
            },
            Language {
                id: "toy",
                aliases: &[],
                ts: toy.into(),
                root_kind: "source_file",
                identifier_kind: "identifier",
                comment_kinds: &[],
                grammar_json: include_str!("../../grammars/toy/grammar.json"),
                exceptions_toml: include_str!("../../grammars/toy/exceptions.toml"),
                grammar: OnceLock::new(),
            },
        ]
    })
}

/// Look up a registered language by id or alias.
pub fn language(id: &str) -> Result<&'static Language, SyntaxError> {
    registry()
        .iter()
        .find(|l| l.id == id || l.aliases.contains(&id))
        .ok_or_else(|| SyntaxError::UnknownLanguage(id.to_string()))
}

pub fn languages() -> impl Iterator<Item = &'static Language> {
    registry().iter()
}
