//! Headless hybrid structured editing.
//!
//! Programming tools get a continuously valid program tree with stable node
//! identities while the user keeps editing plain text. Textual edits are
//! parsed, diffed against the last accepted tree and validated against the
//! constraints declared by live tools; violating edits freeze the tree until
//! the user reconciles, force-applies or reverts them.

pub mod diff;
pub mod edit;
pub mod fragment;
pub mod grammar;
pub mod instrument;
pub mod sandbox;
pub mod service;
pub mod session;
pub mod syntax;
pub mod tools;
pub mod transaction;

pub use diff::{EditOp, EditScript};
pub use syntax::{NodeId, Span, SyntaxNode, SyntaxTree, TextChange};
