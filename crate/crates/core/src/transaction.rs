//! Text transactions over an identity-stable tree.
//!
//! Text always advances with the user's changes. The tree only advances when
//! the edit script from the last valid tree to the new text passes every
//! registered constraint; otherwise the tree stays frozen and the changes
//! queue up as pending until a later edit reconciles them, the user
//! force-applies them, or they are reverted.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diff::{apply_edit_script, compute_edit_script, rollback, DiffError, EditScript};
use crate::syntax::{NodeId, SyntaxError, SyntaxTree, TextChange};

/// Identity of whoever registered a constraint (a tool instance).
pub type OwnerId = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TxError {
    #[error(transparent)]
    InvalidChange(#[from] SyntaxError),
    #[error("there are no pending changes to revert")]
    NothingToRevert,
    #[error(transparent)]
    Diff(#[from] DiffError),
}

/// What the author of a change meant beyond the text itself.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intents {
    /// Nodes the change deliberately deletes; constraints may let them go.
    #[serde(default, rename = "intentDeleteNodes")]
    pub delete_nodes: BTreeSet<NodeId>,
    /// The user keeps typing where the change ended; sessions report that
    /// position as a caret hint.
    #[serde(default, rename = "requireContinueInput")]
    pub require_continue_input: bool,
}

impl Intents {
    pub fn deleting(nodes: impl IntoIterator<Item = NodeId>) -> Self {
        Intents {
            delete_nodes: nodes.into_iter().collect(),
            require_continue_input: false,
        }
    }

    pub fn union(&mut self, other: &Intents) {
        self.delete_nodes.extend(other.delete_nodes.iter().copied());
        self.require_continue_input |= other.require_continue_input;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendingChange {
    pub change: TextChange,
    pub intents: Intents,
}

/// Everything a constraint predicate gets to look at.
pub struct ConstraintInput<'a> {
    pub script: &'a EditScript,
    /// The tree before the script.
    pub old_tree: &'a SyntaxTree,
    /// The tree the script would produce.
    pub new_tree: &'a SyntaxTree,
    /// Union of delete intents over all pending and new changes.
    pub intent_delete: &'a BTreeSet<NodeId>,
}

pub type Predicate = Arc<dyn Fn(&ConstraintInput<'_>) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct Constraint {
    pub owner: OwnerId,
    pub name: String,
    pub predicate: Predicate,
}

impl std::fmt::Debug for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Constraint")
            .field("owner", &self.owner)
            .field("name", &self.name)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Accepted,
    Frozen,
    ForceApplied,
    Reverted,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Violations {
    /// Owners whose constraints failed, in registration order, deduplicated.
    pub owners: Vec<OwnerId>,
    /// The new text parsed to nothing but an error node.
    pub degenerate: bool,
}

impl Violations {
    pub fn is_empty(&self) -> bool {
        self.owners.is_empty() && !self.degenerate
    }
}

#[derive(Debug, Clone)]
pub struct ApplyReport {
    pub outcome: Outcome,
    pub violations: Violations,
    /// The script that was applied or rejected.
    pub script: EditScript,
    /// The accepted change set included pending changes.
    pub reconciled: bool,
    /// Intents accumulated over the whole change set.
    pub intents: Intents,
}

/// A document's text, last valid tree and pending changes.
#[derive(Debug, Clone)]
pub struct Transactions {
    text: String,
    tree: SyntaxTree,
    pending: Vec<PendingChange>,
    constraints: Vec<Constraint>,
}

impl Transactions {
    pub fn new(tree: SyntaxTree) -> Self {
        Transactions {
            text: tree.text().to_string(),
            tree,
            pending: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Last valid tree; pinned while frozen.
    pub fn tree(&self) -> &SyntaxTree {
        &self.tree
    }

    pub fn pending(&self) -> &[PendingChange] {
        &self.pending
    }

    pub fn is_frozen(&self) -> bool {
        !self.pending.is_empty()
    }

    pub fn register(&mut self, owner: OwnerId, name: impl Into<String>, predicate: Predicate) {
        self.constraints.push(Constraint {
            owner,
            name: name.into(),
            predicate,
        });
    }

    pub fn deregister(&mut self, owner: OwnerId) {
        self.constraints.retain(|c| c.owner != owner);
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Owners with at least one registered constraint.
    pub fn owners(&self) -> BTreeSet<OwnerId> {
        self.constraints.iter().map(|c| c.owner).collect()
    }

    /// Check `script`, already applied as `new_tree`, against every
    /// constraint. A panicking predicate counts as a violation.
    pub fn validate(&self, script: &EditScript, new_tree: &SyntaxTree, intents: &Intents) -> Violations {
        let input = ConstraintInput {
            script,
            old_tree: &self.tree,
            new_tree,
            intent_delete: &intents.delete_nodes,
        };
        let mut owners = Vec::new();
        for c in &self.constraints {
            let ok = match catch_unwind(AssertUnwindSafe(|| (c.predicate)(&input))) {
                Ok(ok) => ok,
                Err(_) => {
                    log::warn!("constraint {} of {} panicked", c.name, c.owner);
                    false
                }
            };
            if !ok && !owners.contains(&c.owner) {
                owners.push(c.owner);
            }
        }
        Violations {
            owners,
            degenerate: script.degenerate,
        }
    }

    /// Apply `changes` (each relative to the text left by the previous one).
    pub fn apply_changes(
        &mut self,
        changes: &[TextChange],
        intents: Intents,
        force: bool,
    ) -> Result<ApplyReport, TxError> {
        let mut text = self.text.clone();
        for change in changes {
            change.apply(&mut text)?;
        }
        self.text = text;
        let new_pending: Vec<PendingChange> = changes
            .iter()
            .map(|c| PendingChange {
                change: c.clone(),
                intents: intents.clone(),
            })
            .collect();

        let mut all = Intents::default();
        for p in self.pending.iter().chain(&new_pending) {
            all.union(&p.intents);
        }
        all.union(&intents);
        let reconciled = self.is_frozen();

        let script = compute_edit_script(&self.tree, &self.text)?;
        let applied = apply_edit_script(&self.tree, &script)?;
        if force {
            self.tree = applied;
            self.pending.clear();
            return Ok(ApplyReport {
                outcome: Outcome::ForceApplied,
                violations: Violations::default(),
                script,
                reconciled,
                intents: all,
            });
        }

        let violations = self.validate(&script, &applied, &all);
        if violations.is_empty() {
            self.tree = applied;
            self.pending.clear();
            return Ok(ApplyReport {
                outcome: Outcome::Accepted,
                violations,
                script,
                reconciled,
                intents: all,
            });
        }

        let restored = rollback(&applied, &script)?;
        debug_assert!(restored.identical(&self.tree));
        self.pending.extend(new_pending);
        Ok(ApplyReport {
            outcome: Outcome::Frozen,
            violations,
            script,
            reconciled: false,
            intents: all,
        })
    }

    /// Undo every pending change, newest first.
    pub fn revert_pending(&mut self) -> Result<Outcome, TxError> {
        if !self.is_frozen() {
            return Err(TxError::NothingToRevert);
        }
        let mut text = self.tree.text().to_string();
        let mut inverses = Vec::with_capacity(self.pending.len());
        for p in &self.pending {
            inverses.push(p.change.inverse(&text));
            p.change.apply(&mut text)?;
        }
        debug_assert_eq!(text, self.text);
        for inv in inverses.iter().rev() {
            inv.apply(&mut text)?;
        }
        debug_assert_eq!(text, self.tree.text());
        self.text = text;
        self.pending.clear();
        Ok(Outcome::Reverted)
    }
}
