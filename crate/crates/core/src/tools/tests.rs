use std::collections::BTreeSet;

use serde_json::json;

use super::*;
use crate::syntax::parse_document;
use crate::transaction::Outcome;

struct Doc {
    tx: Transactions,
    frags: FragmentRegistry,
    host: ToolHost,
}

impl Doc {
    fn new(text: &str, lang: &str, tools: &[&str]) -> Doc {
        let manifest = bundled();
        let ids: Vec<String> = tools.iter().map(|s| s.to_string()).collect();
        let mut doc = Doc {
            tx: Transactions::new(parse_document(text, lang).unwrap()),
            frags: FragmentRegistry::new(),
            host: ToolHost::new(manifest.select(&ids)),
        };
        doc.refresh();
        doc
    }

    fn refresh(&mut self) -> Refresh {
        let tree = self.tx.tree().clone();
        self.host.refresh(&tree, &mut self.tx, &mut self.frags)
    }

    fn change(&mut self, change: TextChange, intents: Intents) -> Outcome {
        let report = self.tx.apply_changes(&[change], intents, false).unwrap();
        if report.outcome != Outcome::Frozen {
            self.refresh();
        }
        report.outcome
    }

    fn act(&mut self, id: InstanceId, action: &str, payload: Value) -> Outcome {
        let effect = self.host.dispatch(id, action, &payload, self.tx.tree()).unwrap();
        let report = self.tx.apply_changes(&effect.changes, effect.intents, false).unwrap();
        if report.outcome != Outcome::Frozen {
            self.refresh();
        }
        report.outcome
    }

    fn ids(&self, def: &str) -> Vec<InstanceId> {
        self.host.instances().filter(|i| i.definition == def).map(|i| i.id).collect()
    }

    fn owners_match_instances(&self) -> bool {
        let live: BTreeSet<InstanceId> = self.host.instances().map(|i| i.id).collect();
        live == self.tx.owners()
    }
}

fn brute_force(tree: &SyntaxTree, defs: &[ToolDefinition]) -> Vec<(String, NodeId)> {
    let mut out: Vec<(String, NodeId)> = tree
        .preorder()
        .flat_map(|n| {
            defs.iter()
                .filter(move |d| (d.query)(n).is_some())
                .map(move |d| (d.id.clone(), n.id()))
        })
        .collect();
    out.sort();
    out
}

fn instantiated(tree: &SyntaxTree, defs: &[ToolDefinition]) -> Vec<(String, NodeId)> {
    let mut out: Vec<(String, NodeId)> = instantiate_tools(tree, defs, &[], DEFAULT_DEPTH_LIMIT, &mut BTreeSet::new())
        .into_iter()
        .map(|m| (defs[m.definition].id.clone(), m.anchor))
        .collect();
    out.sort();
    out
}

const WATCHES: &str = "const cubes = [\"__watch\", list.map(n => n ** 3)][1];\nlet y = [\"__watch\", x + 1][1] * 2;\n";

#[test]
fn two_markers_give_two_watches() {
    let defs = bundled().defaults();
    let tree = parse_document(WATCHES, "javascript").unwrap();
    let found = instantiated(&tree, &defs);
    assert_eq!(found.iter().filter(|(d, _)| d == "watch").count(), 2);
    assert_eq!(found, brute_force(&tree, &defs));
    for (_, anchor) in &found {
        assert!(tree.node(*anchor).unwrap().text().starts_with("[\"__watch\""));
    }
}

#[test]
fn no_markers_no_instances() {
    let defs = bundled().defaults();
    let tree = parse_document("let a = [1, 2][1];", "javascript").unwrap();
    assert!(instantiated(&tree, &defs).is_empty());
}

#[test]
fn nested_watch_is_found_inside_the_fragment() {
    let defs = bundled().defaults();
    let src = "f([\"__watch\", g([\"__watch\", 1][1])][1]);";
    let tree = parse_document(src, "javascript").unwrap();
    let matches = instantiate_tools(&tree, &defs, &[], DEFAULT_DEPTH_LIMIT, &mut BTreeSet::new());
    assert_eq!(matches.len(), 2);
    assert_eq!(matches[1].depth, 1);
    assert_eq!(matches[1].parent, Some(0));
    assert_eq!(instantiated(&tree, &defs), brute_force(&tree, &defs));
}

fn self_embedding() -> ToolDefinition {
    let mut def = ToolDefinition::new(
        "mirror",
        DisplayType::Replace,
        Arc::new(|n| {
            (n.kind() == "identifier").then(|| Extraction {
                nodes: BTreeMap::from([("self".to_string(), n.id())]),
                scalars: BTreeMap::new(),
            })
        }),
    );
    def.view = vec![ViewItem::Fragment {
        binding: "self".into(),
    }];
    def
}

#[test]
fn self_embedding_tool_stops_at_the_depth_limit() {
    let tree = parse_document("x", "javascript").unwrap();
    let defs = vec![self_embedding()];
    for limit in [0, 3, DEFAULT_DEPTH_LIMIT] {
        let m = instantiate_tools(&tree, &defs, &[], limit, &mut BTreeSet::new());
        assert_eq!(m.len() as u32, limit + 1);
        assert!(m.iter().all(|m| m.depth <= limit));
    }
}

#[test]
fn panicking_query_disables_only_that_tool() {
    let boom = ToolDefinition::new(
        "boom",
        DisplayType::Markup,
        Arc::new(|n| {
            if n.kind() == "number" {
                panic!("query failure")
            }
            None
        }),
    );
    let mut defs = bundled().defaults();
    defs.push(boom);
    let tree = parse_document(WATCHES, "javascript").unwrap();
    let mut disabled = BTreeSet::new();
    let m = instantiate_tools(&tree, &defs, &[], DEFAULT_DEPTH_LIMIT, &mut disabled);
    assert_eq!(m.len(), 2);
    assert!(disabled.contains("boom"));
}

#[test]
fn instantiation_is_pure() {
    let defs = bundled().defaults();
    let tree = parse_document(WATCHES, "javascript").unwrap();
    assert_eq!(instantiated(&tree, &defs), instantiated(&tree, &defs));
}

#[test]
fn lifecycle_pairs_constraints_with_instances() {
    let mut doc = Doc::new(WATCHES, "javascript", &["watch", "placeholder"]);
    assert_eq!(doc.host.len(), 2);
    assert!(doc.owners_match_instances());
    let before = doc.ids("watch");

    // unrelated edit: both survive with the same ids and anchors
    let anchors: Vec<NodeId> = doc.host.instances().map(|i| i.anchor).collect();
    assert_eq!(doc.change(TextChange::insert(0, "// hi\n"), Intents::default()), Outcome::Accepted);
    assert_eq!(doc.ids("watch"), before);
    assert_eq!(doc.host.instances().map(|i| i.anchor).collect::<Vec<_>>(), anchors);
    assert!(doc.owners_match_instances());

    // new marker: one more instance
    let end = doc.tx.text().len();
    doc.change(TextChange::insert(end, "__VI_PLACEHOLDER_body;\n"), Intents::default());
    assert_eq!(doc.host.len(), 3);
    assert!(doc.owners_match_instances());
    assert_eq!(doc.frags.len(), 1 + 2);
}

#[test]
fn quote_in_watched_expression_freezes() {
    let mut doc = Doc::new(WATCHES, "javascript", &["watch"]);
    let at = WATCHES.find("list.map").unwrap();
    assert_eq!(doc.change(TextChange::insert(at, "\""), Intents::default()), Outcome::Frozen);
    assert_eq!(doc.host.len(), 2);
    assert_eq!(doc.tx.revert_pending().unwrap(), Outcome::Reverted);
    assert_eq!(doc.tx.text(), WATCHES);
}

#[test]
fn watch_remove_action_unwraps_the_marker() {
    let mut doc = Doc::new(WATCHES, "javascript", &["watch"]);
    let first = doc.ids("watch")[0];
    let effect = doc.host.dispatch(first, "remove", &json!({}), doc.tx.tree()).unwrap();
    let anchor = doc.host.instance(first).unwrap().anchor;
    assert_eq!(effect.intents.delete_nodes, BTreeSet::from([anchor]));
    assert_eq!(doc.act(first, "remove", json!({})), Outcome::Accepted);
    assert!(doc.tx.text().starts_with("const cubes = list.map(n => n ** 3);"));
    assert_eq!(doc.ids("watch").len(), 1);
    assert!(doc.owners_match_instances());
}

#[test]
fn placeholder_input_replaces_the_identifier() {
    let src = "function f() {\n  __VI_PLACEHOLDER_body\n}\n";
    let mut doc = Doc::new(src, "javascript", &["placeholder"]);
    let id = doc.ids("placeholder")[0];
    let view = doc.host.render(id, doc.tx.tree(), &|_| None).unwrap();
    assert_eq!(
        view,
        ViewSpec::Input {
            input: "text".into(),
            value: String::new(),
            placeholder: "body".into(),
            attrs: BTreeMap::new(),
            action: "input".into(),
        }
    );
    let effect = doc.host.dispatch(id, "input", &json!({"text": "x"}), doc.tx.tree()).unwrap();
    assert!(effect.intents.require_continue_input);
    assert_eq!(doc.act(id, "input", json!({"text": "x"})), Outcome::Accepted);
    assert_eq!(doc.tx.text(), "function f() {\n  x\n}\n");
    assert!(doc.host.is_empty());
}

#[test]
fn typing_after_a_placeholder_freezes() {
    let src = "__VI_PLACEHOLDER_a_b;\n";
    let mut doc = Doc::new(src, "javascript", &["placeholder"]);
    let at = src.find(';').unwrap();
    assert_eq!(doc.change(TextChange::insert(at, "c"), Intents::default()), Outcome::Frozen);
}

#[test]
fn action_errors() {
    let mut doc = Doc::new(WATCHES, "javascript", &["watch"]);
    let id = doc.ids("watch")[0];
    assert_eq!(
        doc.host.dispatch(id, "explode", &json!({}), doc.tx.tree()).unwrap_err(),
        ToolError::UnknownAction {
            tool: "watch".into(),
            action: "explode".into()
        }
    );
    doc.act(id, "remove", json!({}));
    assert_eq!(
        doc.host.dispatch(id, "remove", &json!({}), doc.tx.tree()).unwrap_err(),
        ToolError::StaleInstance(id)
    );
}

#[test]
fn sql_editor_escapes_backticks() {
    let src = "db.query(sql`SELECT * FROM \\`events\\` WHERE id = 123`);\n";
    let mut doc = Doc::new(src, "javascript", &["sql"]);
    let id = doc.ids("sql")[0];
    let view = doc.host.render(id, doc.tx.tree(), &|_| None).unwrap();
    let ViewSpec::Editor { text, .. } = &view else {
        panic!("{view:?}")
    };
    assert_eq!(text, "SELECT * FROM `events` WHERE id = 123");
    // append " AND `x` = 1" to the plain text
    let n = text.len();
    assert_eq!(
        doc.act(id, "edit", json!({"from": n, "to": n, "insert": " AND `x` = 1"})),
        Outcome::Accepted
    );
    assert_eq!(
        doc.tx.text(),
        "db.query(sql`SELECT * FROM \\`events\\` WHERE id = 123 AND \\`x\\` = 1`);\n"
    );
    // replace the table name through the plain coordinates
    let id = doc.ids("sql")[0];
    doc.act(id, "edit", json!({"from": 15, "to": 21, "insert": "logs"}));
    assert!(doc.tx.text().contains("FROM \\`logs\\` WHERE"));
}

#[test]
fn slider_sets_its_value_literal() {
    let src = "let v = [\"slider\", 0, 255, 1, 73][1];\n";
    let mut doc = Doc::new(src, "javascript", &["slider"]);
    let id = doc.ids("slider")[0];
    let view = doc.host.render(id, doc.tx.tree(), &|_| None).unwrap();
    let ViewSpec::Input { value, attrs, .. } = view else {
        panic!()
    };
    assert_eq!(value, "73");
    assert_eq!(attrs["max"], "255");
    assert_eq!(doc.act(id, "set", json!({"value": 120})), Outcome::Accepted);
    assert_eq!(doc.tx.text(), "let v = [\"slider\", 0, 255, 1, 120][1];\n");
    assert_eq!(doc.ids("slider"), vec![id]);
}

#[test]
fn color_sets_all_components_and_shows_values() {
    let src = "c = [\"color\", [r, 128, 0]][1]\n";
    let mut doc = Doc::new(src, "python", &["color"]);
    let id = doc.ids("color")[0];
    let streams = doc.host.stream_nodes();
    assert_eq!(streams.len(), 3);
    let values = |n: NodeId| streams.contains(&n).then(|| json!(n % 256));
    let view = doc.host.render(id, doc.tx.tree(), &values).unwrap();
    assert_eq!(view.fragments().len(), 3);
    assert_eq!(view.actions(), vec!["set"]);
    assert_eq!(doc.act(id, "set", json!({"r": 1, "g": 2, "b": 3})), Outcome::Accepted);
    assert_eq!(doc.tx.text(), "c = [\"color\", [1, 2, 3]][1]\n");
}

#[test]
fn watch_view_shows_last_value() {
    let doc = Doc::new(WATCHES, "javascript", &["watch"]);
    let inst = doc.host.instances().next().unwrap();
    let expr = inst.extraction.nodes["expression"];
    let view = doc
        .host
        .render(inst.id, doc.tx.tree(), &|n| (n == expr).then(|| json!([1, 8, 27])))
        .unwrap();
    let json = serde_json::to_value(&view).unwrap();
    let text = json.to_string();
    assert!(text.contains("\"type\":\"fragment\""), "{text}");
    assert!(text.contains("[1,8,27]"), "{text}");
    assert_eq!(view.actions(), vec!["remove"]);
    assert_eq!(view.fragments(), vec![inst.fragments["expression"]]);
}

#[test]
fn top_level_guard_blocks_statement_merge() {
    let src = "var a = 5\nb";
    let plus = TextChange::insert(9, "+");

    let mut guarded = Doc::new(src, "javascript", &["top-level-guard"]);
    assert_eq!(guarded.host.len(), 2);
    assert_eq!(guarded.change(plus.clone(), Intents::default()), Outcome::Frozen);

    let mut free = Doc::new(src, "javascript", &[]);
    assert_eq!(free.change(plus, Intents::default()), Outcome::Accepted);
    let root = free.tx.tree().root();
    assert_eq!(root.syntax_children().count(), 1);
}

#[test]
fn manifest_errors_are_reported() {
    assert!(matches!(
        Manifest::from_toml("[[tool]]\nid = \"x\"\ndisplay = \"replace\"\n"),
        Err(ManifestError::Query(_))
    ));
    assert!(matches!(
        Manifest::from_toml("[[tool]]\nid = \"x\"\ndisplay = \"replace\"\ntop_level = true\nconstraints = [\"nope\"]\n"),
        Err(ManifestError::Constraint { .. })
    ));
    assert!(matches!(
        Manifest::from_toml("[[tool]]\nid = \"x\"\ndisplay = \"replace\"\nlanguages = [\"javascript\"]\ntemplate = \"(\"\n"),
        Err(ManifestError::Template { .. })
    ));
    let m = bundled();
    assert_eq!(m.definitions.len(), 6);
    assert!(!m.default_enabled.contains(&"top-level-guard".to_string()));
}
