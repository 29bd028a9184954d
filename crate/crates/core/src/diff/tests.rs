use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::syntax::{parse_document, SyntaxNode};

const JS_CORPUS: &str = include_str!("../../tests/fixtures/corpus/inventory.js");
const PY_CORPUS: &str = include_str!("../../tests/fixtures/corpus/grades.py");

fn find<'t>(tree: &'t SyntaxTree, kind: &str, text: &str) -> SyntaxNode<'t> {
    tree.preorder()
        .find(|n| n.kind() == kind && n.text() == text)
        .unwrap_or_else(|| panic!("no {kind} {text:?} in\n{}", tree.outline()))
}

fn roundtrip(old: &SyntaxTree, new_text: &str) -> (EditScript, SyntaxTree) {
    let script = compute_edit_script(old, new_text).unwrap();
    let applied = apply_edit_script(old, &script).unwrap();
    let fresh = parse_document(new_text, old.language().id).unwrap();
    assert_eq!(applied.text(), new_text);
    assert!(
        applied.structurally_eq(&fresh),
        "applied:\n{}\nfresh:\n{}",
        applied.outline(),
        fresh.outline()
    );
    let back = rollback(&applied, &script).unwrap();
    assert!(back.identical(old) && back == *old, "rollback differs");
    (script, applied)
}

#[test]
fn operator_append_detaches_and_reattaches_number() {
    let old = parse_document("2", "javascript").unwrap();
    let number = find(&old, "number", "2").id();
    let (script, new) = roundtrip(&old, "2 + 3");
    assert!(script.ops.contains(&EditOp::Detach {
        node: number,
        parent: old.node(number).unwrap().parent().unwrap().id(),
        index: 0
    }));
    assert!(script
        .ops
        .iter()
        .any(|op| matches!(op, EditOp::Attach { node, .. } if *node == number)));
    assert!(script
        .ops
        .iter()
        .any(|op| matches!(op, EditOp::Load { node } if node.kind == "binary_expression")));
    assert!(!script.removed_ids().contains(&number));
    let n = new.node(number).unwrap();
    assert_eq!(n.text(), "2");
    assert_eq!(n.parent().unwrap().kind(), "binary_expression");
}

#[test]
fn identical_text_gives_empty_script() {
    let old = parse_document(JS_CORPUS, "javascript").unwrap();
    let script = compute_edit_script(&old, JS_CORPUS).unwrap();
    assert!(script.is_empty());
    assert_eq!(script.target_version, script.source_version);
    let same = apply_edit_script(&old, &script).unwrap();
    assert_eq!(same.version(), old.version());
    assert!(same.identical(&old));
    assert!(rollback(&same, &script).unwrap().identical(&old));
}

#[test]
fn swapped_statements_keep_their_ids() {
    let old = parse_document("f(a)\ng()", "javascript").unwrap();
    let f: Vec<_> = find(&old, "call_expression", "f(a)").descendants().map(|n| n.id()).collect();
    let g: Vec<_> = find(&old, "call_expression", "g()").descendants().map(|n| n.id()).collect();
    let (script, new) = roundtrip(&old, "g()\nf(a)");
    assert_eq!(find(&new, "call_expression", "f(a)").descendants().map(|n| n.id()).collect::<Vec<_>>(), f);
    assert_eq!(find(&new, "call_expression", "g()").descendants().map(|n| n.id()).collect::<Vec<_>>(), g);
    assert_eq!(script.count("Remove"), 0);
    assert_eq!(script.count("Load"), 0);
    assert!(!script.moved_ids().is_empty());
}

#[test]
fn literal_edit_becomes_update() {
    let old = parse_document("var a = 5", "javascript").unwrap();
    let five = find(&old, "number", "5").id();
    let (script, new) = roundtrip(&old, "var a = 57");
    assert_eq!(
        script.ops,
        vec![EditOp::Update {
            node: five,
            old: "5".into(),
            new: "57".into()
        }]
    );
    assert_eq!(new.node(five).unwrap().text(), "57");
    assert_eq!(new.version(), old.version() + 1);
}

#[test]
fn wrapping_in_call_keeps_argument_identity() {
    let old = parse_document("x;", "javascript").unwrap();
    let x = find(&old, "identifier", "x").id();
    let (_, new) = roundtrip(&old, "f(x);");
    assert_eq!(new.node(x).unwrap().parent().unwrap().kind(), "arguments");
}

#[test]
fn whitespace_edits_touch_only_trivia() {
    let old = parse_document("a + b", "javascript").unwrap();
    let (script, _) = roundtrip(&old, "a  +  b");
    assert!(!script.is_empty());
    for op in &script.ops {
        match op {
            EditOp::Update { old: o, new: n, .. } => {
                assert!(o.trim().is_empty() && n.trim().is_empty())
            }
            other => panic!("unexpected structural op {other}"),
        }
    }
}

#[test]
fn degenerate_scripts_are_flagged() {
    let old = parse_document("a", "javascript").unwrap();
    let s = compute_edit_script(&old, ")").unwrap();
    assert!(s.degenerate, "{}", parse_document(")", "javascript").unwrap().outline());
    assert!(!compute_edit_script(&old, "a + b").unwrap().degenerate);
    assert!(!compute_edit_script(&old, "").unwrap().degenerate);
}

#[test]
fn stale_script_is_rejected() {
    let old = parse_document("1", "javascript").unwrap();
    let script = compute_edit_script(&old, "12").unwrap();
    let applied = apply_edit_script(&old, &script).unwrap();
    assert_eq!(
        apply_edit_script(&applied, &script).unwrap_err(),
        DiffError::StaleScript {
            expected: 0,
            found: 1
        }
    );
}

#[test]
fn rollback_of_unapplied_script_is_invalid() {
    let old = parse_document("1", "javascript").unwrap();
    let script = compute_edit_script(&old, "1 + 1").unwrap();
    assert_eq!(rollback(&old, &script).unwrap_err(), DiffError::InvalidRollback);
}

#[test]
fn fresh_ids_continue_the_counter() {
    let old = parse_document("a", "javascript").unwrap();
    let (script, new) = roundtrip(&old, "a(b)");
    let loaded = script.loaded_ids();
    assert!(loaded.iter().all(|&id| id >= old.next_id()));
    assert_eq!(new.next_id(), old.next_id() + loaded.len() as u64);
}

#[test]
fn scripts_serialize_and_trace() {
    let old = parse_document("2", "javascript").unwrap();
    let script = compute_edit_script(&old, "2 + 3").unwrap();
    let json = serde_json::to_string(&script).unwrap();
    let back: EditScript = serde_json::from_str(&json).unwrap();
    assert_eq!(back, script);
    let trace = script.trace();
    assert!(trace.starts_with("# script 0 -> 1\n"));
    assert_eq!(trace.lines().count(), script.len() + 1);
    assert!(trace.contains("Load") && trace.contains("\"binary_expression\""));
}

#[test]
fn diff_is_deterministic() {
    let old = parse_document(JS_CORPUS, "javascript").unwrap();
    let new_text = JS_CORPUS.replace("sum += price(item)", "sum = sum + price(item)");
    assert_eq!(
        compute_edit_script(&old, &new_text).unwrap(),
        compute_edit_script(&old, &new_text).unwrap()
    );
}

fn random_edit(rng: &mut impl Rng, text: &str) -> String {
    const ALPHABET: &[u8] = b"ab1 (){}[];,.+-*\"'`=\n:";
    let boundaries: Vec<usize> = (0..=text.len()).filter(|&i| text.is_char_boundary(i)).collect();
    let at = boundaries[rng.gen_range(0..boundaries.len())];
    let mut out = text.to_string();
    let ch = ALPHABET[rng.gen_range(0..ALPHABET.len())] as char;
    match rng.gen_range(0..3) {
        0 => out.insert(at, ch),
        1 if at < text.len() => {
            out.remove(at);
        }
        _ if at < text.len() => {
            out.remove(at);
            out.insert(at, ch);
        }
        _ => out.insert(at, ch),
    }
    out
}

fn random_walk(source: &str, lang: &str, steps: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree = parse_document(source, lang).unwrap();
    for _ in 0..steps {
        let next = random_edit(&mut rng, tree.text());
        let (_, applied) = roundtrip(&tree, &next);
        // keep walking from the edited text half of the time
        if rng.gen_bool(0.5) {
            tree = applied;
        }
    }
}

#[test]
fn random_single_character_edits_roundtrip_javascript() {
    random_walk(JS_CORPUS, "javascript", 200, 7);
}

#[test]
fn random_single_character_edits_roundtrip_python() {
    random_walk(PY_CORPUS, "python", 200, 11);
}
