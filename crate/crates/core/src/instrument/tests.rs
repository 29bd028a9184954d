use std::net::SocketAddr;
use std::sync::mpsc::TryRecvError;

use serde_json::json;

use super::*;
use crate::sandbox::Sandbox;
use crate::syntax::parse_document;

fn find<'t>(tree: &'t SyntaxTree, kind: &str, text: &str) -> SyntaxNode<'t> {
    tree.preorder()
        .find(|n| n.kind() == kind && n.text() == text)
        .unwrap_or_else(|| panic!("no {kind} `{text}`"))
}

const CUBE_WRAPPED: &str = r#"(e => (
  fetch("http://localhost:3000/watch", {
    method: "POST",
    body: JSON.stringify({ id: 7, e }),
    headers: { "Content-Type": "application/json" },
  }), e)
)(n ** 3)"#;

#[test]
fn rewrite_instantiates_the_wrapper() {
    let tree = parse_document("const c = n ** 3;", "javascript").unwrap();
    let n = find(&tree, "binary_expression", "n ** 3");
    assert_eq!(rewrite_for_watch(n, 7, &default_endpoint()).unwrap(), CUBE_WRAPPED);
}

#[test]
fn rewrite_is_idempotent() {
    let src = format!("const c = {CUBE_WRAPPED};");
    let tree = parse_document(&src, "javascript").unwrap();
    assert!(!tree.has_errors());
    let call = find(&tree, "call_expression", CUBE_WRAPPED);
    assert!(is_wrapper(call));
    assert_eq!(rewrite_for_watch(call, 7, &default_endpoint()).unwrap(), CUBE_WRAPPED);
    let plain = parse_document("f(n ** 3);", "javascript").unwrap();
    assert!(!is_wrapper(find(&plain, "call_expression", "f(n ** 3)")));
}

#[test]
fn rewrite_rejects_statements_and_other_grammars() {
    let tree = parse_document("const c = n ** 3;", "javascript").unwrap();
    let stmt = find(&tree, "lexical_declaration", "const c = n ** 3;");
    assert_eq!(
        rewrite_for_watch(stmt, 1, &default_endpoint()),
        Err(InstrumentError::NotAnExpression("lexical_declaration".into()))
    );
    let py = parse_document("c = n ** 3\n", "python").unwrap();
    let e = find(&py, "binary_operator", "n ** 3");
    assert_eq!(
        rewrite_for_watch(e, 1, &default_endpoint()),
        Err(InstrumentError::UnsupportedGrammar("python".into()))
    );
}

#[test]
fn two_posts_make_a_history() {
    let mut s = ValueStreams::new();
    assert_eq!(s.collect_body(br#"{"id": 7, "e": 8}"#), Ok(Ack::Stored(0)));
    assert_eq!(s.collect_body(br#"{"id": 7, "e": 27}"#), Ok(Ack::Stored(1)));
    let values: Vec<_> = s.history(7).into_iter().map(|e| e.value).collect();
    assert_eq!(values, vec![json!(8), json!(27)]);
    assert_eq!(s.last(7), Some(json!(27)));
    assert_eq!(s.last(8), None);
}

#[test]
fn unknown_ids_are_counted_and_bad_bodies_rejected() {
    let mut s = ValueStreams::new();
    s.set_known(Some(BTreeSet::from([7])));
    assert_eq!(s.collect_body(br#"{"id": 999, "e": 1}"#), Ok(Ack::Dropped));
    assert_eq!(s.dropped(), 1);
    assert!(s.history(999).is_empty());
    assert!(matches!(s.collect_body(br#"{"e": 1}"#), Err(CollectError::BadRequest(_))));
    assert!(matches!(s.collect_body(b"not json"), Err(CollectError::BadRequest(_))));
    assert!(s.history(7).is_empty());
}

#[test]
fn subscribers_get_history_then_live_events() {
    let mut s = ValueStreams::new();
    let early = s.subscribe(7);
    s.collect(7, json!(1));
    s.collect(7, json!(2));
    let late = s.subscribe(7);
    s.collect(7, json!(3));
    let drain = |sub: &Subscription| sub.events.try_iter().map(|e| e.value).collect::<Vec<_>>();
    assert_eq!(drain(&early), vec![json!(1), json!(2), json!(3)]);
    assert_eq!(drain(&late), vec![json!(1), json!(2), json!(3)]);
    s.unsubscribe(&early);
    s.collect(7, json!(4));
    assert!(matches!(early.events.try_recv(), Err(TryRecvError::Disconnected)));
    assert_eq!(drain(&late), vec![json!(4)]);
}

#[test]
fn history_is_capped() {
    let mut s = ValueStreams::new();
    for i in 0..100 {
        s.collect(3, json!(i));
    }
    let h = s.history(3);
    assert_eq!(h.len(), HISTORY_CAP);
    assert_eq!(h[0].value, json!(100 - HISTORY_CAP));
    assert!(h.windows(2).all(|w| w[0].sequence < w[1].sequence));
}

#[test]
fn values_are_capped() {
    let long = "é".repeat(700);
    let capped = cap_value(json!(long));
    let s = capped.as_str().unwrap();
    assert!(s.len() <= 1024 + '…'.len_utf8());
    assert!(s.ends_with('…'));
    assert_eq!(cap_value(json!([[[[1]]]])), json!([[[[1]]]]));
    assert_eq!(cap_value(json!([[[[[1]]]]])), json!([[[["[…]"]]]]));
    assert_eq!(cap_value(json!([[[[{"k": 1}]]]])), json!([[[["{…}"]]]]));
    assert_eq!(cap_value(json!({"a": [1, 2]})), json!({"a": [1, 2]}));
}

const PROGRAM: &str = r#"const list = [1, 2, 3];
const cubes = list.map(n => n ** 3);
let total = 0;
for (let i = 0; i < cubes.length; i++) {
  total = total + cubes[i];
}
"#;

fn watched(tree: &SyntaxTree) -> (NodeId, NodeId, NodeId) {
    (
        find(tree, "binary_expression", "n ** 3").id(),
        find(tree, "call_expression", "list.map(n => n ** 3)").id(),
        find(tree, "binary_expression", "total + cubes[i]").id(),
    )
}

#[test]
fn shadow_copy_posts_once_per_evaluation() {
    let tree = parse_document(PROGRAM, "javascript").unwrap();
    let (cube, map, sum) = watched(&tree);
    let shadow = instrument_document(&tree, &BTreeSet::from([cube, map, sum]), &default_endpoint()).unwrap();
    assert_eq!(tree.text(), PROGRAM, "the buffer itself is untouched");

    let mut streams = ValueStreams::new();
    let mut posts = 0;
    let mut poster = |url: &str, body: &str| {
        assert_eq!(url, default_endpoint());
        posts += 1;
        streams.collect_body(body.as_bytes()).map(|_| ()).map_err(|e| e.to_string())
    };
    let mut sb = Sandbox::new(&shadow, &mut poster).unwrap();
    sb.run().unwrap();
    let cubes = sb.global("cubes").unwrap().to_json().unwrap();
    let total = sb.global("total").unwrap().to_json().unwrap();
    drop(sb);

    assert_eq!(posts, 3 + 1 + 3);
    let values = |id| streams.history(id).into_iter().map(|e| e.value).collect::<Vec<_>>();
    assert_eq!(values(cube), vec![json!(1), json!(8), json!(27)]);
    assert_eq!(streams.last(map), Some(cubes.clone()));
    assert_eq!(streams.last(sum), Some(total.clone()));

    // the instrumented run computes what the plain one does
    let mut none = |_: &str, _: &str| Err("unexpected post".to_string());
    let mut plain = Sandbox::new(PROGRAM, &mut none).unwrap();
    plain.run().unwrap();
    assert_eq!(plain.global("cubes").unwrap().to_json(), Some(cubes));
    assert_eq!(plain.global("total").unwrap().to_json(), Some(total));
}

#[test]
fn instrumenting_rejects_non_expressions() {
    let tree = parse_document(PROGRAM, "javascript").unwrap();
    let stmt = find(&tree, "lexical_declaration", "let total = 0;").id();
    assert!(matches!(
        instrument_document(&tree, &BTreeSet::from([stmt]), &default_endpoint()),
        Err(InstrumentError::NotAnExpression(_))
    ));
}

#[test]
fn collector_over_loopback() {
    let rt = tokio::runtime::Runtime::new().unwrap();
    let collector = Collector::new();
    let handle = rt
        .block_on(serve(&collector, SocketAddr::from(([127, 0, 0, 1], 0))))
        .unwrap();
    let sub = collector.streams.lock().unwrap().subscribe(7);

    let post = |body: &str| match ureq::post(&handle.url()).set("Content-Type", "application/json").send_string(body) {
        Ok(r) => r.status(),
        Err(ureq::Error::Status(code, _)) => code,
        Err(e) => panic!("{e}"),
    };
    assert_eq!(post(r#"{"id": 7, "e": 8}"#), 204);
    assert_eq!(post(r#"{"id": 7, "e": 27}"#), 204);
    assert_eq!(post(r#"{"e": 27}"#), 400);

    let got: Vec<_> = sub.events.try_iter().map(|e| e.value).collect();
    assert_eq!(got, vec![json!(8), json!(27)]);
    assert_eq!(collector.streams.lock().unwrap().last(7), Some(json!(27)));
    handle.task.abort();
}
