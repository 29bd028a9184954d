use super::*;
use crate::syntax::parse_document;

fn tree(text: &str, lang: &str) -> SyntaxTree {
    parse_document(text, lang).unwrap()
}

fn first<'t>(t: &'t SyntaxTree, kind: &str) -> SyntaxNode<'t> {
    t.preorder()
        .find(|n| n.kind() == kind)
        .unwrap_or_else(|| panic!("no {kind} in\n{}", t.outline()))
}

fn find<'t>(t: &'t SyntaxTree, kind: &str, text: &str) -> SyntaxNode<'t> {
    t.preorder()
        .find(|n| n.kind() == kind && n.text() == text)
        .unwrap_or_else(|| panic!("no {kind} {text:?} in\n{}", t.outline()))
}

fn applied(t: &SyntaxTree, change: &TextChange) -> String {
    let mut s = t.text().to_string();
    change.apply(&mut s).unwrap();
    s
}

fn insert_text(src: &str, lang: &str, list_kind: &str, text: &str, index: usize) -> String {
    let t = tree(src, lang);
    let list = first(&t, list_kind).id();
    let change = insert(&t, list, text, index).unwrap_or_else(|e| panic!("{e} for {src:?}\n{}", t.outline()));
    applied(&t, &change)
}

#[test]
fn javascript_array_inserts() {
    assert_eq!(insert_text("[1, 3]", "javascript", "array", "2", 1), "[1, 2, 3]");
    assert_eq!(insert_text("[1, 3]", "javascript", "array", "0", 0), "[0, 1, 3]");
    assert_eq!(insert_text("[1, 3]", "javascript", "array", "4", 2), "[1, 3, 4]");
    assert_eq!(insert_text("[]", "javascript", "array", "1", 0), "[1]");
    assert_eq!(insert_text("[1]", "javascript", "array", "2", 1), "[1,2]");
}

#[test]
fn python_list_inserts() {
    assert_eq!(insert_text("[1, 3]", "python", "list", "2", 1), "[1, 2, 3]");
    assert_eq!(insert_text("[]", "python", "list", "1", 0), "[1]");
    assert_eq!(insert_text("[1, 3,]", "python", "list", "4", 2), "[1, 3, 4,]");
}

#[test]
fn toy_parameters_are_terminated() {
    assert_eq!(
        insert_text("void main(int, char,);", "toy", "function_declaration", "float", 1),
        "void main(int, float, char,);"
    );
    assert_eq!(
        insert_text("void main(int, char,);", "toy", "function_declaration", "bool", 2),
        "void main(int, char, bool,);"
    );
    assert_eq!(
        insert_text("void main();", "toy", "function_declaration", "int", 0),
        "void main(int,);"
    );
}

#[test]
fn adjacent_statements_get_a_line_break() {
    let out = insert_text("a()\nb()", "javascript", "program", "c()", 1);
    assert_eq!(out, "a()\nc()\nb()");
    let out = insert_text("a()", "javascript", "program", "c()", 1);
    assert!(out == "a() c()" || out == "a()\nc()", "{out:?}");
    tree(&out, "javascript");
}

#[test]
fn out_of_range_and_non_lists_are_errors() {
    let t = tree("[1, 3]", "javascript");
    let arr = first(&t, "array").id();
    assert_eq!(
        insert(&t, arr, "9", 3).unwrap_err(),
        EditError::IndexOutOfRange { index: 3, len: 2 }
    );
    let num = find(&t, "number", "1").id();
    assert_eq!(insert(&t, num, "9", 0).unwrap_err(), EditError::NotAList);
    assert_eq!(insert(&t, 9999, "9", 0).unwrap_err(), EditError::UnknownNode(9999));
}

fn delete_text(src: &str, lang: &str, kind: &str, text: &str) -> Result<String, EditError> {
    let t = tree(src, lang);
    let n = find(&t, kind, text).id();
    delete(&t, n).map(|c| applied(&t, &c))
}

#[test]
fn deleting_list_elements_takes_a_separator() {
    assert_eq!(delete_text("[1, 2, 3]", "javascript", "number", "2").unwrap(), "[1, 3]");
    assert_eq!(delete_text("[1, 2, 3]", "javascript", "number", "1").unwrap(), "[2, 3]");
    assert_eq!(delete_text("[1, 2, 3]", "javascript", "number", "3").unwrap(), "[1, 2]");
    assert_eq!(delete_text("[1]", "javascript", "number", "1").unwrap(), "[]");
    assert_eq!(delete_text("[1, 2,]", "javascript", "number", "2").unwrap(), "[1,]");
    assert_eq!(
        delete_text("void main(int, char,);", "toy", "type", "char").unwrap(),
        "void main(int,);"
    );
}

#[test]
fn python_tuple_keeps_its_comma() {
    assert_eq!(delete_text("(1, 2)", "python", "integer", "2").unwrap(), "(1,)");
    assert_eq!(delete_text("(1, 2)", "python", "integer", "1").unwrap(), "(2,)");
    assert_eq!(delete_text("(1, 2, 3)", "python", "integer", "3").unwrap(), "(1, 2)");
    // lists have no such rule
    assert_eq!(delete_text("[1, 2]", "python", "integer", "2").unwrap(), "[1]");
}

#[test]
fn optional_parts_can_be_deleted_required_ones_cannot() {
    assert_eq!(
        delete_text("if (a) b(); else c();", "javascript", "else_clause", "else c();").unwrap(),
        "if (a) b();"
    );
    assert_eq!(
        delete_text("a + b", "javascript", "identifier", "b").unwrap_err(),
        EditError::CannotDelete
    );
    let t = tree("a", "javascript");
    assert_eq!(delete(&t, t.root().id()).unwrap_err(), EditError::CannotDelete);
}

#[test]
fn replace_adds_parentheses_when_needed() {
    let t = tree("a * 4", "python");
    let a = find(&t, "identifier", "a").id();
    let c = replace_with(&t, a, "2 + 3").unwrap();
    assert_eq!(applied(&t, &c), "(2 + 3) * 4");

    let four = find(&t, "integer", "4").id();
    assert_eq!(applied(&t, &replace_with(&t, four, "5").unwrap()), "a * 5");

    let t = tree("x = a * 4", "javascript");
    let four = find(&t, "number", "4").id();
    assert_eq!(applied(&t, &replace_with(&t, four, "3 + 1").unwrap()), "x = a * (3 + 1)");
}

#[test]
fn replacing_with_own_text_is_identity() {
    let src = "function f(a, b) { return a * (b + 1); }";
    let t = tree(src, "javascript");
    for n in t.preorder().filter(|n| n.is_named() && !n.is_root()) {
        let c = replace_with(&t, n.id(), n.text()).unwrap();
        assert_eq!(applied(&t, &c), src, "{}", n.kind());
    }
}

#[test]
fn replace_that_cannot_parse_fails() {
    let t = tree("a * 4", "python");
    let a = find(&t, "identifier", "a").id();
    assert_eq!(replace_with(&t, a, "def").unwrap_err(), EditError::ReplaceFailed);
}

#[test]
fn wrap_in_unary_minus_parenthesizes_the_target() {
    let t = tree("x = 2 + 3;", "javascript");
    let sum = first(&t, "binary_expression").id();
    assert_eq!(applied(&t, &wrap_with(&t, sum, "-", "").unwrap()), "x = -(2 + 3);");

    let t = tree("2 + 3", "python");
    let sum = first(&t, "binary_operator").id();
    assert_eq!(applied(&t, &wrap_with(&t, sum, "-", "").unwrap()), "-(2 + 3)");
}

#[test]
fn wrap_in_call_and_watch_payload() {
    let t = tree("y = x * 2;", "javascript");
    let x = find(&t, "identifier", "x").id();
    assert_eq!(applied(&t, &wrap_with(&t, x, "f(", ")").unwrap()), "y = f(x) * 2;");
    assert_eq!(
        applied(&t, &wrap_with(&t, x, "[\"__watch\", ", "][1]").unwrap()),
        "y = [\"__watch\", x][1] * 2;"
    );
}

#[test]
fn requests_roundtrip_through_json() {
    let req = StructuredEditRequest {
        operation: EditOperation::WrapWith {
            prefix: "f(".into(),
            suffix: ")".into(),
        },
        target: 3,
        intents: Intents::default(),
    };
    let json = serde_json::to_string(&req).unwrap();
    assert!(json.contains("\"kind\":\"wrapWith\""), "{json}");
    assert_eq!(serde_json::from_str::<StructuredEditRequest>(&json).unwrap(), req);
    let t = tree("x;", "javascript");
    let x = find(&t, "identifier", "x").id();
    let req = StructuredEditRequest { target: x, ..req };
    assert_eq!(applied(&t, &plan(&t, &req).unwrap()), "f(x);");
}

#[test]
fn adapter_answers_list_queries() {
    let t = tree("[1, 3]", "javascript");
    let adapter = TreeSitterAdapter::new(t.language());
    let one = find(&t, "number", "1");
    assert_eq!(adapter.list_info(one).as_deref(), Some(","));
    assert_eq!(adapter.first_insert_position(first(&t, "array")), Some(1));
    assert!(adapter.parenthesizable(one));
    assert_eq!(adapter.list_info(t.root()), None);
}

/// Inserting then deleting the new element restores the document.
fn insert_delete_inverse(src: &str, lang: &str, list_kind: &str, elem: &str) {
    let t = tree(src, lang);
    let list = first(&t, list_kind);
    let k = TreeSitterAdapter::new(t.language()).lists(list)[0].elements.len();
    for i in 0..=k {
        let grown = insert_text(src, lang, list_kind, elem, i);
        let t2 = tree(&grown, lang);
        let list2 = t2
            .preorder()
            .find(|n| n.kind() == list_kind && n.span().start == list.span().start)
            .unwrap();
        let lists = TreeSitterAdapter::new(t2.language()).lists(list2);
        let new_elem = &lists[0].elements[i];
        assert_eq!(new_elem.text, elem);
        let back = applied(&t2, &delete(&t2, new_elem.id).unwrap());
        assert_eq!(back, src, "{lang} {src:?} index {i} via {grown:?}");
    }
}

#[test]
fn insert_then_delete_is_identity() {
    for src in ["[1, 3]", "[1]", "[]"] {
        insert_delete_inverse(src, "javascript", "array", "7");
        insert_delete_inverse(src, "python", "list", "7");
    }
    for src in ["void main(int, char,);", "void main(int,);", "void main();"] {
        insert_delete_inverse(src, "toy", "function_declaration", "float");
    }
    insert_delete_inverse("(1,)", "python", "tuple", "7");
}
