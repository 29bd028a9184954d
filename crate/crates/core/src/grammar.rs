//! Grammar rule definitions read from the parser toolkit's JSON export, and
//! the analyses the structured-edit adapter needs: separator detection for
//! repetitions, partial matching of a node's children against its rule, and
//! which node kinds may be wrapped in parentheses.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::rc::Rc;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrammarError {
    #[error("malformed grammar definition: {0}")]
    Malformed(String),
    #[error("no separator heuristic matches this repetition")]
    NoHeuristic,
    #[error("malformed exception table: {0}")]
    Exceptions(String),
}

/// One grammar rule, with precedence and field wrappers stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Blank,
    String(String),
    Pattern(String),
    Symbol(String),
    Seq(Vec<Rule>),
    Choice(Vec<Rule>),
    Repeat(Box<Rule>),
    Repeat1(Box<Rule>),
    Alias {
        content: Box<Rule>,
        value: String,
        named: bool,
    },
    Token(Box<Rule>),
}

impl Rule {
    fn from_json(v: &Value) -> Result<Rule, GrammarError> {
        let ty = v
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| GrammarError::Malformed(format!("rule without type: {v}")))?;
        let content = || -> Result<Rule, GrammarError> {
            Rule::from_json(
                v.get("content")
                    .ok_or_else(|| GrammarError::Malformed(format!("{ty} without content")))?,
            )
        };
        let members = || -> Result<Vec<Rule>, GrammarError> {
            v.get("members")
                .and_then(Value::as_array)
                .ok_or_else(|| GrammarError::Malformed(format!("{ty} without members")))?
                .iter()
                .map(Rule::from_json)
                .collect()
        };
        let string = |key: &str| -> Result<String, GrammarError> {
            v.get(key)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| GrammarError::Malformed(format!("{ty} without {key}")))
        };
        Ok(match ty {
            "BLANK" => Rule::Blank,
            "STRING" => Rule::String(string("value")?),
            "PATTERN" => Rule::Pattern(string("value")?),
            "SYMBOL" => Rule::Symbol(string("name")?),
            "SEQ" => {
                let mut flat = Vec::new();
                for m in members()? {
                    match m {
                        Rule::Seq(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                Rule::Seq(flat)
            }
            "CHOICE" => Rule::Choice(members()?),
            "REPEAT" => Rule::Repeat(Box::new(content()?)),
            "REPEAT1" => Rule::Repeat1(Box::new(content()?)),
            "ALIAS" => Rule::Alias {
                content: Box::new(content()?),
                value: string("value")?,
                named: v.get("named").and_then(Value::as_bool).unwrap_or(false),
            },
            "TOKEN" | "IMMEDIATE_TOKEN" => Rule::Token(Box::new(content()?)),
            "FIELD" | "PREC" | "PREC_LEFT" | "PREC_RIGHT" | "PREC_DYNAMIC" | "RESERVED" => {
                content()?
            }
            other => return Err(GrammarError::Malformed(format!("unknown rule type {other}"))),
        })
    }

    fn key(&self) -> usize {
        self as *const Rule as usize
    }

    fn is_separator_token(&self) -> Option<&str> {
        match self {
            Rule::String(s) => Some(s),
            Rule::Token(inner) => inner.is_separator_token(),
            _ => None,
        }
    }
}

/// How consecutive elements of a list are delimited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListStyle {
    /// `A ("S" A)*`, optionally followed by a trailing `"S"`.
    Separated { trailing: bool },
    /// `(A "S")*`: every element carries its own separator.
    Terminated,
    /// `A*` where elements can sit directly next to each other.
    Adjacent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListShape {
    pub separator: String,
    pub style: ListStyle,
    /// Separated lists start with a head element in the enclosing sequence.
    head: bool,
}

impl ListShape {
    pub fn is_adjacent(&self) -> bool {
        self.style == ListStyle::Adjacent
    }
}

/// Recognize the separator of the first repetition found in `rule`.
///
/// Handles `A ("S" A)*` with or without an empty alternative and optional
/// trailing separator, `(A "S")*`, and plain `A*` (empty separator).
pub fn detect_separator(rule: &Rule) -> Result<ListShape, GrammarError> {
    fn search(rule: &Rule) -> Option<Result<ListShape, GrammarError>> {
        match rule {
            Rule::Seq(members) => {
                for i in 0..members.len() {
                    if let Some(shape) = separated_at(members, i) {
                        return Some(Ok(shape));
                    }
                    if let Some(found) = search(&members[i]) {
                        return Some(found);
                    }
                }
                None
            }
            Rule::Choice(members) => members.iter().find_map(search),
            Rule::Repeat(content) | Rule::Repeat1(content) => Some(repeat_shape(content)),
            Rule::Alias { content, .. } | Rule::Token(content) => search(content),
            _ => None,
        }
    }
    search(rule).unwrap_or(Err(GrammarError::NoHeuristic))
}

/// `members[i] ("S" members[i])*` starting at index `i`.
fn separated_at(members: &[Rule], i: usize) -> Option<ListShape> {
    let head = &members[i];
    let Some(Rule::Repeat(content)) = members.get(i + 1) else {
        return None;
    };
    let Rule::Seq(inner) = content.as_ref() else {
        return None;
    };
    if inner.len() != 2 || &inner[1] != head {
        return None;
    }
    let separator = inner[0].is_separator_token()?.to_string();
    let trailing = match members.get(i + 2) {
        Some(Rule::Choice(alts)) => {
            alts.len() == 2
                && alts.contains(&Rule::Blank)
                && alts.iter().any(|a| a.is_separator_token() == Some(separator.as_str()))
        }
        _ => false,
    };
    Some(ListShape {
        separator,
        style: ListStyle::Separated { trailing },
        head: true,
    })
}

fn repeat_shape(content: &Rule) -> Result<ListShape, GrammarError> {
    if let Rule::Seq(inner) = content {
        if inner.len() == 2 {
            match (inner[0].is_separator_token(), inner[1].is_separator_token()) {
                (None, Some(sep)) => {
                    return Ok(ListShape {
                        separator: sep.to_string(),
                        style: ListStyle::Terminated,
                        head: false,
                    })
                }
                (Some(_), None) => return Err(GrammarError::NoHeuristic),
                _ => {}
            }
        }
        if inner.iter().any(|m| m.is_separator_token().is_some()) {
            return Err(GrammarError::NoHeuristic);
        }
    }
    Ok(ListShape {
        separator: String::new(),
        style: ListStyle::Adjacent,
        head: false,
    })
}

/// Per-grammar overrides for lists the heuristics get wrong.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct Exceptions {
    #[serde(default, rename = "exception")]
    entries: Vec<Exception>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
pub struct Exception {
    /// Node kind (rule name) the exception applies to.
    pub rule: String,
    #[serde(flatten)]
    pub kind: ExceptionKind,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExceptionKind {
    /// A single remaining element keeps a trailing separator, as in `(1,)`.
    SingletonTrailingSeparator,
    /// Use this separator for the rule's repetition.
    Separator { separator: String },
}

impl Exceptions {
    pub fn from_toml(src: &str) -> Result<Self, GrammarError> {
        toml::from_str(src).map_err(|e| GrammarError::Exceptions(e.to_string()))
    }

    pub fn for_rule<'a>(&'a self, rule: &'a str) -> impl Iterator<Item = &'a ExceptionKind> + 'a {
        self.entries
            .iter()
            .filter(move |e| e.rule == rule)
            .map(|e| &e.kind)
    }

    pub fn singleton_trailing(&self, rule: &str) -> bool {
        self.for_rule(rule)
            .any(|k| *k == ExceptionKind::SingletonTrailingSeparator)
    }
}

/// A child as seen by the partial matcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Kid<'a> {
    pub kind: &'a str,
    pub named: bool,
}

/// A list found among a node's children: kids `start..end` belong to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListHit {
    pub shape: ListShape,
    pub start: usize,
    pub end: usize,
}

/// Result of matching a node's children against its rule.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Analysis {
    pub lists: Vec<ListHit>,
    /// Kid ranges matched by an alternative that could have been empty.
    pub optional: Vec<(usize, usize)>,
}

pub struct Grammar {
    pub name: String,
    rules: HashMap<String, Rule>,
    transparent: HashSet<String>,
    shapes: HashMap<usize, ListShape>,
    parenthesizable: HashSet<String>,
    exceptions: Exceptions,
}

impl std::fmt::Debug for Grammar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Grammar").field("name", &self.name).finish()
    }
}

impl Grammar {
    pub fn from_json(src: &str, exceptions: Exceptions) -> Result<Self, GrammarError> {
        let v: Value = serde_json::from_str(src).map_err(|e| GrammarError::Malformed(e.to_string()))?;
        let name = v
            .get("name")
            .and_then(Value::as_str)
            .unwrap_or("unknown")
            .to_string();
        let rules_json = v
            .get("rules")
            .and_then(Value::as_object)
            .ok_or_else(|| GrammarError::Malformed("missing rules".into()))?;
        let mut rules = HashMap::new();
        for (k, r) in rules_json {
            rules.insert(k.clone(), Rule::from_json(r)?);
        }
        let names = |key: &str| -> HashSet<String> {
            v.get(key)
                .and_then(Value::as_array)
                .map(|a| {
                    a.iter()
                        .filter_map(|x| match x {
                            Value::String(s) => Some(s.clone()),
                            Value::Object(_) => x.get("name").and_then(Value::as_str).map(str::to_string),
                            _ => None,
                        })
                        .collect()
                })
                .unwrap_or_default()
        };
        let mut transparent: HashSet<String> = names("supertypes");
        transparent.extend(names("inline"));
        transparent.extend(rules.keys().filter(|k| k.starts_with('_')).cloned());

        let mut g = Grammar {
            name,
            rules,
            transparent,
            shapes: HashMap::new(),
            parenthesizable: HashSet::new(),
            exceptions,
        };
        g.shapes = g.collect_shapes();
        g.parenthesizable = g.collect_parenthesizable();
        Ok(g)
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.get(name)
    }

    pub fn exceptions(&self) -> &Exceptions {
        &self.exceptions
    }

    /// Hidden rules, supertypes and inlined rules never appear as nodes.
    pub fn is_transparent(&self, name: &str) -> bool {
        self.transparent.contains(name) || (name.starts_with('_') && !self.rules.contains_key(name))
    }

    pub fn parenthesizable(&self, kind: &str) -> bool {
        self.parenthesizable.contains(kind)
    }

    /// Node kinds that can stand in for the (possibly hidden) symbol `name`.
    pub fn kinds_of(&self, name: &str) -> HashSet<String> {
        let mut out = HashSet::new();
        self.single_kinds(&Rule::Symbol(name.to_string()), &mut HashSet::new(), &mut out);
        out
    }

    fn collect_shapes(&self) -> HashMap<usize, ListShape> {
        let mut out = HashMap::new();
        fn visit(rule: &Rule, out: &mut HashMap<usize, ListShape>) {
            match rule {
                Rule::Seq(members) => {
                    let mut i = 0;
                    while i < members.len() {
                        if let Some(shape) = separated_at(members, i) {
                            out.insert(members[i + 1].key(), shape);
                            visit(&members[i], out);
                            if let Rule::Repeat(c) = &members[i + 1] {
                                visit(c, out);
                            }
                            i += 2;
                            continue;
                        }
                        visit(&members[i], out);
                        i += 1;
                    }
                }
                Rule::Choice(members) => members.iter().for_each(|m| visit(m, out)),
                Rule::Repeat(c) | Rule::Repeat1(c) => {
                    if let Ok(shape) = repeat_shape(c) {
                        out.insert(rule.key(), shape);
                    }
                    visit(c, out);
                }
                Rule::Alias { content, .. } | Rule::Token(content) => visit(content, out),
                _ => {}
            }
        }
        for rule in self.rules.values() {
            visit(rule, &mut out);
        }
        out
    }

    fn collect_parenthesizable(&self) -> HashSet<String> {
        let mut out = HashSet::new();
        for (name, rule) in &self.rules {
            if self.is_transparent(name) {
                continue;
            }
            if let Rule::Seq(m) = rule {
                if m.len() == 3
                    && m[0] == Rule::String("(".into())
                    && m[2] == Rule::String(")".into())
                {
                    self.single_kinds(&m[1], &mut HashSet::new(), &mut out);
                }
            }
        }
        out
    }

    fn single_kinds(&self, rule: &Rule, seen: &mut HashSet<String>, out: &mut HashSet<String>) {
        match rule {
            Rule::Symbol(name) => {
                if self.is_transparent(name) {
                    if seen.insert(name.clone()) {
                        if let Some(r) = self.rules.get(name) {
                            self.single_kinds(r, seen, out);
                        }
                    }
                } else {
                    out.insert(name.clone());
                }
            }
            Rule::Alias { value, named: true, .. } => {
                out.insert(value.clone());
            }
            Rule::Choice(members) => {
                for m in members {
                    self.single_kinds(m, seen, out);
                }
            }
            Rule::Seq(members) => {
                let required: Vec<_> = members.iter().filter(|m| !self.nullable_invisible(m)).collect();
                if required.len() == 1 {
                    self.single_kinds(required[0], seen, out);
                }
            }
            _ => {}
        }
    }

    fn nullable_invisible(&self, rule: &Rule) -> bool {
        match rule {
            Rule::Blank => true,
            Rule::Choice(m) => m.contains(&Rule::Blank),
            Rule::Repeat(_) => true,
            Rule::Symbol(name) => self.is_transparent(name) && !self.rules.contains_key(name),
            _ => false,
        }
    }

    /// Match `kids` against the rule for `kind` and report the lists and
    /// optional regions found. `None` when the rule is unknown or the
    /// children cannot be derived from it.
    pub fn analyze(&self, kind: &str, kids: &[Kid<'_>]) -> Option<Analysis> {
        let rule = self.rules.get(kind)?;
        let mut m = Matcher {
            g: self,
            kids,
            memo: HashMap::new(),
            seq_memo: HashMap::new(),
            active: HashSet::new(),
        };
        if !m.reach(rule, 0).contains(&kids.len()) {
            return None;
        }
        let mut analysis = Analysis::default();
        m.walk(rule, 0, kids.len(), &mut analysis);
        Some(analysis)
    }
}

type Ends = Rc<[usize]>;

struct Matcher<'g, 'k> {
    g: &'g Grammar,
    kids: &'k [Kid<'k>],
    memo: HashMap<(usize, usize), Ends>,
    seq_memo: HashMap<(usize, usize, usize), Ends>,
    active: HashSet<(usize, usize)>,
}

impl<'g, 'k> Matcher<'g, 'k> {
    fn kid_is(&self, pos: usize, kind: &str, named: bool) -> bool {
        self.kids
            .get(pos)
            .is_some_and(|k| k.kind == kind && k.named == named)
    }

    /// All kid positions at which a derivation of `rule` from `pos` can end.
    fn reach(&mut self, rule: &'g Rule, pos: usize) -> Ends {
        let key = (rule.key(), pos);
        if let Some(e) = self.memo.get(&key) {
            return e.clone();
        }
        if !self.active.insert(key) {
            return Rc::from(Vec::new());
        }
        let ends: Vec<usize> = match rule {
            Rule::Blank | Rule::Pattern(_) => vec![pos],
            Rule::String(s) => self.one_if(self.kid_is(pos, s, false), pos),
            Rule::Token(inner) => match inner.is_separator_token() {
                Some(s) => self.one_if(self.kid_is(pos, s, false), pos),
                None => vec![pos],
            },
            Rule::Alias { value, named, .. } => self.one_if(self.kid_is(pos, value, *named), pos),
            Rule::Symbol(name) => {
                if self.g.is_transparent(name) {
                    match self.g.rules.get(name) {
                        Some(r) => self.reach(r, pos).to_vec(),
                        None => vec![pos],
                    }
                } else {
                    self.one_if(self.kid_is(pos, name, true), pos)
                }
            }
            Rule::Seq(members) => self.reach_seq(rule.key(), members, 0, pos).to_vec(),
            Rule::Choice(members) => {
                let mut set = BTreeSet::new();
                for m in members {
                    set.extend(self.reach(m, pos).iter().copied());
                }
                set.into_iter().collect()
            }
            Rule::Repeat(c) => self.closure(c, [pos].into_iter().collect()),
            Rule::Repeat1(c) => {
                let first: BTreeSet<usize> = self.reach(c, pos).iter().copied().collect();
                self.closure(c, first)
            }
        };
        let ends: Ends = Rc::from(ends);
        self.active.remove(&key);
        self.memo.insert(key, ends.clone());
        ends
    }

    fn one_if(&self, ok: bool, pos: usize) -> Vec<usize> {
        if ok {
            vec![pos + 1]
        } else {
            Vec::new()
        }
    }

    fn closure(&mut self, content: &'g Rule, start: BTreeSet<usize>) -> Vec<usize> {
        let mut seen = start.clone();
        let mut work: Vec<usize> = start.into_iter().collect();
        while let Some(p) = work.pop() {
            for &q in self.reach(content, p).iter() {
                if q > p && seen.insert(q) {
                    work.push(q);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn reach_seq(&mut self, key: usize, members: &'g [Rule], i: usize, pos: usize) -> Ends {
        if i == members.len() {
            return Rc::from(vec![pos]);
        }
        let mkey = (key, i, pos);
        if let Some(e) = self.seq_memo.get(&mkey) {
            return e.clone();
        }
        let mut set = BTreeSet::new();
        for &p in self.reach(&members[i], pos).iter() {
            set.extend(self.reach_seq(key, members, i + 1, p).iter().copied());
        }
        let ends: Ends = Rc::from(set.into_iter().collect::<Vec<_>>());
        self.seq_memo.insert(mkey, ends.clone());
        ends
    }

    /// Pick one derivation of `rule` over `pos..end`, preferring longer
    /// prefixes, and record what it passes through.
    fn walk(&mut self, rule: &'g Rule, pos: usize, end: usize, out: &mut Analysis) {
        match rule {
            Rule::Symbol(name) if self.g.is_transparent(name) => {
                if let Some(r) = self.g.rules.get(name) {
                    self.walk(r, pos, end, out);
                }
            }
            Rule::Seq(members) => {
                let key = rule.key();
                let mut p = pos;
                let mut region: Option<(usize, ListShape, usize)> = None;
                for i in 0..members.len() {
                    if region.is_none() {
                        if let Some(shape) = members.get(i + 1).and_then(|m| self.g.shapes.get(&m.key())) {
                            if shape.head {
                                let last = match shape.style {
                                    ListStyle::Separated { trailing: true } => i + 2,
                                    _ => i + 1,
                                };
                                region = Some((p, shape.clone(), last));
                            }
                        }
                    }
                    let candidates = self.reach(&members[i], p);
                    let next = candidates
                        .iter()
                        .rev()
                        .copied()
                        .find(|&q| q <= end && self.reach_seq(key, members, i + 1, q).contains(&end))
                        .expect("derivation exists");
                    self.walk(&members[i], p, next, out);
                    p = next;
                    if let Some((start, shape, last)) = &region {
                        if *last == i {
                            out.lists.push(ListHit {
                                shape: shape.clone(),
                                start: *start,
                                end: p,
                            });
                            region = None;
                        }
                    }
                }
            }
            Rule::Choice(members) => {
                let chosen = members
                    .iter()
                    .find(|m| self.reach(m, pos).contains(&end))
                    .expect("derivation exists");
                if members.contains(&Rule::Blank) && end > pos && *chosen != Rule::Blank {
                    out.optional.push((pos, end));
                }
                if *chosen == Rule::Blank {
                    if let Some(shape) = members.iter().find_map(|m| self.first_shape(m)) {
                        out.lists.push(ListHit {
                            shape,
                            start: pos,
                            end: pos,
                        });
                    }
                }
                self.walk(chosen, pos, end, out);
            }
            Rule::Repeat(c) | Rule::Repeat1(c) => {
                let repeat_key = rule.key();
                let mut p = pos;
                while p < end {
                    let candidates = self.reach(c, p);
                    let Some(q) = candidates
                        .iter()
                        .rev()
                        .copied()
                        .find(|&q| q > p && q <= end && self.closure(c, [q].into_iter().collect()).contains(&end))
                    else {
                        break;
                    };
                    self.walk(c, p, q, out);
                    p = q;
                }
                if let Some(shape) = self.g.shapes.get(&repeat_key) {
                    if !shape.head {
                        out.lists.push(ListHit {
                            shape: shape.clone(),
                            start: pos,
                            end,
                        });
                    }
                }
            }
            _ => {}
        }
    }

    fn first_shape(&self, rule: &Rule) -> Option<ListShape> {
        match rule {
            Rule::Seq(members) => {
                for (i, m) in members.iter().enumerate() {
                    if separated_at(members, i).is_some() {
                        return self.g.shapes.get(&members[i + 1].key()).cloned();
                    }
                    if let Some(s) = self.first_shape(m) {
                        return Some(s);
                    }
                }
                None
            }
            Rule::Repeat(_) | Rule::Repeat1(_) => self.g.shapes.get(&rule.key()).cloned(),
            Rule::Choice(members) => members.iter().find_map(|m| self.first_shape(m)),
            Rule::Symbol(name) if self.g.is_transparent(name) => {
                self.g.rules.get(name).and_then(|r| self.first_shape(r))
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::language;

    fn toy() -> &'static Grammar {
        language("toy").unwrap().grammar()
    }

    fn kids<'a>(spec: &'a [(&'a str, bool)]) -> Vec<Kid<'a>> {
        spec.iter().map(|&(kind, named)| Kid { kind, named }).collect()
    }

    #[test]
    fn separated_list_at_least_one() {
        let shape = detect_separator(toy().rule("sequence").unwrap()).unwrap();
        assert_eq!(shape.separator, "|");
        assert_eq!(shape.style, ListStyle::Separated { trailing: false });
    }

    #[test]
    fn separated_list_with_trailing() {
        let shape = detect_separator(toy().rule("block").unwrap()).unwrap();
        assert_eq!(shape.separator, ";");
        assert_eq!(shape.style, ListStyle::Separated { trailing: true });
    }

    #[test]
    fn terminated_list() {
        let shape = detect_separator(toy().rule("function_declaration").unwrap()).unwrap();
        assert_eq!(shape.separator, ",");
        assert_eq!(shape.style, ListStyle::Terminated);
    }

    #[test]
    fn adjacent_sexp_children() {
        let shape = detect_separator(toy().rule("sexp").unwrap()).unwrap();
        assert_eq!(shape.separator, "");
        assert!(shape.is_adjacent());
    }

    #[test]
    fn javascript_array_uses_comma() {
        let g = language("javascript").unwrap().grammar();
        assert_eq!(detect_separator(g.rule("array").unwrap()).unwrap().separator, ",");
        assert_eq!(detect_separator(g.rule("arguments").unwrap()).unwrap().separator, ",");
        let params = detect_separator(g.rule("formal_parameters").unwrap()).unwrap();
        assert_eq!(params.style, ListStyle::Separated { trailing: true });
    }

    #[test]
    fn leading_separator_repeat_has_no_heuristic() {
        let rule = Rule::Repeat(Box::new(Rule::Seq(vec![
            Rule::String(",".into()),
            Rule::Symbol("x".into()),
        ])));
        assert_eq!(detect_separator(&rule), Err(GrammarError::NoHeuristic));
        assert_eq!(detect_separator(&Rule::Blank), Err(GrammarError::NoHeuristic));
    }

    #[test]
    fn analyze_finds_terminated_region_after_open_paren() {
        let k = kids(&[
            ("type", true),
            ("identifier", true),
            ("(", false),
            ("type", true),
            (",", false),
            ("type", true),
            (",", false),
            (")", false),
            (";", false),
        ]);
        let a = toy().analyze("function_declaration", &k).unwrap();
        assert_eq!(a.lists.len(), 1);
        assert_eq!((a.lists[0].start, a.lists[0].end), (3, 7));
    }

    #[test]
    fn analyze_reports_empty_list_position() {
        let k = kids(&[("[", false), ("]", false)]);
        let a = toy().analyze("list", &k).unwrap();
        assert_eq!(a.lists.len(), 1);
        assert_eq!((a.lists[0].start, a.lists[0].end), (1, 1));

        let g = language("javascript").unwrap().grammar();
        let a = g.analyze("array", &k).unwrap();
        assert_eq!((a.lists[0].start, a.lists[0].end), (1, 1));
    }

    #[test]
    fn analyze_rejects_underivable_children() {
        let k = kids(&[("[", false), (",", false), ("<", false)]);
        assert!(toy().analyze("list", &k).is_none());
        assert!(toy().analyze("no_such_rule", &k).is_none());
    }

    #[test]
    fn parenthesizable_expressions() {
        let js = language("javascript").unwrap().grammar();
        assert!(js.parenthesizable("identifier"));
        assert!(js.parenthesizable("binary_expression"));
        assert!(!js.parenthesizable("expression_statement"));
        let py = language("python").unwrap().grammar();
        assert!(py.parenthesizable("binary_operator"));
        assert!(py.parenthesizable("integer"));
    }

    #[test]
    fn exception_table_parses() {
        let py = language("python").unwrap().grammar();
        assert!(py.exceptions().singleton_trailing("tuple"));
        assert!(!py.exceptions().singleton_trailing("list"));
        assert!(Exceptions::from_toml("[[exception]]\nrule = 1").is_err());
    }
}
