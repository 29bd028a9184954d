//! A small JavaScript interpreter for running instrumented shadow copies in
//! tests and demos. It covers the expression and statement forms the
//! fixtures use; `fetch` is handed to a caller-supplied poster.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::rc::Rc;

use serde_json::Value as Json;
use thiserror::Error;

use crate::syntax::{parse_document, NodeId, SyntaxNode, SyntaxTree};
use crate::tools::unescape;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SandboxError {
    #[error("source does not parse: {0}")]
    Parse(String),
    #[error("unsupported syntax `{0}`")]
    Unsupported(String),
    #[error("{0} is not defined")]
    Undefined(String),
    #[error("type error: {0}")]
    Type(String),
    #[error("fetch failed: {0}")]
    Fetch(String),
    #[error("step budget exhausted")]
    Budget,
}

type R<T> = Result<T, SandboxError>;

/// Receives `fetch(url, {body})` calls.
pub type Poster<'p> = &'p mut dyn FnMut(&str, &str) -> Result<(), String>;

#[derive(Clone)]
pub enum Val {
    Undefined,
    Null,
    Bool(bool),
    Num(f64),
    Str(Rc<str>),
    Array(Rc<RefCell<Vec<Val>>>),
    Object(Rc<RefCell<Vec<(String, Val)>>>),
    Closure(Rc<Closure>),
    Native(&'static str),
}

pub struct Closure {
    params: Vec<String>,
    body: NodeId,
    /// Arrow function with an expression body.
    expression_body: bool,
    env: Env,
}

impl std::fmt::Debug for Val {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_js_string())
    }
}

fn num_string(n: f64) -> String {
    if n.is_nan() {
        "NaN".into()
    } else if n.is_infinite() {
        if n > 0.0 { "Infinity" } else { "-Infinity" }.into()
    } else if n == n.trunc() && n.abs() < 1e21 {
        format!("{}", n as i64)
    } else {
        format!("{n}")
    }
}

impl Val {
    fn str(s: &str) -> Val {
        Val::Str(Rc::from(s))
    }

    pub fn truthy(&self) -> bool {
        match self {
            Val::Undefined | Val::Null => false,
            Val::Bool(b) => *b,
            Val::Num(n) => *n != 0.0 && !n.is_nan(),
            Val::Str(s) => !s.is_empty(),
            _ => true,
        }
    }

    fn to_num(&self) -> f64 {
        match self {
            Val::Num(n) => *n,
            Val::Bool(b) => *b as u8 as f64,
            Val::Null => 0.0,
            Val::Str(s) => {
                let t = s.trim();
                if t.is_empty() {
                    0.0
                } else {
                    t.parse().unwrap_or(f64::NAN)
                }
            }
            _ => f64::NAN,
        }
    }

    pub fn to_js_string(&self) -> String {
        match self {
            Val::Undefined => "undefined".into(),
            Val::Null => "null".into(),
            Val::Bool(b) => b.to_string(),
            Val::Num(n) => num_string(*n),
            Val::Str(s) => s.to_string(),
            Val::Array(a) => a
                .borrow()
                .iter()
                .map(|v| match v {
                    Val::Undefined | Val::Null => String::new(),
                    v => v.to_js_string(),
                })
                .collect::<Vec<_>>()
                .join(","),
            Val::Object(_) => "[object Object]".into(),
            Val::Closure(_) | Val::Native(_) => "function".into(),
        }
    }

    /// The value as JSON; `None` where JSON has no value (functions, undefined).
    pub fn to_json(&self) -> Option<Json> {
        Some(match self {
            Val::Undefined | Val::Closure(_) | Val::Native(_) => return None,
            Val::Null => Json::Null,
            Val::Bool(b) => Json::Bool(*b),
            Val::Num(n) if !n.is_finite() => Json::Null,
            Val::Num(n) if *n == n.trunc() && n.abs() < 9e15 => Json::from(*n as i64),
            Val::Num(n) => Json::from(*n),
            Val::Str(s) => Json::String(s.to_string()),
            Val::Array(a) => Json::Array(a.borrow().iter().map(|v| v.to_json().unwrap_or(Json::Null)).collect()),
            Val::Object(o) => Json::Object(
                o.borrow()
                    .iter()
                    .filter_map(|(k, v)| v.to_json().map(|j| (k.clone(), j)))
                    .collect(),
            ),
        })
    }

    fn get(&self, key: &str) -> Val {
        match self {
            Val::Object(o) => o
                .borrow()
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.clone())
                .unwrap_or(Val::Undefined),
            Val::Array(a) => match key {
                "length" => Val::Num(a.borrow().len() as f64),
                _ => key
                    .parse::<usize>()
                    .ok()
                    .and_then(|i| a.borrow().get(i).cloned())
                    .unwrap_or(Val::Undefined),
            },
            Val::Str(s) => match key {
                "length" => Val::Num(s.chars().count() as f64),
                _ => key
                    .parse::<usize>()
                    .ok()
                    .and_then(|i| s.chars().nth(i))
                    .map(|c| Val::str(&c.to_string()))
                    .unwrap_or(Val::Undefined),
            },
            _ => Val::Undefined,
        }
    }
}

#[derive(Default)]
struct Scope {
    vars: HashMap<String, Val>,
    parent: Option<Env>,
}

type Env = Rc<RefCell<Scope>>;

fn child(env: &Env) -> Env {
    Rc::new(RefCell::new(Scope {
        vars: HashMap::new(),
        parent: Some(env.clone()),
    }))
}

fn lookup(env: &Env, name: &str) -> Option<Val> {
    let s = env.borrow();
    match s.vars.get(name) {
        Some(v) => Some(v.clone()),
        None => s.parent.as_ref().and_then(|p| lookup(p, name)),
    }
}

fn assign(env: &Env, name: &str, v: Val) -> bool {
    let mut s = env.borrow_mut();
    if let Some(slot) = s.vars.get_mut(name) {
        *slot = v;
        return true;
    }
    match s.parent.clone() {
        Some(p) => {
            drop(s);
            assign(&p, name, v)
        }
        None => false,
    }
}

enum Flow {
    Normal,
    Return(Val),
    Break,
    Continue,
}

/// Interpreter over one parsed program.
pub struct Sandbox<'p> {
    tree: Rc<SyntaxTree>,
    globals: Env,
    poster: Poster<'p>,
    /// Lines written with `console.log`.
    pub console: Vec<String>,
    steps: u64,
    budget: u64,
}

fn named(node: SyntaxNode<'_>) -> Vec<SyntaxNode<'_>> {
    node.syntax_children().filter(|c| c.is_named()).collect()
}

fn kids(node: SyntaxNode<'_>) -> Vec<SyntaxNode<'_>> {
    node.syntax_children().filter(|c| c.kind() != crate::syntax::GAP).collect()
}

impl<'p> Sandbox<'p> {
    pub fn new(source: &str, poster: Poster<'p>) -> R<Self> {
        let tree = parse_document(source, "javascript").map_err(|e| SandboxError::Parse(e.to_string()))?;
        if tree.has_errors() {
            return Err(SandboxError::Parse("syntax error".into()));
        }
        let globals: Env = Rc::new(RefCell::new(Scope::default()));
        {
            let mut g = globals.borrow_mut();
            let obj = |pairs: &[(&str, Val)]| {
                Val::Object(Rc::new(RefCell::new(
                    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                )))
            };
            g.vars.insert("fetch".into(), Val::Native("fetch"));
            g.vars.insert("undefined".into(), Val::Undefined);
            g.vars.insert("console".into(), obj(&[("log", Val::Native("console.log"))]));
            g.vars.insert("JSON".into(), obj(&[("stringify", Val::Native("JSON.stringify"))]));
            g.vars.insert(
                "Math".into(),
                obj(&[
                    ("floor", Val::Native("Math.floor")),
                    ("round", Val::Native("Math.round")),
                    ("sqrt", Val::Native("Math.sqrt")),
                    ("abs", Val::Native("Math.abs")),
                    ("max", Val::Native("Math.max")),
                    ("min", Val::Native("Math.min")),
                    ("PI", Val::Num(std::f64::consts::PI)),
                ]),
            );
        }
        Ok(Sandbox {
            tree: Rc::new(tree),
            globals,
            poster,
            console: Vec::new(),
            steps: 0,
            budget: 1_000_000,
        })
    }

    /// Run the whole program.
    pub fn run(&mut self) -> R<()> {
        let root = self.tree.root().id();
        let env = self.globals.clone();
        self.hoist(root, &env)?;
        for s in self.node_kids(root) {
            if let Flow::Return(_) = self.exec(s, &env)? {
                break;
            }
        }
        Ok(())
    }

    /// A global binding after the run.
    pub fn global(&self, name: &str) -> Option<Val> {
        lookup(&self.globals, name)
    }

    fn node(&self, id: NodeId) -> SyntaxNode<'_> {
        self.tree.node(id).expect("node of the sandbox tree")
    }

    fn node_kids(&self, id: NodeId) -> Vec<NodeId> {
        named(self.node(id)).iter().map(|n| n.id()).collect()
    }

    fn tick(&mut self) -> R<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(SandboxError::Budget);
        }
        Ok(())
    }

    fn hoist(&mut self, block: NodeId, env: &Env) -> R<()> {
        for s in self.node_kids(block) {
            if self.node(s).kind() == "function_declaration" {
                let f = self.function(s, env, false)?;
                let name = named(self.node(s))[0].text().to_string();
                env.borrow_mut().vars.insert(name, f);
            }
        }
        Ok(())
    }

    fn unsupported<T>(&self, id: NodeId) -> R<T> {
        let n = self.node(id);
        Err(SandboxError::Unsupported(format!("{} `{}`", n.kind(), n.text())))
    }

    fn exec(&mut self, id: NodeId, env: &Env) -> R<Flow> {
        self.tick()?;
        let node = self.node(id);
        let kind = node.kind();
        let parts: Vec<NodeId> = named(node).iter().map(|n| n.id()).collect();
        match kind {
            "expression_statement" => {
                self.eval(parts[0], env)?;
                Ok(Flow::Normal)
            }
            "empty_statement" | "comment" | "function_declaration" => Ok(Flow::Normal),
            "lexical_declaration" | "variable_declaration" => {
                for d in parts {
                    let dn: Vec<NodeId> = self.node_kids(d);
                    let name_node = self.node(dn[0]);
                    if name_node.kind() != "identifier" {
                        return self.unsupported(dn[0]);
                    }
                    let name = name_node.text().to_string();
                    let v = match dn.get(1) {
                        Some(&e) => self.eval(e, env)?,
                        None => Val::Undefined,
                    };
                    env.borrow_mut().vars.insert(name, v);
                }
                Ok(Flow::Normal)
            }
            "statement_block" => {
                let inner = child(env);
                self.hoist(id, &inner)?;
                for s in parts {
                    match self.exec(s, &inner)? {
                        Flow::Normal => {}
                        other => return Ok(other),
                    }
                }
                Ok(Flow::Normal)
            }
            "return_statement" => Ok(Flow::Return(match parts.first() {
                Some(&e) => self.eval(e, env)?,
                None => Val::Undefined,
            })),
            "break_statement" => Ok(Flow::Break),
            "continue_statement" => Ok(Flow::Continue),
            "if_statement" => {
                if self.eval(parts[0], env)?.truthy() {
                    self.exec(parts[1], env)
                } else if let Some(&alt) = parts.get(2) {
                    let alt = self.node_kids(alt)[0];
                    self.exec(alt, env)
                } else {
                    Ok(Flow::Normal)
                }
            }
            "while_statement" => {
                while self.eval(parts[0], env)?.truthy() {
                    match self.exec(parts[1], env)? {
                        Flow::Break => break,
                        Flow::Return(v) => return Ok(Flow::Return(v)),
                        _ => {}
                    }
                }
                Ok(Flow::Normal)
            }
            "for_statement" => self.exec_for(id, env),
            _ => self.unsupported(id),
        }
    }

    fn exec_for(&mut self, id: NodeId, env: &Env) -> R<Flow> {
        let all: Vec<(NodeId, String, bool)> = kids(self.node(id))
            .iter()
            .map(|n| (n.id(), n.kind().to_string(), n.is_named()))
            .collect();
        let open = all.iter().position(|k| k.1 == "(").ok_or(SandboxError::Unsupported("for".into()))?;
        let close = all.iter().rposition(|k| k.1 == ")").ok_or(SandboxError::Unsupported("for".into()))?;
        let header = &all[open + 1..close];
        let body = all[close + 1].0;
        let scope = child(env);
        let mut i = 0;
        // initializer: a declaration, or an expression and ";", or ";"
        let mut init_decl = None;
        let mut init_expr = None;
        match header.get(i) {
            Some((n, k, _)) if k == "lexical_declaration" || k == "variable_declaration" => {
                init_decl = Some(*n);
                i += 1;
            }
            Some((_, k, _)) if k == ";" => i += 1,
            Some((n, _, true)) => {
                init_expr = Some(*n);
                i += 2;
            }
            _ => {}
        }
        let mut cond = None;
        match header.get(i) {
            Some((_, k, _)) if k == ";" => i += 1,
            Some((n, _, true)) => {
                cond = Some(*n);
                i += 2;
            }
            _ => {}
        }
        let incr = header.get(i).filter(|h| h.2).map(|h| h.0);

        if let Some(d) = init_decl {
            self.exec(d, &scope)?;
        }
        if let Some(e) = init_expr {
            self.eval(e, &scope)?;
        }
        loop {
            if let Some(c) = cond {
                let c = if self.node(c).kind() == "expression_statement" { self.node_kids(c)[0] } else { c };
                if !self.eval(c, &scope)?.truthy() {
                    break;
                }
            }
            match self.exec(body, &scope)? {
                Flow::Break => break,
                Flow::Return(v) => return Ok(Flow::Return(v)),
                _ => {}
            }
            if let Some(e) = incr {
                self.eval(e, &scope)?;
            }
        }
        Ok(Flow::Normal)
    }

    fn function(&mut self, id: NodeId, env: &Env, arrow: bool) -> R<Val> {
        let parts = self.node_kids(id);
        let body = *parts.last().expect("function body");
        let params_node = if arrow { parts[0] } else { parts[parts.len() - 2] };
        let pn = self.node(params_node);
        let params = if pn.kind() == "identifier" {
            vec![pn.text().to_string()]
        } else {
            let mut out = Vec::new();
            for p in named(pn) {
                if p.kind() != "identifier" {
                    return self.unsupported(p.id());
                }
                out.push(p.text().to_string());
            }
            out
        };
        Ok(Val::Closure(Rc::new(Closure {
            params,
            body,
            expression_body: arrow && self.node(body).kind() != "statement_block",
            env: env.clone(),
        })))
    }

    fn call(&mut self, f: &Val, this: Option<&Val>, args: Vec<Val>) -> R<Val> {
        self.tick()?;
        match f {
            Val::Closure(c) => {
                let scope = child(&c.env);
                for (i, p) in c.params.iter().enumerate() {
                    scope
                        .borrow_mut()
                        .vars
                        .insert(p.clone(), args.get(i).cloned().unwrap_or(Val::Undefined));
                }
                if c.expression_body {
                    return self.eval(c.body, &scope);
                }
                match self.exec(c.body, &scope)? {
                    Flow::Return(v) => Ok(v),
                    _ => Ok(Val::Undefined),
                }
            }
            Val::Native(name) => self.native(name, this, args),
            other => Err(SandboxError::Type(format!("{} is not a function", other.to_js_string()))),
        }
    }

    fn native(&mut self, name: &str, this: Option<&Val>, args: Vec<Val>) -> R<Val> {
        let arg = |i: usize| args.get(i).cloned().unwrap_or(Val::Undefined);
        let nums = || args.iter().map(Val::to_num);
        Ok(match name {
            "fetch" => {
                let url = arg(0).to_js_string();
                let body = arg(1).get("body");
                let body = match body {
                    Val::Undefined => String::new(),
                    b => b.to_js_string(),
                };
                (self.poster)(&url, &body).map_err(SandboxError::Fetch)?;
                Val::Undefined
            }
            "console.log" => {
                let line = args.iter().map(Val::to_js_string).collect::<Vec<_>>().join(" ");
                self.console.push(line);
                Val::Undefined
            }
            "JSON.stringify" => match arg(0).to_json() {
                Some(j) => Val::str(&j.to_string()),
                None => Val::Undefined,
            },
            "Math.floor" => Val::Num(arg(0).to_num().floor()),
            "Math.round" => Val::Num((arg(0).to_num() + 0.5).floor()),
            "Math.sqrt" => Val::Num(arg(0).to_num().sqrt()),
            "Math.abs" => Val::Num(arg(0).to_num().abs()),
            "Math.max" => Val::Num(nums().fold(f64::NEG_INFINITY, f64::max)),
            "Math.min" => Val::Num(nums().fold(f64::INFINITY, f64::min)),
            method => return self.method(method, this, args),
        })
    }

    fn method(&mut self, name: &str, this: Option<&Val>, args: Vec<Val>) -> R<Val> {
        let Some(Val::Array(a)) = this else {
            return Err(SandboxError::Type(format!("{name} needs an array")));
        };
        let items: Vec<Val> = a.borrow().clone();
        let f = args.first().cloned().unwrap_or(Val::Undefined);
        let array = |v: Vec<Val>| Val::Array(Rc::new(RefCell::new(v)));
        Ok(match name {
            "map" => {
                let mut out = Vec::with_capacity(items.len());
                for (i, v) in items.into_iter().enumerate() {
                    out.push(self.call(&f, None, vec![v, Val::Num(i as f64)])?);
                }
                array(out)
            }
            "filter" => {
                let mut out = Vec::new();
                for (i, v) in items.into_iter().enumerate() {
                    if self.call(&f, None, vec![v.clone(), Val::Num(i as f64)])?.truthy() {
                        out.push(v);
                    }
                }
                array(out)
            }
            "forEach" => {
                for (i, v) in items.into_iter().enumerate() {
                    self.call(&f, None, vec![v, Val::Num(i as f64)])?;
                }
                Val::Undefined
            }
            "reduce" => {
                let mut it = items.into_iter();
                let mut acc = match args.get(1) {
                    Some(init) => init.clone(),
                    None => it
                        .next()
                        .ok_or_else(|| SandboxError::Type("reduce of empty array".into()))?,
                };
                for v in it {
                    acc = self.call(&f, None, vec![acc, v])?;
                }
                acc
            }
            "push" => {
                a.borrow_mut().extend(args);
                Val::Num(a.borrow().len() as f64)
            }
            "join" => {
                let sep = match args.first() {
                    Some(Val::Str(s)) => s.to_string(),
                    _ => ",".into(),
                };
                Val::str(&items.iter().map(Val::to_js_string).collect::<Vec<_>>().join(&sep))
            }
            "includes" => Val::Bool(items.iter().any(|v| strict_eq(v, &f))),
            other => return Err(SandboxError::Undefined(format!("Array.prototype.{other}"))),
        })
    }

    fn member(&self, obj: &Val, key: &str) -> Val {
        match (obj, key) {
            (Val::Array(_), "map" | "filter" | "forEach" | "reduce" | "push" | "join" | "includes") => {
                Val::Native(match key {
                    "map" => "map",
                    "filter" => "filter",
                    "forEach" => "forEach",
                    "reduce" => "reduce",
                    "push" => "push",
                    "join" => "join",
                    _ => "includes",
                })
            }
            _ => obj.get(key),
        }
    }

    fn eval(&mut self, id: NodeId, env: &Env) -> R<Val> {
        self.tick()?;
        let tree = self.tree.clone();
        let node = tree.node(id).expect("node of the sandbox tree");
        let kind = node.kind();
        let text = node.text().to_string();
        let parts: Vec<NodeId> = named(node).iter().map(|n| n.id()).collect();
        let op = || {
            kids(node)
                .iter()
                .find(|k| !k.is_named())
                .map(|k| k.text().to_string())
                .unwrap_or_default()
        };
        match kind {
            "number" => {
                let t = text.replace('_', "");
                let n = if let Some(h) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
                    i64::from_str_radix(h, 16).map(|v| v as f64).unwrap_or(f64::NAN)
                } else {
                    t.parse().unwrap_or(f64::NAN)
                };
                Ok(Val::Num(n))
            }
            "string" => Ok(Val::str(&unescape(&text[1..text.len() - 1]).text)),
            "template_string" => {
                let mut out = String::new();
                for k in kids(node) {
                    match k.kind() {
                        "`" => {}
                        "template_substitution" => {
                            let e = named(k)[0].id();
                            let v = self.eval(e, env)?;
                            out.push_str(&v.to_js_string());
                        }
                        _ => out.push_str(&unescape(k.text()).text),
                    }
                }
                Ok(Val::str(&out))
            }
            "true" => Ok(Val::Bool(true)),
            "false" => Ok(Val::Bool(false)),
            "null" => Ok(Val::Null),
            "undefined" => Ok(Val::Undefined),
            "identifier" => lookup(env, &text).ok_or(SandboxError::Undefined(text)),
            "parenthesized_expression" => self.eval(parts[0], env),
            "sequence_expression" => {
                let mut last = Val::Undefined;
                for p in parts {
                    last = self.eval(p, env)?;
                }
                Ok(last)
            }
            "array" => {
                let mut out = Vec::with_capacity(parts.len());
                for p in parts {
                    out.push(self.eval(p, env)?);
                }
                Ok(Val::Array(Rc::new(RefCell::new(out))))
            }
            "object" => {
                let mut out: Vec<(String, Val)> = Vec::new();
                for p in parts {
                    let pn = self.node(p);
                    match pn.kind() {
                        "pair" => {
                            let kv = self.node_kids(p);
                            let kn = self.node(kv[0]);
                            let key = match kn.kind() {
                                "string" => unescape(&kn.text()[1..kn.text().len() - 1]).text,
                                _ => kn.text().to_string(),
                            };
                            let v = self.eval(kv[1], env)?;
                            out.retain(|(k, _)| *k != key);
                            out.push((key, v));
                        }
                        "shorthand_property_identifier" => {
                            let key = pn.text().to_string();
                            let v = lookup(env, &key).ok_or_else(|| SandboxError::Undefined(key.clone()))?;
                            out.push((key, v));
                        }
                        "comment" => {}
                        _ => return self.unsupported(p),
                    }
                }
                Ok(Val::Object(Rc::new(RefCell::new(out))))
            }
            "arrow_function" => self.function(id, env, true),
            "function_expression" | "function" => self.function(id, env, false),
            "member_expression" => {
                let obj = self.eval(parts[0], env)?;
                let key = self.node(parts[1]).text().to_string();
                Ok(self.member(&obj, &key))
            }
            "subscript_expression" => {
                let obj = self.eval(parts[0], env)?;
                let key = self.eval(parts[1], env)?;
                Ok(obj.get(&key.to_js_string()))
            }
            "call_expression" => {
                let callee = parts[0];
                let args_node = parts[1];
                let (f, this) = if self.node(callee).kind() == "member_expression" {
                    let mp = self.node_kids(callee);
                    let obj = self.eval(mp[0], env)?;
                    let key = self.node(mp[1]).text().to_string();
                    (self.member(&obj, &key), Some(obj))
                } else {
                    (self.eval(callee, env)?, None)
                };
                let mut args = Vec::new();
                for a in self.node_kids(args_node) {
                    args.push(self.eval(a, env)?);
                }
                self.call(&f, this.as_ref(), args)
            }
            "unary_expression" => {
                let v = self.eval(parts[0], env)?;
                Ok(match op().as_str() {
                    "-" => Val::Num(-v.to_num()),
                    "+" => Val::Num(v.to_num()),
                    "!" => Val::Bool(!v.truthy()),
                    "typeof" => Val::str(match v {
                        Val::Undefined => "undefined",
                        Val::Num(_) => "number",
                        Val::Str(_) => "string",
                        Val::Bool(_) => "boolean",
                        Val::Closure(_) | Val::Native(_) => "function",
                        _ => "object",
                    }),
                    _ => return self.unsupported(id),
                })
            }
            "binary_expression" => {
                let o = op();
                let l = self.eval(parts[0], env)?;
                match o.as_str() {
                    "&&" => return if l.truthy() { self.eval(parts[1], env) } else { Ok(l) },
                    "||" => return if l.truthy() { Ok(l) } else { self.eval(parts[1], env) },
                    "??" => {
                        return match l {
                            Val::Undefined | Val::Null => self.eval(parts[1], env),
                            l => Ok(l),
                        }
                    }
                    _ => {}
                }
                let r = self.eval(parts[1], env)?;
                binary(&o, &l, &r).ok_or_else(|| SandboxError::Unsupported(format!("operator {o}")))
            }
            "ternary_expression" => {
                if self.eval(parts[0], env)?.truthy() {
                    self.eval(parts[1], env)
                } else {
                    self.eval(parts[2], env)
                }
            }
            "assignment_expression" | "augmented_assignment_expression" => {
                let o = op();
                let v = self.eval(parts[1], env)?;
                let v = if kind == "augmented_assignment_expression" {
                    let old = self.eval(parts[0], env)?;
                    binary(o.trim_end_matches('='), &old, &v).ok_or_else(|| SandboxError::Unsupported(o.clone()))?
                } else {
                    v
                };
                self.store(parts[0], v.clone(), env)?;
                Ok(v)
            }
            "update_expression" => {
                let o = op();
                let old = self.eval(parts[0], env)?.to_num();
                let new = if o == "++" { old + 1.0 } else { old - 1.0 };
                self.store(parts[0], Val::Num(new), env)?;
                let prefix = kids(node).first().is_some_and(|k| !k.is_named());
                Ok(Val::Num(if prefix { new } else { old }))
            }
            _ => self.unsupported(id),
        }
    }

    fn store(&mut self, target: NodeId, v: Val, env: &Env) -> R<()> {
        let tree = self.tree.clone();
        let node = tree.node(target).expect("node of the sandbox tree");
        match node.kind() {
            "identifier" => {
                let name = node.text().to_string();
                if !assign(env, &name, v) {
                    return Err(SandboxError::Undefined(name));
                }
                Ok(())
            }
            "subscript_expression" | "member_expression" => {
                let parts = self.node_kids(target);
                let obj = self.eval(parts[0], env)?;
                let key = if node.kind() == "member_expression" {
                    self.node(parts[1]).text().to_string()
                } else {
                    self.eval(parts[1], env)?.to_js_string()
                };
                match obj {
                    Val::Array(a) => {
                        let i: usize = key.parse().map_err(|_| SandboxError::Type(format!("bad index {key}")))?;
                        let mut a = a.borrow_mut();
                        if a.len() <= i {
                            a.resize(i + 1, Val::Undefined);
                        }
                        a[i] = v;
                    }
                    Val::Object(o) => {
                        let mut o = o.borrow_mut();
                        match o.iter_mut().find(|(k, _)| *k == key) {
                            Some(slot) => slot.1 = v,
                            None => o.push((key, v)),
                        }
                    }
                    other => return Err(SandboxError::Type(format!("cannot set {key} on {}", other.to_js_string()))),
                }
                Ok(())
            }
            _ => self.unsupported(target),
        }
    }
}

fn strict_eq(a: &Val, b: &Val) -> bool {
    match (a, b) {
        (Val::Undefined, Val::Undefined) | (Val::Null, Val::Null) => true,
        (Val::Bool(x), Val::Bool(y)) => x == y,
        (Val::Num(x), Val::Num(y)) => x == y,
        (Val::Str(x), Val::Str(y)) => x == y,
        (Val::Array(x), Val::Array(y)) => Rc::ptr_eq(x, y),
        (Val::Object(x), Val::Object(y)) => Rc::ptr_eq(x, y),
        (Val::Closure(x), Val::Closure(y)) => Rc::ptr_eq(x, y),
        (Val::Native(x), Val::Native(y)) => x == y,
        _ => false,
    }
}

fn binary(op: &str, l: &Val, r: &Val) -> Option<Val> {
    let (a, b) = (l.to_num(), r.to_num());
    let stringy = matches!(l, Val::Str(_) | Val::Array(_) | Val::Object(_)) || matches!(r, Val::Str(_) | Val::Array(_) | Val::Object(_));
    Some(match op {
        "+" if stringy => {
            let mut s = l.to_js_string();
            let _ = write!(s, "{}", r.to_js_string());
            Val::str(&s)
        }
        "+" => Val::Num(a + b),
        "-" => Val::Num(a - b),
        "*" => Val::Num(a * b),
        "/" => Val::Num(a / b),
        "%" => Val::Num(a % b),
        "**" => Val::Num(a.powf(b)),
        "===" => Val::Bool(strict_eq(l, r)),
        "!==" => Val::Bool(!strict_eq(l, r)),
        "==" => Val::Bool(strict_eq(l, r) || (!stringy && a == b)),
        "!=" => Val::Bool(!(strict_eq(l, r) || (!stringy && a == b))),
        "<" | ">" | "<=" | ">=" => {
            if let (Val::Str(x), Val::Str(y)) = (l, r) {
                let o = x.cmp(y);
                Val::Bool(match op {
                    "<" => o.is_lt(),
                    ">" => o.is_gt(),
                    "<=" => o.is_le(),
                    _ => o.is_ge(),
                })
            } else {
                Val::Bool(match op {
                    "<" => a < b,
                    ">" => a > b,
                    "<=" => a <= b,
                    _ => a >= b,
                })
            }
        }
        _ => return None,
    })
}
