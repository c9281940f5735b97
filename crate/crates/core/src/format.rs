//! Line-based text formats for DAGs, DAG automata, NFAs and tessellation
//! automata.
//!
//! All formats share the same lexical rules: tokens are separated by
//! whitespace, blank lines are ignored, and `//` starts a comment (`#` is a
//! symbol). `_` stands for an empty state sequence.
//!
//! ```text
//! // DAG: vertices, edges, optional explicit in/out orders
//! v r0c0 #
//! v r0c1 #
//! e e0 r0c0 r0c1
//! out r0c0 e0
//!
//! // DAG automaton
//! alphabet: a b
//! rank a 0 1
//! empty
//! rule _ -> a -> a p
//!
//! // NFA
//! start: q0
//! final: q1
//! q0 a q1
//!
//! // tessellation automaton: up left symbol -> state
//! start: q0
//! final: q1
//! q0 q0 a -> q1
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automaton::{DagAutomaton, Rule};
use crate::encoding::RankedAlphabet;
use crate::graph::{Dag, DagBuilder, EdgeId, VertexId};
use crate::nfa::Nfa;
use crate::ota::Ota;
use crate::symbol::{State, Symbol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}{}", token_suffix(.token))]
pub struct FormatError {
    pub line: usize,
    pub token: String,
    pub message: String,
}

fn token_suffix(token: &str) -> String {
    if token.is_empty() {
        String::new()
    } else {
        format!(" at `{token}`")
    }
}

fn err(line: usize, token: &str, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        token: token.to_owned(),
        message: message.into(),
    }
}

/// Non-empty lines with comments removed, as (line number, tokens).
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split_once("//").map_or(l, |(code, _)| code);
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn states(toks: &[&str]) -> Vec<State> {
    if toks == ["_"] {
        Vec::new()
    } else {
        toks.iter().map(|&t| State::from(t)).collect()
    }
}

fn write_states(out: &mut String, qs: &[State]) {
    if qs.is_empty() {
        out.push('_');
    } else {
        let parts: Vec<&str> = qs.iter().map(State::as_str).collect();
        out.push_str(&parts.join(" "));
    }
}

fn number(line: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| err(line, tok, "expected a number"))
}

pub fn parse_dag(text: &str) -> Result<Dag, FormatError> {
    let mut b = DagBuilder::new();
    let mut edges: HashMap<&str, EdgeId> = HashMap::new();
    let mut orders: Vec<(usize, bool, &str, Vec<&str>)> = Vec::new();
    let vertex = |b: &DagBuilder, line: usize, tok: &str| -> Result<VertexId, FormatError> {
        let id: VertexId = tok.parse().map_err(|_| err(line, tok, "bad vertex id (expected v<n> or r<row>c<col>)"))?;
        if b.index_of(id).is_none() {
            return Err(err(line, tok, "unknown vertex"));
        }
        Ok(id)
    };
    for (line, toks) in lines(text) {
        match toks[0] {
            "v" => {
                let [_, id, label] = toks[..] else {
                    return Err(err(line, toks[0], "expected `v <id> <label>`"));
                };
                let vid: VertexId = id
                    .parse()
                    .map_err(|_| err(line, id, "bad vertex id (expected v<n> or r<row>c<col>)"))?;
                if b.index_of(vid).is_some() {
                    return Err(err(line, id, "vertex declared twice"));
                }
                b.add_vertex(vid, Symbol::from(label));
            }
            "e" => {
                let [_, name, src, tar] = toks[..] else {
                    return Err(err(line, toks[0], "expected `e <id> <source> <target>`"));
                };
                if edges.contains_key(name) {
                    return Err(err(line, name, "edge declared twice"));
                }
                let (s, t) = (vertex(&b, line, src)?, vertex(&b, line, tar)?);
                edges.insert(name, b.add_edge(s, t));
            }
            kw @ ("in" | "out") => {
                let Some(&v) = toks.get(1) else {
                    return Err(err(line, kw, "expected a vertex"));
                };
                vertex(&b, line, v)?;
                orders.push((line, kw == "in", v, toks[2..].to_vec()));
            }
            other => return Err(err(line, other, "expected `v`, `e`, `in` or `out`")),
        }
    }
    for (line, incoming, v, names) in orders {
        let seq = names
            .iter()
            .map(|&n| edges.get(n).copied().ok_or_else(|| err(line, n, "unknown edge")))
            .collect::<Result<Vec<_>, _>>()?;
        let idx = b.index_of(v.parse().expect("checked above")).expect("checked above");
        if incoming {
            b.set_in_seq(idx, seq);
        } else {
            b.set_out_seq(idx, seq);
        }
    }
    b.build().map_err(|e| err(0, "", e.to_string()))
}

/// Writes a DAG with explicit in/out orders for every vertex with more
/// than one in- or out-edge.
pub fn render_dag(d: &Dag) -> String {
    let mut out = String::new();
    for v in d.vertices() {
        writeln!(out, "v {} {}", d.id(v), d.label(v)).unwrap();
    }
    for e in d.edges() {
        writeln!(out, "e {e} {} {}", d.id(d.src(e)), d.id(d.tar(e))).unwrap();
    }
    let seq = |es: &[EdgeId]| es.iter().map(EdgeId::to_string).collect::<Vec<_>>().join(" ");
    for v in d.vertices() {
        if d.in_edges(v).len() > 1 {
            writeln!(out, "in {} {}", d.id(v), seq(d.in_edges(v))).unwrap();
        }
        if d.out_edges(v).len() > 1 {
            writeln!(out, "out {} {}", d.id(v), seq(d.out_edges(v))).unwrap();
        }
    }
    out
}

pub fn parse_automaton(text: &str) -> Result<DagAutomaton, FormatError> {
    let mut rules = Vec::new();
    let mut ranks = RankedAlphabet::new();
    let mut alphabet = Vec::new();
    let mut empty = false;
    for (line, toks) in lines(text) {
        match toks[0] {
            "rule" => {
                let parts: Vec<&[&str]> = toks[1..].split(|t| *t == "->").collect();
                let [head, [label], tail] = parts[..] else {
                    return Err(err(line, "rule", "expected `rule <head|_> -> <symbol> -> <tail|_>`"));
                };
                if head.is_empty() || tail.is_empty() {
                    return Err(err(line, "->", "empty state list (write `_` for λ)"));
                }
                rules.push(Rule::new(states(head), *label, states(tail)));
            }
            "rank" => {
                let [_, s, i, o] = toks[..] else {
                    return Err(err(line, "rank", "expected `rank <symbol> <in> <out>`"));
                };
                ranks.set(Symbol::from(s), number(line, i)?, number(line, o)?);
            }
            "empty" if toks.len() == 1 => empty = true,
            "alphabet:" => alphabet.extend(toks[1..].iter().map(|&s| Symbol::from(s))),
            other => return Err(err(line, other, "expected `rule`, `rank`, `empty` or `alphabet:`")),
        }
    }
    Ok(DagAutomaton::new(rules)
        .with_alphabet(alphabet)
        .with_ranks(ranks)
        .with_empty_graph(empty))
}

pub fn render_automaton(a: &DagAutomaton) -> String {
    let mut out = String::new();
    let alphabet: Vec<&str> = a.alphabet().iter().map(Symbol::as_str).collect();
    writeln!(out, "alphabet: {}", alphabet.join(" ")).unwrap();
    for (s, (i, o)) in a.ranks().iter() {
        writeln!(out, "rank {s} {i} {o}").unwrap();
    }
    if a.accepts_empty_graph() {
        out.push_str("empty\n");
    }
    for r in a.rules() {
        out.push_str("rule ");
        write_states(&mut out, &r.head);
        write!(out, " -> {} -> ", r.label).unwrap();
        write_states(&mut out, &r.tail);
        out.push('\n');
    }
    out
}

pub fn parse_nfa(text: &str) -> Result<Nfa, FormatError> {
    let mut m = Nfa::new();
    let mut has_start = false;
    for (line, toks) in lines(text) {
        match toks[0] {
            "start:" => {
                for &q in &toks[1..] {
                    m.add_start(q);
                    has_start = true;
                }
            }
            "final:" => toks[1..].iter().for_each(|&q| m.add_final(q)),
            "alphabet:" => toks[1..].iter().for_each(|&s| m.add_symbol(s)),
            _ => {
                let [p, s, q] = toks[..] else {
                    return Err(err(line, toks[0], "expected `<state> <symbol> <state>`"));
                };
                m.add_transition(p, s, q);
            }
        }
    }
    if !has_start {
        return Err(err(0, "start:", "no start state"));
    }
    Ok(m)
}

pub fn render_nfa(m: &Nfa) -> String {
    let join = |it: Vec<&str>| it.join(" ");
    let mut out = String::new();
    writeln!(out, "alphabet: {}", join(m.alphabet().iter().map(Symbol::as_str).collect())).unwrap();
    writeln!(out, "start: {}", join(m.start().iter().map(State::as_str).collect())).unwrap();
    writeln!(out, "final: {}", join(m.finals().iter().map(State::as_str).collect())).unwrap();
    for (p, s, q) in m.transitions() {
        writeln!(out, "{p} {s} {q}").unwrap();
    }
    out
}

pub fn parse_ota(text: &str) -> Result<Ota, FormatError> {
    let mut start: Option<&str> = None;
    let mut finals = Vec::new();
    let mut alphabet = Vec::new();
    let mut delta = Vec::new();
    for (line, toks) in lines(text) {
        match toks[0] {
            "start:" => {
                let [_, q] = toks[..] else {
                    return Err(err(line, "start:", "expected exactly one start state"));
                };
                if start.replace(q).is_some() {
                    return Err(err(line, q, "start state given twice"));
                }
            }
            "final:" => finals.extend_from_slice(&toks[1..]),
            "alphabet:" => alphabet.extend_from_slice(&toks[1..]),
            _ => {
                let [u, l, s, "->", q] = toks[..] else {
                    return Err(err(line, toks[0], "expected `<up> <left> <symbol> -> <state>`"));
                };
                if s == "#" {
                    return Err(err(line, s, "transitions cannot read the frame symbol"));
                }
                delta.push((u, l, s, q));
            }
        }
    }
    let start = start.ok_or_else(|| err(0, "start:", "no start state"))?;
    let mut m = Ota::new(start);
    alphabet.into_iter().for_each(|s| m.add_symbol(s));
    finals.into_iter().for_each(|q| m.add_final(q));
    for (u, l, s, q) in delta {
        m.add_transition(u, l, s, q);
    }
    Ok(m)
}

pub fn render_ota(m: &Ota) -> String {
    let mut out = String::new();
    let alphabet: Vec<&str> = m.alphabet().iter().map(Symbol::as_str).collect();
    let finals: Vec<&str> = m.finals().iter().map(State::as_str).collect();
    writeln!(out, "alphabet: {}", alphabet.join(" ")).unwrap();
    writeln!(out, "start: {}", m.start()).unwrap();
    writeln!(out, "final: {}", finals.join(" ")).unwrap();
    for (u, l, s, q) in m.transitions() {
        writeln!(out, "{u} {l} {s} -> {q}").unwrap();
    }
    out
}
