//! Graphviz export. Each vertex is a record with one port per in-edge on
//! top and one per out-edge at the bottom, in sequence order, so that the
//! drawing shows the edge orders the automaton rules depend on.

use std::fmt::Write as _;

use crate::automaton::Run;
use crate::graph::Dag;

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if matches!(c, '{' | '}' | '|' | '<' | '>' | '"' | '\\' | ' ') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

fn ports(prefix: char, n: usize) -> String {
    let parts: Vec<String> = (0..n).map(|k| format!("<{prefix}{k}>")).collect();
    format!("{{{}}}", parts.join("|"))
}

/// DOT text for `d`; edges are labeled with their run states if a run is
/// given.
pub fn to_dot(d: &Dag, run: Option<&Run>) -> String {
    let mut out = String::from("digraph dag {\n  node [shape=record];\n");
    for v in d.vertices() {
        let mut fields = Vec::new();
        if !d.in_edges(v).is_empty() {
            fields.push(ports('i', d.in_edges(v).len()));
        }
        fields.push(escape(d.label(v).as_str()));
        if !d.out_edges(v).is_empty() {
            fields.push(ports('o', d.out_edges(v).len()));
        }
        writeln!(out, "  \"{}\" [label=\"{{{}}}\"];", d.id(v), fields.join("|")).unwrap();
    }
    for e in d.edges() {
        let (s, t) = (d.src(e), d.tar(e));
        let o = d.out_edges(s).iter().position(|&x| x == e).expect("edge in its source's sequence");
        let i = d.in_edges(t).iter().position(|&x| x == e).expect("edge in its target's sequence");
        write!(out, "  \"{}\":o{o}:s -> \"{}\":i{i}:n", d.id(s), d.id(t)).unwrap();
        match run {
            Some(r) => writeln!(out, " [label=\"{}\"];", r.get(e).as_str().replace('"', "\\\"")).unwrap(),
            None => out.push_str(";\n"),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::string_dag;
    use crate::symbol::chars;

    #[test]
    fn path_of_two() {
        let d = string_dag(&chars("ab"));
        assert_eq!(
            to_dot(&d, None),
            "digraph dag {\n  node [shape=record];\n  \"v0\" [label=\"{a|{<o0>}}\"];\n  \"v1\" [label=\"{{<i0>}|b}\"];\n  \"v0\":o0:s -> \"v1\":i0:n;\n}\n"
        );
    }

    #[test]
    fn frame_symbol_is_plain() {
        let d = string_dag(&chars("#"));
        assert!(to_dot(&d, None).contains("label=\"{#}\""));
    }
}
