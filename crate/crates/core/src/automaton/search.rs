//! Run search on a fixed DAG.
//!
//! Vertices are processed in topological order, so every in-edge is
//! labeled before its target is reached. Failed partial runs are remembered
//! by their frontier (the labels of edges from processed to unprocessed
//! vertices), which is all the remaining search depends on.

use std::collections::{HashMap, HashSet};

use super::{AutomatonError, DagAutomaton, Run};
use crate::graph::{Dag, EdgeId};
use crate::symbol::{State, Symbol};

pub(super) const UNSET: u32 = u32::MAX;

/// Rules with states and symbols replaced by dense ids.
pub(super) struct Compiled {
    pub states: Vec<State>,
    pub symbols: HashMap<Symbol, u32>,
    pub rules: Vec<(Vec<u32>, u32, Vec<u32>)>,
    /// (label, head, tail length) to the matching tails.
    pub by_head: HashMap<(u32, Vec<u32>, usize), Vec<Vec<u32>>>,
    /// (label, head length, tail length) to rule indices.
    pub by_shape: HashMap<(u32, usize, usize), Vec<usize>>,
}

impl Compiled {
    pub fn new(a: &DagAutomaton) -> Self {
        let states: Vec<State> = a.states().iter().cloned().collect();
        let state_ids: HashMap<&State, u32> =
            states.iter().enumerate().map(|(k, q)| (q, k as u32)).collect();
        let symbols: HashMap<Symbol, u32> = a
            .alphabet()
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), k as u32))
            .collect();
        let mut c = Compiled {
            states: Vec::new(),
            symbols,
            rules: Vec::new(),
            by_head: HashMap::new(),
            by_shape: HashMap::new(),
        };
        for r in a.rules() {
            let head: Vec<u32> = r.head.iter().map(|q| state_ids[q]).collect();
            let tail: Vec<u32> = r.tail.iter().map(|q| state_ids[q]).collect();
            let sym = c.symbols[&r.label];
            c.by_head
                .entry((sym, head.clone(), tail.len()))
                .or_default()
                .push(tail.clone());
            c.by_shape
                .entry((sym, head.len(), tail.len()))
                .or_default()
                .push(c.rules.len());
            c.rules.push((head, sym, tail));
        }
        c.states = states;
        c
    }

    pub fn symbol(&self, s: &Symbol) -> Option<u32> {
        self.symbols.get(s).copied()
    }

    pub fn run(&self, labels: &[u32]) -> Run {
        Run::new(labels.iter().map(|&q| self.states[q as usize].clone()).collect())
    }
}

/// Edges from `order[..k]` into `order[k..]`, for every `k`.
fn frontiers(d: &Dag, order: &[usize]) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::with_capacity(order.len() + 1);
    let mut open: Vec<EdgeId> = Vec::new();
    out.push(open.clone());
    for &v in order {
        open.retain(|&e| d.tar(e) != v);
        open.extend(d.out_edges(v).iter().copied());
        open.sort_unstable();
        out.push(open.clone());
    }
    out
}

struct Search<'a> {
    c: &'a Compiled,
    d: &'a Dag,
    order: &'a [usize],
    syms: Vec<Option<u32>>,
    open: Vec<Vec<EdgeId>>,
    labels: Vec<u32>,
    failed: HashSet<(usize, Vec<u32>)>,
}

impl Search<'_> {
    fn go(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let key = (k, self.open[k].iter().map(|e| self.labels[e.0]).collect::<Vec<_>>());
        if self.failed.contains(&key) {
            return false;
        }
        let v = self.order[k];
        if let Some(sym) = self.syms[v] {
            let head: Vec<u32> = self.d.in_edges(v).iter().map(|e| self.labels[e.0]).collect();
            let outs = self.d.out_edges(v);
            if let Some(tails) = self.c.by_head.get(&(sym, head, outs.len())) {
                for tail in tails {
                    for (e, &q) in outs.iter().zip(tail) {
                        self.labels[e.0] = q;
                    }
                    if self.go(k + 1) {
                        return true;
                    }
                }
            }
        }
        self.failed.insert(key);
        false
    }
}

/// Searches for a run of `a` on `d`. The empty graph has the empty run iff
/// the automaton accepts the empty graph.
pub fn find_run(a: &DagAutomaton, d: &Dag) -> Option<Run> {
    if d.is_empty() {
        return a.accepts_empty_graph().then(|| Run::new(Vec::new()));
    }
    let c = Compiled::new(a);
    let order = d.topological_order();
    let mut s = Search {
        c: &c,
        d,
        order,
        syms: d.vertices().map(|v| c.symbol(d.label(v))).collect(),
        open: frontiers(d, order),
        labels: vec![UNSET; d.edge_count()],
        failed: HashSet::new(),
    };
    s.go(0).then(|| c.run(&s.labels))
}

/// Acceptance by run existence, optionally restricted to connected DAGs.
/// The empty graph counts as connected.
pub fn accepts(a: &DagAutomaton, d: &Dag, require_connected: bool) -> bool {
    (!require_connected || d.is_connected()) && find_run(a, d).is_some()
}

/// Builds the run from the roots downward, taking at each vertex the only
/// applicable rule. Requires a top-down deterministic automaton.
pub fn find_run_deterministic(a: &DagAutomaton, d: &Dag) -> Result<Option<Run>, AutomatonError> {
    if let Some((r1, r2)) = a.determinism_conflict() {
        return Err(AutomatonError::DeterminismViolated(r1.clone(), r2.clone()));
    }
    if d.is_empty() {
        return Ok(a.accepts_empty_graph().then(|| Run::new(Vec::new())));
    }
    let c = Compiled::new(a);
    let mut labels = vec![UNSET; d.edge_count()];
    for &v in d.topological_order() {
        let Some(sym) = c.symbol(d.label(v)) else {
            return Ok(None);
        };
        let head: Vec<u32> = d.in_edges(v).iter().map(|e| labels[e.0]).collect();
        let outs = d.out_edges(v);
        let Some([tail]) = c.by_head.get(&(sym, head, outs.len())).map(Vec::as_slice) else {
            return Ok(None);
        };
        for (e, &q) in outs.iter().zip(tail) {
            labels[e.0] = q;
        }
    }
    Ok(Some(c.run(&labels)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{is_run, Rule};
    use crate::graph::string_dag;
    use crate::symbol::chars;

    fn a_star() -> DagAutomaton {
        DagAutomaton::new([
            Rule::of("", "a", "s"),
            Rule::of("s", "a", "s"),
            Rule::of("s", "a", ""),
            Rule::of("", "a", ""),
        ])
        .with_empty_graph(true)
    }

    #[test]
    fn strings_over_a() {
        let a = a_star();
        for w in ["a", "aa", "aaaa"] {
            let d = string_dag(&chars(w));
            let run = find_run(&a, &d).unwrap();
            assert!(is_run(&a, &d, &run));
            assert_eq!(find_run_deterministic(&a, &d).unwrap(), Some(run));
        }
        assert!(find_run(&a, &string_dag(&chars("ab"))).is_none());
        assert!(find_run(&a, &Dag::empty()).is_some());
        assert!(find_run(&a.clone().with_empty_graph(false), &Dag::empty()).is_none());
    }

    #[test]
    fn backtracking_finds_late_choice() {
        // The first vertex must guess which of p, q the last one accepts.
        let a = DagAutomaton::new([
            Rule::of("", "a", "p"),
            Rule::of("", "a", "q"),
            Rule::of("p", "a", "p"),
            Rule::of("q", "a", "q"),
            Rule::of("q", "b", ""),
        ]);
        let d = string_dag(&chars("aaab"));
        let run = find_run(&a, &d).unwrap();
        assert!(run.labels().iter().all(|q| q.as_str() == "q"));
        assert!(matches!(
            find_run_deterministic(&a, &d),
            Err(AutomatonError::DeterminismViolated(..))
        ));
    }

    #[test]
    fn connectivity_flag() {
        let a = a_star();
        let d = string_dag(&chars("aa")).without_edges();
        assert!(accepts(&a, &d, false));
        assert!(!accepts(&a, &d, true));
        assert!(accepts(&a, &Dag::empty(), true));
    }

    #[test]
    fn unknown_label_rejects() {
        let d = string_dag(&chars("z"));
        assert!(find_run(&a_star(), &d).is_none());
        assert_eq!(find_run_deterministic(&a_star(), &d).unwrap(), None);
    }
}
