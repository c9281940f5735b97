//! Labeled DAGs whose vertices carry totally ordered sequences of ingoing
//! and outgoing edges.
//!
//! A [`Dag`] is always well formed: the only way to obtain one is through
//! [`DagBuilder::build`], which runs the full validator. The builder itself
//! can hold arbitrary (broken) wiring so that [`DagBuilder::validate`] can
//! report every violated invariant at once.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::symbol::Symbol;

/// Vertex names. Vertices of picture DAGs are named by their position so
/// that different encodings of one picture share a vertex set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VertexId {
    Free(u32),
    Pos(usize, usize),
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Free(n) => write!(f, "v{n}"),
            VertexId::Pos(r, c) => write!(f, "r{r}c{c}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid vertex id `{0}` (expected `v<n>` or `r<row>c<col>`)")]
pub struct ParseVertexIdError(pub String);

impl FromStr for VertexId {
    type Err = ParseVertexIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseVertexIdError(s.to_owned());
        if let Some(rest) = s.strip_prefix('v') {
            return rest.parse().map(VertexId::Free).map_err(|_| err());
        }
        let rest = s.strip_prefix('r').ok_or_else(err)?;
        let (row, col) = rest.split_once('c').ok_or_else(err)?;
        Ok(VertexId::Pos(
            row.parse().map_err(|_| err())?,
            col.parse().map_err(|_| err())?,
        ))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} given twice")]
    SameEdge(EdgeId),
    #[error("edges {0} and {1} are not independent")]
    NotIndependent(EdgeId, EdgeId),
    #[error("not a well-formed DAG: {0}")]
    Invalid(ValidationReport),
}

/// One broken invariant found by the validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex(VertexId),
    DanglingEdge { edge: EdgeId, endpoint: VertexId },
    SelfLoop(EdgeId),
    /// A sequence names an edge id that does not exist.
    UnknownEdge { vertex: VertexId, edge: EdgeId },
    /// `edge` sits in the in- (or out-) sequence of a vertex it does not
    /// enter (or leave).
    Misplaced { vertex: VertexId, edge: EdgeId, incoming: bool },
    /// `edge` occurs `count` times across all in- (or out-) sequences.
    Occurrences { edge: EdgeId, incoming: bool, count: usize },
    /// Vertices that lie on or behind a directed cycle.
    Cycle(Vec<VertexId>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = |incoming: bool| if incoming { "in" } else { "out" };
        match self {
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            Violation::DanglingEdge { edge, endpoint } => {
                write!(f, "edge {edge} has unknown endpoint {endpoint}")
            }
            Violation::SelfLoop(e) => write!(f, "edge {e} is a self-loop"),
            Violation::UnknownEdge { vertex, edge } => {
                write!(f, "vertex {vertex} lists unknown edge {edge}")
            }
            Violation::Misplaced { vertex, edge, incoming } => write!(
                f,
                "edge {edge} is listed in {}({vertex}) but does not touch it that way",
                dir(*incoming)
            ),
            Violation::Occurrences { edge, incoming, count } => write!(
                f,
                "edge {edge} occurs {count} times across {}-sequences",
                dir(*incoming)
            ),
            Violation::Cycle(vs) => {
                write!(f, "directed cycle through")?;
                for v in vs {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Findings of [`DagBuilder::validate`]. Empty iff the input is a DAG.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_cycle(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::Cycle(_)))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Unchecked DAG under construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DagBuilder {
    ids: Vec<VertexId>,
    labels: Vec<Symbol>,
    ins: Vec<Vec<EdgeId>>,
    outs: Vec<Vec<EdgeId>>,
    edges: Vec<(VertexId, VertexId)>,
    index: HashMap<VertexId, usize>,
}

impl DagBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex and returns its index. A repeated id is recorded and
    /// later reported by the validator.
    pub fn add_vertex(&mut self, id: VertexId, label: Symbol) -> usize {
        let idx = self.ids.len();
        self.ids.push(id);
        self.labels.push(label);
        self.ins.push(Vec::new());
        self.outs.push(Vec::new());
        self.index.entry(id).or_insert(idx);
        idx
    }

    /// Adds an edge and appends it to `out(src)` and `in(tar)` when those
    /// vertices exist.
    pub fn add_edge(&mut self, src: VertexId, tar: VertexId) -> EdgeId {
        let e = EdgeId(self.edges.len());
        self.edges.push((src, tar));
        if let Some(&s) = self.index.get(&src) {
            self.outs[s].push(e);
        }
        if let Some(&t) = self.index.get(&tar) {
            self.ins[t].push(e);
        }
        e
    }

    /// Adds an edge without touching any sequence.
    pub fn add_unlisted_edge(&mut self, src: VertexId, tar: VertexId) -> EdgeId {
        let e = EdgeId(self.edges.len());
        self.edges.push((src, tar));
        e
    }

    pub fn set_in_seq(&mut self, vertex: usize, seq: Vec<EdgeId>) {
        self.ins[vertex] = seq;
    }

    pub fn set_out_seq(&mut self, vertex: usize, seq: Vec<EdgeId>) {
        self.outs[vertex] = seq;
    }

    pub fn in_seq(&self, vertex: usize) -> &[EdgeId] {
        &self.ins[vertex]
    }

    pub fn out_seq(&self, vertex: usize) -> &[EdgeId] {
        &self.outs[vertex]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Checks every DAG invariant and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut seen = HashMap::new();
        for (i, id) in self.ids.iter().enumerate() {
            if seen.insert(*id, i).is_some() {
                violations.push(Violation::DuplicateVertex(*id));
            }
        }

        let mut endpoints = Vec::with_capacity(self.edges.len());
        for (i, &(s, t)) in self.edges.iter().enumerate() {
            let e = EdgeId(i);
            let si = self.index.get(&s).copied();
            let ti = self.index.get(&t).copied();
            if si.is_none() {
                violations.push(Violation::DanglingEdge { edge: e, endpoint: s });
            }
            if ti.is_none() {
                violations.push(Violation::DanglingEdge { edge: e, endpoint: t });
            }
            if s == t {
                violations.push(Violation::SelfLoop(e));
            }
            endpoints.push((si, ti));
        }

        let mut in_count = vec![0usize; self.edges.len()];
        let mut out_count = vec![0usize; self.edges.len()];
        for v in 0..self.ids.len() {
            for (seq, counts, incoming) in [
                (&self.ins[v], &mut in_count, true),
                (&self.outs[v], &mut out_count, false),
            ] {
                for &e in seq {
                    let Some(&(si, ti)) = endpoints.get(e.0) else {
                        violations.push(Violation::UnknownEdge { vertex: self.ids[v], edge: e });
                        continue;
                    };
                    counts[e.0] += 1;
                    let end = if incoming { ti } else { si };
                    if end != Some(v) {
                        violations.push(Violation::Misplaced {
                            vertex: self.ids[v],
                            edge: e,
                            incoming,
                        });
                    }
                }
            }
        }
        for i in 0..self.edges.len() {
            for (count, incoming) in [(in_count[i], true), (out_count[i], false)] {
                if count != 1 {
                    violations.push(Violation::Occurrences { edge: EdgeId(i), incoming, count });
                }
            }
        }

        // Cycle check on the src/tar relation of edges with known endpoints.
        let n = self.ids.len();
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(si, ti) in &endpoints {
            if let (Some(s), Some(t)) = (si, ti) {
                succ[s].push(t);
                indeg[t] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut done = vec![false; n];
        while let Some(v) = queue.pop_front() {
            done[v] = true;
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        let stuck: Vec<VertexId> = (0..n).filter(|&v| !done[v]).map(|v| self.ids[v]).collect();
        if !stuck.is_empty() {
            violations.push(Violation::Cycle(stuck));
        }

        ValidationReport { violations }
    }

    pub fn build(self) -> Result<Dag, GraphError> {
        let report = self.validate();
        if !report.is_ok() {
            return Err(GraphError::Invalid(report));
        }
        let src = self.edges.iter().map(|(s, _)| self.index[s]).collect();
        let tar = self.edges.iter().map(|(_, t)| self.index[t]).collect();
        let mut dag = Dag {
            ids: self.ids,
            labels: self.labels,
            ins: self.ins,
            outs: self.outs,
            src,
            tar,
            index: self.index,
            topo: Vec::new(),
        };
        dag.topo = dag.compute_topological_order();
        Ok(dag)
    }
}

/// A well-formed DAG over vertex labels. Vertices are addressed by index
/// `0..vertex_count()`, edges by [`EdgeId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    ids: Vec<VertexId>,
    labels: Vec<Symbol>,
    ins: Vec<Vec<EdgeId>>,
    outs: Vec<Vec<EdgeId>>,
    src: Vec<usize>,
    tar: Vec<usize>,
    index: HashMap<VertexId, usize>,
    topo: Vec<usize>,
}

impl Dag {
    pub fn empty() -> Dag {
        DagBuilder::new().build().expect("empty graph is a DAG")
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.src.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.ids.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.src.len()).map(EdgeId)
    }

    pub fn id(&self, v: usize) -> VertexId {
        self.ids[v]
    }

    pub fn label(&self, v: usize) -> &Symbol {
        &self.labels[v]
    }

    pub fn in_edges(&self, v: usize) -> &[EdgeId] {
        &self.ins[v]
    }

    pub fn out_edges(&self, v: usize) -> &[EdgeId] {
        &self.outs[v]
    }

    pub fn src(&self, e: EdgeId) -> usize {
        self.src[e.0]
    }

    pub fn tar(&self, e: EdgeId) -> usize {
        self.tar[e.0]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        e.0 < self.src.len()
    }

    /// Vertices in a topological order; among ready vertices the smallest
    /// index goes first.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    fn compute_topological_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.ins.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = self
            .vertices()
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &e in &self.outs[v] {
                let w = self.tar(e);
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        order
    }

    pub fn roots(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.ins[v].is_empty()).collect()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.outs[v].is_empty()).collect()
    }

    /// Re-runs the validator on this graph. Always empty for graphs built
    /// through [`DagBuilder`]; used to check producers of DAGs.
    pub fn validate(&self) -> ValidationReport {
        self.to_builder().validate()
    }

    pub fn to_builder(&self) -> DagBuilder {
        let edges = self
            .src
            .iter()
            .zip(&self.tar)
            .map(|(&s, &t)| (self.ids[s], self.ids[t]))
            .collect();
        DagBuilder {
            ids: self.ids.clone(),
            labels: self.labels.clone(),
            ins: self.ins.clone(),
            outs: self.outs.clone(),
            edges,
            index: self.index.clone(),
        }
    }

    /// The same vertices (and labels) without any edge.
    pub fn without_edges(&self) -> Dag {
        self.retain_edges(|_| false)
    }

    /// Keeps the edges selected by `keep`, renumbering them densely while
    /// preserving their relative order in every sequence.
    pub fn retain_edges(&self, keep: impl Fn(EdgeId) -> bool) -> Dag {
        let mut renumber = vec![None; self.edge_count()];
        let mut next = 0;
        for e in self.edges() {
            if keep(e) {
                renumber[e.0] = Some(EdgeId(next));
                next += 1;
            }
        }
        let mut b = DagBuilder::new();
        for v in self.vertices() {
            b.add_vertex(self.ids[v], self.labels[v].clone());
        }
        for e in self.edges() {
            if renumber[e.0].is_some() {
                b.add_unlisted_edge(self.ids[self.src(e)], self.ids[self.tar(e)]);
            }
        }
        let map = |seq: &[EdgeId]| seq.iter().filter_map(|e| renumber[e.0]).collect();
        for v in self.vertices() {
            b.set_in_seq(v, map(&self.ins[v]));
            b.set_out_seq(v, map(&self.outs[v]));
        }
        b.build().expect("edge removal keeps a DAG well formed")
    }

    /// Whether there is a directed path (possibly of length zero) from
    /// `from` to `to`.
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.outs[v] {
                let w = self.tar(e);
                if w == to {
                    return true;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Weakly connected components, each sorted, ordered by their smallest
    /// vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut components = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                let nbrs = self.outs[v]
                    .iter()
                    .map(|&e| self.tar(e))
                    .chain(self.ins[v].iter().map(|&e| self.src(e)));
                for w in nbrs {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    fn check_edge(&self, e: EdgeId) -> Result<(), GraphError> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(GraphError::UnknownEdge(e))
        }
    }

    /// Two distinct edges are independent when neither target reaches the
    /// other edge's source.
    pub fn independent(&self, e0: EdgeId, e1: EdgeId) -> Result<bool, GraphError> {
        self.check_edge(e0)?;
        self.check_edge(e1)?;
        if e0 == e1 {
            return Err(GraphError::SameEdge(e0));
        }
        Ok(!self.reaches(self.tar(e0), self.src(e1)) && !self.reaches(self.tar(e1), self.src(e0)))
    }

    /// Exchanges the targets of two independent edges. Each edge keeps its
    /// position in its source's out-sequence and takes over the other's
    /// position in the in-sequences.
    pub fn edge_swap(&self, e0: EdgeId, e1: EdgeId) -> Result<Dag, GraphError> {
        if !self.independent(e0, e1)? {
            return Err(GraphError::NotIndependent(e0, e1));
        }
        let mut b = self.to_builder();
        let swap = |e: EdgeId| match e {
            e if e == e0 => e1,
            e if e == e1 => e0,
            e => e,
        };
        for v in self.vertices() {
            let seq = self.ins[v].iter().map(|&e| swap(e)).collect();
            b.set_in_seq(v, seq);
        }
        let (s0, t0) = b.edges[e0.0];
        let (s1, t1) = b.edges[e1.0];
        b.edges[e0.0] = (s0, t1);
        b.edges[e1.0] = (s1, t0);
        b.build()
    }
}

/// Encodes a string as a simple directed path, vertex `k` labeled `w[k]`.
pub fn string_dag(w: &[Symbol]) -> Dag {
    let mut b = DagBuilder::new();
    for (k, s) in w.iter().enumerate() {
        b.add_vertex(VertexId::Free(k as u32), s.clone());
    }
    for k in 1..w.len() {
        b.add_edge(VertexId::Free(k as u32 - 1), VertexId::Free(k as u32));
    }
    b.build().expect("a path is a DAG")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    fn free(n: u32) -> VertexId {
        VertexId::Free(n)
    }

    #[test]
    fn empty_graph_is_valid() {
        assert!(DagBuilder::new().validate().is_ok());
        let d = Dag::empty();
        assert!(d.is_empty());
        assert!(d.connected_components().is_empty());
        assert!(d.is_connected());
    }

    #[test]
    fn two_cycle_is_reported() {
        let mut b = DagBuilder::new();
        b.add_vertex(free(0), "u".into());
        b.add_vertex(free(1), "v".into());
        b.add_edge(free(0), free(1));
        b.add_edge(free(1), free(0));
        let report = b.validate();
        assert!(report.has_cycle());
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(b.build(), Err(GraphError::Invalid(_))));
    }

    #[test]
    fn dangling_self_loop_and_duplicates_are_reported() {
        let mut b = DagBuilder::new();
        b.add_vertex(free(0), "a".into());
        b.add_vertex(free(1), "b".into());
        let e = b.add_edge(free(0), free(1));
        b.add_edge(free(0), free(7));
        b.add_edge(free(1), free(1));
        b.set_in_seq(1, vec![e, e]);
        let report = b.validate();
        let has = |p: &dyn Fn(&Violation) -> bool| report.violations.iter().any(p);
        assert!(has(&|v| matches!(v, Violation::DanglingEdge { endpoint: VertexId::Free(7), .. })));
        assert!(has(&|v| matches!(v, Violation::SelfLoop(EdgeId(2)))));
        assert!(has(&|v| matches!(
            v,
            Violation::Occurrences { edge: EdgeId(0), incoming: true, count: 2 }
        )));
        // The self-loop was dropped from in(v1) by set_in_seq.
        assert!(has(&|v| matches!(
            v,
            Violation::Occurrences { edge: EdgeId(2), incoming: true, count: 0 }
        )));
        assert!(has(&|v| matches!(v, Violation::Cycle(_))));
    }

    #[test]
    fn misplaced_and_unknown_edges_are_reported() {
        let mut b = DagBuilder::new();
        b.add_vertex(free(0), "a".into());
        b.add_vertex(free(1), "b".into());
        let e = b.add_edge(free(0), free(1));
        b.set_in_seq(0, vec![e, EdgeId(9)]);
        b.set_in_seq(1, vec![]);
        let report = b.validate();
        assert!(report.violations.contains(&Violation::Misplaced {
            vertex: free(0),
            edge: e,
            incoming: true
        }));
        assert!(report
            .violations
            .contains(&Violation::UnknownEdge { vertex: free(0), edge: EdgeId(9) }));
    }

    #[test]
    fn string_dags() {
        let d = string_dag(&chars("ab"));
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 1);
        assert_eq!(d.label(d.src(EdgeId(0))).as_str(), "a");
        assert_eq!(d.label(d.tar(EdgeId(0))).as_str(), "b");
        assert!(string_dag(&[]).is_empty());
        let d = string_dag(&chars("aaaa"));
        assert_eq!(d.edge_count(), 3);
        assert_eq!(d.roots(), vec![0]);
        assert_eq!(d.leaves(), vec![3]);
        assert_eq!(d.connected_components().len(), 1);
    }

    fn two_disjoint_edges() -> Dag {
        let mut b = DagBuilder::new();
        for (n, l) in [(0, "a"), (1, "b"), (2, "a"), (3, "b")] {
            b.add_vertex(free(n), l.into());
        }
        b.add_edge(free(0), free(1));
        b.add_edge(free(2), free(3));
        b.build().unwrap()
    }

    #[test]
    fn independence() {
        let d = two_disjoint_edges();
        assert_eq!(d.independent(EdgeId(0), EdgeId(1)), Ok(true));
        let p = string_dag(&chars("uvw"));
        assert_eq!(p.independent(EdgeId(0), EdgeId(1)), Ok(false));
        assert_eq!(p.independent(EdgeId(0), EdgeId(5)), Err(GraphError::UnknownEdge(EdgeId(5))));
        assert_eq!(p.independent(EdgeId(0), EdgeId(0)), Err(GraphError::SameEdge(EdgeId(0))));
    }

    #[test]
    fn swap_of_disjoint_edges() {
        let d = two_disjoint_edges();
        let s = d.edge_swap(EdgeId(0), EdgeId(1)).unwrap();
        assert!(s.validate().is_ok());
        assert_eq!(s.tar(EdgeId(0)), 3);
        assert_eq!(s.tar(EdgeId(1)), 1);
        // Same labels on both ends, so the swapped graph is the input up to
        // renaming vertices 1 and 3.
        assert_eq!(s.label(s.tar(EdgeId(0))), d.label(d.tar(EdgeId(1))));
        assert_eq!(s.edge_swap(EdgeId(0), EdgeId(1)).unwrap(), d);
    }

    #[test]
    fn swap_of_dependent_edges_fails() {
        let p = string_dag(&chars("uvw"));
        assert_eq!(
            p.edge_swap(EdgeId(0), EdgeId(1)),
            Err(GraphError::NotIndependent(EdgeId(0), EdgeId(1)))
        );
    }

    #[test]
    fn vertex_id_text() {
        for id in [VertexId::Free(12), VertexId::Pos(0, 3)] {
            assert_eq!(id.to_string().parse::<VertexId>(), Ok(id));
        }
        assert!("x1".parse::<VertexId>().is_err());
        assert!("r1".parse::<VertexId>().is_err());
    }

    #[test]
    fn retain_edges_keeps_order() {
        let d = string_dag(&chars("abcd"));
        let r = d.retain_edges(|e| e.0 != 1);
        assert_eq!(r.edge_count(), 2);
        assert_eq!(r.connected_components(), vec![vec![0, 1], vec![2, 3]]);
    }
}
