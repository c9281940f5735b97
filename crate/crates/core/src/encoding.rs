//! Picture-to-DAG encodings.
//!
//! The input-agnostic encodings place one vertex per position and draw
//! edges that depend only on the picture's dimensions. All edge sets are
//! defined on the coordinates of the framed picture (rows `0..=m+1`,
//! columns `0..=n+1`); encoding an unframed picture keeps only the edges
//! whose endpoints both lie inside it.
//!
//! The input-driven encoding appends extra in/out slots to every vertex as
//! dictated by a doubly ranked alphabet and connects them by any bijection
//! that keeps the graph acyclic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Dag, DagBuilder, EdgeId, VertexId};
use crate::picture::{BoundaryPicture, Picture};
use crate::symbol::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncodingError {
    #[error("vertex {0} is not a grid position")]
    NotAPosition(VertexId),
    #[error("vertex set is not a full rectangular grid: {0}")]
    NotAGrid(String),
    #[error("unknown encoding `{0}` (expected linl, linr, lin, rfa, bfa, coo or dia)")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EncodingKind {
    /// Rows left to right, plus descents along the left border.
    LinL,
    /// Rows left to right, plus descents along the right border.
    LinR,
    /// Rows plus both border descents.
    Lin,
    /// Row-major path: rows left to right, each row's last position returning
    /// to the next row's first.
    Rfa,
    /// Boustrophedon path: even rows left to right, odd rows right to left,
    /// descending at the end of every row.
    Bfa,
    /// Grid: every position points down and right.
    Coo,
    /// Every position points to its southeast neighbor.
    Dia,
}

impl EncodingKind {
    pub const ALL: [EncodingKind; 7] = [
        EncodingKind::LinL,
        EncodingKind::LinR,
        EncodingKind::Lin,
        EncodingKind::Rfa,
        EncodingKind::Bfa,
        EncodingKind::Coo,
        EncodingKind::Dia,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EncodingKind::LinL => "linl",
            EncodingKind::LinR => "linr",
            EncodingKind::Lin => "lin",
            EncodingKind::Rfa => "rfa",
            EncodingKind::Bfa => "bfa",
            EncodingKind::Coo => "coo",
            EncodingKind::Dia => "dia",
        }
    }

    /// Edges of this kind on the framed `m x n` coordinate space.
    fn framed_edges(self, m: usize, n: usize) -> Vec<((usize, usize), (usize, usize))> {
        let (last_row, last_col) = (m + 1, n + 1);
        let mut edges = Vec::new();
        let down_left = |edges: &mut Vec<_>| {
            for i in 0..last_row {
                edges.push(((i, 0), (i + 1, 0)));
            }
        };
        let down_right = |edges: &mut Vec<_>| {
            for i in 0..last_row {
                edges.push(((i, last_col), (i + 1, last_col)));
            }
        };
        let rows_rightward = |edges: &mut Vec<_>| {
            for i in 0..=last_row {
                for j in 0..last_col {
                    edges.push(((i, j), (i, j + 1)));
                }
            }
        };
        match self {
            EncodingKind::LinL => {
                down_left(&mut edges);
                rows_rightward(&mut edges);
            }
            EncodingKind::LinR => {
                rows_rightward(&mut edges);
                down_right(&mut edges);
            }
            EncodingKind::Lin => {
                down_left(&mut edges);
                rows_rightward(&mut edges);
                down_right(&mut edges);
            }
            EncodingKind::Rfa => {
                rows_rightward(&mut edges);
                for i in 0..last_row {
                    edges.push(((i, last_col), (i + 1, 0)));
                }
            }
            EncodingKind::Bfa => {
                for i in 0..=last_row {
                    let rightward = i % 2 == 0;
                    for j in 0..last_col {
                        if rightward {
                            edges.push(((i, j), (i, j + 1)));
                        } else {
                            edges.push(((i, j + 1), (i, j)));
                        }
                    }
                    if i < last_row {
                        let c = if rightward { last_col } else { 0 };
                        edges.push(((i, c), (i + 1, c)));
                    }
                }
            }
            EncodingKind::Coo => {
                rows_rightward(&mut edges);
                for i in 0..last_row {
                    for j in 0..=last_col {
                        edges.push(((i, j), (i + 1, j)));
                    }
                }
            }
            EncodingKind::Dia => {
                for i in 0..last_row {
                    for j in 0..last_col {
                        edges.push(((i, j), (i + 1, j + 1)));
                    }
                }
            }
        }
        edges
    }
}

impl fmt::Display for EncodingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EncodingKind {
    type Err = EncodingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EncodingKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| EncodingError::UnknownKind(s.to_owned()))
    }
}

/// What gets encoded: a bare picture or its framed version.
#[derive(Clone, Copy, Debug)]
pub enum PictureInput<'a> {
    Plain(&'a Picture),
    Framed(&'a BoundaryPicture),
}

impl<'a> From<&'a Picture> for PictureInput<'a> {
    fn from(p: &'a Picture) -> Self {
        PictureInput::Plain(p)
    }
}

impl<'a> From<&'a BoundaryPicture> for PictureInput<'a> {
    fn from(p: &'a BoundaryPicture) -> Self {
        PictureInput::Framed(p)
    }
}

/// Position-labeled vertex set shared by `encode` and `reencode`.
struct Grid {
    framed: bool,
    rows: usize,
    cols: usize,
    /// Labels row-major over the vertex rectangle.
    labels: Vec<Symbol>,
}

impl Grid {
    fn from_input(input: PictureInput<'_>) -> Grid {
        match input {
            PictureInput::Plain(p) => Grid {
                framed: false,
                rows: p.rows(),
                cols: p.cols(),
                labels: p.cells().to_vec(),
            },
            PictureInput::Framed(b) => {
                let mut labels = Vec::with_capacity(b.rows() * b.cols());
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        labels.push(b.get(r, c).clone());
                    }
                }
                Grid {
                    framed: true,
                    rows: b.inner().rows(),
                    cols: b.inner().cols(),
                    labels,
                }
            }
        }
    }

    fn row_range(&self) -> std::ops::RangeInclusive<usize> {
        if self.framed {
            0..=self.rows + 1
        } else {
            1..=self.rows
        }
    }

    fn col_range(&self) -> std::ops::RangeInclusive<usize> {
        if self.framed {
            0..=self.cols + 1
        } else {
            1..=self.cols
        }
    }

    fn contains(&self, (r, c): (usize, usize)) -> bool {
        self.row_range().contains(&r) && self.col_range().contains(&c)
    }

    fn encode(&self, kind: EncodingKind) -> Dag {
        let mut b = DagBuilder::new();
        let mut k = 0;
        for r in self.row_range() {
            for c in self.col_range() {
                b.add_vertex(VertexId::Pos(r, c), self.labels[k].clone());
                k += 1;
            }
        }
        if b.vertex_count() == 0 {
            return Dag::empty();
        }
        let edges: Vec<_> = kind
            .framed_edges(self.rows, self.cols)
            .into_iter()
            .filter(|&(s, t)| self.contains(s) && self.contains(t))
            .collect();
        let n = b.vertex_count();
        let mut ins: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        let mut outs: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        for &(s, t) in &edges {
            let e = b.add_unlisted_edge(VertexId::Pos(s.0, s.1), VertexId::Pos(t.0, t.1));
            let si = b.index_of(VertexId::Pos(s.0, s.1)).expect("source in grid");
            let ti = b.index_of(VertexId::Pos(t.0, t.1)).expect("target in grid");
            ins[ti].push((in_rank(t, s), e));
            outs[si].push((out_rank(s, t), e));
        }
        for v in 0..n {
            ins[v].sort_unstable();
            outs[v].sort_unstable();
            b.set_in_seq(v, ins[v].iter().map(|&(_, e)| e).collect());
            b.set_out_seq(v, outs[v].iter().map(|&(_, e)| e).collect());
        }
        b.build().expect("input-agnostic encodings are acyclic")
    }
}

fn direction(from: (usize, usize), to: (usize, usize)) -> (i8, i8) {
    let sign = |a: usize, b: usize| (b as isize - a as isize).signum() as i8;
    (sign(from.0, to.0), sign(from.1, to.1))
}

// Ingoing edges sit on the upper arc, ordered clockwise starting from the
// west; outgoing edges on the lower arc, counterclockwise from the west.
// Either way the resulting sequences never cross when drawn.
const IN_ORDER: [(i8, i8); 8] = [(0, -1), (-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1)];
const OUT_ORDER: [(i8, i8); 8] = [(0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1)];

fn in_rank(at: (usize, usize), from: (usize, usize)) -> usize {
    let d = direction(at, from);
    IN_ORDER.iter().position(|&x| x == d).expect("distinct endpoints")
}

fn out_rank(at: (usize, usize), to: (usize, usize)) -> usize {
    let d = direction(at, to);
    OUT_ORDER.iter().position(|&x| x == d).expect("distinct endpoints")
}

/// Encodes a picture (framed or not) with an input-agnostic encoding.
///
/// For [`EncodingKind::Coo`] every vertex has `in = (left, up)` and
/// `out = (down, right)`, restricted to the edges present.
pub fn encode<'a>(input: impl Into<PictureInput<'a>>, kind: EncodingKind) -> Dag {
    Grid::from_input(input.into()).encode(kind)
}

/// Replaces the edges of a picture DAG by those of `kind`. The vertex set
/// must be the full rectangle of a picture, with or without frame.
pub fn reencode(d: &Dag, kind: EncodingKind) -> Result<Dag, EncodingError> {
    if d.is_empty() {
        return Ok(Dag::empty());
    }
    let mut cells = BTreeMap::new();
    for v in d.vertices() {
        let VertexId::Pos(r, c) = d.id(v) else {
            return Err(EncodingError::NotAPosition(d.id(v)));
        };
        cells.insert((r, c), d.label(v).clone());
    }
    let (r0, c0) = (
        cells.keys().map(|p| p.0).min().unwrap(),
        cells.keys().map(|p| p.1).min().unwrap(),
    );
    let (r1, c1) = (
        cells.keys().map(|p| p.0).max().unwrap(),
        cells.keys().map(|p| p.1).max().unwrap(),
    );
    let framed = match (r0, c0) {
        (0, 0) => true,
        (1, 1) => false,
        _ => {
            return Err(EncodingError::NotAGrid(format!(
                "top-left position is ({r0}, {c0}), expected (0, 0) or (1, 1)"
            )))
        }
    };
    if framed && (r1 < 1 || c1 < 1) {
        return Err(EncodingError::NotAGrid("frame smaller than 2x2".into()));
    }
    let expected = (r1 - r0 + 1) * (c1 - c0 + 1);
    if cells.len() != expected {
        return Err(EncodingError::NotAGrid(format!(
            "{} positions, a {}x{} rectangle needs {expected}",
            cells.len(),
            r1 - r0 + 1,
            c1 - c0 + 1
        )));
    }
    let grid = Grid {
        framed,
        rows: if framed { r1 - 1 } else { r1 },
        cols: if framed { c1 - 1 } else { c1 },
        labels: cells.into_values().collect(),
    };
    Ok(grid.encode(kind))
}

/// A doubly ranked alphabet: every symbol gets an (in-rank, out-rank) pair.
/// Symbols without an explicit entry have rank (0, 0).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankedAlphabet {
    ranks: BTreeMap<Symbol, (usize, usize)>,
}

impl RankedAlphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, symbol: impl Into<Symbol>, in_rank: usize, out_rank: usize) -> Self {
        self.set(symbol.into(), in_rank, out_rank);
        self
    }

    pub fn set(&mut self, symbol: Symbol, in_rank: usize, out_rank: usize) {
        self.ranks.insert(symbol, (in_rank, out_rank));
    }

    pub fn rank(&self, s: &Symbol) -> (usize, usize) {
        self.ranks.get(s).copied().unwrap_or((0, 0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, (usize, usize))> {
        self.ranks.iter().map(|(s, &r)| (s, r))
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Total driven in-slots and out-slots over the vertices of `d`.
    pub fn totals(&self, d: &Dag) -> (usize, usize) {
        d.vertices().fold((0, 0), |(i, o), v| {
            let (ri, ro) = self.rank(d.label(v));
            (i + ri, o + ro)
        })
    }
}

/// Driven slots of one vertex, appended after its base sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Slot {
    pub vertex: usize,
    pub index: usize,
}

pub(crate) fn driven_slots(base: &Dag, ranks: &RankedAlphabet) -> (Vec<Slot>, Vec<Slot>) {
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for v in base.vertices() {
        let (ri, ro) = ranks.rank(base.label(v));
        ins.extend((0..ri).map(|index| Slot { vertex: v, index }));
        outs.extend((0..ro).map(|index| Slot { vertex: v, index }));
    }
    (ins, outs)
}

/// Builds the DAG given by attaching the driven edges `(out slot, in slot)`
/// to `base`. Returns `None` if the result has a cycle.
pub(crate) fn attach_driven(
    base: &Dag,
    ranks: &RankedAlphabet,
    wiring: &[(Slot, Slot)],
) -> Option<Dag> {
    let mut b = base.to_builder();
    let mut in_extra: Vec<Vec<Option<EdgeId>>> = base
        .vertices()
        .map(|v| vec![None; ranks.rank(base.label(v)).0])
        .collect();
    let mut out_extra: Vec<Vec<Option<EdgeId>>> = base
        .vertices()
        .map(|v| vec![None; ranks.rank(base.label(v)).1])
        .collect();
    for &(o, i) in wiring {
        let e = b.add_unlisted_edge(base.id(o.vertex), base.id(i.vertex));
        out_extra[o.vertex][o.index] = Some(e);
        in_extra[i.vertex][i.index] = Some(e);
    }
    for v in base.vertices() {
        let mut ins = base.in_edges(v).to_vec();
        ins.extend(in_extra[v].iter().map(|e| e.expect("in-slot wired")));
        let mut outs = base.out_edges(v).to_vec();
        outs.extend(out_extra[v].iter().map(|e| e.expect("out-slot wired")));
        b.set_in_seq(v, ins);
        b.set_out_seq(v, outs);
    }
    b.build().ok()
}

/// Every DAG the input-driven encoding can produce from `base`.
///
/// Wirings that only permute slots between the same ordered pair of
/// vertices are produced once: within such a pair, out-slots are matched
/// to in-slots in increasing order. The result is empty when the ranks are
/// unbalanced or every wiring closes a cycle.
pub fn driven_instances(base: &Dag, ranks: &RankedAlphabet) -> Vec<Dag> {
    let (ins, outs) = driven_slots(base, ranks);
    if ins.len() != outs.len() {
        return Vec::new();
    }
    let mut search = WiringSearch {
        base,
        ins: &ins,
        outs: &outs,
        used: vec![false; ins.len()],
        chosen: Vec::with_capacity(outs.len()),
        succ: base
            .vertices()
            .map(|v| base.out_edges(v).iter().map(|&e| base.tar(e)).collect())
            .collect(),
        found: Vec::new(),
    };
    search.run();
    search
        .found
        .iter()
        .map(|w| attach_driven(base, ranks, w).expect("search keeps wirings acyclic"))
        .collect()
}

struct WiringSearch<'a> {
    base: &'a Dag,
    ins: &'a [Slot],
    outs: &'a [Slot],
    used: Vec<bool>,
    chosen: Vec<(Slot, Slot)>,
    succ: Vec<Vec<usize>>,
    found: Vec<Vec<(Slot, Slot)>>,
}

impl WiringSearch<'_> {
    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.base.vertex_count()];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(self.succ[v].iter().copied());
            }
        }
        false
    }

    fn run(&mut self) {
        let k = self.chosen.len();
        if k == self.outs.len() {
            self.found.push(self.chosen.clone());
            return;
        }
        let o = self.outs[k];
        for j in 0..self.ins.len() {
            if self.used[j] {
                continue;
            }
            let i = self.ins[j];
            // Canonical order within an ordered vertex pair.
            let crossing = self
                .chosen
                .iter()
                .any(|(po, pi)| po.vertex == o.vertex && pi.vertex == i.vertex && pi.index > i.index);
            if crossing || self.reaches(i.vertex, o.vertex) {
                continue;
            }
            self.used[j] = true;
            self.chosen.push((o, i));
            self.succ[o.vertex].push(i.vertex);
            self.run();
            self.succ[o.vertex].pop();
            self.chosen.pop();
            self.used[j] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::string_dag;
    use crate::picture::enumerate_pictures;
    use crate::symbol::chars;

    fn pic(rows: &[&str]) -> Picture {
        Picture::from_rows(rows).unwrap()
    }

    fn pos(d: &Dag, v: usize) -> (usize, usize) {
        match d.id(v) {
            VertexId::Pos(r, c) => (r, c),
            other => panic!("not a position: {other}"),
        }
    }

    #[test]
    fn coo_without_frame_on_single_cell() {
        let d = encode(&pic(&["a"]), EncodingKind::Coo);
        assert_eq!((d.vertex_count(), d.edge_count()), (1, 0));
    }

    #[test]
    fn coo_with_frame_on_single_cell() {
        let d = encode(&pic(&["a"]).boundary(), EncodingKind::Coo);
        assert_eq!((d.vertex_count(), d.edge_count()), (9, 12));
        let horizontal = d.edges().filter(|&e| pos(&d, d.src(e)).0 == pos(&d, d.tar(e)).0).count();
        assert_eq!(horizontal, 6);
    }

    #[test]
    fn coo_sequences_are_left_up_and_down_right() {
        let d = encode(&pic(&["ab", "ba"]).boundary(), EncodingKind::Coo);
        let v = d.index_of(VertexId::Pos(1, 1)).unwrap();
        let srcs: Vec<_> = d.in_edges(v).iter().map(|&e| pos(&d, d.src(e))).collect();
        let tars: Vec<_> = d.out_edges(v).iter().map(|&e| pos(&d, d.tar(e))).collect();
        assert_eq!(srcs, vec![(1, 0), (0, 1)]);
        assert_eq!(tars, vec![(2, 1), (1, 2)]);
    }

    #[test]
    fn coo_edge_count_formula() {
        for p in enumerate_pictures(&chars("a"), 4, 4) {
            let (m, n) = (p.rows(), p.cols());
            let d = encode(&p.boundary(), EncodingKind::Coo);
            assert_eq!(d.edge_count(), (m + 2) * (n + 1) + (m + 1) * (n + 2));
        }
    }

    fn path_positions(d: &Dag) -> Vec<(usize, usize)> {
        assert_eq!(d.roots().len(), 1);
        let mut v = d.roots()[0];
        let mut out = vec![pos(d, v)];
        while let [e] = d.out_edges(v) {
            v = d.tar(*e);
            assert_eq!(d.in_edges(v).len(), 1);
            out.push(pos(d, v));
        }
        assert!(d.out_edges(v).is_empty());
        out
    }

    #[test]
    fn rfa_and_bfa_are_hamiltonian_paths() {
        for (m, n) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            let p = enumerate_pictures(&chars("a"), m, n).last().unwrap();
            let b = p.boundary();
            for kind in [EncodingKind::Rfa, EncodingKind::Bfa] {
                let d = encode(&b, kind);
                assert_eq!(d.edge_count(), (m + 2) * (n + 2) - 1);
                assert_eq!(path_positions(&d).len(), (m + 2) * (n + 2));
            }
        }
        let d = encode(&pic(&["a"]).boundary(), EncodingKind::Bfa);
        assert_eq!(
            path_positions(&d),
            vec![(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0), (2, 0), (2, 1), (2, 2)]
        );
    }

    #[test]
    fn dia_on_framed_3x3() {
        let d = encode(&pic(&["aba", "bab", "aba"]).boundary(), EncodingKind::Dia);
        for e in d.edges() {
            let (s, t) = (pos(&d, d.src(e)), pos(&d, d.tar(e)));
            assert_eq!((t.0, t.1), (s.0 + 1, s.1 + 1));
        }
        assert!(!d.is_connected());
        for corner in [(0, 4), (4, 0)] {
            let v = d.index_of(VertexId::Pos(corner.0, corner.1)).unwrap();
            assert!(d.in_edges(v).is_empty() && d.out_edges(v).is_empty());
        }
        // 2*(m+2)-1 diagonals, two of them isolated corners.
        assert_eq!(d.connected_components().len(), 9);
    }

    #[test]
    fn lin_family_sequences() {
        let b = pic(&["ab", "ba"]).boundary();
        let d = encode(&b, EncodingKind::Lin);
        let v = d.index_of(VertexId::Pos(1, 0)).unwrap();
        let tars: Vec<_> = d.out_edges(v).iter().map(|&e| pos(&d, d.tar(e))).collect();
        assert_eq!(tars, vec![(2, 0), (1, 1)]);
        let v = d.index_of(VertexId::Pos(1, 3)).unwrap();
        let srcs: Vec<_> = d.in_edges(v).iter().map(|&e| pos(&d, d.src(e))).collect();
        assert_eq!(srcs, vec![(1, 2), (0, 3)]);
        // linl: only the left column descends, so the right border column
        // is reached only along rows.
        let l = encode(&b, EncodingKind::LinL);
        assert_eq!(l.edge_count(), 3 + 4 * 3);
        assert!(l.is_connected());
        let r = encode(&b, EncodingKind::LinR);
        assert_eq!(r.edge_count(), 3 + 4 * 3);
        assert_eq!(r.roots().len(), 4);
        // Without frame only the row edges survive.
        let plain = encode(&pic(&["ab", "ba"]), EncodingKind::LinL);
        assert_eq!(plain.edge_count(), 2);
    }

    #[test]
    fn every_encoding_validates() {
        for p in enumerate_pictures(&chars("ab"), 2, 3) {
            for kind in EncodingKind::ALL {
                assert!(encode(&p.boundary(), kind).validate().is_ok());
                assert!(encode(&p, kind).validate().is_ok());
            }
        }
    }

    #[test]
    fn reencode_matches_encode_and_is_idempotent() {
        let p = pic(&["ab", "ba", "aa"]);
        for framed in [false, true] {
            let coo = if framed {
                encode(&p.boundary(), EncodingKind::Coo)
            } else {
                encode(&p, EncodingKind::Coo)
            };
            for kind in EncodingKind::ALL {
                let direct = if framed { encode(&p.boundary(), kind) } else { encode(&p, kind) };
                let once = reencode(&coo, kind).unwrap();
                assert_eq!(once, direct);
                assert_eq!(reencode(&once, kind).unwrap(), once);
            }
        }
        let empty_framed = encode(&Picture::empty().boundary(), EncodingKind::Coo);
        assert_eq!(
            reencode(&empty_framed, EncodingKind::Dia).unwrap(),
            encode(&Picture::empty().boundary(), EncodingKind::Dia)
        );
    }

    #[test]
    fn reencode_rejects_non_grids() {
        let s = string_dag(&chars("ab"));
        assert!(matches!(reencode(&s, EncodingKind::Coo), Err(EncodingError::NotAPosition(_))));
        let d = encode(&pic(&["ab", "ba"]), EncodingKind::Coo);
        let mut b = DagBuilder::new();
        for v in d.vertices().filter(|&v| d.id(v) != VertexId::Pos(2, 2)) {
            b.add_vertex(d.id(v), d.label(v).clone());
        }
        let holey = b.build().unwrap();
        assert!(matches!(reencode(&holey, EncodingKind::Coo), Err(EncodingError::NotAGrid(_))));
    }

    fn anbn_ranks() -> RankedAlphabet {
        RankedAlphabet::new().with("a", 0, 1).with("b", 1, 0)
    }

    #[test]
    fn driven_instance_of_ab() {
        let base = string_dag(&chars("ab"));
        let all = driven_instances(&base, &anbn_ranks());
        assert_eq!(all.len(), 1);
        let d = &all[0];
        assert_eq!(d.edge_count(), 2);
        assert_eq!(d.out_edges(0).len(), 2);
        assert_eq!(d.in_edges(1).len(), 2);
        assert!(d.edges().all(|e| d.src(e) == 0 && d.tar(e) == 1));
    }

    #[test]
    fn unbalanced_ranks_give_nothing() {
        let base = string_dag(&chars("aab"));
        assert!(driven_instances(&base, &anbn_ranks()).is_empty());
    }

    #[test]
    fn edgeless_two_by_two() {
        let base = encode(&pic(&["ab", "ba"]), EncodingKind::Coo).without_edges();
        let all = driven_instances(&base, &anbn_ranks());
        assert_eq!(all.len(), 2);
        assert_ne!(all[0], all[1]);
    }

    #[test]
    fn cycles_are_excluded() {
        // b before a on a path: the only wiring a -> b closes a cycle.
        let base = string_dag(&chars("ba"));
        assert!(driven_instances(&base, &anbn_ranks()).is_empty());
    }

    #[test]
    fn parallel_slots_are_deduplicated() {
        // One vertex with two out-slots, one with two in-slots: the crossed
        // and uncrossed wirings collapse to one.
        let ranks = RankedAlphabet::new().with("a", 0, 2).with("b", 2, 0);
        let base = string_dag(&chars("ab")).without_edges();
        assert_eq!(driven_instances(&base, &ranks).len(), 1);
    }

    #[test]
    fn driven_instances_restrict_to_base() {
        let base = string_dag(&chars("aabb"));
        for d in driven_instances(&base, &anbn_ranks()) {
            assert!(d.validate().is_ok());
            let stripped = d.retain_edges(|e| e.0 < base.edge_count());
            assert_eq!(stripped, base);
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for k in EncodingKind::ALL {
            assert_eq!(k.name().parse::<EncodingKind>(), Ok(k));
        }
        assert!("grid".parse::<EncodingKind>().is_err());
    }
}
