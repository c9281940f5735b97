//! Acceptance under the input-driven encoding.
//!
//! Rather than enumerating every wiring and running the automaton on each,
//! the search labels base edges and wires driven slots in one pass over the
//! base DAG's topological order. A driven in-slot either takes an open
//! out-slot of an already processed vertex carrying the state the rule asks
//! for, or stays open until a later vertex supplies one; out-slots likewise.
//! Every wired edge is checked against the graph built so far, so the result
//! is always acyclic.

use super::search::{Compiled, UNSET};
use super::{DagAutomaton, Run};
use crate::encoding::{attach_driven, driven_slots, RankedAlphabet, Slot};
use crate::graph::Dag;

const OPEN: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
enum SlotState {
    Pending,
    Open,
    Wired,
}

struct Pool {
    slots: Vec<Slot>,
    first: Vec<usize>,
    label: Vec<u32>,
    state: Vec<SlotState>,
}

impl Pool {
    fn new(slots: Vec<Slot>, vertices: usize) -> Self {
        let mut first = vec![slots.len(); vertices + 1];
        for (k, s) in slots.iter().enumerate().rev() {
            first[s.vertex] = k;
        }
        for v in (0..vertices).rev() {
            first[v] = first[v].min(first[v + 1]);
        }
        let n = slots.len();
        Pool {
            slots,
            first,
            label: vec![UNSET; n],
            state: vec![SlotState::Pending; n],
        }
    }

    fn of(&self, v: usize) -> std::ops::Range<usize> {
        self.first[v]..self.first[v + 1]
    }

    /// One open slot per distinct vertex among the open slots labeled `q`,
    /// ordered by vertex.
    fn open_groups(&self, q: u32) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for k in 0..self.slots.len() {
            if self.state[k] == SlotState::Open && self.label[k] == q {
                let v = self.slots[k].vertex;
                if !out.iter().any(|&(u, _)| u == v) {
                    out.push((v, k));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn open_count(&self) -> usize {
        self.state.iter().filter(|&&s| s == SlotState::Open).count()
    }
}

struct Joint<'a> {
    c: &'a Compiled,
    base: &'a Dag,
    order: &'a [usize],
    ranks: Vec<(usize, usize)>,
    syms: Vec<Option<u32>>,
    labels: Vec<u32>,
    ins: Pool,
    outs: Pool,
    /// Remaining driven (in, out) slots of `order[k..]`.
    remaining: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    /// Wired (out-slot, in-slot) pairs in wiring order.
    wiring: Vec<(usize, usize)>,
    /// Choice made at each driven slot of the current vertex, for the
    /// canonical ordering among slots with equal state.
    in_choice: Vec<usize>,
    out_choice: Vec<usize>,
}

impl Joint<'_> {
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

    fn vertex(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return self.ins.open_count() == 0 && self.outs.open_count() == 0;
        }
        let v = self.order[k];
        let Some(sym) = self.syms[v] else {
            return false;
        };
        let (ri, ro) = self.ranks[v];
        let (bi, bo) = (self.base.in_edges(v).len(), self.base.out_edges(v).len());
        let Some(cands) = self.c.by_shape.get(&(sym, bi + ri, bo + ro)) else {
            return false;
        };
        let head: Vec<u32> = self.base.in_edges(v).iter().map(|e| self.labels[e.0]).collect();
        let saved = (
            std::mem::take(&mut self.in_choice),
            std::mem::take(&mut self.out_choice),
        );
        for &r in cands {
            let (rh, _, rt) = &self.c.rules[r];
            if rh[..bi] != head[..] {
                continue;
            }
            for (e, &q) in self.base.out_edges(v).iter().zip(rt) {
                self.labels[e.0] = q;
            }
            for (j, k2) in self.ins.of(v).enumerate() {
                self.ins.label[k2] = rh[bi + j];
            }
            for (j, k2) in self.outs.of(v).enumerate() {
                self.outs.label[k2] = rt[bo + j];
            }
            self.in_choice.clear();
            self.out_choice.clear();
            if self.wire_in(k, 0) {
                return true;
            }
        }
        (self.in_choice, self.out_choice) = saved;
        false
    }

    /// Lower bound for the choice at slot `j` of a vertex: the choice of the
    /// previous slot with the same state, so equal slots are filled as a
    /// multiset.
    fn min_choice(pool: &Pool, choices: &[usize], range_start: usize, j: usize) -> usize {
        let q = pool.label[range_start + j];
        (0..j)
            .rev()
            .find(|&i| pool.label[range_start + i] == q)
            .map_or(0, |i| choices[i])
    }

    fn wire_in(&mut self, k: usize, j: usize) -> bool {
        let v = self.order[k];
        let range = self.ins.of(v);
        if j == range.len() {
            return self.wire_out(k, 0);
        }
        let slot = range.start + j;
        let q = self.ins.label[slot];
        let min = Self::min_choice(&self.ins, &self.in_choice, range.start, j);
        for (u, o) in self.outs.open_groups(q) {
            if u < min || self.reaches(v, u) {
                continue;
            }
            self.outs.state[o] = SlotState::Wired;
            self.ins.state[slot] = SlotState::Wired;
            self.succ[u].push(v);
            self.wiring.push((o, slot));
            self.in_choice.push(u);
            if self.wire_in(k, j + 1) {
                return true;
            }
            self.in_choice.pop();
            self.wiring.pop();
            self.succ[u].pop();
            self.ins.state[slot] = SlotState::Pending;
            self.outs.state[o] = SlotState::Open;
        }
        if self.remaining[k + 1].1 > 0 {
            self.ins.state[slot] = SlotState::Open;
            self.in_choice.push(OPEN);
            if self.wire_in(k, j + 1) {
                return true;
            }
            self.in_choice.pop();
            self.ins.state[slot] = SlotState::Pending;
        }
        false
    }

    fn wire_out(&mut self, k: usize, j: usize) -> bool {
        let v = self.order[k];
        let range = self.outs.of(v);
        if j == range.len() {
            let (rem_in, rem_out) = self.remaining[k + 1];
            if self.ins.open_count() > rem_out || self.outs.open_count() > rem_in {
                return false;
            }
            return self.vertex(k + 1);
        }
        let slot = range.start + j;
        let q = self.outs.label[slot];
        let min = Self::min_choice(&self.outs, &self.out_choice, range.start, j);
        for (w, i) in self.ins.open_groups(q) {
            if w < min || self.reaches(w, v) {
                continue;
            }
            self.ins.state[i] = SlotState::Wired;
            self.outs.state[slot] = SlotState::Wired;
            self.succ[v].push(w);
            self.wiring.push((slot, i));
            self.out_choice.push(w);
            if self.wire_out(k, j + 1) {
                return true;
            }
            self.out_choice.pop();
            self.wiring.pop();
            self.succ[v].pop();
            self.outs.state[slot] = SlotState::Pending;
            self.ins.state[i] = SlotState::Open;
        }
        if self.remaining[k + 1].0 > 0 {
            self.outs.state[slot] = SlotState::Open;
            self.out_choice.push(OPEN);
            if self.wire_out(k, j + 1) {
                return true;
            }
            self.out_choice.pop();
            self.outs.state[slot] = SlotState::Pending;
        }
        false
    }
}

/// Searches for a driven instance of `base` together with a run on it.
/// Returns the instance and the run.
pub fn find_driven_run(
    a: &DagAutomaton,
    base: &Dag,
    ranks: &RankedAlphabet,
) -> Option<(Dag, Run)> {
    let (in_slots, out_slots) = driven_slots(base, ranks);
    if in_slots.len() != out_slots.len() {
        return None;
    }
    if base.is_empty() {
        return a
            .accepts_empty_graph()
            .then(|| (Dag::empty(), Run::new(Vec::new())));
    }
    let c = Compiled::new(a);
    let order = base.topological_order();
    let vertex_ranks: Vec<(usize, usize)> =
        base.vertices().map(|v| ranks.rank(base.label(v))).collect();
    let mut remaining = vec![(0, 0); order.len() + 1];
    for k in (0..order.len()).rev() {
        let (ri, ro) = vertex_ranks[order[k]];
        remaining[k] = (remaining[k + 1].0 + ri, remaining[k + 1].1 + ro);
    }
    let n = base.vertex_count();
    let mut s = Joint {
        c: &c,
        base,
        order,
        ranks: vertex_ranks,
        syms: base.vertices().map(|v| c.symbol(base.label(v))).collect(),
        labels: vec![UNSET; base.edge_count()],
        ins: Pool::new(in_slots, n),
        outs: Pool::new(out_slots, n),
        remaining,
        succ: base
            .vertices()
            .map(|v| base.out_edges(v).iter().map(|&e| base.tar(e)).collect())
            .collect(),
        wiring: Vec::new(),
        in_choice: Vec::new(),
        out_choice: Vec::new(),
    };
    if !s.vertex(0) {
        return None;
    }
    let pairs: Vec<(Slot, Slot)> = s
        .wiring
        .iter()
        .map(|&(o, i)| (s.outs.slots[o], s.ins.slots[i]))
        .collect();
    let dag = attach_driven(base, ranks, &pairs).expect("joint search keeps the graph acyclic");
    let mut labels = s.labels.clone();
    labels.extend(s.wiring.iter().map(|&(o, _)| s.outs.label[o]));
    Some((dag, c.run(&labels)))
}

/// True iff some driven instance of `base` has a run.
pub fn accepts_driven(a: &DagAutomaton, base: &Dag, ranks: &RankedAlphabet) -> bool {
    find_driven_run(a, base, ranks).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{find_run, is_run, Rule};
    use crate::encoding::{driven_instances, encode, EncodingKind};
    use crate::graph::string_dag;
    use crate::picture::{enumerate_pictures, Picture};
    use crate::symbol::chars;

    fn balance() -> (DagAutomaton, RankedAlphabet) {
        (
            DagAutomaton::new([Rule::of("", "a", "p"), Rule::of("p", "b", "")]),
            RankedAlphabet::new().with("a", 0, 1).with("b", 1, 0),
        )
    }

    fn edgeless(rows: &[&str]) -> Dag {
        encode(&Picture::from_rows(rows).unwrap(), EncodingKind::Coo).without_edges()
    }

    #[test]
    fn balance_examples() {
        let (a, r) = balance();
        let (d, run) = find_driven_run(&a, &edgeless(&["ab", "ba"]), &r).unwrap();
        assert!(is_run(&a, &d, &run));
        assert_eq!(d.edge_count(), 2);
        assert!(!accepts_driven(&a, &edgeless(&["aa"]), &r));
    }

    #[test]
    fn three_letter_strings() {
        let a = DagAutomaton::new([
            Rule::of("", "a", "a p"),
            Rule::of("a", "a", "a p"),
            Rule::of("a p", "b", "b q"),
            Rule::of("b p", "b", "b q"),
            Rule::of("b q", "c", "c"),
            Rule::of("c q", "c", "c"),
            Rule::of("c q", "c", ""),
            Rule::of("b q", "c", ""),
        ]);
        let r = RankedAlphabet::new()
            .with("a", 0, 1)
            .with("b", 1, 1)
            .with("c", 1, 0);
        assert!(accepts_driven(&a, &string_dag(&chars("abc")), &r));
        assert!(accepts_driven(&a, &string_dag(&chars("aabbcc")), &r));
        assert!(!accepts_driven(&a, &string_dag(&chars("abbc")), &r));
        assert!(!accepts_driven(&a, &string_dag(&chars("acb")), &r));
    }

    #[test]
    fn agrees_with_instance_enumeration() {
        let (a, r) = balance();
        for p in enumerate_pictures(&chars("ab"), 2, 3) {
            let base = encode(&p, EncodingKind::Coo);
            let by_enumeration = driven_instances(&base, &r)
                .iter()
                .any(|d| find_run(&a, d).is_some());
            assert_eq!(accepts_driven(&a, &base, &r), by_enumeration, "{p:?}");
        }
    }
}
