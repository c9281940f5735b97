//! Two-dimensional online tessellation automata.
//!
//! A run assigns a state to every cell; the state of cell (i, j) is drawn
//! from δ(state above, state to the left, symbol), where cells outside the
//! picture carry the initial state. The picture is accepted if the
//! bottom-right cell can end in a final state. The empty picture is accepted
//! iff the initial state is final.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::picture::Picture;
use crate::symbol::{State, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ota {
    alphabet: BTreeSet<Symbol>,
    states: BTreeSet<State>,
    start: State,
    finals: BTreeSet<State>,
    delta: BTreeMap<(State, State, Symbol), BTreeSet<State>>,
}

impl Ota {
    pub fn new(start: impl Into<State>) -> Self {
        let start = start.into();
        Ota {
            alphabet: BTreeSet::new(),
            states: BTreeSet::from([start.clone()]),
            start,
            finals: BTreeSet::new(),
            delta: BTreeMap::new(),
        }
    }

    pub fn add_symbol(&mut self, s: impl Into<Symbol>) {
        self.alphabet.insert(s.into());
    }

    pub fn add_final(&mut self, q: impl Into<State>) {
        let q = q.into();
        self.states.insert(q.clone());
        self.finals.insert(q);
    }

    /// Adds `q ∈ δ(up, left, s)`.
    pub fn add_transition(
        &mut self,
        up: impl Into<State>,
        left: impl Into<State>,
        s: impl Into<Symbol>,
        q: impl Into<State>,
    ) {
        let (up, left, s, q) = (up.into(), left.into(), s.into(), q.into());
        self.states.extend([up.clone(), left.clone(), q.clone()]);
        self.alphabet.insert(s.clone());
        self.delta.entry((up, left, s)).or_default().insert(q);
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    pub fn states(&self) -> &BTreeSet<State> {
        &self.states
    }

    pub fn start(&self) -> &State {
        &self.start
    }

    pub fn finals(&self) -> &BTreeSet<State> {
        &self.finals
    }

    pub fn delta(&self, up: &State, left: &State, s: &Symbol) -> impl Iterator<Item = &State> {
        self.delta
            .get(&(up.clone(), left.clone(), s.clone()))
            .into_iter()
            .flatten()
    }

    /// All `(up, left, symbol, q)` entries.
    pub fn transitions(&self) -> impl Iterator<Item = (&State, &State, &Symbol, &State)> {
        self.delta
            .iter()
            .flat_map(|((u, l, s), qs)| qs.iter().map(move |q| (u, l, s, q)))
    }

    pub fn is_deterministic(&self) -> bool {
        self.delta.values().all(|qs| qs.len() <= 1)
    }

    /// Membership by dynamic programming over row frontiers: after each
    /// cell, the set of reachable vectors holding the current row's states
    /// left of the cell and the previous row's states from the cell on.
    pub fn accepts(&self, p: &Picture) -> bool {
        if p.is_empty() {
            return self.finals.contains(&self.start);
        }
        let ids: HashMap<&State, u32> = self.states.iter().zip(0..).collect();
        let sym_ids: HashMap<&Symbol, u32> = self.alphabet.iter().zip(0..).collect();
        let mut delta: HashMap<(u32, u32, u32), Vec<u32>> = HashMap::new();
        for ((u, l, s), qs) in &self.delta {
            delta.insert((ids[u], ids[l], sym_ids[s]), qs.iter().map(|q| ids[q]).collect());
        }
        let q0 = ids[&self.start];
        let n = p.cols();
        let mut frontier: HashSet<Vec<u32>> = HashSet::from([vec![q0; n]]);
        for r in 1..=p.rows() {
            for c in 1..=n {
                let Some(&s) = sym_ids.get(p.get(r, c)) else {
                    return false;
                };
                let mut next = HashSet::new();
                for v in &frontier {
                    let up = v[c - 1];
                    let left = if c == 1 { q0 } else { v[c - 2] };
                    for &q in delta.get(&(up, left, s)).into_iter().flatten() {
                        let mut w = v.clone();
                        w[c - 1] = q;
                        next.insert(w);
                    }
                }
                if next.is_empty() {
                    return false;
                }
                frontier = next;
            }
        }
        let finals: HashSet<u32> = self.finals.iter().map(|q| ids[q]).collect();
        frontier.iter().any(|v| finals.contains(&v[n - 1]))
    }
}
