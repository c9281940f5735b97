//! Finite automata over symbol strings.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::symbol::{State, Symbol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NfaError {
    #[error("symbol `{symbol}` at position {position} is not in the alphabet")]
    UnknownSymbol { symbol: Symbol, position: usize },
}

/// A nondeterministic finite automaton with a set of start states.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Nfa {
    states: BTreeSet<State>,
    alphabet: BTreeSet<Symbol>,
    delta: BTreeSet<(State, Symbol, State)>,
    start: BTreeSet<State>,
    finals: BTreeSet<State>,
}

impl Nfa {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self, q: impl Into<State>) {
        self.states.insert(q.into());
    }

    pub fn add_symbol(&mut self, s: impl Into<Symbol>) {
        self.alphabet.insert(s.into());
    }

    pub fn add_transition(&mut self, from: impl Into<State>, s: impl Into<Symbol>, to: impl Into<State>) {
        let (from, s, to) = (from.into(), s.into(), to.into());
        self.states.insert(from.clone());
        self.states.insert(to.clone());
        self.alphabet.insert(s.clone());
        self.delta.insert((from, s, to));
    }

    pub fn add_start(&mut self, q: impl Into<State>) {
        let q = q.into();
        self.states.insert(q.clone());
        self.start.insert(q);
    }

    pub fn add_final(&mut self, q: impl Into<State>) {
        let q = q.into();
        self.states.insert(q.clone());
        self.finals.insert(q);
    }

    pub fn states(&self) -> &BTreeSet<State> {
        &self.states
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    pub fn transitions(&self) -> impl Iterator<Item = (&State, &Symbol, &State)> {
        self.delta.iter().map(|(p, s, q)| (p, s, q))
    }

    pub fn start(&self) -> &BTreeSet<State> {
        &self.start
    }

    pub fn finals(&self) -> &BTreeSet<State> {
        &self.finals
    }

    pub fn is_deterministic(&self) -> bool {
        if self.start.len() != 1 {
            return false;
        }
        let mut seen = BTreeSet::new();
        self.delta.iter().all(|(p, s, _)| seen.insert((p, s)))
    }

    /// States reachable from `from` by one `s`-transition.
    pub fn step(&self, from: &BTreeSet<State>, s: &Symbol) -> BTreeSet<State> {
        self.delta
            .iter()
            .filter(|(p, t, _)| t == s && from.contains(p))
            .map(|(_, _, q)| q.clone())
            .collect()
    }

    /// Membership test. Symbols outside the alphabet simply reject.
    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut current = self.start.clone();
        for s in w {
            if current.is_empty() {
                return false;
            }
            current = self.step(&current, s);
        }
        !current.is_disjoint(&self.finals)
    }

    /// Membership test that reports symbols outside the alphabet.
    pub fn accepts_strict(&self, w: &[Symbol]) -> Result<bool, NfaError> {
        if let Some((position, symbol)) = w.iter().enumerate().find(|(_, s)| !self.alphabet.contains(s)) {
            return Err(NfaError::UnknownSymbol {
                symbol: symbol.clone(),
                position,
            });
        }
        Ok(self.accepts(w))
    }

    /// Subset construction over the reachable subsets. States of the result
    /// are named `{p,q}`; the empty subset is left out, so the result is a
    /// partial DFA.
    pub fn determinize(&self) -> Nfa {
        let name = |set: &BTreeSet<State>| {
            let parts: Vec<&str> = set.iter().map(State::as_str).collect();
            State::from(format!("{{{}}}", parts.join(",")))
        };
        let mut dfa = Nfa::new();
        dfa.alphabet = self.alphabet.clone();
        let mut ids: BTreeMap<BTreeSet<State>, State> = BTreeMap::new();
        let mut queue = vec![self.start.clone()];
        ids.insert(self.start.clone(), name(&self.start));
        dfa.add_start(name(&self.start));
        while let Some(set) = queue.pop() {
            let here = ids[&set].clone();
            if !set.is_disjoint(&self.finals) {
                dfa.add_final(here.clone());
            }
            for s in &self.alphabet {
                let next = self.step(&set, s);
                if next.is_empty() {
                    continue;
                }
                let there = ids.entry(next.clone()).or_insert_with(|| {
                    queue.push(next.clone());
                    name(&next)
                });
                dfa.add_transition(here.clone(), s.clone(), there.clone());
            }
        }
        dfa
    }

    /// A random NFA with `1..=max_states` states named `q0`, `q1`, …. Each
    /// possible transition is present with probability `density`; the start
    /// set is never empty.
    pub fn random(rng: &mut impl Rng, max_states: usize, alphabet: &[Symbol], density: f64) -> Nfa {
        let n = rng.gen_range(1..=max_states.max(1));
        let names: Vec<State> = (0..n).map(|k| State::from(format!("q{k}"))).collect();
        let mut a = Nfa::new();
        a.alphabet.extend(alphabet.iter().cloned());
        for q in &names {
            a.add_state(q.clone());
            if rng.gen_bool(0.5) {
                a.add_final(q.clone());
            }
        }
        a.add_start(names.choose(rng).expect("at least one state").clone());
        if rng.gen_bool(0.25) {
            a.add_start(names.choose(rng).expect("at least one state").clone());
        }
        for p in &names {
            for s in alphabet {
                for q in &names {
                    if rng.gen_bool(density) {
                        a.add_transition(p.clone(), s.clone(), q.clone());
                    }
                }
            }
        }
        a
    }
}
