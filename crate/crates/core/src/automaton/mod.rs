//! DAG automata: rules `α → σ → β`, runs, and acceptance.

mod cycles;
mod driven;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::encoding::RankedAlphabet;
use crate::graph::{Dag, EdgeId};
use crate::symbol::{State, Symbol};

pub use cycles::rule_cycles;
pub use driven::{accepts_driven, find_driven_run};
pub use search::{accepts, find_run, find_run_deterministic};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomatonError {
    #[error("automaton is not top-down deterministic: {0} and {1} share label, head and tail length")]
    DeterminismViolated(Rule, Rule),
}

/// A rule `head → label → tail`. Empty head or tail is λ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub head: Vec<State>,
    pub label: Symbol,
    pub tail: Vec<State>,
}

fn states_of(text: &str) -> Vec<State> {
    text.split_whitespace()
        .filter(|s| *s != "_" && *s != "λ")
        .map(State::from)
        .collect()
}

impl Rule {
    pub fn new(head: Vec<State>, label: impl Into<Symbol>, tail: Vec<State>) -> Self {
        Rule {
            head,
            label: label.into(),
            tail,
        }
    }

    /// Builds a rule from whitespace-separated state lists; an empty list,
    /// `_` or `λ` stands for λ.
    ///
    /// ```
    /// # use picdag::automaton::Rule;
    /// let r = Rule::of("t q", "B", "t p");
    /// assert_eq!(r.to_string(), "(t q → B → t p)");
    /// assert!(Rule::of("_", "a", "").head.is_empty());
    /// ```
    pub fn of(head: &str, label: &str, tail: &str) -> Self {
        Rule::new(states_of(head), label, states_of(tail))
    }
}

fn write_states(f: &mut fmt::Formatter<'_>, states: &[State]) -> fmt::Result {
    if states.is_empty() {
        return f.write_str("λ");
    }
    for (k, s) in states.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_states(f, &self.head)?;
        write!(f, " → {} → ", self.label)?;
        write_states(f, &self.tail)?;
        f.write_str(")")
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A DAG automaton. Rules are kept in insertion order without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DagAutomaton {
    states: BTreeSet<State>,
    alphabet: BTreeSet<Symbol>,
    rules: Vec<Rule>,
    accepts_empty_graph: bool,
    ranks: RankedAlphabet,
}

impl DagAutomaton {
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Self {
        let mut a = DagAutomaton::default();
        for r in rules {
            a.add_rule(r);
        }
        a
    }

    pub fn add_rule(&mut self, r: Rule) {
        if self.rules.contains(&r) {
            return;
        }
        self.states.extend(r.head.iter().cloned());
        self.states.extend(r.tail.iter().cloned());
        self.alphabet.insert(r.label.clone());
        self.rules.push(r);
    }

    pub fn with_empty_graph(mut self, accepted: bool) -> Self {
        self.accepts_empty_graph = accepted;
        self
    }

    pub fn set_accepts_empty_graph(&mut self, accepted: bool) {
        self.accepts_empty_graph = accepted;
    }

    /// Ranks for the input-driven encoding. An automaton without ranks is
    /// run on input-agnostic encodings only.
    pub fn with_ranks(mut self, ranks: RankedAlphabet) -> Self {
        self.alphabet.extend(ranks.iter().map(|(s, _)| s.clone()));
        self.ranks = ranks;
        self
    }

    /// Declares symbols that no rule mentions.
    pub fn with_alphabet(mut self, symbols: impl IntoIterator<Item = Symbol>) -> Self {
        self.alphabet.extend(symbols);
        self
    }

    pub fn add_state(&mut self, q: State) {
        self.states.insert(q);
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn states(&self) -> &BTreeSet<State> {
        &self.states
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    pub fn accepts_empty_graph(&self) -> bool {
        self.accepts_empty_graph
    }

    pub fn ranks(&self) -> &RankedAlphabet {
        &self.ranks
    }

    pub fn has_ranks(&self) -> bool {
        !self.ranks.is_empty()
    }

    /// Two rules that break top-down determinism, if any: same label, same
    /// head, same tail length, different tails.
    pub fn determinism_conflict(&self) -> Option<(&Rule, &Rule)> {
        let mut seen: BTreeMap<(&Symbol, &[State], usize), &Rule> = BTreeMap::new();
        for r in &self.rules {
            let key = (&r.label, r.head.as_slice(), r.tail.len());
            match seen.get(&key) {
                Some(prev) => return Some((prev, r)),
                None => {
                    seen.insert(key, r);
                }
            }
        }
        None
    }

    pub fn is_top_down_deterministic(&self) -> bool {
        self.determinism_conflict().is_none()
    }
}

/// An assignment of states to the edges of a DAG.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    labels: Vec<State>,
}

impl Run {
    pub fn new(labels: Vec<State>) -> Self {
        Run { labels }
    }

    pub fn get(&self, e: EdgeId) -> &State {
        &self.labels[e.0]
    }

    pub fn labels(&self) -> &[State] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Checks a run against the automaton vertex by vertex.
pub fn is_run(a: &DagAutomaton, d: &Dag, run: &Run) -> bool {
    if run.len() != d.edge_count() {
        return false;
    }
    if d.is_empty() {
        return a.accepts_empty_graph();
    }
    d.vertices().all(|v| {
        let r = Rule::new(
            d.in_edges(v).iter().map(|&e| run.get(e).clone()).collect(),
            d.label(v).clone(),
            d.out_edges(v).iter().map(|&e| run.get(e).clone()).collect(),
        );
        a.rules().contains(&r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_display() {
        assert_eq!(Rule::of("", "a", "a").to_string(), "(λ → a → a)");
        assert_eq!(Rule::of("qz qf", "#", "qf").to_string(), "(qz qf → # → qf)");
    }

    #[test]
    fn duplicate_rules_are_dropped() {
        let a = DagAutomaton::new([Rule::of("", "a", "p"), Rule::of("", "a", "p")]);
        assert_eq!(a.rules().len(), 1);
        assert_eq!(a.states().len(), 1);
    }

    #[test]
    fn determinism() {
        let a = DagAutomaton::new([Rule::of("", "a", "p"), Rule::of("", "a", "q")]);
        assert!(!a.is_top_down_deterministic());
        let b = DagAutomaton::new([Rule::of("", "a", "p"), Rule::of("", "a", "q q")]);
        assert!(b.is_top_down_deterministic());
    }
}
