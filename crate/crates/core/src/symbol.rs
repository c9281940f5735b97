//! Interned-by-value names for vertex labels and edge states.

use std::fmt;
use std::sync::Arc;

/// The reserved frame symbol of boundary pictures.
pub const BOUNDARY: &str = "#";

/// A vertex label or picture cell symbol. Symbols are single
/// non-whitespace tokens.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(s: &str) -> Self {
        Symbol(Arc::from(s))
    }

    pub fn boundary() -> Self {
        Symbol::new(BOUNDARY)
    }

    pub fn is_boundary(&self) -> bool {
        &*self.0 == BOUNDARY
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<String> for Symbol {
    fn from(s: String) -> Self {
        Symbol(Arc::from(s))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// An automaton state. For DAG automata these are the edge labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State(Arc<str>);

impl State {
    pub fn new(s: &str) -> Self {
        State(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for State {
    fn from(s: &str) -> Self {
        State::new(s)
    }
}

impl From<String> for State {
    fn from(s: String) -> Self {
        State(Arc::from(s))
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// Splits a string into symbols, one per character. Convenient for the
/// single-letter alphabets used throughout the tests.
pub fn chars(s: &str) -> Vec<Symbol> {
    s.chars().map(|c| Symbol::from(c.to_string())).collect()
}

/// Hands out names that do not collide with any name registered so far.
#[derive(Debug, Default, Clone)]
pub(crate) struct FreshNames {
    taken: std::collections::HashSet<String>,
}

impl FreshNames {
    pub(crate) fn new<'a>(taken: impl IntoIterator<Item = &'a str>) -> Self {
        FreshNames {
            taken: taken.into_iter().map(str::to_owned).collect(),
        }
    }

    pub(crate) fn fresh(&mut self, base: &str) -> String {
        let mut name = base.to_owned();
        while self.taken.contains(&name) {
            name.push('\'');
        }
        self.taken.insert(name.clone());
        name
    }
}
