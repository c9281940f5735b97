//! Scanning strategies: reading a framed picture as a string so that a
//! finite automaton can run on it.

use std::fmt;
use std::str::FromStr;

use crate::nfa::Nfa;
use crate::picture::{BoundaryPicture, Picture};
use crate::symbol::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Row by row, each row left to right.
    RfaRows,
    /// Row by row, alternating direction, starting left to right.
    BfaRows,
    /// Southeast diagonal by southeast diagonal, starting at the top-right
    /// corner; each diagonal from its top-left end.
    RfaDiagSE,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::RfaRows, Strategy::BfaRows, Strategy::RfaDiagSE];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::RfaRows => "rfa",
            Strategy::BfaRows => "bfa",
            Strategy::RfaDiagSE => "diag",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown strategy `{s}` (expected rfa, bfa or diag)"))
    }
}

/// Positions of a `rows x cols` array in scanning order.
pub fn scan_order(rows: usize, cols: usize, strategy: Strategy) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::with_capacity(rows * cols);
    match strategy {
        Strategy::RfaRows => {
            for r in 0..rows {
                out.extend((0..cols).map(|c| (r, c)));
            }
        }
        Strategy::BfaRows => {
            for r in 0..rows {
                if r % 2 == 0 {
                    out.extend((0..cols).map(|c| (r, c)));
                } else {
                    out.extend((0..cols).rev().map(|c| (r, c)));
                }
            }
        }
        Strategy::RfaDiagSE => {
            for r in 0..rows {
                out.extend((0..cols).map(|c| (r, c)));
            }
            out.sort_by_key(|&(r, c)| (r as isize - c as isize, c));
        }
    }
    out
}

/// The framed picture's symbols in scanning order, all `(m+2)(n+2)` of them.
pub fn serialize(p: &BoundaryPicture, strategy: Strategy) -> Vec<Symbol> {
    scan_order(p.rows(), p.cols(), strategy)
        .into_iter()
        .map(|(r, c)| p.get(r, c).clone())
        .collect()
}

/// Collapses every run of consecutive `#` into one.
pub fn squeeze(w: &[Symbol]) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = Vec::with_capacity(w.len());
    for s in w {
        if s.is_boundary() && out.last().is_some_and(Symbol::is_boundary) {
            continue;
        }
        out.push(s.clone());
    }
    out
}

/// Acceptance of a picture by a finite automaton with a scanning strategy.
pub fn scan_accepts(m: &Nfa, p: &Picture, strategy: Strategy) -> bool {
    m.accepts(&serialize(&p.boundary(), strategy))
}

pub fn rfa_accepts(m: &Nfa, p: &Picture) -> bool {
    scan_accepts(m, p, Strategy::RfaRows)
}

pub fn bfa_accepts(m: &Nfa, p: &Picture) -> bool {
    scan_accepts(m, p, Strategy::BfaRows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picture::enumerate_pictures;
    use crate::symbol::chars;

    fn text(w: &[Symbol]) -> String {
        w.iter().map(Symbol::as_str).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn rows_on_single_cell() {
        let b = Picture::from_rows(&["a"]).unwrap().boundary();
        assert_eq!(text(&serialize(&b, Strategy::RfaRows)), "# # # # a # # # #");
        assert_eq!(text(&squeeze(&serialize(&b, Strategy::RfaRows))), "# a #");
    }

    #[test]
    fn empty_picture() {
        let b = Picture::empty().boundary();
        for s in Strategy::ALL {
            let w = serialize(&b, s);
            assert_eq!(w.len(), 4);
            assert!(w.iter().all(Symbol::is_boundary));
        }
    }

    #[test]
    fn bfa_alternates() {
        let b = Picture::from_rows(&["ab", "cd"]).unwrap().boundary();
        assert_eq!(
            text(&serialize(&b, Strategy::BfaRows)),
            "# # # # # b a # # c d # # # # #"
        );
    }

    #[test]
    fn diagonals_are_contiguous() {
        let order = scan_order(3, 4, Strategy::RfaDiagSE);
        assert_eq!(order[0], (0, 3));
        assert_eq!(&order[1..3], &[(0, 2), (1, 3)]);
        assert_eq!(*order.last().unwrap(), (2, 0));
    }

    #[test]
    fn serializations_are_permutations() {
        for p in enumerate_pictures(&chars("abc"), 2, 2) {
            let b = p.boundary();
            let mut reference = serialize(&b, Strategy::RfaRows);
            reference.sort();
            for s in Strategy::ALL {
                let mut w = serialize(&b, s);
                assert_eq!(w.len(), b.rows() * b.cols());
                w.sort();
                assert_eq!(w, reference);
            }
        }
    }

    #[test]
    fn strategy_names() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
    }
}
