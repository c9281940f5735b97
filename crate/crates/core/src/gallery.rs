//! Example automata, each paired with a direct combinatorial membership
//! test for the language it is meant to recognize.

use std::fmt;

use thiserror::Error;

use crate::automaton::{accepts, find_driven_run, find_run, DagAutomaton, Rule, Run};
use crate::encoding::{encode, EncodingKind, RankedAlphabet};
use crate::equiv::{compare, EquivReport};
use crate::graph::{string_dag, Dag};
use crate::ota::Ota;
use crate::picture::{enumerate_pictures, enumerate_strings, Picture};
use crate::symbol::{chars, Symbol};

pub const NAMES: [&str; 5] = ["anbn", "anbncn", "dia", "balance", "balance-coo"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown gallery entry `{0}` (expected one of anbn, anbncn, dia, balance, balance-coo)")]
pub struct UnknownEntry(pub String);

/// How an input becomes the DAG the automaton runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    /// A string as a path.
    String,
    /// A picture's positions without any edges.
    Edgeless { boundary: bool },
    /// An input-agnostic encoding of the picture.
    Encoded { kind: EncodingKind, boundary: bool },
}

#[derive(Clone, Copy)]
pub enum Oracle {
    String(fn(&[Symbol]) -> bool),
    Picture(fn(&Picture) -> bool),
}

/// An input of a gallery entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    String(Vec<Symbol>),
    Picture(Picture),
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::String(w) if w.is_empty() => f.write_str("λ"),
            Input::String(w) => {
                let parts: Vec<&str> = w.iter().map(Symbol::as_str).collect();
                f.write_str(&parts.join(" "))
            }
            Input::Picture(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub automaton: DagAutomaton,
    pub base: Base,
    /// Symbols of the inputs the entry is checked on.
    pub alphabet: Vec<Symbol>,
    pub oracle: Oracle,
}

impl fmt::Debug for GalleryEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GalleryEntry")
            .field("name", &self.name)
            .field("base", &self.base)
            .field("rules", &self.automaton.rules().len())
            .finish()
    }
}

impl GalleryEntry {
    pub fn is_string_entry(&self) -> bool {
        self.base == Base::String
    }

    pub fn is_driven(&self) -> bool {
        self.automaton.has_ranks()
    }

    /// The DAG built from the input before any driven edges.
    pub fn base_dag(&self, input: &Input) -> Dag {
        match (self.base, input) {
            (Base::String, Input::String(w)) => string_dag(w),
            (Base::String, Input::Picture(p)) => string_dag(p.cells()),
            (Base::Edgeless { boundary }, Input::Picture(p)) => picture_dag(p, EncodingKind::Coo, boundary).without_edges(),
            (Base::Encoded { kind, boundary }, Input::Picture(p)) => picture_dag(p, kind, boundary),
            (_, Input::String(w)) => {
                let p = Picture::new(usize::from(!w.is_empty()), w.len(), w.clone()).expect("one row");
                self.base_dag(&Input::Picture(p))
            }
        }
    }

    /// The DAG the automaton accepted and its run, if any.
    pub fn witness(&self, input: &Input) -> Option<(Dag, Run)> {
        let base = self.base_dag(input);
        if self.is_driven() {
            find_driven_run(&self.automaton, &base, self.automaton.ranks())
        } else {
            find_run(&self.automaton, &base).map(|r| (base, r))
        }
    }

    pub fn accepts(&self, input: &Input) -> bool {
        if self.is_driven() {
            self.witness(input).is_some()
        } else {
            accepts(&self.automaton, &self.base_dag(input), false)
        }
    }

    pub fn oracle(&self, input: &Input) -> bool {
        match (self.oracle, input) {
            (Oracle::String(f), Input::String(w)) => f(w),
            (Oracle::Picture(f), Input::Picture(p)) => f(p),
            (Oracle::String(f), Input::Picture(p)) => p.rows() <= 1 && f(p.cells()),
            (Oracle::Picture(f), Input::String(w)) => {
                let p = Picture::new(usize::from(!w.is_empty()), w.len(), w.clone()).expect("one row");
                f(&p)
            }
        }
    }

    /// Every input of the entry's domain within the bounds: strings of
    /// length `1..=max_len` for string entries, pictures up to
    /// `max_rows x max_cols` otherwise.
    pub fn domain(&self, max_rows: usize, max_cols: usize, max_len: usize) -> Vec<Input> {
        if self.is_string_entry() {
            enumerate_strings(&self.alphabet, 1..=max_len).map(Input::String).collect()
        } else {
            enumerate_pictures(&self.alphabet, max_rows, max_cols)
                .map(Input::Picture)
                .collect()
        }
    }

    /// Compares the automaton with the oracle on every input in `inputs`.
    pub fn check(&self, inputs: &[Input]) -> EquivReport<Input> {
        compare(inputs, |x| (self.accepts(x), self.oracle(x)))
    }
}

fn picture_dag(p: &Picture, kind: EncodingKind, boundary: bool) -> Dag {
    if boundary {
        encode(&p.boundary(), kind)
    } else {
        encode(p, kind)
    }
}

pub fn gallery(name: &str) -> Result<GalleryEntry, UnknownEntry> {
    Ok(match name {
        "anbn" => anbn(),
        "anbncn" => anbncn(),
        "dia" => dia(&chars("ab")),
        "balance" => balance(),
        "balance-coo" => balance_coo(),
        _ => return Err(UnknownEntry(name.to_owned())),
    })
}

pub fn all() -> Vec<GalleryEntry> {
    NAMES.iter().map(|n| gallery(n).expect("registered")).collect()
}

/// aⁿbⁿ, n ≥ 1, over string DAGs with r(a) = (0, 1), r(b) = (1, 0). Each a
/// sends a driven edge `p` to some b.
pub fn anbn() -> GalleryEntry {
    let automaton = DagAutomaton::new([
        Rule::of("", "a", "a p"),
        Rule::of("a", "a", "a p"),
        Rule::of("a p", "b", "b"),
        Rule::of("b p", "b", "b"),
        Rule::of("a p", "b", ""),
        Rule::of("b p", "b", ""),
    ])
    .with_ranks(RankedAlphabet::new().with("a", 0, 1).with("b", 1, 0));
    GalleryEntry {
        name: "anbn",
        automaton,
        base: Base::String,
        alphabet: chars("ab"),
        oracle: Oracle::String(|w| is_blocks(w, &["a", "b"])),
    }
}

/// aⁿbⁿcⁿ, n ≥ 1, with r(a) = (0, 1), r(b) = (1, 1), r(c) = (1, 0): driven
/// `p` edges pair a's with b's, `q` edges b's with c's.
pub fn anbncn() -> GalleryEntry {
    let automaton = DagAutomaton::new([
        Rule::of("", "a", "a p"),
        Rule::of("a", "a", "a p"),
        Rule::of("a p", "b", "b q"),
        Rule::of("b p", "b", "b q"),
        Rule::of("b q", "c", "c"),
        Rule::of("c q", "c", "c"),
        Rule::of("b q", "c", ""),
        Rule::of("c q", "c", ""),
    ])
    .with_ranks(
        RankedAlphabet::new()
            .with("a", 0, 1)
            .with("b", 1, 1)
            .with("c", 1, 0),
    );
    GalleryEntry {
        name: "anbncn",
        automaton,
        base: Base::String,
        alphabet: chars("abc"),
        oracle: Oracle::String(|w| is_blocks(w, &["a", "b", "c"])),
    }
}

/// `w` is `x₁ⁿ x₂ⁿ … xₖⁿ` for some n ≥ 1.
fn is_blocks(w: &[Symbol], letters: &[&str]) -> bool {
    let k = letters.len();
    if w.is_empty() || !w.len().is_multiple_of(k) {
        return false;
    }
    let n = w.len() / k;
    w.iter()
        .enumerate()
        .all(|(i, s)| s.as_str() == letters[i / n])
}

/// Pictures constant along every southeast diagonal, on the `dia` encoding
/// of the framed picture. Frame edges carry `#`; every other edge carries
/// the color of its diagonal.
pub fn dia(alphabet: &[Symbol]) -> GalleryEntry {
    let mut rules = vec![
        Rule::of("", "#", "#"),
        Rule::of("#", "#", ""),
        Rule::of("", "#", ""),
    ];
    for s in alphabet {
        let s = s.as_str();
        rules.push(Rule::of("#", s, s));
        rules.push(Rule::of(s, s, s));
        rules.push(Rule::of(s, "#", ""));
    }
    GalleryEntry {
        name: "dia",
        automaton: DagAutomaton::new(rules),
        base: Base::Encoded {
            kind: EncodingKind::Dia,
            boundary: true,
        },
        alphabet: alphabet.to_vec(),
        oracle: Oracle::Picture(diagonals_constant),
    }
}

fn diagonals_constant(p: &Picture) -> bool {
    (1..p.rows()).all(|i| (1..p.cols()).all(|j| p.get(i, j) == p.get(i + 1, j + 1)))
}

/// Nonempty pictures with as many a's as b's: every a sends one driven edge
/// to a b, on the positions of the picture without any other edges.
pub fn balance() -> GalleryEntry {
    let automaton = DagAutomaton::new([Rule::of("", "a", "p"), Rule::of("p", "b", "")])
        .with_ranks(RankedAlphabet::new().with("a", 0, 1).with("b", 1, 0));
    GalleryEntry {
        name: "balance",
        automaton,
        base: Base::Edgeless { boundary: false },
        alphabet: chars("ab"),
        oracle: Oracle::Picture(|p| !p.is_empty() && p.count("a") == p.count("b")),
    }
}

/// The balance automaton on the `coo` encoding of the framed picture. Grid
/// edges carry `g`; every a still sends a driven `p` edge to a b, but now
/// the grid orders the positions, so a driven edge from an a to a b above
/// or to the left of it (weakly) would close a cycle. The rules reading `p′`
/// would let a b point to an a instead; with r(b) = (1, 0) no b vertex has
/// an out-slot, so they never apply.
pub fn balance_coo() -> GalleryEntry {
    let automaton = DagAutomaton::new([
        Rule::of("", "#", "g g"),
        Rule::of("g", "#", "g g"),
        Rule::of("g", "#", "g"),
        Rule::of("g g", "#", "g"),
        Rule::of("g g", "#", ""),
        Rule::of("g g", "a", "g g p"),
        Rule::of("g g p", "b", "g g"),
        Rule::of("g g", "b", "g g p′"),
        Rule::of("g g p′", "a", "g g"),
    ])
    .with_ranks(RankedAlphabet::new().with("a", 0, 1).with("b", 1, 0));
    GalleryEntry {
        name: "balance-coo",
        automaton,
        base: Base::Encoded {
            kind: EncodingKind::Coo,
            boundary: true,
        },
        alphabet: chars("ab"),
        oracle: Oracle::Picture(has_forward_matching),
    }
}

/// The a's can be matched one-to-one with the b's so that no b lies weakly
/// above and to the left of its a.
fn has_forward_matching(p: &Picture) -> bool {
    let cells = |sym: &str| -> Vec<(usize, usize)> {
        (1..=p.rows())
            .flat_map(|r| (1..=p.cols()).map(move |c| (r, c)))
            .filter(|&(r, c)| p.get(r, c).as_str() == sym)
            .collect()
    };
    let (a, b) = (cells("a"), cells("b"));
    if a.len() != b.len() {
        return false;
    }
    fn assign(a: &[(usize, usize)], b: &[(usize, usize)], used: &mut [bool]) -> bool {
        let Some((&(ar, ac), rest)) = a.split_first() else {
            return true;
        };
        for k in 0..b.len() {
            let (br, bc) = b[k];
            if !used[k] && !(br <= ar && bc <= ac) {
                used[k] = true;
                if assign(rest, b, used) {
                    return true;
                }
                used[k] = false;
            }
        }
        false
    }
    assign(&a, &b, &mut vec![false; b.len()])
}

/// A membership test for a picture language.
pub type PictureOracle = fn(&Picture) -> bool;

/// Tessellation automata used as fixtures, with their intended languages.
pub fn ota_fixtures() -> Vec<(&'static str, Ota, PictureOracle)> {
    vec![
        ("universal", universal_ota(), |_| true),
        ("contains-b", contains_b_ota(), |p| p.count("b") > 0),
        ("corners-equal", corners_equal_ota(), |p| {
            !p.is_empty() && p.get(1, 1) == p.get(p.rows(), p.cols())
        }),
    ]
}

/// One final state, every picture accepted.
pub fn universal_ota() -> Ota {
    let mut m = Ota::new("u");
    m.add_final("u");
    for s in ["a", "b"] {
        m.add_transition("u", "u", s, "u");
    }
    m
}

/// State 1 once a b has been seen above or to the left (inclusive).
pub fn contains_b_ota() -> Ota {
    let mut m = Ota::new("0");
    m.add_final("1");
    for (u, l) in [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")] {
        let seen = if u == "1" || l == "1" { "1" } else { "0" };
        m.add_transition(u, l, "a", seen);
        m.add_transition(u, l, "b", "1");
    }
    m
}

/// Every cell carries the top-left symbol x and whether its own symbol
/// equals x; state names are `x` followed by 1 or 0.
pub fn corners_equal_ota() -> Ota {
    let mut m = Ota::new("q0");
    let sigma = ["a", "b"];
    let cells: Vec<String> = sigma
        .iter()
        .flat_map(|x| [format!("{x}0"), format!("{x}1")])
        .collect();
    for x in sigma {
        m.add_final(format!("{x}1"));
    }
    for s in sigma {
        m.add_transition("q0", "q0", s, format!("{s}1"));
    }
    let carried = |q: &str| q[..q.len() - 1].to_owned();
    for s in sigma {
        for c in &cells {
            let x = carried(c);
            let next = format!("{x}{}", u8::from(x == s));
            m.add_transition(c.as_str(), "q0", s, next.clone());
            m.add_transition("q0", c.as_str(), s, next.clone());
            for d in cells.iter().filter(|d| carried(d) == x) {
                m.add_transition(c.as_str(), d.as_str(), s, next.clone());
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(w: &str) -> Input {
        Input::String(chars(w))
    }

    fn pic(rows: &[&str]) -> Input {
        Input::Picture(Picture::from_rows(rows).unwrap())
    }

    #[test]
    fn string_examples() {
        let e = anbn();
        assert!(e.accepts(&s("aabb")));
        assert!(!e.accepts(&s("aab")));
        assert!(!e.accepts(&s("abab")));
        assert!(!e.accepts(&s("")));
        let e = anbncn();
        assert!(e.accepts(&s("abc")));
        assert!(e.accepts(&s("aabbcc")));
        assert!(!e.accepts(&s("abbc")));
    }

    #[test]
    fn dia_examples() {
        let e = dia(&chars("ab"));
        assert!(e.accepts(&pic(&["a"])));
        assert!(e.accepts(&pic(&["ab", "ba"])));
        assert!(!e.accepts(&pic(&["ab", "bb"])));
        assert!(e.accepts(&Input::Picture(Picture::empty())));
    }

    #[test]
    fn balance_examples() {
        let e = balance();
        assert!(e.accepts(&pic(&["ab", "ba"])));
        assert!(!e.accepts(&pic(&["aa", "ab"])));
        let c = balance_coo();
        assert!(c.accepts(&pic(&["ab"])));
        assert!(c.accepts(&pic(&["aa", "bb"])));
        // The only b sits left of the only a.
        assert!(!c.accepts(&pic(&["ba"])));
        // Each a has a b weakly above-left of it in one of the two pairings.
        assert!(!c.accepts(&pic(&["ab", "ba"])));
        assert!(e.accepts(&pic(&["ba"])));
    }

    #[test]
    fn determinism() {
        for name in ["anbn", "anbncn", "dia", "balance"] {
            assert!(gallery(name).unwrap().automaton.is_top_down_deterministic(), "{name}");
        }
    }

    #[test]
    fn fixtures_match_their_languages() {
        for (name, m, lang) in ota_fixtures() {
            for p in enumerate_pictures(&chars("ab"), 2, 3) {
                assert_eq!(m.accepts(&p), lang(&p), "{name} on {p:?}");
            }
        }
        assert!(corners_equal_ota().is_deterministic());
    }

    #[test]
    fn unknown_name() {
        assert!(gallery("stripes").is_err());
        assert_eq!(all().len(), NAMES.len());
    }
}
