//! Exhaustive agreement checks between a DAG automaton on encoded pictures
//! and a picture automaton.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::automaton::{accepts, accepts_driven, DagAutomaton};
use crate::encoding::{encode, EncodingKind};
use crate::nfa::Nfa;
use crate::ota::Ota;
use crate::picture::{enumerate_pictures, shapes, Picture};
use crate::scan::{scan_accepts, Strategy};
use crate::symbol::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivError {
    #[error("the frame symbol # cannot be part of the picture alphabet")]
    BoundaryInAlphabet,
    #[error("{machine} does not know the symbol(s) {}", .missing.join(", "))]
    AlphabetMismatch {
        machine: &'static str,
        missing: Vec<String>,
    },
}

/// Outcome of comparing two acceptance functions on a list of inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivReport<T> {
    pub checked: usize,
    pub agreements: usize,
    /// The first input, in enumeration order, on which the two sides
    /// differ, with its index and both verdicts.
    pub first_counterexample: Option<Counterexample<T>>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample<T> {
    pub index: usize,
    pub input: T,
    pub left: bool,
    pub right: bool,
}

impl<T> EquivReport<T> {
    pub fn is_equivalent(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

impl<T: fmt::Display> fmt::Display for EquivReport<T> {
    /// The summary without timing, so that it is reproducible.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "checked {}, agreed {}", self.checked, self.agreements)?;
        if let Some(c) = &self.first_counterexample {
            write!(
                f,
                "; first counterexample #{}: {} (left {}, right {})",
                c.index, c.input, c.left, c.right
            )?;
        }
        Ok(())
    }
}

/// Evaluates `verdicts` on every input in parallel. The result does not
/// depend on scheduling.
pub fn compare<T, F>(inputs: &[T], verdicts: F) -> EquivReport<T>
where
    T: Clone + Sync,
    F: Fn(&T) -> (bool, bool) + Sync,
{
    let started = Instant::now();
    let results: Vec<(bool, bool)> = inputs.par_iter().map(&verdicts).collect();
    let agreements = results.iter().filter(|(l, r)| l == r).count();
    let first_counterexample = results
        .iter()
        .position(|(l, r)| l != r)
        .map(|index| Counterexample {
            index,
            input: inputs[index].clone(),
            left: results[index].0,
            right: results[index].1,
        });
    EquivReport {
        checked: inputs.len(),
        agreements,
        first_counterexample,
        elapsed: started.elapsed(),
    }
}

/// The picture-automaton side of an equivalence check.
#[derive(Clone, Debug)]
pub enum PictureMachine {
    Ota(Ota),
    /// A finite automaton over `Σ ∪ {#}` reading framed pictures in the
    /// given order.
    Scanner(Nfa, Strategy),
}

impl PictureMachine {
    pub fn accepts(&self, p: &Picture) -> bool {
        match self {
            PictureMachine::Ota(m) => m.accepts(p),
            PictureMachine::Scanner(m, s) => scan_accepts(m, p, *s),
        }
    }

    fn alphabet(&self) -> &BTreeSet<Symbol> {
        match self {
            PictureMachine::Ota(m) => m.alphabet(),
            PictureMachine::Scanner(m, _) => m.alphabet(),
        }
    }
}

/// Which pictures to check.
#[derive(Clone, Debug)]
pub struct Domain {
    pub alphabet: Vec<Symbol>,
    pub max_rows: usize,
    pub max_cols: usize,
    /// Draw this many pictures at random (with the seed) instead of
    /// enumerating all of them.
    pub sample: Option<(usize, u64)>,
}

impl Domain {
    pub fn exhaustive(alphabet: Vec<Symbol>, max_rows: usize, max_cols: usize) -> Self {
        Domain {
            alphabet,
            max_rows,
            max_cols,
            sample: None,
        }
    }

    pub fn pictures(&self) -> Vec<Picture> {
        match self.sample {
            None => enumerate_pictures(&self.alphabet, self.max_rows, self.max_cols).collect(),
            Some((n, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let all_shapes = shapes(self.max_rows, self.max_cols);
                (0..n)
                    .map(|_| {
                        let (m, k) = all_shapes[rng.gen_range(0..all_shapes.len())];
                        let cells = (0..m * k)
                            .map(|_| self.alphabet[rng.gen_range(0..self.alphabet.len())].clone())
                            .collect();
                        Picture::new(m, k, cells).expect("shape matches cell count")
                    })
                    .collect()
            }
        }
    }
}

/// How the DAG side sees a picture.
#[derive(Clone, Copy, Debug)]
pub struct EncodingRecipe {
    pub kind: EncodingKind,
    pub boundary: bool,
    /// Accept only connected encodings.
    pub connected: bool,
}

/// Compares `nda` on encoded pictures with `other` on every picture of the
/// domain. An automaton with ranks runs under the input-driven encoding on
/// top of `recipe`. The left verdict is the DAG automaton's.
pub fn check_equiv(
    nda: &DagAutomaton,
    other: &PictureMachine,
    recipe: EncodingRecipe,
    domain: &Domain,
) -> Result<EquivReport<Picture>, EquivError> {
    if domain.alphabet.iter().any(Symbol::is_boundary) {
        return Err(EquivError::BoundaryInAlphabet);
    }
    for (machine, known) in [("DAG automaton", nda.alphabet()), ("picture automaton", other.alphabet())] {
        let missing: Vec<String> = domain
            .alphabet
            .iter()
            .filter(|s| !known.contains(*s))
            .map(|s| s.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(EquivError::AlphabetMismatch { machine, missing });
        }
    }
    let pictures = domain.pictures();
    Ok(compare(&pictures, |p| {
        let d = if recipe.boundary {
            encode(&p.boundary(), recipe.kind)
        } else {
            encode(p, recipe.kind)
        };
        let left = if nda.has_ranks() {
            (!recipe.connected || d.is_connected()) && accepts_driven(nda, &d, nda.ranks())
        } else {
            accepts(nda, &d, recipe.connected)
        };
        (left, other.accepts(p))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Rule;
    use crate::gallery::contains_b_ota;
    use crate::symbol::chars;
    use crate::translate::{ota_to_nda, Construction};

    const COO: EncodingRecipe = EncodingRecipe {
        kind: EncodingKind::Coo,
        boundary: true,
        connected: true,
    };

    #[test]
    fn trivially_empty_sides_agree() {
        let nda = DagAutomaton::new([]).with_alphabet(chars("ab"));
        let mut m = Ota::new("q");
        m.add_symbol("a");
        m.add_symbol("b");
        let r = check_equiv(&nda, &PictureMachine::Ota(m), COO, &Domain::exhaustive(chars("ab"), 2, 2)).unwrap();
        assert_eq!(r.checked, 27);
        assert!(r.is_equivalent());
    }

    #[test]
    fn corrupted_rule_gives_first_counterexample() {
        let m = contains_b_ota();
        let mut rules: Vec<Rule> = ota_to_nda(&m, Construction::Complete).rules().to_vec();
        // Drop the rules for a b in the last cell.
        rules.retain(|r| !(r.label.as_str() == "b" && r.tail.iter().all(|q| q.as_str() == "qf")));
        let broken = DagAutomaton::new(rules);
        let domain = Domain::exhaustive(chars("ab"), 3, 3);
        let r = check_equiv(&broken, &PictureMachine::Ota(m), COO, &domain).unwrap();
        let c = r.first_counterexample.unwrap();
        assert_eq!(c.input, Picture::from_rows(&["b"]).unwrap());
        assert_eq!(c.index, 2);
        assert!(!c.left && c.right);
    }

    #[test]
    fn alphabet_errors() {
        let nda = DagAutomaton::new([Rule::of("", "a", "")]);
        let m = PictureMachine::Ota(contains_b_ota());
        let e = check_equiv(&nda, &m, COO, &Domain::exhaustive(chars("ab"), 1, 1)).unwrap_err();
        assert!(matches!(e, EquivError::AlphabetMismatch { machine: "DAG automaton", .. }));
        let e = check_equiv(&nda, &m, COO, &Domain::exhaustive(vec![Symbol::boundary()], 1, 1)).unwrap_err();
        assert_eq!(e, EquivError::BoundaryInAlphabet);
    }

    #[test]
    fn sampling_is_reproducible() {
        let d = Domain {
            sample: Some((50, 9)),
            ..Domain::exhaustive(chars("ab"), 4, 4)
        };
        assert_eq!(d.pictures(), d.pictures());
        assert_eq!(d.pictures().len(), 50);
    }
}
