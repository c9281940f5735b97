//! Constructions between finite automata, DAG automata and tessellation
//! automata.
//!
//! Each construction has a [`Construction::Literal`] variant that builds the
//! rule set exactly as the textbook construction states it and a default
//! [`Construction::Complete`] variant that adds what the literal one misses
//! (single-vertex and empty inputs, frame consistency). The literal variants
//! are kept for comparison; tests show where they go wrong.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::automaton::{find_run, DagAutomaton, Rule};
use crate::encoding::{encode, EncodingKind};
use crate::nfa::Nfa;
use crate::ota::Ota;
use crate::picture::Picture;
use crate::symbol::{FreshNames, State, Symbol};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Construction {
    #[default]
    Complete,
    Literal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranslateError {
    #[error("automaton is not in boundary normal form for qz = {qz}, qf = {qf}: {}", describe(.unexpected, .missing))]
    NotInNormalForm {
        qz: State,
        qf: State,
        unexpected: Vec<Rule>,
        missing: Vec<Rule>,
    },
    #[error("cannot infer the frame states: no rule of the form (λ → # → q q)")]
    NoFrameStates,
}

fn describe(unexpected: &[Rule], missing: &[Rule]) -> String {
    let list = |rs: &[Rule]| rs.iter().map(Rule::to_string).collect::<Vec<_>>().join(", ");
    match (unexpected.is_empty(), missing.is_empty()) {
        (false, false) => format!("unexpected {}; missing {}", list(unexpected), list(missing)),
        (false, true) => format!("unexpected {}", list(unexpected)),
        _ => format!("missing {}", list(missing)),
    }
}

/// Turns an NFA into a DAG automaton over string DAGs.
///
/// The literal construction has no rule for single-vertex strings and does
/// not accept the empty graph; the complete one adds `(λ → σ → λ)` whenever
/// σ leads from a start state to a final one, and accepts the empty graph
/// iff a start state is final.
pub fn nfa_to_dag(a: &Nfa, construction: Construction) -> DagAutomaton {
    let mut rules = Vec::new();
    for (p, s, q) in a.transitions() {
        rules.push(Rule::new(vec![p.clone()], s.clone(), vec![q.clone()]));
        if a.start().contains(p) {
            rules.push(Rule::new(vec![], s.clone(), vec![q.clone()]));
        }
        if a.finals().contains(q) {
            rules.push(Rule::new(vec![p.clone()], s.clone(), vec![]));
            if construction == Construction::Complete && a.start().contains(p) {
                rules.push(Rule::new(vec![], s.clone(), vec![]));
            }
        }
    }
    let mut d = DagAutomaton::new(rules).with_alphabet(a.alphabet().iter().cloned());
    for q in a.states() {
        d.add_state(q.clone());
    }
    if construction == Construction::Complete {
        d.set_accepts_empty_graph(!a.start().is_disjoint(a.finals()));
    }
    d
}

/// Turns a DAG automaton into an NFA accepting the strings whose string
/// DAGs it accepts. Rules with more than one head or tail state never apply
/// to a string DAG and are skipped. The complete construction adds
/// `q0 -σ-> qf` for every `(λ → σ → λ)` and makes `q0` final iff the empty
/// graph is accepted.
pub fn dag_to_nfa(a: &DagAutomaton, construction: Construction) -> Nfa {
    let mut fresh = FreshNames::new(a.states().iter().map(State::as_str));
    let q0 = State::from(fresh.fresh("q0"));
    let qf = State::from(fresh.fresh("qf"));
    let mut m = Nfa::new();
    m.add_start(q0.clone());
    m.add_final(qf.clone());
    for s in a.alphabet() {
        m.add_symbol(s.clone());
    }
    for q in a.states() {
        m.add_state(q.clone());
    }
    for r in a.rules() {
        let from = match r.head.as_slice() {
            [] => &q0,
            [p] => p,
            _ => continue,
        };
        let to = match r.tail.as_slice() {
            [] => &qf,
            [q] => q,
            _ => continue,
        };
        if r.head.is_empty() && r.tail.is_empty() && construction == Construction::Literal {
            continue;
        }
        m.add_transition(from.clone(), r.label.clone(), to.clone());
    }
    if construction == Construction::Complete && a.accepts_empty_graph() {
        m.add_final(q0);
    }
    m
}

/// The frame states of an automaton on `coo`-encoded framed pictures:
/// edges leaving the top and left border carry `qz`, all other edges
/// incident with the frame carry `qf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryNormalForm {
    pub qz: State,
    pub qf: State,
}

impl BoundaryNormalForm {
    pub fn new(qz: impl Into<State>, qf: impl Into<State>) -> Self {
        BoundaryNormalForm {
            qz: qz.into(),
            qf: qf.into(),
        }
    }

    /// The `#` rules every nonempty picture needs, one per kind of frame
    /// position: top-left corner; top row and left column; top-right and
    /// bottom-left corners; bottom row; right column below its first cell;
    /// bottom-right corner; first cell of the right column.
    pub fn rules(&self) -> Vec<Rule> {
        let (z, f) = (&self.qz, &self.qf);
        let r = |h: &[&State], t: &[&State]| {
            Rule::new(
                h.iter().map(|&q| q.clone()).collect(),
                Symbol::boundary(),
                t.iter().map(|&q| q.clone()).collect(),
            )
        };
        vec![
            r(&[], &[z, z]),
            r(&[z], &[z, z]),
            r(&[z], &[z]),
            r(&[z, f], &[f]),
            r(&[f, f], &[f]),
            r(&[f, f], &[]),
            r(&[f, z], &[f]),
        ]
    }

    /// The rule for the bottom-right corner of the empty picture's frame.
    pub fn empty_picture_rule(&self) -> Rule {
        Rule::new(vec![self.qz.clone(), self.qz.clone()], Symbol::boundary(), vec![])
    }

    /// Reads `qz` from `(λ → # → qz qz)` and `qf` from `(qz qf → # → qf)`,
    /// falling back to `qf = qz`.
    pub fn infer(a: &DagAutomaton) -> Result<Self, TranslateError> {
        let hash = Symbol::boundary();
        let qz = a
            .rules()
            .iter()
            .find_map(|r| match (r.head.as_slice(), r.tail.as_slice()) {
                ([], [x, y]) if r.label == hash && x == y => Some(x.clone()),
                _ => None,
            })
            .ok_or(TranslateError::NoFrameStates)?;
        let qf = a
            .rules()
            .iter()
            .find_map(|r| match (r.head.as_slice(), r.tail.as_slice()) {
                ([x, y], [t]) if r.label == hash && *x == qz && y == t && *y != qz => Some(y.clone()),
                _ => None,
            })
            .unwrap_or_else(|| qz.clone());
        Ok(BoundaryNormalForm { qz, qf })
    }

    /// Checks that the `#` rules of `a` are exactly [`Self::rules`], plus
    /// optionally [`Self::empty_picture_rule`].
    pub fn validate(&self, a: &DagAutomaton) -> Result<(), TranslateError> {
        let required: BTreeSet<Rule> = self.rules().into_iter().collect();
        let mut allowed = required.clone();
        allowed.insert(self.empty_picture_rule());
        let present: BTreeSet<&Rule> = a.rules().iter().filter(|r| r.label.is_boundary()).collect();
        let unexpected: Vec<Rule> = present
            .iter()
            .filter(|r| !allowed.contains(**r))
            .map(|&r| r.clone())
            .collect();
        let missing: Vec<Rule> = required
            .into_iter()
            .filter(|r| !present.contains(r))
            .collect();
        if unexpected.is_empty() && missing.is_empty() {
            Ok(())
        } else {
            Err(TranslateError::NotInNormalForm {
                qz: self.qz.clone(),
                qf: self.qf.clone(),
                unexpected,
                missing,
            })
        }
    }
}

/// Simulates a tessellation automaton by a DAG automaton on `coo`-encoded
/// framed pictures.
///
/// The complete construction emits rules in boundary normal form with fresh
/// frame states, so that no interior cell can pose as frame. Every
/// transition `q ∈ δ(up, left, σ)` becomes `(left up → σ → β)` for the tails
/// `q q`, `q qf` (right neighbor is frame), `qf q` (lower neighbor is
/// frame) and, if `q` is final, `qf qf` (last cell). Where `up` or `left`
/// is the initial state, `qz` may stand in for it.
///
/// The literal construction uses the initial state on the frame, labels the
/// right and bottom frame with it as well, and guesses only the last cell.
pub fn ota_to_nda(m: &Ota, construction: Construction) -> DagAutomaton {
    match construction {
        Construction::Complete => ota_to_nda_complete(m),
        Construction::Literal => ota_to_nda_literal(m),
    }
}

fn ota_to_nda_complete(m: &Ota) -> DagAutomaton {
    let mut fresh = FreshNames::new(m.states().iter().map(State::as_str));
    let nf = BoundaryNormalForm::new(fresh.fresh("qz"), fresh.fresh("qf"));
    let (qz, qf) = (&nf.qz, &nf.qf);
    let mut rules = nf.rules();
    if m.finals().contains(m.start()) {
        rules.push(nf.empty_picture_rule());
    }
    let stand_ins = |q: &State| {
        let mut v = vec![q.clone()];
        if q == m.start() {
            v.push(qz.clone());
        }
        v
    };
    for (up, left, s, q) in m.transitions() {
        let mut tails = vec![
            vec![q.clone(), q.clone()],
            vec![q.clone(), qf.clone()],
            vec![qf.clone(), q.clone()],
        ];
        if m.finals().contains(q) {
            tails.push(vec![qf.clone(), qf.clone()]);
        }
        for l in stand_ins(left) {
            for u in stand_ins(up) {
                for t in &tails {
                    rules.push(Rule::new(vec![l.clone(), u.clone()], s.clone(), t.clone()));
                }
            }
        }
    }
    let mut a = DagAutomaton::new(rules).with_alphabet(m.alphabet().iter().cloned());
    for q in m.states() {
        a.add_state(q.clone());
    }
    a
}

fn ota_to_nda_literal(m: &Ota) -> DagAutomaton {
    let mut fresh = FreshNames::new(m.states().iter().map(State::as_str));
    let qf = State::from(fresh.fresh("qf"));
    let qz = m.start().clone();
    let hash = Symbol::boundary;
    let mut rules = vec![
        Rule::new(vec![], hash(), vec![qz.clone(), qz.clone()]),
        Rule::new(vec![qz.clone()], hash(), vec![qz.clone(), qz.clone()]),
        Rule::new(vec![qz.clone()], hash(), vec![qz.clone()]),
    ];
    for (up, left, s, q) in m.transitions() {
        let head = vec![left.clone(), up.clone()];
        rules.push(Rule::new(head.clone(), s.clone(), vec![q.clone(), q.clone()]));
        if m.finals().contains(q) {
            rules.push(Rule::new(head, s.clone(), vec![qf.clone(), qf.clone()]));
        }
    }
    for q in m.states() {
        rules.push(Rule::new(vec![qz.clone(), q.clone()], hash(), vec![qz.clone()]));
        rules.push(Rule::new(vec![q.clone(), qz.clone()], hash(), vec![qz.clone()]));
    }
    rules.push(Rule::new(vec![qz.clone(), qf.clone()], hash(), vec![qf.clone()]));
    rules.push(Rule::new(vec![qf.clone(), qz.clone()], hash(), vec![qf.clone()]));
    rules.push(Rule::new(vec![qf.clone(), qf.clone()], hash(), vec![]));
    if m.finals().contains(m.start()) {
        rules.push(Rule::new(vec![qz.clone(), qz.clone()], hash(), vec![]));
    }
    DagAutomaton::new(rules).with_alphabet(m.alphabet().iter().cloned())
}

/// A state of the simulating tessellation automaton.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum SimState {
    Start,
    /// States of the down and right out-edges, and whether every cell
    /// above (resp. to the left) up to and including this one sends `qf`
    /// to the right (resp. down).
    Cell {
        down: u32,
        right: u32,
        column_ok: bool,
        row_ok: bool,
    },
}

/// Simulates a DAG automaton in boundary normal form by a tessellation
/// automaton.
///
/// A cell's state records the two states of its vertex's out-edges; the
/// transition for a cell applies the rules whose head is the right-edge
/// state of the left neighbor followed by the down-edge state of the upper
/// neighbor. The complete construction also tracks, along the last row and
/// column, whether every edge into the frame carries `qf`, since the frame
/// rules of a normal form accept only `qf` there. The literal construction
/// omits this and accepts as soon as the last cell sends `qf` both ways.
pub fn nda_to_ota(
    a: &DagAutomaton,
    nf: &BoundaryNormalForm,
    construction: Construction,
) -> Result<Ota, TranslateError> {
    nf.validate(a)?;
    let states: Vec<State> = a
        .states()
        .iter()
        .cloned()
        .chain([nf.qz.clone(), nf.qf.clone()])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let id: HashMap<&State, u32> = states.iter().zip(0..).collect();
    let (qz, qf) = (id[&nf.qz], id[&nf.qf]);
    let sigma: Vec<&Symbol> = a.alphabet().iter().filter(|s| !s.is_boundary()).collect();
    let mut by_head: HashMap<(u32, u32, &Symbol), Vec<(u32, u32)>> = HashMap::new();
    for r in a.rules() {
        if let ([l, u], [d, rt]) = (r.head.as_slice(), r.tail.as_slice()) {
            if !r.label.is_boundary() {
                by_head
                    .entry((id[l], id[u], &r.label))
                    .or_default()
                    .push((id[d], id[rt]));
            }
        }
    }
    let literal = construction == Construction::Literal;
    let start = if literal {
        SimState::Cell {
            down: qz,
            right: qz,
            column_ok: true,
            row_ok: true,
        }
    } else {
        SimState::Start
    };
    let components = |s: &SimState| match *s {
        SimState::Start => (qz, qz, true, true),
        SimState::Cell {
            down,
            right,
            column_ok,
            row_ok,
        } => (down, right, column_ok, row_ok),
    };
    let step = |up: &SimState, left: &SimState, sym: &Symbol| -> Vec<SimState> {
        let (u_down, _, u_col, _) = components(up);
        let (_, l_right, _, l_row) = components(left);
        by_head
            .get(&(l_right, u_down, sym))
            .into_iter()
            .flatten()
            .map(|&(down, right)| SimState::Cell {
                down,
                right,
                column_ok: !literal && right == qf && u_col,
                row_ok: !literal && down == qf && l_row,
            })
            .collect()
    };

    // Reachable states, in discovery order.
    let mut found: Vec<SimState> = vec![start.clone()];
    let mut index: HashMap<SimState, usize> = HashMap::from([(start.clone(), 0)]);
    let mut delta: Vec<(usize, usize, &Symbol, usize)> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(k) = queue.pop_front() {
        for j in 0..=k {
            let pairs = if j == k { vec![(k, k)] } else { vec![(k, j), (j, k)] };
            for (u, l) in pairs {
                for &s in &sigma {
                    for t in step(&found[u], &found[l], s) {
                        let next = found.len();
                        let t_id = *index.entry(t.clone()).or_insert_with(|| {
                            found.push(t);
                            queue.push_back(next);
                            next
                        });
                        delta.push((u, l, s, t_id));
                    }
                }
            }
        }
    }

    let names = sim_names(&found, &states);
    let mut m = Ota::new(names[0].clone());
    for s in &sigma {
        m.add_symbol((*s).clone());
    }
    for (u, l, s, t) in delta {
        m.add_transition(names[u].clone(), names[l].clone(), s.clone(), names[t].clone());
    }
    for (k, s) in found.iter().enumerate() {
        let accepting = match *s {
            SimState::Start => false,
            SimState::Cell {
                down,
                right,
                column_ok,
                row_ok,
            } => down == qf && right == qf && (literal || (column_ok && row_ok)),
        };
        if accepting {
            m.add_final(names[k].clone());
        }
    }
    if find_run(a, &encode(&Picture::empty().boundary(), EncodingKind::Coo)).is_some() {
        m.add_final(names[0].clone());
    }
    Ok(m)
}

fn sim_names(found: &[SimState], states: &[State]) -> Vec<State> {
    let name = |s: &SimState| match *s {
        SimState::Start => "start".to_owned(),
        SimState::Cell {
            down,
            right,
            column_ok,
            row_ok,
        } => format!(
            "{}|{}|{}{}",
            states[down as usize],
            states[right as usize],
            u8::from(column_ok),
            u8::from(row_ok)
        ),
    };
    let names: Vec<String> = found.iter().map(name).collect();
    let distinct: BTreeSet<&String> = names.iter().collect();
    if distinct.len() == names.len() {
        names.into_iter().map(State::from).collect()
    } else {
        (0..found.len()).map(|k| State::from(format!("s{k}"))).collect()
    }
}
