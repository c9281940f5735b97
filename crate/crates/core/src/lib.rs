//! Picture languages recognized by DAG automata.
//!
//! Pictures are encoded as directed acyclic graphs, either by drawing edges
//! that depend only on the picture's dimensions ([`encoding::encode`]) or by
//! adding edges dictated by a ranked alphabet
//! ([`encoding::driven_instances`]). A DAG automaton accepts a graph if its
//! edges can be labeled with states so that every vertex matches a rule.
//!
//! Besides the DAG side, the crate has finite automata with scanning
//! strategies, tessellation automata, constructions between the three
//! models, and exhaustive agreement checks over all small pictures.

pub mod automaton;
pub mod dot;
pub mod encoding;
pub mod equiv;
pub mod format;
pub mod gallery;
pub mod graph;
pub mod nfa;
pub mod ota;
pub mod picture;
pub mod scan;
pub mod symbol;
pub mod translate;

pub use automaton::{accepts, accepts_driven, find_run, DagAutomaton, Rule, Run};
pub use encoding::{encode, reencode, EncodingKind, RankedAlphabet};
pub use graph::{string_dag, Dag, DagBuilder, EdgeId, VertexId};
pub use nfa::Nfa;
pub use ota::Ota;
pub use picture::{BoundaryPicture, Picture};
pub use symbol::{State, Symbol};
