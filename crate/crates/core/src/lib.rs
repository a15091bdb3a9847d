//! Construction and verification of abelian Cayley graphs with provably
//! large cop number.
//!
//! The crate builds the generator-set families whose Cayley graphs are
//! K_{2,t}-free with many generators, verifies those structural properties
//! exhaustively, derives cop-number bound certificates from them, and
//! decides small pursuit games exactly with a backward-induction solver.
//!
//! Module map:
//! - [`groups`]: finite abelian groups as explicit products, GF(p^k)
//!   arithmetic.
//! - [`graph`] / [`cayley`]: plain graphs and materialized Cayley graphs,
//!   plus the edge-list and graph6 exchange formats.
//! - [`constructions`]: the residue, norm-one, parabola, and greedy
//!   generator-set constructions.
//! - [`freeness`]: triangle / K_{2,t} / non-trivial 4-cycle verifiers with
//!   re-validatable witnesses.
//! - [`copgame`]: the exact k-cop solver, evasion moves, strategies, and
//!   match simulation.
//! - [`certify`]: bound rules and the certificate format.

pub mod cayley;
pub mod certify;
pub mod constructions;
pub mod copgame;
pub mod error;
pub mod freeness;
pub mod graph;
pub mod groups;

pub use cayley::{CayleyGraph, GeneratorSet, VERTEX_CAP};
pub use certify::{certify, Bound, BoundRule, CopCertificate, GraphMeta, SolverEvidence};
pub use copgame::{
    dominated, evading_move, exact_cop_number, k_cop_win, simulate, CopNumberResult, DominatedSet,
    GameState, GameVerdict, SolveBudget, SolveOutcome, SolvedGame, Transcript,
};
pub use error::{Error, Result};
pub use freeness::FreenessReport;
pub use graph::Graph;
pub use groups::{AbelianGroup, FiniteField, GroupElement};
