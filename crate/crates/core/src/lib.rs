//! Exact two-layer crossing minimisation.
//!
//! Given a bipartite graph, decide whether its vertices can be ordered on two
//! parallel lines so that straight-line edges cross at most `k` times, and
//! find the minimum. Candidate layouts are enumerated from a spanning
//! structure of each side (see [`fpt`]), after merging sibling leaves into
//! weighted edges.

pub mod drawing;
pub mod error;
pub mod fpt;
pub mod graph;
pub mod random;
pub mod solver;

pub use drawing::{validate_layout, CrossingCounter, Drawing, Layout};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Component, Edge, SiblingMerge, SiblingPair, Side, VertexId};
pub use solver::{
    bcr_bruteforce, bcr_component, bcr_decide, bcr_exact, census, Census, ComponentSolution,
    Decision, Method, SolveReport, SolveStats, Solver, SolverConfig, DEFAULT_K_MAX,
};
