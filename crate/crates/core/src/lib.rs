//! Solvers for the minimum L-bounded cut problem.
//!
//! Given an undirected graph with terminals `s` and `t` and a hop bound `L`,
//! an L-bounded cut is a set of edges (or vertices) whose removal leaves no
//! `s`-`t` path with `L` or fewer edges. This crate provides:
//!
//! - an exact solver: prune to the vertices lying on short `s`-`t` paths,
//!   encode as a minimum-cost constraint satisfaction problem and solve it
//!   by dynamic programming over a tree decomposition ([`fpt`], [`csp`], [`dp`]);
//! - a width-ratio approximation for vertex cuts driven by a rooted tree
//!   decomposition ([`approx`]);
//! - brute-force oracles used to certify both ([`oracle`]);
//! - text formats, generators and a benchmark harness ([`io`], [`cli`]).
//!
//! Vertex ids are dense `0..n`. File formats use 1-indexed ids and are
//! translated in [`io`].

pub mod approx;
pub mod cli;
pub mod csp;
pub mod dp;
mod error;
pub mod flow;
pub mod fpt;
pub mod graph;
pub mod instance;
pub mod io;
pub mod oracle;
pub mod treedec;

pub use approx::{approx_auto, approx_vertex_cut, ApproxResult, TraceEvent};
pub use csp::{Assignment, Constraint, CspInstance};
pub use dp::{solve_exact_cut, solve_min_csp, CspSolution, DpConfig};
pub use error::{Error, Result};
pub use flow::{min_edge_cut, min_vertex_cut};
pub use fpt::{prune_to_relevant, solve_fpt, FptResult, Relevant};
pub use graph::{bfs_distances, DistanceVector, Edge, Graph, Vertex};
pub use instance::{remove, verify_cut, CutMembers, CutSet, Instance, Variant, Verdict};
pub use treedec::{build_heuristic, Strategy, TreeDecomposition};
