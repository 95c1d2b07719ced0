//! Solution discovery via token reconfiguration on graphs.
//!
//! Given a start configuration of tokens on vertices or edges and a move
//! budget, decide whether tokens can be moved into a feasible solution of a
//! base problem (spanning tree, shortest path, matching, vertex or edge cut)
//! under the sliding, jumping or addition/removal model, and produce a move
//! schedule when they can.

pub mod color_coding;
pub mod cut_solver;
pub mod engines;
pub mod error;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod io;
pub mod md_solver;
pub mod oracle;
pub mod realize;
pub mod solve;
pub mod spd_solver;
pub mod std_solver;

pub use error::{Error, Result};
pub use graph::{Coloring, ElementKind, Graph, WeightMap};
pub use instance::{Configuration, DiscoveryInstance, Model, Move, Problem, Schedule, SolveResult};
