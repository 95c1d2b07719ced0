//! Exact combinatorial engines shared by the solvers.

pub mod assignment;
pub mod blossom;
pub mod flow;
pub mod matching;
pub mod matroid;

pub use assignment::min_cost_assignment;
pub use blossom::{max_weight_matching, max_weight_max_cardinality_matching, WeightedMatchingEngine};
pub use flow::{max_flow_min_cut, FlowNetwork, MinCut};
pub use matching::{is_matching, max_cardinality_matching};
pub use matroid::{minimum_spanning_tree, rainbow_mst, weighted_matroid_intersection, CommonIndependent, MatroidPair};
