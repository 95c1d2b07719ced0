//! Configurations, discovery instances, schedules and results.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{bfs_distances, Coloring, ElementKind, Graph, WeightMap};

/// A set of token positions of one kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    kind: ElementKind,
    // sorted, distinct
    elements: Vec<usize>,
}

impl Configuration {
    /// Fails on repeated elements.
    pub fn new(kind: ElementKind, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return input("configuration holds two tokens on one element");
        }
        Ok(Configuration { kind, elements })
    }

    pub fn from_set(kind: ElementKind, set: &BTreeSet<usize>) -> Self {
        Configuration { kind, elements: set.iter().copied().collect() }
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        let cap = g.element_count(self.kind);
        match self.elements.last() {
            Some(&x) if x >= cap => match self.kind {
                ElementKind::Vertex => Err(Error::InvalidVertex(x)),
                ElementKind::Edge => Err(Error::InvalidEdge(x)),
            },
            _ => Ok(()),
        }
    }
}

/// Base problem whose solution is to be discovered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    SpanningTree,
    ShortestPath { s: usize, t: usize },
    Matching,
    VertexCut { s: usize, t: usize },
    EdgeCut { s: usize, t: usize },
}

impl Problem {
    pub fn kind(&self) -> ElementKind {
        match self {
            Problem::ShortestPath { .. } | Problem::VertexCut { .. } => ElementKind::Vertex,
            _ => ElementKind::Edge,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Problem::SpanningTree => "spanning_tree",
            Problem::ShortestPath { .. } => "shortest_path",
            Problem::Matching => "matching",
            Problem::VertexCut { .. } => "vertex_cut",
            Problem::EdgeCut { .. } => "edge_cut",
        }
    }

    pub fn terminals(&self) -> Option<(usize, usize)> {
        match *self {
            Problem::ShortestPath { s, t } | Problem::VertexCut { s, t } | Problem::EdgeCut { s, t } => {
                Some((s, t))
            }
            _ => None,
        }
    }

    pub fn is_cut(&self) -> bool {
        matches!(self, Problem::VertexCut { .. } | Problem::EdgeCut { .. })
    }
}

/// Token model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Sliding,
    Jumping,
    AddRemove,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Sliding => "sliding",
            Model::Jumping => "jumping",
            Model::AddRemove => "add_remove",
        }
    }
}

/// Graph, base problem, token model, start configuration and budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveryInstance {
    graph: Graph,
    problem: Problem,
    model: Model,
    start: Configuration,
    budget: usize,
    relaxed: bool,
    colors: Option<Coloring>,
    weights: Option<WeightMap>,
}

impl DiscoveryInstance {
    pub fn new(
        graph: Graph,
        problem: Problem,
        model: Model,
        start: Configuration,
        budget: usize,
    ) -> Result<Self> {
        if start.kind() != problem.kind() {
            return Err(Error::KindMismatch);
        }
        start.check_for(&graph)?;
        let n = graph.vertex_count();
        match problem {
            Problem::SpanningTree => {
                if start.len() + 1 != n.max(1) {
                    return input(format!(
                        "spanning tree needs {} tokens, start has {}",
                        n.saturating_sub(1),
                        start.len()
                    ));
                }
            }
            Problem::ShortestPath { s, t } => {
                graph.check_vertex(t)?;
                let d = bfs_distances(&graph, s)?[t].ok_or(Error::NoPath { s, t })?;
                if start.len() != d + 1 {
                    return input(format!(
                        "shortest path needs dist(s,t)+1 = {} tokens, start has {}",
                        d + 1,
                        start.len()
                    ));
                }
            }
            Problem::VertexCut { s, t } | Problem::EdgeCut { s, t } => {
                graph.check_vertex(s)?;
                graph.check_vertex(t)?;
                if s == t {
                    return input("cut terminals must differ");
                }
            }
            Problem::Matching => {}
        }
        Ok(DiscoveryInstance {
            graph,
            problem,
            model,
            start,
            budget,
            relaxed: false,
            colors: None,
            weights: None,
        })
    }

    /// Relaxed addition/removal: the final solution may have any size.
    pub fn with_relaxed(mut self, relaxed: bool) -> Result<Self> {
        if relaxed && self.model != Model::AddRemove {
            return input("the relaxed flag applies to the add_remove model only");
        }
        self.relaxed = relaxed;
        Ok(self)
    }

    pub fn with_colors(mut self, colors: Coloring) -> Result<Self> {
        colors.check_for(&self.graph)?;
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn with_weights(mut self, weights: WeightMap) -> Result<Self> {
        if weights.len() != self.graph.element_count(self.problem.kind()) {
            return input("weight map does not cover every element");
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_model(mut self, model: Model) -> Self {
        self.model = model;
        if model != Model::AddRemove {
            self.relaxed = false;
        }
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn problem(&self) -> Problem {
        self.problem
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn start(&self) -> &Configuration {
        &self.start
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn relaxed(&self) -> bool {
        self.relaxed
    }

    pub fn colors(&self) -> Option<&Coloring> {
        self.colors.as_ref()
    }

    pub fn weights(&self) -> Option<&WeightMap> {
        self.weights.as_ref()
    }

    pub fn kind(&self) -> ElementKind {
        self.problem.kind()
    }

    pub fn k(&self) -> usize {
        self.start.len()
    }
}

/// Clamp the budget to the largest value that can matter in the model.
pub fn normalize_budget(inst: &DiscoveryInstance) -> DiscoveryInstance {
    let g = inst.graph();
    let cap = match inst.model() {
        Model::Sliding => inst.k() * g.vertex_count(),
        Model::Jumping => inst.k(),
        Model::AddRemove => g.element_count(inst.kind()),
    };
    inst.clone().with_budget(inst.budget().min(cap))
}

/// One token operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Add(usize),
    Remove(usize),
    /// Slide or jump, depending on the model.
    Shift { from: usize, to: usize },
}

/// A sequence of moves from the start configuration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Schedule {
    pub moves: Vec<Move>,
}

impl Schedule {
    pub fn new(moves: Vec<Move>) -> Self {
        Schedule { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Jumps pairing `from[i]` with `to[i]`.
    pub fn jumps(from: &[usize], to: &[usize]) -> Self {
        Schedule { moves: from.iter().zip(to).map(|(&f, &t)| Move::Shift { from: f, to: t }).collect() }
    }

    /// Removals first, then additions.
    pub fn removals_then_additions(remove: &[usize], add: &[usize]) -> Self {
        let moves = remove.iter().map(|&x| Move::Remove(x)).chain(add.iter().map(|&x| Move::Add(x))).collect();
        Schedule { moves }
    }
}

/// Who produced a result and how much to trust a no.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub solver: &'static str,
    /// A no from a randomized solver is only probably correct.
    pub probabilistic_no: bool,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
}

impl Provenance {
    pub fn exact(solver: &'static str) -> Self {
        Provenance { solver, probabilistic_no: false, seed: None, trials: None }
    }
}

/// Outcome of a solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: bool,
    /// Moves used by the certificate. Minimum when `cost_exact`.
    pub cost: Option<usize>,
    pub cost_exact: bool,
    pub schedule: Option<Schedule>,
    pub provenance: Provenance,
    pub states_explored: Option<u64>,
    /// Second opinion, e.g. the oracle run alongside a randomized solver.
    pub cross_check: Option<Box<SolveResult>>,
}

impl SolveResult {
    pub fn yes(solver: &'static str, cost: usize, exact: bool, schedule: Schedule) -> Self {
        SolveResult {
            decision: true,
            cost: Some(cost),
            cost_exact: exact,
            schedule: Some(schedule),
            provenance: Provenance::exact(solver),
            states_explored: None,
            cross_check: None,
        }
    }

    pub fn no(solver: &'static str) -> Self {
        SolveResult {
            decision: false,
            cost: None,
            cost_exact: false,
            schedule: None,
            provenance: Provenance::exact(solver),
            states_explored: None,
            cross_check: None,
        }
    }

    /// A no that still reports the exact minimum, which exceeds the budget.
    pub fn no_with_cost(solver: &'static str, cost: usize) -> Self {
        SolveResult { cost: Some(cost), cost_exact: true, ..Self::no(solver) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn budget_clamps() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let start = Configuration::new(ElementKind::Vertex, vec![0, 1, 2]).unwrap();
        let p = Problem::VertexCut { s: 0, t: 4 };
        let i = DiscoveryInstance::new(g.clone(), p, Model::Sliding, start.clone(), 100).unwrap();
        assert_eq!(normalize_budget(&i).budget(), 15);
        let i = DiscoveryInstance::new(g.clone(), p, Model::Jumping, start.clone(), 2).unwrap();
        assert_eq!(normalize_budget(&i).budget(), 2);
        let g6 = Graph::new(6, vec![(0, 1)]).unwrap();
        let i = DiscoveryInstance::new(g6, p, Model::AddRemove, start, 10).unwrap();
        assert_eq!(normalize_budget(&i).budget(), 6);
    }

    #[test]
    fn size_invariants() {
        let c = Configuration::new(ElementKind::Edge, vec![0]).unwrap();
        assert!(DiscoveryInstance::new(tri(), Problem::SpanningTree, Model::Sliding, c, 1).is_err());
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = Configuration::new(ElementKind::Vertex, vec![0, 2]).unwrap();
        let sp = Problem::ShortestPath { s: 0, t: 2 };
        assert!(DiscoveryInstance::new(p3.clone(), sp, Model::Sliding, c, 1).is_err());
        let c = Configuration::new(ElementKind::Edge, vec![0]).unwrap();
        assert_eq!(
            DiscoveryInstance::new(p3, sp, Model::Sliding, c, 1),
            Err(Error::KindMismatch)
        );
        assert!(Configuration::new(ElementKind::Edge, vec![1, 1]).is_err());
    }
}
