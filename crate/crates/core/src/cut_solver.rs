//! Vertex and edge cut discovery.
//!
//! Every superset of a cut is a cut, so a configuration is feasible once
//! some subset of at most k of its elements separates s from t. Edge cuts
//! are solved on the derived graph whose vertices are the edges of G.
//!
//! The exact searches branch on violating paths: take an s-t path avoiding
//! the partial cut, and for each cuttable internal vertex v_i open a child
//! that adds v_i and forbids v_1..v_{i-1}. Flow values give lower bounds.

use std::collections::VecDeque;

use crate::color_coding::{default_trials, randomized_discovery_solver, RainbowReduction, UNREACHABLE};
use crate::engines::flow::{min_vertex_cut_value, INF_CAP};
use crate::engines::{max_flow_min_cut, min_cost_assignment, FlowNetwork};
use crate::error::{Error, Result};
use crate::graph::{Coloring, ElementKind, Graph, WeightMap};
use crate::instance::{normalize_budget, Configuration, DiscoveryInstance, Model, Move, Problem, Schedule, SolveResult};
use crate::oracle::{distance_matrix, oracle_min_cost_with_cap, validate_schedule};
use crate::realize::{add_remove_schedule, jump_schedule, realize_assignment};
use crate::std_solver::{RedBlueOutcome, BLUE};

/// Derived graph for edge cuts: vertex e < m stands for edge e of G, and
/// s' = m, t' = m+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCutTransform {
    pub graph: Graph,
    pub s: usize,
    pub t: usize,
    /// Derived vertex of each edge of G (the identity on 0..m).
    pub edge_vertex: Vec<usize>,
}

pub fn edge_cut_to_vertex_cut(g: &Graph, s: usize, t: usize) -> Result<EdgeCutTransform> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::Input("cut terminals must differ".into()));
    }
    let m = g.edge_count();
    let mut edges = Vec::new();
    for e in 0..m {
        for f in g.edge_neighbors(e) {
            if e < f {
                edges.push((e, f));
            }
        }
        let (u, v) = g.endpoints(e);
        if u == s || v == s {
            edges.push((e, m));
        }
        if u == t || v == t {
            edges.push((e, m + 1));
        }
    }
    Ok(EdgeCutTransform { graph: Graph::new(m + 2, edges)?, s: m, t: m + 1, edge_vertex: (0..m).collect() })
}

/// Vertex-kind view of a cut instance: the instance itself for vertex cuts,
/// the derived graph for edge cuts. Element ids coincide with the original
/// ones in both cases.
pub fn as_vertex_cut(inst: &DiscoveryInstance) -> Result<DiscoveryInstance> {
    match inst.problem() {
        Problem::VertexCut { .. } => Ok(inst.clone()),
        Problem::EdgeCut { s, t } => {
            let tr = edge_cut_to_vertex_cut(inst.graph(), s, t)?;
            let start = Configuration::new(ElementKind::Vertex, inst.start().elements().to_vec())?;
            let mut d = DiscoveryInstance::new(tr.graph, Problem::VertexCut { s: tr.s, t: tr.t }, inst.model(), start, inst.budget())?;
            if inst.relaxed() {
                d = d.with_relaxed(true)?;
            }
            Ok(d)
        }
        _ => Err(Error::Input("not a cut instance".into())),
    }
}

fn terminals(inst: &DiscoveryInstance) -> (usize, usize) {
    inst.problem().terminals().expect("cut instance")
}

/// s-t path avoiding `in_cut`, minimising the number of cuttable internal
/// vertices (0-1 BFS). Returns the internal vertices that may be cut, in
/// path order, or `None` when `in_cut` separates s and t.
fn branching_path(g: &Graph, s: usize, t: usize, in_cut: &[bool], forbidden: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    let mut dq = VecDeque::new();
    dist[s] = 0;
    dq.push_back(s);
    while let Some(u) = dq.pop_front() {
        if u == t {
            break;
        }
        for &(w, _) in g.neighbors(u) {
            if in_cut[w] && w != t {
                continue;
            }
            let c = usize::from(w != t && !forbidden[w]);
            if dist[u] + c < dist[w] {
                dist[w] = dist[u] + c;
                prev[w] = u;
                if c == 0 {
                    dq.push_front(w);
                } else {
                    dq.push_back(w);
                }
            }
        }
    }
    if dist[t] == usize::MAX {
        return None;
    }
    let mut out = Vec::new();
    let mut x = prev[t];
    while x != s {
        if !forbidden[x] {
            out.push(x);
        }
        x = prev[x];
    }
    out.reverse();
    Some(out)
}

/// Path-branching search for a minimum-objective vertex cut of size <= k.
/// `objective` must not decrease when a vertex is added, and
/// `lower_bound(partial, forbidden)` must not exceed the objective of any
/// cut extending `partial` that avoids `forbidden` (`None`: no such cut).
/// `forbid` may add forbidden vertices implied by the partial cut.
struct PathBranch<'a> {
    g: &'a Graph,
    s: usize,
    t: usize,
    k: usize,
    objective: &'a mut dyn FnMut(&[usize]) -> Option<u64>,
    lower_bound: &'a mut dyn FnMut(&[usize], &[bool]) -> Option<u64>,
    forbid: &'a dyn Fn(&[usize], &mut [bool]),
    best: Option<(u64, Vec<usize>)>,
    nodes: u64,
    /// Stop at the first improvement on `best`.
    first_only: bool,
    done: bool,
}

impl PathBranch<'_> {
    fn run(&mut self, uncuttable: Vec<bool>) -> Option<(u64, Vec<usize>)> {
        if self.g.has_edge(self.s, self.t) {
            return None;
        }
        let n = self.g.vertex_count();
        let mut partial = Vec::new();
        let mut in_cut = vec![false; n];
        self.go(&mut partial, &mut in_cut, uncuttable);
        self.best.take()
    }

    fn go(&mut self, partial: &mut Vec<usize>, in_cut: &mut Vec<bool>, mut forbidden: Vec<bool>) {
        if self.done {
            return;
        }
        self.nodes += 1;
        (self.forbid)(partial, &mut forbidden);
        let Some(path) = branching_path(self.g, self.s, self.t, in_cut, &forbidden) else {
            if let Some(v) = (self.objective)(partial) {
                if self.best.as_ref().is_none_or(|(b, _)| v < *b) {
                    self.best = Some((v, partial.clone()));
                    self.done = self.first_only;
                }
            }
            return;
        };
        if partial.len() >= self.k || path.is_empty() {
            return;
        }
        // size bound: vertex-disjoint violating paths need distinct vertices
        let size_lb = min_vertex_cut_value(self.g, self.s, self.t, |v| {
            if in_cut[v] {
                0
            } else if forbidden[v] {
                INF_CAP
            } else {
                1
            }
        });
        match size_lb {
            Some((extra, _)) if partial.len() as u64 + extra <= self.k as u64 => {}
            _ => return,
        }
        match (self.lower_bound)(partial, &forbidden) {
            None => return,
            Some(lb) => {
                if self.best.as_ref().is_some_and(|(b, _)| lb >= *b) {
                    return;
                }
            }
        }
        let mut f = forbidden;
        for &v in &path {
            partial.push(v);
            in_cut[v] = true;
            self.go(partial, in_cut, f.clone());
            in_cut[v] = false;
            partial.pop();
            f[v] = true;
        }
    }
}

fn base_uncuttable(g: &Graph, s: usize, t: usize) -> Vec<bool> {
    let mut u = vec![false; g.vertex_count()];
    u[s] = true;
    u[t] = true;
    u
}

/// Cheapest extension of `partial` under vertex costs, ignoring the size
/// limit: a flow lower bound.
fn flow_bound(g: &Graph, s: usize, t: usize, partial: &[usize], forbidden: &[bool], cost: impl Fn(usize) -> u64) -> Option<u64> {
    let mut in_cut = vec![false; g.vertex_count()];
    for &v in partial {
        in_cut[v] = true;
    }
    min_vertex_cut_value(g, s, t, |v| {
        if in_cut[v] {
            0
        } else if forbidden[v] {
            INF_CAP
        } else {
            cost(v)
        }
    })
    .map(|(x, _)| x)
}

/// Fewest blue vertices over vertex cuts of size at most k, with a witness.
/// No decision when s and t are adjacent or every cut is larger than k.
pub fn red_blue_min_blue_cut(g: &Graph, rb: &Coloring, s: usize, t: usize, k: usize) -> RedBlueOutcome {
    let none = RedBlueOutcome { decision: false, min_blue: None, witness: None };
    if s == t || s >= g.vertex_count() || t >= g.vertex_count() {
        return none;
    }
    let blue = |v: usize| u64::from(rb.color_of(v) == BLUE);
    let mut objective = |p: &[usize]| Some(p.iter().map(|&v| blue(v)).sum::<u64>());
    let mut lower = |p: &[usize], f: &[bool]| {
        let base: u64 = p.iter().map(|&v| blue(v)).sum();
        flow_bound(g, s, t, p, f, blue).map(|x| base + x)
    };
    let mut pb = PathBranch {
        g,
        s,
        t,
        k,
        objective: &mut objective,
        lower_bound: &mut lower,
        forbid: &|_, _| {},
        best: None,
        nodes: 0,
        first_only: false,
        done: false,
    };
    match pb.run(base_uncuttable(g, s, t)) {
        None => none,
        Some((b, mut w)) => {
            w.sort_unstable();
            RedBlueOutcome { decision: true, min_blue: Some(b as usize), witness: Some(w) }
        }
    }
}

/// Minimum-weight rainbow vertex cut of size at most k. Vertices of weight
/// at least [`UNREACHABLE`] are never used.
pub fn weighted_rainbow_cut_exact(
    g: &Graph,
    phi: &Coloring,
    w: &WeightMap,
    s: usize,
    t: usize,
    k: usize,
) -> Option<(u64, Vec<usize>)> {
    if s == t {
        return None;
    }
    let mut uncut = base_uncuttable(g, s, t);
    for v in 0..g.vertex_count() {
        if w.weight_of(v) >= UNREACHABLE {
            uncut[v] = true;
        }
    }
    let palette = phi.palette_size();
    let forbid = |p: &[usize], f: &mut [bool]| {
        if p.is_empty() {
            return;
        }
        let mut used = vec![false; palette];
        for &v in p {
            used[phi.color_of(v)] = true;
        }
        for v in 0..f.len() {
            if used[phi.color_of(v)] && !p.contains(&v) {
                f[v] = true;
            }
        }
    };
    let mut objective = |p: &[usize]| Some(p.iter().map(|&v| w.weight_of(v)).sum::<u64>());
    let mut lower = |p: &[usize], f: &[bool]| {
        let base: u64 = p.iter().map(|&v| w.weight_of(v)).sum();
        flow_bound(g, s, t, p, f, |v| w.weight_of(v)).map(|x| base + x)
    };
    let mut pb = PathBranch {
        g,
        s,
        t,
        k,
        objective: &mut objective,
        lower_bound: &mut lower,
        forbid: &forbid,
        best: None,
        nodes: 0,
        first_only: false,
        done: false,
    };
    pb.run(uncut).map(|(c, mut v)| {
        v.sort_unstable();
        (c, v)
    })
}

fn check_cut(inst: &DiscoveryInstance, model: Model) -> Result<()> {
    if !inst.problem().is_cut() {
        return Err(Error::Input("not a cut instance".into()));
    }
    if inst.model() != model {
        return Err(Error::Input(format!("expected the {} model", model.name())));
    }
    Ok(())
}

/// Final configuration for cut `c`: the cut plus start tokens to keep k.
fn fill_target(start: &[usize], cut: &[usize]) -> Vec<usize> {
    let mut target = cut.to_vec();
    let need = start.len() - cut.len();
    target.extend(start.iter().copied().filter(|x| !cut.contains(x)).take(need));
    target.sort_unstable();
    target
}

fn jump_or_addrem(inst: &DiscoveryInstance, b: usize, per: usize, solver: &'static str) -> Result<SolveResult> {
    let vi = as_vertex_cut(inst)?;
    let (s, t) = terminals(&vi);
    let mut colors = vec![BLUE; vi.graph().vertex_count()];
    for &x in vi.start().elements() {
        colors[x] = 1 - BLUE;
    }
    let rb = Coloring::new(ElementKind::Vertex, 2, colors)?;
    let out = red_blue_min_blue_cut(vi.graph(), &rb, s, t, vi.k());
    Ok(match (out.min_blue, out.witness) {
        (Some(blue), Some(cut)) if blue <= b => {
            let target = fill_target(inst.start().elements(), &cut);
            let sch = if inst.model() == Model::Jumping {
                jump_schedule(inst.start().elements(), &target)
            } else {
                add_remove_schedule(inst.start().elements(), &target)
            };
            SolveResult::yes(solver, blue * per, true, sch)
        }
        (Some(blue), _) => SolveResult::no_with_cost(solver, blue * per),
        _ => SolveResult::no(solver),
    })
}

/// Jumping: minimise the blue part of a cut of size at most k, where the
/// start elements are red.
pub fn solve_cut_jumping(inst: &DiscoveryInstance) -> Result<SolveResult> {
    check_cut(inst, Model::Jumping)?;
    let inst = &normalize_budget(inst);
    jump_or_addrem(inst, inst.budget(), 1, "cut-red-blue")
}

/// Addition/removal. Exact size: as jumping with half the budget. Relaxed:
/// add a minimum cut of G - S.
pub fn solve_cut_addrem(inst: &DiscoveryInstance) -> Result<SolveResult> {
    check_cut(inst, Model::AddRemove)?;
    if !inst.relaxed() {
        let inst = &normalize_budget(inst);
        return jump_or_addrem(inst, inst.budget() / 2, 2, "cut-red-blue");
    }
    const SOLVER: &str = "cut-relaxed";
    let g = inst.graph();
    let start = inst.start().elements();
    let additions: Option<Vec<usize>> = match inst.problem() {
        Problem::VertexCut { s, t } => {
            let mut in_s = vec![false; g.vertex_count()];
            for &v in start {
                in_s[v] = true;
            }
            min_vertex_cut_value(g, s, t, |v| u64::from(!in_s[v])).map(|(_, cut)| cut.into_iter().filter(|&v| !in_s[v]).collect())
        }
        Problem::EdgeCut { s, t } => {
            let mut in_s = vec![false; g.edge_count()];
            for &e in start {
                in_s[e] = true;
            }
            let caps = WeightMap::new((0..g.edge_count()).map(|e| u64::from(!in_s[e])).collect())?;
            let cut = max_flow_min_cut(&FlowNetwork::from_graph(g, &caps, s, t)?)?;
            Some(cut.cut.into_iter().filter(|&e| !in_s[e]).collect())
        }
        _ => unreachable!(),
    };
    Ok(match additions {
        None => SolveResult::no(SOLVER),
        Some(add) if add.len() <= inst.budget() => {
            let cost = add.len();
            SolveResult::yes(SOLVER, cost, true, Schedule::removals_then_additions(&[], &add))
        }
        Some(add) => SolveResult::no_with_cost(SOLVER, add.len()),
    })
}

/// Rainbow solver plugged into color coding for (vertex-view) cut instances.
pub fn rainbow_cut_solver(inst: &DiscoveryInstance, red: &RainbowReduction) -> Result<Option<(u64, Vec<usize>)>> {
    let (s, t) = terminals(inst);
    Ok(weighted_rainbow_cut_exact(inst.graph(), &red.colors, &red.weights, s, t, inst.k()))
}

/// Options for the randomized sliding solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlidingCutOptions {
    pub trials: Option<u64>,
    pub seed: u64,
    /// Also run the oracle when it stays within this many states.
    pub cross_check_cap: Option<usize>,
}

impl Default for SlidingCutOptions {
    fn default() -> Self {
        SlidingCutOptions { trials: None, seed: 0, cross_check_cap: None }
    }
}

/// Map a vertex-view schedule back to the original instance. Element ids
/// coincide, so only the check remains.
fn back_to_original(inst: &DiscoveryInstance, mut res: SolveResult) -> SolveResult {
    if let Some(sch) = &res.schedule {
        debug_assert!(sch.moves.iter().all(|m| match *m {
            Move::Shift { from, to } => from < inst.graph().element_count(inst.kind()) && to < inst.graph().element_count(inst.kind()),
            _ => true,
        }));
        if !validate_schedule(inst, sch).valid {
            res.schedule = None;
        }
    }
    res
}

/// Sliding by color coding with the exact rainbow cut search.
pub fn solve_cut_sliding(inst: &DiscoveryInstance, opts: SlidingCutOptions) -> Result<SolveResult> {
    check_cut(inst, Model::Sliding)?;
    let vi = as_vertex_cut(inst)?;
    let trials = opts.trials.unwrap_or_else(|| default_trials(inst.k()));
    let res = randomized_discovery_solver(&vi, &rainbow_cut_solver, trials, opts.seed)?;
    let mut res = back_to_original(inst, res);
    if let Some(cap) = opts.cross_check_cap {
        if let Ok(o) = oracle_min_cost_with_cap(inst, cap) {
            res.cross_check = Some(Box::new(o));
        }
    }
    Ok(res)
}

/// Exact sliding cost by path branching. The bound is the larger of the
/// token assignment cost of the partial cut and a flow bound pricing every
/// cut vertex at its nearest token.
pub fn solve_cut_sliding_bnb(inst: &DiscoveryInstance) -> Result<SolveResult> {
    cut_bnb(inst, false)
}

/// Decision version of [`solve_cut_sliding_bnb`]: searches only below the
/// budget and stops at the first cut found, so a yes carries an upper bound
/// on the cost and a no carries no cost.
pub fn solve_cut_sliding_bnb_decide(inst: &DiscoveryInstance) -> Result<SolveResult> {
    cut_bnb(inst, true)
}

fn cut_bnb(inst: &DiscoveryInstance, decide: bool) -> Result<SolveResult> {
    const SOLVER: &str = "cut-bnb";
    check_cut(inst, Model::Sliding)?;
    let vi = as_vertex_cut(inst)?;
    let (s, t) = terminals(&vi);
    let g = vi.graph();
    let start = vi.start().elements();
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let dist = distance_matrix(g, ElementKind::Vertex, start, &all)?;
    let nearest: Vec<u64> = (0..g.vertex_count())
        .map(|v| (0..start.len()).filter_map(|j| dist[j][v]).min().map_or(INF_CAP, |d| d as u64))
        .collect();
    let assign = |p: &[usize]| -> Option<(u64, Vec<usize>)> {
        let cost: Vec<Vec<Option<u64>>> =
            p.iter().map(|&v| (0..start.len()).map(|j| dist[j][v].map(|d| d as u64)).collect()).collect();
        min_cost_assignment(&cost)
    };
    let mut objective = |p: &[usize]| assign(p).map(|x| x.0);
    let mut lower = |p: &[usize], forbidden: &[bool]| {
        let a = assign(p)?.0;
        let near = p.iter().map(|&v| nearest[v]).sum::<u64>() + flow_bound(g, s, t, p, forbidden, |v| nearest[v])?;
        Some(a.max(near))
    };
    let mut uncut = base_uncuttable(g, s, t);
    // vertices no token can reach are useless in a cut
    for v in 0..g.vertex_count() {
        if nearest[v] == INF_CAP {
            uncut[v] = true;
        }
    }
    let mut pb = PathBranch {
        g,
        s,
        t,
        k: vi.k(),
        objective: &mut objective,
        lower_bound: &mut lower,
        forbid: &|_, _| {},
        best: None,
        nodes: 0,
        first_only: decide,
        done: false,
    };
    if decide {
        // anything at budget+1 or above is pruned
        pb.best = Some((inst.budget() as u64 + 1, Vec::new()));
    }
    let best = pb.run(uncut).filter(|(c, _)| !decide || *c <= inst.budget() as u64);
    let nodes = pb.nodes;
    let mut res = match best {
        None => SolveResult::no(SOLVER),
        Some((c, cut)) => {
            let c = c as usize;
            if c > inst.budget() {
                SolveResult::no_with_cost(SOLVER, c)
            } else {
                let (_, cols) = assign(&cut).expect("bounded cut has an assignment");
                // tokens assigned to the cut move, the rest stay
                let mut to: Vec<usize> = start.to_vec();
                for (r, &j) in cols.iter().enumerate() {
                    to[j] = cut[r];
                }
                let sch = realize_assignment(g, ElementKind::Vertex, start, &to).expect("reachable");
                back_to_original(inst, SolveResult::yes(SOLVER, c, !decide, sch))
            }
        }
    };
    res.states_explored = Some(nodes);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_min_cost;

    fn vc(g: Graph, s: usize, t: usize, start: Vec<usize>, model: Model, b: usize) -> DiscoveryInstance {
        DiscoveryInstance::new(g, Problem::VertexCut { s, t }, model, Configuration::new(ElementKind::Vertex, start).unwrap(), b)
            .unwrap()
    }

    fn k4_minus_st() -> Graph {
        // s=0, t=1, common neighbors 2 and 3
        Graph::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn transform_examples() {
        let p = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let tr = edge_cut_to_vertex_cut(&p, 0, 2).unwrap();
        assert_eq!(min_vertex_cut_value(&tr.graph, tr.s, tr.t, |_| 1).unwrap().0, 1);
        let tri = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let tr = edge_cut_to_vertex_cut(&tri, 0, 2).unwrap();
        assert_eq!(min_vertex_cut_value(&tr.graph, tr.s, tr.t, |_| 1).unwrap().0, 2);
        // three parallel length-2 paths
        let par = Graph::new(5, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let tr = edge_cut_to_vertex_cut(&par, 0, 1).unwrap();
        assert_eq!(min_vertex_cut_value(&tr.graph, tr.s, tr.t, |_| 1).unwrap().0, 3);
        assert_eq!(min_vertex_cut_value(&par, 0, 1, |_| 1).unwrap().0, 3);
    }

    #[test]
    fn red_blue_examples() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let c = Coloring::new(ElementKind::Vertex, 2, vec![0; 4]).unwrap();
        let out = red_blue_min_blue_cut(&g, &c, 0, 3, 0);
        assert_eq!((out.min_blue, out.witness), (Some(0), Some(vec![])));
        let p = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = Coloring::new(ElementKind::Vertex, 2, vec![0, 1, 0]).unwrap();
        assert_eq!(red_blue_min_blue_cut(&p, &c, 0, 2, 1).min_blue, Some(1));
        let c = Coloring::new(ElementKind::Vertex, 2, vec![0, 0, 0, 1]).unwrap();
        assert_eq!(red_blue_min_blue_cut(&k4_minus_st(), &c, 0, 1, 2).min_blue, Some(1));
        assert_eq!(red_blue_min_blue_cut(&k4_minus_st(), &c, 0, 1, 1).min_blue, None);
    }

    #[test]
    fn rainbow_examples() {
        let p = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = Coloring::new(ElementKind::Vertex, 1, vec![0; 3]).unwrap();
        let w = WeightMap::new(vec![0, 4, 0]).unwrap();
        assert_eq!(weighted_rainbow_cut_exact(&p, &c, &w, 0, 2, 1), Some((4, vec![1])));
        // s=0, t=3, paths via 1 and via 2
        let g = Graph::new(4, vec![(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let same = Coloring::new(ElementKind::Vertex, 2, vec![0, 1, 1, 0]).unwrap();
        let w = WeightMap::new(vec![0, 2, 3, 0]).unwrap();
        assert_eq!(weighted_rainbow_cut_exact(&g, &same, &w, 0, 3, 2), None);
        let diff = Coloring::new(ElementKind::Vertex, 2, vec![0, 0, 1, 0]).unwrap();
        assert_eq!(weighted_rainbow_cut_exact(&g, &diff, &w, 0, 3, 2), Some((5, vec![1, 2])));
    }

    #[test]
    fn jumping_and_sliding_small() {
        // s=0, t=3 with paths via 1 and via 2; tokens on 1 and 4 (pendant at 0)
        let g = Graph::new(5, vec![(0, 1), (1, 3), (0, 2), (2, 3), (0, 4)]).unwrap();
        let i = vc(g.clone(), 0, 3, vec![1, 4], Model::Jumping, 1);
        let r = solve_cut_jumping(&i).unwrap();
        assert_eq!(r.cost, Some(1));
        assert!(validate_schedule(&i, r.schedule.as_ref().unwrap()).valid);
        let sl = vc(g, 0, 3, vec![1, 4], Model::Sliding, 2);
        let o = oracle_min_cost(&sl).unwrap();
        let bb = solve_cut_sliding_bnb(&sl).unwrap();
        assert_eq!(o.cost, bb.cost);
        assert!(validate_schedule(&sl, bb.schedule.as_ref().unwrap()).valid);
        let cc = solve_cut_sliding(&sl, SlidingCutOptions { trials: Some(200), seed: 1, cross_check_cap: Some(1000) }).unwrap();
        assert!(cc.decision);
        assert_eq!(cc.cross_check.unwrap().decision, true);
        assert!(validate_schedule(&sl, cc.schedule.as_ref().unwrap()).valid);
    }

    #[test]
    fn relaxed_addrem() {
        let two = Graph::new_multi(2, vec![(0, 1), (0, 1)]).unwrap();
        let i = DiscoveryInstance::new(
            two,
            Problem::EdgeCut { s: 0, t: 1 },
            Model::AddRemove,
            Configuration::new(ElementKind::Edge, vec![0]).unwrap(),
            1,
        )
        .unwrap()
        .with_relaxed(true)
        .unwrap();
        let r = solve_cut_addrem(&i).unwrap();
        assert_eq!(r.cost, Some(1));
        assert!(validate_schedule(&i, r.schedule.as_ref().unwrap()).valid);
        // 2x3 grid, s and t at opposite corners, no tokens
        let grid = Graph::new(6, vec![(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let i = vc(grid, 0, 5, vec![], Model::AddRemove, 5).with_relaxed(true).unwrap();
        assert_eq!(solve_cut_addrem(&i).unwrap().cost, Some(2));
    }
}
