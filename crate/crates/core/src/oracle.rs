//! Exhaustive configuration-space search, feasibility predicates and
//! schedule validation. This is the ground truth the solvers are checked
//! against; it refuses rather than approximates.

use rustc_hash::FxHashMap;

use crate::engines::blossom::max_weight_max_cardinality_matching;
use crate::engines::matroid::is_forest;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, element_distances_from, Dist, ElementKind, Graph, WeightMap};
use crate::instance::{normalize_budget, Configuration, DiscoveryInstance, Model, Move, Problem, Schedule, SolveResult};

/// Default cap on the number of stored configurations.
pub const DEFAULT_ORACLE_CAP: usize = 20_000_000;

/// Environment variable overriding the default cap.
pub const ORACLE_CAP_ENV: &str = "RECONFIG_ORACLE_CAP";

/// Cap from the environment, falling back to the default.
pub fn oracle_cap_from_env() -> usize {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

/// Base-problem predicate with per-instance precomputation.
#[derive(Debug, Clone)]
pub struct Feasibility<'a> {
    g: &'a Graph,
    problem: Problem,
    // shortest path data: dist from s, dist to t, d(s,t)
    sp: Option<(Vec<Dist>, Vec<Dist>, usize)>,
}

impl<'a> Feasibility<'a> {
    pub fn new(g: &'a Graph, problem: Problem) -> Result<Self> {
        let sp = match problem {
            Problem::ShortestPath { s, t } => {
                let ds = bfs_distances(g, s)?;
                let dt = bfs_distances(g, t)?;
                let d = ds[t].ok_or(Error::NoPath { s, t })?;
                Some((ds, dt, d))
            }
            Problem::VertexCut { s, t } | Problem::EdgeCut { s, t } => {
                g.check_vertex(s)?;
                g.check_vertex(t)?;
                None
            }
            _ => None,
        };
        Ok(Feasibility { g, problem, sp })
    }

    /// Exact predicate on a set of distinct element ids.
    pub fn check(&self, elems: &[usize]) -> bool {
        let g = self.g;
        match self.problem {
            Problem::SpanningTree => elems.len() + 1 == g.vertex_count().max(1) && is_forest(g, elems),
            Problem::Matching => crate::engines::is_matching(g, elems),
            Problem::ShortestPath { .. } => {
                let (ds, dt, d) = self.sp.as_ref().unwrap();
                if elems.len() != d + 1 {
                    return false;
                }
                let mut at_level = vec![usize::MAX; d + 1];
                for &v in elems {
                    match (ds[v], dt[v]) {
                        (Some(a), Some(b)) if a + b == *d && at_level[a] == usize::MAX => at_level[a] = v,
                        _ => return false,
                    }
                }
                at_level.windows(2).all(|p| g.has_edge(p[0], p[1]))
            }
            Problem::VertexCut { s, t } => {
                let mut blocked = vec![false; g.vertex_count()];
                for &v in elems {
                    if v != s && v != t {
                        blocked[v] = true;
                    }
                }
                !connected_avoiding(g, s, t, |v| blocked[v], |_| false)
            }
            Problem::EdgeCut { s, t } => {
                let mut blocked = vec![false; g.edge_count()];
                for &e in elems {
                    blocked[e] = true;
                }
                !connected_avoiding(g, s, t, |_| false, |e| blocked[e])
            }
        }
    }
}

/// Whether s reaches t without entering blocked vertices or edges.
pub fn connected_avoiding(
    g: &Graph,
    s: usize,
    t: usize,
    vertex_blocked: impl Fn(usize) -> bool,
    edge_blocked: impl Fn(usize) -> bool,
) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        if u == t {
            return true;
        }
        for &(w, e) in g.neighbors(u) {
            if !seen[w] && !edge_blocked(e) && (w == t || !vertex_blocked(w)) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Base-problem predicate on a configuration.
pub fn is_feasible(g: &Graph, problem: Problem, c: &Configuration) -> Result<bool> {
    if c.kind() != problem.kind() {
        return Err(Error::KindMismatch);
    }
    c.check_for(g)?;
    Ok(Feasibility::new(g, problem)?.check(c.elements()))
}

/// Goal test for an instance: the base predicate, plus the original size in
/// the exact-size addition/removal model.
pub fn goal_test<'a>(inst: &'a DiscoveryInstance) -> Result<impl Fn(&[usize]) -> bool + 'a> {
    let f = Feasibility::new(inst.graph(), inst.problem())?;
    let exact_size = inst.model() == Model::AddRemove && !inst.relaxed();
    let k = inst.k();
    Ok(move |elems: &[usize]| (!exact_size || elems.len() == k) && f.check(elems))
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

// move encoding in the parent map
const OP_SHIFT: u8 = 0;
const OP_ADD: u8 = 1;
const OP_REMOVE: u8 = 2;

/// Exact minimum cost by breadth-first search with the default cap.
pub fn oracle_min_cost(inst: &DiscoveryInstance) -> Result<SolveResult> {
    oracle_min_cost_with_cap(inst, DEFAULT_ORACLE_CAP)
}

pub fn oracle_min_cost_with_cap(inst: &DiscoveryInstance, cap: usize) -> Result<SolveResult> {
    let goal = goal_test(inst)?;
    oracle_search(inst, cap, &goal)
}

/// Breadth-first search to the nearest configuration satisfying `goal`,
/// within the (normalized) budget.
pub fn oracle_search(inst: &DiscoveryInstance, cap: usize, goal: &dyn Fn(&[usize]) -> bool) -> Result<SolveResult> {
    let inst = normalize_budget(inst);
    let g = inst.graph();
    let kind = inst.kind();
    let universe = g.element_count(kind);
    if universe > 128 {
        return Err(Error::OracleTooLarge(format!("{universe} elements; at most 128 supported")));
    }
    let full: u128 = if universe == 128 { u128::MAX } else { (1u128 << universe) - 1 };
    let nb: Vec<u128> = (0..universe)
        .map(|x| g.element_neighbors(kind, x).into_iter().fold(0u128, |m, y| m | (1 << y)))
        .collect();
    let start: u128 = inst.start().elements().iter().fold(0, |m, &x| m | (1u128 << x));
    let to_vec = |mask: u128| bits(mask).collect::<Vec<_>>();

    let mut parent: FxHashMap<u128, (u128, u8, u8, u8)> = FxHashMap::default();
    parent.insert(start, (start, u8::MAX, 0, 0));
    let mut found = if goal(&to_vec(start)) { Some(start) } else { None };
    let mut frontier = vec![start];
    let mut depth = 0;
    while found.is_none() && depth < inst.budget() && !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        'layer: for &cur in &frontier {
            let mut push = |state: u128, op: u8, a: usize, b: usize, next: &mut Vec<u128>| -> Result<bool> {
                if parent.contains_key(&state) {
                    return Ok(false);
                }
                parent.insert(state, (cur, op, a as u8, b as u8));
                if parent.len() > cap {
                    return Err(Error::OracleTooLarge(format!("more than {cap} configurations")));
                }
                next.push(state);
                Ok(goal(&to_vec(state)))
            };
            match inst.model() {
                Model::Sliding | Model::Jumping => {
                    for x in bits(cur) {
                        let targets = if inst.model() == Model::Sliding { nb[x] & !cur } else { full & !cur };
                        for y in bits(targets) {
                            let state = (cur & !(1u128 << x)) | (1u128 << y);
                            if push(state, OP_SHIFT, x, y, &mut next)? {
                                found = Some(state);
                                break 'layer;
                            }
                        }
                    }
                }
                Model::AddRemove => {
                    for x in bits(cur) {
                        if push(cur & !(1u128 << x), OP_REMOVE, x, 0, &mut next)? {
                            found = Some(cur & !(1u128 << x));
                            break 'layer;
                        }
                    }
                    for y in bits(full & !cur) {
                        if push(cur | (1u128 << y), OP_ADD, y, 0, &mut next)? {
                            found = Some(cur | (1u128 << y));
                            break 'layer;
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    let states = parent.len() as u64;
    let mut res = match found {
        None => SolveResult::no("oracle"),
        Some(mut state) => {
            let mut moves = Vec::new();
            while state != start {
                let (prev, op, a, b) = parent[&state];
                moves.push(match op {
                    OP_SHIFT => Move::Shift { from: a as usize, to: b as usize },
                    OP_ADD => Move::Add(a as usize),
                    _ => Move::Remove(a as usize),
                });
                state = prev;
            }
            moves.reverse();
            let cost = moves.len();
            SolveResult::yes("oracle", cost, true, Schedule::new(moves))
        }
    };
    res.states_explored = Some(states);
    Ok(res)
}

/// Result of replaying a schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleCheck {
    pub valid: bool,
    /// Step index (or the schedule length for end-state problems) and reason.
    pub violation: Option<(usize, String)>,
}

impl ScheduleCheck {
    fn fail(step: usize, why: impl Into<String>) -> Self {
        ScheduleCheck { valid: false, violation: Some((step, why.into())) }
    }
}

/// Replays `sch` from the start configuration and checks every step, the
/// budget and the final configuration.
pub fn validate_schedule(inst: &DiscoveryInstance, sch: &Schedule) -> ScheduleCheck {
    let g = inst.graph();
    let kind = inst.kind();
    let universe = g.element_count(kind);
    let mut occ = vec![false; universe];
    for &x in inst.start().elements() {
        occ[x] = true;
    }
    for (i, mv) in sch.moves.iter().enumerate() {
        match (*mv, inst.model()) {
            (Move::Shift { from, to }, Model::Sliding | Model::Jumping) => {
                if from >= universe || to >= universe {
                    return ScheduleCheck::fail(i, "element out of range");
                }
                if !occ[from] {
                    return ScheduleCheck::fail(i, format!("no token on {from}"));
                }
                if occ[to] {
                    return ScheduleCheck::fail(i, format!("{to} is occupied"));
                }
                if inst.model() == Model::Sliding && !g.elements_adjacent(kind, from, to) {
                    return ScheduleCheck::fail(i, format!("{from} and {to} are not adjacent"));
                }
                occ[from] = false;
                occ[to] = true;
            }
            (Move::Add(x), Model::AddRemove) => {
                if x >= universe || occ[x] {
                    return ScheduleCheck::fail(i, format!("cannot add a token on {x}"));
                }
                occ[x] = true;
            }
            (Move::Remove(x), Model::AddRemove) => {
                if x >= universe || !occ[x] {
                    return ScheduleCheck::fail(i, format!("no token to remove on {x}"));
                }
                occ[x] = false;
            }
            (mv, model) => return ScheduleCheck::fail(i, format!("{mv:?} is not a {} move", model.name())),
        }
    }
    if sch.len() > inst.budget() {
        return ScheduleCheck::fail(sch.len(), format!("{} moves exceed budget {}", sch.len(), inst.budget()));
    }
    let fin: Vec<usize> = (0..universe).filter(|&x| occ[x]).collect();
    match goal_test(inst) {
        Ok(goal) if goal(&fin) => ScheduleCheck { valid: true, violation: None },
        Ok(_) => ScheduleCheck::fail(sch.len(), "final configuration is not a solution"),
        Err(e) => ScheduleCheck::fail(0, e.to_string()),
    }
}

/// Slide distance matrix between two element lists of the same kind.
pub fn distance_matrix(g: &Graph, kind: ElementKind, from: &[usize], to: &[usize]) -> Result<Vec<Vec<Dist>>> {
    from.iter()
        .map(|&x| {
            let d = element_distances_from(g, kind, x)?;
            Ok(to.iter().map(|&y| d[y]).collect())
        })
        .collect()
}

/// Minimum summed slide distance over bijections start -> target. `None`
/// when no bijection has all distances finite.
pub fn token_target_assignment_cost(g: &Graph, start: &Configuration, target: &[usize]) -> Result<Option<usize>> {
    let kind = start.kind();
    let mut target = target.to_vec();
    target.sort_unstable();
    target.dedup();
    if target.len() != start.len() {
        return Err(Error::Input("start and target sizes differ".into()));
    }
    Configuration::new(kind, target.clone())?.check_for(g)?;
    let k = start.len();
    let d = distance_matrix(g, kind, start.elements(), &target)?;
    let dmax = 1 + d.iter().flatten().filter_map(|x| *x).max().unwrap_or(0) as u64;
    let mut edges = Vec::new();
    let mut ws = Vec::new();
    for (i, row) in d.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if let Some(x) = x {
                edges.push((i, k + j));
                ws.push(dmax - *x as u64);
            }
        }
    }
    let bip = Graph::new(2 * k, edges)?;
    let m = max_weight_max_cardinality_matching(&bip, &WeightMap::new(ws)?);
    if m.len() < k {
        return Ok(None);
    }
    Ok(Some(
        m.iter()
            .map(|&e| {
                let (i, j) = bip.endpoints(e);
                d[i.min(j)][i.max(j) - k].unwrap()
            })
            .sum(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(kind: ElementKind, v: Vec<usize>) -> Configuration {
        Configuration::new(kind, v).unwrap()
    }

    fn square_diag() -> Graph {
        // a=0 b=1 c=2 d=3; ab bc cd da ac
        Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn predicates() {
        let tri = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_feasible(&tri, Problem::SpanningTree, &cfg(ElementKind::Edge, vec![0, 1])).unwrap());
        // K4 minus st with s=0, t=1; common neighbours 2, 3
        let g = Graph::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = Problem::VertexCut { s: 0, t: 1 };
        assert!(is_feasible(&g, p, &cfg(ElementKind::Vertex, vec![2, 3])).unwrap());
        assert!(!is_feasible(&g, p, &cfg(ElementKind::Vertex, vec![2])).unwrap());
        assert!(is_feasible(&g, p, &cfg(ElementKind::Vertex, vec![0, 2, 3])).unwrap());
        assert_eq!(is_feasible(&g, p, &cfg(ElementKind::Edge, vec![0])), Err(Error::KindMismatch));
    }

    #[test]
    fn oracle_examples() {
        let g = square_diag();
        let inst = DiscoveryInstance::new(
            g.clone(),
            Problem::SpanningTree,
            Model::Sliding,
            cfg(ElementKind::Edge, vec![0, 1, 4]),
            3,
        )
        .unwrap();
        let r = oracle_min_cost(&inst).unwrap();
        assert_eq!(r.cost, Some(1));
        assert!(validate_schedule(&inst, r.schedule.as_ref().unwrap()).valid);

        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst =
            DiscoveryInstance::new(p4, Problem::Matching, Model::Jumping, cfg(ElementKind::Edge, vec![0, 1]), 1)
                .unwrap();
        let r = oracle_min_cost(&inst).unwrap();
        assert_eq!(r.cost, Some(1));
        assert_eq!(r.schedule.unwrap().moves, vec![Move::Shift { from: 1, to: 2 }]);
    }

    #[test]
    fn feasible_start_costs_nothing() {
        let g = square_diag();
        let inst = DiscoveryInstance::new(
            g,
            Problem::SpanningTree,
            Model::Sliding,
            cfg(ElementKind::Edge, vec![0, 1, 2]),
            0,
        )
        .unwrap();
        let r = oracle_min_cost(&inst).unwrap();
        assert_eq!((r.decision, r.cost), (true, Some(0)));
        assert!(validate_schedule(&inst, &Schedule::default()).valid);
    }

    #[test]
    fn rejects_illegal_slide() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = DiscoveryInstance::new(
            g,
            Problem::VertexCut { s: 0, t: 3 },
            Model::Sliding,
            cfg(ElementKind::Vertex, vec![0]),
            2,
        )
        .unwrap();
        let bad = Schedule::new(vec![Move::Shift { from: 0, to: 2 }]);
        let chk = validate_schedule(&inst, &bad);
        assert!(!chk.valid);
        assert_eq!(chk.violation.unwrap().0, 0);
        let good = Schedule::new(vec![Move::Shift { from: 0, to: 1 }]);
        assert!(validate_schedule(&inst, &good).valid);
    }

    #[test]
    fn cap_refuses() {
        let g = Graph::new(8, (0..8).flat_map(|u| (u + 1..8).map(move |v| (u, v))).collect()).unwrap();
        let inst = DiscoveryInstance::new(
            g,
            Problem::VertexCut { s: 0, t: 1 },
            Model::Jumping,
            cfg(ElementKind::Vertex, vec![2, 3]),
            2,
        )
        .unwrap();
        assert!(matches!(oracle_min_cost_with_cap(&inst, 5), Err(Error::OracleTooLarge(_))));
    }

    #[test]
    fn assignment_costs() {
        let p = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let s = cfg(ElementKind::Vertex, vec![0, 1]);
        assert_eq!(token_target_assignment_cost(&p, &s, &[0, 1]).unwrap(), Some(0));
        assert_eq!(token_target_assignment_cost(&p, &s, &[1, 2]).unwrap(), Some(2));
        let split = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(token_target_assignment_cost(&split, &cfg(ElementKind::Vertex, vec![0]), &[2]).unwrap(), None);
    }
}
