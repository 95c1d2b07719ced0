//! Shortest path discovery.
//!
//! With k = |S| = dist(s,t)+1 tokens the target is the vertex set of a
//! shortest s-t path, and the sliding cost of reaching a fixed target is the
//! cheapest token-to-vertex assignment. So the optimum is the minimum over
//! shortest paths P and bijections S -> V(P) of the summed distances, which
//! the level DAG computes once the token of each level is fixed.

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Coloring, Dist, ElementKind, Graph};
use crate::instance::{normalize_budget, DiscoveryInstance, Model, Problem, SolveResult};
use crate::oracle::validate_schedule;
use crate::realize::{add_remove_schedule, jump_schedule, realize_assignment};
use crate::std_solver::{start_coloring, RedBlueOutcome, BLUE};

const INF: u64 = u64::MAX / 4;

/// Largest k handled by plain permutation enumeration.
pub const PERMUTATION_LIMIT: usize = 9;
/// Largest k handled by the subset dynamic program.
pub const SUBSET_DP_LIMIT: usize = 22;

/// Vertices on shortest s-t paths grouped by distance from s, with arcs
/// between consecutive levels.
#[derive(Debug, Clone)]
pub struct LevelDag {
    pub levels: Vec<Vec<usize>>,
    /// (level, index within level) for on-path vertices.
    pub pos: Vec<Option<(usize, usize)>>,
    /// preds[v] = indices in the previous level adjacent to v.
    pub preds: Vec<Vec<usize>>,
}

impl LevelDag {
    pub fn new(g: &Graph, s: usize, t: usize) -> Result<Self> {
        let levels = crate::graph::level_decomposition(g, s, t)?;
        let mut pos = vec![None; g.vertex_count()];
        for (i, lv) in levels.iter().enumerate() {
            for (j, &v) in lv.iter().enumerate() {
                pos[v] = Some((i, j));
            }
        }
        let mut preds = vec![Vec::new(); g.vertex_count()];
        for (i, lv) in levels.iter().enumerate().skip(1) {
            for &v in lv {
                for &(u, _) in g.neighbors(v) {
                    if let Some((li, lj)) = pos[u] {
                        if li + 1 == i {
                            preds[v].push(lj);
                        }
                    }
                }
                preds[v].sort_unstable();
                preds[v].dedup();
            }
        }
        Ok(LevelDag { levels, pos, preds })
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// All arcs (u, v) with v one level further from s.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, lv) in self.levels.iter().enumerate().skip(1) {
            for &v in lv {
                for &j in &self.preds[v] {
                    out.push((self.levels[i - 1][j], v));
                }
            }
        }
        out
    }

    /// Whether `path` (listed from s) is a shortest s-t path.
    pub fn is_shortest_path(&self, g: &Graph, path: &[usize]) -> bool {
        path.len() == self.levels.len()
            && path.iter().enumerate().all(|(i, &v)| self.pos[v].map(|p| p.0) == Some(i))
            && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// Cheapest DAG path when level i must be filled at cost `cost(i, v)`.
    /// Returns the cost and the path listed from s.
    pub fn cheapest_path(&self, cost: impl Fn(usize, usize) -> u64) -> Option<(u64, Vec<usize>)> {
        let mut f: Vec<Vec<u64>> = Vec::with_capacity(self.levels.len());
        let mut arg: Vec<Vec<usize>> = Vec::with_capacity(self.levels.len());
        f.push(self.levels[0].iter().map(|&v| cost(0, v)).collect());
        arg.push(vec![usize::MAX; self.levels[0].len()]);
        for i in 1..self.levels.len() {
            let mut fi = Vec::with_capacity(self.levels[i].len());
            let mut ai = Vec::with_capacity(self.levels[i].len());
            for &v in &self.levels[i] {
                let c = cost(i, v);
                let best = self.preds[v].iter().map(|&j| (f[i - 1][j], j)).min();
                match best {
                    Some((p, j)) if p < INF && c < INF => {
                        fi.push(p + c);
                        ai.push(j);
                    }
                    _ => {
                        fi.push(INF);
                        ai.push(usize::MAX);
                    }
                }
            }
            f.push(fi);
            arg.push(ai);
        }
        let last = f.len() - 1;
        let (best, mut j) = f[last].iter().enumerate().map(|(j, &c)| (c, j)).min()?;
        if best >= INF {
            return None;
        }
        let mut path = vec![0; self.levels.len()];
        for i in (0..=last).rev() {
            path[i] = self.levels[i][j];
            j = arg[i][j];
        }
        Some((best, path))
    }
}

fn check_spd(inst: &DiscoveryInstance) -> Result<(usize, usize)> {
    match inst.problem() {
        Problem::ShortestPath { s, t } => Ok((s, t)),
        _ => Err(Error::Input("not a shortest path instance".into())),
    }
}

fn token_distances(g: &Graph, start: &[usize]) -> Result<Vec<Vec<u64>>> {
    start
        .iter()
        .map(|&v| Ok(bfs_distances(g, v)?.into_iter().map(|d: Dist| d.map_or(INF, |x| x as u64)).collect()))
        .collect()
}

/// Optimal (cost, token of each level, path) over all enumerations.
struct Optimum {
    cost: u64,
    order: Vec<usize>,
    path: Vec<usize>,
}

/// Permutation enumeration, level by level, sharing DP prefixes and pruning
/// against the best complete enumeration. Orders are tried
/// lexicographically and only strict improvements are kept.
fn enumerate_permutations(dag: &LevelDag, dist: &[Vec<u64>]) -> Option<Optimum> {
    let k = dist.len();
    let mut best = INF;
    let mut best_order: Option<Vec<usize>> = None;
    let mut order = Vec::with_capacity(k);
    let mut used = vec![false; k];

    fn rec(
        dag: &LevelDag,
        dist: &[Vec<u64>],
        f: &[u64],
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
        best_order: &mut Option<Vec<usize>>,
    ) {
        let i = order.len();
        let k = dist.len();
        if i == k {
            let c = f.iter().copied().min().unwrap_or(INF);
            if c < *best {
                *best = c;
                *best_order = Some(order.clone());
            }
            return;
        }
        for j in 0..k {
            if used[j] {
                continue;
            }
            let g: Vec<u64> = dag.levels[i]
                .iter()
                .map(|&v| {
                    let p = if i == 0 { 0 } else { dag.preds[v].iter().map(|&q| f[q]).min().unwrap_or(INF) };
                    if p >= INF || dist[j][v] >= INF {
                        INF
                    } else {
                        p + dist[j][v]
                    }
                })
                .collect();
            if g.iter().copied().min().unwrap_or(INF) >= *best {
                continue;
            }
            used[j] = true;
            order.push(j);
            rec(dag, dist, &g, order, used, best, best_order);
            order.pop();
            used[j] = false;
        }
    }

    rec(dag, dist, &[], &mut order, &mut used, &mut best, &mut best_order);
    let order = best_order?;
    let (cost, path) = dag.cheapest_path(|i, v| dist[order[i]][v])?;
    debug_assert_eq!(cost, best);
    Some(Optimum { cost, order, path })
}

/// Dynamic program over (set of used tokens, vertex of the last level).
/// Same optimum as the permutation enumeration.
fn subset_dp(dag: &LevelDag, dist: &[Vec<u64>]) -> Option<Optimum> {
    let k = dist.len();
    let full = (1usize << k) - 1;
    // f[mask] is indexed by vertex position in level popcount(mask)-1
    let mut f: Vec<Vec<u32>> = vec![Vec::new(); 1 << k];
    const UINF: u32 = u32::MAX;
    let clamp = |x: u64| if x >= INF { UINF } else { x.min(UINF as u64 - 1) as u32 };
    for j in 0..k {
        f[1 << j] = dag.levels[0].iter().map(|&v| clamp(dist[j][v])).collect();
    }
    for mask in 1..=full {
        let i = mask.count_ones() as usize;
        if f[mask].is_empty() || i == k {
            continue;
        }
        let cur = std::mem::take(&mut f[mask]);
        for j in 0..k {
            if mask & (1 << j) != 0 {
                continue;
            }
            let nm = mask | (1 << j);
            let next: Vec<u32> = dag.levels[i]
                .iter()
                .map(|&v| {
                    let p = dag.preds[v].iter().map(|&q| cur[q]).min().unwrap_or(UINF);
                    let d = clamp(dist[j][v]);
                    if p == UINF || d == UINF {
                        UINF
                    } else {
                        p.saturating_add(d).min(UINF - 1)
                    }
                })
                .collect();
            if f[nm].is_empty() {
                f[nm] = next;
            } else {
                for (a, b) in f[nm].iter_mut().zip(next) {
                    *a = (*a).min(b);
                }
            }
        }
        f[mask] = cur;
    }
    let best = *f[full].iter().min()?;
    if best == UINF {
        return None;
    }
    // walk back from the last level
    let mut order = vec![0; k];
    let mut mask = full;
    let mut x = f[full].iter().position(|&c| c == best)?;
    let mut cur = best;
    for i in (0..k).rev() {
        let v = dag.levels[i][x];
        let mut step = None;
        for j in (0..k).filter(|&j| mask & (1 << j) != 0) {
            let d = clamp(dist[j][v]);
            if d == UINF || d > cur {
                continue;
            }
            let pm = mask & !(1 << j);
            if i == 0 {
                if d == cur {
                    step = Some((j, 0));
                    break;
                }
            } else if let Some(&q) = dag.preds[v].iter().find(|&&q| f[pm].get(q) == Some(&(cur - d))) {
                step = Some((j, q));
                break;
            }
        }
        let (j, q) = step?;
        order[i] = j;
        cur -= clamp(dist[j][v]);
        mask &= !(1 << j);
        x = q;
    }
    let (cost, path) = dag.cheapest_path(|i, v| dist[order[i]][v])?;
    debug_assert_eq!(cost, best as u64);
    Some(Optimum { cost, order, path })
}

fn result_from_optimum(inst: &DiscoveryInstance, opt: &Optimum, solver: &'static str) -> SolveResult {
    let cost = opt.cost as usize;
    if cost > inst.budget() {
        return SolveResult::no_with_cost(solver, cost);
    }
    let from: Vec<usize> = opt.order.iter().map(|&j| inst.start().elements()[j]).collect();
    let sch = realize_assignment(inst.graph(), ElementKind::Vertex, &from, &opt.path).expect("finite distances");
    debug_assert!(validate_schedule(inst, &sch).valid);
    SolveResult::yes(solver, cost, true, sch)
}

/// Exact minimum sliding cost by enumerating the token of every level.
/// Permutations for k up to [`PERMUTATION_LIMIT`], a subset DP beyond that.
pub fn solve_spd_sliding_fpt_k(inst: &DiscoveryInstance) -> Result<SolveResult> {
    let (s, t) = check_spd(inst)?;
    if inst.model() != Model::Sliding {
        return Err(Error::Input("expected the sliding model".into()));
    }
    let g = inst.graph();
    let dag = LevelDag::new(g, s, t)?;
    let k = inst.k();
    if k != dag.levels.len() {
        return Err(Error::Input(format!("need {} tokens, have {k}", dag.levels.len())));
    }
    let dist = token_distances(g, inst.start().elements())?;
    let opt = if k <= PERMUTATION_LIMIT {
        enumerate_permutations(&dag, &dist)
    } else if k <= SUBSET_DP_LIMIT {
        subset_dp(&dag, &dist)
    } else {
        return Err(Error::Input(format!("k = {k} is beyond the exact enumeration limit")));
    };
    Ok(match opt {
        Some(o) => result_from_optimum(inst, &o, "spd-fpt-k"),
        // tokens in other components can never reach the path
        None => SolveResult::no("spd-fpt-k"),
    })
}

/// Same as [`solve_spd_sliding_fpt_k`] but always through the subset DP.
pub fn solve_spd_sliding_subset_dp(inst: &DiscoveryInstance) -> Result<SolveResult> {
    let (s, t) = check_spd(inst)?;
    let dag = LevelDag::new(inst.graph(), s, t)?;
    if inst.k() > SUBSET_DP_LIMIT {
        return Err(Error::Input("k beyond the subset DP limit".into()));
    }
    let dist = token_distances(inst.graph(), inst.start().elements())?;
    Ok(match subset_dp(&dag, &dist) {
        Some(o) => result_from_optimum(inst, &o, "spd-subset-dp"),
        None => SolveResult::no("spd-subset-dp"),
    })
}

/// Level statistics used by the budget-parameterized algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    /// On-path tokens per level.
    pub tokens: Vec<Vec<usize>>,
    /// Token indices not on any shortest s-t path.
    pub off_path: Vec<usize>,
    pub empty_levels: usize,
    pub crowded_levels: usize,
    pub bad_levels: Vec<usize>,
    /// Token indices that never move in some optimal discovery of cost <= b.
    pub fixed: Vec<usize>,
}

/// Classify levels: very bad (empty or crowded), bad (single token not
/// adjacent to a single-token neighbor level) and good. Tokens deep inside
/// runs of good levels are fixed.
pub fn classify_levels(g: &Graph, dag: &LevelDag, start: &[usize], b: usize) -> LevelReport {
    let d = dag.levels.len();
    let mut tokens = vec![Vec::new(); d];
    let mut off_path = Vec::new();
    for (j, &v) in start.iter().enumerate() {
        match dag.pos[v] {
            Some((i, _)) => tokens[i].push(j),
            None => off_path.push(j),
        }
    }
    let single = |i: usize| (tokens[i].len() == 1).then(|| start[tokens[i][0]]);
    let mut bad = vec![false; d];
    for i in 0..d {
        let Some(v) = single(i) else { continue };
        let left = i > 0 && single(i - 1).is_some_and(|u| !g.has_edge(u, v));
        let right = i + 1 < d && single(i + 1).is_some_and(|w| !g.has_edge(v, w));
        bad[i] = left || right;
    }
    let good: Vec<bool> = (0..d).map(|i| tokens[i].len() == 1 && !bad[i]).collect();
    let mut fixed = Vec::new();
    let mut i = 0;
    while i < d {
        if !good[i] {
            i += 1;
            continue;
        }
        let mut j = i;
        while j < d && good[j] {
            j += 1;
        }
        // run occupies levels i..j, positions 1..=l
        let l = j - i;
        for x in 1..=l {
            if x > b && x + b <= l {
                fixed.push(tokens[i + x - 1][0]);
            }
        }
        i = j;
    }
    LevelReport {
        empty_levels: tokens.iter().filter(|t| t.is_empty()).count(),
        crowded_levels: tokens.iter().filter(|t| t.len() >= 2).count(),
        bad_levels: (0..d).filter(|&i| bad[i]).collect(),
        tokens,
        off_path,
        fixed,
    }
}

/// Budget-parameterized exact solver: kernelize to the tokens that can move,
/// then enumerate moving subsets of size at most b and complete each by a DP
/// over the levels the stationary tokens leave open.
pub fn solve_spd_sliding_fpt_b(inst: &DiscoveryInstance) -> Result<SolveResult> {
    const SOLVER: &str = "spd-fpt-b";
    let (s, t) = check_spd(inst)?;
    if inst.model() != Model::Sliding {
        return Err(Error::Input("expected the sliding model".into()));
    }
    let inst = &normalize_budget(inst);
    let g = inst.graph();
    let b = inst.budget();
    let dag = LevelDag::new(g, s, t)?;
    let start = inst.start().elements();
    let rep = classify_levels(g, &dag, start, b);
    // each empty level needs a token moved in, each crowded level a token
    // moved out, and a moved token repairs at most three bad levels
    if rep.empty_levels > b || rep.crowded_levels > b || rep.bad_levels.len() > 3 * b || rep.off_path.len() > b {
        return Ok(SolveResult::no(SOLVER));
    }
    let dist = token_distances(g, start)?;
    let k = start.len();
    let mut is_fixed = vec![false; k];
    for &j in &rep.fixed {
        is_fixed[j] = true;
    }
    let mut forced = vec![false; k];
    for &j in &rep.off_path {
        forced[j] = true;
    }
    let candidates: Vec<usize> = (0..k).filter(|&j| !is_fixed[j] && !forced[j]).collect();
    let forced: Vec<usize> = (0..k).filter(|&j| forced[j]).collect();

    let mut best: Option<(u64, Vec<usize>, Vec<usize>)> = None; // cost, order, path
    let mut chosen: Vec<usize> = Vec::new();
    let mut explored = 0u64;
    let extra = b - forced.len();
    // iterative subset enumeration over candidates, size <= extra
    fn subsets(n: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        let mut cur = Vec::new();
        fn go(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            f(cur);
            if cur.len() == max {
                return;
            }
            for x in i..n {
                cur.push(x);
                go(x + 1, n, max, cur, f);
                cur.pop();
            }
        }
        go(0, n, max, &mut cur, f);
    }
    subsets(candidates.len(), extra, &mut |sub: &[usize]| {
        explored += 1;
        chosen.clear();
        chosen.extend(forced.iter().copied());
        chosen.extend(sub.iter().map(|&x| candidates[x]));
        if let Some((c, order, path)) = complete_with_movers(g, &dag, &dist, start, &chosen, b as u64) {
            if best.as_ref().is_none_or(|(bc, _, _)| c < *bc) {
                best = Some((c, order, path));
            }
        }
    });
    let mut res = match best {
        Some((cost, order, path)) => {
            result_from_optimum(inst, &Optimum { cost, order, path }, SOLVER)
        }
        None => SolveResult::no(SOLVER),
    };
    res.states_explored = Some(explored);
    Ok(res)
}

/// Tokens outside `movers` stay; movers fill the remaining levels. Returns
/// the cheapest completion (cost <= cap) as (cost, token per level, path).
fn complete_with_movers(
    g: &Graph,
    dag: &LevelDag,
    dist: &[Vec<u64>],
    start: &[usize],
    movers: &[usize],
    cap: u64,
) -> Option<(u64, Vec<usize>, Vec<usize>)> {
    let d = dag.levels.len();
    let k = start.len();
    let mut is_mover = vec![false; k];
    for &j in movers {
        is_mover[j] = true;
    }
    let mut stay: Vec<Option<usize>> = vec![None; d];
    for j in 0..k {
        if is_mover[j] {
            continue;
        }
        let (i, _) = dag.pos[start[j]]?;
        if stay[i].is_some() {
            return None;
        }
        stay[i] = Some(j);
    }
    for i in 1..d {
        if let (Some(a), Some(b)) = (stay[i - 1], stay[i]) {
            if !g.has_edge(start[a], start[b]) {
                return None;
            }
        }
    }
    let free: Vec<usize> = (0..d).filter(|&i| stay[i].is_none()).collect();
    let m = movers.len();
    if free.len() != m {
        return None;
    }
    // DP over levels with state (vertex index, mask of movers used)
    let width = 1usize << m;
    let mut f: Vec<Vec<u64>> = Vec::with_capacity(d);
    for i in 0..d {
        let lv = &dag.levels[i];
        let mut fi = vec![INF; lv.len() * width];
        for (x, &v) in lv.iter().enumerate() {
            let pred_best = |mask: usize| -> u64 {
                if i == 0 {
                    return if mask == 0 { 0 } else { INF };
                }
                dag.preds[v].iter().map(|&q| f[i - 1][q * width + mask]).min().unwrap_or(INF)
            };
            match stay[i] {
                Some(j) => {
                    if start[j] != v {
                        continue;
                    }
                    for mask in 0..width {
                        fi[x * width + mask] = pred_best(mask);
                    }
                }
                None => {
                    for mask in 0..width {
                        let p = pred_best(mask);
                        if p >= INF {
                            continue;
                        }
                        for (r, &j) in movers.iter().enumerate() {
                            if mask & (1 << r) != 0 || dist[j][v] >= INF {
                                continue;
                            }
                            let c = p + dist[j][v];
                            if c <= cap {
                                let slot = &mut fi[x * width + (mask | (1 << r))];
                                *slot = (*slot).min(c);
                            }
                        }
                    }
                }
            }
        }
        f.push(fi);
    }
    let full = width - 1;
    let last = d - 1;
    let (best, mut x) = (0..dag.levels[last].len()).map(|x| (f[last][x * width + full], x)).min()?;
    if best > cap {
        return None;
    }
    // backtrack
    let mut order = vec![0; d];
    let mut path = vec![0; d];
    let mut mask = full;
    for i in (0..d).rev() {
        let v = dag.levels[i][x];
        path[i] = v;
        let cur = f[i][x * width + mask];
        let prev_cost;
        match stay[i] {
            Some(j) => {
                order[i] = j;
                prev_cost = cur;
            }
            None => {
                let (r, j) = movers
                    .iter()
                    .enumerate()
                    .find(|&(r, &j)| {
                        mask & (1 << r) != 0 && dist[j][v] < INF && {
                            let pm = mask & !(1 << r);
                            let p = if i == 0 {
                                if pm == 0 { 0 } else { INF }
                            } else {
                                dag.preds[v].iter().map(|&q| f[i - 1][q * width + pm]).min().unwrap_or(INF)
                            };
                            p < INF && p + dist[j][v] == cur
                        }
                    })
                    .map(|(r, &j)| (r, j))?;
                order[i] = j;
                mask &= !(1 << r);
                prev_cost = cur - dist[j][v];
            }
        }
        if i > 0 {
            x = *dag.preds[v].iter().find(|&&q| f[i - 1][q * width + mask] == prev_cost)?;
        }
    }
    Some((best, order, path))
}

/// Shortest s-t path with at most `b` blue vertices, s and t included,
/// where k counts the path's vertices.
pub fn red_blue_shortest_path(g: &Graph, rb: &Coloring, s: usize, t: usize, k: usize, b: usize) -> RedBlueOutcome {
    let none = RedBlueOutcome { decision: false, min_blue: None, witness: None };
    let Ok(dag) = LevelDag::new(g, s, t) else { return none };
    if dag.levels.len() != k {
        return none;
    }
    match dag.cheapest_path(|_, v| u64::from(rb.color_of(v) == BLUE)) {
        None => none,
        Some((blue, path)) => {
            let blue = blue as usize;
            RedBlueOutcome { decision: blue <= b, min_blue: Some(blue), witness: Some(path) }
        }
    }
}

/// Jumping or exact-size addition/removal through the red-blue reduction.
pub fn solve_spd_jumping_addrem(inst: &DiscoveryInstance) -> Result<SolveResult> {
    const SOLVER: &str = "spd-red-blue";
    let (s, t) = check_spd(inst)?;
    let inst = &normalize_budget(inst);
    let (b, per) = match inst.model() {
        Model::Jumping => (inst.budget(), 1),
        Model::AddRemove => (inst.budget() / 2, 2),
        Model::Sliding => return Err(Error::Input("sliding uses the level DAG solvers".into())),
    };
    let out = red_blue_shortest_path(inst.graph(), &start_coloring(inst), s, t, inst.k(), b);
    Ok(match (out.decision, out.min_blue, out.witness) {
        (true, Some(blue), Some(path)) => {
            let sch = if inst.model() == Model::Jumping {
                jump_schedule(inst.start().elements(), &path)
            } else {
                add_remove_schedule(inst.start().elements(), &path)
            };
            SolveResult::yes(SOLVER, blue * per, true, sch)
        }
        (false, Some(blue), _) => SolveResult::no_with_cost(SOLVER, blue * per),
        _ => SolveResult::no(SOLVER),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Configuration;
    use crate::oracle::oracle_min_cost;

    // 4-cycle s=0, a=1, t=2, b=3
    fn c4() -> Graph {
        Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn spd(g: Graph, s: usize, t: usize, start: Vec<usize>, model: Model, b: usize) -> DiscoveryInstance {
        DiscoveryInstance::new(
            g,
            Problem::ShortestPath { s, t },
            model,
            Configuration::new(ElementKind::Vertex, start).unwrap(),
            b,
        )
        .unwrap()
    }

    #[test]
    fn dag_arcs_join_consecutive_levels() {
        let g = c4();
        let dag = LevelDag::new(&g, 0, 2).unwrap();
        for (u, v) in dag.arcs() {
            assert_eq!(dag.pos[u].unwrap().0 + 1, dag.pos[v].unwrap().0);
        }
        assert_eq!(dag.arcs().len(), 4);
    }

    #[test]
    fn four_cycle() {
        let i = spd(c4(), 0, 2, vec![0, 1, 3], Model::Sliding, 5);
        let r = solve_spd_sliding_fpt_k(&i).unwrap();
        assert_eq!(r.cost, Some(1));
        assert_eq!(oracle_min_cost(&i).unwrap().cost, Some(1));
        assert!(validate_schedule(&i, r.schedule.as_ref().unwrap()).valid);
        assert!(solve_spd_sliding_fpt_b(&i.clone().with_budget(1)).unwrap().decision);
        assert!(!solve_spd_sliding_fpt_b(&i.clone().with_budget(0)).unwrap().decision);
        let r = solve_spd_sliding_subset_dp(&i).unwrap();
        assert_eq!(r.cost, Some(1));
    }

    #[test]
    fn already_a_path() {
        let i = spd(c4(), 0, 2, vec![0, 1, 2], Model::Sliding, 0);
        assert_eq!(solve_spd_sliding_fpt_k(&i).unwrap().cost, Some(0));
        assert!(solve_spd_sliding_fpt_b(&i).unwrap().decision);
        let j = i.clone().with_model(Model::Jumping);
        assert_eq!(solve_spd_jumping_addrem(&j).unwrap().cost, Some(0));
    }

    #[test]
    fn empty_levels_reject() {
        // path 0..5, tokens bunched at the start: 3 empty levels
        let extra = Graph::new(9, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (6, 7), (7, 8)]).unwrap();
        let i = spd(extra, 0, 5, vec![0, 1, 2, 6, 7, 8], Model::Sliding, 2);
        let dag = LevelDag::new(i.graph(), 0, 5).unwrap();
        let rep = classify_levels(i.graph(), &dag, i.start().elements(), 2);
        assert_eq!(rep.empty_levels, 3);
        assert!(!solve_spd_sliding_fpt_b(&i).unwrap().decision);
    }

    #[test]
    fn jumping_four_cycle() {
        let i = spd(c4(), 0, 2, vec![0, 1, 3], Model::Jumping, 1);
        assert!(solve_spd_jumping_addrem(&i).unwrap().decision);
        assert!(!solve_spd_jumping_addrem(&i.clone().with_budget(0)).unwrap().decision);
    }

    #[test]
    fn red_blue_examples() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let red = Coloring::new(ElementKind::Vertex, 2, vec![0; 4]).unwrap();
        assert!(red_blue_shortest_path(&g, &red, 0, 3, 4, 0).decision);
        let two_blue = Coloring::new(ElementKind::Vertex, 2, vec![0, 1, 1, 0]).unwrap();
        assert!(!red_blue_shortest_path(&g, &two_blue, 0, 3, 4, 1).decision);
        // two parallel paths 0-1-3 and 0-2-3, the second all red
        let g = Graph::new(4, vec![(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let c = Coloring::new(ElementKind::Vertex, 2, vec![0, 1, 0, 0]).unwrap();
        let out = red_blue_shortest_path(&g, &c, 0, 3, 3, 0);
        assert!(out.decision);
        assert_eq!(out.witness, Some(vec![0, 2, 3]));
    }
}
