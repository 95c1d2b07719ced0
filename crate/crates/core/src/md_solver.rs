//! Matching discovery.
//!
//! Sliding: guess the moving tokens and how the budget splits over them,
//! restrict each moving token to a small candidate set of destinations in
//! its reach graph, and search the candidates exhaustively. Jumping and
//! exact-size addition/removal go through red-blue matching; relaxed
//! addition/removal just deletes tokens.

use rustc_hash::FxHashSet;

use crate::engines::{max_cardinality_matching, max_weight_matching, min_cost_assignment};
use crate::error::{Error, Result};
use crate::graph::{multi_source_bfs, Coloring, Dist, ElementKind, Graph, WeightMap};
use crate::instance::{normalize_budget, DiscoveryInstance, Model, Problem, Schedule, SolveResult};
use crate::oracle::distance_matrix;
use crate::realize::{add_remove_schedule, assignment_schedule, jump_schedule};
use crate::std_solver::{start_coloring, RedBlueOutcome, RED};

/// Vertices at slide distance r-1 (Y) and r (Z) from a token and the edges
/// of G[Y u Z] minus those inside Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenReach {
    pub token: usize,
    pub r: usize,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
    /// Edge ids of G.
    pub edges: Vec<usize>,
}

/// Slides a token on `token` needs before it touches each vertex.
pub fn touch_distances(g: &Graph, token: usize) -> Vec<Dist> {
    let (a, b) = g.endpoints(token);
    multi_source_bfs(g, &[a, b])
}

fn reach_from(g: &Graph, token: usize, r: usize, d: &[Dist]) -> TokenReach {
    if r == 0 {
        let (a, b) = g.endpoints(token);
        return TokenReach { token, r, y: vec![a, b], z: vec![], edges: vec![token] };
    }
    let y: Vec<usize> = (0..g.vertex_count()).filter(|&v| d[v] == Some(r - 1)).collect();
    let z: Vec<usize> = (0..g.vertex_count()).filter(|&v| d[v] == Some(r)).collect();
    let edges = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            match (d[u], d[v]) {
                (Some(a), Some(b)) => a.min(b) + 1 == r && a.max(b) <= r,
                _ => false,
            }
        })
        .collect();
    TokenReach { token, r, y, z, edges }
}

/// Reach sets of `token` at radius `r`. Radius 0 is the token's own edge.
pub fn compute_token_reach(g: &Graph, token: usize, r: usize) -> Result<TokenReach> {
    g.check_edge(token)?;
    Ok(reach_from(g, token, r, &touch_distances(g, token)))
}

/// Slides sufficient for any yes-instance with k tokens.
pub fn md_budget_upper_bound(k: usize) -> usize {
    2 * (k * k + k)
}

/// How destinations are restricted in the sliding search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateMode {
    /// Small candidate sets from maximum matchings and vertex covers.
    Restricted,
    /// Every reach-graph edge. Only for testing the restriction.
    Full,
}

fn check_md(inst: &DiscoveryInstance) -> Result<()> {
    if inst.problem() != Problem::Matching {
        return Err(Error::Input("not a matching instance".into()));
    }
    Ok(())
}

/// Candidate destinations among `edges` (already free of blocked vertices).
fn candidates(g: &Graph, edges: &[usize], k: usize, mode: CandidateMode) -> Vec<usize> {
    if mode == CandidateMode::Full || edges.len() <= (4 * k).saturating_sub(2) * (2 * k + 2) {
        return edges.to_vec();
    }
    let keep: Vec<bool> = {
        let mut v = vec![false; g.edge_count()];
        for &e in edges {
            v[e] = true;
        }
        v
    };
    let (sub, map) = g.edge_subgraph(|e| keep[e]);
    let m: Vec<usize> = max_cardinality_matching(&sub).into_iter().map(|e| map[e]).collect();
    if m.len() + 1 >= 2 * k {
        // some edge of any 2k-1 matching edges stays free of the others
        return m[..2 * k - 1].to_vec();
    }
    // V(M) is a vertex cover; keep up to 2k+1 edges at each cover vertex
    let mut out = m.clone();
    let mut cover = vec![false; g.vertex_count()];
    for &e in &m {
        let (u, v) = g.endpoints(e);
        cover[u] = true;
        cover[v] = true;
    }
    let mut per = vec![0usize; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        for x in [u, v] {
            if cover[x] && per[x] < 2 * k + 1 {
                per[x] += 1;
                out.push(e);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Weak compositions of `r` into `parts` parts, in lexicographic order.
fn compositions(r: usize, parts: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() + 1 == parts {
            cur.push(left);
            let stop = f(cur);
            cur.pop();
            return stop;
        }
        for x in 0..=left {
            cur.push(x);
            let stop = go(left - x, parts, cur, f);
            cur.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if parts == 0 {
        return r == 0 && f(&[]);
    }
    go(r, parts, &mut Vec::with_capacity(parts), f)
}

/// Pick one candidate per token, pairwise vertex-disjoint.
fn combine(g: &Graph, cands: &[Vec<usize>], used: &mut Vec<bool>, pick: &mut Vec<usize>) -> bool {
    let i = pick.len();
    if i == cands.len() {
        return true;
    }
    for &e in &cands[i] {
        let (u, v) = g.endpoints(e);
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        pick.push(e);
        if combine(g, cands, used, pick) {
            return true;
        }
        pick.pop();
        used[u] = false;
        used[v] = false;
    }
    false
}

/// Sliding matching discovery, exact cost. The budget is first clamped to
/// [`md_budget_upper_bound`].
pub fn solve_md_sliding_fpt(inst: &DiscoveryInstance) -> Result<SolveResult> {
    solve_md_sliding_fpt_with(inst, CandidateMode::Restricted)
}

pub fn solve_md_sliding_fpt_with(inst: &DiscoveryInstance, mode: CandidateMode) -> Result<SolveResult> {
    const SOLVER: &str = "md-fpt";
    check_md(inst)?;
    if inst.model() != Model::Sliding {
        return Err(Error::Input("expected the sliding model".into()));
    }
    let g = inst.graph();
    let start = inst.start().elements();
    let k = start.len();
    if k > 20 {
        return Err(Error::Input("too many tokens for subset enumeration".into()));
    }
    let bmax = inst.budget().min(md_budget_upper_bound(k)).min(k * g.vertex_count());
    let touch: Vec<Vec<Dist>> = start.iter().map(|&e| touch_distances(g, e)).collect();
    let mut explored = 0u64;
    for r in 0..=bmax {
        for sub in 0u32..(1 << k) {
            let movers: Vec<usize> = (0..k).filter(|&i| sub & (1 << i) != 0).collect();
            if r > 0 && movers.is_empty() {
                continue;
            }
            // stationary tokens must already be pairwise disjoint
            let mut blocked = vec![false; g.vertex_count()];
            let mut ok = true;
            for i in (0..k).filter(|&i| sub & (1 << i) == 0) {
                let (u, v) = g.endpoints(start[i]);
                if blocked[u] || blocked[v] {
                    ok = false;
                    break;
                }
                blocked[u] = true;
                blocked[v] = true;
            }
            if !ok {
                continue;
            }
            let mut found: Option<Vec<usize>> = None;
            compositions(r, movers.len(), &mut |comp: &[usize]| {
                explored += 1;
                let mut cands = Vec::with_capacity(movers.len());
                for (idx, &i) in movers.iter().enumerate() {
                    let reach = reach_from(g, start[i], comp[idx], &touch[i]);
                    let free: Vec<usize> = reach
                        .edges
                        .into_iter()
                        .filter(|&e| {
                            let (u, v) = g.endpoints(e);
                            !blocked[u] && !blocked[v]
                        })
                        .collect();
                    if free.is_empty() {
                        return false;
                    }
                    cands.push(candidates(g, &free, k, mode));
                }
                let mut used = blocked.clone();
                let mut pick = Vec::new();
                if combine(g, &cands, &mut used, &mut pick) {
                    let mut target: Vec<usize> = (0..k).filter(|&i| sub & (1 << i) == 0).map(|i| start[i]).collect();
                    target.extend(pick);
                    target.sort_unstable();
                    found = Some(target);
                    return true;
                }
                false
            });
            if let Some(target) = found {
                let (cost, sch) = assignment_schedule(g, ElementKind::Edge, start, &target)?
                    .expect("targets lie within reach");
                debug_assert!(cost <= r);
                let mut res = SolveResult::yes(SOLVER, cost, true, sch);
                res.states_explored = Some(explored);
                return Ok(res);
            }
        }
    }
    let mut res = SolveResult::no(SOLVER);
    res.states_explored = Some(explored);
    Ok(res)
}

/// Exact sliding cost by branch and bound over assignments: the Hungarian
/// assignment of tokens to distinct edges is a lower bound. When two chosen
/// edges meet at a vertex x, branch on which edge at x may stay allowed
/// (the vertex with the fewest allowed edges is picked).
pub fn solve_md_sliding_bnb(inst: &DiscoveryInstance) -> Result<SolveResult> {
    md_bnb(inst, false)
}

/// Decision version of [`solve_md_sliding_bnb`]: stops at the first
/// matching within the budget, so a yes carries an upper bound on the cost
/// and a no carries no cost. Much faster than the exact search.
pub fn solve_md_sliding_bnb_decide(inst: &DiscoveryInstance) -> Result<SolveResult> {
    md_bnb(inst, true)
}

fn md_bnb(inst: &DiscoveryInstance, decide: bool) -> Result<SolveResult> {
    const SOLVER: &str = "md-bnb";
    check_md(inst)?;
    if inst.model() != Model::Sliding {
        return Err(Error::Input("expected the sliding model".into()));
    }
    let g = inst.graph();
    let start = inst.start().elements();
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let dist = distance_matrix(g, ElementKind::Edge, start, &all)?;
    let m = g.edge_count();
    let n = g.vertex_count();
    let cap = if decide { inst.budget() as u64 } else { u64::MAX };
    let bound = |forbidden: &[bool]| {
        let cost: Vec<Vec<Option<u64>>> = dist
            .iter()
            .map(|row| row.iter().enumerate().map(|(e, d)| if forbidden[e] { None } else { d.map(|x| x as u64) }).collect())
            .collect();
        min_cost_assignment(&cost)
    };
    let mut seen: FxHashSet<Vec<bool>> = FxHashSet::default();
    let mut best: Option<(u64, Vec<usize>)> = None;
    let root = vec![false; m];
    // node: forbidden edges, vertex prices inherited from the parent
    let mut stack: Vec<(Vec<bool>, Vec<u64>)> = vec![(root, vec![0; n])];
    let mut explored = 0u64;
    while let Some((forbidden, mut prices)) = stack.pop() {
        explored += 1;
        let Some((h, assign)) = bound(&forbidden) else { continue };
        let incumbent = best.as_ref().map_or(u64::MAX, |b| b.0);
        let mut used = vec![0u8; n];
        for &e in &assign {
            let (u, v) = g.endpoints(e);
            used[u] += 1;
            used[v] += 1;
        }
        let allowed_at = |x: usize| g.neighbors(x).iter().map(|&(_, e)| e).filter(|&e| !forbidden[e]);
        let conflict = (0..n).filter(|&x| used[x] > 1).min_by_key(|&x| allowed_at(x).count());
        if h >= incumbent || h > cap {
            continue;
        }
        let Some(x) = conflict else {
            best = Some((h, assign));
            if decide {
                break;
            }
            continue;
        };
        let lb = lagrangian_bound(g, &dist, &forbidden, &mut prices, LAGRANGE_ROUNDS);
        if lb >= incumbent || lb > cap {
            continue;
        }
        let here: Vec<usize> = allowed_at(x).collect();
        for &keep in here.iter().rev() {
            let mut f = forbidden.clone();
            for &e in &here {
                f[e] = e != keep;
            }
            if seen.insert(f.clone()) {
                stack.push((f, prices.clone()));
            }
        }
    }
    let mut res = match best {
        None => SolveResult::no(SOLVER),
        Some((c, assign)) => {
            let c = c as usize;
            if c > inst.budget() {
                SolveResult::no_with_cost(SOLVER, c)
            } else {
                let mut target = assign;
                target.sort_unstable();
                let (cost, sch) = assignment_schedule(g, ElementKind::Edge, start, &target)?.expect("finite");
                debug_assert_eq!(cost, c);
                SolveResult::yes(SOLVER, cost, !decide, sch)
            }
        }
    };
    res.states_explored = Some(explored);
    Ok(res)
}

const LAGRANGE_SCALE: u64 = 16;
const LAGRANGE_ROUNDS: usize = 12;

/// Lower bound from relaxing "at most one chosen edge per vertex" with
/// prices: the Hungarian cost under edge costs d + price(u) + price(v),
/// minus the summed prices. Prices (in 1/LAGRANGE_SCALE slides) take
/// subgradient steps and are left in `prices` for the children.
fn lagrangian_bound(g: &Graph, dist: &[Vec<Dist>], forbidden: &[bool], prices: &mut [u64], rounds: usize) -> u64 {
    let n = g.vertex_count();
    let mut best = 0u64;
    for round in 0..rounds {
        let cost: Vec<Vec<Option<u64>>> = dist
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(e, d)| {
                        if forbidden[e] {
                            return None;
                        }
                        let (u, v) = g.endpoints(e);
                        d.map(|x| x as u64 * LAGRANGE_SCALE + prices[u] + prices[v])
                    })
                    .collect()
            })
            .collect();
        let Some((total, assign)) = min_cost_assignment(&cost) else { return u64::MAX };
        let value = total as i64 - prices.iter().sum::<u64>() as i64;
        if value > 0 {
            best = best.max((value as u64).div_ceil(LAGRANGE_SCALE));
        }
        let mut used = vec![0i64; n];
        for &e in &assign {
            let (u, v) = g.endpoints(e);
            used[u] += 1;
            used[v] += 1;
        }
        let step = (LAGRANGE_SCALE >> (round / 4)).max(1) as i64;
        let mut moved = false;
        for x in 0..n {
            let p = (prices[x] as i64 + step * (used[x] - 1)).max(0) as u64;
            moved |= p != prices[x];
            prices[x] = p;
        }
        if !moved {
            break;
        }
    }
    best
}

/// Size-k matching using at most `b` blue edges, via apex padding and a
/// maximum weight matching (red m+1, blue and apex edges m).
pub fn red_blue_matching(g: &Graph, rb: &Coloring, k: usize, b: usize) -> RedBlueOutcome {
    let none = RedBlueOutcome { decision: false, min_blue: None, witness: None };
    let n = g.vertex_count();
    if 2 * k > n {
        return none;
    }
    if k == 0 {
        return RedBlueOutcome { decision: true, min_blue: Some(0), witness: Some(vec![]) };
    }
    if max_cardinality_matching(g).len() < k {
        return none;
    }
    let m = g.edge_count() as u64;
    let apex = n - 2 * k;
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut w: Vec<u64> = (0..g.edge_count()).map(|e| if rb.color_of(e) == RED { m + 1 } else { m }).collect();
    for a in 0..apex {
        for v in 0..n {
            edges.push((n + a, v));
            w.push(m);
        }
    }
    let aug = Graph::new_multi(n + apex, edges).expect("valid augmentation");
    let mm = max_weight_matching(&aug, &WeightMap::new(w).expect("small weights"));
    let mut chosen: Vec<usize> = mm.into_iter().filter(|&e| e < g.edge_count()).collect();
    chosen.sort_unstable();
    debug_assert_eq!(chosen.len(), k);
    let blue = chosen.iter().filter(|&&e| rb.color_of(e) != RED).count();
    RedBlueOutcome { decision: blue <= b, min_blue: Some(blue), witness: Some(chosen) }
}

fn red_blue_result(inst: &DiscoveryInstance, b: usize, per: usize, solver: &'static str) -> SolveResult {
    let out = red_blue_matching(inst.graph(), &start_coloring(inst), inst.k(), b);
    match (out.decision, out.min_blue, out.witness) {
        (true, Some(blue), Some(t)) => {
            let sch = if inst.model() == Model::Jumping {
                jump_schedule(inst.start().elements(), &t)
            } else {
                add_remove_schedule(inst.start().elements(), &t)
            };
            SolveResult::yes(solver, blue * per, true, sch)
        }
        (false, Some(blue), _) => SolveResult::no_with_cost(solver, blue * per),
        _ => SolveResult::no(solver),
    }
}

pub fn solve_md_jumping(inst: &DiscoveryInstance) -> Result<SolveResult> {
    check_md(inst)?;
    if inst.model() != Model::Jumping {
        return Err(Error::Input("expected the jumping model".into()));
    }
    let inst = &normalize_budget(inst);
    Ok(red_blue_result(inst, inst.budget(), 1, "md-red-blue"))
}

/// Addition/removal where the final matching keeps the start size.
pub fn solve_md_addrem_exact(inst: &DiscoveryInstance) -> Result<SolveResult> {
    check_md(inst)?;
    if inst.model() != Model::AddRemove {
        return Err(Error::Input("expected the add_remove model".into()));
    }
    let inst = &normalize_budget(inst);
    Ok(red_blue_result(inst, inst.budget() / 2, 2, "md-red-blue"))
}

/// Addition/removal with any final size: delete tokens outside a maximum
/// matching of the start edges.
pub fn solve_md_addrem_relaxed(inst: &DiscoveryInstance) -> Result<SolveResult> {
    const SOLVER: &str = "md-relaxed";
    check_md(inst)?;
    let g = inst.graph();
    let start = inst.start().elements();
    let mut keep = vec![false; g.edge_count()];
    for &e in start {
        keep[e] = true;
    }
    let (sub, map) = g.edge_subgraph(|e| keep[e]);
    let mm: Vec<usize> = max_cardinality_matching(&sub).into_iter().map(|e| map[e]).collect();
    let removals: Vec<usize> = start.iter().copied().filter(|e| !mm.contains(e)).collect();
    let cost = removals.len();
    Ok(if cost <= inst.budget() {
        SolveResult::yes(SOLVER, cost, true, Schedule::removals_then_additions(&removals, &[]))
    } else {
        SolveResult::no_with_cost(SOLVER, cost)
    })
}
