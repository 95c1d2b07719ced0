//! Spanning tree discovery.
//!
//! Sliding: rainbow minimum spanning tree on the multigraph H whose edges
//! are (edge of G, start token) pairs weighted by slide distance. Jumping and
//! addition/removal: minimum spanning tree with start edges free and all
//! other edges costing one.

use crate::engines::matroid::{minimum_spanning_tree, rainbow_mst};
use crate::error::{Error, Result};
use crate::graph::{edge_distances_from, Coloring, ElementKind, Graph, WeightMap};
use crate::instance::{normalize_budget, DiscoveryInstance, Model, Problem, SolveResult};
use crate::oracle::{oracle_min_cost, validate_schedule};
use crate::realize::{add_remove_schedule, jump_schedule, realize_assignment};

/// Red/blue palette indices.
pub const RED: usize = 0;
pub const BLUE: usize = 1;

/// The token/edge multigraph H.
pub struct TokenMultigraph {
    pub h: Graph,
    pub colors: Coloring,
    pub weights: WeightMap,
    /// H edge -> (edge of G, token index)
    pub origin: Vec<(usize, usize)>,
}

/// Builds H. Pairs whose slide distance is infinite are left out; `extra`
/// adds a per-edge term to the slide distance (used by the weighted variant).
pub fn token_multigraph(g: &Graph, start: &[usize], extra: impl Fn(usize) -> Result<u64>) -> Result<TokenMultigraph> {
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    let mut weights = Vec::new();
    let mut origin = Vec::new();
    for (i, &tok) in start.iter().enumerate() {
        let d = edge_distances_from(g, tok)?;
        for (e, de) in d.iter().enumerate() {
            if let Some(de) = de {
                edges.push(g.endpoints(e));
                colors.push(i);
                let w = extra(e)?
                    .checked_add(*de as u64)
                    .ok_or_else(|| Error::Overflow("edge weight".into()))?;
                weights.push(w);
                origin.push((e, i));
            }
        }
    }
    Ok(TokenMultigraph {
        h: Graph::new_multi(g.vertex_count(), edges)?,
        colors: Coloring::new(ElementKind::Edge, start.len().max(1), colors)?,
        weights: WeightMap::new(weights)?,
        origin,
    })
}

fn check_std(inst: &DiscoveryInstance, model: Model) -> Result<()> {
    if inst.problem() != Problem::SpanningTree {
        return Err(Error::Input("not a spanning tree instance".into()));
    }
    if inst.model() != model {
        return Err(Error::Input(format!("expected the {} model", model.name())));
    }
    Ok(())
}

/// Rainbow tree to (cost, schedule), with the schedule checked by replay.
fn tree_result(
    inst: &DiscoveryInstance,
    tm: &TokenMultigraph,
    tree: &[usize],
    solver: &'static str,
) -> SolveResult {
    let g = inst.graph();
    let start = inst.start().elements();
    let mut from = Vec::new();
    let mut to = Vec::new();
    let mut cost = 0;
    for &he in tree {
        let (e, i) = tm.origin[he];
        from.push(start[i]);
        to.push(e);
        cost += crate::graph::edge_slide_distance(g, start[i], e).unwrap().unwrap();
    }
    let decision = cost <= inst.budget();
    if !decision {
        return SolveResult::no_with_cost(solver, cost);
    }
    let mut sch = realize_assignment(g, ElementKind::Edge, &from, &to).expect("finite distances");
    if !validate_schedule(inst, &sch).valid {
        // should not happen; fall back to the oracle for a certificate
        if let Ok(SolveResult { schedule: Some(s), .. }) = oracle_min_cost(inst) {
            sch = s;
        }
    }
    SolveResult::yes(solver, cost, true, sch)
}

/// Exact minimum number of slides to some spanning tree.
pub fn solve_std_sliding(inst: &DiscoveryInstance) -> Result<SolveResult> {
    check_std(inst, Model::Sliding)?;
    let g = inst.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tm = token_multigraph(g, inst.start().elements(), |_| Ok(0))?;
    let tree = if g.vertex_count() <= 1 {
        Vec::new()
    } else {
        match rainbow_mst(&tm.h, &tm.colors, &tm.weights)? {
            Some((t, _)) => t,
            // a connected graph always has one: the tokens can reach any tree
            None => return Err(Error::Input("no rainbow spanning tree in H".into())),
        }
    };
    Ok(tree_result(inst, &tm, &tree, "std-rainbow-mst"))
}

/// Minimum-weight spanning tree discovery under edge weights `omega` (taken
/// from the instance weights): minimises the tree weight first, then slides.
pub fn solve_mstd_sliding(inst: &DiscoveryInstance) -> Result<SolveResult> {
    check_std(inst, Model::Sliding)?;
    let g = inst.graph();
    let omega = inst.weights().ok_or_else(|| Error::Input("weighted variant needs edge weights".into()))?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count() as u64;
    let n2 = n.checked_mul(n).ok_or_else(|| Error::Overflow("n^2".into()))?;
    // every composite weight and the sum over a tree must fit
    n2.checked_mul(omega.max())
        .and_then(|x| x.checked_add(n))
        .and_then(|x| x.checked_mul(n.max(1)))
        .ok_or_else(|| Error::Overflow("n^2 * max weight".into()))?;
    let tm = token_multigraph(g, inst.start().elements(), |e| Ok(n2 * omega.weight_of(e)))?;
    let tree = if g.vertex_count() <= 1 {
        Vec::new()
    } else {
        match rainbow_mst(&tm.h, &tm.colors, &tm.weights)? {
            Some((t, _)) => t,
            None => return Err(Error::Input("no rainbow spanning tree in H".into())),
        }
    };
    let mut res = tree_result(inst, &tm, &tree, "mstd-rainbow-mst");
    res.provenance.solver = "mstd-rainbow-mst";
    Ok(res)
}

/// Outcome of a red-blue search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedBlueOutcome {
    pub decision: bool,
    /// Fewest blue elements over all solutions, when any solution exists.
    pub min_blue: Option<usize>,
    pub witness: Option<Vec<usize>>,
}

/// Spanning tree with at most `b` blue edges. Edge colors use [`RED`] and
/// [`BLUE`].
pub fn red_blue_spanning_tree(g: &Graph, rb: &Coloring, k: usize, b: usize) -> RedBlueOutcome {
    let none = RedBlueOutcome { decision: false, min_blue: None, witness: None };
    if k + 1 != g.vertex_count().max(1) {
        return none;
    }
    let w = WeightMap::new(rb.colors().iter().map(|&c| u64::from(c == BLUE)).collect()).unwrap();
    match minimum_spanning_tree(g, &w) {
        None => none,
        Some((tree, blue)) => {
            let blue = blue as usize;
            RedBlueOutcome { decision: blue <= b, min_blue: Some(blue), witness: Some(tree) }
        }
    }
}

/// Color the start configuration red and everything else blue.
pub fn start_coloring(inst: &DiscoveryInstance) -> Coloring {
    let n = inst.graph().element_count(inst.kind());
    let mut c = vec![BLUE; n];
    for &x in inst.start().elements() {
        c[x] = RED;
    }
    Coloring::new(inst.kind(), 2, c).unwrap()
}

/// Jumping or exact-size addition/removal via red-blue spanning trees.
pub fn solve_std_jumping_addrem(inst: &DiscoveryInstance) -> Result<SolveResult> {
    if inst.problem() != Problem::SpanningTree {
        return Err(Error::Input("not a spanning tree instance".into()));
    }
    let inst = &normalize_budget(inst);
    let (b, per_swap, solver) = match inst.model() {
        Model::Jumping => (inst.budget(), 1, "std-red-blue"),
        Model::AddRemove => (inst.budget() / 2, 2, "std-red-blue"),
        Model::Sliding => return Err(Error::Input("sliding is solved by the rainbow reduction".into())),
    };
    let out = red_blue_spanning_tree(inst.graph(), &start_coloring(inst), inst.k(), b);
    Ok(match (out.decision, out.min_blue, out.witness) {
        (true, Some(blue), Some(tree)) => {
            let sch = if inst.model() == Model::Jumping {
                jump_schedule(inst.start().elements(), &tree)
            } else {
                add_remove_schedule(inst.start().elements(), &tree)
            };
            SolveResult::yes(solver, blue * per_swap, true, sch)
        }
        (false, Some(blue), _) => SolveResult::no_with_cost(solver, blue * per_swap),
        _ => SolveResult::no(solver),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Configuration;

    fn square_diag() -> Graph {
        Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    fn inst(g: Graph, start: Vec<usize>, model: Model, b: usize) -> DiscoveryInstance {
        DiscoveryInstance::new(g, Problem::SpanningTree, model, Configuration::new(ElementKind::Edge, start).unwrap(), b)
            .unwrap()
    }

    #[test]
    fn sliding_examples() {
        let r = solve_std_sliding(&inst(square_diag(), vec![0, 1, 2], Model::Sliding, 0)).unwrap();
        assert_eq!((r.decision, r.cost), (true, Some(0)));
        let i = inst(square_diag(), vec![0, 1, 4], Model::Sliding, 5);
        let r = solve_std_sliding(&i).unwrap();
        assert_eq!(r.cost, Some(1));
        assert!(validate_schedule(&i, r.schedule.as_ref().unwrap()).valid);
        let mut k4 = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                k4.push((u, v));
            }
        }
        // triangle 0-1-2 uses edges (0,1) (0,2) (1,2) = ids 0, 1, 3
        let r = solve_std_sliding(&inst(Graph::new(4, k4).unwrap(), vec![0, 1, 3], Model::Sliding, 5)).unwrap();
        assert_eq!(r.cost, Some(1));
        let r = solve_std_sliding(&inst(square_diag(), vec![0, 1, 4], Model::Sliding, 0)).unwrap();
        assert!(!r.decision);
    }

    #[test]
    fn h_gives_start_pairs_weight_zero() {
        let g = square_diag();
        let tm = token_multigraph(&g, &[0, 1, 4], |_| Ok(0)).unwrap();
        for (he, &(e, i)) in tm.origin.iter().enumerate() {
            if [0, 1, 4][i] == e {
                assert_eq!(tm.weights.weight_of(he), 0);
            }
        }
    }

    #[test]
    fn weighted_examples() {
        let w = WeightMap::new(vec![1, 1, 1, 1, 10]).unwrap();
        let i = inst(square_diag(), vec![0, 1, 2], Model::Sliding, 0).with_weights(w.clone()).unwrap();
        assert_eq!(solve_mstd_sliding(&i).unwrap().cost, Some(0));
        let i = inst(square_diag(), vec![0, 1, 4], Model::Sliding, 3).with_weights(w).unwrap();
        let r = solve_mstd_sliding(&i).unwrap();
        assert_eq!(r.cost, Some(1));
        assert!(validate_schedule(&i, r.schedule.as_ref().unwrap()).valid);
    }

    #[test]
    fn red_blue_examples() {
        let t = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let all_red = Coloring::new(ElementKind::Edge, 2, vec![RED, RED]).unwrap();
        assert!(red_blue_spanning_tree(&t, &all_red, 2, 0).decision);
        let one_blue = Coloring::new(ElementKind::Edge, 2, vec![RED, BLUE]).unwrap();
        assert!(!red_blue_spanning_tree(&t, &one_blue, 2, 0).decision);
        let mut k4 = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                k4.push((u, v));
            }
        }
        let g = Graph::new(4, k4).unwrap();
        // star at 0: edges 0, 1, 2
        let star = Coloring::new(ElementKind::Edge, 2, vec![RED, RED, RED, BLUE, BLUE, BLUE]).unwrap();
        assert!(red_blue_spanning_tree(&g, &star, 3, 0).decision);
    }

    #[test]
    fn jumping_and_addrem() {
        let r = solve_std_jumping_addrem(&inst(square_diag(), vec![0, 1, 4], Model::Jumping, 1)).unwrap();
        assert!(r.decision);
        let r = solve_std_jumping_addrem(&inst(square_diag(), vec![0, 1, 4], Model::AddRemove, 1)).unwrap();
        assert!(!r.decision);
        let i = inst(square_diag(), vec![0, 1, 4], Model::AddRemove, 2);
        let r = solve_std_jumping_addrem(&i).unwrap();
        assert_eq!(r.cost, Some(2));
        assert!(validate_schedule(&i, r.schedule.as_ref().unwrap()).valid);
    }
}
