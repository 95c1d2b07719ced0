//! Weighted intersection of a graphic matroid and a partition matroid, and
//! the rainbow minimum spanning tree built on it.
//!
//! Successive shortest augmenting paths in the exchange graph. Starting from
//! a maximal set of zero-weight elements (which already has minimum weight
//! for its size), each augmentation takes a path of minimum length and,
//! among those, fewest arcs, which keeps the set of minimum weight for its
//! size. An out-of-set element `z` can only be followed by the in-set element
//! holding `z`'s color, so the exchange graph is searched on the in-set
//! elements only, with the cheapest `z` per transition folded into the arc.

use crate::error::{Error, Result};
use crate::graph::{Coloring, ElementKind, Graph, WeightMap};

/// Ground set = edges of a multigraph; graphic side = acyclic edge sets;
/// partition side = at most one edge per color.
#[derive(Debug, Clone)]
pub struct MatroidPair<'a> {
    pub graph: &'a Graph,
    pub colors: &'a Coloring,
    pub weights: &'a WeightMap,
}

impl<'a> MatroidPair<'a> {
    pub fn new(graph: &'a Graph, colors: &'a Coloring, weights: &'a WeightMap) -> Result<Self> {
        if colors.kind() != ElementKind::Edge {
            return Err(Error::KindMismatch);
        }
        colors.check_for(graph)?;
        if weights.len() != graph.edge_count() {
            return Err(Error::Input("weight map does not cover every edge".into()));
        }
        Ok(MatroidPair { graph, colors, weights })
    }
}

/// A common independent set with its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonIndependent {
    pub elements: Vec<usize>,
    pub weight: u64,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Rooted view of the current forest for tree-path queries.
struct Forest {
    comp: Vec<usize>,
    up_vertex: Vec<usize>,
    up_edge: Vec<usize>,
    depth: Vec<usize>,
}

impl Forest {
    fn build(g: &Graph, in_set: &[bool]) -> Self {
        let n = g.vertex_count();
        let mut f = Forest {
            comp: vec![usize::MAX; n],
            up_vertex: vec![usize::MAX; n],
            up_edge: vec![usize::MAX; n],
            depth: vec![0; n],
        };
        for r in 0..n {
            if f.comp[r] != usize::MAX {
                continue;
            }
            f.comp[r] = r;
            let mut stack = vec![r];
            while let Some(u) = stack.pop() {
                for &(w, e) in g.neighbors(u) {
                    if in_set[e] && f.comp[w] == usize::MAX {
                        f.comp[w] = r;
                        f.up_vertex[w] = u;
                        f.up_edge[w] = e;
                        f.depth[w] = f.depth[u] + 1;
                        stack.push(w);
                    }
                }
            }
        }
        f
    }

    /// Forest edges on the tree path between u and v (same component).
    fn path(&self, mut u: usize, mut v: usize, out: &mut Vec<usize>) {
        out.clear();
        while self.depth[u] > self.depth[v] {
            out.push(self.up_edge[u]);
            u = self.up_vertex[u];
        }
        while self.depth[v] > self.depth[u] {
            out.push(self.up_edge[v]);
            v = self.up_vertex[v];
        }
        while u != v {
            out.push(self.up_edge[u]);
            out.push(self.up_edge[v]);
            u = self.up_vertex[u];
            v = self.up_vertex[v];
        }
    }
}

type Label = (i128, usize);

/// Maximum-cardinality common independent set of minimum weight among those
/// of maximum cardinality.
pub fn weighted_matroid_intersection(mp: &MatroidPair) -> CommonIndependent {
    let g = mp.graph;
    let m = g.edge_count();
    let color = |e: usize| mp.colors.color_of(e);
    let w = |e: usize| mp.weights.weight_of(e) as i128;
    let mut in_set = vec![false; m];
    let mut owner = vec![usize::MAX; mp.colors.palette_size()];

    let mut dsu = Dsu((0..g.vertex_count()).collect());
    for e in 0..m {
        if mp.weights.weight_of(e) == 0 && owner[color(e)] == usize::MAX {
            let (u, v) = g.endpoints(e);
            if dsu.union(u, v) {
                in_set[e] = true;
                owner[color(e)] = e;
            }
        }
    }

    let mut scratch = Vec::new();
    loop {
        let members: Vec<usize> = (0..m).filter(|&e| in_set[e]).collect();
        let k = members.len();
        let mut pos = vec![usize::MAX; m];
        for (i, &e) in members.iter().enumerate() {
            pos[e] = i;
        }
        let forest = Forest::build(g, &in_set);
        // best[a][b]: cheapest z leading from member a to member b (owner of z's color)
        let none: (i128, usize) = (i128::MAX, usize::MAX);
        let mut best = vec![none; k * k];
        let mut best_end = vec![none; k];
        let mut src = vec![none; k];
        let mut src_end = none;
        for z in 0..m {
            if in_set[z] {
                continue;
            }
            let (u, v) = g.endpoints(z);
            let c = color(z);
            let target = if owner[c] == usize::MAX { None } else { Some(pos[owner[c]]) };
            let cand = (w(z), z);
            if forest.comp[u] != forest.comp[v] {
                // reachable from the sources and from every member
                match target {
                    None => src_end = src_end.min(cand),
                    Some(b) => src[b] = src[b].min(cand),
                }
                continue;
            }
            forest.path(u, v, &mut scratch);
            for &a in scratch.iter() {
                let a = pos[a];
                match target {
                    None => best_end[a] = best_end[a].min(cand),
                    Some(b) if b != a => {
                        let slot = &mut best[a * k + b];
                        *slot = (*slot).min(cand);
                    }
                    _ => {}
                }
            }
        }
        // X1 elements are also reachable from every member
        for a in 0..k {
            best_end[a] = best_end[a].min(src_end);
            for b in 0..k {
                if b != a && src[b].1 != usize::MAX {
                    let slot = &mut best[a * k + b];
                    *slot = (*slot).min(src[b]);
                }
            }
        }

        // Bellman-Ford over members with (length, vertex count) labels
        let mut label: Vec<Option<Label>> = vec![None; k];
        let mut pred: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); k];
        for b in 0..k {
            if src[b].1 != usize::MAX {
                label[b] = Some((src[b].0 - w(members[b]), 2));
                pred[b] = (usize::MAX, src[b].1);
            }
        }
        for _ in 0..=k {
            let mut changed = false;
            for a in 0..k {
                let Some((la, ha)) = label[a] else { continue };
                for b in 0..k {
                    let (cz, z) = best[a * k + b];
                    if z == usize::MAX {
                        continue;
                    }
                    let cand = (la + cz - w(members[b]), ha + 2);
                    if label[b].map_or(true, |cur| cand < cur) {
                        label[b] = Some(cand);
                        pred[b] = (a, z);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut end: Option<(Label, usize, usize)> = None;
        if src_end.1 != usize::MAX {
            end = Some(((src_end.0, 1), usize::MAX, src_end.1));
        }
        for a in 0..k {
            if let (Some((la, ha)), (cz, z)) = (label[a], best_end[a]) {
                if z != usize::MAX {
                    let cand = ((la + cz, ha + 1), a, z);
                    if end.map_or(true, |e| cand.0 < e.0) {
                        end = Some(cand);
                    }
                }
            }
        }
        let Some((_, mut a, z_last)) = end else { break };
        let mut entering = vec![z_last];
        let mut leaving = Vec::new();
        let mut guard = 0;
        while a != usize::MAX {
            leaving.push(members[a]);
            let (prev, z) = pred[a];
            entering.push(z);
            a = prev;
            guard += 1;
            assert!(guard <= k + 1, "exchange path does not terminate");
        }
        for e in leaving {
            in_set[e] = false;
            owner[color(e)] = usize::MAX;
        }
        for e in entering {
            debug_assert!(!in_set[e]);
            in_set[e] = true;
            debug_assert_eq!(owner[color(e)], usize::MAX, "partition side violated");
            owner[color(e)] = e;
        }
    }
    let elements: Vec<usize> = (0..m).filter(|&e| in_set[e]).collect();
    let weight = elements.iter().map(|&e| mp.weights.weight_of(e)).sum();
    CommonIndependent { elements, weight }
}

/// Minimum-weight spanning tree whose edges have pairwise distinct colors.
/// `Ok(None)` when no rainbow spanning tree exists.
pub fn rainbow_mst(g: &Graph, phi: &Coloring, w: &WeightMap) -> Result<Option<(Vec<usize>, u64)>> {
    let mp = MatroidPair::new(g, phi, w)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let ci = weighted_matroid_intersection(&mp);
    if ci.elements.len() + 1 == g.vertex_count().max(1) {
        Ok(Some((ci.elements, ci.weight)))
    } else {
        Ok(None)
    }
}

/// True when the edges form a forest.
pub fn is_forest(g: &Graph, edges: &[usize]) -> bool {
    let mut dsu = Dsu((0..g.vertex_count()).collect());
    edges.iter().all(|&e| {
        let (u, v) = g.endpoints(e);
        dsu.union(u, v)
    })
}

/// Minimum spanning tree (Kruskal, ties by edge id). `None` when disconnected.
pub fn minimum_spanning_tree(g: &Graph, w: &WeightMap) -> Option<(Vec<usize>, u64)> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| (w.weight_of(e), e));
    let mut dsu = Dsu((0..g.vertex_count()).collect());
    let mut tree = Vec::new();
    let mut total = 0;
    for e in order {
        let (u, v) = g.endpoints(e);
        if dsu.union(u, v) {
            tree.push(e);
            total += w.weight_of(e);
        }
    }
    if tree.len() + 1 == g.vertex_count().max(1) {
        tree.sort_unstable();
        Some((tree, total))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(c: Vec<usize>) -> Coloring {
        let p = c.iter().max().map_or(1, |m| m + 1);
        Coloring::new(ElementKind::Edge, p, c).unwrap()
    }

    #[test]
    fn triangle_two_colors() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = col(vec![1, 2, 1]);
        let ci = weighted_matroid_intersection(&MatroidPair::new(&g, &c, &WeightMap::uniform(3, 0).unwrap()).unwrap());
        assert_eq!(ci.elements.len(), 2);
        let mut cs: Vec<usize> = ci.elements.iter().map(|&e| c.color_of(e)).collect();
        cs.sort();
        assert_eq!(cs, vec![1, 2]);
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let c = col(vec![0]);
        let w = WeightMap::new(vec![7]).unwrap();
        let ci = weighted_matroid_intersection(&MatroidPair::new(&g, &c, &w).unwrap());
        assert_eq!(ci, CommonIndependent { elements: vec![0], weight: 7 });
    }

    #[test]
    fn parallel_same_color() {
        let g = Graph::new_multi(2, vec![(0, 1), (0, 1)]).unwrap();
        let c = col(vec![0, 0]);
        let w = WeightMap::new(vec![9, 2]).unwrap();
        let ci = weighted_matroid_intersection(&MatroidPair::new(&g, &c, &w).unwrap());
        assert_eq!(ci, CommonIndependent { elements: vec![1], weight: 2 });
    }

    #[test]
    fn rainbow_examples() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let w = WeightMap::new(vec![0, 0, 5]).unwrap();
        assert_eq!(rainbow_mst(&g, &col(vec![1, 2, 1]), &w).unwrap(), Some((vec![0, 1], 0)));
        let p = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(rainbow_mst(&p, &col(vec![1, 1]), &WeightMap::uniform(2, 1).unwrap()).unwrap(), None);
        let t = Graph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        let w = WeightMap::new(vec![1, 2, 3]).unwrap();
        assert_eq!(rainbow_mst(&t, &col(vec![0, 1, 2]), &w).unwrap(), Some((vec![0, 1, 2], 6)));
        let split = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(rainbow_mst(&split, &col(vec![0, 1]), &WeightMap::uniform(2, 0).unwrap()), Err(Error::Disconnected));
    }
}
