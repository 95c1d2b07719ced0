//! Graphs, colorings, weights and the distance primitives.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// Distance in hops. `None` means unreachable.
pub type Dist = Option<usize>;

/// Whether tokens sit on vertices or on edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Vertex,
    Edge,
}

/// Undirected graph with stable edge ids. Parallel edges are allowed only when
/// `multi` is set; loops never are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    multi: bool,
    // (neighbour, edge id)
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Simple graph.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::build(n, edges, false)
    }

    /// Multigraph; parallel edges get distinct ids.
    pub fn new_multi(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::build(n, edges, true)
    }

    pub fn build(n: usize, edges: Vec<(usize, usize)>, multi: bool) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return input(format!("edge {id} is a loop at {u}"));
            }
            if !multi && !seen.insert((u.min(v), u.max(v))) {
                return input(format!("duplicate edge {u}-{v} in a simple graph"));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges, multi, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_multi(&self) -> bool {
        self.multi
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs around `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn element_count(&self, kind: ElementKind) -> usize {
        match kind {
            ElementKind::Vertex => self.n,
            ElementKind::Edge => self.edges.len(),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdge(e))
        }
    }

    /// Edges sharing an endpoint with `e`, excluding `e`. Parallel copies of
    /// `e` are included.
    pub fn edge_neighbors(&self, e: usize) -> Vec<usize> {
        let (a, b) = self.edges[e];
        let mut out: Vec<usize> = self.adj[a]
            .iter()
            .chain(self.adj[b].iter())
            .map(|&(_, f)| f)
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Elements adjacent to `x` for sliding purposes.
    pub fn element_neighbors(&self, kind: ElementKind, x: usize) -> Vec<usize> {
        match kind {
            ElementKind::Vertex => {
                let mut out: Vec<usize> = self.adj[x].iter().map(|&(w, _)| w).collect();
                out.sort_unstable();
                out.dedup();
                out
            }
            ElementKind::Edge => self.edge_neighbors(x),
        }
    }

    pub fn elements_adjacent(&self, kind: ElementKind, x: usize, y: usize) -> bool {
        match kind {
            ElementKind::Vertex => self.has_edge(x, y),
            ElementKind::Edge => {
                if x == y {
                    return false;
                }
                let (a, b) = self.edges[x];
                let (c, d) = self.edges[y];
                a == c || a == d || b == c || b == d
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        multi_source_bfs(self, &[0]).iter().all(|d| d.is_some())
    }

    /// Connected component label per vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for r in 0..self.n {
            if comp[r] != usize::MAX {
                continue;
            }
            comp[r] = next;
            let mut stack = vec![r];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Graph on the same vertices keeping only edges where `keep` holds.
    /// Edge ids are renumbered; the returned vector maps new ids to old ids.
    pub fn edge_subgraph(&self, keep: impl Fn(usize) -> bool) -> (Graph, Vec<usize>) {
        let mut edges = Vec::new();
        let mut map = Vec::new();
        for (e, &uv) in self.edges.iter().enumerate() {
            if keep(e) {
                edges.push(uv);
                map.push(e);
            }
        }
        let g = Graph::build(self.n, edges, self.multi).expect("subgraph of a valid graph");
        (g, map)
    }
}

/// Color per element of one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    kind: ElementKind,
    palette_size: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(kind: ElementKind, palette_size: usize, colors: Vec<usize>) -> Result<Self> {
        if palette_size == 0 && !colors.is_empty() {
            return input("palette must be non-empty");
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette_size) {
            return input(format!("color {c} outside palette of size {palette_size}"));
        }
        Ok(Coloring { kind, palette_size, colors })
    }

    /// Checks that every element of the declared kind has a color.
    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.element_count(self.kind) {
            return input(format!(
                "coloring covers {} elements, graph has {}",
                self.colors.len(),
                g.element_count(self.kind)
            ));
        }
        Ok(())
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn color_of(&self, x: usize) -> usize {
        self.colors[x]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }
}

/// Non-negative integer weight per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<u64>,
}

impl WeightMap {
    /// Rejects weight vectors whose total does not fit in a `u64`.
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        let mut total: u64 = 0;
        for &w in &weights {
            total = total
                .checked_add(w)
                .ok_or_else(|| Error::Overflow("sum of weights".into()))?;
        }
        Ok(WeightMap { weights })
    }

    pub fn uniform(len: usize, w: u64) -> Result<Self> {
        Self::new(vec![w; len])
    }

    pub fn weight_of(&self, x: usize) -> u64 {
        self.weights[x]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn max(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }
}

/// Hop distances from `source`.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Dist>> {
    g.check_vertex(source)?;
    Ok(multi_source_bfs(g, &[source]))
}

/// Hop distance to the nearest of `sources`. Sources must be valid.
pub fn multi_source_bfs(g: &Graph, sources: &[usize]) -> Vec<Dist> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &(w, _) in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Slides needed to move an edge token from `e1` to `e2`.
pub fn edge_slide_distance(g: &Graph, e1: usize, e2: usize) -> Result<Dist> {
    g.check_edge(e2)?;
    Ok(edge_distances_from(g, e1)?[e2])
}

/// Slide distance from edge `e` to every edge. An edge token reaches `f`
/// after one slide onto an edge at the nearest endpoint, then one slide per
/// further hop, so d(e, f) = 1 + min over endpoints of vertex distances.
pub fn edge_distances_from(g: &Graph, e: usize) -> Result<Vec<Dist>> {
    g.check_edge(e)?;
    let (a, b) = g.endpoints(e);
    let vd = multi_source_bfs(g, &[a, b]);
    Ok(g
        .edges()
        .iter()
        .enumerate()
        .map(|(f, &(x, y))| {
            if f == e {
                Some(0)
            } else {
                match (vd[x], vd[y]) {
                    (None, None) => None,
                    (Some(p), None) | (None, Some(p)) => Some(p + 1),
                    (Some(p), Some(q)) => Some(p.min(q) + 1),
                }
            }
        })
        .collect())
}

/// Sliding distance from element `x` to every element of the same kind.
pub fn element_distances_from(g: &Graph, kind: ElementKind, x: usize) -> Result<Vec<Dist>> {
    match kind {
        ElementKind::Vertex => bfs_distances(g, x),
        ElementKind::Edge => edge_distances_from(g, x),
    }
}

/// Vertices on shortest s-t paths grouped by distance from `s`.
pub fn level_decomposition(g: &Graph, s: usize, t: usize) -> Result<Vec<Vec<usize>>> {
    let ds = bfs_distances(g, s)?;
    let dt = bfs_distances(g, t)?;
    let d = ds[t].ok_or(Error::NoPath { s, t })?;
    let mut levels = vec![Vec::new(); d + 1];
    for v in 0..g.vertex_count() {
        if let (Some(a), Some(b)) = (ds[v], dt[v]) {
            if a + b == d {
                levels[a].push(v);
            }
        }
    }
    Ok(levels)
}

/// Explicit line graph: one vertex per edge of `g`, adjacent when the edges
/// share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for e in 0..g.edge_count() {
        for f in g.edge_neighbors(e) {
            if f > e {
                edges.push((e, f));
            }
        }
    }
    Graph::new(g.edge_count(), edges).expect("line graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    #[test]
    fn bfs_on_path() {
        let d = bfs_distances(&path(3), 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn bfs_unreachable() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d[2], None);
        assert_eq!(d[3], None);
        assert!(bfs_distances(&g, 9).is_err());
    }

    #[test]
    fn slide_distances() {
        let g = path(4);
        assert_eq!(edge_slide_distance(&g, 0, 0).unwrap(), Some(0));
        assert_eq!(edge_slide_distance(&g, 0, 2).unwrap(), Some(2));
        let tri = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(edge_slide_distance(&tri, 0, 1).unwrap(), Some(1));
        assert!(edge_slide_distance(&g, 0, 7).is_err());
    }

    #[test]
    fn levels() {
        assert_eq!(level_decomposition(&path(3), 0, 2).unwrap(), vec![vec![0], vec![1], vec![2]]);
        let c4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(level_decomposition(&c4, 0, 2).unwrap(), vec![vec![0], vec![1, 3], vec![2]]);
        assert_eq!(level_decomposition(&c4, 1, 1).unwrap(), vec![vec![1]]);
        let split = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(level_decomposition(&split, 0, 3), Err(Error::NoPath { s: 0, t: 3 }));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new_multi(2, vec![(0, 1), (1, 0)]).is_ok());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn weight_overflow_checked() {
        assert!(WeightMap::new(vec![u64::MAX, 1]).is_err());
        assert!(WeightMap::new(vec![u64::MAX - 1, 1]).is_ok());
    }
}
