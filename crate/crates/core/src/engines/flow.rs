//! Edmonds-Karp maximum flow.

use std::collections::VecDeque;

use crate::error::{input, Result};
use crate::graph::{Graph, WeightMap};

/// Capacity treated as unbounded. Small enough that sums never overflow.
pub const INF_CAP: u64 = u64::MAX / 8;

#[derive(Debug, Clone)]
struct Arc {
    from: usize,
    to: usize,
    cap: u64,
    undirected: bool,
}

/// Capacitated network with a source and a sink.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    s: usize,
    t: usize,
    arcs: Vec<Arc>,
}

/// Maximum flow value with a minimum cut certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    /// Arc ids crossing from the source side to the sink side.
    pub cut: Vec<usize>,
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(n: usize, s: usize, t: usize) -> Result<Self> {
        if s >= n || t >= n {
            return input("terminal out of range");
        }
        if s == t {
            return input("source and sink coincide");
        }
        Ok(FlowNetwork { n, s, t, arcs: Vec::new() })
    }

    /// Undirected network with one arc per edge, ids matching edge ids.
    pub fn from_graph(g: &Graph, caps: &WeightMap, s: usize, t: usize) -> Result<Self> {
        if caps.len() != g.edge_count() {
            return input("capacity map does not cover every edge");
        }
        let mut net = Self::new(g.vertex_count(), s, t)?;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            net.add_undirected(u, v, caps.weight_of(e));
        }
        Ok(net)
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> usize {
        assert!(from < self.n && to < self.n);
        self.arcs.push(Arc { from, to, cap, undirected: false });
        self.arcs.len() - 1
    }

    pub fn add_undirected(&mut self, u: usize, v: usize, cap: u64) -> usize {
        assert!(u < self.n && v < self.n);
        self.arcs.push(Arc { from: u, to: v, cap, undirected: true });
        self.arcs.len() - 1
    }

    pub fn capacity(&self, arc: usize) -> u64 {
        self.arcs[arc].cap
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

/// Max flow by shortest augmenting paths; returns the value and a minimum
/// cut whose capacity equals it.
pub fn max_flow_min_cut(net: &FlowNetwork) -> Result<MinCut> {
    let n = net.n;
    // residual arcs come in pairs: 2i forward, 2i+1 backward
    let mut head = Vec::with_capacity(net.arcs.len() * 2);
    let mut res = Vec::with_capacity(net.arcs.len() * 2);
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in &net.arcs {
        head.push(a.to);
        res.push(a.cap);
        out[a.from].push(head.len() - 1);
        head.push(a.from);
        res.push(if a.undirected { a.cap } else { 0 });
        out[a.to].push(head.len() - 1);
    }
    let mut value: u64 = 0;
    let mut pred = vec![usize::MAX; n];
    loop {
        pred.iter_mut().for_each(|p| *p = usize::MAX);
        let mut seen = vec![false; n];
        seen[net.s] = true;
        let mut queue = VecDeque::from([net.s]);
        while let Some(u) = queue.pop_front() {
            if u == net.t {
                break;
            }
            for &r in &out[u] {
                let w = head[r];
                if res[r] > 0 && !seen[w] {
                    seen[w] = true;
                    pred[w] = r;
                    queue.push_back(w);
                }
            }
        }
        if !seen[net.t] {
            let cut: Vec<usize> = net
                .arcs
                .iter()
                .enumerate()
                .filter(|(_, a)| {
                    (seen[a.from] && !seen[a.to]) || (a.undirected && seen[a.to] && !seen[a.from])
                })
                .map(|(i, _)| i)
                .collect();
            return Ok(MinCut { value, cut, source_side: seen });
        }
        let mut push = u64::MAX;
        let mut v = net.t;
        while v != net.s {
            let r = pred[v];
            push = push.min(res[r]);
            v = head[r ^ 1];
        }
        let mut v = net.t;
        while v != net.s {
            let r = pred[v];
            res[r] -= push;
            res[r ^ 1] += push;
            v = head[r ^ 1];
        }
        value = value.saturating_add(push);
    }
}

/// Maximum number of internally vertex-disjoint s-t paths in `g`, i.e. the
/// minimum size of a vertex cut, with vertices in `undeletable` given
/// unbounded capacity. Returns `None` when s and t are adjacent or an
/// undeletable chain joins them.
pub fn min_vertex_cut_value(
    g: &Graph,
    s: usize,
    t: usize,
    vertex_cap: impl Fn(usize) -> u64,
) -> Option<(u64, Vec<usize>)> {
    let n = g.vertex_count();
    // vertex v splits into v_in = 2v and v_out = 2v+1
    let mut net = FlowNetwork::new(2 * n, 2 * s + 1, 2 * t).ok()?;
    let mut vertex_arc = vec![usize::MAX; n];
    for v in 0..n {
        let cap = if v == s || v == t { INF_CAP } else { vertex_cap(v).min(INF_CAP) };
        vertex_arc[v] = net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for &(u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, INF_CAP);
        net.add_arc(2 * v + 1, 2 * u, INF_CAP);
    }
    let cut = max_flow_min_cut(&net).ok()?;
    if cut.value >= INF_CAP {
        return None;
    }
    let verts = (0..n).filter(|&v| cut.cut.contains(&vertex_arc[v])).collect();
    Some((cut.value, verts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let net = FlowNetwork::from_graph(&g, &WeightMap::uniform(1, 1).unwrap(), 0, 1).unwrap();
        let c = max_flow_min_cut(&net).unwrap();
        assert_eq!((c.value, c.cut), (1, vec![0]));
    }

    #[test]
    fn disconnected() {
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        let net = FlowNetwork::from_graph(&g, &WeightMap::uniform(1, 1).unwrap(), 0, 2).unwrap();
        let c = max_flow_min_cut(&net).unwrap();
        assert_eq!((c.value, c.cut.len()), (0, 0));
    }

    #[test]
    fn k4_adjacent_terminals() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::new(4, edges).unwrap();
        let net = FlowNetwork::from_graph(&g, &WeightMap::uniform(6, 1).unwrap(), 0, 1).unwrap();
        let c = max_flow_min_cut(&net).unwrap();
        assert_eq!(c.value, 3);
        let mut cut = c.cut.clone();
        cut.sort();
        // the three edges at vertex 0
        assert_eq!(cut, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_equal_terminals() {
        assert!(FlowNetwork::new(3, 1, 1).is_err());
    }

    #[test]
    fn vertex_cut_of_c4() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (v, cut) = min_vertex_cut_value(&g, 0, 2, |_| 1).unwrap();
        assert_eq!(v, 2);
        assert_eq!(cut, vec![1, 3]);
        assert!(min_vertex_cut_value(&g, 0, 1, |_| 1).is_none());
    }
}
