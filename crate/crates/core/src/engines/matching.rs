//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! shrinking, O(n^3)).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Search<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(to, _) in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Mate per vertex (`None` when exposed) of a maximum matching.
pub fn max_cardinality_mates(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut s = Search {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    // greedy start
    for &(u, v) in g.edges() {
        if s.mate[u] == NONE && s.mate[v] == NONE {
            s.mate[u] = v;
            s.mate[v] = u;
        }
    }
    for root in 0..n {
        if s.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = s.find_path(root) {
            while v != NONE {
                let pv = s.parent[v];
                let ppv = s.mate[pv];
                s.mate[v] = pv;
                s.mate[pv] = v;
                v = ppv;
            }
        }
    }
    s.mate.iter().map(|&m| if m == NONE { None } else { Some(m) }).collect()
}

/// Edge ids of a maximum-cardinality matching, sorted.
pub fn max_cardinality_matching(g: &Graph) -> Vec<usize> {
    let mates = max_cardinality_mates(g);
    let mut out = Vec::new();
    for (u, m) in mates.iter().enumerate() {
        if let Some(v) = *m {
            if u < v {
                out.push(g.edge_between(u, v).expect("mates are adjacent"));
            }
        }
    }
    out.sort_unstable();
    out
}

/// True when the edge ids share no endpoint.
pub fn is_matching(g: &Graph, edges: &[usize]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        if used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(max_cardinality_matching(&Graph::new(3, vec![]).unwrap()).is_empty());
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(max_cardinality_matching(&p4), vec![0, 2]);
    }

    #[test]
    fn petersen() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::new(10, edges).unwrap();
        let m = max_cardinality_matching(&g);
        assert_eq!(m.len(), 5);
        assert!(is_matching(&g, &m));
    }

    #[test]
    fn odd_cycle_with_tail_needs_blossom() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4-5
        let g = Graph::new(6, vec![(1, 2), (0, 1), (2, 0), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(max_cardinality_matching(&g).len(), 3);
    }
}
