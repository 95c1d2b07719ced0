//! Maximum-weight matching in general graphs.
//!
//! Primal-dual blossom algorithm with integer duals, O(n^3). Vertex duals are
//! stored doubled so integer weights keep every quantity integral. An
//! exhaustive engine with the same interface is kept for cross-checks.

use crate::graph::{Graph, WeightMap};

const NONE: usize = usize::MAX;

/// Which weighted matching engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedMatchingEngine {
    Blossom,
    /// Enumerates all matchings. Only for small graphs.
    Exhaustive,
}

impl WeightedMatchingEngine {
    pub fn solve(self, g: &Graph, w: &WeightMap, max_cardinality: bool) -> Vec<usize> {
        match self {
            WeightedMatchingEngine::Blossom => blossom_matching(g, w, max_cardinality),
            WeightedMatchingEngine::Exhaustive => exhaustive_matching(g, w, max_cardinality),
        }
    }
}

/// Edge ids of a matching of maximum total weight, sorted.
pub fn max_weight_matching(g: &Graph, w: &WeightMap) -> Vec<usize> {
    blossom_matching(g, w, false)
}

/// Among maximum-cardinality matchings, one of maximum weight.
pub fn max_weight_max_cardinality_matching(g: &Graph, w: &WeightMap) -> Vec<usize> {
    blossom_matching(g, w, true)
}

pub fn matching_weight(w: &WeightMap, m: &[usize]) -> u64 {
    m.iter().map(|&e| w.weight_of(e)).sum()
}

fn blossom_matching(g: &Graph, w: &WeightMap, max_cardinality: bool) -> Vec<usize> {
    assert_eq!(w.len(), g.edge_count(), "weight map must cover every edge");
    let edges: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, i64::try_from(w.weight_of(e)).expect("weight fits i64")))
        .collect();
    let mates = Blossom::new(g.vertex_count(), edges).run(max_cardinality);
    // parallel edges: recover the heaviest edge between each mated pair
    let mut out = Vec::new();
    for (u, &m) in mates.iter().enumerate() {
        if m != NONE && u < m {
            let e = g
                .neighbors(u)
                .iter()
                .filter(|&&(x, _)| x == m)
                .max_by_key(|&&(_, e)| (w.weight_of(e), std::cmp::Reverse(e)))
                .map(|&(_, e)| e)
                .expect("mates are adjacent");
            out.push(e);
        }
    }
    out.sort_unstable();
    out
}

struct Blossom {
    nv: usize,
    edges: Vec<(usize, usize, i64)>,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<i8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    parent: Vec<usize>,
    childs: Vec<Vec<usize>>,
    base: Vec<usize>,
    endps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    bestedges: Vec<Option<Vec<usize>>>,
    unused: Vec<usize>,
    dual: Vec<i64>,
    allow: Vec<bool>,
    queue: Vec<usize>,
}

fn wrap(j: isize, len: usize) -> usize {
    j.rem_euclid(len as isize) as usize
}

impl Blossom {
    fn new(nv: usize, edges: Vec<(usize, usize, i64)>) -> Self {
        let m = edges.len();
        let mut endpoint = Vec::with_capacity(2 * m);
        let mut neighbend = vec![Vec::new(); nv];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            endpoint.push(i);
            endpoint.push(j);
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let maxw = edges.iter().map(|e| e.2).max().unwrap_or(0).max(0);
        let mut base: Vec<usize> = (0..nv).collect();
        base.extend(std::iter::repeat(NONE).take(nv));
        let mut dual = vec![maxw; nv];
        dual.extend(std::iter::repeat(0).take(nv));
        Blossom {
            nv,
            edges,
            endpoint,
            neighbend,
            mate: vec![NONE; nv],
            label: vec![0; 2 * nv],
            labelend: vec![NONE; 2 * nv],
            inblossom: (0..nv).collect(),
            parent: vec![NONE; 2 * nv],
            childs: vec![Vec::new(); 2 * nv],
            base,
            endps: vec![Vec::new(); 2 * nv],
            bestedge: vec![NONE; 2 * nv],
            bestedges: vec![None; 2 * nv],
            unused: (nv..2 * nv).collect(),
            dual,
            allow: vec![false; m],
            queue: Vec::new(),
        }
    }

    fn slack(&self, k: usize) -> i64 {
        let (i, j, w) = self.edges[k];
        self.dual[i] + self.dual[j] - 2 * w
    }

    fn leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![b];
        while let Some(x) = stack.pop() {
            if x < self.nv {
                out.push(x);
            } else {
                stack.extend(self.childs[x].iter().rev());
            }
        }
        out
    }

    fn assign_label(&mut self, w: usize, t: i8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            let l = self.leaves(b);
            self.queue.extend(l);
        } else if t == 2 {
            let base = self.base[b];
            let mb = self.mate[base];
            debug_assert!(mb != NONE);
            self.assign_label(self.endpoint[mb], 1, mb ^ 1);
        }
    }

    /// Trace back from v and w to find a new blossom base, or NONE when the
    /// two trees differ (augmenting path).
    fn scan_blossom(&mut self, mut v: usize, mut w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.base[b];
                break;
            }
            debug_assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            if self.labelend[b] == NONE {
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], 2);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unused.pop().expect("blossom slot");
        self.base[b] = base;
        self.parent[b] = NONE;
        self.parent[bb] = b;
        let mut path = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.parent[bv] = b;
            path.push(bv);
            endps.push(self.labelend[bv]);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        path.push(bb);
        path.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.parent[bw] = b;
            path.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        debug_assert_eq!(self.label[bb], 1);
        self.childs[b] = path.clone();
        self.endps[b] = endps;
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dual[b] = 0;
        for v in self.leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }
        let mut bestedgeto = vec![NONE; 2 * self.nv];
        for &bv in &path {
            let lists: Vec<Vec<usize>> = match self.bestedges[bv].take() {
                None => self
                    .leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|p| p / 2).collect())
                    .collect(),
                Some(l) => vec![l],
            };
            for list in lists {
                for k in list {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let _ = i;
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.bestedge[bv] = NONE;
        }
        let best: Vec<usize> = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for &k in &best {
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
        self.bestedges[b] = Some(best);
    }

    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        let childs = self.childs[b].clone();
        for &s in &childs {
            self.parent[s] = NONE;
            if s < self.nv {
                self.inblossom[s] = s;
            } else if endstage && self.dual[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            let len = childs.len();
            let entry = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = childs.iter().position(|&c| c == entry).unwrap() as isize;
            let (jstep, trick): (isize, usize) = if j & 1 == 1 {
                j -= len as isize;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                let ep = self.endps[b][wrap(j - trick as isize, len)];
                self.label[self.endpoint[p ^ 1]] = 0;
                self.label[self.endpoint[ep ^ trick ^ 1]] = 0;
                self.assign_label(self.endpoint[p ^ 1], 2, p);
                self.allow[ep / 2] = true;
                j += jstep;
                p = self.endps[b][wrap(j - trick as isize, len)] ^ trick;
                self.allow[p / 2] = true;
                j += jstep;
            }
            let bv = childs[wrap(j, len)];
            let x = self.endpoint[p ^ 1];
            self.label[x] = 2;
            self.label[bv] = 2;
            self.labelend[x] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            j += jstep;
            while childs[wrap(j, len)] != entry {
                let bv = childs[wrap(j, len)];
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let leaves = self.leaves(bv);
                let v = leaves.iter().copied().find(|&v| self.label[v] != 0).or(leaves.last().copied());
                if let Some(v) = v {
                    if self.label[v] != 0 {
                        debug_assert_eq!(self.label[v], 2);
                        self.label[v] = 0;
                        let m = self.mate[self.base[bv]];
                        self.label[self.endpoint[m]] = 0;
                        self.assign_label(v, 2, self.labelend[v]);
                    }
                }
                j += jstep;
            }
        }
        self.label[b] = -1;
        self.labelend[b] = NONE;
        self.childs[b] = Vec::new();
        self.endps[b] = Vec::new();
        self.base[b] = NONE;
        self.bestedges[b] = None;
        self.bestedge[b] = NONE;
        self.unused.push(b);
    }

    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.parent[t] != b {
            t = self.parent[t];
        }
        if t >= self.nv {
            self.augment_blossom(t, v);
        }
        let len = self.childs[b].len();
        let i = self.childs[b].iter().position(|&c| c == t).unwrap();
        let mut j = i as isize;
        let (jstep, trick): (isize, usize) = if i & 1 == 1 {
            j -= len as isize;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t = self.childs[b][wrap(j, len)];
            let p = self.endps[b][wrap(j - trick as isize, len)] ^ trick;
            if t >= self.nv {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            let t = self.childs[b][wrap(j, len)];
            if t >= self.nv {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.childs[b].rotate_left(i);
        self.endps[b].rotate_left(i);
        self.base[b] = self.base[self.childs[b][0]];
        debug_assert_eq!(self.base[b], v);
    }

    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], 1);
                if bs >= self.nv {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], 2);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                if bt >= self.nv {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    fn run(mut self, max_cardinality: bool) -> Vec<usize> {
        let nv = self.nv;
        if self.edges.is_empty() {
            return vec![NONE; nv];
        }
        for _ in 0..nv {
            self.label.iter_mut().for_each(|l| *l = 0);
            self.bestedge.iter_mut().for_each(|b| *b = NONE);
            for b in nv..2 * nv {
                self.bestedges[b] = None;
            }
            self.allow.iter_mut().for_each(|a| *a = false);
            self.queue.clear();
            for v in 0..nv {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                while !augmented {
                    let Some(v) = self.queue.pop() else { break };
                    debug_assert_eq!(self.label[self.inblossom[v]], 1);
                    let ends = self.neighbend[v].clone();
                    for p in ends {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allow[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allow[k] = true;
                            }
                        }
                        if self.allow[k] {
                            let lw = self.label[self.inblossom[w]];
                            if lw == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if lw == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                }
                if augmented {
                    break;
                }
                // dual update
                let mut dtype = 0u8;
                let mut delta = 0i64;
                let mut dedge = NONE;
                let mut dblossom = NONE;
                if !max_cardinality {
                    dtype = 1;
                    delta = *self.dual[..nv].iter().min().unwrap();
                }
                for v in 0..nv {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if dtype == 0 || d < delta {
                            delta = d;
                            dtype = 2;
                            dedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * nv {
                    if self.parent[b] == NONE && self.label[b] == 1 && self.bestedge[b] != NONE {
                        let d = self.slack(self.bestedge[b]) / 2;
                        if dtype == 0 || d < delta {
                            delta = d;
                            dtype = 3;
                            dedge = self.bestedge[b];
                        }
                    }
                }
                for b in nv..2 * nv {
                    if self.base[b] != NONE
                        && self.parent[b] == NONE
                        && self.label[b] == 2
                        && (dtype == 0 || self.dual[b] < delta)
                    {
                        delta = self.dual[b];
                        dtype = 4;
                        dblossom = b;
                    }
                }
                if dtype == 0 {
                    dtype = 1;
                    delta = (*self.dual[..nv].iter().min().unwrap()).max(0);
                }
                for v in 0..nv {
                    match self.label[self.inblossom[v]] {
                        1 => self.dual[v] -= delta,
                        2 => self.dual[v] += delta,
                        _ => {}
                    }
                }
                for b in nv..2 * nv {
                    if self.base[b] != NONE && self.parent[b] == NONE {
                        match self.label[b] {
                            1 => self.dual[b] += delta,
                            2 => self.dual[b] -= delta,
                            _ => {}
                        }
                    }
                }
                match dtype {
                    1 => break,
                    2 => {
                        self.allow[dedge] = true;
                        let (mut i, j, _) = self.edges[dedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        self.queue.push(i);
                    }
                    3 => {
                        self.allow[dedge] = true;
                        let (i, _, _) = self.edges[dedge];
                        self.queue.push(i);
                    }
                    _ => self.expand_blossom(dblossom, false),
                }
            }
            if !augmented {
                break;
            }
            for b in nv..2 * nv {
                if self.parent[b] == NONE && self.base[b] != NONE && self.label[b] == 1 && self.dual[b] == 0 {
                    self.expand_blossom(b, true);
                }
            }
        }
        (0..nv).map(|v| if self.mate[v] == NONE { NONE } else { self.endpoint[self.mate[v]] }).collect()
    }
}

/// Exhaustive search over all matchings. Ties prefer more edges when
/// `max_cardinality` is set, otherwise any optimum is returned.
fn exhaustive_matching(g: &Graph, w: &WeightMap, max_cardinality: bool) -> Vec<usize> {
    fn rec(
        g: &Graph,
        w: &WeightMap,
        e: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        cur_w: u64,
        best: &mut (usize, u64, Vec<usize>),
        max_card: bool,
    ) {
        if e == g.edge_count() {
            let key = if max_card { (cur.len(), cur_w) } else { (0, cur_w) };
            let best_key = if max_card { (best.0, best.1) } else { (0, best.1) };
            if key > best_key {
                *best = (cur.len(), cur_w, cur.clone());
            }
            return;
        }
        rec(g, w, e + 1, used, cur, cur_w, best, max_card);
        let (u, v) = g.endpoints(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            cur.push(e);
            rec(g, w, e + 1, used, cur, cur_w + w.weight_of(e), best, max_card);
            cur.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    let mut best = (0, 0, Vec::new());
    rec(g, w, 0, &mut vec![false; g.vertex_count()], &mut Vec::new(), 0, &mut best, max_cardinality);
    best.2
}
