//! Instance generators from the hardness reductions, with known answers,
//! plus seeded random instances.
//!
//! Every product vertex gets a label. Labels are deterministic and stable:
//! tests address gadget parts through [`Manifest::labels`] and
//! [`Manifest::vertex`].

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Coloring, ElementKind, Graph};
use crate::instance::{Configuration, DiscoveryInstance, Model, Problem};

/// Sidecar describing how an instance was produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub reduction: String,
    /// Source instance or random profile.
    pub source: serde_json::Value,
    pub budget_formula: String,
    pub budget: usize,
    /// Ground truth, when the source was small enough to brute-force.
    pub expected: Option<bool>,
    /// Label of every product vertex, by id. Empty for random instances.
    pub labels: Vec<String>,
    pub seed: Option<u64>,
}

impl Manifest {
    /// Id of the vertex carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub instance: DiscoveryInstance,
    pub manifest: Manifest,
}

/// Largest source size we brute-force for the manifest's expected answer.
const BRUTE_VERTICES: usize = 16;
const BRUTE_EDGES: usize = 24;

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Path from a to b with `internal` fresh vertices.
    fn path(&mut self, a: usize, b: usize, internal: usize, label: &str) {
        let mut prev = a;
        for i in 0..internal {
            let v = self.vertex(format!("{label}#{i}"));
            self.edge(prev, v);
            prev = v;
        }
        self.edge(prev, b);
    }

    fn graph(&self) -> Result<Graph> {
        Graph::new(self.labels.len(), self.edges.clone())
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({ "n": g.vertex_count(), "edges": g.edges() })
}

fn simple(g: &Graph) -> Result<()> {
    if g.is_multi() {
        return Err(Error::Input("source graph must be simple".into()));
    }
    Ok(())
}

/// Sliding shortest path discovery that is yes iff `g` has a Hamiltonian
/// path.
///
/// Labels (i a position, j and a, b vertices of g, all 0-based): `s`, `s'`,
/// `t`, `u[i,j]`, `v[i,j]`, `x[i]`, `s[j]`, `t[j]`, `z[j]`, `w[i,a>b]` for
/// i < n-1 and each orientation of an edge ab, and `zp[i,j]#r` for the
/// internal vertices of the z[j] to v[i,j] path, plus `decoy#r` when g has
/// no walk through n vertices. Budget n(2n+2)+3n+2.
pub fn gen_spd_from_hampath(g: &Graph) -> Result<Generated> {
    simple(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Input("source graph needs a vertex".into()));
    }
    let mut b = Builder::default();
    let s = b.vertex("s".into());
    let s2 = b.vertex("s'".into());
    let t = b.vertex("t".into());
    let u: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| b.vertex(format!("u[{i},{j}]"))).collect()).collect();
    let v: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| b.vertex(format!("v[{i},{j}]"))).collect()).collect();
    let x: Vec<usize> = (0..n).map(|i| b.vertex(format!("x[{i}]"))).collect();
    let si: Vec<usize> = (0..n).map(|j| b.vertex(format!("s[{j}]"))).collect();
    let ti: Vec<usize> = (0..n).map(|j| b.vertex(format!("t[{j}]"))).collect();
    let z: Vec<usize> = (0..n).map(|j| b.vertex(format!("z[{j}]"))).collect();
    b.edge(s2, s);
    for j in 0..n {
        b.edge(si[j], s);
        b.edge(si[j], v[0][j]);
        b.edge(v[n - 1][j], ti[j]);
        b.edge(ti[j], t);
    }
    for i in 0..n {
        for j in 0..n {
            b.edge(u[i][j], v[i][j]);
            b.edge(x[i], u[i][j]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            b.path(z[j], v[i][j], 2 * n + 1, &format!("zp[{i},{j}]"));
        }
    }
    for i in 0..n.saturating_sub(1) {
        for &(p, q) in g.edges() {
            for (a, c) in [(p, q), (q, p)] {
                let w = b.vertex(format!("w[{i},{a}>{c}]"));
                b.edge(v[i][a], w);
                b.edge(w, v[i + 1][c]);
            }
        }
    }
    // Without a walk through n vertices of g, dist(s,t) exceeds 2n+2 and the
    // 2n+3 start tokens are not a shortest path configuration. A bare s-t
    // path of length 2n+2 restores the distance; filling it costs at least
    // (n+1)^2 + n(2n+4), above the budget, so the answer stays no.
    if bfs_distances(&b.graph()?, s)?[t] != Some(2 * n + 2) {
        b.path(s, t, 2 * n + 1, "decoy");
    }
    let h = b.graph()?;
    let mut start = vec![s, s2, t];
    start.extend(&z);
    start.extend(&x);
    let budget = n * (2 * n + 2) + 3 * n + 2;
    let instance = DiscoveryInstance::new(
        h,
        Problem::ShortestPath { s, t },
        Model::Sliding,
        Configuration::new(ElementKind::Vertex, start)?,
        budget,
    )?;
    let expected = (n <= BRUTE_VERTICES).then(|| has_hamiltonian_path(g));
    Ok(Generated {
        instance,
        manifest: Manifest {
            reduction: "hampath-to-spd".into(),
            source: json!({ "graph": graph_json(g) }),
            budget_formula: "n(2n+2)+3n+2".into(),
            budget,
            expected,
            labels: b.labels,
            seed: None,
        },
    })
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Sliding and jumping vertex cut discovery, both yes iff `g` has a clique
/// of size kappa.
///
/// Labels: `s`, `t`, `z[i]` (pendants of s), `x[u]`, `y[e]` (e an edge
/// index of g), `d[u,e]` (subdivision vertex between x[u] and y[e]) and
/// `p[i]`. Budgets 2κ+2C(κ,2) and κ+C(κ,2).
pub fn gen_cutd_from_clique(g: &Graph, kappa: usize) -> Result<(Generated, Generated)> {
    simple(g)?;
    if kappa < 4 {
        return Err(Error::Input(format!("kappa must be at least 4, got {kappa}")));
    }
    let mut b = Builder::default();
    let s = b.vertex("s".into());
    let t = b.vertex("t".into());
    let z: Vec<usize> = (0..kappa).map(|i| b.vertex(format!("z[{i}]"))).collect();
    let x: Vec<usize> = (0..g.vertex_count()).map(|u| b.vertex(format!("x[{u}]"))).collect();
    let y: Vec<usize> = (0..g.edge_count()).map(|e| b.vertex(format!("y[{e}]"))).collect();
    for &zi in &z {
        b.edge(s, zi);
    }
    for &xu in &x {
        b.edge(s, xu);
    }
    for &ye in &y {
        b.edge(ye, t);
    }
    for (e, &(p, q)) in g.edges().iter().enumerate() {
        for u in [p, q] {
            let d = b.vertex(format!("d[{u},{e}]"));
            b.edge(x[u], d);
            b.edge(d, y[e]);
        }
    }
    for i in 0..binom2(kappa) {
        let p = b.vertex(format!("p[{i}]"));
        b.edge(s, p);
        b.edge(p, t);
    }
    let h = b.graph()?;
    let mut start = z.clone();
    start.extend(&y);
    let start = Configuration::new(ElementKind::Vertex, start)?;
    let sliding_budget = 2 * kappa + 2 * binom2(kappa);
    let jumping_budget = kappa + binom2(kappa);
    let expected = (g.vertex_count() <= BRUTE_VERTICES + 8).then(|| has_clique(g, kappa));
    let source = json!({ "graph": graph_json(g), "kappa": kappa });
    let sliding = DiscoveryInstance::new(h, Problem::VertexCut { s, t }, Model::Sliding, start, sliding_budget)?;
    let jumping = sliding.clone().with_model(Model::Jumping).with_budget(jumping_budget);
    let manifest = |budget, formula: &str, reduction: &str| Manifest {
        reduction: reduction.into(),
        source: source.clone(),
        budget_formula: formula.into(),
        budget,
        expected,
        labels: b.labels.clone(),
        seed: None,
    };
    Ok((
        Generated { instance: sliding, manifest: manifest(sliding_budget, "2k+2C(k,2)", "clique-to-cut") },
        Generated { instance: jumping, manifest: manifest(jumping_budget, "k+C(k,2)", "clique-to-cut-jumping") },
    ))
}

/// Vertices of a path graph in order, starting at the smaller-id end.
fn path_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let bad = || Error::Input("source graph must be a path".into());
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() || (0..n).any(|v| g.degree(v) > 2) {
        return Err(bad());
    }
    let first = (0..n).find(|&v| g.degree(v) == 1).ok_or_else(bad)?;
    let mut order = vec![first];
    let mut prev = usize::MAX;
    let mut cur = first;
    while order.len() < n {
        let next = g.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev).ok_or_else(bad)?;
        prev = cur;
        cur = next;
        order.push(cur);
    }
    Ok(order)
}

/// Sliding matching discovery that is yes iff the properly edge-colored
/// path `g` has a rainbow matching of size k.
///
/// Side A holds the vertices at even distance from the smaller-id end of
/// the path. Colors are the distinct values of `phi`, in increasing order,
/// indexed by rank c. Labels: `x[u,e]`, `y1[u]`..`y3[u]` for inner vertices
/// u, `z1[c]`..`z4[c]`, `w[i]` and `w'[i]` for i < ℓ = |colors| - k.
/// Budget 3k+2ℓ+n-2. The product is bipartite; it is 2-degenerate only for
/// ℓ <= 2, since the z1 vertices and W span a complete bipartite graph.
pub fn gen_md_from_rainbow_matching(g: &Graph, phi: &Coloring, k: usize) -> Result<Generated> {
    simple(g)?;
    phi.check_for(g)?;
    if phi.kind() != ElementKind::Edge {
        return Err(Error::KindMismatch);
    }
    let order = path_order(g)?;
    let n = g.vertex_count();
    for v in 0..n {
        let inc: Vec<usize> = g.neighbors(v).iter().map(|&(_, e)| e).collect();
        if inc.len() == 2 && phi.color_of(inc[0]) == phi.color_of(inc[1]) {
            return Err(Error::Input(format!("coloring is not proper at vertex {v}")));
        }
    }
    let mut palette: Vec<usize> = phi.colors().to_vec();
    palette.sort_unstable();
    palette.dedup();
    if k > palette.len() {
        return Err(Error::Input(format!("k = {k} exceeds the {} colors used", palette.len())));
    }
    let ell = palette.len() - k;
    let mut side_a = vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        side_a[v] = i % 2 == 0;
    }
    let mut b = Builder::default();
    // x[u,e] ids per edge: (id at A-endpoint, id at B-endpoint)
    let mut xa = vec![0; g.edge_count()];
    let mut x_at = vec![Vec::new(); n];
    for (e, &(p, q)) in g.edges().iter().enumerate() {
        let xp = b.vertex(format!("x[{p},{e}]"));
        let xq = b.vertex(format!("x[{q},{e}]"));
        b.edge(xp, xq);
        xa[e] = if side_a[p] { xp } else { xq };
        x_at[p].push(xp);
        x_at[q].push(xq);
    }
    let mut start = Vec::new();
    for u in 0..n {
        if g.degree(u) == 2 {
            let y: Vec<usize> = (1..=3).map(|i| b.vertex(format!("y{i}[{u}]"))).collect();
            start.push(b.edges.len());
            b.edge(y[0], y[1]);
            start.push(b.edges.len());
            b.edge(y[1], y[2]);
            for &xu in &x_at[u] {
                b.edge(xu, y[0]);
            }
        }
    }
    let z: Vec<Vec<usize>> =
        (0..palette.len()).map(|c| (1..=4).map(|i| b.vertex(format!("z{i}[{c}]"))).collect()).collect();
    for zc in &z {
        for i in 0..3 {
            start.push(b.edges.len());
            b.edge(zc[i], zc[i + 1]);
        }
    }
    for e in 0..g.edge_count() {
        let c = palette.binary_search(&phi.color_of(e)).expect("palette holds every color");
        b.edge(z[c][0], xa[e]);
    }
    let w: Vec<usize> = (0..ell).map(|i| b.vertex(format!("w[{i}]"))).collect();
    let w2: Vec<usize> = (0..ell).map(|i| b.vertex(format!("w'[{i}]"))).collect();
    for zc in &z {
        for i in 0..ell {
            b.edge(zc[0], w[i]);
            b.edge(zc[3], w2[i]);
        }
    }
    let h = b.graph()?;
    let budget = 3 * k + 2 * ell + n - 2;
    let instance =
        DiscoveryInstance::new(h, Problem::Matching, Model::Sliding, Configuration::new(ElementKind::Edge, start)?, budget)?;
    let expected = (g.edge_count() <= BRUTE_EDGES).then(|| has_rainbow_matching(g, phi, k));
    Ok(Generated {
        instance,
        manifest: Manifest {
            reduction: "rainbow-matching-to-md".into(),
            source: json!({ "graph": graph_json(g), "colors": phi.colors(), "k": k }),
            budget_formula: "3k+2l+n-2".into(),
            budget,
            expected,
            labels: b.labels,
            seed: None,
        },
    })
}

/// Base problem of a random profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    SpanningTree,
    ShortestPath,
    Matching,
    VertexCut,
    EdgeCut,
}

/// Recipe for [`gen_random_instance`]. Ranges are inclusive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub n: usize,
    pub density: f64,
    pub problem: ProblemKind,
    pub model: Model,
    pub k: (usize, usize),
    pub budget: (usize, usize),
    pub seed: u64,
    #[serde(default)]
    pub relaxed: bool,
}

const RANDOM_ATTEMPTS: usize = 10_000;

/// Random instance: G(n, density), then a uniform start configuration.
/// Spanning tree profiles force k = n-1; shortest path profiles resample
/// the graph and terminals until dist(s,t)+1 = k.
pub fn gen_random_instance(p: &Profile) -> Result<Generated> {
    let bad = |m: String| Err(Error::Input(m));
    if p.n == 0 {
        return bad("profile needs n >= 1".into());
    }
    if !(0.0..=1.0).contains(&p.density) {
        return bad(format!("density {} outside [0, 1]", p.density));
    }
    if p.k.0 > p.k.1 || p.budget.0 > p.budget.1 {
        return bad("empty k or budget range".into());
    }
    let max_edges = binom2(p.n);
    let cap = match p.problem {
        ProblemKind::SpanningTree => max_edges.max(p.n - 1),
        ProblemKind::Matching | ProblemKind::EdgeCut => max_edges,
        ProblemKind::ShortestPath | ProblemKind::VertexCut => p.n,
    };
    if p.problem != ProblemKind::SpanningTree && p.k.0 > cap {
        return bad(format!("k >= {} cannot fit in {cap} elements", p.k.0));
    }
    if p.problem == ProblemKind::SpanningTree && p.n - 1 > max_edges {
        return bad("spanning tree profile needs more edges".into());
    }
    if matches!(p.problem, ProblemKind::ShortestPath | ProblemKind::VertexCut | ProblemKind::EdgeCut) && p.n < 2
        && !(p.problem == ProblemKind::ShortestPath && p.k.0 <= 1)
    {
        return bad("terminal problems need n >= 2".into());
    }
    if p.relaxed && p.model != Model::AddRemove {
        return bad("relaxed applies to add_remove profiles only".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let k = match p.problem {
        ProblemKind::SpanningTree => p.n - 1,
        _ => rng.gen_range(p.k.0..=p.k.1.min(cap)),
    };
    let budget = rng.gen_range(p.budget.0..=p.budget.1);
    for _ in 0..RANDOM_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..p.n {
            for v in u + 1..p.n {
                if rng.gen_bool(p.density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(p.n, edges)?;
        let (problem, count) = match p.problem {
            ProblemKind::SpanningTree => (Problem::SpanningTree, g.edge_count()),
            ProblemKind::Matching => (Problem::Matching, g.edge_count()),
            _ => {
                let s = rng.gen_range(0..p.n);
                let t = if p.n == 1 { 0 } else { (s + rng.gen_range(1..p.n)) % p.n };
                match p.problem {
                    ProblemKind::ShortestPath => {
                        if bfs_distances(&g, s)?[t] != Some(k.wrapping_sub(1)) {
                            continue;
                        }
                        (Problem::ShortestPath { s, t }, p.n)
                    }
                    ProblemKind::VertexCut => (Problem::VertexCut { s, t }, p.n),
                    _ => (Problem::EdgeCut { s, t }, g.edge_count()),
                }
            }
        };
        if count < k {
            continue;
        }
        let start = sample(&mut rng, count, k).into_vec();
        let instance = DiscoveryInstance::new(g, problem, p.model, Configuration::new(problem.kind(), start)?, budget)?
            .with_relaxed(p.relaxed)?;
        return Ok(Generated {
            instance,
            manifest: Manifest {
                reduction: "random".into(),
                source: serde_json::to_value(p).expect("profile serializes"),
                budget_formula: "uniform in profile range".into(),
                budget,
                expected: None,
                labels: Vec::new(),
                seed: Some(p.seed),
            },
        });
    }
    bad(format!("no valid instance after {RANDOM_ATTEMPTS} attempts"))
}

/// Hamiltonian path by subset DP over (visited set, endpoint).
pub fn has_hamiltonian_path(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    assert!(n <= 24, "hamiltonian path brute force is for small graphs");
    let full = (1usize << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        reach[1 << v] |= 1 << v;
    }
    for mask in 1..=full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for v in 0..n {
            if ends & (1 << v) == 0 {
                continue;
            }
            for &(w, _) in g.neighbors(v) {
                if mask & (1 << w) == 0 {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    reach[full] != 0
}

/// Whether g has a clique on kappa vertices, by extension of cliques in
/// increasing vertex order.
pub fn has_clique(g: &Graph, kappa: usize) -> bool {
    fn grow(g: &Graph, clique: &mut Vec<usize>, next: usize, kappa: usize) -> bool {
        if clique.len() == kappa {
            return true;
        }
        for v in next..g.vertex_count() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                if grow(g, clique, v + 1, kappa) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    grow(g, &mut Vec::new(), 0, kappa)
}

/// Whether g has a matching of k edges with pairwise distinct colors.
pub fn has_rainbow_matching(g: &Graph, phi: &Coloring, k: usize) -> bool {
    fn grow(g: &Graph, phi: &Coloring, next: usize, k: usize, used_v: &mut Vec<bool>, used_c: &mut Vec<bool>) -> bool {
        if k == 0 {
            return true;
        }
        for e in next..g.edge_count() {
            let (u, v) = g.endpoints(e);
            let c = phi.color_of(e);
            if used_v[u] || used_v[v] || used_c[c] {
                continue;
            }
            used_v[u] = true;
            used_v[v] = true;
            used_c[c] = true;
            let found = grow(g, phi, e + 1, k - 1, used_v, used_c);
            used_v[u] = false;
            used_v[v] = false;
            used_c[c] = false;
            if found {
                return true;
            }
        }
        false
    }
    grow(g, phi, 0, k, &mut vec![false; g.vertex_count()], &mut vec![false; phi.palette_size()])
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for r in 0..n {
        if side[r] != u8::MAX {
            continue;
        }
        side[r] = 0;
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Degeneracy: the largest minimum degree met while repeatedly deleting a
/// minimum-degree vertex.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let maxd = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut best = 0;
    let mut d = 0usize;
    for _ in 0..n {
        d = d.saturating_sub(1);
        let v = loop {
            while buckets[d].is_empty() {
                d += 1;
            }
            let v = buckets[d].pop().unwrap();
            if !gone[v] && deg[v] == d {
                break v;
            }
        };
        gone[v] = true;
        best = best.max(d);
        for &(w, _) in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
            }
        }
    }
    best
}

/// One representative of every isomorphism class of simple graphs on n
/// vertices (n <= 7), by minimum adjacency bitmask over all relabelings.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "enumeration is for n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = rustc_hash::FxHashSet::default();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]])
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| canon >> i & 1 == 1).map(|(_, &e)| e).collect();
            out.push(Graph::new(n, edges).expect("simple"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(p, i + 1, out);
            p.swap(i, j);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}
