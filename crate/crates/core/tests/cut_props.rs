use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconfig_core::cut_solver::*;
use reconfig_core::oracle::{connected_avoiding, oracle_min_cost, validate_schedule};
use reconfig_core::*;

fn cases() -> u32 {
    std::env::var("CUT_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(200)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = rng.gen_range(0.2..0.6);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Brute force over vertex subsets of size <= k avoiding s and t.
fn brute_cuts(g: &Graph, s: usize, t: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let n = g.vertex_count();
    for mask in 0u32..(1 << n) {
        if mask & (1 << s) != 0 || mask & (1 << t) != 0 || mask.count_ones() as usize > k {
            continue;
        }
        if !connected_avoiding(g, s, t, |v| mask & (1 << v) != 0, |_| false) {
            let set: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            f(&set);
        }
    }
}

fn random_cut_instance(seed: u64, n: usize, k: usize, model: Model, edge: bool) -> Option<DiscoveryInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_graph(&mut rng, n);
    let s = rng.gen_range(0..n);
    let t = (s + rng.gen_range(1..n)) % n;
    let count = if edge { g.edge_count() } else { n };
    if count < k {
        return None;
    }
    let mut ids: Vec<usize> = (0..count).collect();
    for i in 0..count {
        let j = rng.gen_range(i..count);
        ids.swap(i, j);
    }
    ids.truncate(k);
    let (kind, problem) =
        if edge { (ElementKind::Edge, Problem::EdgeCut { s, t }) } else { (ElementKind::Vertex, Problem::VertexCut { s, t }) };
    DiscoveryInstance::new(g, problem, model, Configuration::new(kind, ids).ok()?, rng.gen_range(0..8)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(cases()))]

    #[test]
    fn red_blue_matches_brute_force(seed in any::<u64>(), n in 3usize..11, k in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n);
        let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        let rb = Coloring::new(ElementKind::Vertex, 2, colors.clone()).unwrap();
        let (s, t) = (0, n - 1);
        let mut best: Option<usize> = None;
        if !g.has_edge(s, t) {
            brute_cuts(&g, s, t, k, |c| {
                let b = c.iter().filter(|&&v| colors[v] == 1).count();
                best = Some(best.map_or(b, |x: usize| x.min(b)));
            });
        }
        let got = red_blue_min_blue_cut(&g, &rb, s, t, k);
        prop_assert_eq!(got.min_blue, best);
        if let Some(w) = got.witness {
            prop_assert!(w.len() <= k);
            prop_assert!(!connected_avoiding(&g, s, t, |v| w.contains(&v), |_| false));
        }
    }

    #[test]
    fn rainbow_matches_brute_force(seed in any::<u64>(), n in 3usize..11, k in 0usize..5, pal in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n);
        let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..pal)).collect();
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..5)).collect();
        let phi = Coloring::new(ElementKind::Vertex, pal, colors.clone()).unwrap();
        let w = WeightMap::new(weights.clone()).unwrap();
        let (s, t) = (0, n - 1);
        let mut best: Option<u64> = None;
        if !g.has_edge(s, t) {
            brute_cuts(&g, s, t, k, |c| {
                let mut seen = vec![false; pal];
                for &v in c {
                    if seen[colors[v]] { return; }
                    seen[colors[v]] = true;
                }
                let x: u64 = c.iter().map(|&v| weights[v]).sum();
                best = Some(best.map_or(x, |y: u64| y.min(x)));
            });
        }
        let got = weighted_rainbow_cut_exact(&g, &phi, &w, s, t, k);
        prop_assert_eq!(got.as_ref().map(|x| x.0), best);
    }

    #[test]
    fn solvers_match_oracle(seed in any::<u64>(), n in 4usize..9, k in 0usize..4, edge in any::<bool>()) {
        if let Some(inst) = random_cut_instance(seed, n, k, Model::Jumping, edge) {
            let o = oracle_min_cost(&inst).unwrap();
            let r = solve_cut_jumping(&inst).unwrap();
            prop_assert_eq!(o.decision, r.decision);
            if o.decision {
                prop_assert_eq!(o.cost, r.cost);
                prop_assert!(validate_schedule(&inst, r.schedule.as_ref().unwrap()).valid);
            }
            let sl = inst.clone().with_model(Model::Sliding);
            let o = oracle_min_cost(&sl).unwrap();
            let r = solve_cut_sliding_bnb(&sl).unwrap();
            prop_assert_eq!(o.decision, r.decision);
            if o.decision {
                prop_assert_eq!(o.cost, r.cost);
                prop_assert!(validate_schedule(&sl, r.schedule.as_ref().unwrap()).valid);
            }
            let d = solve_cut_sliding_bnb_decide(&sl).unwrap();
            prop_assert_eq!(o.decision, d.decision);
            if d.decision {
                prop_assert!(validate_schedule(&sl, d.schedule.as_ref().unwrap()).valid);
            }
            let cc = solve_cut_sliding(&sl, SlidingCutOptions { trials: None, seed, cross_check_cap: None }).unwrap();
            // never a false yes
            if cc.decision {
                prop_assert!(o.decision);
                prop_assert!(validate_schedule(&sl, cc.schedule.as_ref().unwrap()).valid);
            }
            for relaxed in [false, true] {
                let a = inst.clone().with_model(Model::AddRemove).with_relaxed(relaxed).unwrap();
                let o = oracle_min_cost(&a).unwrap();
                let r = solve_cut_addrem(&a).unwrap();
                prop_assert_eq!(o.decision, r.decision);
                if o.decision {
                    prop_assert_eq!(o.cost, r.cost);
                    prop_assert!(validate_schedule(&a, r.schedule.as_ref().unwrap()).valid);
                }
            }
        }
    }
}
