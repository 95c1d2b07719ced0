use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconfig_core::oracle::{oracle_min_cost, validate_schedule};
use reconfig_core::spd_solver::*;
use reconfig_core::*;

/// Random connected graph plus an SPD start configuration of the right size.
fn random_spd(seed: u64, n: usize, p: f64) -> Option<DiscoveryInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges).ok()?;
    let s = rng.gen_range(0..n);
    let t = rng.gen_range(0..n);
    let d = graph::bfs_distances(&g, s).ok()?[t]?;
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let j = rng.gen_range(i..n);
        verts.swap(i, j);
    }
    verts.truncate(d + 1);
    let start = Configuration::new(ElementKind::Vertex, verts).ok()?;
    let b = rng.gen_range(0..6);
    DiscoveryInstance::new(g, Problem::ShortestPath { s, t }, Model::Sliding, start, b).ok()
}

/// Shortest path start perturbed by a few random slides.
fn perturbed_spd(seed: u64, n: usize, p: f64, slides: usize) -> Option<DiscoveryInstance> {
    let base = random_spd(seed, n, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let Problem::ShortestPath { s, t } = base.problem() else { unreachable!() };
    let g = base.graph().clone();
    let dag = LevelDag::new(&g, s, t).ok()?;
    let noise: Vec<u64> = (0..g.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
    let (_, path) = dag.cheapest_path(|_, v| noise[v])?;
    let mut occ = path.clone();
    for _ in 0..slides {
        let i = rng.gen_range(0..occ.len());
        let nb: Vec<usize> = g.neighbors(occ[i]).iter().map(|&(w, _)| w).filter(|w| !occ.contains(w)).collect();
        if !nb.is_empty() {
            occ[i] = nb[rng.gen_range(0..nb.len())];
        }
    }
    let start = Configuration::new(ElementKind::Vertex, occ).ok()?;
    DiscoveryInstance::new(g, base.problem(), Model::Sliding, start, rng.gen_range(0..5)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(std::env::var("SPD_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(300)))]

    #[test]
    fn fpt_k_matches_oracle(seed in any::<u64>(), n in 4usize..9) {
        if let Some(inst) = random_spd(seed, n, 0.25) {
            let o = oracle_min_cost(&inst).unwrap();
            let r = solve_spd_sliding_fpt_k(&inst).unwrap();
            prop_assert_eq!(o.decision, r.decision);
            if r.decision {
                prop_assert_eq!(o.cost, r.cost);
                prop_assert!(validate_schedule(&inst, r.schedule.as_ref().unwrap()).valid);
            }
            let sd = solve_spd_sliding_subset_dp(&inst.clone().with_budget(1000)).unwrap();
            let fk = solve_spd_sliding_fpt_k(&inst.clone().with_budget(1000)).unwrap();
            prop_assert_eq!(sd.cost, fk.cost);
        }
    }

    #[test]
    fn fpt_b_matches_fpt_k(seed in any::<u64>(), n in 4usize..14, p in 0.05f64..0.3) {
        if let Some(inst) = random_spd(seed, n, p) {
            let inst = inst.clone().with_budget(inst.budget() % 5);
            let a = solve_spd_sliding_fpt_k(&inst).unwrap();
            let b = solve_spd_sliding_fpt_b(&inst).unwrap();
            prop_assert_eq!(a.decision, b.decision);
            if b.decision {
                prop_assert_eq!(a.cost, b.cost);
                prop_assert!(validate_schedule(&inst, b.schedule.as_ref().unwrap()).valid);
            }
        }
    }

    #[test]
    fn fpt_b_matches_fpt_k_near_paths(seed in any::<u64>(), n in 5usize..16, p in 0.05f64..0.3, slides in 0usize..6) {
        if let Some(inst) = perturbed_spd(seed, n, p, slides) {
            let a = solve_spd_sliding_fpt_k(&inst).unwrap();
            let b = solve_spd_sliding_fpt_b(&inst).unwrap();
            prop_assert_eq!(a.decision, b.decision);
            prop_assert_eq!(a.decision.then_some(a.cost), b.decision.then_some(b.cost));
        }
    }
}
