use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconfig_core::engines::matroid::is_forest;
use reconfig_core::engines::minimum_spanning_tree;
use reconfig_core::oracle::{oracle_min_cost, oracle_search, validate_schedule};
use reconfig_core::std_solver::*;
use reconfig_core::*;

fn cases() -> u32 {
    std::env::var("STD_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(200)
}

/// Connected graph on n vertices with n-1 tokens on random edges.
fn random_std(seed: u64, n: usize, p: f64, model: Model, b: usize) -> DiscoveryInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let m = edges.len();
    let start = rand::seq::index::sample(&mut rng, m, n - 1).into_vec();
    let g = Graph::new(n, edges).unwrap();
    DiscoveryInstance::new(g, Problem::SpanningTree, model, Configuration::new(ElementKind::Edge, start).unwrap(), b)
        .unwrap()
}

fn check(inst: &DiscoveryInstance, r: &SolveResult) -> std::result::Result<(), TestCaseError> {
    let o = oracle_min_cost(inst).unwrap();
    prop_assert_eq!(r.decision, o.decision);
    if r.decision {
        prop_assert_eq!(r.cost, o.cost);
        prop_assert!(validate_schedule(inst, r.schedule.as_ref().unwrap()).valid);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(cases()))]

    #[test]
    fn sliding_matches_oracle(seed in any::<u64>(), n in 2usize..7, p in 0.1f64..0.8, b in 0usize..5) {
        let inst = random_std(seed, n, p, Model::Sliding, b);
        check(&inst, &solve_std_sliding(&inst).unwrap())?;
        // with room to spare the cost is the exact distance
        let wide = inst.clone().with_budget(2 * n);
        check(&wide, &solve_std_sliding(&wide).unwrap())?;
    }

    #[test]
    fn jumping_and_addrem_match_oracle(seed in any::<u64>(), n in 2usize..7, p in 0.1f64..0.8, b in 0usize..6) {
        for model in [Model::Jumping, Model::AddRemove] {
            let inst = random_std(seed, n, p, model, b);
            check(&inst, &solve_std_jumping_addrem(&inst).unwrap())?;
        }
    }

    /// The weighted variant reaches a minimum-weight tree with the fewest
    /// slides among all minimum-weight trees.
    #[test]
    fn weighted_matches_goal_search(seed in any::<u64>(), n in 2usize..7, p in 0.1f64..0.8, top in 1u64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x77);
        let base = random_std(seed, n, p, Model::Sliding, 3 * n);
        let g = base.graph().clone();
        let w = WeightMap::new((0..g.edge_count()).map(|_| rng.gen_range(0..=top)).collect()).unwrap();
        let best = minimum_spanning_tree(&g, &w).unwrap().1;
        let inst = base.with_weights(w.clone()).unwrap();
        let r = solve_mstd_sliding(&inst).unwrap();
        let goal = |es: &[usize]| {
            es.len() + 1 == n && is_forest(&g, es) && es.iter().map(|&e| w.weight_of(e)).sum::<u64>() == best
        };
        let o = oracle_search(&inst, 1_000_000, &goal).unwrap();
        prop_assert!(r.decision && o.decision);
        prop_assert_eq!(r.cost, o.cost);
        let sch = r.schedule.as_ref().unwrap();
        prop_assert!(validate_schedule(&inst, sch).valid);
        let mut end = inst.start().elements().to_vec();
        for mv in &sch.moves {
            if let Move::Shift { from, to } = *mv {
                let i = end.iter().position(|&x| x == from).unwrap();
                end[i] = to;
            }
        }
        prop_assert!(goal(&end));
    }
}
