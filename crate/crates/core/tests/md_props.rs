use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconfig_core::md_solver::*;
use reconfig_core::oracle::{oracle_min_cost, validate_schedule};
use reconfig_core::*;

fn cases() -> u32 {
    std::env::var("MD_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(300)
}

fn random_md(seed: u64, n: usize, k: usize, model: Model) -> Option<DiscoveryInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.gen_range(0.2..0.6);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    if edges.len() < k {
        return None;
    }
    let g = Graph::new(n, edges).ok()?;
    let mut ids: Vec<usize> = (0..g.edge_count()).collect();
    for i in 0..ids.len() {
        let j = rng.gen_range(i..ids.len());
        ids.swap(i, j);
    }
    ids.truncate(k);
    let start = Configuration::new(ElementKind::Edge, ids).ok()?;
    let b = rng.gen_range(0..9);
    DiscoveryInstance::new(g, Problem::Matching, model, start, b).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(cases()))]

    #[test]
    fn sliding_matches_oracle(seed in any::<u64>(), n in 4usize..9, k in 1usize..4) {
        if let Some(inst) = random_md(seed, n, k, Model::Sliding) {
            let o = oracle_min_cost(&inst).unwrap();
            let f = solve_md_sliding_fpt(&inst).unwrap();
            let full = solve_md_sliding_fpt_with(&inst, CandidateMode::Full).unwrap();
            let bb = solve_md_sliding_bnb(&inst).unwrap();
            prop_assert_eq!(o.decision, f.decision);
            prop_assert_eq!(o.decision, full.decision);
            prop_assert_eq!(o.decision, bb.decision);
            if o.decision {
                prop_assert_eq!(o.cost, f.cost);
                prop_assert_eq!(o.cost, bb.cost);
                prop_assert!(o.cost.unwrap() <= md_budget_upper_bound(k));
                prop_assert!(validate_schedule(&inst, f.schedule.as_ref().unwrap()).valid);
                prop_assert!(validate_schedule(&inst, bb.schedule.as_ref().unwrap()).valid);
            }
        }
    }

    #[test]
    fn bnb_matches_oracle_more_tokens(seed in any::<u64>(), n in 5usize..9, k in 3usize..6) {
        if let Some(inst) = random_md(seed, n, k, Model::Sliding) {
            let o = oracle_min_cost(&inst).unwrap();
            let bb = solve_md_sliding_bnb(&inst).unwrap();
            let d = solve_md_sliding_bnb_decide(&inst).unwrap();
            prop_assert_eq!(o.decision, bb.decision);
            prop_assert_eq!(o.decision, d.decision);
            if o.decision {
                prop_assert_eq!(o.cost, bb.cost);
                prop_assert!(d.cost.unwrap() <= inst.budget());
                prop_assert!(validate_schedule(&inst, d.schedule.as_ref().unwrap()).valid);
            }
        }
    }

    #[test]
    fn jumping_addrem_match_oracle(seed in any::<u64>(), n in 4usize..9, k in 1usize..4, relaxed in any::<bool>()) {
        if let Some(inst) = random_md(seed, n, k, Model::Jumping) {
            let o = oracle_min_cost(&inst).unwrap();
            let r = solve_md_jumping(&inst).unwrap();
            prop_assert_eq!(o.decision, r.decision);
            if o.decision { prop_assert_eq!(o.cost, r.cost); }
            let a = inst.clone().with_model(Model::AddRemove).with_relaxed(relaxed).unwrap();
            let o = oracle_min_cost(&a).unwrap();
            let r = if relaxed { solve_md_addrem_relaxed(&a) } else { solve_md_addrem_exact(&a) }.unwrap();
            prop_assert_eq!(o.decision, r.decision);
            if o.decision {
                prop_assert_eq!(o.cost, r.cost);
                prop_assert!(validate_schedule(&a, r.schedule.as_ref().unwrap()).valid);
            }
        }
    }

    #[test]
    fn red_blue_matches_brute_force(seed in any::<u64>(), n in 2usize..9, k in 0usize..5, b in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if edges.len() < 16 && rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let colors: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(0..2)).collect();
        let rb = Coloring::new(ElementKind::Edge, 2, colors.clone()).unwrap();
        let got = red_blue_matching(&g, &rb, k, b);
        // brute force over edge subsets of size k
        let m = g.edge_count();
        let mut best: Option<usize> = None;
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != k { continue; }
            let set: Vec<usize> = (0..m).filter(|&e| mask & (1 << e) != 0).collect();
            if engines::is_matching(&g, &set) {
                let blue = set.iter().filter(|&&e| colors[e] == 1).count();
                best = Some(best.map_or(blue, |x: usize| x.min(blue)));
            }
        }
        prop_assert_eq!(got.decision, best.is_some_and(|x| x <= b));
        prop_assert_eq!(got.min_blue, best);
    }
}
