use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconfig_core::cut_solver::{solve_cut_jumping, solve_cut_sliding_bnb_decide};
use reconfig_core::generators::*;
use reconfig_core::graph::bfs_distances;
use reconfig_core::md_solver::solve_md_sliding_bnb_decide;
use reconfig_core::oracle::validate_schedule;
use reconfig_core::spd_solver::solve_spd_sliding_subset_dp;
use reconfig_core::*;

fn structural(h: &Graph) {
    assert!(is_bipartite(h));
    assert!(degeneracy(h) <= 2);
}

#[test]
fn hampath_products_up_to_five_vertices() {
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n) {
            let gen = gen_spd_from_hampath(&g).unwrap();
            structural(gen.instance.graph());
            assert_eq!(gen.instance.budget(), n * (2 * n + 2) + 3 * n + 2);
            assert_eq!(gen.instance.k(), 2 * n + 3);
            let r = solve_spd_sliding_subset_dp(&gen.instance).unwrap();
            assert_eq!(Some(r.decision), gen.manifest.expected, "{g:?}");
            if r.decision {
                assert!(validate_schedule(&gen.instance, r.schedule.as_ref().unwrap()).valid);
            }
        }
    }
}

#[test]
fn hampath_labels_address_gadgets() {
    let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    let gen = gen_spd_from_hampath(&g).unwrap();
    let h = gen.instance.graph();
    let v = |l: &str| gen.manifest.vertex(l).unwrap();
    assert!(h.has_edge(v("s'"), v("s")));
    assert!(h.has_edge(v("v[0,1]"), v("w[0,1>2]")));
    assert!(h.has_edge(v("w[0,1>2]"), v("v[1,2]")));
    let d = bfs_distances(h, v("z[2]")).unwrap();
    assert_eq!(d[v("v[1,2]")], Some(8));
}

#[test]
fn clique_products_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(4..=6);
        let p = rng.gen_range(0.4..0.95);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let (sl, ju) = gen_cutd_from_clique(&g, 4).unwrap();
        structural(sl.instance.graph());
        assert_eq!(sl.instance.k(), 4 + g.edge_count());
        assert_eq!((sl.instance.budget(), ju.instance.budget()), (20, 10));
        let expected = sl.manifest.expected;
        let a = solve_cut_jumping(&ju.instance).unwrap();
        let b = solve_cut_sliding_bnb_decide(&sl.instance).unwrap();
        assert_eq!(Some(a.decision), expected);
        assert_eq!(Some(b.decision), expected);
        for (inst, r) in [(&ju.instance, &a), (&sl.instance, &b)] {
            if r.decision {
                assert!(validate_schedule(inst, r.schedule.as_ref().unwrap()).valid);
            }
        }
    }
}

/// Every proper coloring of a path with m edges, colors in first-use order.
fn proper_colorings(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let fresh = cur.iter().max().map_or(0, |&c| c + 1);
        for c in 0..=fresh {
            if cur.last() != Some(&c) {
                cur.push(c);
                rec(m, cur, out);
                cur.pop();
            }
        }
    }
    rec(m, &mut cur, &mut out);
    out
}

#[test]
fn rainbow_matching_products_short_paths() {
    for m in 1..=4 {
        let g = Graph::new(m + 1, (0..m).map(|v| (v, v + 1)).collect()).unwrap();
        for colors in proper_colorings(m) {
            let used = colors.iter().max().unwrap() + 1;
            let phi = Coloring::new(ElementKind::Edge, used, colors.clone()).unwrap();
            for k in 1..=used {
                let gen = gen_md_from_rainbow_matching(&g, &phi, k).unwrap();
                let h = gen.instance.graph();
                // z1 vertices and W form K_{|C|,l}, so 2-degeneracy needs l <= 2
                assert!(is_bipartite(h));
                assert!(degeneracy(h) <= 2.max(used - k));
                if used - k >= 3 {
                    assert!(degeneracy(h) >= 3);
                }
                assert_eq!(gen.instance.budget(), 3 * k + 2 * (used - k) + m - 1);
                let r = solve_md_sliding_bnb_decide(&gen.instance).unwrap();
                assert_eq!(Some(r.decision), gen.manifest.expected, "{colors:?} k={k}");
                if r.decision {
                    assert!(validate_schedule(&gen.instance, r.schedule.as_ref().unwrap()).valid);
                }
            }
        }
    }
}

fn problem_kind() -> impl Strategy<Value = ProblemKind> {
    prop_oneof![
        Just(ProblemKind::SpanningTree),
        Just(ProblemKind::ShortestPath),
        Just(ProblemKind::Matching),
        Just(ProblemKind::VertexCut),
        Just(ProblemKind::EdgeCut),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_profiles_replay(seed in any::<u64>(), n in 3usize..9, problem in problem_kind(), k in 1usize..4) {
        let p = Profile {
            n,
            density: 0.6,
            problem,
            model: Model::Jumping,
            k: (k, k),
            budget: (0, 5),
            seed,
            relaxed: false,
        };
        match gen_random_instance(&p) {
            Ok(a) => {
                let b = gen_random_instance(&p).unwrap();
                prop_assert_eq!(&a, &b);
                let inst = &a.instance;
                prop_assert!(inst.budget() <= 5);
                match problem {
                    ProblemKind::SpanningTree => prop_assert_eq!(inst.k(), n - 1),
                    ProblemKind::ShortestPath => {
                        let (s, t) = inst.problem().terminals().unwrap();
                        prop_assert_eq!(bfs_distances(inst.graph(), s).unwrap()[t], Some(k - 1));
                    }
                    _ => prop_assert_eq!(inst.k(), k),
                }
            }
            // only sparse draws that never fit may fail
            Err(e) => prop_assert!(matches!(e, Error::Input(_))),
        }
    }
}
