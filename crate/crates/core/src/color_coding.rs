//! Random coloring reduction from sliding discovery to a weighted rainbow
//! problem, plus repetition.
//!
//! Start element i (in sorted order) gets color i; every other element gets
//! a uniform color. An element x of color c weighs the slide distance from x
//! to the start element of color c. A rainbow solution of weight w then
//! gives a discovery of cost at most w, since each color names a distinct
//! token and unused colors' tokens can stay.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{element_distances_from, Coloring, WeightMap};
use crate::instance::{DiscoveryInstance, Model, SolveResult};
use crate::realize::assignment_schedule;

/// Weight of an element its color's token cannot reach. Rainbow solvers
/// treat such elements as unusable.
pub const UNREACHABLE: u64 = 1 << 40;

/// Failure probability targeted by [`default_trials`].
pub const DEFAULT_DELTA: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowReduction {
    pub colors: Coloring,
    pub weights: WeightMap,
    /// pi[c] = start element of color c.
    pub pi: Vec<usize>,
    pub seed: u64,
}

/// Weighted rainbow solver: a minimum-weight rainbow element set which
/// makes the configuration feasible, or `None` when none exists.
pub type RainbowSolver<'a> = dyn Fn(&DiscoveryInstance, &RainbowReduction) -> Result<Option<(u64, Vec<usize>)>> + 'a;

pub fn discovery_to_weighted_rainbow(inst: &DiscoveryInstance, seed: u64) -> Result<RainbowReduction> {
    if inst.model() != Model::Sliding {
        return Err(Error::Input("color coding reduces sliding instances only".into()));
    }
    let g = inst.graph();
    let kind = inst.kind();
    let k = inst.k();
    let pi: Vec<usize> = inst.start().elements().to_vec();
    let count = g.element_count(kind);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors = vec![0; count];
    let mut start_color = vec![usize::MAX; count];
    for (c, &x) in pi.iter().enumerate() {
        start_color[x] = c;
    }
    for x in 0..count {
        colors[x] = if start_color[x] != usize::MAX {
            start_color[x]
        } else if k > 0 {
            rng.gen_range(0..k)
        } else {
            0
        };
    }
    let dists = pi.iter().map(|&x| element_distances_from(g, kind, x)).collect::<Result<Vec<_>>>()?;
    let weights = (0..count)
        .map(|x| if k == 0 { UNREACHABLE } else { dists[colors[x]][x].map_or(UNREACHABLE, |d| d as u64) })
        .collect();
    Ok(RainbowReduction {
        colors: Coloring::new(kind, k.max(1), colors)?,
        weights: WeightMap::new(weights)?,
        pi,
        seed,
    })
}

/// Summed weight of a rainbow solution: an upper bound on its discovery cost.
pub fn rainbow_solution_to_cost(red: &RainbowReduction, solution: &[usize]) -> Result<u64> {
    let mut seen = vec![false; red.colors.palette_size()];
    let mut total = 0u64;
    for &x in solution {
        let c = red.colors.color_of(x);
        if seen[c] {
            return Err(Error::Input(format!("color {c} used twice")));
        }
        seen[c] = true;
        total += red.weights.weight_of(x);
    }
    Ok(total)
}

/// Trials making the failure probability on yes-instances at most delta,
/// given per-trial success at least e^-k.
pub fn default_trials(k: usize) -> u64 {
    trials_for(k, DEFAULT_DELTA)
}

pub fn trials_for(k: usize, delta: f64) -> u64 {
    ((k as f64).exp() * (1.0 / delta).ln()).ceil() as u64
}

/// Seed of trial i, derived by splitmix64 so trials are independent and
/// replayable one by one.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed.wrapping_add(i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Target configuration for a rainbow solution: the solution plus the
/// start elements of unused colors.
pub fn solution_target(red: &RainbowReduction, solution: &[usize]) -> Vec<usize> {
    let mut used = vec![false; red.pi.len()];
    for &x in solution {
        used[red.colors.color_of(x)] = true;
    }
    let mut target: Vec<usize> = solution.to_vec();
    target.extend((0..red.pi.len()).filter(|&c| !used[c]).map(|c| red.pi[c]));
    target.sort_unstable();
    target
}

/// One trial: does the reduction under `seed` expose a solution within
/// the budget? Returns its weight and element set when it does.
pub fn run_trial(inst: &DiscoveryInstance, solver: &RainbowSolver, seed: u64) -> Result<Option<(u64, Vec<usize>)>> {
    let red = discovery_to_weighted_rainbow(inst, seed)?;
    match solver(inst, &red)? {
        Some((w, sol)) if w <= inst.budget() as u64 && w < UNREACHABLE => {
            debug_assert_eq!(rainbow_solution_to_cost(&red, &sol)?, w);
            Ok(Some((w, solution_target(&red, &sol))))
        }
        _ => Ok(None),
    }
}

/// Repeated color coding. Yes answers carry a schedule; a no after all
/// trials is only probable.
pub fn randomized_discovery_solver(
    inst: &DiscoveryInstance,
    solver: &RainbowSolver,
    trials: u64,
    seed: u64,
) -> Result<SolveResult> {
    const SOLVER: &str = "color-coding";
    for i in 0..trials {
        let ts = trial_seed(seed, i);
        if let Some((_, target)) = run_trial(inst, solver, ts)? {
            let (cost, sch) = assignment_schedule(inst.graph(), inst.kind(), inst.start().elements(), &target)?
                .expect("finite weights mean reachable targets");
            let mut res = SolveResult::yes(SOLVER, cost, false, sch);
            res.provenance.seed = Some(ts);
            res.provenance.trials = Some(i + 1);
            return Ok(res);
        }
    }
    let mut res = SolveResult::no(SOLVER);
    res.provenance.probabilistic_no = true;
    res.provenance.seed = Some(seed);
    res.provenance.trials = Some(trials);
    Ok(res)
}
