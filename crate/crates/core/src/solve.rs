//! Solver selection by (problem, model, algorithm).

use std::str::FromStr;

use crate::cut_solver::{
    solve_cut_addrem, solve_cut_jumping, solve_cut_sliding, solve_cut_sliding_bnb, solve_cut_sliding_bnb_decide,
    SlidingCutOptions,
};
use crate::error::{Error, Result};
use crate::instance::{DiscoveryInstance, Model, Problem, SolveResult};
use crate::md_solver::{
    solve_md_addrem_exact, solve_md_addrem_relaxed, solve_md_jumping, solve_md_sliding_bnb, solve_md_sliding_bnb_decide,
    solve_md_sliding_fpt,
};
use crate::oracle::{oracle_cap_from_env, oracle_min_cost_with_cap};
use crate::spd_solver::{solve_spd_jumping_addrem, solve_spd_sliding_fpt_b, solve_spd_sliding_fpt_k, SUBSET_DP_LIMIT};
use crate::std_solver::{solve_mstd_sliding, solve_std_jumping_addrem, solve_std_sliding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Auto,
    Oracle,
    FptK,
    FptB,
    Reduction,
    ColorCoding,
    Bnb,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Auto,
        Algorithm::Oracle,
        Algorithm::FptK,
        Algorithm::FptB,
        Algorithm::Reduction,
        Algorithm::ColorCoding,
        Algorithm::Bnb,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Oracle => "oracle",
            Algorithm::FptK => "fpt-k",
            Algorithm::FptB => "fpt-b",
            Algorithm::Reduction => "reduction",
            Algorithm::ColorCoding => "colorcoding",
            Algorithm::Bnb => "bnb",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveOptions {
    /// Seed for randomized solvers; 0 when absent.
    pub seed: Option<u64>,
    /// Color coding repetitions; the default targets failure below 1%.
    pub trials: Option<u64>,
    /// Branch and bound stops at the first solution within the budget.
    pub decide: bool,
    /// Oracle state cap; the environment or the default when absent.
    pub oracle_cap: Option<usize>,
}

fn unsupported(inst: &DiscoveryInstance, alg: Algorithm) -> Error {
    Error::Input(format!(
        "algorithm {} does not apply to {} discovery in the {} model",
        alg.name(),
        inst.problem().name(),
        inst.model().name()
    ))
}

/// The concrete solver `alg` resolves to for this instance, for reports.
pub fn resolve(inst: &DiscoveryInstance, alg: Algorithm) -> Result<Algorithm> {
    use Algorithm::*;
    let p = inst.problem();
    let m = inst.model();
    let ok = match (alg, p, m) {
        (Auto, Problem::ShortestPath { .. }, Model::Sliding) => {
            return Ok(if inst.k() <= SUBSET_DP_LIMIT { FptK } else { FptB })
        }
        (Auto, Problem::Matching, Model::Sliding) => return Ok(if inst.k() <= 20 { FptK } else { Bnb }),
        (Auto, p, Model::Sliding) if p.is_cut() => return Ok(ColorCoding),
        (Auto, _, _) => return Ok(Reduction),
        (Oracle, _, _) => true,
        (FptK | FptB, Problem::ShortestPath { .. } | Problem::Matching, Model::Sliding) => true,
        (Reduction, Problem::SpanningTree, _) => true,
        (Reduction, _, Model::Jumping | Model::AddRemove) => true,
        (ColorCoding, p, Model::Sliding) => p.is_cut(),
        (Bnb, Problem::Matching, Model::Sliding) => true,
        (Bnb, p, Model::Sliding) => p.is_cut(),
        _ => false,
    };
    if ok {
        Ok(alg)
    } else {
        Err(unsupported(inst, alg))
    }
}

/// Run the solver selected by `alg`. Unsupported combinations are input
/// errors.
pub fn solve(inst: &DiscoveryInstance, alg: Algorithm, opts: SolveOptions) -> Result<SolveResult> {
    use Algorithm::*;
    let alg = resolve(inst, alg)?;
    let p = inst.problem();
    match (alg, p, inst.model()) {
        (Oracle, _, _) => oracle_min_cost_with_cap(inst, opts.oracle_cap.unwrap_or_else(oracle_cap_from_env)),
        (Reduction, Problem::SpanningTree, Model::Sliding) => {
            if inst.weights().is_some() {
                solve_mstd_sliding(inst)
            } else {
                solve_std_sliding(inst)
            }
        }
        (Reduction, Problem::SpanningTree, _) => solve_std_jumping_addrem(inst),
        (Reduction, Problem::ShortestPath { .. }, _) => solve_spd_jumping_addrem(inst),
        (Reduction, Problem::Matching, Model::Jumping) => solve_md_jumping(inst),
        (Reduction, Problem::Matching, _) => {
            if inst.relaxed() {
                solve_md_addrem_relaxed(inst)
            } else {
                solve_md_addrem_exact(inst)
            }
        }
        (Reduction, _, Model::Jumping) => solve_cut_jumping(inst),
        (Reduction, _, _) => solve_cut_addrem(inst),
        (FptK, Problem::ShortestPath { .. }, _) => solve_spd_sliding_fpt_k(inst),
        (FptB, Problem::ShortestPath { .. }, _) => solve_spd_sliding_fpt_b(inst),
        (FptK | FptB, Problem::Matching, _) => solve_md_sliding_fpt(inst),
        (Bnb, Problem::Matching, _) => {
            if opts.decide {
                solve_md_sliding_bnb_decide(inst)
            } else {
                solve_md_sliding_bnb(inst)
            }
        }
        (Bnb, _, _) => {
            if opts.decide {
                solve_cut_sliding_bnb_decide(inst)
            } else {
                solve_cut_sliding_bnb(inst)
            }
        }
        (ColorCoding, _, _) => solve_cut_sliding(
            inst,
            SlidingCutOptions { trials: opts.trials, seed: opts.seed.unwrap_or(0), cross_check_cap: None },
        ),
        _ => Err(unsupported(inst, alg)),
    }
}
