//! `reconfig`: solve, generate, bench and validate discovery instances.
//!
//! Exit codes: 0 yes (or valid), 3 no (or invalid schedule), 2 input or
//! configuration error, 4 solver/oracle mismatch.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use reconfig_core::generators::{
    gen_cutd_from_clique, gen_md_from_rainbow_matching, gen_random_instance, gen_spd_from_hampath, Generated, Profile,
};
use reconfig_core::io::{parse_instance, parse_schedule, result_to_json, schedule_to_json, serialize_instance};
use reconfig_core::oracle::{oracle_cap_from_env, oracle_min_cost_with_cap, validate_schedule};
use reconfig_core::solve::{resolve, solve, Algorithm, SolveOptions};
use reconfig_core::{Coloring, DiscoveryInstance, ElementKind, Graph, SolveResult};

const EXIT_YES: u8 = 0;
const EXIT_INPUT: u8 = 2;
const EXIT_NO: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

/// CSV header of `bench`.
const BENCH_COLUMNS: [&str; 8] =
    ["instance", "solver", "decision", "cost", "wall_ms", "states_explored", "oracle_decision", "oracle_cost"];

#[derive(Parser)]
#[command(name = "reconfig", version, about = "Solution discovery by token reconfiguration")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance file.
    Solve {
        input: PathBuf,
        /// auto, oracle, fpt-k, fpt-b, reduction, colorcoding or bnb.
        #[arg(long, short, default_value = "auto")]
        algorithm: String,
        /// Seed for randomized solvers. Recorded in the output either way.
        #[arg(long)]
        seed: Option<u64>,
        /// Color coding trials.
        #[arg(long)]
        trials: Option<u64>,
        /// Branch and bound stops at the first solution within the budget.
        #[arg(long)]
        decide: bool,
        /// Also run the oracle and compare.
        #[arg(long)]
        check_oracle: bool,
        /// Print the schedule.
        #[arg(long)]
        schedule: bool,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Generate an instance and manifest from a reduction or a random profile.
    Generate {
        /// hampath-to-spd, clique-to-cut, rainbow-matching-to-md or random.
        reduction: String,
        /// Source JSON: {n, edges, colors?, k?, kappa?}, or a profile for random.
        source: PathBuf,
        #[arg(long, short, default_value = ".")]
        out: PathBuf,
        /// Clique size for clique-to-cut.
        #[arg(long, default_value_t = 4)]
        kappa: usize,
        /// Matching size for rainbow-matching-to-md (overrides the source).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run every instance in a directory and print a CSV table.
    Bench {
        corpus: PathBuf,
        #[arg(long, short, default_value = "auto")]
        algorithm: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Add oracle columns where the state cap permits.
        #[arg(long)]
        with_oracle: bool,
    },
    /// Check a schedule against an instance.
    Validate { instance: PathBuf, schedule: PathBuf },
}

/// Input or configuration error: exit 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

fn input<T>(r: Result<T>) -> std::result::Result<T, InputError> {
    r.map_err(InputError)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path) -> Result<DiscoveryInstance> {
    Ok(parse_instance(&read(path)?)?)
}

fn fresh_seed() -> u64 {
    std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_nanos() as u64).unwrap_or(0)
}

fn summary(r: &SolveResult) -> String {
    let mut s = if r.decision { "yes".to_string() } else { "no".to_string() };
    if let Some(c) = r.cost {
        s += &format!(" cost={c}");
        if !r.cost_exact {
            s += " (upper bound)";
        }
    }
    if r.provenance.probabilistic_no {
        s += " (probabilistic)";
    }
    s
}

/// Disagreement between a solver and the oracle.
fn mismatch(r: &SolveResult, o: &SolveResult) -> bool {
    if r.decision != o.decision {
        // a probabilistic no may miss a yes; still report it
        return true;
    }
    r.decision && r.cost_exact && r.cost != o.cost
}

fn cmd_solve(
    path: &Path,
    alg: &str,
    seed: Option<u64>,
    trials: Option<u64>,
    decide: bool,
    check_oracle: bool,
    show_schedule: bool,
    json: bool,
) -> std::result::Result<u8, InputError> {
    let inst = input(load(path))?;
    let alg: Algorithm = input(alg.parse().map_err(anyhow::Error::from))?;
    let resolved = input(resolve(&inst, alg).map_err(anyhow::Error::from))?;
    let seed = if resolved == Algorithm::ColorCoding { Some(seed.unwrap_or_else(fresh_seed)) } else { seed };
    let opts = SolveOptions { seed, trials, decide, oracle_cap: None };
    let start = Instant::now();
    let mut res = input(solve(&inst, alg, opts).map_err(anyhow::Error::from))?;
    let elapsed = start.elapsed();
    // a yes from color coding carries the seed of the winning trial
    let trial_seed = res.provenance.seed.filter(|&t| Some(t) != seed);
    let mut code = if res.decision { EXIT_YES } else { EXIT_NO };
    let mut oracle_line = None;
    if check_oracle {
        match oracle_min_cost_with_cap(&inst, oracle_cap_from_env()) {
            Ok(o) => {
                let bad = mismatch(&res, &o);
                oracle_line = Some(format!("oracle: {}{}", summary(&o), if bad { " MISMATCH" } else { " agrees" }));
                if bad {
                    code = EXIT_MISMATCH;
                }
                res.cross_check = Some(Box::new(o));
            }
            Err(e) => oracle_line = Some(format!("oracle: skipped ({e})")),
        }
    }
    if let Some(sch) = &res.schedule {
        if !validate_schedule(&inst, sch).valid {
            oracle_line.get_or_insert_with(String::new).push_str("\nschedule: INVALID");
            code = EXIT_MISMATCH;
        }
    }
    if json {
        let mut v = result_to_json(&res);
        v["algorithm"] = resolved.name().into();
        v["wall_ms"] = (elapsed.as_secs_f64() * 1000.0).into();
        v["seed"] = seed.into();
        v["trial_seed"] = trial_seed.into();
        if !show_schedule {
            v.as_object_mut().unwrap().remove("schedule");
        }
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{}", summary(&res));
        println!(
            "solver={} algorithm={} seed={}{} trials={} states={}",
            res.provenance.solver,
            resolved.name(),
            seed.map_or("-".into(), |s| s.to_string()),
            trial_seed.map_or(String::new(), |t| format!(" trial_seed={t}")),
            res.provenance.trials.map_or("-".into(), |s| s.to_string()),
            res.states_explored.map_or("-".into(), |s| s.to_string()),
        );
        if show_schedule {
            if let Some(sch) = &res.schedule {
                println!("schedule={}", serde_json::to_string(&schedule_to_json(sch)).unwrap());
            }
        }
        if let Some(l) = oracle_line {
            println!("{l}");
        }
    }
    Ok(code)
}

fn source_graph(v: &serde_json::Value) -> Result<Graph> {
    let v = v.get("graph").unwrap_or(v);
    let n = v.get("n").and_then(|x| x.as_u64()).ok_or_else(|| anyhow!("source needs n"))? as usize;
    let edges: Vec<(usize, usize)> =
        serde_json::from_value(v.get("edges").cloned().unwrap_or_default()).context("source edges")?;
    Ok(Graph::new(n, edges)?)
}

fn write_generated(out: &Path, name: &str, g: &Generated) -> Result<()> {
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let inst = out.join(format!("{name}.json"));
    let man = out.join(format!("{name}.manifest.json"));
    fs::write(&inst, serialize_instance(&g.instance) + "\n")?;
    fs::write(&man, serde_json::to_string_pretty(&g.manifest)? + "\n")?;
    println!("wrote {} (budget {}, k {})", inst.display(), g.instance.budget(), g.instance.k());
    Ok(())
}

fn cmd_generate(reduction: &str, source: &Path, out: &Path, kappa: usize, k: Option<usize>) -> Result<u8, InputError> {
    let text = input(read(source))?;
    let v: serde_json::Value = input(serde_json::from_str(&text).context("source JSON"))?;
    let outputs: Vec<(String, Generated)> = input((|| -> Result<_> {
        Ok(match reduction {
            "hampath-to-spd" => vec![("hampath-to-spd".into(), gen_spd_from_hampath(&source_graph(&v)?)?)],
            "clique-to-cut" => {
                let kappa = v.get("kappa").and_then(|x| x.as_u64()).map_or(kappa, |x| x as usize);
                let (sl, ju) = gen_cutd_from_clique(&source_graph(&v)?, kappa)?;
                vec![("clique-to-cut-sliding".into(), sl), ("clique-to-cut-jumping".into(), ju)]
            }
            "rainbow-matching-to-md" => {
                let g = source_graph(&v)?;
                let colors: Vec<usize> =
                    serde_json::from_value(v.get("colors").cloned().ok_or_else(|| anyhow!("source needs colors"))?)?;
                let palette = colors.iter().max().map_or(1, |c| c + 1);
                let phi = Coloring::new(ElementKind::Edge, palette, colors)?;
                let k = k
                    .or_else(|| v.get("k").and_then(|x| x.as_u64()).map(|x| x as usize))
                    .ok_or_else(|| anyhow!("rainbow-matching-to-md needs k"))?;
                vec![("rainbow-matching-to-md".into(), gen_md_from_rainbow_matching(&g, &phi, k)?)]
            }
            "random" => {
                let p: Profile = serde_json::from_value(v.clone()).context("profile")?;
                vec![(format!("random-{}", p.seed), gen_random_instance(&p)?)]
            }
            other => bail!("unknown reduction {other:?}"),
        })
    })())?;
    for (name, g) in &outputs {
        input(write_generated(out, name, g))?;
    }
    Ok(EXIT_YES)
}

fn cmd_bench(corpus: &Path, alg: &str, seed: Option<u64>, with_oracle: bool) -> Result<u8, InputError> {
    let alg: Algorithm = input(alg.parse().map_err(anyhow::Error::from))?;
    let mut files: Vec<PathBuf> = input(
        fs::read_dir(corpus)
            .with_context(|| format!("reading corpus {}", corpus.display()))
            .and_then(|d| d.map(|e| Ok(e?.path())).collect::<Result<Vec<_>>>()),
    )?;
    files.retain(|p| {
        p.extension().is_some_and(|e| e == "json") && !p.to_string_lossy().ends_with(".manifest.json")
    });
    files.sort();
    let mut w = csv::Writer::from_writer(std::io::stdout());
    input(w.write_record(BENCH_COLUMNS).map_err(anyhow::Error::from))?;
    let cap = oracle_cap_from_env();
    let mut code = EXIT_YES;
    for f in files {
        let name = f.file_name().unwrap().to_string_lossy().to_string();
        let inst = match load(&f) {
            Ok(i) => i,
            Err(e) => {
                eprintln!("{name}: {e:#}");
                code = EXIT_INPUT;
                continue;
            }
        };
        let opts = SolveOptions { seed: Some(seed.unwrap_or(0)), ..Default::default() };
        let t = Instant::now();
        let res = solve(&inst, alg, opts);
        let ms = t.elapsed().as_secs_f64() * 1000.0;
        let (solver, decision, cost, states) = match &res {
            Ok(r) => (
                r.provenance.solver.to_string(),
                if r.decision { "yes" } else { "no" }.to_string(),
                r.cost.map_or(String::new(), |c| c.to_string()),
                r.states_explored.map_or(String::new(), |c| c.to_string()),
            ),
            Err(e) => (format!("error: {e}"), String::new(), String::new(), String::new()),
        };
        let (od, oc) = if with_oracle {
            match oracle_min_cost_with_cap(&inst, cap) {
                Ok(o) => {
                    if let Ok(r) = &res {
                        if mismatch(r, &o) {
                            code = EXIT_MISMATCH;
                        }
                    }
                    (if o.decision { "yes" } else { "no" }.to_string(), o.cost.map_or(String::new(), |c| c.to_string()))
                }
                Err(_) => ("skipped".to_string(), String::new()),
            }
        } else {
            (String::new(), String::new())
        };
        input(w.write_record([name, solver, decision, cost, format!("{ms:.3}"), states, od, oc]).map_err(anyhow::Error::from))?;
    }
    input(w.flush().map_err(anyhow::Error::from))?;
    Ok(code)
}

fn cmd_validate(instance: &Path, schedule: &Path) -> Result<u8, InputError> {
    let inst = input(load(instance))?;
    let sch = input(read(schedule).and_then(|t| Ok(parse_schedule(&t)?)))?;
    let check = validate_schedule(&inst, &sch);
    if check.valid {
        println!("valid ({} moves)", sch.len());
        Ok(EXIT_YES)
    } else {
        let (step, why) = check.violation.unwrap_or_default();
        println!("invalid at step {step}: {why}");
        Ok(EXIT_NO)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_YES });
        }
    };
    let r = match cli.cmd {
        Cmd::Solve { input, algorithm, seed, trials, decide, check_oracle, schedule, json } => {
            cmd_solve(&input, &algorithm, seed, trials, decide, check_oracle, schedule, json)
        }
        Cmd::Generate { reduction, source, out, kappa, k } => cmd_generate(&reduction, &source, &out, kappa, k),
        Cmd::Bench { corpus, algorithm, seed, with_oracle } => cmd_bench(&corpus, &algorithm, seed, with_oracle),
        Cmd::Validate { instance, schedule } => cmd_validate(&instance, &schedule),
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
