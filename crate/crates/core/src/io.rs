//! JSON instance and schedule format.
//!
//! ```json
//! {
//!   "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]], "multi": false},
//!   "problem": {"kind": "shortest_path", "s": 0, "t": 3},
//!   "model": "sliding",
//!   "start": {"kind": "vertex", "elements": [0, 1, 2, 3]},
//!   "budget": 2
//! }
//! ```
//!
//! Optional keys: `colors {kind, palette_size, map}`, `weights {map}` and
//! `relaxed` (add_remove only). Edge elements are indices into `edges`.
//! Schedules are lists of `{op: "move"|"add"|"remove", from?, to?}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, ElementKind, Graph, WeightMap};
use crate::instance::{Configuration, DiscoveryInstance, Model, Move, Problem, Schedule, SolveResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub multi: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigJson {
    pub kind: ElementKind,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColorsJson {
    pub kind: ElementKind,
    pub palette_size: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsJson {
    pub map: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub graph: GraphJson,
    pub problem: ProblemJson,
    pub model: Model,
    pub start: ConfigJson,
    pub budget: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub colors: Option<ColorsJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weights: Option<WeightsJson>,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub relaxed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Move,
    Add,
    Remove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    pub op: Op,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub from: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub to: Option<usize>,
}

fn problem_from(p: &ProblemJson) -> Result<Problem> {
    let st = || match (p.s, p.t) {
        (Some(s), Some(t)) => Ok((s, t)),
        _ => Err(Error::Input(format!("problem {} needs s and t", p.kind))),
    };
    let none = || {
        if p.s.is_some() || p.t.is_some() {
            return Err(Error::Input(format!("problem {} takes no terminals", p.kind)));
        }
        Ok(())
    };
    Ok(match p.kind.as_str() {
        "spanning_tree" => {
            none()?;
            Problem::SpanningTree
        }
        "matching" => {
            none()?;
            Problem::Matching
        }
        "shortest_path" => {
            let (s, t) = st()?;
            Problem::ShortestPath { s, t }
        }
        "vertex_cut" => {
            let (s, t) = st()?;
            Problem::VertexCut { s, t }
        }
        "edge_cut" => {
            let (s, t) = st()?;
            Problem::EdgeCut { s, t }
        }
        other => return Err(Error::Input(format!("unknown problem kind {other:?}"))),
    })
}

impl InstanceJson {
    pub fn from_instance(inst: &DiscoveryInstance) -> Self {
        let g = inst.graph();
        let (s, t) = inst.problem().terminals().unzip();
        InstanceJson {
            graph: GraphJson { n: g.vertex_count(), edges: g.edges().to_vec(), multi: g.is_multi() },
            problem: ProblemJson { kind: inst.problem().name().into(), s, t },
            model: inst.model(),
            start: ConfigJson { kind: inst.kind(), elements: inst.start().elements().to_vec() },
            budget: inst.budget(),
            colors: inst.colors().map(|c| ColorsJson { kind: c.kind(), palette_size: c.palette_size(), map: c.colors().to_vec() }),
            weights: inst.weights().map(|w| WeightsJson { map: w.weights().to_vec() }),
            relaxed: inst.relaxed(),
        }
    }

    pub fn to_instance(&self) -> Result<DiscoveryInstance> {
        let g = Graph::build(self.graph.n, self.graph.edges.clone(), self.graph.multi)?;
        let problem = problem_from(&self.problem)?;
        let start = Configuration::new(self.start.kind, self.start.elements.clone())?;
        let mut inst = DiscoveryInstance::new(g, problem, self.model, start, self.budget)?.with_relaxed(self.relaxed)?;
        if let Some(c) = &self.colors {
            inst = inst.with_colors(Coloring::new(c.kind, c.palette_size, c.map.clone())?)?;
        }
        if let Some(w) = &self.weights {
            inst = inst.with_weights(WeightMap::new(w.map.clone())?)?;
        }
        Ok(inst)
    }
}

pub fn parse_instance(text: &str) -> Result<DiscoveryInstance> {
    let j: InstanceJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("instance JSON: {e}")))?;
    j.to_instance()
}

pub fn serialize_instance(inst: &DiscoveryInstance) -> String {
    serde_json::to_string_pretty(&InstanceJson::from_instance(inst)).expect("instance serializes")
}

pub fn schedule_to_json(sch: &Schedule) -> Vec<StepJson> {
    sch.moves
        .iter()
        .map(|m| match *m {
            Move::Shift { from, to } => StepJson { op: Op::Move, from: Some(from), to: Some(to) },
            Move::Add(x) => StepJson { op: Op::Add, from: None, to: Some(x) },
            Move::Remove(x) => StepJson { op: Op::Remove, from: Some(x), to: None },
        })
        .collect()
}

pub fn schedule_from_json(steps: &[StepJson]) -> Result<Schedule> {
    let moves = steps
        .iter()
        .enumerate()
        .map(|(i, st)| match (st.op, st.from, st.to) {
            (Op::Move, Some(from), Some(to)) => Ok(Move::Shift { from, to }),
            (Op::Add, None, Some(x)) => Ok(Move::Add(x)),
            (Op::Remove, Some(x), None) => Ok(Move::Remove(x)),
            _ => Err(Error::Input(format!("step {i}: malformed {:?}", st.op))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Schedule::new(moves))
}

pub fn parse_schedule(text: &str) -> Result<Schedule> {
    let steps: Vec<StepJson> = serde_json::from_str(text).map_err(|e| Error::Input(format!("schedule JSON: {e}")))?;
    schedule_from_json(&steps)
}

/// Machine-readable solver report.
pub fn result_to_json(res: &SolveResult) -> serde_json::Value {
    serde_json::json!({
        "decision": if res.decision { "yes" } else { "no" },
        "cost": res.cost,
        "cost_exact": res.cost_exact,
        "schedule": res.schedule.as_ref().map(schedule_to_json),
        "solver": res.provenance.solver,
        "probabilistic_no": res.provenance.probabilistic_no,
        "seed": res.provenance.seed,
        "trials": res.provenance.trials,
        "states_explored": res.states_explored,
        "cross_check": res.cross_check.as_deref().map(result_to_json),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]], "multi": false},
        "problem": {"kind": "shortest_path", "s": 0, "t": 3},
        "model": "sliding",
        "start": {"kind": "vertex", "elements": [0, 1, 2, 3]},
        "budget": 2
    }"#;

    #[test]
    fn round_trip() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
        let colored = inst
            .clone()
            .with_model(Model::AddRemove)
            .with_relaxed(true)
            .unwrap()
            .with_weights(WeightMap::new(vec![1, 2, 3, 4]).unwrap())
            .unwrap();
        assert_eq!(parse_instance(&serialize_instance(&colored)).unwrap(), colored);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_instance("{").is_err());
        assert!(parse_instance(&SAMPLE.replace("shortest_path", "hamiltonian")).is_err());
        assert!(parse_instance(&SAMPLE.replace("\"budget\"", "\"extra\": 1, \"budget\"")).is_err());
        assert!(parse_instance(&SAMPLE.replace("[0, 1, 2, 3]", "[0, 1]")).is_err());
    }

    #[test]
    fn schedule_steps() {
        let sch = Schedule::new(vec![Move::Shift { from: 1, to: 2 }, Move::Add(4), Move::Remove(0)]);
        let text = serde_json::to_string(&schedule_to_json(&sch)).unwrap();
        assert_eq!(text, r#"[{"op":"move","from":1,"to":2},{"op":"add","to":4},{"op":"remove","from":0}]"#);
        assert_eq!(parse_schedule(&text).unwrap(), sch);
        assert!(parse_schedule(r#"[{"op":"add","from":1}]"#).is_err());
    }
}
