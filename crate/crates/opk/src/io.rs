//! JSON formats for instances and solutions.
//!
//! ```text
//! {"kind":"set","universe":["a",...],"sets":[["a","b"],...],"r":4,"t":2,"k":2,"mode":"overlap"}
//! {"kind":"graph","n":8,"edges":[[0,1],...],"family":[{"n":3,"edges":[[0,1],[1,2],[0,2]]}],
//!  "t":1,"k":3,"variant":"vertex-overlap","labels":["a",...]}
//! {"sets":[["a","b","c","e"],...]}
//! {"subgraphs":[{"vertices":[0,1,2],"edges":[[0,1],[1,2],[0,2]]},...]}
//! ```
//!
//! `labels` is optional on graph instances.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::{ElemSet, Graph, GraphFamily, GraphInstance, Mode, SetInstance, Subgraph, Variant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Set(SetInstance),
    Graph(GraphInstance),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum InstanceJson {
    Set {
        universe: Vec<String>,
        sets: Vec<Vec<String>>,
        r: usize,
        t: usize,
        k: usize,
        mode: Mode,
    },
    Graph {
        n: usize,
        edges: Vec<(u32, u32)>,
        family: Vec<GraphJson>,
        t: usize,
        k: usize,
        variant: Variant,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

fn graph_json(g: &Graph) -> GraphJson {
    GraphJson { n: g.n(), edges: g.edges().to_vec() }
}

pub fn instance_to_json(inst: &Instance) -> Value {
    let raw = match inst {
        Instance::Set(s) => InstanceJson::Set {
            universe: s.universe.clone(),
            sets: s.sets.iter().map(|x| s.labels(x)).collect(),
            r: s.r,
            t: s.t,
            k: s.k,
            mode: s.mode,
        },
        Instance::Graph(g) => InstanceJson::Graph {
            n: g.g.n(),
            edges: g.g.edges().to_vec(),
            family: g.family.members.iter().map(graph_json).collect(),
            t: g.t,
            k: g.k,
            variant: g.variant,
            labels: g.labels.clone(),
        },
    };
    serde_json::to_value(raw).expect("instance serializes")
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let raw: InstanceJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match raw {
        InstanceJson::Set { universe, sets, r, t, k, mode } => {
            Ok(Instance::Set(SetInstance::from_labels(&universe, &sets, r, t, k, mode)?))
        }
        InstanceJson::Graph { n, edges, family, t, k, variant, labels } => {
            let g = Graph::new(n, edges)?;
            let members = family.into_iter().map(|h| Graph::new(h.n, h.edges)).collect::<Result<Vec<_>>>()?;
            let inst = GraphInstance::new(g, GraphFamily::new(members), t, k, variant)?;
            Ok(Instance::Graph(match labels {
                Some(l) => inst.with_labels(l)?,
                None => inst,
            }))
        }
    }
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// A solution as written in a file, before it is matched against an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SolutionJson {
    Sets { sets: Vec<Vec<String>> },
    Subgraphs { subgraphs: Vec<Subgraph> },
}

pub fn parse_solution(text: &str) -> Result<SolutionJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn set_solution_json(inst: &SetInstance, sol: &[ElemSet]) -> Value {
    serde_json::to_value(SolutionJson::Sets { sets: sol.iter().map(|s| inst.labels(s)).collect() })
        .expect("solution serializes")
}

pub fn graph_solution_json(sol: &[Subgraph]) -> Value {
    serde_json::to_value(SolutionJson::Subgraphs { subgraphs: sol.to_vec() }).expect("solution serializes")
}

/// Label lists -> element sets. `Err(i)` names the first member that uses a
/// label outside the universe.
pub fn resolve_sets(inst: &SetInstance, sets: &[Vec<String>]) -> std::result::Result<Vec<ElemSet>, usize> {
    sets.iter().enumerate().map(|(i, s)| inst.set_of(s).ok_or(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_round_trip() {
        let text = r#"{"kind":"set","universe":["a","b","c"],"sets":[["a","b"],["b","c"]],"r":2,"t":1,"k":2,"mode":"membership"}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(parse_instance(&instance_to_json(&inst).to_string()).unwrap(), inst);
    }

    #[test]
    fn graph_round_trip() {
        let text = r#"{"kind":"graph","n":3,"edges":[[0,1],[1,2],[0,2]],"family":[{"n":3,"edges":[[0,1],[1,2],[0,2]]}],"t":1,"k":1,"variant":"vertex-overlap"}"#;
        let inst = parse_instance(text).unwrap();
        let back = instance_to_json(&inst);
        assert!(back.get("labels").is_none());
        assert_eq!(parse_instance(&back.to_string()).unwrap(), inst);
    }

    #[test]
    fn malformed_is_a_parse_error() {
        assert!(matches!(parse_instance("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_instance(r#"{"kind":"tree"}"#), Err(Error::Parse(_))));
    }
}
