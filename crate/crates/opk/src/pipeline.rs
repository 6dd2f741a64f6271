//! Glue between graph instances and the set kernels.
//!
//! A graph instance becomes a set instance whose universe is either the
//! vertices or the edges of the host and whose sets are the occurrences of
//! the family. After the set kernel has run, the surviving universe is read
//! back as an induced subgraph of the host. [`kernelize_graph`] repeats this
//! until the host stops shrinking.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::membership;
use crate::model::{Elem, ElemSet, GraphInstance, KernelStats, Mode, SetInstance, Subgraph, Variant};
use crate::oracle::Budget;
use crate::overlap::{self, KernelOutcome};
use crate::subgraph;

/// Outcome of a graph kernelization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKernel {
    /// `k` subgraphs of the input host forming a valid packing.
    Early { solution: Vec<Subgraph>, stats: KernelStats },
    /// An equivalent instance on an induced subgraph of the host;
    /// `kept_vertices[i]` is the input vertex that became vertex `i`.
    Reduced { instance: GraphInstance, kept_vertices: Vec<u32>, stats: KernelStats },
}

impl GraphKernel {
    pub fn stats(&self) -> &KernelStats {
        match self {
            GraphKernel::Early { stats, .. } | GraphKernel::Reduced { stats, .. } => stats,
        }
    }

    pub fn reduced(&self) -> Option<&GraphInstance> {
        match self {
            GraphKernel::Reduced { instance, .. } => Some(instance),
            GraphKernel::Early { .. } => None,
        }
    }
}

/// Kernelizes any set instance according to its mode.
pub fn kernelize_set(inst: &SetInstance, budget: &Budget) -> Result<KernelOutcome> {
    match inst.mode {
        Mode::Overlap => overlap::kernelize_set_overlap(inst),
        Mode::Membership => membership::kernelize_set_membership(inst, budget),
    }
}

fn kernelize_graph_once(inst: &GraphInstance, budget: &Budget) -> Result<GraphKernel> {
    match inst.variant {
        Variant::VertexOverlap | Variant::InducedOverlap | Variant::EdgeOverlap | Variant::CliqueEdgeOverlap => {
            overlap::kernelize_graph_overlap(inst, budget)
        }
        Variant::VertexMembership | Variant::InducedMembership | Variant::EdgeMembership | Variant::P2Membership => {
            membership::kernelize_graph_membership(inst, budget)
        }
        Variant::VertexMembershipIsv => membership::kernelize_graph_membership_isv(inst, budget),
        Variant::EdgeMembershipNisv => membership::kernelize_graph_membership_nisv(inst, budget),
    }
}

/// Kernelizes a graph instance, repeating until the host is stable.
pub fn kernelize_graph(inst: &GraphInstance, budget: &Budget) -> Result<GraphKernel> {
    let mut cur = inst.clone();
    let mut kept: Vec<u32> = (0..inst.g.n() as u32).collect();
    let mut sets_before = None;
    loop {
        let out = kernelize_graph_once(&cur, budget)?;
        let sets_before = *sets_before.get_or_insert(out.stats().sets_before);
        match out {
            GraphKernel::Early { solution, mut stats } => {
                let solution = solution
                    .into_iter()
                    .map(|s| {
                        Subgraph::new(
                            s.vertices.iter().map(|&v| kept[v as usize]).collect(),
                            s.edges.iter().map(|&(a, b)| (kept[a as usize], kept[b as usize])),
                        )
                    })
                    .collect();
                stats.elements_before = inst.g.n();
                stats.sets_before = sets_before;
                return Ok(GraphKernel::Early { solution, stats });
            }
            GraphKernel::Reduced { instance, kept_vertices, mut stats } => {
                let stable = instance.g == cur.g;
                kept = kept_vertices.iter().map(|&v| kept[v as usize]).collect();
                if stable {
                    stats.elements_before = inst.g.n();
                    stats.sets_before = sets_before;
                    return Ok(GraphKernel::Reduced { instance, kept_vertices: kept, stats });
                }
                cur = instance;
            }
        }
    }
}

/// `G[keep]` with the instance's parameters; labels carry over (vertex
/// indices become labels when the input had none).
pub fn induced_instance(inst: &GraphInstance, keep: &BTreeSet<u32>) -> (GraphInstance, Vec<u32>) {
    let g = inst.g.induced_subgraph(keep);
    let labels = keep.iter().map(|&v| inst.vertex_label(v)).collect();
    let reduced = GraphInstance { g, labels: Some(labels), ..inst.clone() };
    (reduced, keep.iter().copied().collect())
}

/// A graph instance encoded as a set instance over vertices or edges.
pub struct BuiltSet {
    pub instance: SetInstance,
    on_edges: bool,
    edges: Vec<(u32, u32)>,
    host_n: usize,
    by_set: HashMap<ElemSet, Subgraph>,
    label_index: HashMap<String, Elem>,
}

impl BuiltSet {
    /// The occurrence behind a set of `self.instance`.
    pub fn subgraph_of(&self, set: &[Elem]) -> Subgraph {
        self.by_set[set].clone()
    }

    /// Host vertices touched by the universe of a reduced instance whose
    /// labels come from `self.instance`.
    pub fn vertices_of_universe(&self, reduced: &SetInstance) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for label in &reduced.universe {
            let e = self.label_index[label];
            if self.on_edges {
                let (u, v) = self.edges[e as usize];
                out.insert(u);
                out.insert(v);
            } else {
                out.insert(e);
            }
        }
        out
    }

    pub fn graph_stats(&self, set_stats: &KernelStats) -> KernelStats {
        KernelStats {
            elements_before: self.host_n,
            elements_after: 0,
            sets_before: set_stats.sets_before,
            sets_after: set_stats.sets_after,
            bound: if self.on_edges { set_stats.bound.saturating_mul(2) } else { set_stats.bound },
            early_solution: set_stats.early_solution,
        }
    }
}

/// Vertex variants: one set per vertex set of the deduplicated catalog.
/// Edge variants: one set per distinct edge set, over the host's edges.
pub fn build_set_instance(inst: &GraphInstance, budget: &Budget, mode: Mode) -> Result<BuiltSet> {
    let v = inst.variant;
    let g = &inst.g;
    if v.on_edges() && inst.family.members.iter().any(|h| h.has_isolated_vertex()) {
        return Err(Error::InvalidInstance(format!("{v} needs family members without isolated vertices")));
    }
    let cat = subgraph::enumerate(g, &inst.family, v.induced(), budget.catalog)?;
    let mut by_set: HashMap<ElemSet, Subgraph> = HashMap::new();
    let (universe, r): (Vec<String>, usize) = if v.on_edges() {
        for e in &cat.entries {
            let mut ids: ElemSet =
                e.edges.iter().map(|&(a, b)| g.edge_index(a, b).expect("catalog edge") as Elem).collect();
            ids.sort_unstable();
            by_set.entry(ids).or_insert_with(|| e.clone());
        }
        (g.edges().iter().map(|&(a, b)| format!("{a}-{b}")).collect(), inst.family.m_h())
    } else {
        for e in &subgraph::dedupe_by_vertex_set(&cat).entries {
            by_set.insert(e.vertices.clone(), e.clone());
        }
        ((0..g.n()).map(|i| i.to_string()).collect(), inst.family.r_h())
    };
    let label_index = universe.iter().enumerate().map(|(i, l)| (l.clone(), i as Elem)).collect();
    let sets: Vec<ElemSet> = by_set.keys().cloned().collect();
    let instance = SetInstance::new(universe, sets, r, inst.t, inst.k, mode)?;
    Ok(BuiltSet { instance, on_edges: v.on_edges(), edges: g.edges().to_vec(), host_n: g.n(), by_set, label_index })
}
