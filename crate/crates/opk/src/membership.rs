//! Kernels for t-Membership via a parameter-preserving transformation to
//! disjoint packing.
//!
//! Each element is split into `t` copies `(x,1)..(x,t)`. A set `S` becomes
//! every way of picking one copy per element, plus a token standing for `S`
//! itself. In a disjoint packing of the result each copy is used once, so
//! each original element is used at most `t` times, and the token keeps two
//! copies of the same `S` apart. The disjoint instance is kernelized with the
//! overlap kernel at `t = 0` and the survivors are read back.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::model::{Elem, ElemSet, GraphInstance, KernelStats, Mode, SetInstance, Subgraph, Variant};
use crate::oracle::Budget;
use crate::overlap::{kernelize_set_overlap, overlap_bound, KernelOutcome};
use crate::pipeline::{self, GraphKernel};
use crate::subgraph;

/// An element of a transformed universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TaggedElement {
    /// Copy `copy` (1-based) of base element `base`.
    Pair { base: Elem, copy: u32 },
    /// Stands for the source object with this index.
    Token(usize),
}

/// A transformed instance with the map back to its sources.
#[derive(Clone, Debug)]
pub struct Transformed {
    /// Disjoint (`t = 0`) overlap instance with arity `r + 1`.
    pub instance: SetInstance,
    /// Tag of every universe element of `instance`.
    pub tags: Vec<TaggedElement>,
    label_index: HashMap<String, usize>,
}

impl Transformed {
    pub fn tag_of_label(&self, label: &str) -> Option<TaggedElement> {
        self.label_index.get(label).map(|&i| self.tags[i])
    }

    /// The token inside a set of some instance labelled like `self.instance`.
    fn token_of(&self, labels: &[String]) -> Result<usize> {
        let tokens: Vec<usize> = labels
            .iter()
            .filter_map(|l| match self.tag_of_label(l) {
                Some(TaggedElement::Token(t)) => Some(t),
                _ => None,
            })
            .collect();
        match tokens.as_slice() {
            [t] => Ok(*t),
            _ => Err(Error::Structural(format!("transformed set carries {} tokens", tokens.len()))),
        }
    }
}

/// Builds the disjoint instance: `base_n * t` pairs followed by one token
/// per entry of `token_labels`; one set per copy assignment of each item.
fn build_disjoint(
    base_labels: &[String],
    t: usize,
    items: &[(Vec<Elem>, usize)],
    token_labels: &[String],
    r: usize,
    k: usize,
    budget: &Budget,
) -> Result<Transformed> {
    let mut total: u64 = 0;
    for (bases, _) in items {
        total = total.saturating_add((t as u64).saturating_pow(bases.len() as u32));
    }
    if total > budget.transform as u64 {
        return Err(Error::Budget { what: "transformed set count", limit: budget.transform as u64, actual: total });
    }
    let n = base_labels.len();
    let mut universe = Vec::with_capacity(n * t + token_labels.len());
    let mut tags = Vec::with_capacity(universe.capacity());
    for (b, label) in base_labels.iter().enumerate() {
        for c in 1..=t {
            universe.push(format!("({label},{c})"));
            tags.push(TaggedElement::Pair { base: b as Elem, copy: c as u32 });
        }
    }
    for (i, label) in token_labels.iter().enumerate() {
        universe.push(label.clone());
        tags.push(TaggedElement::Token(i));
    }
    let pair = |b: Elem, c: usize| (b as usize * t + c - 1) as Elem;
    let mut sets = Vec::with_capacity(total as usize);
    for (bases, token) in items {
        // Odometer over copy indices, last position fastest.
        let mut copy = vec![1usize; bases.len()];
        loop {
            let mut s: ElemSet = bases.iter().zip(&copy).map(|(&b, &c)| pair(b, c)).collect();
            s.push((n * t + token) as Elem);
            sets.push(s);
            let mut pos = bases.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if copy[pos] < t {
                    copy[pos] += 1;
                    break;
                }
                copy[pos] = 1;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || bases.is_empty() {
                break;
            }
        }
    }
    let label_index = universe.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let instance = SetInstance::new(universe, sets, r + 1, 0, k, Mode::Overlap)?;
    Ok(Transformed { instance, tags, label_index })
}

fn token_label(parts: impl IntoIterator<Item = String>) -> String {
    format!("⟨{}⟩", parts.into_iter().collect::<Vec<_>>().join(","))
}

/// Membership instance -> disjoint packing instance with the same `k`.
pub fn transform_membership_to_disjoint(inst: &SetInstance, budget: &Budget) -> Result<Transformed> {
    if inst.mode != Mode::Membership || inst.t == 0 {
        return Err(Error::ParameterRange("transformation needs a membership instance with t >= 1".into()));
    }
    let items: Vec<(Vec<Elem>, usize)> = inst.sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let tokens: Vec<String> = inst.sets.iter().map(|s| token_label(inst.labels(s))).collect();
    build_disjoint(&inst.universe, inst.t, &items, &tokens, inst.r, inst.k, budget)
}

/// A kernel for disjoint packing (`t = 0`) that the membership pipelines can use.
pub trait DisjointKernelizer {
    fn kernelize(&self, inst: &SetInstance) -> Result<KernelOutcome>;
}

/// The default backend: the overlap kernel at `t = 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OverlapBackend;

impl DisjointKernelizer for OverlapBackend {
    fn kernelize(&self, inst: &SetInstance) -> Result<KernelOutcome> {
        kernelize_set_overlap(inst)
    }
}

pub fn disjoint_kernelizer(inst: &SetInstance) -> Result<KernelOutcome> {
    if inst.mode != Mode::Overlap || inst.t != 0 {
        return Err(Error::ParameterRange("disjoint kernelizer needs an overlap instance with t = 0".into()));
    }
    OverlapBackend.kernelize(inst)
}

/// Reads a reduced disjoint instance back as a membership instance over
/// `original`: sets whose token survived, elements with a surviving copy.
pub fn reinterpret_set_kernel(original: &SetInstance, tr: &Transformed, reduced: &SetInstance) -> Result<SetInstance> {
    let mut keep_sets = BTreeSet::new();
    for s in &reduced.sets {
        let labels = reduced.labels(s);
        let token = tr.token_of(&labels)?;
        let source = original
            .sets
            .get(token)
            .ok_or_else(|| Error::Structural(format!("token {token} has no source set")))?;
        let mut bases: Vec<Elem> = labels
            .iter()
            .filter_map(|l| match tr.tag_of_label(l) {
                Some(TaggedElement::Pair { base, .. }) => Some(base),
                _ => None,
            })
            .collect();
        bases.sort_unstable();
        if &bases != source {
            return Err(Error::Structural(format!("surviving set {labels:?} is not a full copy of its source")));
        }
        keep_sets.insert(token);
    }
    let mut keep_elems = BTreeSet::new();
    for label in &reduced.universe {
        match tr.tag_of_label(label) {
            Some(TaggedElement::Pair { base, .. }) => {
                keep_elems.insert(base);
            }
            Some(TaggedElement::Token(_)) => {}
            None => return Err(Error::Structural(format!("unknown transformed element {label:?}"))),
        }
    }
    let sets: Vec<ElemSet> = keep_sets.into_iter().map(|i| original.sets[i].clone()).collect();
    Ok(original.restrict(&keep_elems, &sets, original.k))
}

/// `4 (r+1)^(r+1) k^r`: the default backend's bound on the transformed universe.
pub fn membership_bound(r: usize, k: usize) -> u64 {
    overlap_bound(r + 1, 0, k)
}

pub fn kernelize_set_membership(inst: &SetInstance, budget: &Budget) -> Result<KernelOutcome> {
    kernelize_set_membership_with(inst, budget, &OverlapBackend)
}

/// Transform, kernelize, reinterpret; repeated until the instance is stable.
pub fn kernelize_set_membership_with(
    inst: &SetInstance,
    budget: &Budget,
    backend: &dyn DisjointKernelizer,
) -> Result<KernelOutcome> {
    if inst.mode != Mode::Membership {
        return Err(Error::ParameterRange("membership kernel needs a membership-mode instance".into()));
    }
    let mut stats = KernelStats {
        elements_before: inst.n(),
        sets_before: inst.sets.len(),
        bound: membership_bound(inst.r, inst.k),
        ..KernelStats::default()
    };
    if inst.k == 0 {
        stats.early_solution = true;
        return Ok(KernelOutcome::Early { solution: Vec::new(), stats });
    }
    let mut cur = inst.clone();
    loop {
        let tr = transform_membership_to_disjoint(&cur, budget)?;
        match backend.kernelize(&tr.instance)? {
            KernelOutcome::Early { solution, .. } => {
                let mut out = Vec::with_capacity(solution.len());
                for s in &solution {
                    let token = tr.token_of(&tr.instance.labels(s))?;
                    let labels = cur.labels(&cur.sets[token]);
                    out.push(inst.set_of(&labels).expect("kernel sets come from the input"));
                }
                stats.early_solution = true;
                return Ok(KernelOutcome::Early { solution: out, stats });
            }
            KernelOutcome::Reduced { instance, .. } => {
                let next = reinterpret_set_kernel(&cur, &tr, &instance)?;
                if next == cur {
                    break;
                }
                cur = next;
            }
        }
    }
    stats.elements_after = cur.n();
    stats.sets_after = cur.sets.len();
    Ok(KernelOutcome::Reduced { instance: cur, trace: None, stats })
}

/// Vertex, induced and edge membership: the set instance of the catalog goes
/// through [`kernelize_set_membership`].
pub fn kernelize_graph_membership(inst: &GraphInstance, budget: &Budget) -> Result<GraphKernel> {
    match inst.variant {
        Variant::VertexMembership | Variant::InducedMembership | Variant::EdgeMembership | Variant::P2Membership => {}
        other => return Err(Error::ParameterRange(format!("{other} is not handled by the plain membership kernel"))),
    }
    let built = pipeline::build_set_instance(inst, budget, Mode::Membership)?;
    let outcome = kernelize_set_membership(&built.instance, budget)?;
    let mut stats = built.graph_stats(outcome.stats());
    match outcome {
        KernelOutcome::Early { solution, .. } => Ok(GraphKernel::Early {
            solution: solution.iter().map(|s| built.subgraph_of(s)).collect(),
            stats,
        }),
        KernelOutcome::Reduced { instance, .. } => {
            let keep = built.vertices_of_universe(&instance);
            let (reduced, kept_vertices) = pipeline::induced_instance(inst, &keep);
            stats.elements_after = reduced.g.n();
            Ok(GraphKernel::Reduced { instance: reduced, kept_vertices, stats })
        }
    }
}

/// Shared tail of the two direct transformations: kernelize the disjoint
/// instance and map survivors back to host vertices.
fn finish_direct(
    inst: &GraphInstance,
    tr: Transformed,
    by_set: HashMap<ElemSet, Subgraph>,
    pair_vertices: impl Fn(Elem) -> Vec<u32>,
    token_vertices: impl Fn(usize) -> Vec<u32>,
) -> Result<GraphKernel> {
    let outcome = disjoint_kernelizer(&tr.instance)?;
    let mut stats = KernelStats {
        elements_before: inst.g.n(),
        sets_before: tr.instance.sets.len(),
        bound: outcome.stats().bound,
        ..KernelStats::default()
    };
    match outcome {
        KernelOutcome::Early { solution, .. } => {
            stats.early_solution = true;
            Ok(GraphKernel::Early { solution: solution.iter().map(|s| by_set[s].clone()).collect(), stats })
        }
        KernelOutcome::Reduced { instance, .. } => {
            let mut keep = BTreeSet::new();
            for label in &instance.universe {
                match tr.tag_of_label(label) {
                    Some(TaggedElement::Pair { base, .. }) => keep.extend(pair_vertices(base)),
                    Some(TaggedElement::Token(t)) => keep.extend(token_vertices(t)),
                    None => return Err(Error::Structural(format!("unknown transformed element {label:?}"))),
                }
            }
            let (reduced, kept_vertices) = pipeline::induced_instance(inst, &keep);
            stats.sets_after = instance.sets.len();
            stats.elements_after = reduced.g.n();
            Ok(GraphKernel::Reduced { instance: reduced, kept_vertices, stats })
        }
    }
}

/// Vertex membership allowing identical vertex sets: vertex copies plus one
/// token per distinct edge set.
pub fn kernelize_graph_membership_isv(inst: &GraphInstance, budget: &Budget) -> Result<GraphKernel> {
    if inst.variant != Variant::VertexMembershipIsv {
        return Err(Error::ParameterRange(format!("{} is not vertex-membership-ISV", inst.variant)));
    }
    let g = &inst.g;
    let cat = subgraph::enumerate(g, &inst.family, false, budget.catalog)?;
    let edge_sets = cat.collection_e();
    let token_of: HashMap<&Vec<(u32, u32)>, usize> = edge_sets.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let items: Vec<(Vec<Elem>, usize)> = cat.entries.iter().map(|e| (e.vertices.clone(), token_of[&e.edges])).collect();
    let tokens: Vec<String> =
        edge_sets.iter().map(|es| token_label(es.iter().map(|(a, b)| format!("{a}-{b}")))).collect();
    let base: Vec<String> = (0..g.n()).map(|i| i.to_string()).collect();
    let tr = build_disjoint(&base, inst.t, &items, &tokens, inst.family.r_h(), inst.k, budget)?;
    let by_set = transformed_index(&tr, &items, &cat.entries, inst.t);
    finish_direct(inst, tr, by_set, |v| vec![v], |t| {
        edge_sets[t].iter().flat_map(|&(a, b)| [a, b]).collect()
    })
}

/// Edge membership forbidding identical vertex sets: edge copies plus one
/// token per distinct vertex set.
pub fn kernelize_graph_membership_nisv(inst: &GraphInstance, budget: &Budget) -> Result<GraphKernel> {
    if inst.variant != Variant::EdgeMembershipNisv {
        return Err(Error::ParameterRange(format!("{} is not edge-membership-NISV", inst.variant)));
    }
    if inst.family.members.iter().any(|h| h.has_isolated_vertex()) {
        return Err(Error::InvalidInstance("edge-membership-NISV needs family members without isolated vertices".into()));
    }
    let g = &inst.g;
    let cat = subgraph::enumerate(g, &inst.family, false, budget.catalog)?;
    let vertex_sets = cat.collection_v();
    let token_of: HashMap<&Vec<u32>, usize> = vertex_sets.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let items: Vec<(Vec<Elem>, usize)> = cat
        .entries
        .iter()
        .map(|e| {
            let mut ids: Vec<Elem> =
                e.edges.iter().map(|&(a, b)| g.edge_index(a, b).expect("catalog edge") as Elem).collect();
            ids.sort_unstable();
            (ids, token_of[&e.vertices])
        })
        .collect();
    let tokens: Vec<String> =
        vertex_sets.iter().map(|vs| token_label(vs.iter().map(|v| v.to_string()))).collect();
    let base: Vec<String> = g.edges().iter().map(|&(a, b)| format!("{a}-{b}")).collect();
    let tr = build_disjoint(&base, inst.t, &items, &tokens, inst.family.m_h(), inst.k, budget)?;
    let by_set = transformed_index(&tr, &items, &cat.entries, inst.t);
    let edges = g.edges().to_vec();
    finish_direct(inst, tr, by_set, |e| {
        let (a, b) = edges[e as usize];
        vec![a, b]
    }, |t| vertex_sets[t].clone())
}

/// Maps every transformed set back to the catalog entry it encodes.
fn transformed_index(
    tr: &Transformed,
    items: &[(Vec<Elem>, usize)],
    entries: &[Subgraph],
    t: usize,
) -> HashMap<ElemSet, Subgraph> {
    let n_pairs = tr.tags.iter().filter(|x| matches!(x, TaggedElement::Pair { .. })).count() as Elem;
    let mut by_key: HashMap<(Vec<Elem>, usize), &Subgraph> = HashMap::new();
    for ((bases, token), e) in items.iter().zip(entries) {
        by_key.insert((bases.clone(), *token), e);
    }
    let t = t as Elem;
    tr.instance
        .sets
        .iter()
        .map(|s| {
            let token = (s[s.len() - 1] - n_pairs) as usize;
            let bases: Vec<Elem> = s[..s.len() - 1].iter().map(|&p| p / t).collect();
            (s.clone(), by_key[&(bases, token)].clone())
        })
        .collect()
}
