//! Kernel for r-Set Packing with t-Overlap and its graph instantiations.
//!
//! The pipeline, on an instance whose sets all have more than `t` elements:
//!
//! 1. grow a maximal packing `R` whose members pairwise share at most `r-2`
//!    elements, trimming "extra" sets from `R` whenever more sets than a
//!    threshold `f(i)` contain a common `i`-subset, until `R` is stable;
//! 2. drop the extra sets and every element no longer used;
//! 3. if a maximal `t`-overlap packing inside `R` already has `k` sets, stop
//!    with that witness;
//! 4. otherwise every set outside `R` carries at most one element outside
//!    `val(R)`; match those outside elements against the `(r-1)`-subsets of
//!    `R`-sets they complete, and delete the unmatched ones with their sets.
//!
//! The whole round is repeated until nothing changes, which makes the kernel
//! idempotent. Every free choice uses canonical (lexicographic) order.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matching::{bipartite_max_matching, BipartiteGraph};
use crate::model::{Elem, ElemSet, GraphInstance, KernelStats, Mode, SetInstance, Subgraph, Variant};
use crate::oracle::Budget;
use crate::pipeline::{self, GraphKernel};

/// Result of a kernelization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    /// A witness of exactly `k` sets of the input (input element ids).
    Early { solution: Vec<ElemSet>, stats: KernelStats },
    /// An equivalent, smaller instance.
    Reduced { instance: SetInstance, trace: Option<ReductionTrace>, stats: KernelStats },
}

impl KernelOutcome {
    pub fn stats(&self) -> &KernelStats {
        match self {
            KernelOutcome::Early { stats, .. } | KernelOutcome::Reduced { stats, .. } => stats,
        }
    }

    pub fn reduced(&self) -> Option<&SetInstance> {
        match self {
            KernelOutcome::Reduced { instance, .. } => Some(instance),
            KernelOutcome::Early { .. } => None,
        }
    }

    pub fn early_solution(&self) -> Option<&[ElemSet]> {
        match self {
            KernelOutcome::Early { solution, .. } => Some(solution),
            KernelOutcome::Reduced { .. } => None,
        }
    }
}

/// What the pipeline did, in element ids of its input. `r`, `m`, `o` and
/// `f_table` describe the final round; the removal lists accumulate over all
/// rounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Sets of size at most `t`, taken unconditionally (not part of the reduced instance).
    pub forced: Vec<ElemSet>,
    pub r: Vec<ElemSet>,
    pub extra: Vec<ElemSet>,
    pub m: Vec<ElemSet>,
    pub o: Vec<Elem>,
    pub o_removed: Vec<Elem>,
    pub sets_removed_by_matching: Vec<ElemSet>,
    pub f_table: BTreeMap<usize, u64>,
    pub rounds: usize,
}

impl ReductionTrace {
    /// JSON with element labels of `inst` (the kernel's input).
    pub fn to_json(&self, inst: &SetInstance, early: Option<&[ElemSet]>) -> Value {
        let sets = |ss: &[ElemSet]| ss.iter().map(|s| inst.labels(s)).collect::<Vec<_>>();
        let table: BTreeMap<String, u64> = self.f_table.iter().map(|(i, f)| (i.to_string(), *f)).collect();
        json!({
            "R": sets(&self.r),
            "extra": sets(&self.extra),
            "M": sets(&self.m),
            "O_removed": inst.labels(&self.o_removed),
            "f_table": table,
            "early_solution": early.map(|e| json!({ "sets": sets(e) })),
        })
    }
}

/// `4 r^r k^(r-t-1)`, saturating.
pub fn overlap_bound(r: usize, t: usize, k: usize) -> u64 {
    4u64.saturating_mul(half_bound(r, t, k))
}

/// `r^r k^(r-t-1)`; twice this bounds both `|val(R)|` and the surviving outside elements.
pub fn half_bound(r: usize, t: usize, k: usize) -> u64 {
    let rr = (r as u64).saturating_pow(r as u32);
    let e = r.saturating_sub(t + 1) as u32;
    rr.saturating_mul((k as u64).saturating_pow(e))
}

/// Moves every set with at most `t` elements to the returned list (such sets
/// fit next to anything) and lowers `k` accordingly.
pub fn presolve_small_sets(inst: &SetInstance) -> (SetInstance, Vec<ElemSet>) {
    let (forced, rest): (Vec<ElemSet>, Vec<ElemSet>) = inst.sets.iter().cloned().partition(|s| s.len() <= inst.t);
    let k = inst.k.saturating_sub(forced.len());
    (SetInstance { sets: rest, k, ..inst.clone() }, forced)
}

/// With `t = r - 1` any two distinct sets are compatible, so the answer is
/// just `|S| >= k`. `None` when `t < r - 1`.
pub fn handle_t_max(inst: &SetInstance) -> Option<bool> {
    (inst.r >= 1 && inst.t + 1 == inst.r).then_some(inst.sets.len() >= inst.k)
}

/// Drops universe elements that no set uses.
pub fn reduce_unused_elements(inst: &SetInstance) -> SetInstance {
    inst.restrict(&inst.used_elements(), &inst.sets, inst.k)
}

/// Incremental packing with at most `q` shared elements per pair.
struct Packer {
    q: usize,
    sets: Vec<ElemSet>,
    holders: HashMap<Elem, Vec<usize>>,
}

impl Packer {
    fn new(q: usize) -> Self {
        Packer { q, sets: Vec::new(), holders: HashMap::new() }
    }

    fn try_add(&mut self, s: &[Elem]) -> bool {
        let mut shared: HashMap<usize, usize> = HashMap::new();
        for e in s {
            for &h in self.holders.get(e).map(Vec::as_slice).unwrap_or(&[]) {
                let c = shared.entry(h).or_default();
                *c += 1;
                if *c > self.q {
                    return false;
                }
            }
        }
        let id = self.sets.len();
        for &e in s {
            self.holders.entry(e).or_default().push(id);
        }
        self.sets.push(s.to_vec());
        true
    }
}

/// Scans `sets` in order, keeping each one that shares at most `q` elements
/// with everything kept so far. The result is a maximal such packing.
pub fn greedy_maximal_packing(sets: &[ElemSet], q: usize) -> Vec<ElemSet> {
    let mut p = Packer::new(q);
    for s in sets {
        p.try_add(s);
    }
    p.sets
}

/// The threshold `f(i) = (r-t)(k-1) f(i+1) + 1` with `f(t_ini + 1) = 1`,
/// for `t+1 <= i <= t_ini+1`; saturates at `u64::MAX`.
pub fn threshold_f(i: usize, t_ini: usize, r: usize, t: usize, k: usize) -> Result<u64> {
    threshold_f_capped(i, t_ini, r, t, k, u64::MAX)
}

/// [`threshold_f`] clamped to `cap`; only comparisons against counts below
/// `cap` are ever made, so clamping changes nothing but avoids overflow.
pub fn threshold_f_capped(i: usize, t_ini: usize, r: usize, t: usize, k: usize, cap: u64) -> Result<u64> {
    if t >= r || i < t + 1 || i > t_ini + 1 {
        return Err(Error::ParameterRange(format!(
            "threshold f({i}) needs t+1 <= i <= t_ini+1 and t < r (t={t}, t_ini={t_ini}, r={r})"
        )));
    }
    let x = ((r - t) as u64).saturating_mul(k.saturating_sub(1) as u64);
    let mut f = 1u64;
    for _ in i..=t_ini {
        f = x.saturating_mul(f).saturating_add(1).min(cap);
    }
    Ok(f.min(cap))
}

/// Largest pairwise intersection within `sets` (0 for fewer than two sets).
pub fn max_pairwise_overlap(sets: &[ElemSet]) -> usize {
    let mut holders: HashMap<Elem, Vec<usize>> = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        for &e in s {
            holders.entry(e).or_default().push(i);
        }
    }
    let mut best = 0;
    for (i, s) in sets.iter().enumerate() {
        let mut shared: HashMap<usize, usize> = HashMap::new();
        for e in s {
            for &j in &holders[e] {
                if j > i {
                    *shared.entry(j).or_default() += 1;
                }
            }
        }
        best = best.max(shared.values().copied().max().unwrap_or(0));
    }
    best
}

/// Extra sets of a packing `R`: sets whose removal keeps "R has a
/// (k,r,t)-packing" unchanged. Returned in canonical order.
pub fn extra_sets_reduction(r_sets: &[ElemSet], r: usize, t: usize, k: usize) -> Vec<ElemSet> {
    extra_sets_reduction_with_table(r_sets, r, t, k).0
}

/// [`extra_sets_reduction`] plus the thresholds `i -> f(i)` it used.
pub fn extra_sets_reduction_with_table(
    r_sets: &[ElemSet],
    r: usize,
    t: usize,
    k: usize,
) -> (Vec<ElemSet>, BTreeMap<usize, u64>) {
    let mut cur: Vec<ElemSet> = r_sets.to_vec();
    cur.sort();
    let t_ini = max_pairwise_overlap(&cur);
    let cap = cur.len() as u64 + 1;
    let mut table = BTreeMap::new();
    if t < r {
        for i in t + 1..=t_ini + 1 {
            table.insert(i, threshold_f_capped(i, t_ini, r, t, k, cap).expect("range checked"));
        }
    }
    let mut alive = vec![true; cur.len()];
    let mut extra = Vec::new();
    for i in (t + 1..=t_ini).rev() {
        let f = table[&i] as usize;
        let mut buckets: HashMap<Vec<Elem>, Vec<usize>> = HashMap::new();
        for (idx, s) in cur.iter().enumerate() {
            if alive[idx] && s.len() > i {
                for p in s.iter().copied().combinations(i) {
                    buckets.entry(p).or_default().push(idx);
                }
            }
        }
        for idx in 0..cur.len() {
            if cur[idx].len() <= i {
                continue;
            }
            for p in cur[idx].iter().copied().combinations(i) {
                if !alive[idx] {
                    break;
                }
                let live: Vec<usize> = buckets[&p].iter().copied().filter(|&j| alive[j]).collect();
                if live.len() > f {
                    for &j in &live[f..] {
                        alive[j] = false;
                        extra.push(cur[j].clone());
                    }
                }
            }
        }
    }
    extra.sort();
    (extra, table)
}

/// The auxiliary bipartite graph of the matching rule: outside elements on
/// the left, the `(r-1)`-sets they complete on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictBipartite {
    pub left: Vec<Elem>,
    pub right: Vec<ElemSet>,
    pub graph: BipartiteGraph,
}

/// Builds the graph from the outside elements `o` and the sets not in `R`.
/// Sets without an outside element are skipped; a set with two or more is a
/// broken precondition (it would have joined the maximal packing).
pub fn build_conflict_bipartite(o: &[Elem], s_minus_r: &[ElemSet]) -> Result<ConflictBipartite> {
    let mut left: Vec<Elem> = o.to_vec();
    left.sort_unstable();
    left.dedup();
    let mut pairs = Vec::new();
    for s in s_minus_r {
        let outside: Vec<Elem> = s.iter().copied().filter(|e| left.binary_search(e).is_ok()).collect();
        match outside.as_slice() {
            [] => {}
            [x] => pairs.push((*x, s.iter().copied().filter(|e| e != x).collect::<ElemSet>())),
            _ => {
                return Err(Error::Structural(format!(
                    "set {s:?} has {} elements outside the maximal packing",
                    outside.len()
                )))
            }
        }
    }
    let right: Vec<ElemSet> = pairs.iter().map(|(_, p)| p.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut graph = BipartiteGraph::new(left.len(), right.len());
    for (x, p) in &pairs {
        let l = left.binary_search(x).expect("outside element");
        let r = right.binary_search(p).expect("right vertex");
        graph.add_edge(l, r);
    }
    Ok(ConflictBipartite { left, right, graph })
}

struct MatchingStep {
    o: Vec<Elem>,
    removed: Vec<Elem>,
    removed_sets: Vec<ElemSet>,
}

fn matching_step(sets: &[ElemSet], r_sets: &[ElemSet]) -> Result<MatchingStep> {
    let val: BTreeSet<Elem> = r_sets.iter().flatten().copied().collect();
    let used: BTreeSet<Elem> = sets.iter().flatten().copied().collect();
    let o: Vec<Elem> = used.difference(&val).copied().collect();
    let in_r: BTreeSet<&ElemSet> = r_sets.iter().collect();
    let rest: Vec<ElemSet> = sets.iter().filter(|s| !in_r.contains(s)).cloned().collect();
    let b = build_conflict_bipartite(&o, &rest)?;
    let m = bipartite_max_matching(&b.graph);
    let mut matched = vec![false; b.left.len()];
    for &(l, _) in &m {
        matched[l] = true;
    }
    let removed: Vec<Elem> = b.left.iter().zip(&matched).filter(|(_, &m)| !m).map(|(&e, _)| e).collect();
    let removed_sets: Vec<ElemSet> =
        rest.into_iter().filter(|s| s.iter().any(|e| removed.binary_search(e).is_ok())).collect();
    Ok(MatchingStep { o, removed, removed_sets })
}

/// The matching rule on its own: outside elements are those used by some
/// set but not covered by `R`. Returns the reduced instance (renumbered), the
/// removed elements and the removed sets (both in ids of `inst`).
pub fn matching_reduction(inst: &SetInstance, r_sets: &[ElemSet]) -> Result<(SetInstance, Vec<Elem>, Vec<ElemSet>)> {
    let step = matching_step(&inst.sets, r_sets)?;
    let gone: BTreeSet<&ElemSet> = step.removed_sets.iter().collect();
    let sets: Vec<ElemSet> = inst.sets.iter().filter(|s| !gone.contains(s)).cloned().collect();
    let keep: BTreeSet<Elem> = (0..inst.n() as Elem).filter(|e| step.removed.binary_search(e).is_err()).collect();
    Ok((inst.restrict(&keep, &sets, inst.k), step.removed, step.removed_sets))
}

struct Round {
    r_sets: Vec<ElemSet>,
    extra: Vec<ElemSet>,
    m: Vec<ElemSet>,
    f_table: BTreeMap<usize, u64>,
    matching: Option<MatchingStep>,
}

/// One pass of steps 1–4 over `sets` (canonical order, all of size > t).
fn round(sets: &[ElemSet], r: usize, t: usize, k: usize) -> Result<Round> {
    let mut excluded: BTreeSet<ElemSet> = BTreeSet::new();
    let mut r_sets: Vec<ElemSet> = Vec::new();
    let mut f_table;
    loop {
        let mut packer = Packer::new(r.saturating_sub(2));
        for s in &r_sets {
            packer.try_add(s);
        }
        let in_r: BTreeSet<ElemSet> = r_sets.iter().cloned().collect();
        for s in sets {
            if !in_r.contains(s) && !excluded.contains(s) {
                packer.try_add(s);
            }
        }
        r_sets = packer.sets;
        r_sets.sort();
        let (extra, table) = extra_sets_reduction_with_table(&r_sets, r, t, k);
        f_table = table;
        if extra.is_empty() {
            break;
        }
        let gone: BTreeSet<&ElemSet> = extra.iter().collect();
        r_sets.retain(|s| !gone.contains(s));
        excluded.extend(extra);
    }
    let remaining: Vec<ElemSet> = sets.iter().filter(|s| !excluded.contains(*s)).cloned().collect();
    let m = greedy_maximal_packing(&r_sets, t);
    let matching = if m.len() >= k { None } else { Some(matching_step(&remaining, &r_sets)?) };
    Ok(Round { r_sets, extra: excluded.into_iter().collect(), m, f_table, matching })
}

/// Kernelizes a t-Overlap instance; see the module docs for the pipeline.
pub fn kernelize_set_overlap(inst: &SetInstance) -> Result<KernelOutcome> {
    if inst.mode != Mode::Overlap {
        return Err(Error::ParameterRange("overlap kernel needs an overlap-mode instance".into()));
    }
    let mut stats = KernelStats {
        elements_before: inst.n(),
        sets_before: inst.sets.len(),
        bound: overlap_bound(inst.r, inst.t, inst.k),
        ..KernelStats::default()
    };
    let early = |solution: Vec<ElemSet>, mut stats: KernelStats| {
        stats.early_solution = true;
        stats.elements_after = 0;
        stats.sets_after = 0;
        Ok(KernelOutcome::Early { solution, stats })
    };
    if inst.k == 0 {
        return early(Vec::new(), stats);
    }
    let (pre, forced) = presolve_small_sets(inst);
    if forced.len() >= inst.k {
        return early(forced[..inst.k].to_vec(), stats);
    }
    let mut trace = ReductionTrace { forced: forced.clone(), ..ReductionTrace::default() };
    let finish = |sets: &[ElemSet], k: usize, trace: ReductionTrace, mut stats: KernelStats| {
        let keep: BTreeSet<Elem> = sets.iter().flatten().copied().collect();
        let instance = inst.restrict(&keep, sets, k);
        stats.elements_after = instance.n();
        stats.sets_after = instance.sets.len();
        Ok(KernelOutcome::Reduced { instance, trace: Some(trace), stats })
    };
    if let Some(yes) = handle_t_max(&pre) {
        if yes {
            let mut sol = forced;
            sol.extend(pre.sets[..pre.k].iter().cloned());
            return early(sol, stats);
        }
        return finish(&pre.sets, pre.k, trace, stats);
    }

    let (r, t, k) = (pre.r, pre.t, pre.k);
    let mut sets = pre.sets;
    loop {
        let rd = round(&sets, r, t, k)?;
        trace.rounds += 1;
        trace.r = rd.r_sets;
        trace.m = rd.m;
        trace.f_table = rd.f_table;
        let Some(step) = rd.matching else {
            let mut sol = forced;
            sol.extend(trace.m[..k].iter().cloned());
            return early(sol, stats);
        };
        let changed = !rd.extra.is_empty() || !step.removed.is_empty();
        let drop: BTreeSet<&ElemSet> = rd.extra.iter().chain(&step.removed_sets).collect();
        sets.retain(|s| !drop.contains(s));
        trace.extra.extend(rd.extra.iter().cloned());
        trace.o = step.o;
        trace.o_removed.extend(step.removed);
        trace.sets_removed_by_matching.extend(step.removed_sets);
        if !changed {
            break;
        }
    }
    trace.extra.sort();
    trace.o_removed.sort_unstable();
    trace.sets_removed_by_matching.sort();
    stats.bound = overlap_bound(inst.r, inst.t, inst.k);
    finish(&sets, k, trace, stats)
}

/// Largest `t'` with `t'(t'-1)/2 <= t`: two cliques sharing at most `t`
/// edges share at most `t'` vertices.
pub fn clique_overlap_bound(t: usize) -> usize {
    let mut tp = 1usize;
    while (tp + 1) * tp / 2 <= t {
        tp += 1;
    }
    tp
}

/// One kernelization pass for the overlap graph variants.
pub fn kernelize_graph_overlap(inst: &GraphInstance, budget: &Budget) -> Result<GraphKernel> {
    let v = inst.variant;
    match v {
        Variant::VertexOverlap | Variant::InducedOverlap | Variant::EdgeOverlap => {}
        Variant::CliqueEdgeOverlap => {
            // Cliques sharing s vertices share s(s-1)/2 edges, so the edge
            // bound t is the vertex bound t'.
            let as_vertex = GraphInstance {
                t: clique_overlap_bound(inst.t),
                variant: Variant::VertexOverlap,
                ..inst.clone()
            };
            return Ok(match kernelize_graph_overlap(&as_vertex, budget)? {
                GraphKernel::Reduced { instance, kept_vertices, stats } => GraphKernel::Reduced {
                    instance: GraphInstance { t: inst.t, variant: Variant::CliqueEdgeOverlap, ..instance },
                    kept_vertices,
                    stats,
                },
                early => early,
            });
        }
        other => return Err(Error::ParameterRange(format!("{other} is not an overlap variant"))),
    }
    let built = pipeline::build_set_instance(inst, budget, Mode::Overlap)?;
    let outcome = kernelize_set_overlap(&built.instance)?;
    let mut stats = built.graph_stats(outcome.stats());
    match outcome {
        KernelOutcome::Early { solution, .. } => {
            let solution: Vec<Subgraph> = solution.iter().map(|s| built.subgraph_of(s)).collect();
            stats.early_solution = true;
            Ok(GraphKernel::Early { solution, stats })
        }
        KernelOutcome::Reduced { instance, trace, .. } => {
            let forced = trace.map(|t| t.forced).unwrap_or_default();
            let mut keep = built.vertices_of_universe(&instance);
            for s in &forced {
                keep.extend(built.subgraph_of(s).vertices);
            }
            let (reduced, kept_vertices) = pipeline::induced_instance(inst, &keep);
            stats.elements_after = reduced.g.n();
            stats.bound = stats.bound.saturating_add((inst.k.saturating_sub(1) * inst.family.r_h()) as u64);
            Ok(GraphKernel::Reduced { instance: reduced, kept_vertices, stats })
        }
    }
}
