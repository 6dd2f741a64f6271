//! Randomized soundness harness behind `opk check`.
//!
//! Each trial draws an instance from its own ChaCha8 stream (seed = the
//! run seed, stream = the trial index), so a trial's instance does not
//! depend on how many trials run or in which order. Trials run in parallel;
//! the report lists them by index and is byte-identical across runs with the
//! same configuration.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gadgets;
use crate::model::{
    validate_graph_solution, validate_set_solution, Graph, GraphFamily, GraphInstance, Mode, SetInstance, Variant,
};
use crate::oracle::{solve_graph_exact, solve_set_exact, Budget};
use crate::overlap::{half_bound, KernelOutcome};
use crate::p2;
use crate::pipeline::{kernelize_graph, kernelize_set, GraphKernel};
use crate::random::{random_bounded_degree_graph, random_graph, random_set_instance, SetGenConfig};

/// What a trial exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialKind {
    SetOverlap,
    SetMembership,
    Graph(Variant),
    /// Clique-edge-overlap kernel against an edge-overlap oracle.
    Clique,
    P2,
    P3Lift,
    C3Lift,
    StarOverlap,
}

impl TrialKind {
    pub fn name(self) -> &'static str {
        match self {
            TrialKind::SetOverlap => "set-overlap",
            TrialKind::SetMembership => "set-membership",
            TrialKind::Graph(v) => v.name(),
            TrialKind::Clique => "clique",
            TrialKind::P2 => "p2",
            TrialKind::P3Lift => "p3-lift",
            TrialKind::C3Lift => "c3-lift",
            TrialKind::StarOverlap => "star-overlap",
        }
    }

    pub fn all() -> Vec<TrialKind> {
        let mut v = vec![TrialKind::SetOverlap, TrialKind::SetMembership];
        v.extend(Variant::ALL.iter().map(|&x| TrialKind::Graph(x)));
        v.extend([TrialKind::Clique, TrialKind::P2, TrialKind::P3Lift, TrialKind::C3Lift, TrialKind::StarOverlap]);
        v
    }
}

impl fmt::Display for TrialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrialKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TrialKind::all()
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check variant {s:?}")))
    }
}

/// Parses a comma-separated variant list; `all` expands to every kind.
pub fn parse_kinds(spec: &str) -> Result<Vec<TrialKind>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if part == "all" {
            out.extend(TrialKind::all());
        } else {
            out.push(part.parse()?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
    pub max_sets: usize,
    /// Trial `i` runs `kinds[i % kinds.len()]`.
    pub kinds: Vec<TrialKind>,
    pub budget: Budget,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 100,
            seed: 0,
            max_n: 12,
            max_sets: 20,
            kinds: vec![TrialKind::SetOverlap],
            budget: Budget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialResult {
    pub index: usize,
    pub kind: TrialKind,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub results: Vec<TrialResult>,
}

impl CheckReport {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn render(&self, cfg: &CheckConfig) -> String {
        let mut out = String::new();
        let kinds: Vec<&str> = cfg.kinds.iter().map(|k| k.name()).collect();
        let _ = writeln!(
            out,
            "check seed={} trials={} max_n={} max_sets={} variants={}",
            cfg.seed,
            cfg.trials,
            cfg.max_n,
            cfg.max_sets,
            kinds.join(",")
        );
        for r in &self.results {
            let verdict = if r.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{verdict} #{:04} {:<22} {}", r.index, r.kind.name(), r.detail);
        }
        let _ = writeln!(out, "passed {} failed {}", self.passed(), self.failed());
        out
    }
}

pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn run_check(cfg: &CheckConfig) -> CheckReport {
    if cfg.kinds.is_empty() {
        return CheckReport { results: Vec::new() };
    }
    let results = (0..cfg.trials)
        .into_par_iter()
        .map(|index| {
            let kind = cfg.kinds[index % cfg.kinds.len()];
            let mut rng = trial_rng(cfg.seed, index);
            let (passed, detail) = match run_trial(kind, &mut rng, cfg) {
                Ok(detail) => (true, detail),
                Err(e) => (false, e),
            };
            TrialResult { index, kind, passed, detail }
        })
        .collect();
    CheckReport { results }
}

type Outcome = std::result::Result<String, String>;

fn run_trial(kind: TrialKind, rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Outcome {
    match kind {
        TrialKind::SetOverlap => set_trial(rng, cfg, Mode::Overlap),
        TrialKind::SetMembership => set_trial(rng, cfg, Mode::Membership),
        TrialKind::Graph(v) => {
            let inst = random_graph_instance(rng, cfg.max_n.min(9), v);
            graph_trial(&inst, &inst, &cfg.budget)
        }
        TrialKind::Clique => {
            let inst = random_graph_instance(rng, cfg.max_n.min(8), Variant::CliqueEdgeOverlap);
            let reference = GraphInstance { variant: Variant::EdgeOverlap, ..inst.clone() };
            graph_trial(&inst, &reference, &cfg.budget)
        }
        TrialKind::P2 => p2_trial(rng, cfg),
        TrialKind::P3Lift => p3_lift_trial(rng, cfg),
        TrialKind::C3Lift => c3_lift_trial(rng, cfg),
        TrialKind::StarOverlap => star_trial(rng, cfg),
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn set_decision(inst: &SetInstance, budget: &Budget) -> std::result::Result<bool, String> {
    Ok(solve_set_exact(inst, budget).map_err(err)?.is_some())
}

fn graph_decision(inst: &GraphInstance, budget: &Budget) -> std::result::Result<bool, String> {
    Ok(solve_graph_exact(inst, budget).map_err(err)?.is_some())
}

fn set_trial(rng: &mut ChaCha8Rng, cfg: &CheckConfig, mode: Mode) -> Outcome {
    let gen = SetGenConfig { clustered: rng.gen_bool(0.5), ..SetGenConfig::capped(cfg.max_n, cfg.max_sets) };
    let inst = random_set_instance(rng, mode, &gen);
    let shape = format!("n={} sets={} r={} t={} k={}", inst.n(), inst.sets.len(), inst.r, inst.t, inst.k);
    let before = set_decision(&inst, &cfg.budget)?;
    let out = kernelize_set(&inst, &cfg.budget).map_err(err)?;
    match &out {
        KernelOutcome::Early { solution, .. } => {
            validate_set_solution(&inst, solution).map_err(|v| format!("{shape}: bad early solution: {v}"))?;
            if !before {
                return Err(format!("{shape}: early solution on a NO instance"));
            }
            Ok(format!("{shape} early"))
        }
        KernelOutcome::Reduced { instance, trace, stats } => {
            let after = set_decision(instance, &cfg.budget)?;
            if after != before {
                return Err(format!("{shape}: decision {before} -> {after}"));
            }
            if stats.elements_after as u64 > stats.bound {
                return Err(format!("{shape}: {} elements > bound {}", stats.elements_after, stats.bound));
            }
            if let Some(tr) = trace {
                let half = 2 * half_bound(inst.r, inst.t, inst.k);
                let val: std::collections::BTreeSet<_> = tr.r.iter().flatten().collect();
                let outside_kept = tr.o.iter().filter(|e| tr.o_removed.binary_search(e).is_err()).count();
                if val.len() as u64 > half || outside_kept as u64 > half {
                    return Err(format!("{shape}: |val(R)|={} outside={} > {half}", val.len(), outside_kept));
                }
            }
            let again = kernelize_set(instance, &cfg.budget).map_err(err)?;
            if again.reduced() != Some(instance) {
                return Err(format!("{shape}: second kernelization changed the instance"));
            }
            Ok(format!("{shape} -> n={} sets={} bound={}", stats.elements_after, stats.sets_after, stats.bound))
        }
    }
}

/// `{K3}`, `{P3}` or `{C4, K4}`; complete graphs only for the clique variant.
pub fn random_family(rng: &mut impl Rng, variant: Variant) -> GraphFamily {
    let pick = rng.gen_range(0..3);
    let members = match (pick, variant == Variant::CliqueEdgeOverlap) {
        (0, _) | (1, true) => vec![Graph::complete(3)],
        (1, false) => vec![Graph::path(3)],
        (_, true) => vec![Graph::complete(4)],
        (_, false) => vec![Graph::cycle(4), Graph::complete(4)],
    };
    GraphFamily::new(members)
}

pub fn random_graph_instance(rng: &mut impl Rng, max_n: usize, variant: Variant) -> GraphInstance {
    let family = random_family(rng, variant);
    let n = rng.gen_range(4.min(max_n)..=max_n);
    let p = rng.gen_range(0.3..0.75);
    let g = random_graph(rng, n, p);
    let t = match variant.mode() {
        Mode::Membership => rng.gen_range(1..=3),
        Mode::Overlap => {
            let r = if variant.on_edges() { family.m_h() } else { family.r_h() };
            rng.gen_range(0..=(r - 1).min(3))
        }
    };
    let k = rng.gen_range(1..=4);
    GraphInstance::new(g, family, t, k, variant).expect("generator respects the instance invariants")
}

/// Kernelizes `inst` and compares against the oracle on `reference`, an
/// instance on the same host with the same answer.
fn graph_trial(inst: &GraphInstance, reference: &GraphInstance, budget: &Budget) -> Outcome {
    let shape = format!("n={} m={} |H|={} t={} k={}", inst.g.n(), inst.g.m(), inst.family.members.len(), inst.t, inst.k);
    let before = graph_decision(reference, budget)?;
    match kernelize_graph(inst, budget).map_err(err)? {
        GraphKernel::Early { solution, .. } => {
            validate_graph_solution(inst, &solution).map_err(|v| format!("{shape}: bad early solution: {v}"))?;
            if !before {
                return Err(format!("{shape}: early solution on a NO instance"));
            }
            Ok(format!("{shape} early"))
        }
        GraphKernel::Reduced { instance, .. } => {
            let after = graph_decision(&instance, budget)?;
            if after != before {
                return Err(format!("{shape}: decision {before} -> {after}"));
            }
            let again = kernelize_graph(&instance, budget).map_err(err)?;
            if again.reduced().map(|r| &r.g) != Some(&instance.g) {
                return Err(format!("{shape}: second kernelization changed the host"));
            }
            Ok(format!("{shape} -> n={}", instance.g.n()))
        }
    }
}

fn p2_instance(g: Graph, t: usize, k: usize) -> GraphInstance {
    GraphInstance::new(g, GraphFamily::new(vec![Graph::path(2)]), t, k, Variant::VertexMembership)
        .expect("valid P2 instance")
}

fn p2_trial(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Outcome {
    let n = rng.gen_range(2..=cfg.max_n.clamp(2, 8));
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(rng, n, p);
    let t = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=8);
    let shape = format!("n={n} m={} t={t} k={k}", g.m());
    let gadget = p2::build_gadget(&g, &p2::DegreeConstraint::uniform(n, t));
    if gadget.graph.n() != p2::gadget_vertex_count(n, g.m(), t) {
        return Err(format!("{shape}: gadget has {} vertices", gadget.graph.n()));
    }
    let fast = p2::solve_p2_membership(&g, t, k);
    let inst = p2_instance(g, t, k);
    if let Some(w) = &fast {
        validate_graph_solution(&inst, w).map_err(|v| format!("{shape}: bad witness: {v}"))?;
    }
    let slow = graph_decision(&inst, &cfg.budget)?;
    if fast.is_some() != slow {
        return Err(format!("{shape}: solver {} oracle {slow}", fast.is_some()));
    }
    Ok(format!("{shape} {}", if slow { "yes" } else { "no" }))
}

fn lift_agreement(source: &GraphInstance, lifted: &GraphInstance, budget: &Budget, shape: String) -> Outcome {
    let a = graph_decision(source, budget)?;
    let b = graph_decision(lifted, budget)?;
    if a != b {
        return Err(format!("{shape}: source {a} lifted {b}"));
    }
    Ok(format!("{shape} {}", if a { "yes" } else { "no" }))
}

fn p3_lift_trial(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Outcome {
    let n = rng.gen_range(1..=cfg.max_n.clamp(1, 5));
    let p = rng.gen_range(0.3..0.8);
    let g = random_graph(rng, n, p);
    let k = rng.gen_range(0..=3);
    let t = 1;
    let lift = gadgets::lift_p3_membership(&g, k, t).map_err(err)?;
    let fam = || GraphFamily::new(vec![Graph::path(3)]);
    let shape = format!("n={n} m={} k={k} -> n={} k={}", g.m(), lift.graph.n(), lift.k_new);
    let source = GraphInstance::new(g, fam(), t, k, Variant::VertexMembership).map_err(err)?;
    let lifted = GraphInstance::new(lift.graph, fam(), t + 1, lift.k_new, Variant::VertexMembership).map_err(err)?;
    lift_agreement(&source, &lifted, &cfg.budget, shape)
}

fn c3_lift_trial(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Outcome {
    let n = rng.gen_range(3..=cfg.max_n.clamp(3, 5));
    let p = rng.gen_range(0.4..0.9);
    let g = random_graph(rng, n, p);
    let k = rng.gen_range(0..=3);
    let t = 1;
    let lift = gadgets::lift_c3_edge_membership(&g, k, t).map_err(err)?;
    let fam = || GraphFamily::new(vec![Graph::complete(3)]);
    let shape = format!("n={n} m={} k={k} -> n={} k={}", g.m(), lift.graph.n(), lift.k_new);
    let source = GraphInstance::new(g, fam(), t, k, Variant::EdgeMembership).map_err(err)?;
    let lifted = GraphInstance::new(lift.graph, fam(), t + 1, lift.k_new, Variant::EdgeMembership).map_err(err)?;
    lift_agreement(&source, &lifted, &cfg.budget, shape)
}

fn star_trial(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Outcome {
    let n = rng.gen_range(3..=cfg.max_n.clamp(3, 5));
    let p = rng.gen_range(0.4..0.9);
    let g = random_bounded_degree_graph(rng, n, p, gadgets::STAR_MAX_DEGREE);
    let t = rng.gen_range(0..=10);
    let k = rng.gen_range(1..=2);
    let gadget = gadgets::star_overlap_gadget(&g, t).map_err(err)?;
    let shape = format!("n={n} m={} t={t} k={k} -> n={}", g.m(), gadget.graph.n());
    let source =
        GraphInstance::new(g, GraphFamily::new(vec![Graph::complete(3)]), 0, k, Variant::VertexOverlap).map_err(err)?;
    let lifted =
        GraphInstance::new(gadget.graph, GraphFamily::new(vec![gadget.pattern]), t, k, Variant::VertexOverlap)
            .map_err(err)?;
    lift_agreement(&source, &lifted, &cfg.budget, shape)
}
