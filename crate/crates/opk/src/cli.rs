//! The `opk` command line.
//!
//! Exit codes: 0 success, 1 invalid solution or failed check, 2 unreadable
//! or invalid input, 3 budget exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::check::{self, CheckConfig};
use crate::error::{Error, Result};
use crate::gadgets;
use crate::io::{self, Instance, SolutionJson};
use crate::model::{validate_graph_solution, validate_set_solution, Graph, GraphFamily, GraphInstance, Mode, Subgraph, Variant};
use crate::oracle::{self, Budget};
use crate::overlap::{self, KernelOutcome};
use crate::p2;
use crate::pipeline::{kernelize_graph, kernelize_set, GraphKernel};
use crate::random::{self, SetGenConfig};
use crate::subgraph;

#[derive(Parser, Debug)]
#[command(name = "opk", version, about = "Kernels and exact solvers for packings with bounded overlap or membership")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide an instance exactly and print a witness.
    Solve { input: PathBuf },
    /// Kernelize an instance.
    Kernelize {
        input: PathBuf,
        /// Where to write the reduced instance (stdout when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the reduction trace (overlap set instances only).
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write size statistics, including the bound.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Check a solution against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Generate an instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Source graph instance for the lifts (a random graph when absent).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Mode for random-set.
        #[arg(long, default_value = "overlap")]
        mode: String,
        /// Variant for random-graph.
        #[arg(long, default_value = "vertex-overlap")]
        variant: String,
    },
    /// Run the randomized soundness harness.
    Check {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        max_sets: usize,
        /// Comma-separated trial kinds, or `all`.
        #[arg(long, default_value = "set-overlap")]
        variants: String,
    },
    /// Print instance size statistics.
    Stats { input: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    P3Lift,
    C3Lift,
    StarOverlap,
    RandomSet,
    RandomGraph,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => 3,
        Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::InvalidInstance(_) => 2,
        _ => 1,
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn write_json(path: &Path, v: &Value) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let budget = Budget::from_env()?;
    match cmd {
        Command::Solve { input } => {
            let (decision, witness) = match io::read_instance(&input)? {
                Instance::Set(s) => match oracle::solve_set_exact(&s, &budget)? {
                    Some(w) => (true, io::set_solution_json(&s, &w)),
                    None => (false, Value::Null),
                },
                Instance::Graph(g) => {
                    let w = if g.variant == Variant::P2Membership {
                        p2::solve_p2_membership(&g.g, g.t, g.k)
                    } else {
                        oracle::solve_graph_exact(&g, &budget)?
                    };
                    match w {
                        Some(w) => (true, io::graph_solution_json(&w)),
                        None => (false, Value::Null),
                    }
                }
            };
            emit(out, &json!({ "decision": if decision { "yes" } else { "no" }, "witness": witness }))?;
            Ok(0)
        }
        Command::Kernelize { input, output, trace, stats } => {
            let inst = io::read_instance(&input)?;
            let (result, kernel_stats, trace_json) = match &inst {
                Instance::Set(s) => {
                    let outcome = kernelize_set(s, &budget)?;
                    let trace_json = match &outcome {
                        KernelOutcome::Reduced { trace: Some(tr), .. } => Some(tr.to_json(s, None)),
                        KernelOutcome::Early { solution, .. } if s.mode == Mode::Overlap => {
                            Some(json!({ "early_solution": io::set_solution_json(s, solution) }))
                        }
                        _ => None,
                    };
                    let result = match &outcome {
                        KernelOutcome::Early { solution, .. } => Err(io::set_solution_json(s, solution)),
                        KernelOutcome::Reduced { instance, .. } => {
                            Ok(io::instance_to_json(&Instance::Set(instance.clone())))
                        }
                    };
                    (result, outcome.stats().clone(), trace_json)
                }
                Instance::Graph(g) => {
                    let outcome = kernelize_graph(g, &budget)?;
                    let result = match &outcome {
                        GraphKernel::Early { solution, .. } => Err(io::graph_solution_json(solution)),
                        GraphKernel::Reduced { instance, .. } => {
                            Ok(io::instance_to_json(&Instance::Graph(instance.clone())))
                        }
                    };
                    (result, outcome.stats().clone(), None)
                }
            };
            if let Some(path) = stats {
                write_json(&path, &serde_json::to_value(&kernel_stats)?)?;
            }
            if let Some(path) = trace {
                match trace_json {
                    Some(t) => write_json(&path, &t)?,
                    None => writeln!(err, "note: no trace for this instance kind")?,
                }
            }
            match result {
                Ok(reduced) => match output {
                    Some(path) => write_json(&path, &reduced)?,
                    None => emit(out, &reduced)?,
                },
                Err(solution) => emit(out, &json!({ "early_solution": solution }))?,
            }
            Ok(0)
        }
        Command::Verify { instance, solution } => {
            let inst = io::read_instance(&instance)?;
            let sol = io::parse_solution(&std::fs::read_to_string(&solution)?)?;
            let verdict = match (&inst, sol) {
                (Instance::Set(s), SolutionJson::Sets { sets }) => match io::resolve_sets(s, &sets) {
                    Ok(sets) => validate_set_solution(s, &sets).map_err(|v| v.to_string()),
                    Err(i) => Err(format!("member #{i} uses an element outside the universe")),
                },
                (Instance::Graph(g), SolutionJson::Subgraphs { subgraphs }) => {
                    let subs: Vec<Subgraph> =
                        subgraphs.into_iter().map(|s| Subgraph::new(s.vertices, s.edges)).collect();
                    validate_graph_solution(g, &subs).map_err(|v| v.to_string())
                }
                _ => return Err(Error::Parse("solution kind does not match the instance kind".into())),
            };
            match verdict {
                Ok(()) => {
                    writeln!(out, "valid")?;
                    Ok(0)
                }
                Err(msg) => {
                    writeln!(out, "invalid: {msg}")?;
                    Ok(1)
                }
            }
        }
        Command::Gen { kind, seed, input, n, p, t, k, mode, variant } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let source_graph = |rng: &mut ChaCha8Rng, max_degree: Option<usize>| -> Result<Graph> {
                match &input {
                    Some(path) => match io::read_instance(path)? {
                        Instance::Graph(g) => Ok(g.g),
                        Instance::Set(_) => Err(Error::Parse("lifts need a graph instance".into())),
                    },
                    None => Ok(match max_degree {
                        Some(d) => random::random_bounded_degree_graph(rng, n, p, d),
                        None => random::random_graph(rng, n, p),
                    }),
                }
            };
            let inst = match kind {
                GenKind::P3Lift => {
                    let lift = gadgets::lift_p3_membership(&source_graph(&mut rng, None)?, k, t)?;
                    let fam = GraphFamily::new(vec![Graph::path(3)]);
                    Instance::Graph(GraphInstance::new(lift.graph, fam, t + 1, lift.k_new, Variant::VertexMembership)?)
                }
                GenKind::C3Lift => {
                    let lift = gadgets::lift_c3_edge_membership(&source_graph(&mut rng, None)?, k, t)?;
                    let fam = GraphFamily::new(vec![Graph::complete(3)]);
                    Instance::Graph(GraphInstance::new(lift.graph, fam, t + 1, lift.k_new, Variant::EdgeMembership)?)
                }
                GenKind::StarOverlap => {
                    let g = source_graph(&mut rng, Some(gadgets::STAR_MAX_DEGREE))?;
                    let gadget = gadgets::star_overlap_gadget(&g, t)?;
                    let fam = GraphFamily::new(vec![gadget.pattern]);
                    Instance::Graph(GraphInstance::new(gadget.graph, fam, t, k, Variant::VertexOverlap)?)
                }
                GenKind::RandomSet => {
                    let mode = match mode.as_str() {
                        "overlap" => Mode::Overlap,
                        "membership" => Mode::Membership,
                        other => return Err(Error::Parse(format!("unknown mode {other:?}"))),
                    };
                    Instance::Set(random::random_set_instance(&mut rng, mode, &SetGenConfig::default()))
                }
                GenKind::RandomGraph => {
                    let variant: Variant = variant.parse()?;
                    Instance::Graph(check::random_graph_instance(&mut rng, n.max(1), variant))
                }
            };
            emit(out, &io::instance_to_json(&inst))?;
            Ok(0)
        }
        Command::Check { trials, seed, max_n, max_sets, variants } => {
            let cfg = CheckConfig { trials, seed, max_n, max_sets, kinds: check::parse_kinds(&variants)?, budget };
            let report = check::run_check(&cfg);
            write!(out, "{}", report.render(&cfg))?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Stats { input } => {
            let v = match io::read_instance(&input)? {
                Instance::Set(s) => {
                    let mut v = json!({
                        "kind": "set",
                        "elements": s.n(),
                        "sets": s.sets.len(),
                        "used_elements": s.used_elements().len(),
                        "max_pairwise_overlap": overlap::max_pairwise_overlap(&s.sets),
                    });
                    if s.mode == Mode::Overlap {
                        v["bound"] = json!(overlap::overlap_bound(s.r, s.t, s.k));
                    }
                    v
                }
                Instance::Graph(g) => {
                    let cat = subgraph::enumerate(&g.g, &g.family, g.variant.induced(), budget.catalog)?;
                    json!({
                        "kind": "graph",
                        "vertices": g.g.n(),
                        "edges": g.g.m(),
                        "occurrences": cat.len(),
                        "distinct_vertex_sets": cat.collection_v().len(),
                        "distinct_edge_sets": cat.collection_e().len(),
                        "r_h": g.family.r_h(),
                        "m_h": g.family.m_h(),
                    })
                }
            };
            emit(out, &v)?;
            Ok(0)
        }
    }
}
