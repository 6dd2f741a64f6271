//! Pattern packing in a graph under every supported sharing rule.

use opk::fixtures::shared_edge_instance;
use opk::oracle::solve_graph_exact;
use opk::{kernelize_graph, Budget, Graph, GraphKernel, Mode, Variant};

fn main() -> Result<(), opk::Error> {
    let budget = Budget::default();
    println!("{:<28} {:>3} {:>3}  {:<8} kernel", "variant", "t", "k", "answer");
    for variant in Variant::ALL {
        // Cliques only for the clique variant; 4-cycles and K4 elsewhere.
        let members = if variant == Variant::CliqueEdgeOverlap {
            vec![Graph::complete(4)]
        } else {
            vec![Graph::cycle(4), Graph::complete(4)]
        };
        let t = if variant.mode() == Mode::Overlap { 1 } else { 2 };
        let inst = shared_edge_instance(members, t, 3, variant);
        let answer = if solve_graph_exact(&inst, &budget)?.is_some() { "yes" } else { "no" };
        let kernel = match kernelize_graph(&inst, &budget)? {
            GraphKernel::Early { solution, .. } => format!("packing of {} found", solution.len()),
            GraphKernel::Reduced { instance, .. } => format!("{} vertices, {} edges", instance.g.n(), instance.g.m()),
        };
        println!("{:<28} {:>3} {:>3}  {:<8} {}", variant.name(), t, inst.k, answer, kernel);
    }
    Ok(())
}
