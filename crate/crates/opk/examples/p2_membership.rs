//! Packing single edges where each vertex may be used `t` times is a
//! degree-constrained subgraph problem, solvable with one maximum matching.

use opk::p2::{build_gadget, solve_p2_membership, DegreeConstraint};
use opk::Graph;

fn main() {
    let wheel = Graph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        .expect("simple graph");
    for t in 1..=3 {
        let gadget = build_gadget(&wheel, &DegreeConstraint::uniform(wheel.n(), t));
        let best = (0..=wheel.m()).rev().find(|&k| solve_p2_membership(&wheel, t, k).is_some()).unwrap_or(0);
        println!(
            "t = {t}: gadget {} vertices / {} edges, at most {best} edges can be packed",
            gadget.graph.n(),
            gadget.graph.m()
        );
        if let Some(w) = solve_p2_membership(&wheel, t, best) {
            let edges: Vec<String> = w.iter().map(|s| format!("{}-{}", s.vertices[0], s.vertices[1])).collect();
            println!("    {}", edges.join(" "));
        }
    }
}
