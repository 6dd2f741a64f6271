//! Instance transformations that raise the sharing parameter without
//! changing the answer.
//!
//! * a `P3` packing with membership `t` becomes one with membership `t + 1`;
//! * a triangle packing with edge membership 1 becomes one with membership 2;
//! * a vertex-disjoint triangle packing becomes a packing of a larger
//!   pattern with overlap `t`, on graphs of maximum degree 4.

use opk::gadgets::{lift_c3_edge_membership, lift_p3_membership, star_overlap_gadget};
use opk::oracle::solve_graph_exact;
use opk::{Budget, Graph, GraphFamily, GraphInstance, Variant};

fn yes(inst: &GraphInstance) -> bool {
    solve_graph_exact(inst, &Budget::default()).expect("small instance").is_some()
}

fn main() -> Result<(), opk::Error> {
    let p3 = GraphFamily::new(vec![Graph::path(3)]);
    let host = Graph::path(6);
    let lift = lift_p3_membership(&host, 2, 1)?;
    let before = GraphInstance::new(host.clone(), p3.clone(), 1, 2, Variant::VertexMembership)?;
    let after = GraphInstance::new(lift.graph.clone(), p3, 2, lift.k_new, Variant::VertexMembership)?;
    println!("P3 lift: {} -> {} vertices, k 2 -> {}; answers {} / {}", host.n(), lift.graph.n(), lift.k_new, yes(&before), yes(&after));

    let c3 = GraphFamily::new(vec![Graph::complete(3)]);
    let k4 = Graph::complete(4);
    let lift = lift_c3_edge_membership(&k4, 1, 1)?;
    let before = GraphInstance::new(k4.clone(), c3.clone(), 1, 1, Variant::EdgeMembership)?;
    let after = GraphInstance::new(lift.graph.clone(), c3.clone(), 2, lift.k_new, Variant::EdgeMembership)?;
    println!("C3 lift: {} -> {} vertices, k 1 -> {}; answers {} / {}", k4.n(), lift.graph.n(), lift.k_new, yes(&before), yes(&after));

    let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])?;
    let t = 3;
    let star = star_overlap_gadget(&two_triangles, t)?;
    let before = GraphInstance::new(two_triangles, c3, 0, 2, Variant::VertexOverlap)?;
    let after = GraphInstance::new(star.graph.clone(), GraphFamily::new(vec![star.pattern.clone()]), t, 2, Variant::VertexOverlap)?;
    println!(
        "star gadget (t = {t}): {} vertices, pattern on {} vertices; answers {} / {}",
        star.graph.n(),
        star.pattern.n(),
        yes(&before),
        yes(&after)
    );
    Ok(())
}
