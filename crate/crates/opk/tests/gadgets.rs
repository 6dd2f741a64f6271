mod common;

use common::{oracle_graph, random_graph, rng};
use opk::gadgets::{lift_c3_edge_membership, lift_p3_membership, star_overlap_gadget, star_size, Origin};
use opk::random::random_bounded_degree_graph;
use opk::subgraph::enumerate;
use opk::{Error, Graph, GraphFamily, GraphInstance, Variant};
use rand::Rng;

fn p3(g: Graph, t: usize, k: usize) -> GraphInstance {
    GraphInstance::new(g, GraphFamily::new(vec![Graph::path(3)]), t, k, Variant::VertexMembership).unwrap()
}

fn c3(g: Graph, t: usize, k: usize) -> GraphInstance {
    GraphInstance::new(g, GraphFamily::new(vec![Graph::complete(3)]), t, k, Variant::EdgeMembership).unwrap()
}

#[test]
fn p3_lift_shapes() {
    let lift = lift_p3_membership(&Graph::path(4), 1, 1).unwrap();
    assert_eq!(lift.graph.n(), 4 + 4);
    assert_eq!(lift.k_new, 5);
    assert_eq!(lift.graph.m(), 3 + 2 * 3);
    assert_eq!(lift.origin[4], Origin::Added { index: 0 });

    let lift = lift_p3_membership(&Graph::path(3), 0, 2).unwrap();
    assert_eq!(lift.graph.n(), 3 + 2);
    let padded = lift_p3_membership(&Graph::path(3), 0, 1).unwrap();
    assert_eq!(padded.graph.n(), 4 + 4);
    assert_eq!(padded.origin[3], Origin::Padding);

    let empty = lift_p3_membership(&Graph::empty(0), 0, 1).unwrap();
    assert_eq!(empty.graph.n(), 2 + 2);
    assert!(oracle_graph(&p3(empty.graph, 2, empty.k_new)));
    assert!(matches!(lift_p3_membership(&Graph::path(3), 1, 0), Err(Error::ParameterRange(_))));
}

#[test]
fn p3_lift_preserves_decisions() {
    for seed in 0..80u64 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=5);
        let p = r.gen_range(0.3..0.8);
        let g = random_graph(&mut r, n, p);
        for k in 0..=3 {
            let lift = lift_p3_membership(&g, k, 1).unwrap();
            let a = oracle_graph(&p3(g.clone(), 1, k));
            let b = oracle_graph(&p3(lift.graph.clone(), 2, lift.k_new));
            assert_eq!(a, b, "seed {seed} k {k}: {g:?}");
        }
    }
}

#[test]
fn c3_lift_shapes_and_equivalence() {
    let tri = Graph::complete(3);
    let lift = lift_c3_edge_membership(&tri, 1, 1).unwrap();
    assert_eq!((lift.graph.n(), lift.graph.m(), lift.k_new), (6, 9, 4));
    assert_eq!(lift.origin[3], Origin::Edge(0, 1));
    assert!(oracle_graph(&c3(tri.clone(), 1, 1)));
    assert!(oracle_graph(&c3(lift.graph.clone(), 2, 4)));

    let edgeless = lift_c3_edge_membership(&Graph::empty(4), 2, 1).unwrap();
    assert_eq!((edgeless.graph, edgeless.k_new), (Graph::empty(4), 2));

    for k in 0..=4 {
        let lift = lift_c3_edge_membership(&Graph::complete(4), k, 1).unwrap();
        assert_eq!(
            oracle_graph(&c3(Graph::complete(4), 1, k)),
            oracle_graph(&c3(lift.graph, 2, lift.k_new)),
            "K4 k={k}"
        );
    }
}

#[test]
fn c3_lift_preserves_decisions() {
    for seed in 0..60u64 {
        let mut r = rng(400 + seed);
        let n = r.gen_range(3..=5);
        let p = r.gen_range(0.4..0.9);
        let g = random_graph(&mut r, n, p);
        for k in 0..=3 {
            let lift = lift_c3_edge_membership(&g, k, 1).unwrap();
            assert_eq!(
                oracle_graph(&c3(g.clone(), 1, k)),
                oracle_graph(&c3(lift.graph.clone(), 2, lift.k_new)),
                "seed {seed} k {k}"
            );
        }
    }
}

#[test]
fn star_gadget_shapes() {
    assert_eq!(star_size(6), 5);
    assert_eq!(star_size(10), 9);
    let g = star_overlap_gadget(&Graph::complete(3), 0).unwrap();
    assert_eq!(g.graph.n(), 3 * 7);
    assert_eq!(g.pattern, g.graph);
    let cat = enumerate(&g.graph, &GraphFamily::new(vec![g.pattern.clone()]), false, 1000).unwrap();
    assert_eq!(cat.len(), 1);
    let k6 = Graph::complete(6);
    assert!(matches!(star_overlap_gadget(&k6, 0), Err(Error::Degree { found: 5, limit: 4 })));
}

#[test]
fn star_gadget_preserves_triangle_packings() {
    for seed in 0..40u64 {
        let mut r = rng(800 + seed);
        let n = r.gen_range(3..=5);
        let g = random_bounded_degree_graph(&mut r, n, 0.7, 4);
        let t = r.gen_range(0..=9);
        let gadget = star_overlap_gadget(&g, t).unwrap();
        for k in 1..=2 {
            let source = GraphInstance::new(g.clone(), GraphFamily::new(vec![Graph::complete(3)]), 0, k, Variant::VertexOverlap).unwrap();
            let lifted = GraphInstance::new(
                gadget.graph.clone(),
                GraphFamily::new(vec![gadget.pattern.clone()]),
                t,
                k,
                Variant::VertexOverlap,
            )
            .unwrap();
            assert_eq!(oracle_graph(&source), oracle_graph(&lifted), "seed {seed} t {t} k {k}");
        }
    }
}
