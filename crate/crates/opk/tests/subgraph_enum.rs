mod common;

use std::collections::BTreeSet;

use common::{all_subgraphs, random_graph, rng};
use opk::fixtures::{self, v};
use opk::subgraph::{automorphism_count, dedupe_by_vertex_set, derive_collections, enumerate, is_isomorphic};
use opk::{Error, Graph, GraphFamily, Subgraph};

fn vs(s: &str) -> Vec<u32> {
    let mut out: Vec<u32> = s.chars().map(v).collect();
    out.sort_unstable();
    out
}

#[test]
fn four_cycles_of_the_shared_edge_graph() {
    let (g, _) = fixtures::shared_edge_graph();
    let cat = enumerate(&g, &GraphFamily::new(vec![Graph::cycle(4)]), false, 10_000).unwrap();
    let on = |s: &str| cat.entries.iter().filter(|e| e.vertices == vs(s)).count();
    assert_eq!(on("abcd"), 1);
    assert_eq!(on("bcgh"), 1);
    assert_eq!(on("bcef"), 3);
    assert_eq!(cat.len(), 5);
    assert_eq!(cat.collection_v().len(), 3);
}

#[test]
fn edge_collection_for_cycles_and_cliques() {
    let (g, _) = fixtures::shared_edge_graph();
    let cat = enumerate(&g, &GraphFamily::new(vec![Graph::cycle(4), Graph::complete(4)]), false, 10_000).unwrap();
    let (e, vsets) = derive_collections(&cat);
    // abcd, bghc, the K4 on bcef and its three 4-cycles.
    assert_eq!(e.len(), 6);
    assert_eq!(vsets.len(), 3);
    assert!(e.iter().all(|x| x.len() <= 6));

    let d = dedupe_by_vertex_set(&cat);
    assert!(d.deduped);
    assert_eq!(d.len(), 3);
    let bcef = d.entries.iter().find(|x| x.vertices == vs("bcef")).unwrap();
    let smallest = cat.entries.iter().filter(|x| x.vertices == vs("bcef")).map(|x| &x.edges).min().unwrap();
    assert_eq!(&bcef.edges, smallest);
    assert_eq!(dedupe_by_vertex_set(&d).entries, d.entries);
    assert!(dedupe_by_vertex_set(&enumerate(&Graph::empty(3), &GraphFamily::new(vec![Graph::complete(3)]), false, 10).unwrap()).is_empty());
}

#[test]
fn trivial_families() {
    let g = Graph::cycle(6);
    let k1 = enumerate(&g, &GraphFamily::new(vec![Graph::empty(1)]), false, 100).unwrap();
    assert_eq!(k1.len(), 6);
    let k3 = enumerate(&g, &GraphFamily::new(vec![Graph::complete(3)]), false, 100).unwrap();
    assert!(k3.is_empty());
    let (e, vsets) = derive_collections(&enumerate(&Graph::complete(3), &GraphFamily::new(vec![Graph::complete(3)]), false, 100).unwrap());
    assert_eq!((e.len(), vsets.len()), (1, 1));
}

#[test]
fn budget_is_enforced() {
    let g = Graph::complete(8);
    let r = enumerate(&g, &GraphFamily::new(vec![Graph::path(3)]), false, 10);
    assert!(matches!(r, Err(Error::Budget { .. })));
}

#[test]
fn automorphism_counts() {
    assert_eq!(automorphism_count(&Graph::complete(4)), 24);
    assert_eq!(automorphism_count(&Graph::cycle(5)), 10);
    assert_eq!(automorphism_count(&Graph::path(4)), 2);
}

fn brute_catalog(g: &Graph, family: &GraphFamily, induced: bool) -> BTreeSet<Subgraph> {
    all_subgraphs(g, family.r_h())
        .into_iter()
        .filter(|s| !induced || g.induced_edges(&s.vertices) == s.edges)
        .filter(|s| family.members.iter().any(|h| is_isomorphic(s, h)))
        .collect()
}

#[test]
fn catalog_matches_brute_force() {
    let families = [
        vec![Graph::complete(3)],
        vec![Graph::path(3)],
        vec![Graph::cycle(4), Graph::complete(4)],
        vec![Graph::path(4)],
        vec![Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()],
    ];
    for seed in 0..60u64 {
        let mut r = rng(seed);
        let n = 4 + (seed % 4) as usize;
        let g = random_graph(&mut r, n, 0.55);
        for members in &families {
            let family = GraphFamily::new(members.clone());
            for induced in [false, true] {
                let cat = enumerate(&g, &family, induced, 100_000).unwrap();
                let got: BTreeSet<Subgraph> = cat.entries.iter().cloned().collect();
                assert_eq!(got.len(), cat.len(), "duplicates, seed {seed}");
                assert_eq!(got, brute_catalog(&g, &family, induced), "seed {seed} induced {induced}");
            }
        }
    }
}

#[test]
fn induced_entries_are_plain_entries_with_full_edge_sets() {
    for seed in 0..40u64 {
        let mut r = rng(500 + seed);
        let g = random_graph(&mut r, 7, 0.5);
        let family = GraphFamily::new(vec![Graph::path(3), Graph::cycle(4)]);
        let plain = enumerate(&g, &family, false, 100_000).unwrap();
        let induced = enumerate(&g, &family, true, 100_000).unwrap();
        let expect: Vec<Subgraph> =
            plain.entries.iter().filter(|e| g.induced_edges(&e.vertices) == e.edges).cloned().collect();
        assert_eq!(induced.entries, expect);
    }
}

#[test]
fn enumeration_order_is_deterministic() {
    let mut r = rng(9);
    let g = random_graph(&mut r, 9, 0.5);
    let family = GraphFamily::new(vec![Graph::cycle(4), Graph::complete(3)]);
    let a = enumerate(&g, &family, false, 100_000).unwrap();
    let b = enumerate(&g, &family, false, 100_000).unwrap();
    assert_eq!(a.entries, b.entries);
    assert!(a.entries.windows(2).all(|w| w[0] < w[1]));
}
