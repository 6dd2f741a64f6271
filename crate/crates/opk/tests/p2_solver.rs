mod common;

use common::{oracle_graph, random_graph, rng};
use itertools::Itertools;
use opk::p2::{build_gadget, gadget_vertex_count, solve_degree_constrained, solve_p2_membership, DegreeConstraint};
use opk::{check_graph_solution, Graph, GraphFamily, GraphInstance, Variant};
use rand::Rng;

fn p2_instance(g: &Graph, t: usize, k: usize) -> GraphInstance {
    GraphInstance::new(g.clone(), GraphFamily::new(vec![Graph::path(2)]), t, k, Variant::VertexMembership).unwrap()
}

fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves as u32).map(|l| (0, l))).unwrap()
}

/// Largest edge subset with every degree within `b`.
fn brute_dcs(g: &Graph, b: &[usize]) -> usize {
    (0..=g.m())
        .rev()
        .find(|&size| {
            g.edges().iter().combinations(size).any(|c| {
                let mut deg = vec![0usize; g.n()];
                for &&(u, v) in &c {
                    deg[u as usize] += 1;
                    deg[v as usize] += 1;
                }
                deg.iter().zip(b).all(|(d, b)| d <= b)
            })
        })
        .unwrap_or(0)
}

#[test]
fn degree_constrained_examples() {
    assert_eq!(solve_degree_constrained(&star(4), &DegreeConstraint::uniform(5, 1)).len(), 1);
    let g = Graph::cycle(5);
    assert_eq!(solve_degree_constrained(&g, &DegreeConstraint::uniform(5, 2)).len(), 5);
    let k4 = Graph::complete(4);
    let degrees = DegreeConstraint { b: (0..4).map(|v| k4.degree(v)).collect() };
    assert_eq!(solve_degree_constrained(&k4, &degrees).len(), 6);
}

#[test]
fn p2_examples() {
    let w = solve_p2_membership(&star(5), 2, 2).unwrap();
    assert_eq!(w.len(), 2);
    assert!(check_graph_solution(&p2_instance(&star(5), 2, 2), &w));
    assert!(solve_p2_membership(&star(5), 2, 3).is_none());
    let all = solve_p2_membership(&Graph::complete(4), 3, 6).unwrap();
    assert!(check_graph_solution(&p2_instance(&Graph::complete(4), 3, 6), &all));
    assert!(solve_p2_membership(&Graph::empty(3), 1, 0).is_some());
}

#[test]
fn non_uniform_bounds_match_brute_force() {
    for seed in 0..120u64 {
        let mut r = rng(seed);
        let n = r.gen_range(2..=7);
        let g = random_graph(&mut r, n, 0.5);
        let b: Vec<usize> = (0..n).map(|_| r.gen_range(0..=3)).collect();
        let chosen = solve_degree_constrained(&g, &DegreeConstraint { b: b.clone() });
        let mut deg = vec![0usize; n];
        for &j in &chosen {
            let (u, v) = g.edges()[j];
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        assert!(deg.iter().zip(&b).all(|(d, b)| d <= b), "seed {seed}");
        assert_eq!(chosen.len(), brute_dcs(&g, &b), "seed {seed}");
    }
}

#[test]
fn solver_agrees_with_oracle() {
    for seed in 0..150u64 {
        let mut r = rng(77 + seed);
        let n = r.gen_range(2..=8);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        let t = r.gen_range(1..=3);
        let k = r.gen_range(1..=7);
        let fast = solve_p2_membership(&g, t, k);
        let inst = p2_instance(&g, t, k);
        if let Some(w) = &fast {
            assert!(check_graph_solution(&inst, w), "seed {seed}");
        }
        assert_eq!(fast.is_some(), oracle_graph(&inst), "seed {seed}");
    }
}

#[test]
fn gadget_vertex_identity() {
    for seed in 0..50u64 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=8);
        let g = random_graph(&mut r, n, 0.5);
        let t = r.gen_range(1..=3);
        let gadget = build_gadget(&g, &DegreeConstraint::uniform(n, t));
        assert_eq!(gadget.graph.n(), gadget_vertex_count(n, g.m(), t));
        assert_eq!(gadget.graph.m(), (2 * t + 1) * g.m());
    }
}
