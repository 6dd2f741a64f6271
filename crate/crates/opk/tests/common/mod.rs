#![allow(dead_code)]

use itertools::Itertools;
use opk::model::{check_graph_solution, check_set_membership, check_set_overlap};
use opk::{Budget, Graph, GraphInstance, Mode, SetInstance, Subgraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn budget() -> Budget {
    Budget::default()
}

/// Decision by trying every k-subset; deliberately shares no code with the oracle search.
pub fn brute_set(inst: &SetInstance) -> bool {
    if inst.k == 0 {
        return true;
    }
    inst.sets.iter().cloned().combinations(inst.k).any(|c| match inst.mode {
        Mode::Overlap => check_set_overlap(inst, &c),
        Mode::Membership => check_set_membership(inst, &c),
    })
}

/// Every subgraph of `g` as (vertex subset, edge subset) with edges inside the vertices.
pub fn all_subgraphs(g: &Graph, max_vertices: usize) -> Vec<Subgraph> {
    let mut out = Vec::new();
    for size in 1..=max_vertices.min(g.n()) {
        for vs in (0..g.n() as u32).combinations(size) {
            let inner = g.induced_edges(&vs);
            for mask in 0u64..(1 << inner.len()) {
                let es = inner.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
                out.push(Subgraph::new(vs.clone(), es));
            }
        }
    }
    out
}

/// Decision by filtering all subgraphs through the solution checker.
pub fn brute_graph(inst: &GraphInstance) -> bool {
    if inst.k == 0 {
        return true;
    }
    let r = inst.family.r_h();
    let mut cands: Vec<Subgraph> = all_subgraphs(&inst.g, r)
        .into_iter()
        .filter(|s| check_graph_solution(&GraphInstance { k: 1, ..inst.clone() }, std::slice::from_ref(s)))
        .collect();
    cands.sort();
    cands.into_iter().combinations(inst.k).any(|c| check_graph_solution(inst, &c))
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut es = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                es.push((u, v));
            }
        }
    }
    Graph::new(n, es).unwrap()
}

pub fn oracle_set(inst: &SetInstance) -> bool {
    opk::oracle::solve_set_exact(inst, &budget()).unwrap().is_some()
}

pub fn oracle_graph(inst: &GraphInstance) -> bool {
    opk::oracle::solve_graph_exact(inst, &budget()).unwrap().is_some()
}

pub fn letters(s: &str) -> Vec<String> {
    s.chars().map(String::from).collect()
}
