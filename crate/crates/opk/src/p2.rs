//! Single-edge packings with t-Membership in polynomial time.
//!
//! Packing copies of P2 (one edge) so that every vertex lies in at most `t`
//! of them is the same as finding a large subgraph of maximum degree `t`.
//! That degree-constrained subgraph problem reduces to maximum matching:
//!
//! * every vertex `v` becomes `b(v)` stub vertices;
//! * every edge `uv` becomes two adjacent edge-nodes `a`, `b`, with `a`
//!   joined to all stubs of `u` and `b` joined to all stubs of `v`.
//!
//! A maximum matching can always be rearranged so that each edge gadget
//! either uses its internal edge or both of its outer ends; the gadgets of
//! the second kind are the chosen edges, so the matching has size
//! `|E| + (number of chosen edges)`.

use crate::matching::general_max_matching;
use crate::model::{Graph, Subgraph};

/// Per-vertex degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeConstraint {
    pub b: Vec<usize>,
}

impl DegreeConstraint {
    pub fn uniform(n: usize, t: usize) -> Self {
        DegreeConstraint { b: vec![t; n] }
    }
}

/// The matching gadget for a graph and a degree constraint.
#[derive(Clone, Debug)]
pub struct DcsGadget {
    pub graph: Graph,
    /// `copies[v]` are the stub vertices of `v`.
    pub copies: Vec<Vec<u32>>,
    /// `edge_nodes[j] = (a_j, b_j)` for edge `j` of the source graph.
    pub edge_nodes: Vec<(u32, u32)>,
}

pub fn build_gadget(g: &Graph, b: &DegreeConstraint) -> DcsGadget {
    assert_eq!(b.b.len(), g.n(), "degree constraint must cover every vertex");
    let mut next = 0u32;
    let copies: Vec<Vec<u32>> = b
        .b
        .iter()
        .map(|&bv| {
            let c: Vec<u32> = (next..next + bv as u32).collect();
            next += bv as u32;
            c
        })
        .collect();
    let mut edges = Vec::new();
    let mut edge_nodes = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let (a, bb) = (next, next + 1);
        next += 2;
        edge_nodes.push((a, bb));
        edges.push((a, bb));
        edges.extend(copies[u as usize].iter().map(|&c| (c, a)));
        edges.extend(copies[v as usize].iter().map(|&c| (c, bb)));
    }
    let graph = Graph::new(next as usize, edges).expect("gadget is simple by construction");
    DcsGadget { graph, copies, edge_nodes }
}

/// Number of vertices of the gadget for `b ≡ t`: `2|E| + t|V|`.
pub fn gadget_vertex_count(n: usize, m: usize, t: usize) -> usize {
    2 * m + t * n
}

/// Number of edges of the gadget built here for `b ≡ t`: one internal and
/// `2t` outer edges per source edge.
pub fn gadget_edge_count(m: usize, t: usize) -> usize {
    (2 * t + 1) * m
}

/// A maximum-cardinality edge set respecting `b`, as indices into `g.edges()`.
pub fn solve_degree_constrained(g: &Graph, b: &DegreeConstraint) -> Vec<usize> {
    let gadget = build_gadget(g, b);
    let matching = general_max_matching(&gadget.graph);
    let mut mate = vec![u32::MAX; gadget.graph.n()];
    for &(u, v) in &matching {
        mate[u as usize] = v;
        mate[v as usize] = u;
    }
    gadget
        .edge_nodes
        .iter()
        .enumerate()
        .filter(|&(_, &(a, bb))| {
            // Outer ends both taken: the source edge is chosen. A gadget with
            // one outer end taken is equivalent to one using its internal edge.
            let outer = |x: u32, y: u32| mate[x as usize] != u32::MAX && mate[x as usize] != y;
            outer(a, bb) && outer(bb, a)
        })
        .map(|(j, _)| j)
        .collect()
}

/// `k` edges of `g` with every vertex in at most `t` of them, if possible.
pub fn solve_p2_membership(g: &Graph, t: usize, k: usize) -> Option<Vec<Subgraph>> {
    let chosen = solve_degree_constrained(g, &DegreeConstraint::uniform(g.n(), t));
    if chosen.len() < k {
        return None;
    }
    Some(chosen[..k].iter().map(|&j| Subgraph::from_edges([g.edges()[j]])).collect())
}
