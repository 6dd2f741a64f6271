//! Generators behind the hardness results: each maps an instance of a hard
//! problem to an equivalent instance of a harder-looking one. The library
//! uses them as instance suppliers whose claimed equivalences are checked
//! against the oracle.

use crate::error::{Error, Result};
use crate::model::Graph;

/// Where a vertex of a lifted graph came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Vertex of the source graph (same index).
    Original(u32),
    /// Isolated vertex added so that `t + 1` divides the vertex count.
    Padding,
    /// The `index`-th new vertex of the construction.
    Added { index: usize },
    /// Vertex standing for the source edge `(u, v)`.
    Edge(u32, u32),
    /// Center of the star hung below source vertex `v`.
    StarCenter(u32),
    /// A leaf of the star below source vertex `v`.
    StarLeaf(u32),
}

/// A lifted graph, its new parameter and a provenance map.
#[derive(Clone, Debug)]
pub struct Lift {
    pub graph: Graph,
    pub k_new: usize,
    /// `origin[v]` for every vertex of `graph`; new vertices come after the
    /// originals.
    pub origin: Vec<Origin>,
}

/// P3 packing with t-Membership -> P3 packing with (t+1)-Membership.
///
/// The vertices are padded to `n_pad`, a positive multiple of `t + 1`, and cut
/// into groups of `t + 1` consecutive vertices. Group `q` gets two new
/// vertices `u_{2q}`, `u_{2q+1}`: every group member is joined to `u_{2q}`,
/// and `u_{2q}` to `u_{2q+1}`. The paths `v u_{2q} u_{2q+1}` fill the extra
/// unit of membership everywhere, so `k_new = n_pad + k`.
pub fn lift_p3_membership(g: &Graph, k: usize, t: usize) -> Result<Lift> {
    if t == 0 {
        return Err(Error::ParameterRange("the P3 lift needs t >= 1".into()));
    }
    let n = g.n();
    let group = t + 1;
    let n_pad = (n.div_ceil(group)).max(1) * group;
    let groups = n_pad / group;
    let mut origin: Vec<Origin> = (0..n as u32).map(Origin::Original).collect();
    origin.extend(std::iter::repeat_n(Origin::Padding, n_pad - n));
    origin.extend((0..2 * groups).map(|index| Origin::Added { index }));
    let u = |i: usize| (n_pad + i) as u32;
    let mut edges = g.edges().to_vec();
    for q in 0..groups {
        for j in 0..group {
            edges.push(((q * group + j) as u32, u(2 * q)));
        }
        edges.push((u(2 * q), u(2 * q + 1)));
    }
    let graph = Graph::new(n_pad + 2 * groups, edges)?;
    Ok(Lift { graph, k_new: n_pad + k, origin })
}

/// Edge-C3 packing with t-Membership -> the same with (t+1)-Membership.
///
/// One new vertex per edge `uv`, adjacent to `u` and `v`; the triangles
/// `{u, v, uv}` use every old edge once more, so `k_new = k + |E|`.
pub fn lift_c3_edge_membership(g: &Graph, k: usize, t: usize) -> Result<Lift> {
    if t == 0 {
        return Err(Error::ParameterRange("the C3 lift needs t >= 1".into()));
    }
    let n = g.n();
    let mut origin: Vec<Origin> = (0..n as u32).map(Origin::Original).collect();
    let mut edges = g.edges().to_vec();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let w = (n + i) as u32;
        origin.push(Origin::Edge(a, b));
        edges.push((a, w));
        edges.push((b, w));
    }
    let graph = Graph::new(n + g.m(), edges)?;
    Ok(Lift { graph, k_new: k + g.m(), origin })
}

/// Leaves per attached star: 5 up to `t = 6`, `t - 1` beyond.
pub fn star_size(t: usize) -> usize {
    5.max(t.saturating_sub(1))
}

/// The star gadget: host, pattern and provenance. `k` carries over unchanged.
#[derive(Clone, Debug)]
pub struct StarGadget {
    pub graph: Graph,
    pub pattern: Graph,
    pub origin: Vec<Origin>,
}

/// Largest host degree the star gadget accepts.
pub const STAR_MAX_DEGREE: usize = 4;

/// Triangle packing in graphs of maximum degree 4 -> packing of a fixed
/// pattern with t-Overlap.
///
/// Below every vertex `v` hangs a star `K_{1,s}` whose center is joined to
/// `v` by a bridge, `s = star_size(t)`. The pattern is a triangle with such a
/// star below each corner. Star centers are the only vertices of degree
/// `s + 1`, so pattern copies sit exactly on the triangles of `g`, and two
/// copies sharing anything share a whole star, which is more than `t`
/// vertices.
pub fn star_overlap_gadget(g: &Graph, t: usize) -> Result<StarGadget> {
    let found = g.max_degree();
    if found > STAR_MAX_DEGREE {
        return Err(Error::Degree { found, limit: STAR_MAX_DEGREE });
    }
    let s = star_size(t);
    let graph_with_stars = |base: &Graph| -> (Graph, Vec<Origin>) {
        let n = base.n();
        let mut origin: Vec<Origin> = (0..n as u32).map(Origin::Original).collect();
        let mut edges = base.edges().to_vec();
        let mut next = n as u32;
        for v in 0..n as u32 {
            let center = next;
            origin.push(Origin::StarCenter(v));
            edges.push((v, center));
            for leaf in 1..=s as u32 {
                origin.push(Origin::StarLeaf(v));
                edges.push((center, center + leaf));
            }
            next += s as u32 + 1;
        }
        (Graph::new(next as usize, edges).expect("simple by construction"), origin)
    };
    let (graph, origin) = graph_with_stars(g);
    let (pattern, _) = graph_with_stars(&Graph::complete(3));
    Ok(StarGadget { graph, pattern, origin })
}
