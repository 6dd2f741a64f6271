//! Enumeration of pattern occurrences in a host graph.
//!
//! Occurrences are found by backtracking over injective maps from pattern
//! vertices to host vertices. Automorphisms of the pattern are factored out
//! up front: a chain of orbit computations yields ordering conditions
//! `f(a) < f(b)` such that every occurrence (as a vertex set plus edge set) is
//! produced by exactly one map. Without this a 21-vertex pattern carrying three
//! 5-leaf stars would be found 5!³·6 times.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::model::{Graph, GraphFamily, Subgraph};

/// Search nodes allowed per enumeration before giving up.
const NODE_LIMIT: u64 = 200_000_000;

/// Dense adjacency for small graphs.
struct Adj {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Adj {
    fn of(g: &Graph) -> Adj {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            let (u, v) = (u as usize, v as usize);
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        Adj { n, words, bits }
    }

    #[inline]
    fn has(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Backtracking matcher for one pattern against one host.
struct Matcher<'a> {
    pat: &'a Graph,
    host: &'a Graph,
    pat_adj: Adj,
    host_adj: Adj,
    induced: bool,
    /// Pattern vertices in matching order.
    order: Vec<usize>,
    /// For each position, a mapped pattern neighbour to draw candidates from.
    anchor: Vec<Option<usize>>,
    /// `less[a]` lists `b` with the condition `f(a) < f(b)`.
    less: Vec<Vec<usize>>,
    greater: Vec<Vec<usize>>,
    map: Vec<u32>,
    used: Vec<bool>,
    nodes: u64,
}

const UNMAPPED: u32 = u32::MAX;

impl<'a> Matcher<'a> {
    fn new(pat: &'a Graph, host: &'a Graph, induced: bool, conditions: &[(usize, usize)]) -> Self {
        let np = pat.n();
        // Connected-first order: next vertex has the most mapped neighbours,
        // then the highest degree.
        let mut order = Vec::with_capacity(np);
        let mut placed = vec![false; np];
        let mut anchor = Vec::with_capacity(np);
        for _ in 0..np {
            let next = (0..np)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let linked = pat.neighbors(v as u32).iter().filter(|&&w| placed[w as usize]).count();
                    (linked, pat.degree(v as u32), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            anchor.push(
                pat.neighbors(next as u32)
                    .iter()
                    .map(|&w| w as usize)
                    .find(|&w| placed[w]),
            );
            placed[next] = true;
            order.push(next);
        }
        let mut less = vec![Vec::new(); np];
        let mut greater = vec![Vec::new(); np];
        for &(a, b) in conditions {
            less[a].push(b);
            greater[b].push(a);
        }
        Matcher {
            pat,
            host,
            pat_adj: Adj::of(pat),
            host_adj: Adj::of(host),
            induced,
            order,
            anchor,
            less,
            greater,
            map: vec![UNMAPPED; np],
            used: vec![false; host.n()],
            nodes: 0,
        }
    }

    fn feasible(&self, u: usize, x: u32) -> bool {
        if self.used[x as usize] || self.host.degree(x) < self.pat.degree(u as u32) {
            return false;
        }
        for &b in &self.less[u] {
            let fb = self.map[b];
            if fb != UNMAPPED && x >= fb {
                return false;
            }
        }
        for &a in &self.greater[u] {
            let fa = self.map[a];
            if fa != UNMAPPED && fa >= x {
                return false;
            }
        }
        for w in 0..self.pat_adj.n {
            let fw = self.map[w];
            if fw == UNMAPPED {
                continue;
            }
            let pe = self.pat_adj.has(u, w);
            let he = self.host_adj.has(x as usize, fw as usize);
            if pe && !he || self.induced && !pe && he {
                return false;
            }
        }
        true
    }

    /// Visits every complete map; the visitor returns `false` to stop early.
    fn run(&mut self, visit: &mut dyn FnMut(&[u32]) -> bool) -> Result<bool> {
        if self.pat.n() > self.host.n() || self.pat.m() > self.host.m() {
            return Ok(true);
        }
        self.step(0, visit)
    }

    fn step(&mut self, depth: usize, visit: &mut dyn FnMut(&[u32]) -> bool) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(visit(&self.map));
        }
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(Error::Budget { what: "subgraph search nodes", limit: NODE_LIMIT, actual: self.nodes });
        }
        let u = self.order[depth];
        let candidates: Vec<u32> = match self.anchor[depth] {
            Some(p) => self.host.neighbors(self.map[p]).to_vec(),
            None => (0..self.host.n() as u32).collect(),
        };
        for x in candidates {
            if !self.feasible(u, x) {
                continue;
            }
            self.map[u] = x;
            self.used[x as usize] = true;
            let go_on = self.step(depth + 1, visit)?;
            self.used[x as usize] = false;
            self.map[u] = UNMAPPED;
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Is there an automorphism of `h` fixing `fixed` pointwise and sending `v` to `w`?
fn automorphism_exists(h: &Graph, fixed: &[usize], v: usize, w: usize) -> bool {
    if h.degree(v as u32) != h.degree(w as u32) {
        return false;
    }
    // An automorphism is an induced embedding of h into itself; pin the
    // prescribed images by restricting candidates through a wrapper search.
    let adj = Adj::of(h);
    let n = h.n();
    let mut pinned = vec![UNMAPPED; n];
    for &f in fixed {
        pinned[f] = f as u32;
    }
    if pinned[v] != UNMAPPED && pinned[v] != w as u32 {
        return false;
    }
    pinned[v] = w as u32;
    let mut map = vec![UNMAPPED; n];
    let mut used = vec![false; n];
    let mut order: Vec<usize> = (0..n).collect();
    // Pinned vertices first, then by degree so failures surface early.
    order.sort_by_key(|&x| (pinned[x] == UNMAPPED, std::cmp::Reverse(h.degree(x as u32)), x));
    fn go(
        depth: usize,
        order: &[usize],
        h: &Graph,
        adj: &Adj,
        pinned: &[u32],
        map: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        let cands: Vec<u32> = if pinned[u] != UNMAPPED {
            vec![pinned[u]]
        } else {
            (0..h.n() as u32).collect()
        };
        'cand: for x in cands {
            if used[x as usize] || h.degree(x) != h.degree(u as u32) {
                continue;
            }
            for (w, &fw) in map.iter().enumerate() {
                if fw != UNMAPPED && adj.has(u, w) != adj.has(x as usize, fw as usize) {
                    continue 'cand;
                }
            }
            map[u] = x;
            used[x as usize] = true;
            if go(depth + 1, order, h, adj, pinned, map, used) {
                return true;
            }
            map[u] = UNMAPPED;
            used[x as usize] = false;
        }
        false
    }
    go(0, &order, h, &adj, &pinned, &mut map, &mut used)
}

/// Ordering conditions `(a, b)` meaning `f(a) < f(b)` that leave exactly one
/// map per occurrence of `h`.
pub fn symmetry_conditions(h: &Graph) -> Vec<(usize, usize)> {
    let n = h.n();
    let mut fixed: Vec<usize> = Vec::new();
    let mut conditions = Vec::new();
    loop {
        // Orbits of the pointwise stabilizer of `fixed`.
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if orbit_of[v] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[v] = id;
            let mut orbit = vec![v];
            if !fixed.contains(&v) {
                for w in v + 1..n {
                    if orbit_of[w] == usize::MAX && !fixed.contains(&w) && automorphism_exists(h, &fixed, v, w) {
                        orbit_of[w] = id;
                        orbit.push(w);
                    }
                }
            }
            orbits.push(orbit);
        }
        let Some(best) = orbits.iter().filter(|o| o.len() > 1).max_by_key(|o| (o.len(), std::cmp::Reverse(o[0]))) else {
            break;
        };
        let v = best[0];
        for &w in &best[1..] {
            conditions.push((v, w));
        }
        fixed.push(v);
    }
    conditions
}

/// Calls `visit` with the image of every occurrence of `pat` in `host`,
/// each occurrence exactly once.
fn for_each_occurrence(
    pat: &Graph,
    host: &Graph,
    induced: bool,
    visit: &mut dyn FnMut(Subgraph) -> bool,
) -> Result<()> {
    let conditions = symmetry_conditions(pat);
    let mut m = Matcher::new(pat, host, induced, &conditions);
    m.run(&mut |map: &[u32]| {
        let vertices = map.to_vec();
        let edges = pat.edges().iter().map(|&(a, b)| (map[a as usize], map[b as usize]));
        visit(Subgraph::new(vertices, edges))
    })?;
    Ok(())
}

/// All occurrences of a family in a host, with the derived collections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphCatalog {
    /// Sorted by `(vertices, edges)`; pairwise distinct.
    pub entries: Vec<Subgraph>,
    /// At most one entry per vertex set.
    pub deduped: bool,
}

impl SubgraphCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct edge sets, in entry order.
    pub fn collection_e(&self) -> Vec<Vec<(u32, u32)>> {
        let set: BTreeSet<&Vec<(u32, u32)>> = self.entries.iter().map(|e| &e.edges).collect();
        set.into_iter().cloned().collect()
    }

    /// Distinct vertex sets.
    pub fn collection_v(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.entries.iter().map(|e| e.vertices.clone()).collect();
        v.dedup();
        v
    }
}

/// Every subgraph of `g` isomorphic (induced-isomorphic when `induced`) to a
/// member of `family`. Fails once the catalog would exceed `budget` entries.
pub fn enumerate(g: &Graph, family: &GraphFamily, induced: bool, budget: usize) -> Result<SubgraphCatalog> {
    let mut found: BTreeSet<Subgraph> = BTreeSet::new();
    let mut over = false;
    for h in &family.members {
        for_each_occurrence(h, g, induced, &mut |s| {
            found.insert(s);
            if found.len() > budget {
                over = true;
            }
            !over
        })?;
        if over {
            return Err(Error::Budget {
                what: "subgraph catalog entries",
                limit: budget as u64,
                actual: found.len() as u64,
            });
        }
    }
    Ok(SubgraphCatalog { entries: found.into_iter().collect(), deduped: false })
}

/// Keeps one entry per vertex set: the one with the lexicographically
/// smallest edge list.
pub fn dedupe_by_vertex_set(cat: &SubgraphCatalog) -> SubgraphCatalog {
    let mut best: BTreeMap<&Vec<u32>, &Subgraph> = BTreeMap::new();
    for e in &cat.entries {
        best.entry(&e.vertices)
            .and_modify(|b| {
                if e.edges < b.edges {
                    *b = e;
                }
            })
            .or_insert(e);
    }
    SubgraphCatalog { entries: best.into_values().cloned().collect(), deduped: true }
}

/// `(𝓔, 𝓥)`: the distinct edge sets and distinct vertex sets of the catalog.
pub fn derive_collections(cat: &SubgraphCatalog) -> (Vec<Vec<(u32, u32)>>, Vec<Vec<u32>>) {
    (cat.collection_e(), cat.collection_v())
}

/// Does `sub`, viewed as a graph on its own vertices and edges, have the same
/// shape as `pattern`?
pub fn is_isomorphic(sub: &Subgraph, pattern: &Graph) -> bool {
    if sub.vertices.len() != pattern.n() || sub.edges.len() != pattern.m() {
        return false;
    }
    let local = |v: u32| sub.vertices.binary_search(&v).map(|i| i as u32);
    let Ok(edges) = sub
        .edges
        .iter()
        .map(|&(u, v)| Ok((local(u)?, local(v)?)))
        .collect::<std::result::Result<Vec<_>, usize>>()
    else {
        return false;
    };
    let Ok(host) = Graph::new(sub.vertices.len(), edges) else {
        return false;
    };
    // Equal sizes: an edge-preserving bijection is an isomorphism.
    let mut m = Matcher::new(pattern, &host, false, &[]);
    let mut hit = false;
    let _ = m.run(&mut |_| {
        hit = true;
        false
    });
    hit
}

/// Number of automorphisms of `h`, by brute enumeration; for tests and tiny patterns.
pub fn automorphism_count(h: &Graph) -> u64 {
    let mut m = Matcher::new(h, h, true, &[]);
    let mut c = 0u64;
    let _ = m.run(&mut |_| {
        c += 1;
        true
    });
    c
}
