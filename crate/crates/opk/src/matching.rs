//! Maximum-cardinality matchings: Hopcroft–Karp for bipartite graphs and
//! Edmonds' blossom algorithm for general graphs.

use std::collections::VecDeque;

use crate::model::Graph;

/// Bipartite graph with left vertices `0..n_left` and right vertices `0..n_right`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub n_left: usize,
    pub n_right: usize,
    /// `adj[l]` lists the right neighbours of `l` in ascending order.
    pub adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(n_left: usize, n_right: usize) -> Self {
        BipartiteGraph { n_left, n_right, adj: vec![Vec::new(); n_left] }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.n_left && r < self.n_right, "edge ({l},{r}) out of range");
        if let Err(pos) = self.adj[l].binary_search(&r) {
            self.adj[l].insert(pos, r);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

const NIL: usize = usize::MAX;

/// Maximum matching as `(left, right)` pairs sorted by left vertex.
/// Deterministic: ties are broken by vertex order.
pub fn bipartite_max_matching(b: &BipartiteGraph) -> Vec<(usize, usize)> {
    let mut match_l = vec![NIL; b.n_left];
    let mut match_r = vec![NIL; b.n_right];
    let mut dist = vec![0usize; b.n_left];

    loop {
        // Layer the free left vertices.
        let mut queue = VecDeque::new();
        for l in 0..b.n_left {
            if match_l[l] == NIL {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &b.adj[l] {
                let next = match_r[r];
                if next == NIL {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; b.n_left];
        for l in 0..b.n_left {
            if match_l[l] == NIL {
                augment(l, b, &mut match_l, &mut match_r, &mut dist, &mut it);
            }
        }
    }
    (0..b.n_left).filter(|&l| match_l[l] != NIL).map(|l| (l, match_l[l])).collect()
}

fn augment(
    l: usize,
    b: &BipartiteGraph,
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    while it[l] < b.adj[l].len() {
        let r = b.adj[l][it[l]];
        it[l] += 1;
        let next = match_r[r];
        if next == NIL || (dist[next] == dist[l] + 1 && augment(next, b, match_l, match_r, dist, it)) {
            match_l[l] = r;
            match_r[r] = l;
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// Maximum matching of a general graph (Edmonds, O(V³)); edges as `(u, v)`
/// with `u < v`, sorted.
pub fn general_max_matching(g: &Graph) -> Vec<(u32, u32)> {
    let n = g.n();
    let mut mate = vec![NIL; n];
    // Cheap greedy start; the blossom search then only has to fix it up.
    for &(u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        if mate[u] == NIL && mate[v] == NIL {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut blossom = Blossom::new(n);
    for root in 0..n {
        if mate[root] == NIL {
            if let Some(end) = blossom.find_path(g, &mate, root) {
                // Flip the alternating path ending at `end`.
                let mut v = end;
                while v != NIL {
                    let pv = blossom.parent[v];
                    let ppv = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = ppv;
                }
            }
        }
    }
    let mut out: Vec<(u32, u32)> =
        (0..n).filter(|&v| mate[v] != NIL && v < mate[v]).map(|v| (v as u32, mate[v] as u32)).collect();
    out.sort_unstable();
    out
}

struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom {
    fn new(n: usize) -> Self {
        Blossom { parent: vec![NIL; n], base: vec![0; n], used: vec![false; n], in_blossom: vec![false; n] }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NIL {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Searches an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in g.neighbors(v as u32) {
                let to = to as usize;
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NIL && self.parent[mate[to]] != NIL) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if mate[to] == NIL {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        None
    }
}

/// True when `m` is a set of pairwise disjoint edges of `g`.
pub fn is_matching(g: &Graph, m: &[(u32, u32)]) -> bool {
    let mut seen = vec![false; g.n()];
    m.iter().all(|&(u, v)| {
        let ok = g.has_edge(u, v) && !seen[u as usize] && !seen[v as usize];
        seen[u as usize] = true;
        seen[v as usize] = true;
        ok
    })
}

/// True when no augmenting path exists for `m` in the bipartite graph `b`
/// (so `m` is maximum, by Berge's lemma).
pub fn bipartite_is_maximum(b: &BipartiteGraph, m: &[(usize, usize)]) -> bool {
    let mut match_l = vec![NIL; b.n_left];
    let mut match_r = vec![NIL; b.n_right];
    for &(l, r) in m {
        match_l[l] = r;
        match_r[r] = l;
    }
    let mut seen_l = vec![false; b.n_left];
    let mut queue: VecDeque<usize> = (0..b.n_left).filter(|&l| match_l[l] == NIL).collect();
    for &l in &queue {
        seen_l[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &b.adj[l] {
            if match_l[l] == r {
                continue;
            }
            match match_r[r] {
                NIL => return false,
                next if !seen_l[next] => {
                    seen_l[next] = true;
                    queue.push_back(next);
                }
                _ => {}
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_general_cases() {
        assert_eq!(general_max_matching(&Graph::complete(3)).len(), 1);
        assert_eq!(general_max_matching(&Graph::path(4)).len(), 2);
        assert_eq!(general_max_matching(&Graph::empty(3)).len(), 0);
    }

    #[test]
    fn k33_bipartite() {
        let mut b = BipartiteGraph::new(3, 3);
        for l in 0..3 {
            for r in 0..3 {
                b.add_edge(l, r);
            }
        }
        let m = bipartite_max_matching(&b);
        assert_eq!(m.len(), 3);
        assert!(bipartite_is_maximum(&b, &m));
        assert!(bipartite_max_matching(&BipartiteGraph::new(0, 0)).is_empty());
    }
}
