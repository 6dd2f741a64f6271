//! Exhaustive solvers used as ground truth.
//!
//! Both solvers are a depth-first search over candidates in canonical order
//! with incremental constraint bookkeeping; nothing clever, on purpose.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{
    intersection_size, validate_graph_solution, validate_set_solution, Distinct, Elem, ElemSet,
    GraphInstance, Mode, SetInstance, Subgraph,
};
use crate::subgraph;

/// Limits on the exponential parts of the library.
///
/// Defaults can be overridden with the `OPK_BUDGET` environment variable,
/// either a bare number (applied to every limit) or comma-separated
/// `key=value` pairs with keys `oracle_sets`, `oracle_k`, `catalog`, `transform`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// The set oracle accepts at most this many sets...
    pub oracle_sets: usize,
    /// ...unless `k` is at most this.
    pub oracle_k: usize,
    /// Maximum number of enumerated subgraphs.
    pub catalog: usize,
    /// Maximum number of sets produced by a membership transformation.
    pub transform: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { oracle_sets: 24, oracle_k: 5, catalog: 200_000, transform: 1_000_000 }
    }
}

impl Budget {
    /// Defaults, overridden by `OPK_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var("OPK_BUDGET") {
            Ok(spec) => Budget::parse(&spec),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let mut b = Budget::default();
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(b);
        }
        let num = |s: &str| {
            s.trim()
                .replace('_', "")
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("OPK_BUDGET: bad number {s:?}")))
        };
        if !spec.contains('=') {
            let v = num(spec)?;
            return Ok(Budget { oracle_sets: v, oracle_k: v, catalog: v, transform: v });
        }
        for part in spec.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("OPK_BUDGET: expected key=value, got {part:?}")))?;
            let value = num(value)?;
            match key.trim() {
                "oracle_sets" => b.oracle_sets = value,
                "oracle_k" => b.oracle_k = value,
                "catalog" => b.catalog = value,
                "transform" => b.transform = value,
                other => return Err(Error::Parse(format!("OPK_BUDGET: unknown key {other:?}"))),
            }
        }
        Ok(b)
    }
}

/// A generic packing search: choose `k` items with pairwise distinct keys
/// under an overlap or occupancy bound on their element lists.
struct Search<'a> {
    items: &'a [ElemSet],
    keys: &'a [usize],
    mode: Mode,
    t: usize,
    k: usize,
    occupancy: Vec<usize>,
    key_used: HashMap<usize, ()>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn fits(&self, i: usize) -> bool {
        if self.key_used.contains_key(&self.keys[i]) {
            return false;
        }
        match self.mode {
            Mode::Overlap => self
                .chosen
                .iter()
                .all(|&c| intersection_size(&self.items[c], &self.items[i]) <= self.t),
            Mode::Membership => self.items[i].iter().all(|&e| self.occupancy[e as usize] < self.t),
        }
    }

    fn go(&mut self, from: usize) -> bool {
        if self.chosen.len() == self.k {
            return true;
        }
        let need = self.k - self.chosen.len();
        for i in from..self.items.len() {
            if self.items.len() - i < need {
                return false;
            }
            if !self.fits(i) {
                continue;
            }
            self.chosen.push(i);
            self.key_used.insert(self.keys[i], ());
            for &e in &self.items[i] {
                self.occupancy[e as usize] += 1;
            }
            if self.go(i + 1) {
                return true;
            }
            for &e in &self.items[i] {
                self.occupancy[e as usize] -= 1;
            }
            self.key_used.remove(&self.keys[i]);
            self.chosen.pop();
        }
        false
    }
}

fn search(items: &[ElemSet], keys: &[usize], universe: usize, mode: Mode, t: usize, k: usize) -> Option<Vec<usize>> {
    let mut s = Search {
        items,
        keys,
        mode,
        t,
        k,
        occupancy: vec![0; universe],
        key_used: HashMap::new(),
        chosen: Vec::new(),
    };
    s.go(0).then_some(s.chosen)
}

/// A witness of exactly `k` sets if one exists.
pub fn solve_set_exact(inst: &SetInstance, budget: &Budget) -> Result<Option<Vec<ElemSet>>> {
    if inst.sets.len() > budget.oracle_sets && inst.k > budget.oracle_k {
        return Err(Error::Budget {
            what: "oracle set count (with k above the small-k limit)",
            limit: budget.oracle_sets as u64,
            actual: inst.sets.len() as u64,
        });
    }
    if inst.k > inst.sets.len() {
        return Ok(None);
    }
    let keys: Vec<usize> = (0..inst.sets.len()).collect();
    let found = search(&inst.sets, &keys, inst.n(), inst.mode, inst.t, inst.k);
    let witness = found.map(|idx| idx.into_iter().map(|i| inst.sets[i].clone()).collect::<Vec<_>>());
    if let Some(w) = &witness {
        validate_set_solution(inst, w).map_err(|v| Error::Structural(format!("oracle witness: {v}")))?;
    }
    Ok(witness)
}

/// A witness of exactly `k` subgraphs if one exists. Searches the raw
/// catalog under the variant's own constraints, independent of any reduction
/// rule used by the kernels.
pub fn solve_graph_exact(inst: &GraphInstance, budget: &Budget) -> Result<Option<Vec<Subgraph>>> {
    let v = inst.variant;
    let cat = subgraph::enumerate(&inst.g, &inst.family, v.induced(), budget.catalog)?;
    if inst.k > cat.len() {
        return Ok(None);
    }
    let g = &inst.g;
    let items: Vec<ElemSet> = cat
        .entries
        .iter()
        .map(|h| {
            if v.on_edges() {
                let mut ids: Vec<Elem> =
                    h.edges.iter().map(|&(a, b)| g.edge_index(a, b).expect("catalog edge") as Elem).collect();
                ids.sort_unstable();
                ids
            } else {
                h.vertices.clone()
            }
        })
        .collect();
    let mut key_ids: HashMap<&[_], usize> = HashMap::new();
    let mut edge_key_ids: HashMap<&[(u32, u32)], usize> = HashMap::new();
    let keys: Vec<usize> = cat
        .entries
        .iter()
        .map(|h| match v.distinct() {
            Distinct::Vertices => {
                let next = key_ids.len();
                *key_ids.entry(h.vertices.as_slice()).or_insert(next)
            }
            Distinct::Edges => {
                let next = edge_key_ids.len();
                *edge_key_ids.entry(h.edges.as_slice()).or_insert(next)
            }
        })
        .collect();
    let universe = if v.on_edges() { g.m() } else { g.n() };
    let found = search(&items, &keys, universe, v.mode(), inst.t, inst.k);
    let witness = found.map(|idx| idx.into_iter().map(|i| cat.entries[i].clone()).collect::<Vec<_>>());
    if let Some(w) = &witness {
        validate_graph_solution(inst, w).map_err(|e| Error::Structural(format!("oracle witness: {e}")))?;
    }
    Ok(witness)
}
