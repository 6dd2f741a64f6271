//! Seeded random instances for tests, the `check` harness and `gen`.
//!
//! Everything takes a caller-supplied [`Rng`]; the harness uses ChaCha8
//! with one stream per trial so that runs are reproducible bit for bit.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::model::{ElemSet, Graph, Mode, SetInstance};

/// Parameter ranges for random set instances (all inclusive).
#[derive(Clone, Debug)]
pub struct SetGenConfig {
    pub n: RangeInclusive<usize>,
    pub sets: RangeInclusive<usize>,
    pub r: RangeInclusive<usize>,
    pub k: RangeInclusive<usize>,
    /// Membership `t` range; overlap always draws `t` from `0..=r-2`.
    pub membership_t: RangeInclusive<usize>,
    /// Draw elements preferentially from a small core, producing the heavy
    /// intersections the reduction rules act on.
    pub clustered: bool,
}

impl Default for SetGenConfig {
    fn default() -> Self {
        SetGenConfig { n: 4..=12, sets: 3..=20, r: 2..=4, k: 1..=4, membership_t: 1..=3, clustered: false }
    }
}

impl SetGenConfig {
    /// Defaults with `n` and the set count capped.
    pub fn capped(max_n: usize, max_sets: usize) -> Self {
        let d = SetGenConfig::default();
        SetGenConfig {
            n: (*d.n.start()).min(max_n)..=max_n.max(1),
            sets: (*d.sets.start()).min(max_sets)..=max_sets,
            ..d
        }
    }
}

pub fn random_set_instance<R: Rng + ?Sized>(rng: &mut R, mode: Mode, cfg: &SetGenConfig) -> SetInstance {
    let n = rng.gen_range(cfg.n.clone());
    let r = rng.gen_range(cfg.r.clone());
    let (t, min_size) = match mode {
        Mode::Overlap => {
            let t = rng.gen_range(0..=r.saturating_sub(2));
            (t, t + 1)
        }
        Mode::Membership => (rng.gen_range(cfg.membership_t.clone()), 1),
    };
    let target = rng.gen_range(cfg.sets.clone());
    let k = rng.gen_range(cfg.k.clone());
    let core = (n / 2).max(r.min(n));
    let elems: Vec<u32> = (0..n as u32).collect();
    let mut sets: BTreeSet<ElemSet> = BTreeSet::new();
    // Small universes cannot always host `target` distinct sets; give up after
    // a bounded number of draws.
    for _ in 0..target * 20 {
        if sets.len() >= target {
            break;
        }
        let size = rng.gen_range(min_size.min(n)..=r.min(n));
        let mut s: ElemSet = if cfg.clustered && rng.gen_bool(0.7) {
            let pool = &elems[..core];
            let from_core = size.min(core).min(rng.gen_range(1..=size));
            let mut s: Vec<u32> = pool.choose_multiple(rng, from_core).copied().collect();
            let rest: Vec<u32> = elems.iter().copied().filter(|e| !s.contains(e)).collect();
            s.extend(rest.choose_multiple(rng, size - from_core).copied());
            s
        } else {
            elems.choose_multiple(rng, size).copied().collect()
        };
        s.sort_unstable();
        sets.insert(s);
    }
    let universe = (0..n).map(label).collect();
    SetInstance::new(universe, sets.into_iter().collect(), r, t, k, mode)
        .expect("generator respects the instance invariants")
}

/// `a`, `b`, ..., `z`, `a1`, `b1`, ...
fn label(i: usize) -> String {
    let c = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        c.to_string()
    } else {
        format!("{c}{}", i / 26)
    }
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("simple by construction")
}

/// `G(n, p)` with edges dropped until the maximum degree is at most `d`.
pub fn random_bounded_degree_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64, d: usize) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in random_graph(rng, n, p).edges().iter().copied() {
        if deg[u as usize] < d && deg[v as usize] < d {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("simple by construction")
}
