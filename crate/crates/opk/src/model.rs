//! Instances, graphs, solutions and the validators every other module trusts.
//!
//! Elements of a [`SetInstance`] are dense `u32` indices into its universe;
//! the universe order is the interning order and defines the canonical
//! (lexicographic) order of sets used wherever an algorithm has a free choice.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subgraph;

pub type Elem = u32;
/// A set of elements, always sorted ascending without repeats.
pub type ElemSet = Vec<Elem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Chosen sets pairwise share at most `t` elements.
    Overlap,
    /// Every element lies in at most `t` chosen sets.
    Membership,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetInstance {
    pub universe: Vec<String>,
    pub sets: Vec<ElemSet>,
    pub r: usize,
    pub t: usize,
    pub k: usize,
    pub mode: Mode,
}

impl SetInstance {
    /// Validates and canonicalizes: each set sorted, the collection sorted.
    pub fn new(
        universe: Vec<String>,
        sets: Vec<Vec<Elem>>,
        r: usize,
        t: usize,
        k: usize,
        mode: Mode,
    ) -> Result<Self> {
        let mut seen = HashSet::with_capacity(universe.len());
        for label in &universe {
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidInstance(format!("duplicate universe element {label:?}")));
            }
        }
        match mode {
            Mode::Overlap if r == 0 || t > r - 1 => {
                return Err(Error::InvalidInstance(format!(
                    "overlap mode needs 0 <= t <= r-1, got r={r}, t={t}"
                )))
            }
            Mode::Membership if t == 0 => {
                return Err(Error::InvalidInstance("membership mode needs t >= 1".into()))
            }
            _ => {}
        }
        let n = universe.len() as Elem;
        let mut canon = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() || s.len() > r {
                return Err(Error::InvalidInstance(format!(
                    "set #{i} has size {}, expected 1..={r}",
                    s.len()
                )));
            }
            if let Some(&e) = s.iter().find(|&&e| e >= n) {
                return Err(Error::InvalidInstance(format!("set #{i} uses unknown element {e}")));
            }
            canon.push(s);
        }
        canon.sort();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            let labels: Vec<&str> = w[0].iter().map(|&e| universe[e as usize].as_str()).collect();
            return Err(Error::InvalidInstance(format!("duplicate set {{{}}}", labels.join(","))));
        }
        Ok(SetInstance { universe, sets: canon, r, t, k, mode })
    }

    /// Builds an instance from label lists, interning labels in universe order.
    pub fn from_labels<S: AsRef<str>>(
        universe: &[S],
        sets: &[Vec<S>],
        r: usize,
        t: usize,
        k: usize,
        mode: Mode,
    ) -> Result<Self> {
        let universe: Vec<String> = universe.iter().map(|s| s.as_ref().to_string()).collect();
        let index: HashMap<&str, Elem> =
            universe.iter().enumerate().map(|(i, s)| (s.as_str(), i as Elem)).collect();
        let mut mapped = Vec::with_capacity(sets.len());
        for s in sets {
            let mut m = Vec::with_capacity(s.len());
            for label in s {
                let label = label.as_ref();
                match index.get(label) {
                    Some(&e) => m.push(e),
                    None => {
                        return Err(Error::InvalidInstance(format!("element {label:?} not in universe")))
                    }
                }
            }
            mapped.push(m);
        }
        SetInstance::new(universe, mapped, r, t, k, mode)
    }

    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn element(&self, label: &str) -> Option<Elem> {
        self.universe.iter().position(|l| l == label).map(|i| i as Elem)
    }

    /// Parses a set written as labels, e.g. `["a","b"]`; returns it sorted.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Option<ElemSet> {
        let mut s = labels.iter().map(|l| self.element(l.as_ref())).collect::<Option<Vec<_>>>()?;
        s.sort_unstable();
        Some(s)
    }

    pub fn labels(&self, set: &[Elem]) -> Vec<String> {
        set.iter().map(|&e| self.universe[e as usize].clone()).collect()
    }

    pub fn contains_set(&self, set: &[Elem]) -> bool {
        self.sets.binary_search_by(|s| s.as_slice().cmp(set)).is_ok()
    }

    /// Restricts to `sets` (which must use ids of `self`), keeping exactly the
    /// elements in `keep` and renumbering them in their current order.
    pub fn restrict(&self, keep: &BTreeSet<Elem>, sets: &[ElemSet], k: usize) -> SetInstance {
        let mut remap = vec![Elem::MAX; self.n()];
        let mut universe = Vec::with_capacity(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            remap[old as usize] = new as Elem;
            universe.push(self.universe[old as usize].clone());
        }
        let mut out: Vec<ElemSet> = sets
            .iter()
            .map(|s| s.iter().map(|&e| remap[e as usize]).collect::<Vec<_>>())
            .collect();
        debug_assert!(out.iter().flatten().all(|&e| e != Elem::MAX));
        for s in &mut out {
            s.sort_unstable();
        }
        out.sort();
        SetInstance {
            universe,
            sets: out,
            r: self.r,
            t: self.t,
            k,
            mode: self.mode,
        }
    }

    /// Union of all sets.
    pub fn used_elements(&self) -> BTreeSet<Elem> {
        self.sets.iter().flatten().copied().collect()
    }
}

/// Size of the intersection of two sorted slices.
pub fn intersection_size<T: Ord>(a: &[T], b: &[T]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// `a ⊆ b` for sorted slices.
pub fn is_subset<T: Ord>(a: &[T], b: &[T]) -> bool {
    intersection_size(a, b) == a.len()
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Rejects loops, out-of-range endpoints and repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut es = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidInstance(format!("loop at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidInstance(format!("edge ({u},{v}) outside 0..{n}")));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!("repeated edge ({},{})", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, es))
    }

    fn from_sorted(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut es = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                es.push((u, v));
            }
        }
        Self::from_sorted(n, es)
    }

    /// Path on `n` vertices (`P_n`, with `n - 1` edges).
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n as u32).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (0..n as u32).map(|v| (v, (v + 1) % n as u32))).expect("cycle is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && (u as usize) < self.n && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Edges of `G[vs]` in original labels; `vs` must be sorted.
    pub fn induced_edges(&self, vs: &[u32]) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    out.push((u.min(v), u.max(v)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `G[keep]` renumbered in ascending order of `keep`.
    pub fn induced_subgraph(&self, keep: &BTreeSet<u32>) -> Graph {
        let mut remap = vec![u32::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            remap[v as usize] = i as u32;
        }
        let es = self
            .edges
            .iter()
            .filter(|&&(u, v)| remap[u as usize] != u32::MAX && remap[v as usize] != u32::MAX)
            .map(|&(u, v)| (remap[u as usize], remap[v as usize]))
            .collect();
        Self::from_sorted(keep.len(), es)
    }
}

/// A finite family of pattern graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamily {
    pub members: Vec<Graph>,
}

impl GraphFamily {
    pub fn new(members: Vec<Graph>) -> Self {
        GraphFamily { members }
    }

    /// Largest vertex count over members.
    pub fn r_h(&self) -> usize {
        self.members.iter().map(Graph::n).max().unwrap_or(0)
    }

    /// Largest edge count over members.
    pub fn m_h(&self) -> usize {
        self.members.iter().map(Graph::m).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "vertex-membership")]
    VertexMembership,
    /// Vertex membership that allows two chosen subgraphs on the same vertex set.
    #[serde(rename = "vertex-membership-ISV")]
    VertexMembershipIsv,
    #[serde(rename = "induced-membership")]
    InducedMembership,
    #[serde(rename = "edge-membership")]
    EdgeMembership,
    /// Edge membership that forbids two chosen subgraphs on the same vertex set.
    #[serde(rename = "edge-membership-NISV")]
    EdgeMembershipNisv,
    #[serde(rename = "vertex-overlap")]
    VertexOverlap,
    #[serde(rename = "induced-overlap")]
    InducedOverlap,
    #[serde(rename = "edge-overlap")]
    EdgeOverlap,
    #[serde(rename = "clique-edge-overlap")]
    CliqueEdgeOverlap,
    /// Vertex membership with the single-edge pattern; solved in polynomial time.
    #[serde(rename = "p2-membership")]
    P2Membership,
}

/// Which component two chosen subgraphs must differ in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distinct {
    Vertices,
    Edges,
}

impl Variant {
    /// The nine packing variants (everything except the P2 shortcut).
    pub const ALL: [Variant; 9] = [
        Variant::VertexMembership,
        Variant::VertexMembershipIsv,
        Variant::InducedMembership,
        Variant::EdgeMembership,
        Variant::EdgeMembershipNisv,
        Variant::VertexOverlap,
        Variant::InducedOverlap,
        Variant::EdgeOverlap,
        Variant::CliqueEdgeOverlap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::VertexMembership => "vertex-membership",
            Variant::VertexMembershipIsv => "vertex-membership-ISV",
            Variant::InducedMembership => "induced-membership",
            Variant::EdgeMembership => "edge-membership",
            Variant::EdgeMembershipNisv => "edge-membership-NISV",
            Variant::VertexOverlap => "vertex-overlap",
            Variant::InducedOverlap => "induced-overlap",
            Variant::EdgeOverlap => "edge-overlap",
            Variant::CliqueEdgeOverlap => "clique-edge-overlap",
            Variant::P2Membership => "p2-membership",
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            Variant::VertexOverlap
            | Variant::InducedOverlap
            | Variant::EdgeOverlap
            | Variant::CliqueEdgeOverlap => Mode::Overlap,
            _ => Mode::Membership,
        }
    }

    pub fn induced(self) -> bool {
        matches!(self, Variant::InducedMembership | Variant::InducedOverlap)
    }

    /// True when the bound counts shared edges rather than shared vertices.
    pub fn on_edges(self) -> bool {
        matches!(
            self,
            Variant::EdgeMembership
                | Variant::EdgeMembershipNisv
                | Variant::EdgeOverlap
                | Variant::CliqueEdgeOverlap
        )
    }

    pub fn distinct(self) -> Distinct {
        match self {
            Variant::VertexMembershipIsv
            | Variant::EdgeMembership
            | Variant::EdgeOverlap
            | Variant::CliqueEdgeOverlap => Distinct::Edges,
            _ => Distinct::Vertices,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .iter()
            .chain(std::iter::once(&Variant::P2Membership))
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variant {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInstance {
    pub g: Graph,
    pub family: GraphFamily,
    pub t: usize,
    pub k: usize,
    pub variant: Variant,
    /// Optional external vertex names, kept for round-tripping.
    pub labels: Option<Vec<String>>,
}

impl GraphInstance {
    pub fn new(g: Graph, family: GraphFamily, t: usize, k: usize, variant: Variant) -> Result<Self> {
        if family.members.is_empty() {
            return Err(Error::InvalidInstance("empty graph family".into()));
        }
        if family.members.iter().any(|h| h.n() == 0) {
            return Err(Error::InvalidInstance("family member without vertices".into()));
        }
        match variant.mode() {
            Mode::Membership if t == 0 => {
                return Err(Error::InvalidInstance("membership variants need t >= 1".into()))
            }
            Mode::Overlap => {
                let r = if variant.on_edges() { family.m_h() } else { family.r_h() };
                if r == 0 || t > r - 1 {
                    return Err(Error::InvalidInstance(format!(
                        "{variant} needs 0 <= t <= {}, got t={t}",
                        r as i64 - 1
                    )));
                }
            }
            _ => {}
        }
        if variant.on_edges() && family.members.iter().any(|h| h.m() == 0) {
            return Err(Error::InvalidInstance(format!("{variant} needs family members with edges")));
        }
        if variant == Variant::CliqueEdgeOverlap
            && family.members.iter().any(|h| !h.is_complete() || h.n() < 2)
        {
            return Err(Error::InvalidInstance(
                "clique-edge-overlap needs a family of complete graphs on >= 2 vertices".into(),
            ));
        }
        Ok(GraphInstance { g, family, t, k, variant, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.g.n() {
            return Err(Error::InvalidInstance(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.g.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_label(&self, v: u32) -> String {
        match &self.labels {
            Some(l) => l[v as usize].clone(),
            None => v.to_string(),
        }
    }
}

/// A subgraph of a host graph, stored canonically (sorted vertices, sorted
/// `(u, v)` edges with `u < v`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgraph {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

impl Subgraph {
    pub fn new(mut vertices: Vec<u32>, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<(u32, u32)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        Subgraph { vertices, edges }
    }

    /// The subgraph spanned by a list of edges (vertex set = endpoints).
    pub fn from_edges(edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let edges: Vec<(u32, u32)> = edges.into_iter().collect();
        let vs = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        Subgraph::new(vs, edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingSolution {
    Sets(Vec<ElemSet>),
    Subgraphs(Vec<Subgraph>),
}

impl PackingSolution {
    pub fn len(&self) -> usize {
        match self {
            PackingSolution::Sets(s) => s.len(),
            PackingSolution::Subgraphs(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelStats {
    pub elements_before: usize,
    pub elements_after: usize,
    pub sets_before: usize,
    pub sets_after: usize,
    /// Claimed upper bound on `elements_after` (saturating).
    pub bound: u64,
    pub early_solution: bool,
}

/// The first condition a proposed solution violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFew { have: usize, need: usize },
    UnknownSet(usize),
    Duplicate(usize, usize),
    Overlap { i: usize, j: usize, shared: usize, t: usize },
    Occupancy { element: String, count: usize, t: usize },
    NotInGraph(usize),
    NotInduced(usize),
    NotIsomorphic(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFew { have, need } => write!(f, "only {have} members, need {need}"),
            Violation::UnknownSet(i) => write!(f, "member #{i} is not in the instance"),
            Violation::Duplicate(i, j) => write!(f, "members #{i} and #{j} are not distinct"),
            Violation::Overlap { i, j, shared, t } => {
                write!(f, "members #{i} and #{j} share {shared} > {t}")
            }
            Violation::Occupancy { element, count, t } => {
                write!(f, "{element} is used by {count} > {t} members")
            }
            Violation::NotInGraph(i) => write!(f, "subgraph #{i} is not a subgraph of the host"),
            Violation::NotInduced(i) => write!(f, "subgraph #{i} is not induced"),
            Violation::NotIsomorphic(i) => {
                write!(f, "subgraph #{i} is not isomorphic to any family member")
            }
        }
    }
}

fn validate_sets(inst: &SetInstance, sol: &[ElemSet], mode: Mode) -> std::result::Result<(), Violation> {
    for (i, s) in sol.iter().enumerate() {
        if !inst.contains_set(s) {
            return Err(Violation::UnknownSet(i));
        }
    }
    check_family(
        sol,
        inst.k,
        mode,
        inst.t,
        |i, j| sol[i] == sol[j],
        |e| inst.universe[e as usize].clone(),
    )
}

/// Shared counting logic for set and graph solutions.
fn check_family(
    members: &[ElemSet],
    k: usize,
    mode: Mode,
    t: usize,
    same: impl Fn(usize, usize) -> bool,
    name: impl Fn(Elem) -> String,
) -> std::result::Result<(), Violation> {
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if same(i, j) {
                return Err(Violation::Duplicate(i, j));
            }
            if mode == Mode::Overlap {
                let shared = intersection_size(&members[i], &members[j]);
                if shared > t {
                    return Err(Violation::Overlap { i, j, shared, t });
                }
            }
        }
    }
    if mode == Mode::Membership {
        let mut count: HashMap<Elem, usize> = HashMap::new();
        for &e in members.iter().flatten() {
            *count.entry(e).or_default() += 1;
        }
        if let Some((&e, &c)) = count.iter().filter(|(_, &c)| c > t).min_by_key(|(&e, _)| e) {
            return Err(Violation::Occupancy { element: name(e), count: c, t });
        }
    }
    if members.len() < k {
        return Err(Violation::TooFew { have: members.len(), need: k });
    }
    Ok(())
}

pub fn validate_set_overlap(inst: &SetInstance, sol: &[ElemSet]) -> std::result::Result<(), Violation> {
    validate_sets(inst, sol, Mode::Overlap)
}

pub fn validate_set_membership(
    inst: &SetInstance,
    sol: &[ElemSet],
) -> std::result::Result<(), Violation> {
    validate_sets(inst, sol, Mode::Membership)
}

pub fn check_set_overlap(inst: &SetInstance, sol: &[ElemSet]) -> bool {
    validate_set_overlap(inst, sol).is_ok()
}

pub fn check_set_membership(inst: &SetInstance, sol: &[ElemSet]) -> bool {
    validate_set_membership(inst, sol).is_ok()
}

/// Dispatches on `inst.mode`.
pub fn validate_set_solution(inst: &SetInstance, sol: &[ElemSet]) -> std::result::Result<(), Violation> {
    validate_sets(inst, sol, inst.mode)
}

pub fn validate_graph_solution(
    inst: &GraphInstance,
    sol: &[Subgraph],
) -> std::result::Result<(), Violation> {
    let g = &inst.g;
    let induced = inst.variant.induced();
    for (i, h) in sol.iter().enumerate() {
        let in_graph = h.vertices.windows(2).all(|w| w[0] < w[1])
            && h.vertices.iter().all(|&v| (v as usize) < g.n())
            && h.edges.iter().all(|&(u, v)| {
                g.has_edge(u, v)
                    && h.vertices.binary_search(&u).is_ok()
                    && h.vertices.binary_search(&v).is_ok()
            });
        if !in_graph {
            return Err(Violation::NotInGraph(i));
        }
        if induced && g.induced_edges(&h.vertices) != h.edges {
            return Err(Violation::NotInduced(i));
        }
        if !inst.family.members.iter().any(|p| subgraph::is_isomorphic(h, p)) {
            return Err(Violation::NotIsomorphic(i));
        }
    }
    let members: Vec<ElemSet> = if inst.variant.on_edges() {
        sol.iter()
            .map(|h| {
                let mut ids: Vec<Elem> = h
                    .edges
                    .iter()
                    .map(|&(u, v)| g.edge_index(u, v).expect("checked above") as Elem)
                    .collect();
                ids.sort_unstable();
                ids
            })
            .collect()
    } else {
        sol.iter().map(|h| h.vertices.clone()).collect()
    };
    let same = |i: usize, j: usize| match inst.variant.distinct() {
        Distinct::Vertices => sol[i].vertices == sol[j].vertices,
        Distinct::Edges => sol[i].edges == sol[j].edges,
    };
    let name = |e: Elem| {
        if inst.variant.on_edges() {
            let (u, v) = g.edges()[e as usize];
            format!("edge {}-{}", inst.vertex_label(u), inst.vertex_label(v))
        } else {
            format!("vertex {}", inst.vertex_label(e))
        }
    };
    check_family(&members, inst.k, inst.variant.mode(), inst.t, same, name)
}

pub fn check_graph_solution(inst: &GraphInstance, sol: &[Subgraph]) -> bool {
    validate_graph_solution(inst, sol).is_ok()
}
