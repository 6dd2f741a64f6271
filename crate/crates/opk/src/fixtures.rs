//! Small hand-checked instances shared by tests, examples and the CLI `gen`.

use crate::model::{ElemSet, Graph, GraphFamily, GraphInstance, Mode, SetInstance, Variant};

/// 4-uniform instance over `a..y` with a dense `{p,q}` block and a few
/// "outside" elements (`a`, `h`, `k`, `l`) hanging off the packing below.
pub fn overlap_walkthrough(t: usize) -> SetInstance {
    let universe: Vec<String> = ('a'..='y').map(String::from).collect();
    let sets = [
        "abce", "bcde", "efgi", "aefi", "eghi", "ijmn", "ijkm", "ijlm", "nopq", "pqrs", "pqtu", "pquv",
        "pqvw", "pqxy",
    ];
    let sets: Vec<Vec<String>> = sets.iter().map(|s| s.chars().map(String::from).collect()).collect();
    SetInstance::from_labels(&universe, &sets, 4, t, 2, Mode::Overlap).expect("fixture is valid")
}

/// A maximal packing of [`overlap_walkthrough`] whose members pairwise share at most two elements.
pub fn overlap_walkthrough_packing(inst: &SetInstance) -> Vec<ElemSet> {
    ["bcde", "efgi", "ijmn", "nopq", "pqrs", "pqtu", "pqvw", "pqxy"]
        .iter()
        .map(|s| inst.set_of(&s.chars().map(String::from).collect::<Vec<_>>()).expect("fixture set"))
        .collect()
}

/// Three 4-sets over `a..h` sharing `b` and `c`, with `t = 2`, `k = 2`.
pub fn membership_walkthrough() -> SetInstance {
    let universe: Vec<String> = ('a'..='h').map(String::from).collect();
    let sets: Vec<Vec<String>> =
        ["abcd", "bcef", "bcgh"].iter().map(|s| s.chars().map(String::from).collect()).collect();
    SetInstance::from_labels(&universe, &sets, 4, 2, 2, Mode::Membership).expect("fixture is valid")
}

/// Eight vertices `a..h`: a 4-cycle `abcd`, a 4-cycle `bghc`, and a `K4` on
/// `{b,c,e,f}`, all sharing the edge `bc`.
pub fn shared_edge_graph() -> (Graph, Vec<String>) {
    let labels: Vec<String> = ('a'..='h').map(String::from).collect();
    let edges = ["ab", "ad", "bc", "cd", "bg", "gh", "ch", "be", "ef", "cf", "ce", "bf"];
    let id = |c: char| (c as u8 - b'a') as u32;
    let g = Graph::new(
        8,
        edges.iter().map(|e| {
            let mut cs = e.chars();
            (id(cs.next().unwrap()), id(cs.next().unwrap()))
        }),
    )
    .expect("fixture graph is simple");
    (g, labels)
}

pub fn shared_edge_instance(members: Vec<Graph>, t: usize, k: usize, variant: Variant) -> GraphInstance {
    let (g, labels) = shared_edge_graph();
    GraphInstance::new(g, GraphFamily::new(members), t, k, variant)
        .and_then(|i| i.with_labels(labels))
        .expect("fixture instance is valid")
}

/// Vertex id of a letter in [`shared_edge_graph`].
pub fn v(c: char) -> u32 {
    (c as u8 - b'a') as u32
}
