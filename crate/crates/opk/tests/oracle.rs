mod common;

use common::*;
use opk::fixtures::{self, v};
use opk::model::check_graph_solution;
use opk::oracle::{solve_graph_exact, solve_set_exact};
use opk::random::{random_set_instance, SetGenConfig};
use opk::{Error, Graph, GraphFamily, GraphInstance, Mode, SetInstance, Subgraph, Variant};
use proptest::prelude::*;

#[test]
fn walkthrough_instance_has_two_sets() {
    let inst = fixtures::overlap_walkthrough(2);
    let w = solve_set_exact(&inst, &budget()).unwrap().expect("yes instance");
    assert_eq!(w.len(), 2);
    assert!(opk::check_set_overlap(&inst, &w));
}

#[test]
fn k_zero_and_pigeonhole() {
    let mut inst = fixtures::overlap_walkthrough(2);
    inst.k = 0;
    assert_eq!(solve_set_exact(&inst, &budget()).unwrap(), Some(vec![]));
    inst.k = inst.sets.len() + 1;
    assert_eq!(solve_set_exact(&inst, &budget()).unwrap(), None);
}

#[test]
fn set_budget_is_reported() {
    let universe: Vec<String> = (0..40).map(|i| format!("x{i}")).collect();
    let sets: Vec<Vec<String>> = (0..30).map(|i| vec![universe[i].clone()]).collect();
    let inst = SetInstance::from_labels(&universe, &sets, 1, 0, 6, Mode::Overlap).unwrap();
    assert!(matches!(solve_set_exact(&inst, &budget()), Err(Error::Budget { .. })));
}

#[test]
fn shared_edge_graph_isv_has_three_subgraphs() {
    let inst = fixtures::shared_edge_instance(
        vec![Graph::cycle(4), Graph::complete(4)],
        3,
        3,
        Variant::VertexMembershipIsv,
    );
    let w = solve_graph_exact(&inst, &budget()).unwrap().expect("yes instance");
    assert!(check_graph_solution(&inst, &w));
    // The documented witness: two subgraphs on {b,c,e,f} and the 4-cycle on {a,b,c,d}.
    let doc = vec![
        Subgraph::new(vec![v('b'), v('c'), v('e'), v('f')], [(v('b'), v('e')), (v('e'), v('f')), (v('c'), v('f')), (v('b'), v('c'))]),
        Subgraph::new(vec![v('a'), v('b'), v('c'), v('d')], [(v('a'), v('b')), (v('a'), v('d')), (v('b'), v('c')), (v('c'), v('d'))]),
        Subgraph::new(vec![v('b'), v('c'), v('e'), v('f')], fixtures::shared_edge_graph().0.induced_edges(&[v('b'), v('c'), v('e'), v('f')])),
    ];
    assert!(check_graph_solution(&inst, &doc));
}

#[test]
fn trivial_graph_cases() {
    let k2 = GraphFamily::new(vec![Graph::complete(2)]);
    let empty = GraphInstance::new(Graph::empty(4), k2.clone(), 1, 1, Variant::VertexMembership).unwrap();
    assert_eq!(solve_graph_exact(&empty, &budget()).unwrap(), None);
    let one = GraphInstance::new(Graph::path(3), k2, 1, 1, Variant::VertexMembership).unwrap();
    assert!(solve_graph_exact(&one, &budget()).unwrap().is_some());
}

#[test]
fn set_oracle_matches_brute_force() {
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let mode = if seed % 2 == 0 { Mode::Overlap } else { Mode::Membership };
        let inst = random_set_instance(&mut r, mode, &SetGenConfig::default());
        assert_eq!(oracle_set(&inst), brute_set(&inst), "seed {seed}: {inst:?}");
    }
}

#[test]
fn graph_oracle_matches_brute_force() {
    let families = [
        vec![Graph::complete(3)],
        vec![Graph::path(3)],
        vec![Graph::cycle(4), Graph::complete(4)],
    ];
    for seed in 0..120u64 {
        let mut r = rng(1000 + seed);
        let n = 4 + (seed % 3) as usize;
        let g = random_graph(&mut r, n, 0.6);
        let fam = &families[(seed % 3) as usize];
        let variant = Variant::ALL[(seed as usize / 3) % 9];
        let family = GraphFamily::new(fam.clone());
        let (t, k) = match variant.mode() {
            Mode::Membership => (1 + (seed % 2) as usize, 1 + (seed % 3) as usize),
            Mode::Overlap => {
                let r = if variant.on_edges() { family.m_h() } else { family.r_h() };
                ((seed as usize) % r, 1 + (seed % 3) as usize)
            }
        };
        let fam = if variant == Variant::CliqueEdgeOverlap {
            GraphFamily::new(vec![Graph::complete(3)])
        } else {
            family
        };
        let t = if variant == Variant::CliqueEdgeOverlap { t.min(2) } else { t };
        let inst = GraphInstance::new(g, fam, t, k, variant).unwrap();
        assert_eq!(oracle_graph(&inst), brute_graph(&inst), "seed {seed} {variant}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decision_is_antitone_in_k_and_monotone_in_t(seed in any::<u64>(), membership in any::<bool>()) {
        let mut r = rng(seed);
        let mode = if membership { Mode::Membership } else { Mode::Overlap };
        let inst = random_set_instance(&mut r, mode, &SetGenConfig::default());
        let yes = oracle_set(&inst);
        if yes && inst.k > 0 {
            let fewer = SetInstance { k: inst.k - 1, ..inst.clone() };
            prop_assert!(oracle_set(&fewer));
        }
        let max_t = match mode { Mode::Overlap => inst.r - 1, Mode::Membership => inst.t + 2 };
        if yes && inst.t < max_t {
            let looser = SetInstance { t: inst.t + 1, ..inst.clone() };
            prop_assert!(oracle_set(&looser));
        }
    }

    #[test]
    fn witnesses_always_validate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = random_set_instance(&mut r, Mode::Overlap, &SetGenConfig::default());
        if let Some(w) = solve_set_exact(&inst, &budget()).unwrap() {
            prop_assert!(opk::check_set_overlap(&inst, &w));
            prop_assert_eq!(w.len(), inst.k);
        }
    }
}
