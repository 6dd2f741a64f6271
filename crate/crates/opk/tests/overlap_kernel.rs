mod common;

use std::collections::BTreeSet;

use common::*;
use opk::fixtures;
use opk::model::intersection_size;
use opk::overlap::*;
use opk::random::{random_set_instance, SetGenConfig};
use opk::{KernelOutcome, Mode, SetInstance};
use proptest::prelude::*;

fn inst_of(universe: &str, sets: &[&str], r: usize, t: usize, k: usize) -> SetInstance {
    let sets: Vec<Vec<String>> = sets.iter().map(|s| letters(s)).collect();
    SetInstance::from_labels(&letters(universe), &sets, r, t, k, Mode::Overlap).unwrap()
}

#[test]
fn presolve_moves_small_sets() {
    let inst = inst_of("abcdef", &["ab", "cdef", "bcde"], 4, 2, 3);
    let (rest, forced) = presolve_small_sets(&inst);
    assert_eq!(forced, vec![inst.set_of(&letters("ab")).unwrap()]);
    assert_eq!(rest.k, 2);
    assert_eq!(rest.sets.len(), 2);

    let zero = inst_of("abc", &["ab", "bc"], 2, 0, 1);
    let (same, none) = presolve_small_sets(&zero);
    assert!(none.is_empty());
    assert_eq!(same, zero);
}

#[test]
fn saturated_overlap_counts_sets() {
    let five = inst_of("abcdefgh", &["abcd", "bcde", "cdef", "defg", "efgh"], 4, 3, 5);
    assert_eq!(handle_t_max(&five), Some(true));
    let three = inst_of("abcdef", &["abcd", "bcde", "cdef"], 4, 3, 5);
    assert_eq!(handle_t_max(&three), Some(false));
    let not_max = inst_of("abcdef", &["abcd", "bcde", "cdef"], 4, 2, 5);
    assert_eq!(handle_t_max(&not_max), None);
}

#[test]
fn unused_elements_are_dropped() {
    let inst = inst_of("abc", &["ab"], 2, 0, 1);
    let red = reduce_unused_elements(&inst);
    assert_eq!(red.universe, letters("ab"));
    assert_eq!(reduce_unused_elements(&red), red);
    let empty = inst_of("abc", &[], 2, 0, 1);
    assert!(reduce_unused_elements(&empty).universe.is_empty());
}

#[test]
fn greedy_packing_is_maximal() {
    let inst = fixtures::overlap_walkthrough(1);
    let paper = fixtures::overlap_walkthrough_packing(&inst);
    // Feeding the documented packing first reproduces it exactly.
    let mut order = paper.clone();
    order.extend(inst.sets.iter().filter(|s| !paper.contains(s)).cloned());
    assert_eq!(greedy_maximal_packing(&order, 2), paper);
    assert!(is_maximal_packing(&inst.sets, &paper, 2));

    let disjoint = inst_of("abcdef", &["ab", "cd", "ef"], 2, 0, 1);
    assert_eq!(greedy_maximal_packing(&disjoint.sets, 0), disjoint.sets);
    let clash = inst_of("abcd", &["abc", "abd"], 3, 0, 1);
    assert_eq!(greedy_maximal_packing(&clash.sets, 1).len(), 1);
}

fn is_maximal_packing(all: &[Vec<u32>], packing: &[Vec<u32>], q: usize) -> bool {
    let pairwise = packing
        .iter()
        .enumerate()
        .all(|(i, a)| packing[i + 1..].iter().all(|b| intersection_size(a, b) <= q));
    let maximal = all
        .iter()
        .filter(|s| !packing.contains(s))
        .all(|s| packing.iter().any(|p| intersection_size(p, s) > q));
    pairwise && maximal
}

#[test]
fn threshold_values() {
    assert_eq!(threshold_f(2, 2, 4, 1, 2).unwrap(), 4);
    assert_eq!(threshold_f(3, 2, 4, 1, 2).unwrap(), 1);
    for i in 2..=4 {
        assert_eq!(threshold_f(i, 3, 5, 1, 1).unwrap(), 1);
    }
    assert!(threshold_f(1, 2, 4, 1, 2).is_err());
    assert!(threshold_f(5, 2, 4, 1, 2).is_err());
}

#[test]
fn threshold_closed_form_matches_recurrence() {
    for r in 2..=6usize {
        for t in 0..=r - 2 {
            for t_ini in t..=r - 2 {
                for k in 1..=6usize {
                    for i in t + 1..=t_ini + 1 {
                        let x = ((r - t) * (k - 1)) as u128;
                        let closed: u128 = (0..=(t_ini + 1 - i) as u32).map(|j| x.pow(j)).sum();
                        if closed < 1_000_000_000 {
                            assert_eq!(threshold_f(i, t_ini, r, t, k).unwrap() as u128, closed);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn extra_sets_trim_the_pq_block() {
    let inst = fixtures::overlap_walkthrough(1);
    let r_sets = fixtures::overlap_walkthrough_packing(&inst);
    let (extra, table) = extra_sets_reduction_with_table(&r_sets, 4, 1, 2);
    assert_eq!(table.get(&2), Some(&4));
    assert_eq!(extra, vec![inst.set_of(&letters("pqxy")).unwrap()]);
    assert_eq!(extra_sets_reduction(&r_sets, 4, 1, 2), extra);

    let disjoint = inst_of("abcdefgh", &["abcd", "efgh"], 4, 1, 2);
    assert!(extra_sets_reduction(&disjoint.sets, 4, 1, 2).is_empty());
}

#[test]
fn extra_sets_with_k_one_keep_a_single_representative() {
    let inst = inst_of("abcdefg", &["abcd", "abef", "abgc"], 4, 1, 1);
    let extra = extra_sets_reduction(&inst.sets, 4, 1, 1);
    assert_eq!(extra.len(), 2);
}

#[test]
fn conflict_graph_of_the_walkthrough() {
    // The extra set pqxy is gone before the matching step runs.
    let full = fixtures::overlap_walkthrough(1);
    let pqxy = full.set_of(&letters("pqxy")).unwrap();
    let kept: Vec<_> = full.sets.iter().filter(|s| **s != pqxy).cloned().collect();
    let inst = SetInstance { sets: kept, ..full.clone() };
    let r_sets: Vec<_> = fixtures::overlap_walkthrough_packing(&full).into_iter().filter(|s| *s != pqxy).collect();
    let val: BTreeSet<u32> = r_sets.iter().flatten().copied().collect();
    let o: Vec<u32> = (0..inst.n() as u32).filter(|e| !val.contains(e) && inst.sets.iter().any(|s| s.contains(e))).collect();
    assert_eq!(inst.labels(&o), letters("ahkl"));
    let rest: Vec<_> = inst.sets.iter().filter(|s| !r_sets.contains(s)).cloned().collect();
    let b = build_conflict_bipartite(&o, &rest).unwrap();
    let right: Vec<String> = b.right.iter().map(|p| inst.labels(p).concat()).collect();
    assert_eq!(right, vec!["bce", "efi", "egi", "ijm"]);
    assert_eq!(b.graph.edge_count(), 5);

    let (reduced, removed, removed_sets) = matching_reduction(&inst, &r_sets).unwrap();
    assert_eq!(removed.len(), 1);
    let gone = inst.labels(&removed).concat();
    assert!(gone == "k" || gone == "l");
    assert_eq!(removed_sets.len(), 1);
    assert!(reduced.element(&gone).is_none());
}

#[test]
fn conflict_graph_edge_cases() {
    let b = build_conflict_bipartite(&[], &[]).unwrap();
    assert_eq!(b.graph.edge_count(), 0);
    let inst = inst_of("abcd", &["abc", "bcd"], 3, 0, 1);
    let a = inst.element("a").unwrap();
    let single = build_conflict_bipartite(&[a], &[inst.sets[0].clone()]).unwrap();
    assert_eq!(single.graph.edge_count(), 1);
    let d = inst.element("d").unwrap();
    let bad = build_conflict_bipartite(&[a, d], &[vec![a, d]]);
    assert!(bad.is_err());
}

#[test]
fn walkthrough_kernel_exits_early() {
    let inst = fixtures::overlap_walkthrough(1);
    match kernelize_set_overlap(&inst).unwrap() {
        KernelOutcome::Early { solution, stats } => {
            assert_eq!(solution.len(), 2);
            assert!(opk::check_set_overlap(&inst, &solution));
            assert!(stats.early_solution);
        }
        other => panic!("expected early exit, got {other:?}"),
    }
}

#[test]
fn walkthrough_kernel_at_higher_k_is_sound() {
    // With k = 3 the maximal 1-overlap packing of R is too small, so the
    // pipeline reaches the matching rule.
    let inst = SetInstance { k: 3, ..fixtures::overlap_walkthrough(1) };
    let before = oracle_set(&inst);
    match kernelize_set_overlap(&inst).unwrap() {
        KernelOutcome::Reduced { instance, trace, stats } => {
            assert_eq!(oracle_set(&instance), before);
            let trace = trace.expect("trace");
            assert!(stats.elements_after <= stats.bound as usize);
            assert!(trace.o_removed.iter().all(|e| trace.o.contains(e)));
        }
        KernelOutcome::Early { solution, .. } => assert!(opk::check_set_overlap(&inst, &solution)),
    }
}

#[test]
fn empty_collection_is_a_no_kernel() {
    let inst = inst_of("abc", &[], 3, 0, 1);
    match kernelize_set_overlap(&inst).unwrap() {
        KernelOutcome::Reduced { instance, .. } => {
            assert!(instance.sets.is_empty());
            assert!(!oracle_set(&instance));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn early_exit_on_disjoint_sets() {
    let inst = inst_of("abcdefgh", &["ab", "cd", "ef", "gh"], 2, 0, 3);
    assert!(matches!(kernelize_set_overlap(&inst).unwrap(), KernelOutcome::Early { .. }));
}

#[test]
fn clique_bound_table() {
    let got: Vec<usize> = (0..=6).map(clique_overlap_bound).collect();
    assert_eq!(got, vec![1, 2, 2, 3, 3, 3, 4]);
}

fn check_outcome(inst: &SetInstance) -> Result<(), String> {
    let before = oracle_set(inst);
    match kernelize_set_overlap(inst).map_err(|e| e.to_string())? {
        KernelOutcome::Early { solution, .. } => {
            if solution.len() != inst.k || !opk::check_set_overlap(inst, &solution) {
                return Err(format!("bad early solution {solution:?}"));
            }
            if !before {
                return Err("early solution on a NO instance".into());
            }
        }
        KernelOutcome::Reduced { instance, trace, stats } => {
            let after = oracle_set(&instance);
            if after != before {
                return Err(format!("decision changed {before} -> {after}: {instance:?}"));
            }
            if stats.elements_after > stats.bound as usize {
                return Err("size bound".into());
            }
            if let Some(tr) = trace {
                let val: BTreeSet<u32> = tr.r.iter().flatten().copied().collect();
                for s in &instance.sets {
                    let orig: Vec<u32> = s.iter().map(|&e| inst.element(&instance.universe[e as usize]).unwrap()).collect();
                    let mut orig = orig;
                    orig.sort();
                    if tr.r.contains(&orig) {
                        continue;
                    }
                    let outside = orig.iter().filter(|e| !val.contains(e)).count();
                    if outside > 1 {
                        return Err(format!("set {orig:?} has {outside} outside elements"));
                    }
                    if outside == 1 && !tr.r.iter().any(|p| intersection_size(p, &orig) == inst.r - 1) {
                        return Err(format!("set {orig:?} is not anchored to R"));
                    }
                }
                if !tr.extra.iter().all(|e| !instance.sets.iter().any(|s| instance.labels(s) == inst.labels(e))) {
                    return Err("extra set survived".into());
                }
            }
            match kernelize_set_overlap(&instance).map_err(|e| e.to_string())? {
                KernelOutcome::Reduced { instance: again, .. } if again == instance => {}
                other => return Err(format!("not idempotent: {other:?}")),
            }
        }
    }
    Ok(())
}

#[test]
fn kernel_preserves_decisions_on_random_instances() {
    for seed in 0..400u64 {
        let mut r = rng(seed);
        let cfg = SetGenConfig { clustered: seed % 2 == 1, ..SetGenConfig::default() };
        let inst = random_set_instance(&mut r, Mode::Overlap, &cfg);
        if let Err(e) = check_outcome(&inst) {
            panic!("seed {seed}: {e}\n{inst:?}");
        }
    }
}

#[test]
fn reduced_sets_are_subsets_of_inputs() {
    for seed in 0..100u64 {
        let mut r = rng(5000 + seed);
        let inst = random_set_instance(&mut r, Mode::Overlap, &SetGenConfig { clustered: true, ..Default::default() });
        if let KernelOutcome::Reduced { instance, .. } = kernelize_set_overlap(&inst).unwrap() {
            for s in &instance.sets {
                assert!(inst.contains_set(&inst.set_of(&instance.labels(s)).unwrap()));
            }
            let labels: BTreeSet<_> = instance.universe.iter().collect();
            let used: BTreeSet<_> = instance.sets.iter().flat_map(|s| instance.labels(s)).collect();
            assert_eq!(labels.len(), used.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn kernel_soundness_property(seed in any::<u64>(), clustered in any::<bool>()) {
        let mut r = rng(seed);
        let inst = random_set_instance(&mut r, Mode::Overlap, &SetGenConfig { clustered, ..Default::default() });
        prop_assert!(check_outcome(&inst).is_ok(), "{:?}", check_outcome(&inst));
    }

    #[test]
    fn greedy_is_maximal_in_any_order(seed in any::<u64>(), q in 0usize..3) {
        let mut r = rng(seed);
        let inst = random_set_instance(&mut r, Mode::Overlap, &SetGenConfig::default());
        let p = greedy_maximal_packing(&inst.sets, q);
        prop_assert!(is_maximal_packing(&inst.sets, &p, q));
    }
}
