//! Kernelize a small 4-uniform set system where chosen sets may share one element.
//!
//! The instance has a dense block of sets through `{p, q}` and a few sets
//! hanging off a maximal packing. The first half runs the two reduction
//! rules by hand on that packing; the second half runs the full pipeline.

use std::collections::BTreeSet;

use opk::fixtures::{overlap_walkthrough, overlap_walkthrough_packing};
use opk::overlap::{extra_sets_reduction_with_table, kernelize_set_overlap, matching_reduction};
use opk::{KernelOutcome, SetInstance};

fn names(inst: &SetInstance, sets: &[Vec<u32>]) -> String {
    sets.iter().map(|s| inst.labels(s).concat()).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<(), opk::Error> {
    let inst = overlap_walkthrough(1);
    let packing = overlap_walkthrough_packing(&inst);
    println!("maximal packing R: {}", names(&inst, &packing));

    let (extra, table) = extra_sets_reduction_with_table(&packing, inst.r, inst.t, inst.k);
    println!("thresholds f: {table:?}; extra sets: {}", names(&inst, &extra));

    let sets: Vec<_> = inst.sets.iter().filter(|s| !extra.contains(s)).cloned().collect();
    let trimmed = SetInstance { sets, ..inst.clone() };
    let r: Vec<_> = packing.into_iter().filter(|s| !extra.contains(s)).collect();
    let val: BTreeSet<u32> = r.iter().flatten().copied().collect();
    let outside: Vec<u32> = trimmed.used_elements().into_iter().filter(|e| !val.contains(e)).collect();
    let (reduced, removed, _) = matching_reduction(&trimmed, &r)?;
    println!("outside elements: {:?}; unmatched and removed: {:?}", trimmed.labels(&outside), trimmed.labels(&removed));
    println!("after both rules: {} elements, {} sets\n", reduced.n(), reduced.sets.len());

    for k in [2, 6] {
        let inst = SetInstance { k, ..inst.clone() };
        print!("pipeline at k = {k}: ");
        match kernelize_set_overlap(&inst)? {
            KernelOutcome::Early { solution, .. } => println!("packing found directly: {}", names(&inst, &solution)),
            KernelOutcome::Reduced { stats, .. } => println!(
                "{} of {} elements kept (bound {}); the thresholds grow with k",
                stats.elements_after, stats.elements_before, stats.bound
            ),
        }
    }
    Ok(())
}
