//! Every element may sit in at most `t` chosen sets.
//!
//! The kernel rewrites such an instance into a disjoint packing problem over
//! (element, copy) pairs plus one token per set, kernelizes that, and reads
//! the result back. This example prints the rewritten universe and then runs
//! the whole pipeline.

use opk::fixtures::membership_walkthrough;
use opk::membership::{kernelize_set_membership, transform_membership_to_disjoint};
use opk::{Budget, KernelOutcome};

fn main() -> Result<(), opk::Error> {
    let inst = membership_walkthrough();
    let budget = Budget::default();
    let tr = transform_membership_to_disjoint(&inst, &budget)?;
    println!("original: {} elements, {} sets, t = {}", inst.n(), inst.sets.len(), inst.t);
    println!("disjoint form: {} elements, {} sets", tr.instance.n(), tr.instance.sets.len());
    println!("  universe: {}", tr.instance.universe.join(" "));
    for s in tr.instance.sets.iter().take(4) {
        println!("  {}", tr.instance.labels(s).join(" "));
    }
    println!("  ...");

    match kernelize_set_membership(&inst, &budget)? {
        KernelOutcome::Early { solution, .. } => {
            let sets: Vec<String> = solution.iter().map(|s| inst.labels(s).concat()).collect();
            println!("packing: {}", sets.join(" "));
        }
        KernelOutcome::Reduced { instance, stats, .. } => {
            println!("kernel keeps {} of {} elements", stats.elements_after, stats.elements_before);
            println!("{instance:?}");
        }
    }
    Ok(())
}
