//! Randomized soundness check: kernel answers must match the exhaustive solver.
//!
//! Pass a seed as the first argument to reproduce a run.

use opk::check::{run_check, CheckConfig, TrialKind};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let cfg = CheckConfig { trials: 45, seed, kinds: TrialKind::all(), ..CheckConfig::default() };
    let report = run_check(&cfg);
    print!("{}", report.render(&cfg));
    if !report.all_passed() {
        std::process::exit(1);
    }
}
