//! One PASS/FAIL line per acceptance criterion, each under its own time limit.

use t3embed::selfcheck::{run_all, Scale, DEFAULT_SEED};

fn main() {
    let results = run_all(DEFAULT_SEED, Scale::FULL);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
