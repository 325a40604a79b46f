//! One line per acceptance criterion. Cutoffs, seeds and sample counts are
//! pinned in `multlab::acceptance`; every comparison is exact.

use multlab::acceptance::{run_all, CRITERIA};

fn main() {
    let start = std::time::Instant::now();
    let results = run_all();
    assert_eq!(results.len(), CRITERIA.len());
    for c in &results {
        println!("{}", c.line());
    }
    let failed: Vec<usize> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    println!(
        "acceptance: {}/{} passed in {:.1?}",
        results.len() - failed.len(),
        results.len(),
        start.elapsed()
    );
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
