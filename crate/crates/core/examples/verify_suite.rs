//! Runs the full check suite in-process and prints a summary.

use twinrep::cli::{verify_paper_suite, SuiteOptions};
use twinrep::sampling;

fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let report = verify_paper_suite(&SuiteOptions {
        n_max,
        seed: sampling::seed_from_env(),
        corrupt_eta1: false,
    });
    for c in &report.checks {
        println!(
            "{} {:<44} {:?}",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.elapsed
        );
    }
    println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
}
