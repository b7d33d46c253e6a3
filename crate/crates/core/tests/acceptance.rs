//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! `cargo test --test acceptance -- 7` runs only the criteria whose id matches.

use std::process::ExitCode;

use codesign::acceptance::{criteria, optional_criteria};

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    let mut ran = 0;
    for c in criteria().into_iter().chain(optional_criteria()) {
        if !filters.is_empty() && !filters.iter().any(|f| f == c.id) {
            continue;
        }
        let outcome = c.run();
        println!("{outcome}");
        ran += 1;
        failed += usize::from(!outcome.passed);
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
