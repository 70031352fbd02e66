//! Run the built-in feature corpus and compare each program with its
//! golden output.

use std::time::Instant;

use eogray::corpus::{list_entries, run_entry};

fn main() {
    let pattern = std::env::args().nth(1).unwrap_or_else(|| "*".into());
    let entries = eogray::corpus::filter(&pattern).expect("valid glob");
    let start = Instant::now();
    let mut failed = 0;
    for entry in &entries {
        let report = run_entry(entry);
        let verdict = match entry.check(&report) {
            Ok(()) => "pass".to_string(),
            Err(reason) => {
                failed += 1;
                format!("FAIL {reason}")
            }
        };
        println!("{:<28} {:<24} {:>8} steps  {verdict}", entry.id, entry.feature, report.steps);
    }
    println!(
        "{} of {} entries ({} total) pass in {:.2?}",
        entries.len() - failed,
        entries.len(),
        list_entries().len(),
        start.elapsed()
    );
    assert_eq!(failed, 0);
}
