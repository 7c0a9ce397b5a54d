//! The three bounded searches over explicit exponent lists and prime pools.
//!
//! Usage: cargo run --release --example bounded_search

use gf2bup::search::{search_omega3, search_omega4_mersenne, search_omega4_nonmersenne, SearchReport};

pub fn run_example() -> Vec<SearchReport> {
    vec![search_omega3(), search_omega4_mersenne(), search_omega4_nonmersenne()]
}

fn print(report: &SearchReport, depth: usize) {
    println!(
        "{:indent$}{}: {} candidates, {} hits, {}",
        "",
        report.case_id,
        report.candidate_count,
        report.hits.len(),
        if report.passed() { "pass" } else { "FAIL" },
        indent = depth * 2
    );
    for hit in &report.hits {
        println!("{:indent$}  {:<5} {}", "", hit.display_name(), hit.factorization, indent = depth * 2);
    }
    for sub in &report.subcases {
        print(sub, depth + 1);
    }
}

#[allow(dead_code)]
fn main() {
    for report in run_example() {
        print(&report, 0);
    }
}
