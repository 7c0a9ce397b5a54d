//! Exhaustive search for bi-unitary perfect polynomials up to a degree bound.
//!
//! Usage: cargo run --release --example blind_search -- [MAX_DEGREE] [MAX_OMEGA]

use gf2bup::search::{blind_search, SearchReport};

pub fn run_example(max_degree: usize, max_omega: usize) -> gf2bup::Result<SearchReport> {
    blind_search(max_degree, max_omega)
}

#[allow(dead_code)]
fn main() -> gf2bup::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_degree = args.next().and_then(|s| s.parse().ok()).unwrap_or(24);
    let max_omega = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let report = run_example(max_degree, max_omega)?;
    println!(
        "degree <= {max_degree}, omega <= {max_omega}: {} candidates, {} hits in {:.2?}",
        report.candidate_count,
        report.hits.len(),
        report.elapsed
    );
    for hit in &report.hits {
        println!("  {:>4}  deg {:>2}  {}", hit.display_name(), hit.degree, hit.factorization);
    }
    println!("matches known list: {}", report.passed());
    Ok(())
}
