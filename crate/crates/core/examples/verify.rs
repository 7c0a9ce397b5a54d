//! Full verification: catalog self-check, bounded searches and the blind search,
//! printed as the JSON report the CLI emits.
//!
//! Usage: cargo run --release --example verify -- [--no-blind]

use gf2bup::report::verify_json;
use gf2bup::search::{verify_theorems_with, VerificationReport, VerifyOptions};
use gf2bup::sigma::DEFAULT_DIVISOR_CAP;

pub fn run_example(blind: bool) -> VerificationReport {
    let mut opts = VerifyOptions::default();
    if !blind {
        opts.blind = None;
    }
    verify_theorems_with(&opts)
}

#[allow(dead_code)]
fn main() {
    let blind = std::env::args().nth(1).as_deref() != Some("--no-blind");
    let report = run_example(blind);
    let json =
        serde_json::to_string_pretty(&verify_json(&report, DEFAULT_DIVISOR_CAP)).expect("serializable");
    println!("{json}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
