//! The named polynomials, each checked for σ**(A) = A along with its translate.
//!
//! Usage: cargo run --example catalog

use gf2bup::catalog::named_constants;
use gf2bup::search::{is_ibup, BupRecord};
use gf2bup::sigma::is_bup;

pub fn run_example() -> Vec<(&'static str, bool, bool, bool)> {
    named_constants()
        .bups()
        .map(|e| {
            let record = BupRecord::from_poly(&e.poly);
            (e.name, is_bup(&e.poly), is_bup(&e.poly.translate()), record.as_ref().is_some_and(is_ibup))
        })
        .collect()
}

#[allow(dead_code)]
fn main() {
    let catalog = named_constants();
    for (name, bup, conj, ibup) in run_example() {
        let e = catalog.get(name).expect("listed");
        println!(
            "{name:<4} deg {:>2}  {:<24} bup {bup:<5} translate {conj:<5} indecomposable {ibup}",
            e.poly.degree().unwrap_or(0),
            e.symbolic
        );
    }
}
