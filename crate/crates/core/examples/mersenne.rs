//! Mersenne primes 1 + x^a (x+1)^b up to a degree bound.
//!
//! Usage: cargo run --example mersenne -- [MAX_DEGREE]

use gf2bup::mersenne::{enumerate_mersenne, MersennePrime};

pub fn run_example(max_degree: u32) -> Vec<MersennePrime> {
    enumerate_mersenne(max_degree)
}

#[allow(dead_code)]
fn main() {
    let max_degree = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let primes = run_example(max_degree);
    println!("{} Mersenne primes of degree <= {max_degree}", primes.len());
    for m in primes {
        let self_reciprocal = m.poly.reciprocal().is_ok_and(|r| r == m.poly);
        println!(
            "  a={:<2} b={:<2} {}{}",
            m.a,
            m.b,
            m.poly,
            if self_reciprocal { "  (self-reciprocal)" } else { "" }
        );
    }
}
