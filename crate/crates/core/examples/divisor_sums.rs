//! The three divisor sums, and σ** checked against explicit divisor enumeration.
//!
//! Usage: cargo run --example divisor_sums -- [POLY]

use gf2bup::sigma::{enumerate_divisors, sigma, sigma_bistar, sigma_bistar_oracle, sigma_star, DivisorKind};
use gf2bup::{parse_poly, Poly};

pub struct Sums {
    pub sigma: Poly,
    pub star: Poly,
    pub bistar: Poly,
    pub oracle: Poly,
    pub biunitary_divisors: Vec<Poly>,
}

pub fn run_example(input: &str) -> gf2bup::Result<Sums> {
    let p = parse_poly(input)?;
    Ok(Sums {
        sigma: sigma(&p)?,
        star: sigma_star(&p)?,
        bistar: sigma_bistar(&p)?,
        oracle: sigma_bistar_oracle(&p)?,
        biunitary_divisors: enumerate_divisors(&p, DivisorKind::Biunitary)?,
    })
}

#[allow(dead_code)]
fn main() -> gf2bup::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "x^3*(x+1)^4*(x^2+x+1)".to_string());
    let s = run_example(&input)?;
    println!("sigma   = {}", s.sigma);
    println!("sigma*  = {}", s.star);
    println!("sigma** = {}", s.bistar);
    println!("{} bi-unitary divisors, summed: {}", s.biunitary_divisors.len(), s.oracle);
    Ok(())
}
