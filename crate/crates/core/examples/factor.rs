//! Factor a polynomial and test irreducibility.
//!
//! Usage: cargo run --example factor -- [POLY]

use gf2bup::{factorize, is_irreducible, parse_poly, Factorization};

pub fn run_example(input: &str) -> gf2bup::Result<(Factorization, Vec<bool>)> {
    let p = parse_poly(input)?;
    let f = factorize(&p)?;
    let irreducible =
        f.factors().iter().map(|pp| is_irreducible(&pp.prime)).collect::<gf2bup::Result<Vec<bool>>>()?;
    Ok((f, irreducible))
}

#[allow(dead_code)]
fn main() -> gf2bup::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "1+x^5+x^10".to_string());
    let (f, _) = run_example(&input)?;
    println!("{input} = {f}");
    for pp in f.factors() {
        println!(
            "  {:<24} degree {:>3}  exponent {}",
            pp.prime.to_string(),
            pp.prime.degree().unwrap_or(0),
            pp.exp
        );
    }
    Ok(())
}
