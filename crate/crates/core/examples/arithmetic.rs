//! Polynomial arithmetic over F2: parsing, the three output styles, and the
//! two involutions.
//!
//! Usage: cargo run --example arithmetic -- [POLY]

use gf2bup::{format_poly, parse_poly, Poly, Style};

pub fn run_example(input: &str) -> gf2bup::Result<Vec<String>> {
    let p = parse_poly(input)?;
    let q = parse_poly("x^2+x+1")?;
    let (quo, rem) = p.divrem(&q)?;
    Ok(vec![
        format!("p         = {}", format_poly(&p, Style::Sum)),
        format!("hex       = {}", format_poly(&p, Style::Hex)),
        format!("factored  = {}", format_poly(&p, Style::Factored)),
        format!("p(x+1)    = {}", p.translate()),
        format!("reciprocal= {}", p.reciprocal().map(|r| r.to_string()).unwrap_or_else(|e| e.to_string())),
        format!("p^2       = {}", p.square()),
        format!("p'        = {}", p.derivative()),
        format!("p / M1    = {quo} rem {rem}"),
        format!("gcd(p, x^15+1) = {}", p.gcd(&(&Poly::monomial(15) + &Poly::one()))?),
    ])
}

#[allow(dead_code)]
fn main() -> gf2bup::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "1+x^5+x^10".to_string());
    for line in run_example(&input)? {
        println!("{line}");
    }
    Ok(())
}
