//! The named polynomials: Mersenne primes M1..M5, the prime S1, and the known
//! bi-unitary perfect polynomials C1..C13, D1, D2.
//!
//! Entries are stored as prime-power lists over named primes and expanded on
//! first use. The table checks itself while building: every named prime must
//! be irreducible, M1..M5 must be Mersenne, and every C/D entry must be
//! bi-unitary perfect.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::factor::{is_irreducible, Factorization, PrimePower};
use crate::mersenne::is_mersenne_prime;
use crate::poly::Poly;
use crate::sigma::sigma_bistar_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantKind {
    MersennePrime,
    Prime,
    Bup,
}

#[derive(Debug, Clone)]
pub struct NamedConstant {
    pub name: &'static str,
    pub kind: ConstantKind,
    pub poly: Poly,
    pub factorization: Factorization,
    /// Prime-power form over named primes, e.g. `x^7*(x+1)^8*M5`.
    pub symbolic: String,
}

const PRIMES: &[(&str, &str)] = &[
    ("M1", "1+x+x^2"),
    ("M2", "1+x+x^3"),
    ("M3", "1+x^2+x^3"),
    ("M4", "1+x+x^2+x^3+x^4"),
    ("M5", "1+x^3+x^4"),
    ("S1", "1+x+x^4"),
];

type Shape = &'static [(&'static str, u32)];

const BUPS: &[(&str, Shape)] = &[
    ("C1", &[("x", 3), ("x+1", 4), ("M1", 1)]),
    ("C2", &[("x", 3), ("x+1", 5), ("M1", 2)]),
    ("C3", &[("x", 4), ("x+1", 4), ("M1", 2)]),
    ("C4", &[("x", 6), ("x+1", 6), ("M1", 2)]),
    ("C5", &[("x", 4), ("x+1", 5), ("M1", 3)]),
    ("C6", &[("x", 7), ("x+1", 8), ("M5", 1)]),
    ("C7", &[("x", 7), ("x+1", 9), ("M5", 2)]),
    ("C8", &[("x", 8), ("x+1", 8), ("M4", 1), ("M5", 1)]),
    ("C9", &[("x", 8), ("x+1", 9), ("M4", 1), ("M5", 2)]),
    ("C10", &[("x", 7), ("x+1", 10), ("M1", 2), ("M5", 1)]),
    ("C11", &[("x", 7), ("x+1", 13), ("M2", 2), ("M3", 2)]),
    ("C12", &[("x", 9), ("x+1", 9), ("M4", 2), ("M5", 2)]),
    ("C13", &[("x", 14), ("x+1", 14), ("M2", 2), ("M3", 2)]),
    ("D1", &[("x", 4), ("x+1", 5), ("M1", 4), ("S1", 1)]),
    ("D2", &[("x", 4), ("x+1", 5), ("M1", 5), ("S1", 2)]),
];

#[derive(Debug)]
pub struct Catalog {
    entries: Vec<NamedConstant>,
}

impl Catalog {
    fn build() -> std::result::Result<Catalog, String> {
        let mut entries = Vec::new();
        for &(name, text) in PRIMES {
            let poly: Poly = text.parse().map_err(|e| format!("{name}: {e}"))?;
            if !is_irreducible(&poly).unwrap_or(false) {
                return Err(format!("{name} is not irreducible"));
            }
            let kind = if name.starts_with('M') {
                if is_mersenne_prime(&poly).is_none() {
                    return Err(format!("{name} is not a Mersenne prime"));
                }
                ConstantKind::MersennePrime
            } else {
                ConstantKind::Prime
            };
            entries.push(NamedConstant {
                name,
                kind,
                factorization: Factorization::from_prime_powers([PrimePower::new(poly.clone(), 1)]),
                poly,
                symbolic: name.to_string(),
            });
        }
        for &(name, shape) in BUPS {
            let mut parts = Vec::new();
            let mut symbolic = Vec::new();
            for &(prime, exp) in shape {
                let p = match prime {
                    "x" => Poly::x(),
                    "x+1" => Poly::x_plus_one(),
                    other => entries
                        .iter()
                        .find(|e: &&NamedConstant| e.name == other)
                        .map(|e| e.poly.clone())
                        .ok_or_else(|| format!("{name}: unknown prime {other}"))?,
                };
                parts.push(PrimePower::new(p, exp));
                let base = if prime == "x+1" { "(x+1)".to_string() } else { prime.to_string() };
                symbolic.push(if exp == 1 { base } else { format!("{base}^{exp}") });
            }
            let factorization = Factorization::from_prime_powers(parts);
            let poly = factorization.source().clone();
            if sigma_bistar_of(&factorization) != poly {
                return Err(format!("{name} is not bi-unitary perfect"));
            }
            entries.push(NamedConstant {
                name,
                kind: ConstantKind::Bup,
                poly,
                factorization,
                symbolic: symbolic.join("*"),
            });
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[NamedConstant] {
        &self.entries
    }

    /// The bi-unitary perfect entries C1..C13, D1, D2 in table order.
    pub fn bups(&self) -> impl Iterator<Item = &NamedConstant> {
        self.entries.iter().filter(|e| e.kind == ConstantKind::Bup)
    }

    /// Case-insensitive lookup; a leading `@` is ignored.
    pub fn get(&self, name: &str) -> Option<&NamedConstant> {
        let name = name.strip_prefix('@').unwrap_or(name);
        self.entries.iter().find(|e| e.name.eq_ignore_ascii_case(name))
    }

    pub fn lookup(&self, name: &str) -> Result<&Poly> {
        self.get(name).map(|e| &e.poly).ok_or_else(|| Error::UnknownConstant(name.to_string()))
    }

    /// Name of the catalog entry equal to `p`, if any.
    pub fn label_of(&self, p: &Poly) -> Option<&'static str> {
        self.entries.iter().find(|e| &e.poly == p).map(|e| e.name)
    }
}

/// The shared, self-checked catalog.
pub fn named_constants() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::build().unwrap_or_else(|e| panic!("catalog self-check failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn lookups() {
        let cat = named_constants();
        assert_eq!(cat.lookup("M5").unwrap(), &p("1+x^3+x^4"));
        assert_eq!(cat.lookup("@c6").unwrap(), &p("x^7*(x+1)^8*(1+x^3+x^4)"));
        assert_eq!(cat.lookup("D1").unwrap(), &p("x^4*(x+1)^5*(1+x+x^2)^4*(1+x+x^4)"));
        assert_eq!(cat.lookup("C14"), Err(Error::UnknownConstant("C14".into())));
    }

    #[test]
    fn table_shape() {
        let cat = named_constants();
        assert_eq!(cat.entries().len(), 21);
        assert_eq!(cat.bups().count(), 15);
        assert_eq!(cat.get("C6").unwrap().symbolic, "x^7*(x+1)^8*M5");
        assert_eq!(cat.get("C1").unwrap().factorization.to_string(), "x^3*(x+1)^4*(x^2+x+1)");
    }

    #[test]
    fn m3_and_m5_are_conjugates() {
        let cat = named_constants();
        assert_eq!(cat.lookup("M2").unwrap().translate(), *cat.lookup("M3").unwrap());
        assert_eq!(cat.lookup("M4").unwrap().translate(), *cat.lookup("M5").unwrap());
        assert_eq!(cat.lookup("M1").unwrap().translate(), *cat.lookup("M1").unwrap());
        assert_eq!(cat.lookup("S1").unwrap().translate(), *cat.lookup("S1").unwrap());
    }

    #[test]
    fn labels() {
        let cat = named_constants();
        let c13 = cat.lookup("C13").unwrap().clone();
        assert_eq!(cat.label_of(&c13), Some("C13"));
        assert_eq!(cat.label_of(&p("x^9")), None);
    }
}
