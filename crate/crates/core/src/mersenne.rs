//! Mersenne primes over F2: irreducible polynomials `1 + x^a (x+1)^b` with `gcd(a, b) = 1`.

use rayon::prelude::*;

use crate::factor::{factorize, is_irreducible};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MersennePrime {
    pub poly: Poly,
    pub a: u32,
    pub b: u32,
}

impl MersennePrime {
    /// `1 + x^a (x+1)^b`, without any irreducibility check.
    pub fn shape(a: u32, b: u32) -> Poly {
        let mut p = Poly::x().pow(u64::from(a)).mul(&Poly::x_plus_one().pow(u64::from(b)));
        p += &Poly::one();
        p
    }

    /// The conjugate `P(x+1)`, which is `1 + x^b (x+1)^a`.
    pub fn translate(&self) -> MersennePrime {
        MersennePrime { poly: self.poly.translate(), a: self.b, b: self.a }
    }
}

/// Recovers the witness `(a, b)` by factoring `p + 1`.
pub fn is_mersenne_prime(p: &Poly) -> Option<MersennePrime> {
    if !is_irreducible(p).ok()? {
        return None;
    }
    let shifted = p + &Poly::one();
    if shifted.is_zero() {
        return None;
    }
    let f = factorize(&shifted).ok()?;
    let a = f.exponent_of(&Poly::x());
    let b = f.exponent_of(&Poly::x_plus_one());
    let only_linear = f.factors().len() == usize::from(a > 0) + usize::from(b > 0);
    (only_linear && a >= 1 && b >= 1 && gcd(a, b) == 1).then(|| MersennePrime { poly: p.clone(), a, b })
}

/// Every Mersenne prime of degree at most `max_degree`, sorted by degree then mask.
pub fn enumerate_mersenne(max_degree: u32) -> Vec<MersennePrime> {
    let pairs: Vec<(u32, u32)> = (1..max_degree)
        .flat_map(|a| (1..=max_degree - a).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    let mut out: Vec<MersennePrime> = pairs
        .into_par_iter()
        .filter_map(|(a, b)| {
            let poly = MersennePrime::shape(a, b);
            is_irreducible(&poly).unwrap_or(false).then_some(MersennePrime { poly, a, b })
        })
        .collect();
    out.sort_by(|x, y| x.poly.cmp(&y.poly));
    out
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn recognises_m2_and_m4() {
        let m2 = is_mersenne_prime(&p("1+x+x^3")).unwrap();
        assert_eq!((m2.a, m2.b), (1, 2));
        let m4 = is_mersenne_prime(&p("1+x+x^2+x^3+x^4")).unwrap();
        assert_eq!((m4.a, m4.b), (1, 3));
    }

    #[test]
    fn rejects_s1_and_reducibles() {
        assert!(is_mersenne_prime(&p("1+x+x^4")).is_none());
        assert!(is_mersenne_prime(&p("x^2+1")).is_none());
        assert!(is_mersenne_prime(&Poly::x()).is_none());
        assert!(is_mersenne_prime(&Poly::x_plus_one()).is_none());
        assert!(is_mersenne_prime(&Poly::one()).is_none());
        assert!(is_mersenne_prime(&Poly::zero()).is_none());
    }

    #[test]
    fn enumerate_small() {
        let got: Vec<Poly> = enumerate_mersenne(3).into_iter().map(|m| m.poly).collect();
        assert_eq!(got, vec![p("x^2+x+1"), p("x^3+x+1"), p("x^3+x^2+1")]);
        let four: Vec<Poly> = enumerate_mersenne(4).into_iter().map(|m| m.poly).collect();
        for m in ["x^4+x^3+x^2+x+1", "x^4+x^3+1"] {
            assert!(four.contains(&p(m)));
        }
    }

    #[test]
    fn enumerated_entries_satisfy_invariants() {
        for m in enumerate_mersenne(16) {
            assert_eq!(gcd(m.a, m.b), 1);
            assert_eq!(MersennePrime::shape(m.a, m.b), m.poly);
            assert!(crate::factor::is_odd_poly(&m.poly));
            assert_eq!(is_mersenne_prime(&m.poly), Some(m.clone()));
        }
    }

    #[test]
    fn translate_swaps_witness() {
        let m4 = is_mersenne_prime(&p("1+x+x^2+x^3+x^4")).unwrap();
        let m5 = m4.translate();
        assert_eq!(m5.poly, p("1+x^3+x^4"));
        assert_eq!(is_mersenne_prime(&m5.poly), Some(m5));
    }
}
