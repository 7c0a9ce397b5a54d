//! Divisor sums σ, σ*, σ** and the perfectness predicates built on them.
//!
//! All three functions are multiplicative, so each is evaluated prime power by
//! prime power over a [`Factorization`]. σ** uses the closed forms
//!
//! ```text
//! σ**(T^(2n))   = (1+T) · σ(T^n) · σ(T^(n-1))
//! σ**(T^(2n+1)) = σ(T^(2n+1))
//! ```
//!
//! [`sigma_bistar_oracle`] instead sums the bi-unitary divisors one by one,
//! deciding unitarity with Euclid's gcd. It exists to cross-check the closed
//! forms and shares no code path with them beyond the factorization.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::factor::{factorize, Factorization, PrimePower};
use crate::poly::Poly;

/// Default ceiling on the number of divisors [`enumerate_divisors`] will visit.
pub const DEFAULT_DIVISOR_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorKind {
    All,
    Unitary,
    Biunitary,
}

/// `1 + T + ... + T^n`.
pub fn sigma_prime_power(pp: &PrimePower) -> Poly {
    geometric_sum(&pp.prime, pp.exp)
}

fn geometric_sum(t: &Poly, n: u32) -> Poly {
    let mut acc = Poly::one();
    for _ in 0..n {
        acc = acc.mul(t);
        acc += &Poly::one();
    }
    acc
}

pub fn sigma_star_prime_power(pp: &PrimePower) -> Poly {
    &pp.expand() + &Poly::one()
}

pub fn sigma_bistar_prime_power(pp: &PrimePower) -> Poly {
    let t = &pp.prime;
    match pp.exp {
        0 => Poly::one(),
        e if e % 2 == 1 => geometric_sum(t, e),
        e => {
            let n = e / 2;
            (t + &Poly::one()).mul(&geometric_sum(t, n)).mul(&geometric_sum(t, n - 1))
        }
    }
}

pub fn sigma_of(f: &Factorization) -> Poly {
    f.factors().iter().map(sigma_prime_power).product()
}

pub fn sigma_star_of(f: &Factorization) -> Poly {
    f.factors().iter().map(sigma_star_prime_power).product()
}

pub fn sigma_bistar_of(f: &Factorization) -> Poly {
    f.factors().iter().map(sigma_bistar_prime_power).product()
}

fn factor_nonzero(s: &Poly, op: &'static str) -> Result<Factorization> {
    if s.is_zero() {
        return Err(Error::ZeroInput { op });
    }
    factorize(s)
}

/// Sum of all divisors of `s`.
pub fn sigma(s: &Poly) -> Result<Poly> {
    Ok(sigma_of(&factor_nonzero(s, "sigma")?))
}

/// Sum of the unitary divisors of `s`.
pub fn sigma_star(s: &Poly) -> Result<Poly> {
    Ok(sigma_star_of(&factor_nonzero(s, "sigma_star")?))
}

/// Sum of the bi-unitary divisors of `s`, via the per-prime-power closed forms.
pub fn sigma_bistar(s: &Poly) -> Result<Poly> {
    Ok(sigma_bistar_of(&factor_nonzero(s, "sigma_bistar")?))
}

/// Greatest common unitary divisor: the product of `p^k` over the primes
/// occurring to the same power `k` in both arguments.
pub fn gcd_unitary(s: &Poly, t: &Poly) -> Result<Poly> {
    let fs = factor_nonzero(s, "gcd_unitary")?;
    let ft = factor_nonzero(t, "gcd_unitary")?;
    Ok(fs.factors().iter().filter(|pp| ft.exponent_of(&pp.prime) == pp.exp).map(PrimePower::expand).product())
}

pub fn is_bup(s: &Poly) -> bool {
    !s.is_zero() && sigma_bistar(s).is_ok_and(|v| &v == s)
}

pub fn is_perfect(s: &Poly) -> bool {
    !s.is_zero() && sigma(s).is_ok_and(|v| &v == s)
}

pub fn is_unitary_perfect(s: &Poly) -> bool {
    !s.is_zero() && sigma_star(s).is_ok_and(|v| &v == s)
}

pub fn enumerate_divisors(s: &Poly, kind: DivisorKind) -> Result<Vec<Poly>> {
    enumerate_divisors_capped(s, kind, DEFAULT_DIVISOR_CAP)
}

/// Divisors of `s` of the requested kind, sorted by degree then mask.
pub fn enumerate_divisors_capped(s: &Poly, kind: DivisorKind, cap: u64) -> Result<Vec<Poly>> {
    let f = factor_nonzero(s, "enumerate_divisors")?;
    let count: u128 = f.factors().iter().map(|pp| u128::from(pp.exp) + 1).product();
    if count > u128::from(cap) {
        return Err(Error::DivisorCapExceeded { count, cap });
    }
    let mut lattice = DivisorLattice::new(&f);
    let full = lattice.exps.clone();
    let mut out = Vec::new();
    for k in &exponent_vectors(&full) {
        let keep = match kind {
            DivisorKind::All => true,
            DivisorKind::Unitary => lattice.is_unitary_in(k, &full),
            DivisorKind::Biunitary => lattice.is_biunitary(k),
        };
        if keep {
            out.push(lattice.value(k));
        }
    }
    out.sort();
    Ok(out)
}

/// XOR-sum of every bi-unitary divisor.
pub fn sigma_bistar_oracle(s: &Poly) -> Result<Poly> {
    sigma_bistar_oracle_capped(s, DEFAULT_DIVISOR_CAP)
}

pub fn sigma_bistar_oracle_capped(s: &Poly, cap: u64) -> Result<Poly> {
    Ok(enumerate_divisors_capped(s, DivisorKind::Biunitary, cap)?.iter().sum())
}

/// Divisors addressed by exponent vectors over the primes of one polynomial.
struct DivisorLattice {
    primes: Vec<Poly>,
    exps: Vec<u32>,
    cache: HashMap<Vec<u32>, Poly>,
}

impl DivisorLattice {
    fn new(f: &Factorization) -> Self {
        DivisorLattice {
            primes: f.factors().iter().map(|pp| pp.prime.clone()).collect(),
            exps: f.factors().iter().map(|pp| pp.exp).collect(),
            cache: HashMap::new(),
        }
    }

    fn value(&mut self, k: &[u32]) -> Poly {
        if let Some(v) = self.cache.get(k) {
            return v.clone();
        }
        let v: Poly = self.primes.iter().zip(k).map(|(p, &e)| p.pow(u64::from(e))).product();
        self.cache.insert(k.to_vec(), v.clone());
        v
    }

    /// Is the divisor `k` of the divisor `of` unitary in it, i.e. gcd(D, of/D) = 1?
    fn is_unitary_in(&mut self, k: &[u32], of: &[u32]) -> bool {
        let d = self.value(k);
        let co: Vec<u32> = of.iter().zip(k).map(|(a, b)| a - b).collect();
        let c = self.value(&co);
        d.gcd(&c).expect("divisors are nonzero").is_one()
    }

    fn unitary_divisors_of(&mut self, of: &[u32]) -> Vec<Poly> {
        let mut out = Vec::new();
        for k in exponent_vectors(of) {
            if self.is_unitary_in(&k, of) {
                out.push(self.value(&k));
            }
        }
        out
    }

    /// gcd_u(D, S/D) = 1, with gcd_u taken as the largest polynomial that is a
    /// unitary divisor of both D and S/D.
    fn is_biunitary(&mut self, k: &[u32]) -> bool {
        let co: Vec<u32> = self.exps.iter().zip(k).map(|(a, b)| a - b).collect();
        let ud = self.unitary_divisors_of(k);
        let uc = self.unitary_divisors_of(&co);
        let greatest =
            ud.iter().filter(|d| uc.contains(d)).max().expect("1 is always a common unitary divisor");
        greatest.is_one()
    }
}

fn exponent_vectors(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}
