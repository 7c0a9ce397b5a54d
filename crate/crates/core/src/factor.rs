//! Irreducibility testing and complete factorization over F2.
//!
//! `factorize` runs squarefree decomposition (formal derivative, with square
//! roots when the derivative vanishes), then distinct-degree splitting, then
//! equal-degree splitting with the trace map. The equal-degree step draws its
//! splitting elements from a ChaCha8 stream seeded with [`EDF_SEED`], so the
//! output never depends on run-to-run randomness. Primes are sorted by
//! degree and then mask, which makes the result canonical regardless.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{word, Poly};

/// Seed of the equal-degree splitting stream.
pub const EDF_SEED: u64 = 0x6266_3262_7570_2121;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub prime: Poly,
    pub exp: u32,
}

impl PrimePower {
    pub fn new(prime: Poly, exp: u32) -> Self {
        PrimePower { prime, exp }
    }

    pub fn expand(&self) -> Poly {
        self.prime.pow(u64::from(self.exp))
    }
}

/// A polynomial together with its canonical prime-power decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<PrimePower>,
    source: Poly,
}

impl Factorization {
    /// Builds a factorization from prime powers the caller knows to be
    /// irreducible. Repeated primes are merged and zero exponents dropped.
    pub fn from_prime_powers(parts: impl IntoIterator<Item = PrimePower>) -> Self {
        let mut factors: Vec<PrimePower> = parts.into_iter().filter(|pp| pp.exp > 0).collect();
        factors.sort();
        let mut merged: Vec<PrimePower> = Vec::with_capacity(factors.len());
        for pp in factors {
            match merged.last_mut() {
                Some(last) if last.prime == pp.prime => last.exp += pp.exp,
                _ => merged.push(pp),
            }
        }
        let source = merged.iter().map(PrimePower::expand).product();
        Factorization { factors: merged, source }
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn source(&self) -> &Poly {
        &self.source
    }

    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of `prime`, or 0 when it does not occur.
    pub fn exponent_of(&self, prime: &Poly) -> u32 {
        self.factors.iter().find(|pp| &pp.prime == prime).map_or(0, |pp| pp.exp)
    }

    pub fn expand(&self) -> Poly {
        self.factors.iter().map(PrimePower::expand).product()
    }

    /// The factorization of `source(x+1)`; translation permutes irreducibles.
    pub fn translate(&self) -> Factorization {
        Factorization::from_prime_powers(
            self.factors.iter().map(|pp| PrimePower::new(pp.prime.translate(), pp.exp)),
        )
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str(if self.source.is_zero() { "0" } else { "1" });
        }
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if pp.prime == Poly::x() {
                f.write_str("x")?;
            } else {
                write!(f, "({})", pp.prime)?;
            }
            if pp.exp > 1 {
                write!(f, "^{}", pp.exp)?;
            }
        }
        Ok(())
    }
}

/// True iff `p` is irreducible over F2. Constants are rejected.
pub fn is_irreducible(p: &Poly) -> Result<bool> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::ConstantInput { op: "is_irreducible" }),
        Some(n) => n,
    };
    if let Some(w) = p.to_u64() {
        return Ok(word::is_irreducible(w));
    }
    if !p.eval_at_zero() {
        return Ok(false);
    }
    let x = Poly::x();
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for k in 0..n {
        let next = frob[k].square_mod(p)?;
        frob.push(next);
    }
    if frob[n] != x {
        return Ok(false);
    }
    for q in word::prime_divisors(n) {
        let h = &frob[n / q] + &x;
        if !p.gcd(&h)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `gcd(p, x(x+1)) = 1`, i.e. `p(0) = p(1) = 1`.
pub fn is_odd_poly(p: &Poly) -> bool {
    p.eval_at_zero() && p.eval_at_one()
}

pub fn omega(p: &Poly) -> Result<usize> {
    Ok(factorize(p)?.omega())
}

pub fn factorize(p: &Poly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroInput { op: "factorize" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut parts = Vec::new();
    for (sqfree, mult) in squarefree_decomposition(p)? {
        for (block, d) in distinct_degree(&sqfree)? {
            for prime in equal_degree(&block, d, &mut rng)? {
                parts.push(PrimePower::new(prime, mult));
            }
        }
    }
    let f = Factorization::from_prime_powers(parts);
    debug_assert_eq!(&f.source, p);
    Ok(f)
}

/// Squarefree parts with their multiplicities. Every returned part is
/// nonconstant and squarefree; parts are pairwise coprime.
fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    if df.is_zero() {
        let root = f.sqrt().expect("zero derivative implies a square in F2[x]");
        for (h, m) in squarefree_decomposition(&root)? {
            out.push((h, 2 * m));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&df)?;
    let mut w = f.div_exact(&c).expect("gcd divides f");
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.div_exact(&y).expect("gcd divides w");
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.div_exact(&y).expect("gcd divides c");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        let root = c.sqrt().expect("remaining cofactor is a square in F2[x]");
        for (h, m) in squarefree_decomposition(&root)? {
            out.push((h, 2 * m));
        }
    }
    Ok(out)
}

/// Splits a squarefree polynomial into products of irreducibles sharing a degree.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    let x = Poly::x();
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.square_mod(&rest)?;
        let g = rest.gcd(&(&h + &x))?;
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Splits a squarefree product of degree-`d` irreducibles into its primes.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().expect("nonzero block");
    if n == d {
        return Ok(vec![f.clone()]);
    }
    loop {
        let a = random_below(n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // absolute trace: a + a^2 + ... + a^(2^(d-1)) mod f
        let mut t = a.clone();
        let mut acc = a;
        for _ in 1..d {
            t = t.square_mod(f)?;
            acc += &t;
        }
        let g = f.gcd(&acc)?;
        if g.is_one() || &g == f {
            continue;
        }
        let co = f.div_exact(&g).expect("gcd divides");
        let mut out = equal_degree(&g, d, rng)?;
        out.extend(equal_degree(&co, d, rng)?);
        return Ok(out);
    }
}

fn random_below(n: usize, rng: &mut ChaCha8Rng) -> Poly {
    let words = n.div_ceil(64);
    let mut limbs: Vec<u64> = (0..words).map(|_| rng.gen()).collect();
    if !n.is_multiple_of(64) {
        let last = limbs.last_mut().expect("n >= 1");
        *last &= (1u64 << (n % 64)) - 1;
    }
    Poly::from_limbs(limbs)
}
