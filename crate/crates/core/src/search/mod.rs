//! Exhaustive classification of bi-unitary perfect polynomials with at most
//! four distinct prime factors.
//!
//! Two independent routes are provided. The bounded searches walk explicit
//! exponent lists and prime pools narrowed down by hand, and are cheap even
//! at large degrees. [`blind_search`] assumes nothing beyond `x(x+1) | A` and
//! enumerates every candidate up to a degree bound. [`verify_theorems`] runs
//! both and compares them with the conjugate-closed catalog.

mod blind;
mod bounded;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::catalog::named_constants;
use crate::factor::{Factorization, PrimePower};
use crate::poly::Poly;
use crate::sigma::sigma_bistar_of;

pub use blind::{
    blind_search, blind_search_with, odd_irreducibles_up_to, BlindConfig, DEFAULT_DEGREE_CEILING,
};
pub use bounded::{
    omega3_space, omega4_mersenne_space, omega4_nonmersenne_spaces, run_space, search_omega3,
    search_omega4_mersenne, search_omega4_nonmersenne,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CaseId {
    #[serde(rename = "omega3")]
    Omega3,
    #[serde(rename = "omega4_mersenne")]
    Omega4Mersenne,
    #[serde(rename = "omega4_nonmersenne")]
    Omega4NonMersenne,
    /// `PQ = σ(x^(2m))`
    #[serde(rename = "omega4_nonmersenne_PQ")]
    Omega4NonMersennePQ,
    /// `Q = σ(x^(2m))`
    #[serde(rename = "omega4_nonmersenne_Q")]
    Omega4NonMersenneQ,
    /// `Q = σ(P^(2m))`
    #[serde(rename = "omega4_nonmersenne_QP")]
    Omega4NonMersenneQP,
    #[serde(rename = "blind")]
    Blind,
}

impl CaseId {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::Omega3 => "omega3",
            CaseId::Omega4Mersenne => "omega4_mersenne",
            CaseId::Omega4NonMersenne => "omega4_nonmersenne",
            CaseId::Omega4NonMersennePQ => "omega4_nonmersenne_PQ",
            CaseId::Omega4NonMersenneQ => "omega4_nonmersenne_Q",
            CaseId::Omega4NonMersenneQP => "omega4_nonmersenne_QP",
            CaseId::Blind => "blind",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite candidate set `x^a (x+1)^b P^c [Q^d]`.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub case_id: CaseId,
    /// Odd prime choices, each one `[P]` or `[P, Q]`.
    pub prime_pool: Vec<Vec<Poly>>,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    /// Empty when the pool entries hold a single prime.
    pub d: Vec<u32>,
}

impl SearchSpace {
    pub fn candidate_count(&self) -> u64 {
        let per_choice = (self.a.len() * self.b.len() * self.c.len()) as u64;
        self.prime_pool
            .iter()
            .map(|primes| per_choice * if primes.len() == 2 { self.d.len() as u64 } else { 1 })
            .sum()
    }
}

/// How a report's candidate set was described.
#[derive(Debug, Clone)]
pub enum SpaceDescription {
    Bounded(SearchSpace),
    Blind { max_degree: usize, max_omega: usize, odd_primes: usize },
    Union,
}

/// A verified bi-unitary perfect polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BupRecord {
    pub poly: Poly,
    pub factorization: Factorization,
    pub omega: usize,
    pub degree: usize,
    pub label: Option<&'static str>,
    pub conjugate_label: Option<&'static str>,
}

impl BupRecord {
    /// Wraps a factorization, or returns `None` if it is not bi-unitary perfect.
    pub fn from_factorization(factorization: Factorization) -> Option<BupRecord> {
        let poly = factorization.source().clone();
        if poly.degree().unwrap_or(0) == 0 || sigma_bistar_of(&factorization) != poly {
            return None;
        }
        let catalog = named_constants();
        Some(BupRecord {
            omega: factorization.omega(),
            degree: poly.degree().expect("nonconstant"),
            label: catalog.label_of(&poly),
            conjugate_label: catalog.label_of(&poly.translate()),
            factorization,
            poly,
        })
    }

    pub fn from_poly(poly: &Poly) -> Option<BupRecord> {
        BupRecord::from_factorization(crate::factor::factorize(poly).ok()?)
    }

    pub fn translate(&self) -> BupRecord {
        BupRecord::from_factorization(self.factorization.translate())
            .expect("translation preserves the bi-unitary perfect property")
    }

    /// `x^a(x+1)^b*...` with catalog names where they apply.
    pub fn display_name(&self) -> String {
        match (self.label, self.conjugate_label) {
            (Some(l), _) => l.to_string(),
            (None, Some(c)) => format!("~{c}"),
            (None, None) => self.factorization.to_string(),
        }
    }
}

/// Adds the translate of every record, deduplicates, and sorts by degree then mask.
pub fn conjugate_closure(records: &[BupRecord]) -> Vec<BupRecord> {
    let mut by_poly: BTreeMap<Poly, BupRecord> = BTreeMap::new();
    for r in records {
        let t = r.translate();
        by_poly.entry(r.poly.clone()).or_insert_with(|| r.clone());
        by_poly.entry(t.poly.clone()).or_insert(t);
    }
    by_poly.into_values().collect()
}

/// Indecomposable: no split of the prime powers into two nonempty coprime
/// parts leaves both parts bi-unitary perfect.
pub fn is_ibup(record: &BupRecord) -> bool {
    !has_perfect_split(&record.factorization, |part| sigma_bistar_of(part) == *part.source())
}

fn has_perfect_split(f: &Factorization, mut perfect: impl FnMut(&Factorization) -> bool) -> bool {
    let factors = f.factors();
    let n = factors.len();
    if n < 2 {
        return false;
    }
    let part = |mask: u32, keep: bool| {
        Factorization::from_prime_powers(
            factors
                .iter()
                .enumerate()
                .filter(|(i, _)| ((mask >> i) & 1 == 1) == keep)
                .map(|(_, pp)| pp.clone()),
        )
    };
    (1..(1u32 << n) - 1).any(|mask| perfect(&part(mask, true)) && perfect(&part(mask, false)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub missing: Vec<Poly>,
    pub unexpected: Vec<Poly>,
}

impl Verdict {
    pub fn compare(hits: &[BupRecord], expected: &[Poly]) -> Verdict {
        let got: Vec<&Poly> = hits.iter().map(|h| &h.poly).collect();
        let missing: Vec<Poly> = expected.iter().filter(|p| !got.contains(p)).cloned().collect();
        let unexpected: Vec<Poly> =
            got.iter().filter(|p| !expected.contains(p)).map(|p| (*p).clone()).collect();
        Verdict { pass: missing.is_empty() && unexpected.is_empty(), missing, unexpected }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub case_id: CaseId,
    pub space: SpaceDescription,
    pub hits: Vec<BupRecord>,
    pub candidate_count: u64,
    pub elapsed: Duration,
    pub expected: Vec<Poly>,
    pub verdict: Verdict,
    pub subcases: Vec<SearchReport>,
}

impl SearchReport {
    pub fn passed(&self) -> bool {
        self.verdict.pass && self.subcases.iter().all(SearchReport::passed)
    }
}

/// Conjugate closure of the named catalog entries, as sorted polynomials.
pub fn expected_closure(names: &[&str]) -> Vec<Poly> {
    let catalog = named_constants();
    let records: Vec<BupRecord> = names
        .iter()
        .map(|n| {
            let e = catalog.get(n).unwrap_or_else(|| panic!("catalog entry {n}"));
            BupRecord::from_factorization(e.factorization.clone()).expect("catalog entries are b.u.p.")
        })
        .collect();
    conjugate_closure(&records).into_iter().map(|r| r.poly).collect()
}

/// `x^a (x+1)^a` for the exponents that make it bi-unitary perfect:
/// `a = 2` and `a = 2^n - 1`.
pub fn omega2_family(max_degree: usize) -> Vec<Poly> {
    let mut exps = vec![2usize];
    exps.extend((1..usize::BITS).map(|n| (1usize << n) - 1).take_while(|&a| 2 * a <= max_degree));
    let mut out: Vec<Poly> = exps
        .into_iter()
        .filter(|&a| 2 * a <= max_degree)
        .map(|a| Poly::x().mul(&Poly::x_plus_one()).pow(a as u64))
        .collect();
    out.sort();
    out
}

/// Every polynomial the catalog (closed under translation) and the ω = 2
/// family predict within the given degree and ω bounds.
pub fn expected_up_to(max_degree: usize, max_omega: usize) -> Vec<Poly> {
    let catalog = named_constants();
    let names: Vec<&str> = catalog.bups().map(|e| e.name).collect();
    let mut out: Vec<Poly> = expected_closure(&names)
        .into_iter()
        .filter(|p| p.degree().unwrap_or(0) <= max_degree)
        .filter(|p| crate::factor::omega(p).unwrap_or(usize::MAX) <= max_omega)
        .collect();
    if max_omega >= 2 {
        out.extend(omega2_family(max_degree));
    }
    out.sort();
    out.dedup();
    out
}

/// Result of checking every named entry and its translate.
#[derive(Debug, Clone)]
pub struct CatalogCheck {
    pub entries: Vec<(&'static str, bool, bool)>,
}

impl CatalogCheck {
    pub fn run() -> CatalogCheck {
        let catalog = named_constants();
        let entries = catalog
            .bups()
            .map(|e| {
                let direct = sigma_bistar_of(&e.factorization) == e.poly;
                let t = e.factorization.translate();
                let conj = sigma_bistar_of(&t) == *t.source();
                (e.name, direct, conj)
            })
            .collect();
        CatalogCheck { entries }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|&(_, a, b)| a && b)
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub catalog: CatalogCheck,
    pub reports: Vec<SearchReport>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.catalog.passed() && self.reports.iter().all(SearchReport::passed)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// `None` skips the blind completeness check.
    pub blind: Option<BlindConfig>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { blind: Some(BlindConfig::default()) }
    }
}

/// Runs the catalog self-check, all bounded searches and the blind search with default bounds.
pub fn verify_theorems() -> VerificationReport {
    verify_theorems_with(&VerifyOptions::default())
}

pub fn verify_theorems_with(opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let catalog = CatalogCheck::run();
    let mut reports = vec![search_omega3(), search_omega4_mersenne(), search_omega4_nonmersenne()];
    if let Some(cfg) = &opts.blind {
        reports.push(blind_search_with(cfg).expect("default blind bounds are valid"));
    }
    VerificationReport { catalog, reports, elapsed: start.elapsed() }
}

pub(crate) fn prime_power_record(parts: Vec<PrimePower>) -> Option<BupRecord> {
    BupRecord::from_factorization(Factorization::from_prime_powers(parts))
}
