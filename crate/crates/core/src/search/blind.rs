//! Blind search: every `x^a (x+1)^b O_1^e_1 ... O_k^e_k` up to a degree bound,
//! with `a, b >= 1`, the `O_i` distinct odd irreducibles, and `k <= max_omega - 2`.
//!
//! Odd parts are enumerated as multisets of prime powers drawn from a table of
//! odd irreducibles, never as raw masks. Everything stays in single words, so
//! the degree bound is capped well below 64.

use std::time::Instant;

use rayon::prelude::*;

use super::{expected_up_to, prime_power_record, BupRecord, CaseId, SearchReport, SpaceDescription, Verdict};
use crate::error::{Error, Result};
use crate::factor::PrimePower;
use crate::poly::{word, Poly};

pub const DEFAULT_DEGREE_CEILING: usize = 24;

/// Word arithmetic keeps products below x^64; the irreducible table makes
/// anything near that impractical long before.
const HARD_DEGREE_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlindConfig {
    pub max_degree: usize,
    pub max_omega: usize,
    pub ceiling: usize,
}

impl Default for BlindConfig {
    fn default() -> Self {
        BlindConfig { max_degree: 24, max_omega: 4, ceiling: DEFAULT_DEGREE_CEILING }
    }
}

/// All odd irreducible polynomials of degree `2..=max_degree`, sorted by degree then mask.
pub fn odd_irreducibles_up_to(max_degree: usize) -> Vec<u64> {
    assert!(max_degree < 64, "word-sized table");
    (2..=max_degree)
        .flat_map(|d| {
            let lo = 1u64 << d;
            // constant term set; p(1) = 1 needs odd weight
            (lo..lo << 1)
                .into_par_iter()
                .filter(|m| m & 1 == 1 && m.count_ones() % 2 == 1)
                .filter(|&m| word::is_irreducible(m))
                .collect::<Vec<u64>>()
        })
        .collect()
}

pub fn blind_search(max_degree: usize, max_omega: usize) -> Result<SearchReport> {
    blind_search_with(&BlindConfig { max_degree, max_omega, ..BlindConfig::default() })
}

#[derive(Clone, Copy)]
struct OddPower {
    prime: usize,
    exp: u32,
    degree: usize,
    value: u64,
    sigma: u64,
}

struct Tables {
    primes: Vec<u64>,
    /// Odd prime powers grouped by total degree.
    by_degree: Vec<Vec<OddPower>>,
    /// `x^a (x+1)^b` and its σ**, indexed `[a][b]`.
    even: Vec<Vec<(u64, u64)>>,
    max_degree: usize,
}

impl Tables {
    fn build(max_degree: usize) -> Tables {
        let odd_budget = max_degree.saturating_sub(2);
        let primes = odd_irreducibles_up_to(odd_budget.max(1));
        let mut by_degree = vec![Vec::new(); odd_budget + 1];
        for (idx, &p) in primes.iter().enumerate() {
            let deg = word::degree(p).expect("nonzero") as usize;
            let mut exp = 1u32;
            while deg * exp as usize <= odd_budget {
                by_degree[deg * exp as usize].push(OddPower {
                    prime: idx,
                    exp,
                    degree: deg * exp as usize,
                    value: word::pow(p, exp).expect("fits"),
                    sigma: word::sigma_bistar_prime_power(p, exp).expect("fits"),
                });
                exp += 1;
            }
        }
        let mut even = vec![vec![(0, 0); max_degree + 1]; max_degree + 1];
        for (a, row) in even.iter_mut().enumerate().skip(1) {
            for (b, cell) in row.iter_mut().enumerate().skip(1) {
                if a + b > max_degree {
                    continue;
                }
                let value = word::mul(word::pow(0b10, a as u32).unwrap(), word::pow(0b11, b as u32).unwrap())
                    .expect("fits");
                let sigma = word::mul(
                    word::sigma_bistar_prime_power(0b10, a as u32).unwrap(),
                    word::sigma_bistar_prime_power(0b11, b as u32).unwrap(),
                )
                .expect("fits");
                *cell = (value, sigma);
            }
        }
        Tables { primes, by_degree, even, max_degree }
    }

    /// Tests every `x^a (x+1)^b` against one odd part; returns the count tried.
    fn sweep(&self, odd: &[OddPower], hits: &mut Vec<BupRecord>) -> u64 {
        let degree: usize = odd.iter().map(|o| o.degree).sum();
        let value = odd.iter().fold(1u64, |acc, o| word::mul(acc, o.value).expect("fits"));
        let sigma = odd.iter().fold(1u64, |acc, o| word::mul(acc, o.sigma).expect("fits"));
        let room = self.max_degree - degree;
        let mut tried = 0;
        for a in 1..room {
            for b in 1..=room - a {
                tried += 1;
                let (ev, es) = self.even[a][b];
                if word::clmul(ev, value) == word::clmul(es, sigma) {
                    let mut parts = vec![
                        PrimePower::new(Poly::x(), a as u32),
                        PrimePower::new(Poly::x_plus_one(), b as u32),
                    ];
                    parts.extend(
                        odd.iter().map(|o| PrimePower::new(Poly::from_mask(self.primes[o.prime]), o.exp)),
                    );
                    hits.push(prime_power_record(parts).expect("word check passed"));
                }
            }
        }
        tried
    }

    /// Extends `prefix` with prime powers of strictly larger prime index.
    fn extend(&self, prefix: &mut Vec<OddPower>, slots: usize, hits: &mut Vec<BupRecord>) -> u64 {
        let used: usize = prefix.iter().map(|o| o.degree).sum();
        let mut tried = self.sweep(prefix, hits);
        if slots == 0 {
            return tried;
        }
        let min_prime = prefix.last().map_or(0, |o| o.prime + 1);
        let budget = self.max_degree.saturating_sub(2 + used);
        for group in self.by_degree.iter().take(budget + 1) {
            for o in group.iter().filter(|o| o.prime >= min_prime) {
                prefix.push(*o);
                tried += self.extend(prefix, slots - 1, hits);
                prefix.pop();
            }
        }
        tried
    }
}

pub fn blind_search_with(cfg: &BlindConfig) -> Result<SearchReport> {
    if cfg.max_degree > cfg.ceiling || cfg.max_degree > HARD_DEGREE_LIMIT {
        return Err(Error::DegreeCeiling {
            requested: cfg.max_degree,
            ceiling: cfg.ceiling.min(HARD_DEGREE_LIMIT),
        });
    }
    if !(2..=4).contains(&cfg.max_omega) {
        return Err(Error::OmegaOutOfRange(cfg.max_omega));
    }
    let start = Instant::now();
    let max_degree = cfg.max_degree.max(2);
    let tables = Tables::build(max_degree);
    let slots = cfg.max_omega - 2;

    // ω = 2 candidates, then one parallel task per leading odd prime power
    let mut hits = Vec::new();
    let mut candidate_count = if cfg.max_degree >= 2 { tables.sweep(&[], &mut hits) } else { 0 };
    if slots > 0 {
        let leaders: Vec<OddPower> = tables.by_degree.iter().flatten().copied().collect();
        let (count, found) = leaders
            .par_iter()
            .map(|lead| {
                let mut local = Vec::new();
                let mut prefix = vec![*lead];
                let n = tables.extend(&mut prefix, slots - 1, &mut local);
                (n, local)
            })
            .reduce(
                || (0, Vec::new()),
                |(n1, mut h1), (n2, h2)| {
                    h1.extend(h2);
                    (n1 + n2, h1)
                },
            );
        candidate_count += count;
        hits.extend(found);
    }
    hits.sort_by(|l, r| l.poly.cmp(&r.poly));
    hits.dedup_by(|l, r| l.poly == r.poly);

    let expected = expected_up_to(cfg.max_degree, cfg.max_omega);
    let verdict = Verdict::compare(&hits, &expected);
    Ok(SearchReport {
        case_id: CaseId::Blind,
        space: SpaceDescription::Blind {
            max_degree: cfg.max_degree,
            max_omega: cfg.max_omega,
            odd_primes: tables.primes.len(),
        },
        hits,
        candidate_count,
        elapsed: start.elapsed(),
        expected,
        verdict,
        subcases: Vec::new(),
    })
}
