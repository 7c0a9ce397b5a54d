//! Searches over explicit exponent lists and prime pools.
//!
//! Every list here is a superset of the values a solution can take in its
//! case. Where the narrowing argument splits by parity (a even, b odd, both
//! odd, ...), the lists take the union over all sub-cases for both `a` and
//! `b`, so the space is symmetric under `x <-> x+1`.

use std::time::Instant;

use rayon::prelude::*;

use super::{
    expected_closure, prime_power_record, BupRecord, CaseId, SearchReport, SearchSpace, SpaceDescription,
    Verdict,
};
use crate::catalog::named_constants;
use crate::factor::PrimePower;
use crate::poly::Poly;
use crate::sigma::sigma_bistar_prime_power;

/// `{2^β v - 1}` for the given ranges of β and odd v.
fn two_power_shape(betas: &[u32], vs: &[u32]) -> Vec<u32> {
    betas.iter().flat_map(|&beta| vs.iter().map(move |&v| (1 << beta) * v - 1)).collect()
}

fn union(parts: &[&[u32]]) -> Vec<u32> {
    let mut out: Vec<u32> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn named(name: &str) -> Poly {
    named_constants().lookup(name).expect("catalog prime").clone()
}

/// Adds the conjugate of every pool entry so the space is closed under translation.
fn with_conjugates(pool: Vec<Vec<Poly>>) -> Vec<Vec<Poly>> {
    let mut out = pool.clone();
    for primes in pool {
        let t: Vec<Poly> = primes.iter().map(Poly::translate).collect();
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// `x^a (x+1)^b P^c` with P in {M1, M4, M5}.
pub fn omega3_space() -> SearchSpace {
    let even = [4, 6, 8, 10];
    let odd_small = [1, 3, 5, 7, 9];
    let odd_shaped = two_power_shape(&[1, 2, 3], &[1, 3, 5]);
    let ab = union(&[&even, &odd_small, &odd_shaped]);
    SearchSpace {
        case_id: CaseId::Omega3,
        prime_pool: ["M1", "M4", "M5"].iter().map(|n| vec![named(n)]).collect(),
        a: ab.clone(),
        b: ab,
        // c = 2 or 2^γ - 1; 15 and 31 are beyond the bound c <= min(a, b) but cost nothing
        c: vec![1, 2, 3, 7, 15, 31],
        d: Vec::new(),
    }
}

/// `x^a (x+1)^b P^c Q^d` with P != Q both among M1..M5.
pub fn omega4_mersenne_space() -> SearchSpace {
    let even = [4, 6, 8, 10, 12, 14];
    let odd_small = [1, 3, 5, 7, 9, 11, 13];
    let odd_shaped = two_power_shape(&[1, 2, 3], &[1, 3, 5, 7]);
    let ab = union(&[&even, &odd_small, &odd_shaped]);
    let names = ["M1", "M2", "M3", "M4", "M5"];
    let mut pool = Vec::new();
    for (i, p) in names.iter().enumerate() {
        for q in &names[i + 1..] {
            pool.push(vec![named(p), named(q)]);
        }
    }
    SearchSpace {
        case_id: CaseId::Omega4Mersenne,
        prime_pool: pool,
        a: ab.clone(),
        b: ab,
        c: vec![1, 2, 3, 7, 15],
        d: vec![1, 2, 3, 7, 15],
    }
}

/// The three ω = 4 spaces where Q is not a Mersenne prime, keyed by how Q arises.
pub fn omega4_nonmersenne_spaces() -> Vec<SearchSpace> {
    let m1 = named("M1");
    let m4 = named("M4");
    let x = Poly::x();
    let x1 = Poly::x_plus_one();
    // 1 + x^u (x+1)^v P^w
    let shifted = |u: u64, v: u64, p: &Poly, w: u64| {
        let mut q = x.pow(u).mul(&x1.pow(v)).mul(&p.pow(w));
        q += &Poly::one();
        q
    };
    let range = |lo: u32, hi: u32| (lo..=hi).collect::<Vec<u32>>();

    // PQ = σ(x^8): Q = 1 + x^3 (x^3 + 1)
    let pq = SearchSpace {
        case_id: CaseId::Omega4NonMersennePQ,
        prime_pool: with_conjugates(vec![vec![m1.clone(), shifted(3, 1, &m1, 1)]]),
        a: range(1, 16),
        b: range(1, 16),
        c: range(1, 7),
        d: range(1, 3),
    };
    // Q = σ(x^12) with P = M1, or Q = σ(x^10) with P = M4
    let q = SearchSpace {
        case_id: CaseId::Omega4NonMersenneQ,
        prime_pool: with_conjugates(vec![
            vec![m1.clone(), shifted(1, 3, &m1, 4)],
            vec![m4.clone(), shifted(1, 1, &m4, 2)],
        ]),
        a: range(1, 26),
        b: range(1, 26),
        c: vec![1, 2, 3, 7, 15],
        d: range(1, 3),
    };
    // Q = σ(M1^2) or σ(M1^4)
    let qp = SearchSpace {
        case_id: CaseId::Omega4NonMersenneQP,
        prime_pool: with_conjugates(vec![
            vec![m1.clone(), shifted(1, 1, &m1, 1)],
            vec![m1.clone(), shifted(3, 3, &m1, 1)],
        ]),
        a: range(1, 12),
        b: range(1, 12),
        c: range(1, 10),
        d: range(1, 4),
    };
    vec![pq, q, qp]
}

struct Powers {
    value: Vec<Poly>,
    sigma: Vec<Poly>,
}

impl Powers {
    fn new(prime: &Poly, exps: &[u32]) -> Powers {
        let max = exps.iter().copied().max().unwrap_or(0) as usize;
        let mut value = Vec::with_capacity(max + 1);
        let mut sigma = Vec::with_capacity(max + 1);
        for e in 0..=max as u32 {
            let pp = PrimePower::new(prime.clone(), e);
            value.push(pp.expand());
            sigma.push(sigma_bistar_prime_power(&pp));
        }
        Powers { value, sigma }
    }
}

/// Evaluates every candidate in `space` and reports the bi-unitary perfect ones.
pub fn run_space(space: &SearchSpace, expected: Vec<Poly>) -> SearchReport {
    let start = Instant::now();
    let x_pow = Powers::new(&Poly::x(), &space.a);
    let x1_pow = Powers::new(&Poly::x_plus_one(), &space.b);

    let mut hits: Vec<BupRecord> = space
        .prime_pool
        .iter()
        .flat_map(|primes| space.a.iter().map(move |&a| (primes, a)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|(primes, a)| {
            let p_pow = Powers::new(&primes[0], &space.c);
            let q = primes.get(1);
            let q_pow = q.map(|q| Powers::new(q, &space.d));
            let d_list: &[u32] = if q.is_some() { &space.d } else { &[0] };
            let mut found = Vec::new();
            for &b in &space.b {
                let lhs_ab = x_pow.value[a as usize].mul(&x1_pow.value[b as usize]);
                let rhs_ab = x_pow.sigma[a as usize].mul(&x1_pow.sigma[b as usize]);
                for &c in &space.c {
                    let lhs_abc = lhs_ab.mul(&p_pow.value[c as usize]);
                    let rhs_abc = rhs_ab.mul(&p_pow.sigma[c as usize]);
                    for &d in d_list {
                        let (lhs, rhs) = match &q_pow {
                            Some(qp) => {
                                (lhs_abc.mul(&qp.value[d as usize]), rhs_abc.mul(&qp.sigma[d as usize]))
                            }
                            None => (lhs_abc.clone(), rhs_abc.clone()),
                        };
                        if lhs != rhs {
                            continue;
                        }
                        let mut parts = vec![
                            PrimePower::new(Poly::x(), a),
                            PrimePower::new(Poly::x_plus_one(), b),
                            PrimePower::new(primes[0].clone(), c),
                        ];
                        if let Some(q) = q {
                            parts.push(PrimePower::new(q.clone(), d));
                        }
                        found.push(prime_power_record(parts).expect("candidate checked above"));
                    }
                }
            }
            found
        })
        .collect();
    hits.sort_by(|l, r| l.poly.cmp(&r.poly));
    hits.dedup_by(|l, r| l.poly == r.poly);

    let verdict = Verdict::compare(&hits, &expected);
    SearchReport {
        case_id: space.case_id,
        candidate_count: space.candidate_count(),
        space: SpaceDescription::Bounded(space.clone()),
        hits,
        elapsed: start.elapsed(),
        expected,
        verdict,
        subcases: Vec::new(),
    }
}

pub fn search_omega3() -> SearchReport {
    run_space(&omega3_space(), expected_closure(&["C1", "C2", "C3", "C4", "C5", "C6", "C7"]))
}

pub fn search_omega4_mersenne() -> SearchReport {
    run_space(&omega4_mersenne_space(), expected_closure(&["C8", "C9", "C10", "C11", "C12", "C13"]))
}

/// Runs the three non-Mersenne sub-cases; only the `Q = σ(P^(2m))` one has solutions.
pub fn search_omega4_nonmersenne() -> SearchReport {
    let start = Instant::now();
    let subcases: Vec<SearchReport> = omega4_nonmersenne_spaces()
        .iter()
        .map(|space| {
            let expected = match space.case_id {
                CaseId::Omega4NonMersenneQP => expected_closure(&["D1", "D2"]),
                _ => Vec::new(),
            };
            run_space(space, expected)
        })
        .collect();
    let mut hits: Vec<BupRecord> = subcases.iter().flat_map(|r| r.hits.iter().cloned()).collect();
    hits.sort_by(|l, r| l.poly.cmp(&r.poly));
    hits.dedup_by(|l, r| l.poly == r.poly);
    let expected = expected_closure(&["D1", "D2"]);
    let verdict = Verdict::compare(&hits, &expected);
    SearchReport {
        case_id: CaseId::Omega4NonMersenne,
        space: SpaceDescription::Union,
        candidate_count: subcases.iter().map(|r| r.candidate_count).sum(),
        hits,
        elapsed: start.elapsed(),
        expected,
        verdict,
        subcases,
    }
}
