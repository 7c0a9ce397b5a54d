//! JSON payloads for every CLI verb. The shapes here are described by
//! `docs/schema.json`; every payload carries a `verb` discriminator.

use serde::Serialize;

use crate::catalog::{ConstantKind, NamedConstant};
use crate::error::Error;
use crate::factor::Factorization;
use crate::mersenne::MersennePrime;
use crate::poly::Poly;
use crate::search::{BupRecord, CatalogCheck, SearchReport, SpaceDescription, VerificationReport};
use crate::sigma::sigma_bistar_oracle_capped;

#[derive(Debug, Clone, Serialize)]
pub struct PolyJson {
    pub poly_hex: String,
    pub poly: String,
    pub degree: Option<usize>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson { poly_hex: p.to_hex(), poly: p.to_sum_string(), degree: p.degree() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorJson {
    pub prime_hex: String,
    pub prime: String,
    pub exp: u32,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verb", rename_all = "lowercase")]
pub enum Payload {
    Factor { input: PolyJson, factored: String, factors: Vec<FactorJson> },
    Sigma { kind: &'static str, input: PolyJson, value: PolyJson, factored: String },
    Check { predicate: &'static str, input: PolyJson, result: bool },
    Mersenne { max_degree: u32, count: usize, primes: Vec<MersenneJson> },
    Catalog { entries: Vec<CatalogEntryJson> },
    Search(SearchReportJson),
    Verify(VerifyJson),
}

#[derive(Debug, Clone, Serialize)]
pub struct MersenneJson {
    pub poly_hex: String,
    pub poly: String,
    pub degree: usize,
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryJson {
    pub name: &'static str,
    pub kind: &'static str,
    pub poly_hex: String,
    pub poly: String,
    pub degree: usize,
    pub factored: String,
    pub symbolic: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct HitJson {
    pub poly_hex: String,
    pub poly: String,
    pub factored: String,
    pub degree: usize,
    pub omega: usize,
    pub label: Option<&'static str>,
    pub conjugate_label: Option<&'static str>,
    /// `"agree"`, `"disagree"`, or `"skipped"` when the divisor count is above the cap.
    pub oracle: &'static str,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpaceJson {
    Bounded { prime_pool: Vec<Vec<String>>, a: Vec<u32>, b: Vec<u32>, c: Vec<u32>, d: Vec<u32> },
    Blind { max_degree: usize, max_omega: usize, odd_primes: usize },
    Union,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReportJson {
    pub case_id: &'static str,
    pub space: SpaceJson,
    pub candidate_count: u64,
    pub elapsed_ms: f64,
    pub hits: Vec<HitJson>,
    pub expected_count: usize,
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
    pub verdict: &'static str,
    pub subcases: Vec<SearchReportJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogCheckJson {
    pub name: &'static str,
    pub bup: bool,
    pub conjugate_bup: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub catalog: Vec<CatalogCheckJson>,
    pub reports: Vec<SearchReportJson>,
    pub elapsed_ms: f64,
    pub verdict: &'static str,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn millis(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn factor_payload(f: &Factorization) -> Payload {
    Payload::Factor {
        input: f.source().into(),
        factored: f.to_string(),
        factors: f
            .factors()
            .iter()
            .map(|pp| FactorJson {
                prime_hex: pp.prime.to_hex(),
                prime: pp.prime.to_sum_string(),
                exp: pp.exp,
            })
            .collect(),
    }
}

pub fn sigma_payload(kind: &'static str, input: &Poly, value: &Poly, factored: &Factorization) -> Payload {
    Payload::Sigma { kind, input: input.into(), value: value.into(), factored: factored.to_string() }
}

pub fn check_payload(predicate: &'static str, input: &Poly, result: bool) -> Payload {
    Payload::Check { predicate, input: input.into(), result }
}

pub fn mersenne_payload(max_degree: u32, primes: &[MersennePrime]) -> Payload {
    Payload::Mersenne {
        max_degree,
        count: primes.len(),
        primes: primes
            .iter()
            .map(|m| MersenneJson {
                poly_hex: m.poly.to_hex(),
                poly: m.poly.to_sum_string(),
                degree: m.poly.degree().expect("nonconstant"),
                a: m.a,
                b: m.b,
            })
            .collect(),
    }
}

pub fn catalog_payload(entries: &[NamedConstant]) -> Payload {
    Payload::Catalog {
        entries: entries
            .iter()
            .map(|e| CatalogEntryJson {
                name: e.name,
                kind: match e.kind {
                    ConstantKind::MersennePrime => "mersenne_prime",
                    ConstantKind::Prime => "prime",
                    ConstantKind::Bup => "bup",
                },
                poly_hex: e.poly.to_hex(),
                poly: e.poly.to_sum_string(),
                degree: e.poly.degree().expect("nonconstant"),
                factored: e.factorization.to_string(),
                symbolic: e.symbolic.clone(),
            })
            .collect(),
    }
}

/// Compares a hit against the divisor-enumeration oracle.
pub fn oracle_status(hit: &BupRecord, divisor_cap: u64) -> &'static str {
    match sigma_bistar_oracle_capped(&hit.poly, divisor_cap) {
        Ok(v) if v == hit.poly => "agree",
        Ok(_) => "disagree",
        Err(Error::DivisorCapExceeded { .. }) => "skipped",
        Err(_) => "disagree",
    }
}

pub fn hit_json(hit: &BupRecord, divisor_cap: u64) -> HitJson {
    HitJson {
        poly_hex: hit.poly.to_hex(),
        poly: hit.poly.to_sum_string(),
        factored: hit.factorization.to_string(),
        degree: hit.degree,
        omega: hit.omega,
        label: hit.label,
        conjugate_label: hit.conjugate_label,
        oracle: oracle_status(hit, divisor_cap),
    }
}

pub fn search_report_json(report: &SearchReport, divisor_cap: u64) -> SearchReportJson {
    let hits: Vec<HitJson> = report.hits.iter().map(|h| hit_json(h, divisor_cap)).collect();
    let oracle_ok = hits.iter().all(|h| h.oracle != "disagree");
    SearchReportJson {
        case_id: report.case_id.as_str(),
        space: match &report.space {
            SpaceDescription::Bounded(s) => SpaceJson::Bounded {
                prime_pool: s
                    .prime_pool
                    .iter()
                    .map(|ps| ps.iter().map(Poly::to_sum_string).collect())
                    .collect(),
                a: s.a.clone(),
                b: s.b.clone(),
                c: s.c.clone(),
                d: s.d.clone(),
            },
            SpaceDescription::Blind { max_degree, max_omega, odd_primes } => {
                SpaceJson::Blind { max_degree: *max_degree, max_omega: *max_omega, odd_primes: *odd_primes }
            }
            SpaceDescription::Union => SpaceJson::Union,
        },
        candidate_count: report.candidate_count,
        elapsed_ms: millis(report.elapsed),
        hits,
        expected_count: report.expected.len(),
        missing: report.verdict.missing.iter().map(Poly::to_hex).collect(),
        unexpected: report.verdict.unexpected.iter().map(Poly::to_hex).collect(),
        verdict: verdict(report.passed() && oracle_ok),
        subcases: report.subcases.iter().map(|s| search_report_json(s, divisor_cap)).collect(),
    }
}

pub fn search_payload(report: &SearchReport, divisor_cap: u64) -> Payload {
    Payload::Search(search_report_json(report, divisor_cap))
}

fn catalog_check_json(c: &CatalogCheck) -> Vec<CatalogCheckJson> {
    c.entries
        .iter()
        .map(|&(name, bup, conjugate_bup)| CatalogCheckJson { name, bup, conjugate_bup })
        .collect()
}

pub fn verify_json(report: &VerificationReport, divisor_cap: u64) -> VerifyJson {
    let reports: Vec<SearchReportJson> =
        report.reports.iter().map(|r| search_report_json(r, divisor_cap)).collect();
    let pass = report.catalog.passed() && reports.iter().all(|r| r.verdict == "pass");
    VerifyJson {
        catalog: catalog_check_json(&report.catalog),
        reports,
        elapsed_ms: millis(report.elapsed),
        verdict: verdict(pass),
    }
}

pub fn verify_payload(report: &VerificationReport, divisor_cap: u64) -> Payload {
    Payload::Verify(verify_json(report, divisor_cap))
}

impl Payload {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("payloads serialize")
    }

    /// False only for a failing `search` or `verify` verdict.
    pub fn passed(&self) -> bool {
        match self {
            Payload::Search(r) => r.verdict == "pass",
            Payload::Verify(v) => v.verdict == "pass",
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::search_omega3;

    #[test]
    fn search_json_shape() {
        let r = search_omega3();
        let v: serde_json::Value = serde_json::from_str(&search_payload(&r, 1 << 16).to_json()).unwrap();
        assert_eq!(v["verb"], "search");
        assert_eq!(v["case_id"], "omega3");
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["hits"].as_array().unwrap().len(), 12);
        assert_eq!(v["space"]["kind"], "bounded");
        let c1 = v["hits"].as_array().unwrap().iter().find(|h| h["label"] == "C1").unwrap();
        assert_eq!(c1["degree"], 9);
        assert_eq!(c1["oracle"], "agree");
    }

    #[test]
    fn oracle_is_skipped_above_cap() {
        let r = BupRecord::from_poly(&"x^7*(x+1)^7".parse().unwrap()).unwrap();
        assert_eq!(oracle_status(&r, 4), "skipped");
        assert_eq!(oracle_status(&r, 1 << 10), "agree");
    }

    #[test]
    fn check_payload_is_tagged() {
        let v: serde_json::Value =
            serde_json::from_str(&check_payload("bup", &Poly::x(), false).to_json()).unwrap();
        assert_eq!(v["verb"], "check");
        assert_eq!(v["result"], false);
        assert_eq!(v["input"]["poly"], "x");
    }

    #[test]
    fn a_missing_expectation_fails_the_payload() {
        let mut r = search_omega3();
        r.expected.push(Poly::x().pow(5));
        r.verdict = crate::search::Verdict::compare(&r.hits, &r.expected);
        let payload = search_payload(&r, 1 << 16);
        assert!(!payload.passed());
        let v: serde_json::Value = serde_json::from_str(&payload.to_json()).unwrap();
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["missing"][0], "0x20");
    }
}
