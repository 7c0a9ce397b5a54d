use gf2bup::Poly;

#[path = "../examples/arithmetic.rs"]
mod arithmetic;
#[path = "../examples/blind_search.rs"]
mod blind_search;
#[path = "../examples/bounded_search.rs"]
mod bounded_search;
#[path = "../examples/catalog.rs"]
mod catalog;
#[path = "../examples/divisor_sums.rs"]
mod divisor_sums;
#[path = "../examples/factor.rs"]
mod factor;
#[path = "../examples/mersenne.rs"]
mod mersenne;
#[path = "../examples/verify.rs"]
mod verify;

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

#[test]
fn arithmetic_example_runs() {
    let lines = arithmetic::run_example("1+x^5+x^10").unwrap();
    assert!(lines.iter().any(|l| l == "hex       = 0x421"));
    assert!(lines.iter().any(|l| l.ends_with("rem 0")));
}

#[test]
fn factor_example_runs() {
    let (f, irreducible) = factor::run_example("1+x^5+x^10").unwrap();
    assert_eq!(f.to_string(), "(x^2+x+1)*(x^4+x+1)*(x^4+x^3+1)");
    assert_eq!(irreducible, vec![true; 3]);
}

#[test]
fn divisor_sums_example_runs() {
    let s = divisor_sums::run_example("x^3*(x+1)^4*(x^2+x+1)").unwrap();
    assert_eq!(s.bistar, p("x^3*(x+1)^4*(x^2+x+1)"));
    assert_eq!(s.oracle, s.bistar);
    // exponents 3 and 1 keep all their divisors; (x+1)^4 loses (x+1)^2
    assert_eq!(s.biunitary_divisors.len(), 4 * 4 * 2);
}

#[test]
fn mersenne_example_runs() {
    let primes = mersenne::run_example(4);
    assert_eq!(primes.len(), 5);
}

#[test]
fn catalog_example_runs() {
    let rows = catalog::run_example();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|&(_, bup, conj, ibup)| bup && conj && ibup));
}

#[test]
fn bounded_search_example_runs() {
    let reports = bounded_search::run_example();
    let counts: Vec<usize> = reports.iter().map(|r| r.hits.len()).collect();
    assert_eq!(counts, vec![12, 9, 4]);
    assert!(reports.iter().all(|r| r.passed()));
}

#[test]
fn blind_search_example_runs() {
    let report = blind_search::run_example(16, 3).unwrap();
    assert!(report.passed());
}

#[test]
fn verify_example_runs() {
    assert!(verify::run_example(false).passed());
}
